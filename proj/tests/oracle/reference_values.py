"""Independent dense-numpy reference for the frozen values in the C++ tests.

Shares no code with the library: the walk uses np.roll on a padded array,
the coin entropy uses numpy's Hermitian eigensolver, and the lattice purity
is evaluated by explicit enumeration of the 2^M occupation patterns.

    python3 tests/oracle/reference_values.py
"""
import itertools

import numpy as np

PI = np.pi


def coin(xi, theta, zeta):
    return np.array([
        [np.exp(1j * xi) * np.cos(theta), np.exp(1j * zeta) * np.sin(theta)],
        [np.exp(-1j * zeta) * np.sin(theta), -np.exp(-1j * xi) * np.cos(theta)],
    ])


def walk(c, delta, eta, steps, site=0, size=None, cycle=None):
    n = cycle if cycle else (size or 2 * (steps + abs(site)) + 3)
    off = 0 if cycle else n // 2
    psi = np.zeros((n, 2), complex)
    psi[(site + off) % n] = [np.cos(delta), np.exp(1j * eta) * np.sin(delta)]
    out = [psi.copy()]
    for _ in range(steps):
        psi = psi @ c.T
        nxt = np.zeros_like(psi)
        nxt[:, 0] = np.roll(psi[:, 0], -1)
        nxt[:, 1] = np.roll(psi[:, 1], 1)
        psi = nxt
        out.append(psi.copy())
    return out, off


def coin_entropy(psi):
    w = np.linalg.eigvalsh(psi.T @ psi.conj())
    w = w[w > 1e-15]
    return float(-(w * np.log2(w)).sum())


def purity_enumerated(a):
    total = 0.0
    for pattern in itertools.product([0, 1], repeat=len(a)):
        p = 1.0
        for ai, li in zip(a, pattern):
            p *= ai if li else 1 - ai
        total += p * p
    return total


def mw_trace(m, steps, theta=PI / 4, delta=PI / 4, eta=PI / 2, b=0, cycle=False):
    lo = -(m - 1) // 2 if m % 2 else -m // 2 + 1
    sites = range(lo, lo + m)
    size = 2 * (steps + m) + 5
    c = coin(0, theta, 0)
    walks = [walk(c, delta, eta, steps, s, size, m if cycle else None)[0] for s in sites]
    values = []
    for t in range(steps + 1):
        n = m if cycle else size
        window = m if cycle else 2 * t + m + 1
        cols = []
        for w in walks:
            a = np.abs(w[t][:, b]) ** 2
            cols.append(a / a.sum())
        cols = np.array(cols)
        pur = sum(purity_enumerated(cols[:, j]) if m <= 12 else
                  np.prod(cols[:, j] ** 2 + (1 - cols[:, j]) ** 2) for j in range(n))
        s = pur - (n - window)
        values.append(2 ** m / (2 ** m - 1) * (1 - s / window))
    return values


def distribution(xi, theta, zeta, steps, delta=PI / 4, eta=PI / 2):
    out, off = walk(coin(xi, theta, zeta), delta, eta, steps)
    p = (np.abs(out[-1]) ** 2).sum(1)
    j = np.arange(len(p)) - off
    mean = (j * p).sum()
    var = (j * j * p).sum() - mean ** 2
    defect = max(abs(p[off + k] - p[off - k]) for k in range(off + 1))
    return mean, var, defect


def main():
    for th in (PI / 12, PI / 4, 5 * PI / 12):
        _, var, _ = distribution(0, th, 0, 100)
        print(f"variance/t^2 theta={th:.6f}: {var / 1e4:.15g}")
    for name, args in (("fig2a", (PI / 6, PI / 6, 0)), ("fig2b", (0, PI / 6, PI / 6))):
        mean, _, defect = distribution(*args, 100)
        print(f"{name}: mean={mean:.15g} defect={defect:.15g}")
    for th in (PI / 12, PI / 4, 5 * PI / 12):
        for d, e in ((PI / 4, PI / 2), (2 * PI / 9, PI / 6)):
            out, _ = walk(coin(0, th, 0), d, e, 100)
            ec = [coin_entropy(x) for x in out]
            win = ec[80:101]
            print(f"Ec theta={th:.6f} delta={d:.6f}: avg={np.mean(win):.15g} "
                  f"swing={max(win) - min(win):.15g}")
    out, _ = walk(coin(0, PI / 4, 0), PI / 4, PI / 2, 1000)
    ec = [coin_entropy(x) for x in out]
    print(f"Ec asymptote [400,500]={np.mean(ec[400:501]):.15g} [800,1000]={np.mean(ec[800:1001]):.15g}")
    print("MW M=1 t=2:", mw_trace(1, 2)[2])
    print("MW M=3 t=1..4:", mw_trace(3, 4)[1:])
    tr = mw_trace(12, 40)
    print(f"MW M=12 line: peak={max(tr):.15g} at t={int(np.argmax(tr))} t40={tr[40]:.15g}")
    thetas = (PI / 12, PI / 6, PI / 4, PI / 3, 5 * PI / 12)
    print("sweep M=10 t=10 sym:", [mw_trace(10, 10, theta=th)[10] for th in thetas])
    print("sweep M=10 t=10 |0>:", [mw_trace(10, 10, theta=th, delta=0, eta=0)[10] for th in thetas])
    cyc = np.array(mw_trace(10, 100, cycle=True))
    mean = cyc[50:].mean()
    print(f"cycle n=10: mean[50,100]={mean:.15g} min/mean={cyc[10:].min() / mean:.15g} "
          f"argmin={10 + int(np.argmin(cyc[10:]))} max/mean={cyc[10:].max() / mean:.15g}")


if __name__ == "__main__":
    main()
