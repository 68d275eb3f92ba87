#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwalk/error.hpp"

namespace qwalk {

InitialCoin InitialCoin::symmetric() {
    return {std::numbers::pi / 4, std::numbers::pi / 2};
}

CoinMatrix CoinMatrix::adjoint() const {
    const auto& m = *this;
    return {std::conj(m(0, 0)), std::conj(m(1, 0)), std::conj(m(0, 1)), std::conj(m(1, 1))};
}

CoinMatrix CoinMatrix::operator*(const CoinMatrix& rhs) const {
    CoinMatrix out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out(r, c) = (*this)(r, 0) * rhs(0, c) + (*this)(r, 1) * rhs(1, c);
        }
    }
    return out;
}

double CoinMatrix::max_abs_diff(const CoinMatrix& rhs) const {
    double worst = 0.0;
    for (std::size_t k = 0; k < m_.size(); ++k) {
        worst = std::max(worst, std::abs(m_[k] - rhs.m_[k]));
    }
    return worst;
}

double CoinMatrix::unitarity_defect() const {
    return (adjoint() * *this).max_abs_diff(identity());
}

CoinMatrix build_coin(const CoinParams& p) {
    if (!std::isfinite(p.xi) || !std::isfinite(p.theta) || !std::isfinite(p.zeta)) {
        throw Error(ErrorKind::invalid_parameter, "coin angles must be finite");
    }
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    const Complex e_xi = std::polar(1.0, p.xi);
    const Complex e_zeta = std::polar(1.0, p.zeta);
    return {e_xi * c, e_zeta * s, std::conj(e_zeta) * s, -std::conj(e_xi) * c};
}

std::array<Complex, 2> coin_vector(const InitialCoin& init) {
    if (!std::isfinite(init.delta) || !std::isfinite(init.eta)) {
        throw Error(ErrorKind::invalid_parameter, "initial coin angles must be finite");
    }
    return {Complex(std::cos(init.delta), 0.0), std::polar(std::sin(init.delta), init.eta)};
}

}  // namespace qwalk
