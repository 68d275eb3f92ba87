#pragma once

#include <array>
#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

// Angles (radians) of the three-parameter U(2) coin
//   [[ e^{i xi} cos theta,   e^{i zeta} sin theta ],
//    [ e^{-i zeta} sin theta, -e^{-i xi} cos theta ]].
struct CoinParams {
    double xi = 0.0;
    double theta = 0.0;
    double zeta = 0.0;

    bool operator==(const CoinParams&) const = default;
};

// Initial coin state cos(delta)|0> + e^{i eta} sin(delta)|1>.
struct InitialCoin {
    double delta = 0.0;
    double eta = 0.0;

    bool operator==(const InitialCoin&) const = default;

    // (|0> + i|1>)/sqrt(2): gives the left-right symmetric Hadamard walk.
    static InitialCoin symmetric();
    static InitialCoin basis0() { return {0.0, 0.0}; }
};

// Dense 2x2 complex matrix acting on the coin index.
class CoinMatrix {
public:
    CoinMatrix() = default;
    CoinMatrix(Complex m00, Complex m01, Complex m10, Complex m11)
        : m_{m00, m01, m10, m11} {}

    static CoinMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }

    const Complex& operator()(int row, int col) const { return m_[2 * row + col]; }
    Complex& operator()(int row, int col) { return m_[2 * row + col]; }

    CoinMatrix adjoint() const;
    CoinMatrix operator*(const CoinMatrix& rhs) const;

    // Largest entrywise modulus of (this - rhs).
    double max_abs_diff(const CoinMatrix& rhs) const;

    // max |U^dagger U - I|.
    double unitarity_defect() const;

private:
    std::array<Complex, 4> m_{};
};

// Throws ErrorKind::invalid_parameter on non-finite angles.
CoinMatrix build_coin(const CoinParams& params);

// The normalized 2-vector (cos delta, e^{i eta} sin delta).
std::array<Complex, 2> coin_vector(const InitialCoin& init);

}  // namespace qwalk
