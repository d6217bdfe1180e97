#pragma once

#include <complex>

#include "abspec/errors.hpp"

namespace abspec {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;
inline constexpr double kZeta3 = 1.2020569031595942853997382;
inline constexpr double kPiSquaredOver6 = 1.6449340668482264364724152;

// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
    double log_abs;
    int sign;  // -1 or +1
};

// Throws PoleError at non-positive integers.
SignedLogGamma signed_log_gamma(double x);

// sin(pi*x) with exact argument reduction.
double sin_pi(double x) noexcept;

// 1/Gamma(x). Entire: returns exactly 0 at x in {0,-1,-2,...}.
double rgamma(double x) noexcept;

// Gamma(z) by Lanczos approximation, reflection for Re z < 1/2.
// Throws PoleError at non-positive real integers.
std::complex<double> gamma_complex(std::complex<double> z);

// 1/Gamma(z); zero at the poles instead of throwing.
std::complex<double> rgamma_complex(std::complex<double> z) noexcept;

// psi, psi', psi'' for k = 0, 1, 2. Throws PoleError at non-positive integers.
double polygamma(int k, double x);

// Kummer confluent hypergeometric F(beta, gamma, z), z >= 0, by direct series.
// Terminates exactly for beta in -Z+. Throws ConvergenceError past 10000 terms.
double kummer_f(double beta, double gamma, double z);
std::complex<double> kummer_f(std::complex<double> beta, double gamma, double z);

// Tricomi function G(beta, gamma, z), z > 0, gamma non-integer.
// Assembled from two Kummer series for small z, asymptotic series for large z.
// 1/Gamma prefactors go through rgamma, so beta in -Z+ degenerates smoothly.
double tricomi_g(double beta, double gamma, double z);
std::complex<double> tricomi_g(std::complex<double> beta, double gamma, double z);

// Generalized Laguerre polynomial L_n^sigma(z) by the three-term recurrence.
double laguerre(int n, double sigma, double z) noexcept;

}  // namespace abspec
