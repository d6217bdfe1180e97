#pragma once

#include <complex>
#include <utility>

#include "abspec/errors.hpp"

namespace abspec {

// Physical configuration: flux fraction alpha in ]0,1[, field strength B > 0.
struct ModelParams {
    double alpha;
    double B;
};

// Throws std::invalid_argument unless 0 < alpha < 1 and B > 0.
void validate(const ModelParams& p);

struct SectorIndex {
    int m;
};

struct RadialPoint {
    double r;  // > 0
    double theta;
};

struct BetaGamma {
    double beta;
    double gamma;
};

// beta(m, lambda) = (1 + m + alpha + |m+alpha| - lambda/B)/2, gamma(m) = 1 + |m+alpha|.
BetaGamma beta_index(SectorIndex m, double lambda, const ModelParams& p);
std::complex<double> beta_index_complex(SectorIndex m, std::complex<double> lambda,
                                        const ModelParams& p);

// The two radial solutions g1 (regular, Kummer) and g2 (singular, Tricomi)
// at radius r. The complex-lambda overload keeps z real and promotes only
// the Kummer/Tricomi parameter beta.
std::pair<double, double> radial_solutions(SectorIndex m, double lambda,
                                           const ModelParams& p, double r);
std::pair<std::complex<double>, std::complex<double>> radial_solutions(
    SectorIndex m, std::complex<double> lambda, const ModelParams& p, double r);

// lambda_{m,n} = B(m + alpha + |m+alpha| + 2n + 1)
double ab_eigenvalue(SectorIndex m, int n, const ModelParams& p);

// Normalized eigenfunction f_{m,n}(r, theta).
std::complex<double> ab_eigenfunction(SectorIndex m, int n, const ModelParams& p,
                                      const RadialPoint& x);

// Sector Green function as a partial sum of n_terms Laguerre products.
// Throws NearEigenvalueError when z is within 1e-8 of a sector eigenvalue.
std::complex<double> green_series(SectorIndex m, std::complex<double> z, double r1,
                                  double r2, const ModelParams& p, int n_terms);

// Sector Green function in closed form, prefactor * Gamma(-w)/Gamma(sigma+1)
// * F(-w, sigma+1, u_<) * G(-w, sigma+1, u_>) with u = B r^2/2.
std::complex<double> green_closed(SectorIndex m, std::complex<double> z, double r1,
                                  double r2, const ModelParams& p);

}  // namespace abspec
