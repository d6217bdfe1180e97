#include "abspec/abmodel.hpp"

#include <cmath>
#include <string>

#include "abspec/specfun.hpp"

namespace abspec {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

void validate(const ModelParams& p) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
        throw std::invalid_argument("ModelParams: alpha must lie in ]0,1[");
    if (!(p.B > 0.0)) throw std::invalid_argument("ModelParams: B must be positive");
}

BetaGamma beta_index(SectorIndex m, double lambda, const ModelParams& p) {
    const double ma = m.m + p.alpha;
    return {0.5 * (1.0 + ma + std::abs(ma) - lambda / p.B), 1.0 + std::abs(ma)};
}

std::complex<double> beta_index_complex(SectorIndex m, std::complex<double> lambda,
                                        const ModelParams& p) {
    const double ma = m.m + p.alpha;
    return 0.5 * (1.0 + ma + std::abs(ma) - lambda / p.B);
}

std::pair<double, double> radial_solutions(SectorIndex m, double lambda,
                                           const ModelParams& p, double r) {
    const auto [beta, gamma] = beta_index(m, lambda, p);
    const double sigma = gamma - 1.0;
    const double u = 0.5 * p.B * r * r;
    const double envelope = std::pow(r, sigma) * std::exp(-0.25 * p.B * r * r);
    return {envelope * kummer_f(beta, gamma, u), envelope * tricomi_g(beta, gamma, u)};
}

std::pair<std::complex<double>, std::complex<double>> radial_solutions(
    SectorIndex m, std::complex<double> lambda, const ModelParams& p, double r) {
    const std::complex<double> beta = beta_index_complex(m, lambda, p);
    const double gamma = 1.0 + std::abs(m.m + p.alpha);
    const double u = 0.5 * p.B * r * r;
    const double envelope =
        std::pow(r, gamma - 1.0) * std::exp(-0.25 * p.B * r * r);
    return {envelope * kummer_f(beta, gamma, u), envelope * tricomi_g(beta, gamma, u)};
}

double ab_eigenvalue(SectorIndex m, int n, const ModelParams& p) {
    const double ma = m.m + p.alpha;
    return p.B * (ma + std::abs(ma) + 2.0 * n + 1.0);
}

std::complex<double> ab_eigenfunction(SectorIndex m, int n, const ModelParams& p,
                                      const RadialPoint& x) {
    const double sigma = std::abs(m.m + p.alpha);
    // n! / Gamma(n + sigma + 1) through logs
    const double ratio = std::exp(std::lgamma(n + 1.0) - std::lgamma(n + sigma + 1.0));
    const double c =
        std::pow(0.5 * p.B, 0.5 * (sigma + 1.0)) * std::sqrt(ratio / kPi);
    const double radial = c * std::pow(x.r, sigma) *
                          laguerre(n, sigma, 0.5 * p.B * x.r * x.r) *
                          std::exp(-0.25 * p.B * x.r * x.r);
    return radial * std::exp(std::complex<double>(0.0, m.m * x.theta));
}

std::complex<double> green_series(SectorIndex m, std::complex<double> z, double r1,
                                  double r2, const ModelParams& p, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("green_series: n_terms must be >= 1");
    const double sigma = std::abs(m.m + p.alpha);
    const double base = ab_eigenvalue(m, 0, p);
    // distance to the nearest sector eigenvalue base + 2Bn
    const double k = std::round((z.real() - base) / (2.0 * p.B));
    const double nearest = base + 2.0 * p.B * std::max(k, 0.0);
    if (std::abs(z - nearest) < 1e-8)
        throw NearEigenvalueError("green_series: z within 1e-8 of eigenvalue " +
                                  std::to_string(nearest));
    const double y1 = 0.5 * p.B * r1 * r1;
    const double y2 = 0.5 * p.B * r2 * r2;
    const double pref = 2.0 * std::pow(0.5 * p.B, sigma + 1.0) *
                        std::pow(r1 * r2, sigma) *
                        std::exp(-0.25 * p.B * (r1 * r1 + r2 * r2));
    // running Laguerre recurrences and n!/Gamma(n+sigma+1) ratio
    double l1_prev = 0.0, l1 = 1.0, l2_prev = 0.0, l2 = 1.0;
    double ratio = std::exp(-std::lgamma(sigma + 1.0));
    std::complex<double> sum = 0.0;
    for (int n = 0; n < n_terms; ++n) {
        sum += ratio * (l1 * l2) / (base + 2.0 * p.B * n - z);
        const double l1_next =
            ((2.0 * n + 1.0 + sigma - y1) * l1 - (n + sigma) * l1_prev) / (n + 1.0);
        const double l2_next =
            ((2.0 * n + 1.0 + sigma - y2) * l2 - (n + sigma) * l2_prev) / (n + 1.0);
        l1_prev = l1;
        l1 = l1_next;
        l2_prev = l2;
        l2 = l2_next;
        ratio *= (n + 1.0) / (n + sigma + 1.0);
    }
    return pref * sum;
}

std::complex<double> green_closed(SectorIndex m, std::complex<double> z, double r1,
                                  double r2, const ModelParams& p) {
    const double sigma = std::abs(m.m + p.alpha);
    const double ma = m.m + p.alpha;
    const std::complex<double> w =
        z / (2.0 * p.B) - 0.5 * (ma + std::abs(ma) + 1.0);
    if (std::abs(w.imag()) < 1e-10) {
        const double k = std::round(w.real());
        if (k >= 0.0 && std::abs(w.real() - k) < 1e-10)
            throw NearEigenvalueError("green_closed: Gamma(-w) pole, w near " +
                                      std::to_string(k));
    }
    const double u1 = 0.5 * p.B * r1 * r1;
    const double u2 = 0.5 * p.B * r2 * r2;
    const double ul = std::min(u1, u2);
    const double ug = std::max(u1, u2);
    // The 1/B makes the closed form agree with the eigenfunction series for
    // every B, not just B = 1; checked against the series oracle.
    const std::complex<double> pref =
        (1.0 / p.B) * std::pow(0.5 * p.B, sigma + 1.0) * std::pow(r1 * r2, sigma) *
        std::exp(-0.25 * p.B * (r1 * r1 + r2 * r2));
    return pref * gamma_complex(-w) * rgamma(sigma + 1.0) *
           kummer_f(-w, sigma + 1.0, ul) * tricomi_g(-w, sigma + 1.0, ug);
}

}  // namespace abspec
