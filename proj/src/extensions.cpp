#include "abspec/extensions.hpp"

#include <cmath>

#include "abspec/specfun.hpp"

namespace abspec {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
const std::complex<double> kI{0.0, 1.0};
}  // namespace

Eigen::Matrix2cd lambda_matrix(const BoundaryCondition& bc, double alpha) {
    Eigen::Matrix2cd L;
    L << bc.u, alpha * std::conj(bc.w), (1.0 - alpha) * bc.w, bc.v;
    return L;
}

BoundaryCondition lambda_decompose(const Eigen::Matrix2cd& L, double alpha,
                                   double tol) {
    Eigen::Matrix2d D;
    D << 1.0 - alpha, 0.0, 0.0, alpha;
    const double resid = (D * L - L.adjoint() * D).norm();
    const double scale = std::max(1.0, L.norm());
    if (resid > tol * scale)
        throw ConditioningError("lambda_decompose: D*Lambda != Lambda^**D, residual " +
                                std::to_string(resid));
    return {L(0, 0).real(), L(1, 1).real(), L(1, 0) / (1.0 - alpha)};
}

RescaledBC rescale(const BoundaryCondition& bc, const ModelParams& p) {
    const double b2 = 0.5 * p.B;
    const double xi = std::pow(b2, 1.0 - p.alpha) * std::tgamma(p.alpha) /
                      std::tgamma(2.0 - p.alpha) * bc.u;
    const double eta = std::pow(b2, p.alpha) * std::tgamma(1.0 - p.alpha) /
                       std::tgamma(1.0 + p.alpha) * bc.v;
    return {xi, eta, std::sqrt(b2) * std::abs(bc.w)};
}

BoundaryCondition unrescale(const RescaledBC& rbc, const ModelParams& p) {
    const double b2 = 0.5 * p.B;
    const double u = rbc.xi / (std::pow(b2, 1.0 - p.alpha) * std::tgamma(p.alpha) /
                               std::tgamma(2.0 - p.alpha));
    const double v = rbc.eta / (std::pow(b2, p.alpha) * std::tgamma(1.0 - p.alpha) /
                                std::tgamma(1.0 + p.alpha));
    return {u, v, rbc.zeta / std::sqrt(b2)};
}

NormConstants norm_constants(const ModelParams& p) {
    const double a = p.alpha;
    const std::complex<double> i2b = kI / (2.0 * p.B);
    const double im_m1 =
        (rgamma_complex(-0.5 + a + i2b) * rgamma_complex(0.5 - i2b)).imag();
    const double im_0 =
        (rgamma_complex(0.5 + i2b) * rgamma_complex(0.5 + a - i2b)).imag();
    if (im_m1 <= 0.0 || im_0 <= 0.0)
        throw ConditioningError("norm_constants: non-positive Im[...] expression");
    const double s = std::sqrt(std::sin(kPi * a) / (2.0 * kPi));
    return {std::pow(0.5 * p.B, 0.5 * (1.0 - a)) * s / std::sqrt(im_m1),
            std::pow(0.5 * p.B, 0.5 * a) * s / std::sqrt(im_0)};
}

DeficiencyCoeffs deficiency_coeffs(const ModelParams& p) {
    const double a = p.alpha;
    const std::complex<double> i2b = kI / (2.0 * p.B);
    DeficiencyCoeffs c;
    c.a_m1_plus = std::tgamma(1.0 - a) * rgamma_complex(0.5 - i2b) *
                  std::pow(0.5 * p.B, -1.0 + a);
    c.a_m1_minus = std::tgamma(1.0 - a) * rgamma_complex(0.5 + i2b) *
                   std::pow(0.5 * p.B, -1.0 + a);
    c.b_m1_plus = std::tgamma(-1.0 + a) * rgamma_complex(-0.5 + a - i2b);
    c.b_m1_minus = std::tgamma(-1.0 + a) * rgamma_complex(-0.5 + a + i2b);
    c.a_0_plus = std::tgamma(a) * rgamma_complex(0.5 + a - i2b) *
                 std::pow(0.5 * p.B, -a);
    c.a_0_minus = std::tgamma(a) * rgamma_complex(0.5 + a + i2b) *
                  std::pow(0.5 * p.B, -a);
    c.b_0_plus = std::tgamma(-a) * rgamma_complex(0.5 - i2b);
    c.b_0_minus = std::tgamma(-a) * rgamma_complex(0.5 + i2b);
    c.det_M_m1 = c.a_m1_plus * c.b_m1_minus - c.b_m1_plus * c.a_m1_minus;
    c.det_M_0 = c.a_0_plus * c.b_0_minus - c.b_0_plus * c.a_0_minus;
    return c;
}

PhiBlocks phi_blocks(const ModelParams& p) {
    const auto c = deficiency_coeffs(p);
    const auto n = norm_constants(p);
    PhiBlocks blk;
    blk.phi1_plus = Eigen::Matrix2cd::Zero();
    blk.phi1_minus = Eigen::Matrix2cd::Zero();
    blk.phi2_plus = Eigen::Matrix2cd::Zero();
    blk.phi2_minus = Eigen::Matrix2cd::Zero();
    blk.phi1_plus(0, 0) = n.N_m1 * c.a_m1_plus;
    blk.phi1_plus(1, 1) = n.N_0 * c.a_0_plus;
    blk.phi1_minus(0, 0) = n.N_m1 * c.a_m1_minus;
    blk.phi1_minus(1, 1) = n.N_0 * c.a_0_minus;
    blk.phi2_plus(0, 0) = n.N_m1 * c.b_m1_plus;
    blk.phi2_plus(1, 1) = n.N_0 * c.b_0_plus;
    blk.phi2_minus(0, 0) = n.N_m1 * c.b_m1_minus;
    blk.phi2_minus(1, 1) = n.N_0 * c.b_0_minus;
    return blk;
}

Eigen::Matrix4cd j_matrix(const ModelParams& p) {
    const auto blk = phi_blocks(p);
    Eigen::Matrix4cd J;
    J.block<2, 2>(0, 0) = blk.phi1_plus;
    J.block<2, 2>(0, 2) = blk.phi1_minus;
    J.block<2, 2>(2, 0) = blk.phi2_plus;
    J.block<2, 2>(2, 2) = blk.phi2_minus;
    return J;
}

BoundaryCondition lambda_from_unitary(const ExtensionUnitary& u,
                                      const ModelParams& p) {
    const auto blk = phi_blocks(p);
    const Eigen::Matrix2cd num = blk.phi1_plus + blk.phi1_minus * u.U;
    const Eigen::Matrix2cd den = blk.phi2_plus + blk.phi2_minus * u.U;
    const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(den);
    const double smin = svd.singularValues()(1);
    const double smax = svd.singularValues()(0);
    // den can cancel to roundoff noise; compare against its constituents
    const double scale =
        blk.phi2_plus.norm() + (blk.phi2_minus * u.U).norm();
    if (smin <= 1e-12 * scale || smax / smin > 1e12)
        throw ChartBoundaryError("lambda_from_unitary: extension outside the "
                                 "Lambda-chart (Phi2+ + Phi2- U singular)");
    const Eigen::Matrix2cd L = num * den.inverse();
    return lambda_decompose(L, p.alpha);
}

ExtensionUnitary unitary_from_lambda(const BoundaryCondition& bc,
                                     const ModelParams& p) {
    const auto blk = phi_blocks(p);
    const Eigen::Matrix2cd L = lambda_matrix(bc, p.alpha);
    Eigen::Matrix2cd D = Eigen::Matrix2cd::Zero();
    D(0, 0) = 1.0 - p.alpha;
    D(1, 1) = p.alpha;
    const Eigen::Matrix2cd v_minus = kI * D * (blk.phi2_minus * L - blk.phi1_minus);
    const Eigen::Matrix2cd v_plus = -kI * D * (blk.phi2_plus * L - blk.phi1_plus);
    const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(v_minus);
    if (svd.singularValues()(1) <= 1e-14 * svd.singularValues()(0))
        throw ConditioningError("unitary_from_lambda: V- numerically singular");
    ExtensionUnitary out{v_plus * v_minus.inverse()};
    const double unit_resid =
        (out.U.adjoint() * out.U - Eigen::Matrix2cd::Identity()).norm();
    if (unit_resid > 1e-10)
        throw ConditioningError("unitary_from_lambda: unitarity residual " +
                                std::to_string(unit_resid));
    return out;
}

BoundaryCoeffs boundary_coeffs(double lambda, const ModelParams& p) {
    const double a = p.alpha;
    const double l2b = lambda / (2.0 * p.B);
    return {std::tgamma(1.0 - a) * rgamma(0.5 - l2b) * std::pow(0.5 * p.B, -1.0 + a),
            std::tgamma(-1.0 + a) * rgamma(-0.5 + a - l2b),
            std::tgamma(a) * rgamma(0.5 + a - l2b) * std::pow(0.5 * p.B, -a),
            std::tgamma(-a) * rgamma(0.5 - l2b)};
}

BoundaryCoeffsC boundary_coeffs(std::complex<double> lambda, const ModelParams& p) {
    const double a = p.alpha;
    const std::complex<double> l2b = lambda / (2.0 * p.B);
    return {std::tgamma(1.0 - a) * rgamma_complex(0.5 - l2b) *
                std::pow(0.5 * p.B, -1.0 + a),
            std::tgamma(-1.0 + a) * rgamma_complex(-0.5 + a - l2b),
            std::tgamma(a) * rgamma_complex(0.5 + a - l2b) * std::pow(0.5 * p.B, -a),
            std::tgamma(-a) * rgamma_complex(0.5 - l2b)};
}

}  // namespace abspec
