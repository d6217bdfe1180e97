#pragma once

#include <Eigen/Dense>
#include <complex>

#include "abspec/abmodel.hpp"
#include "abspec/errors.hpp"

namespace abspec {

// Boundary-condition matrix Lambda = [[u, alpha*conj(w)], [(1-alpha)*w, v]]
// through its parameters; D Lambda = Lambda^* D holds by construction.
struct BoundaryCondition {
    double u = 0.0;
    double v = 0.0;
    std::complex<double> w{0.0, 0.0};
};

struct RescaledBC {
    double xi = 0.0;
    double eta = 0.0;
    double zeta = 0.0;  // sqrt(B/2)|w|, >= 0
};

struct ExtensionUnitary {
    Eigen::Matrix2cd U;
};

Eigen::Matrix2cd lambda_matrix(const BoundaryCondition& bc, double alpha);

// Decomposes a matrix satisfying D Lambda = Lambda^* D back into (u, v, w).
// Throws ConditioningError if the relation is violated beyond tol.
BoundaryCondition lambda_decompose(const Eigen::Matrix2cd& L, double alpha,
                                   double tol = 1e-10);

RescaledBC rescale(const BoundaryCondition& bc, const ModelParams& p);

// Canonical inverse of rescale: w taken real non-negative.
BoundaryCondition unrescale(const RescaledBC& rbc, const ModelParams& p);

struct NormConstants {
    double N_m1;  // m = -1
    double N_0;   // m = 0
};

// Deficiency-subspace normalization constants; throws ConditioningError if
// the Im[...] expression comes out non-positive.
NormConstants norm_constants(const ModelParams& p);

// Coefficients of the r^{-|m+alpha|} / r^{|m+alpha|} parts of g2_m(+-i; r)
// at the origin, for the critical sectors, plus det M_m.
struct DeficiencyCoeffs {
    std::complex<double> a_m1_plus, a_m1_minus, b_m1_plus, b_m1_minus;
    std::complex<double> a_0_plus, a_0_minus, b_0_plus, b_0_minus;
    std::complex<double> det_M_m1, det_M_0;
};

DeficiencyCoeffs deficiency_coeffs(const ModelParams& p);

// Diagonal Phi blocks built from the deficiency coefficients and N_m.
struct PhiBlocks {
    Eigen::Matrix2cd phi1_plus, phi1_minus, phi2_plus, phi2_minus;
};

PhiBlocks phi_blocks(const ModelParams& p);

// 4x4 block matrix [[Phi1+, Phi1-], [Phi2+, Phi2-]].
Eigen::Matrix4cd j_matrix(const ModelParams& p);

// Lambda = (Phi1+ + Phi1- U)(Phi2+ + Phi2- U)^{-1}.
// Throws ChartBoundaryError when the second factor is numerically singular.
BoundaryCondition lambda_from_unitary(const ExtensionUnitary& u, const ModelParams& p);

// U = V+ V-^{-1} with V+- = -+ i D (Phi2+- Lambda - Phi1+-).
ExtensionUnitary unitary_from_lambda(const BoundaryCondition& bc, const ModelParams& p);

// lambda-dependent boundary coefficients of the decaying solutions g2_m.
struct BoundaryCoeffs {
    double a_m1, b_m1, a_0, b_0;
};
struct BoundaryCoeffsC {
    std::complex<double> a_m1, b_m1, a_0, b_0;
};

BoundaryCoeffs boundary_coeffs(double lambda, const ModelParams& p);
BoundaryCoeffsC boundary_coeffs(std::complex<double> lambda, const ModelParams& p);

}  // namespace abspec
