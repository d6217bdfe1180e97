#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "abspec/extensions.hpp"
#include "abspec/secular.hpp"

namespace abspec {

enum class EvSource { stable_landau, stable_shifted, critical, critical_endpoint };

const char* to_string(EvSource s);

struct EigenvalueRecord {
    double lambda;
    std::optional<double> z;  // critical roots only
    std::vector<int> sectors;
    int multiplicity = 1;
    bool multiplicity_truncated = false;  // Landau enumeration capped at m_cap
    EvSource source = EvSource::critical;
};

// Merged, lambda-sorted spectrum of H^Lambda below lambda_max. Landau
// degeneracies are enumerated up to m_cap sectors and flagged as truncated.
std::vector<EigenvalueRecord> full_spectrum(const RescaledBC& rbc,
                                            const ModelParams& p, double lambda_max,
                                            int m_cap);
std::vector<EigenvalueRecord> full_spectrum(const BoundaryCondition& bc,
                                            const ModelParams& p, double lambda_max,
                                            int m_cap);

// The distinguished extension H^inf (outside the Lambda-chart).
std::vector<EigenvalueRecord> hinf_spectrum(const ModelParams& p, double lambda_max,
                                            int m_cap);

// Eigenvector (mu, nu) of the 2x2 boundary matrix at a critical root,
// normalized to |mu|^2 + |nu|^2 = 1. Two orthonormal vectors come back for a
// double root.
struct CriticalEigenfunction {
    std::complex<double> mu, nu;
    double lambda;
    double residual;  // ||A (mu,nu)^T||
};

std::vector<CriticalEigenfunction> critical_eigenfunction(const Root& root,
                                                          const BoundaryCondition& bc,
                                                          const ModelParams& p);

struct SweepSpec {
    std::array<double, 3> direction;  // (xi'', eta'', zeta'') per unit t
    double t_lo, t_hi;
    int n_steps;
    double lambda_lo, lambda_hi;
};

struct SweepBranch {
    int id;
    int sector = 99;                     // -1 / 0 when decoupled, 99 mixed
    std::vector<double> lambda;          // per t; NaN where absent
};

struct SweepTable {
    std::vector<double> t_values;
    std::vector<SweepBranch> branches;
    std::array<double, 3> direction;
    std::vector<double> stable_levels;   // constant AB levels inside the window
    std::vector<std::string> diagnostics;  // per-t failures, sweep continues
};

// Eigenvalue branches along the parameter line t -> t * direction.
// The per-t root searches run in parallel when `parallel` is set; output is
// identical to the serial reference in either mode.
SweepTable sweep(const SweepSpec& spec, const ModelParams& p, bool parallel = true);

}  // namespace abspec
