#pragma once

#include <optional>
#include <vector>

#include "abspec/abmodel.hpp"
#include "abspec/errors.hpp"
#include "abspec/extensions.hpp"

namespace abspec {

struct SecularParams {
    RescaledBC rbc;
    double alpha;
};

enum class IntervalKind {
    top,          // ]1-alpha, +inf[
    upper_gap,    // ]0, 1-alpha[
    lower_gap_a,  // ]-alpha-m, -m[
    lower_gap_b   // ]-1-m, -alpha-m[
};

struct RootInterval {
    IntervalKind kind;
    int m;  // 0 for top/upper_gap
    double lo, hi;
    int predicted_count;
    int found_count = -1;
};

enum class RootOrigin { interior, endpoint };

struct Root {
    double z;
    double lambda;
    int multiplicity_hint = 1;
    RootOrigin origin = RootOrigin::interior;
    // Sector the root belongs to when the critical channels decouple
    // (zeta = 0): -1 or 0; empty when the sectors mix.
    std::optional<int> sector;
};

// F_alpha(z) = Gamma(z - 1 + alpha)/Gamma(z) through signed log-gamma.
// Exactly zero at z in -Z+, throws PoleError at z = 1 - alpha - m.
double f_ratio(double alpha, double z);

// Entire form of the secular function: every reciprocal gamma via rgamma.
double secular_eval(double z, const SecularParams& sp) noexcept;

// Factored form (F_alpha(z) + xi)(F_{1-alpha}(z+alpha) + eta) - zeta^2.
// Same roots as secular_eval away from the pole lattice; same sign wherever
// Gamma(z)Gamma(z+alpha-1) > 0 (in particular on the whole top interval).
double secular_factored(double z, const SecularParams& sp);

// Row lookup in the four localization tables.
int interval_root_count(IntervalKind kind, const SecularParams& sp);

// Interval partition between consecutive roots of the H^inf equation,
// covering [z_min, 1-alpha[; the top interval is prepended.
std::vector<RootInterval> build_intervals(const SecularParams& sp, double z_min);

struct RootSearchResult {
    std::vector<Root> roots;            // sorted by descending z (ascending lambda)
    std::vector<RootInterval> intervals;  // with found counts filled in
};

// All roots with z >= z_min plus every top-interval root. Interior roots are
// bracketed inside their localization interval and refined to ~1e-13;
// endpoint roots are appended exactly. Throws CountMismatchError if an
// interval disagrees with its table row after grid refinement.
RootSearchResult find_roots_detailed(const SecularParams& sp, const ModelParams& p,
                                     double z_min);
std::vector<Root> find_roots(const SecularParams& sp, const ModelParams& p,
                             double z_min);

// Roots of the H^inf secular equation: {-m} u {1-alpha-m}, z >= z_min.
std::vector<Root> hinf_roots(double alpha, double z_min, double B = 1.0);

// (xi, eta, zeta) / (xi*eta - zeta^2); throws SingularParamsError when the
// determinant vanishes.
RescaledBC invert_params(const RescaledBC& rbc);

enum class SeriesBranch { z1, z2 };

// Degree-4 perturbative root: branch z1 expands around -m in xi, branch z2
// around -alpha-m in eta, with the zeta^2 cross terms.
double series_root(SeriesBranch branch, int m, const SecularParams& sp);

}  // namespace abspec
