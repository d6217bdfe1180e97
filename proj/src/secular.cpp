#include "abspec/secular.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "abspec/specfun.hpp"

namespace abspec {

namespace {

constexpr double kExactTol = 1e-12;   // endpoint-rule tolerance on parameters
constexpr double kMergeTol = 1e-7;    // double-root merge distance
constexpr int kGridPerUnit = 64;
constexpr int kGridRetries = 3;

double lambda_of(double z, const ModelParams& p) { return p.B * (1.0 - 2.0 * z); }

// --- generic bracketed refinement: bisection then secant polish ------------

template <typename F>
double refine_root(F&& f, double lo, double hi, double flo, double fhi) {
    // bisection to near machine width
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    // secant polish inside the final bracket
    double a = lo, b = hi, fa = flo, fb = fhi;
    for (int it = 0; it < 8 && fb != fa; ++it) {
        const double c = b - fb * (b - a) / (fb - fa);
        if (!(c >= lo && c <= hi)) break;
        const double fc = f(c);
        a = b;
        fa = fb;
        b = c;
        fb = fc;
        if (fc == 0.0) break;
    }
    return std::abs(fb) <= std::abs(fa) ? b : a;
}

// Solve f_ratio-style strictly decreasing positive function = target on
// ]lo, inf[ by geometric bracket growth and log-offset bisection.
template <typename F>
double solve_decreasing(F&& f, double lo, double target) {
    double step = 0.5;
    double a = lo + 1e-13 * std::max(1.0, std::abs(lo));
    while (f(a) <= target) {
        // started past the crossing; move closer to the pole at lo
        a = lo + (a - lo) * 0.25;
        if (a - lo < 1e-300) throw ConditioningError("solve_decreasing: no bracket");
    }
    double b = a + step;
    while (f(b) > target) {
        a = b;
        step *= 2.0;
        b = a + step;
        if (b > 1e300) throw ConditioningError("solve_decreasing: crossing escaped");
    }
    // bisection in log(z - lo) keeps relative accuracy at any scale
    double la = std::log(a - lo), lb = std::log(b - lo);
    for (int it = 0; it < 120 && lb - la > 1e-15; ++it) {
        const double lm = 0.5 * (la + lb);
        if (f(lo + std::exp(lm)) > target)
            la = lm;
        else
            lb = lm;
    }
    return lo + std::exp(0.5 * (la + lb));
}

}  // namespace

double f_ratio(double alpha, double z) {
    // zeros of 1/Gamma(z) placed exactly
    if (z <= 0.0 && z == std::floor(z)) return 0.0;
    const double num_arg = z - 1.0 + alpha;
    if (num_arg <= 0.0 && num_arg == std::floor(num_arg))
        throw PoleError("f_ratio: pole at z = " + std::to_string(z));
    if (z > 1e8) {
        // Gamma(z+a)/Gamma(z) ~ z^a (1 + a(a-1)/(2z)), a = alpha-1
        const double a = alpha - 1.0;
        return std::pow(z, a) * (1.0 + a * (a - 1.0) / (2.0 * z));
    }
    if (z > 1.0) {
        // positive arguments: extended precision keeps the log difference
        // meaningful out to z ~ 1e8
        const long double d = ::lgammal((long double)num_arg) - ::lgammal((long double)z);
        return static_cast<double>(::expl(d));
    }
    const auto n = signed_log_gamma(num_arg);
    const auto d = signed_log_gamma(z);
    return n.sign * d.sign * std::exp(n.log_abs - d.log_abs);
}

double secular_eval(double z, const SecularParams& sp) noexcept {
    const double a = sp.alpha;
    const double rz = rgamma(z);
    const double rza = rgamma(z + a);
    const double rza1 = rgamma(z + a - 1.0);
    const double det = sp.rbc.xi * sp.rbc.eta - sp.rbc.zeta * sp.rbc.zeta;
    return rz * rza + sp.rbc.xi * rza1 * rza + sp.rbc.eta * rz * rz +
           det * rz * rza1;
}

double secular_factored(double z, const SecularParams& sp) {
    const double a = sp.alpha;
    return (f_ratio(a, z) + sp.rbc.xi) * (f_ratio(1.0 - a, z + a) + sp.rbc.eta) -
           sp.rbc.zeta * sp.rbc.zeta;
}

// zeta^2 - xi*eta with a machine-epsilon dead band: the table comparisons and
// the top-interval search must classify exact-boundary parameters the same
// way, and a discriminant below roundoff places the far root beyond double
// range anyway.
static double zeta_discriminant(const SecularParams& sp) {
    const double z2 = sp.rbc.zeta * sp.rbc.zeta;
    const double xe = sp.rbc.xi * sp.rbc.eta;
    const double d = z2 - xe;
    const double tol =
        64.0 * std::numeric_limits<double>::epsilon() *
        std::max({std::abs(z2), std::abs(xe), 1e-300});
    return std::abs(d) <= tol ? 0.0 : d;
}

int interval_root_count(IntervalKind kind, const SecularParams& sp) {
    const double xi = sp.rbc.xi, eta = sp.rbc.eta;
    const double d = zeta_discriminant(sp);
    const double g1a = std::tgamma(1.0 - sp.alpha);
    switch (kind) {
        case IntervalKind::top:
            if (xi >= 0.0) {
                if (eta >= 0.0) return d > 0.0 ? 1 : 0;
                if (eta > -g1a) return 1;
                return 0;
            }
            if (eta >= 0.0) return 1;
            if (eta > -g1a) return d >= 0.0 ? 1 : 2;
            return d >= 0.0 ? 0 : 1;
        case IntervalKind::upper_gap:
            if (xi <= 0.0) return eta >= -g1a ? 0 : 1;
            return eta >= -g1a ? 1 : 2;
        case IntervalKind::lower_gap_a:
            if (xi >= 0.0) return eta <= 0.0 ? 0 : 1;
            return eta <= 0.0 ? 1 : 2;
        case IntervalKind::lower_gap_b:
            if (xi <= 0.0) return eta >= 0.0 ? 0 : 1;
            return eta >= 0.0 ? 1 : 2;
    }
    return 0;
}

std::vector<RootInterval> build_intervals(const SecularParams& sp, double z_min) {
    const double a = sp.alpha;
    std::vector<RootInterval> out;
    out.push_back({IntervalKind::top, 0, 1.0 - a,
                   std::numeric_limits<double>::infinity(),
                   interval_root_count(IntervalKind::top, sp)});
    if (0.0 > z_min || 1.0 - a > z_min)
        out.push_back({IntervalKind::upper_gap, 0, 0.0, 1.0 - a,
                       interval_root_count(IntervalKind::upper_gap, sp)});
    for (int m = 0;; ++m) {
        const RootInterval ga{IntervalKind::lower_gap_a, m, -a - m,
                              static_cast<double>(-m),
                              interval_root_count(IntervalKind::lower_gap_a, sp)};
        if (ga.hi <= z_min) break;
        out.push_back(ga);
        const RootInterval gb{IntervalKind::lower_gap_b, m, -1.0 - m, -a - m,
                              interval_root_count(IntervalKind::lower_gap_b, sp)};
        if (gb.hi <= z_min) break;
        out.push_back(gb);
    }
    return out;
}

namespace {

// --- top interval: monotone-segment search on the factored form ------------

struct TopSearch {
    const SecularParams& sp;
    double fa(double z) const { return f_ratio(sp.alpha, z); }
    double ft(double z) const { return f_ratio(1.0 - sp.alpha, z + sp.alpha); }
    double factored(double z) const { return secular_factored(z, sp); }
};

// Monotone bisection in log(z - origin); pred(z) must flip exactly once from
// true to false between origin+exp(la) and origin+exp(lb).
template <typename Pred>
double log_offset_bisect(Pred&& pred, double origin, double la, double lb) {
    for (int it = 0; it < 160 && lb - la > 5e-16; ++it) {
        const double lm = 0.5 * (la + lb);
        if (pred(origin + std::exp(lm)))
            la = lm;
        else
            lb = lm;
    }
    return origin + std::exp(0.5 * (la + lb));
}

// The factored form on ]1-alpha, inf[ decomposes into at most three segments
// separated by the zero crossings of the two factors. The head segment (both
// factors positive) carries a strictly decreasing P from +inf, the tail
// segment (both negative) a strictly increasing P from -zeta^2; the mixed
// middle has P < 0. Each monotone segment holds at most one root.
std::vector<double> top_interval_roots(const SecularParams& sp) {
    const double a = sp.alpha;
    const double lo = 1.0 - a;
    const double xi = sp.rbc.xi, eta = sp.rbc.eta;
    const double z2 = sp.rbc.zeta * sp.rbc.zeta;
    const double g1a = std::tgamma(1.0 - a);
    TopSearch ts{sp};

    // AB-like case: the single extra root is exact
    if (std::abs(xi) <= kExactTol && std::abs(eta) <= kExactTol) {
        if (z2 > kExactTol * kExactTol) return {1.0 - a + 1.0 / z2};
        return {};
    }

    std::optional<double> zc1, zc2;
    if (xi < 0.0) zc1 = solve_decreasing([&](double z) { return ts.fa(z); }, lo, -xi);
    if (eta < 0.0 && eta > -g1a)
        zc2 = solve_decreasing([&](double z) { return ts.ft(z); }, lo, -eta);

    std::vector<double> roots;
    if (std::abs(sp.rbc.zeta) <= kExactTol) {
        // decoupled: roots are exactly the factor crossings
        if (zc1) roots.push_back(*zc1);
        if (zc2) roots.push_back(*zc2);
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    std::vector<double> cross;
    if (zc1) cross.push_back(*zc1);
    if (zc2) cross.push_back(*zc2);
    std::sort(cross.begin(), cross.end());

    const double disc = zeta_discriminant(sp);

    // head segment: exists whenever the second factor starts positive
    if (eta > -g1a) {
        bool bracketed = false;
        double hi_off = 0.0;  // offset of a point with P < 0
        if (!cross.empty()) {
            // P(first crossing) = -zeta^2 < 0; bisect up to just below it
            hi_off = (cross.front() - lo) * (1.0 - 1e-14);
            if (ts.factored(lo + hi_off) < 0.0)
                bracketed = true;
            else  // crossing so close that P is still positive: root is there
                roots.push_back(cross.front());
        } else if (disc > 0.0) {
            // limit at infinity is negative: grow until P < 0
            double b = lo + 1.0;
            while (ts.factored(b) > 0.0 && b < 1e290) b = lo + (b - lo) * 4.0;
            if (b < 1e290) {
                hi_off = b - lo;
                bracketed = true;
            }
        }
        if (bracketed) {
            double la = std::log(hi_off) - 2.0;
            while (ts.factored(lo + std::exp(la)) < 0.0 && la > -660.0) la -= 4.0;
            if (ts.factored(lo + std::exp(la)) > 0.0)
                roots.push_back(log_offset_bisect(
                    [&](double z) { return ts.factored(z) > 0.0; }, lo, la,
                    std::log(hi_off)));
        }
    }

    // tail segment: both factors negative beyond the last crossing
    const bool tail_exists = xi < 0.0 && eta < 0.0;
    if (tail_exists && disc < 0.0) {
        const double start = cross.back();  // zc1 always exists here
        double b = start + std::max(1.0, std::abs(start));
        while (ts.factored(b) < 0.0 && b < 1e290) b = start + (b - start) * 4.0;
        if (ts.factored(b) > 0.0) {
            double la = std::log(b - start) - 2.0;
            while (ts.factored(start + std::exp(la)) > 0.0 && la > -660.0) la -= 4.0;
            roots.push_back(log_offset_bisect(
                [&](double z) { return ts.factored(z) < 0.0; }, start, la,
                std::log(b - start)));
        }
    }

    std::sort(roots.begin(), roots.end());
    return roots;
}

// --- gap intervals: grid scan + bisection on the entire form ---------------

std::vector<double> gap_interval_roots(const RootInterval& iv, const SecularParams& sp) {
    const double width = iv.hi - iv.lo;
    const double margin = width * 1e-8;
    int npts = std::max(33, static_cast<int>(std::ceil(kGridPerUnit * width)) + 1);
    for (int attempt = 0;; ++attempt) {
        std::vector<double> roots;
        const double a = iv.lo + margin, b = iv.hi - margin;
        const double h = (b - a) / (npts - 1);
        double prev_z = a;
        double prev_f = secular_eval(a, sp);
        if (prev_f == 0.0) roots.push_back(a);
        for (int i = 1; i < npts; ++i) {
            const double z = (i == npts - 1) ? b : a + i * h;
            const double f = secular_eval(z, sp);
            if (f == 0.0) {
                roots.push_back(z);
            } else if ((f < 0.0) != (prev_f < 0.0) && prev_f != 0.0) {
                roots.push_back(refine_root(
                    [&](double x) { return secular_eval(x, sp); }, prev_z, z,
                    prev_f, f));
            }
            prev_z = z;
            prev_f = f;
        }
        if (static_cast<int>(roots.size()) == iv.predicted_count) return roots;
        if (attempt >= kGridRetries)
            throw CountMismatchError(
                "find_roots: interval ]" + std::to_string(iv.lo) + ", " +
                    std::to_string(iv.hi) + "[ found " +
                    std::to_string(roots.size()) + " roots, table predicts " +
                    std::to_string(iv.predicted_count),
                static_cast<int>(roots.size()), iv.predicted_count);
        npts = (npts - 1) * 4 + 1;
    }
}

std::optional<int> classify_sector(double z, const SecularParams& sp) {
    // meaningful only when the sectors decouple
    if (std::abs(sp.rbc.zeta) > kExactTol) return std::nullopt;
    const double a = sp.alpha;
    const double r1 = std::abs(rgamma(z) + sp.rbc.xi * rgamma(z + a - 1.0));
    const double r2 = std::abs(rgamma(z + a) + sp.rbc.eta * rgamma(z));
    return r1 <= r2 ? -1 : 0;
}

}  // namespace

RootSearchResult find_roots_detailed(const SecularParams& sp, const ModelParams& p,
                                     double z_min) {
    if (!(z_min < 1.0 - sp.alpha))
        throw std::invalid_argument("find_roots: z_min must be below 1-alpha");
    RootSearchResult res;
    res.intervals = build_intervals(sp, z_min);
    std::vector<Root> roots;
    for (auto& iv : res.intervals) {
        std::vector<double> zs = (iv.kind == IntervalKind::top)
                                     ? top_interval_roots(sp)
                                     : gap_interval_roots(iv, sp);
        iv.found_count = static_cast<int>(zs.size());
        if (iv.found_count != iv.predicted_count)
            throw CountMismatchError(
                "find_roots: top interval found " + std::to_string(zs.size()) +
                    " roots, table predicts " + std::to_string(iv.predicted_count),
                iv.found_count, iv.predicted_count);
        for (double z : zs)
            roots.push_back({z, lambda_of(z, p), 1, RootOrigin::interior,
                             classify_sector(z, sp)});
    }
    // endpoint roots
    const double a = sp.alpha;
    if (std::abs(sp.rbc.xi) <= kExactTol) {
        for (int m = 0; static_cast<double>(-m) >= z_min; ++m)
            roots.push_back({static_cast<double>(-m), lambda_of(-m, p), 1,
                             RootOrigin::endpoint, -1});
    }
    if (std::abs(sp.rbc.eta) <= kExactTol) {
        for (int m = 0; -a - m >= z_min; ++m)
            roots.push_back({-a - m, lambda_of(-a - m, p), 1, RootOrigin::endpoint, 0});
    }
    if (std::abs(sp.rbc.eta + std::tgamma(1.0 - a)) <= kExactTol) {
        roots.push_back({1.0 - a, lambda_of(1.0 - a, p), 1, RootOrigin::endpoint,
                         classify_sector(1.0 - a, sp)});
    }
    // filter to z >= z_min, sort by descending z (ascending lambda)
    std::erase_if(roots, [&](const Root& r) { return r.z < z_min; });
    std::sort(roots.begin(), roots.end(),
              [](const Root& x, const Root& y) { return x.z > y.z; });
    // near-coincident pairs become one root with multiplicity 2
    std::vector<Root> merged;
    for (const auto& r : roots) {
        if (!merged.empty() && std::abs(merged.back().z - r.z) <= kMergeTol) {
            merged.back().multiplicity_hint += 1;
            if (merged.back().sector != r.sector) merged.back().sector.reset();
        } else {
            merged.push_back(r);
        }
    }
    res.roots = std::move(merged);
    return res;
}

std::vector<Root> find_roots(const SecularParams& sp, const ModelParams& p,
                             double z_min) {
    return find_roots_detailed(sp, p, z_min).roots;
}

std::vector<Root> hinf_roots(double alpha, double z_min, double B) {
    const ModelParams p{alpha, B};
    std::vector<Root> out;
    for (int m = 0; static_cast<double>(-m) >= z_min; ++m)
        out.push_back({static_cast<double>(-m), lambda_of(-m, p), 1,
                       RootOrigin::endpoint, -1});
    for (int m = 0; 1.0 - alpha - m >= z_min; ++m)
        out.push_back({1.0 - alpha - m, lambda_of(1.0 - alpha - m, p), 1,
                       RootOrigin::endpoint, 0});
    std::sort(out.begin(), out.end(),
              [](const Root& x, const Root& y) { return x.z > y.z; });
    return out;
}

RescaledBC invert_params(const RescaledBC& rbc) {
    const double det = rbc.xi * rbc.eta - rbc.zeta * rbc.zeta;
    if (std::abs(det) <= 1e-13)
        throw SingularParamsError("invert_params: xi*eta - zeta^2 vanishes");
    return {rbc.xi / det, rbc.eta / det, rbc.zeta / det};
}

double series_root(SeriesBranch branch, int m, const SecularParams& sp) {
    const double a = sp.alpha;
    const double zeta2 = sp.rbc.zeta * sp.rbc.zeta;
    double z0, arg, p_small, d;
    if (branch == SeriesBranch::z1) {
        z0 = -m;
        arg = -1.0 - m + a;
        p_small = sp.rbc.xi;
        d = arg;  // = -(1 + m - alpha)
    } else {
        z0 = -a - m;
        arg = -m - a;
        p_small = sp.rbc.eta;
        d = -(m + 1.0);
    }
    double hsum1 = 0.0, hsum2 = 0.0, hsum3 = 0.0;
    for (int j = 1; j <= m; ++j) {
        hsum1 += 1.0 / j;
        hsum2 += 1.0 / (static_cast<double>(j) * j);
        hsum3 += 1.0 / (static_cast<double>(j) * j * j);
    }
    const double h0 = hsum1 - kEulerGamma - polygamma(0, arg);
    const double h1 = kPiSquaredOver6 + hsum2 - polygamma(1, arg);
    const double h2 = -2.0 * kZeta3 + 2.0 * hsum3 - polygamma(2, arg);
    double fact = 1.0;
    for (int j = 2; j <= m; ++j) fact *= j;
    const double yh = (m % 2 == 0 ? -1.0 : 1.0) * p_small / (fact * std::tgamma(arg));
    const double yh2_mag = (p_small * p_small) /
                           (fact * fact * std::tgamma(arg) * std::tgamma(arg));
    return z0 + yh + h0 * yh * yh + 0.5 * (3.0 * h0 * h0 + h1) * yh * yh * yh +
           (16.0 * h0 * h0 * h0 + 12.0 * h0 * h1 + h2) / 6.0 * yh * yh * yh * yh +
           d * yh * zeta2 + (1.0 + 2.0 * d * h0) * yh2_mag * zeta2;
}

}  // namespace abspec
