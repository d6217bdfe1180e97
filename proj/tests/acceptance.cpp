// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerance in code.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "abspec/checks.hpp"
#include "abspec/extensions.hpp"
#include "abspec/secular.hpp"
#include "abspec/specfun.hpp"
#include "abspec/spectrum.hpp"

using namespace abspec;

namespace {

int g_failures = 0;

void report(int idx, const std::string& what, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", idx,
                what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

bool all_pass(const std::vector<CheckResult>& rs, std::string& detail) {
    double worst = 0.0;
    bool ok = true;
    for (const auto& r : rs) {
        ok = ok && r.pass;
        worst = std::max(worst, r.threshold > 0.0 ? r.measured / r.threshold : r.measured);
        if (!r.pass && detail.empty()) detail = r.name + ": " + r.detail;
    }
    if (ok) detail = "worst measured/tol = " + std::to_string(worst);
    return ok;
}

// 1. closed-form root sets at (0,0,0) and (0,0,zeta)
void criterion_1() {
    double worst = 0.0;
    bool ok = true;
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const ModelParams p{alpha, 1.0};
        const auto base = find_roots({{0.0, 0.0, 0.0}, alpha}, p, -11.0);
        for (int m = 0; m <= 10; ++m) {
            double b1 = 1e300, b2 = 1e300;
            for (const auto& r : base) {
                b1 = std::min(b1, std::abs(r.z + m));
                b2 = std::min(b2, std::abs(r.z + alpha + m));
            }
            worst = std::max({worst, b1, b2});
        }
        // nothing outside the two lattices
        for (const auto& r : base) {
            const double d1 = std::abs(r.z - std::round(r.z));
            const double d2 = std::abs(r.z + alpha - std::round(r.z + alpha));
            worst = std::max(worst, std::min(d1, d2));
        }
        for (double zeta : {0.5, 1.0, 2.0}) {
            const auto rs = find_roots({{0.0, 0.0, zeta}, alpha}, p, -11.0);
            ok = ok && rs.size() == base.size() + 1;
            const double extra = 1.0 - alpha + 1.0 / (zeta * zeta);
            double best = 1e300;
            for (const auto& r : rs) best = std::min(best, std::abs(r.z - extra));
            worst = std::max(worst, best);
        }
    }
    ok = ok && worst <= 1e-10;
    report(1, "closed-form root sets over alpha grid, |dz| <= 1e-10", ok,
           "worst |dz| = " + std::to_string(worst));
}

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok;
    {
        const auto rs = check_tables({0.3, 1.0});
        int rows = 0, bad = 0;
        for (const auto& r : rs) {
            ++rows;
            if (!r.pass) {
                ++bad;
                if (detail.empty()) detail = r.name + ": " + r.detail;
            }
        }
        ok = bad == 0 && rows == 21;
        if (ok) detail = "21 rows x 27 samples, zero mismatches";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < 60.0;
    report(2, "localization tables down to z = -10.5", ok,
           detail + ", runtime " + std::to_string(secs) + " s");
}

void criterion_3() {
    std::string detail;
    const bool ok = all_pass(check_series({0.3, 1.0}), detail);
    report(3, "degree-4 series error ratio in [16,64] when halving the scale", ok,
           detail);
}

void criterion_4() {
    std::string detail;
    const bool ok = all_pass(check_green({0.3, 1.0}), detail);
    report(4, "Laguerre sum (2000 terms) vs closed F*G form, rel 1e-6", ok, detail);
}

void criterion_5() {
    std::string detail;
    const bool ok = all_pass(check_unitary({0.3, 1.0}), detail);
    report(5, "extension algebra: round trips, J identity, det M, N_m", ok, detail);
}

void criterion_6() {
    std::string detail;
    const bool ok = all_pass(check_gaps({0.3, 1.0}), detail);
    report(6, "gap bound: <= 2 critical eigenvalues per H^inf gap", ok, detail);
}

void criterion_7() {
    const ModelParams p{0.3, 1.0};
    const auto recs = full_spectrum(BoundaryCondition{}, p, 10.0, 8);
    const double want[] = {1.0, 1.6, 3.0, 3.6, 5.0, 5.6, 7.0, 7.6, 9.0, 9.6};
    bool ok = recs.size() == 10;
    double worst = 0.0;
    if (ok)
        for (int i = 0; i < 10; ++i)
            worst = std::max(worst, std::abs(recs[i].lambda - want[i]));
    ok = ok && worst <= 1e-9;
    // multiplicity of B(2 alpha + 2k + 1) equals k + 1
    for (int k = 0; k <= 4 && ok; ++k) {
        const double lam = 1.6 + 2.0 * k;
        bool found = false;
        for (const auto& r : recs)
            if (std::abs(r.lambda - lam) < 1e-9) {
                found = true;
                ok = ok && r.multiplicity == k + 1;
            }
        ok = ok && found;
    }
    report(7, "standard AB spectrum for alpha=0.3, B=1, lambda <= 10", ok,
           "levels and shifted multiplicities k+1");
}

void criterion_8() {
    const ModelParams p{0.3, 1.0};
    bool ok = true;
    std::string detail;
    // (a) t = 0 anchors at the AB critical values for both figure lines
    for (const auto dir :
         {std::array<double, 3>{0.95, 0.25, 0.25}, {0.95, -0.25, 0.0}}) {
        SweepSpec spec{dir, -5.0, 5.0, 201, -3.0, 9.0};
        const auto table = sweep(spec, p, true);
        const int i0 = 100;
        std::vector<double> at0;
        for (const auto& br : table.branches)
            if (!std::isnan(br.lambda[i0])) at0.push_back(br.lambda[i0]);
        std::sort(at0.begin(), at0.end());
        std::vector<double> want;
        for (int k = 0; 1.0 + 2.0 * k <= 9.0; ++k) want.push_back(1.0 + 2.0 * k);
        for (int k = 0; 1.6 + 2.0 * k <= 9.0; ++k) want.push_back(1.6 + 2.0 * k);
        std::sort(want.begin(), want.end());
        if (at0.size() != want.size()) {
            ok = false;
            detail = "t=0 anchor count mismatch";
            break;
        }
        for (size_t i = 0; i < want.size(); ++i)
            if (std::abs(at0[i] - want[i]) > 1e-9) ok = false;
        // (b) never more than 2 branch points inside an H^inf gap
        const auto lattice = hinf_roots(p.alpha, 0.5 * (1.0 - 9.0), p.B);
        for (size_t i = 0; i < table.t_values.size() && ok; ++i)
            for (size_t g = 0; g + 1 < lattice.size(); ++g) {
                int inside = 0;
                for (const auto& br : table.branches) {
                    const double lam = br.lambda[i];
                    if (!std::isnan(lam) && lam > lattice[g].lambda &&
                        lam < lattice[g + 1].lambda)
                        ++inside;
                }
                if (inside > 2) {
                    ok = false;
                    detail = "more than 2 branches in a gap";
                }
            }
        // (c) the zeta = 0 line splits into two non-interacting families
        if (dir[2] == 0.0) {
            int fam_m1 = 0, fam_0 = 0, untagged = 0;
            for (const auto& br : table.branches) {
                if (br.sector == -1)
                    ++fam_m1;
                else if (br.sector == 0)
                    ++fam_0;
                else
                    ++untagged;
            }
            if (fam_m1 == 0 || fam_0 == 0 || untagged != 0) {
                ok = false;
                detail = "family split failed";
            }
        }
    }
    report(8, "figure sweeps: anchors, gap occupancy, decoupled families", ok,
           detail.empty() ? "both parameter lines" : detail);
}

void criterion_9() {
    bool ok = true;
    double worst = 0.0;
    // reflection
    for (double x = -9.53; x < 10.0; x += 0.477) {
        if (std::abs(x - std::round(x)) < 0.02) continue;
        const double r = std::abs(rgamma(x) * rgamma(1.0 - x) -
                                  sin_pi(x) / 3.14159265358979323846);
        worst = std::max(worst, r);
    }
    ok = ok && worst <= 1e-12;
    // recurrence
    double worst_rec = 0.0;
    for (double x = 0.5; x <= 30.0; x += 0.5) {
        const auto g1 = signed_log_gamma(x + 1.0);
        const auto g0 = signed_log_gamma(x);
        worst_rec = std::max(
            worst_rec, std::abs(g1.sign * std::exp(g1.log_abs) /
                                    (x * g0.sign * std::exp(g0.log_abs)) -
                                1.0));
    }
    ok = ok && worst_rec <= 1e-13;
    // Kummer exp identity
    double worst_k = 0.0;
    for (double z = 0.0; z <= 20.0; z += 0.8)
        worst_k = std::max(worst_k,
                           std::abs(kummer_f(0.7, 0.7, z) / std::exp(z) - 1.0));
    ok = ok && worst_k <= 1e-12;
    // small-z and large-z Tricomi behaviour: the two-term expansion at the
    // origin has an O(z^{2-gamma}) remainder, the tail is z^-beta (1+O(1/z))
    const double z0 = 1e-6;
    const double two_term = std::tgamma(0.3) / std::tgamma(0.8) *
                                std::pow(z0, -0.3) +
                            std::tgamma(-0.3) / std::tgamma(0.5);
    const double small =
        std::abs(tricomi_g(0.8, 1.3, z0) - two_term) / tricomi_g(0.8, 1.3, z0);
    const double large =
        std::abs(tricomi_g(0.6, 1.3, 100.0) / std::pow(100.0, -0.6) - 1.0);
    ok = ok && small < 1e-4 && large < 0.02;
    // digamma difference identity via quadrature
    const auto dg = check_digamma();
    ok = ok && !dg.empty() && dg.front().pass && dg.front().measured <= 1e-8;
    report(9, "special-function suite", ok,
           "reflection " + std::to_string(worst) + ", recurrence " +
               std::to_string(worst_rec) + ", digamma " +
               std::to_string(dg.front().measured));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
