#include "abspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace abspec {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::vector<EigenvalueRecord> stable_records(const ModelParams& p, double lambda_max,
                                             int m_cap) {
    std::vector<EigenvalueRecord> out;
    // Landau levels B(2k+1) from sectors m <= -2, infinitely degenerate
    for (int k = 0;; ++k) {
        const double lam = p.B * (2.0 * k + 1.0);
        if (lam > lambda_max) break;
        EigenvalueRecord rec;
        rec.lambda = lam;
        rec.multiplicity = m_cap;
        rec.multiplicity_truncated = true;
        rec.source = EvSource::stable_landau;
        for (int j = 0; j < m_cap; ++j) rec.sectors.push_back(-2 - j);
        out.push_back(std::move(rec));
    }
    // shifted levels B(2k + 2alpha + 1) from sectors m >= 1, multiplicity k
    for (int k = 1;; ++k) {
        const double lam = p.B * (2.0 * k + 2.0 * p.alpha + 1.0);
        if (lam > lambda_max) break;
        EigenvalueRecord rec;
        rec.lambda = lam;
        rec.multiplicity = std::min(k, m_cap);
        rec.multiplicity_truncated = k > m_cap;
        rec.source = EvSource::stable_shifted;
        for (int j = 1; j <= std::min(k, m_cap); ++j) rec.sectors.push_back(j);
        out.push_back(std::move(rec));
    }
    return out;
}

EigenvalueRecord critical_record(const Root& r) {
    EigenvalueRecord rec;
    rec.lambda = r.lambda;
    rec.z = r.z;
    rec.multiplicity = r.multiplicity_hint;
    rec.source = r.origin == RootOrigin::endpoint ? EvSource::critical_endpoint
                                                  : EvSource::critical;
    if (r.sector)
        rec.sectors.push_back(*r.sector);
    else
        rec.sectors = {-1, 0};
    return rec;
}

std::vector<EigenvalueRecord> merge_sorted(std::vector<EigenvalueRecord> recs,
                                           double tol) {
    std::sort(recs.begin(), recs.end(),
              [](const EigenvalueRecord& x, const EigenvalueRecord& y) {
                  return x.lambda < y.lambda;
              });
    std::vector<EigenvalueRecord> out;
    for (auto& r : recs) {
        if (!out.empty() && std::abs(out.back().lambda - r.lambda) <= tol) {
            auto& dst = out.back();
            dst.multiplicity += r.multiplicity;
            dst.multiplicity_truncated |= r.multiplicity_truncated;
            if (!r.z && dst.z) {
                // keep the critical z
            } else if (r.z) {
                dst.z = r.z;
            }
            // stable source labels win in a merge
            if (dst.source == EvSource::critical ||
                dst.source == EvSource::critical_endpoint) {
                if (r.source == EvSource::stable_landau ||
                    r.source == EvSource::stable_shifted)
                    dst.source = r.source;
            }
            for (int s : r.sectors)
                if (std::find(dst.sectors.begin(), dst.sectors.end(), s) ==
                    dst.sectors.end())
                    dst.sectors.push_back(s);
            std::sort(dst.sectors.begin(), dst.sectors.end());
        } else {
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

const char* to_string(EvSource s) {
    switch (s) {
        case EvSource::stable_landau: return "stable_landau";
        case EvSource::stable_shifted: return "stable_shifted";
        case EvSource::critical: return "critical";
        case EvSource::critical_endpoint: return "critical_endpoint";
    }
    return "?";
}

std::vector<EigenvalueRecord> full_spectrum(const RescaledBC& rbc,
                                            const ModelParams& p, double lambda_max,
                                            int m_cap) {
    validate(p);
    if (!(lambda_max > p.B))
        throw std::invalid_argument("full_spectrum: lambda_max must exceed B");
    if (m_cap < 1) throw std::invalid_argument("full_spectrum: m_cap must be >= 1");
    auto recs = stable_records(p, lambda_max, m_cap);
    const double z_min = 0.5 * (1.0 - lambda_max / p.B);
    const SecularParams sp{rbc, p.alpha};
    for (const auto& r : find_roots(sp, p, z_min))
        if (r.lambda <= lambda_max) recs.push_back(critical_record(r));
    return merge_sorted(std::move(recs), 1e-9 * p.B);
}

std::vector<EigenvalueRecord> full_spectrum(const BoundaryCondition& bc,
                                            const ModelParams& p, double lambda_max,
                                            int m_cap) {
    return full_spectrum(rescale(bc, p), p, lambda_max, m_cap);
}

std::vector<EigenvalueRecord> hinf_spectrum(const ModelParams& p, double lambda_max,
                                            int m_cap) {
    validate(p);
    auto recs = stable_records(p, lambda_max, m_cap);
    const double z_min = 0.5 * (1.0 - lambda_max / p.B);
    for (const auto& r : hinf_roots(p.alpha, z_min, p.B))
        if (r.lambda <= lambda_max) recs.push_back(critical_record(r));
    return merge_sorted(std::move(recs), 1e-9 * p.B);
}

std::vector<CriticalEigenfunction> critical_eigenfunction(const Root& root,
                                                          const BoundaryCondition& bc,
                                                          const ModelParams& p) {
    const auto cf = boundary_coeffs(root.lambda, p);
    const Eigen::Matrix2cd L = lambda_matrix(bc, p.alpha);
    Eigen::Matrix2cd A = Eigen::Matrix2cd::Zero();
    A(0, 0) = cf.a_m1;
    A(1, 1) = cf.a_0;
    Eigen::Matrix2cd Bd = Eigen::Matrix2cd::Zero();
    Bd(0, 0) = cf.b_m1;
    Bd(1, 1) = cf.b_0;
    const Eigen::Matrix2cd M = A - L * Bd;
    const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(M, Eigen::ComputeFullV);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(1);
    const double scale = std::max(smax, 1e-300);
    if (smin > 1e-6 * scale)
        throw KernelDimensionError(
            "critical_eigenfunction: boundary matrix is numerically regular "
            "(relative smallest singular value " +
            std::to_string(smin / scale) + ")");
    std::vector<CriticalEigenfunction> out;
    const int n_vec = root.multiplicity_hint >= 2 ? 2 : 1;
    for (int k = 0; k < n_vec; ++k) {
        Eigen::Vector2cd v = svd.matrixV().col(1 - k);  // smallest sigma first
        // deterministic phase: largest component real positive
        const int imax = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
        const std::complex<double> ph = v(imax) / std::abs(v(imax));
        v /= ph;
        out.push_back({v(0), v(1), root.lambda, (M * v).norm()});
    }
    return out;
}

SweepTable sweep(const SweepSpec& spec, const ModelParams& p, bool parallel) {
    validate(p);
    if (spec.n_steps < 2) throw std::invalid_argument("sweep: n_steps must be >= 2");
    SweepTable table;
    table.direction = spec.direction;
    table.t_values.resize(spec.n_steps);
    const double dt = (spec.t_hi - spec.t_lo) / (spec.n_steps - 1);
    for (int i = 0; i < spec.n_steps; ++i) table.t_values[i] = spec.t_lo + i * dt;

    const double z_min = 0.5 * (1.0 - spec.lambda_hi / p.B);
    std::vector<std::vector<Root>> per_t(spec.n_steps);
    std::vector<std::string> errors(spec.n_steps);

    auto run_one = [&](int i) {
        const double t = table.t_values[i];
        const SecularParams sp{
            {spec.direction[0] * t, spec.direction[1] * t,
             std::abs(spec.direction[2] * t)},
            p.alpha};
        try {
            auto roots = find_roots(sp, p, z_min);
            std::erase_if(roots, [&](const Root& r) {
                return r.lambda < spec.lambda_lo || r.lambda > spec.lambda_hi;
            });
            per_t[i] = std::move(roots);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < spec.n_steps; ++i) run_one(i);
#else
        for (int i = 0; i < spec.n_steps; ++i) run_one(i);
#endif
    } else {
        for (int i = 0; i < spec.n_steps; ++i) run_one(i);
    }

    for (int i = 0; i < spec.n_steps; ++i)
        if (!errors[i].empty())
            table.diagnostics.push_back("t=" + std::to_string(table.t_values[i]) +
                                        ": " + errors[i]);

    // sequential branch linking by nearest-lambda continuation with a linear
    // prediction once a branch has two points
    struct Live {
        int branch;
        double last;
        double slope;
    };
    std::vector<Live> live;
    int next_id = 0;
    auto new_branch = [&](int step, const Root& r) {
        SweepBranch br;
        br.id = next_id++;
        br.sector = r.sector.value_or(99);
        br.lambda.assign(spec.n_steps, kNan);
        br.lambda[step] = r.lambda;
        table.branches.push_back(std::move(br));
        live.push_back({table.branches.back().id, r.lambda, 0.0});
    };
    for (int i = 0; i < spec.n_steps; ++i) {
        const auto& roots = per_t[i];
        if (i == 0 || live.empty()) {
            for (const auto& r : roots) new_branch(i, r);
            continue;
        }
        // greedy matching on |prediction - root|
        struct Cand {
            double dist;
            int live_idx;
            int root_idx;
        };
        std::vector<Cand> cands;
        for (int l = 0; l < static_cast<int>(live.size()); ++l)
            for (int r = 0; r < static_cast<int>(roots.size()); ++r) {
                const double pred = live[l].last + live[l].slope;
                cands.push_back({std::abs(pred - roots[r].lambda), l, r});
            }
        std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
            if (x.dist != y.dist) return x.dist < y.dist;
            if (x.live_idx != y.live_idx) return x.live_idx < y.live_idx;
            return x.root_idx < y.root_idx;
        });
        std::vector<bool> live_used(live.size(), false);
        std::vector<bool> root_used(roots.size(), false);
        std::vector<Live> next_live;
        for (const auto& c : cands) {
            if (live_used[c.live_idx] || root_used[c.root_idx]) continue;
            const double tol =
                std::max(0.5 * p.B, 10.0 * std::abs(live[c.live_idx].slope));
            if (c.dist > tol) continue;
            live_used[c.live_idx] = true;
            root_used[c.root_idx] = true;
            auto& br = table.branches[live[c.live_idx].branch];
            br.lambda[i] = roots[c.root_idx].lambda;
            const double slope = roots[c.root_idx].lambda - live[c.live_idx].last;
            next_live.push_back({br.id, roots[c.root_idx].lambda, slope});
        }
        // unmatched roots open new branches
        std::vector<int> fresh;
        for (int r = 0; r < static_cast<int>(roots.size()); ++r)
            if (!root_used[r]) fresh.push_back(r);
        live = std::move(next_live);
        for (int r : fresh) new_branch(i, roots[r]);
        std::sort(live.begin(), live.end(),
                  [](const Live& x, const Live& y) { return x.branch < y.branch; });
    }

    // constant stable-sector levels inside the window, for plot context
    for (int k = 0;; ++k) {
        const double lam = p.B * (2.0 * k + 1.0);
        if (lam > spec.lambda_hi) break;
        if (lam >= spec.lambda_lo) table.stable_levels.push_back(lam);
    }
    for (int k = 1;; ++k) {
        const double lam = p.B * (2.0 * k + 2.0 * p.alpha + 1.0);
        if (lam > spec.lambda_hi) break;
        if (lam >= spec.lambda_lo) table.stable_levels.push_back(lam);
    }
    std::sort(table.stable_levels.begin(), table.stable_levels.end());
    return table;
}

}  // namespace abspec
