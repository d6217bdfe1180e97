#pragma once

#include <cmath>
#include <cstdlib>

namespace abspec {

// Tanh-sinh quadrature on (a, b). Tolerates integrable endpoint
// singularities; nodes near the endpoints are generated with full relative
// precision in the offset from the endpoint, and the node range grows until
// the transformed tail is negligible.
template <typename F>
double tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-11,
                 int max_level = 11) {
    const double half = 0.5 * (b - a);
    const double pi_half = 1.5707963267948966;
    const double t_cap = 6.8;  // endpoint offsets underflow past this point

    auto node = [&](double t) -> double {
        const double u = pi_half * std::sinh(t);
        const double w = pi_half * std::cosh(t);
        const double e = std::exp(-2.0 * std::abs(u));
        const double sig_far = 1.0 / (1.0 + e);
        const double sig_near = e / (1.0 + e);
        // offsets this small underflow inside integrands that square the
        // coordinate; their weighted contribution is far below tolerance
        if (sig_near < 1e-150) return 0.0;
        const double jac = 4.0 * sig_far * sig_near * half * w;
        if (jac == 0.0) return 0.0;
        const double x = (t >= 0.0) ? b - (b - a) * sig_near
                                    : a + (b - a) * sig_near;
        return f(x) * jac;
    };

    double h = 1.0;
    double sum = node(0.0);
    // level 0: symmetric pairs until both sides stall
    {
        int quiet = 0;
        for (double t = h; t <= t_cap && quiet < 3; t += h) {
            const double add = node(t) + node(-t);
            sum += add;
            quiet = std::abs(add) <= 1e-16 * std::abs(sum) ? quiet + 1 : 0;
        }
    }
    double prev = sum * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add_total = 0.0;
        int quiet = 0;
        for (double t = h; t <= t_cap && quiet < 3; t += 2.0 * h) {
            const double add = node(t) + node(-t);
            add_total += add;
            quiet = std::abs(add) <= 1e-16 * (std::abs(sum) + std::abs(add_total))
                        ? quiet + 1
                        : 0;
        }
        sum += add_total;
        const double cur = sum * h;
        if (level >= 3 && std::abs(cur - prev) <= rel_tol * std::abs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace abspec
