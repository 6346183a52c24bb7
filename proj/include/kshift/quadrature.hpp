#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "kshift/errors.hpp"

namespace kshift::quadrature {

struct QuadResult {
    double value = 0.0;
    std::size_t panels = 0;
    bool converged = true;
};

/// Adaptive Simpson quadrature with an explicit work stack.
/// Subdivides until the local Richardson error estimate meets the tolerance
/// share of the interval or the panel budget is exhausted.
template <class F>
QuadResult adaptive_simpson(const F& f, double a, double b, double tol,
                            std::size_t max_panels = 1'000'000) {
    QuadResult out;
    if (a == b) return out;
    if (!(tol > 0.0)) raise(errc::invalid_argument, "quadrature tolerance must be positive");

    struct Panel {
        double a, b, fa, fm, fb, s, tol;
    };

    auto simpson = [](double h, double fa, double fm, double fb) {
        return (fa + 4.0 * fm + fb) * (h / 6.0);
    };

    std::vector<Panel> stack;
    {
        const double m = 0.5 * (a + b);
        const double fa = f(a), fm = f(m), fb = f(b);
        stack.push_back({a, b, fa, fm, fb, simpson(b - a, fa, fm, fb), tol});
    }

    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        ++out.panels;
        if (out.panels > max_panels) {
            out.converged = false;
            out.value += p.s;
            continue;
        }
        const double m = 0.5 * (p.a + p.b);
        const double lm = 0.5 * (p.a + m);
        const double rm = 0.5 * (m + p.b);
        const double flm = f(lm), frm = f(rm);
        const double sl = simpson(m - p.a, p.fa, flm, p.fm);
        const double sr = simpson(p.b - m, p.fm, frm, p.fb);
        const double err = (sl + sr - p.s) / 15.0;
        if (std::abs(err) <= p.tol || (p.b - p.a) < 1e-14 * (std::abs(p.a) + std::abs(p.b) + 1.0)) {
            out.value += sl + sr + err;
        } else {
            stack.push_back({p.a, m, p.fa, flm, p.fm, sl, 0.5 * p.tol});
            stack.push_back({m, p.b, p.fm, frm, p.fb, sr, 0.5 * p.tol});
        }
    }
    return out;
}

}  // namespace kshift::quadrature
