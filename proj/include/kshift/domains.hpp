#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kshift/errors.hpp"

namespace kshift::domains {

using complexd = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Step domain in the right half-plane: H minus the stack of closed steps
/// S_k = {a_{k-1} <= Re z <= a_k, Im z <= -b_k}. The last step extends to
/// Re z in [a_{K-1}, +inf) at depth -b_K for membership purposes.
struct StepDomain {
    std::vector<double> a;  // a_0 = 0 < a_1 < ... < a_K
    std::vector<double> b;  // b_1 <= ... <= b_K, positive
    bool ratio_warning = false;  // a_k/b_k not decreasing over the given range

    StepDomain(std::vector<double> a_, std::vector<double> b_)
        : a(std::move(a_)), b(std::move(b_)) {
        if (b.empty() || a.size() != b.size() + 1)
            raise(errc::validation_error, "step domain needs K+1 abscissae and K depths");
        if (a.front() != 0.0) raise(errc::validation_error, "a_0 must be 0");
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            if (!(a[i] < a[i + 1])) raise(errc::validation_error, "a must be strictly increasing");
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (!(b[i] > 0.0)) raise(errc::validation_error, "b must be positive");
            if (i > 0 && b[i] < b[i - 1]) raise(errc::validation_error, "b must be nondecreasing");
        }
        for (double v : a)
            if (!std::isfinite(v)) raise(errc::validation_error, "a entries must be finite");
        for (double v : b)
            if (!std::isfinite(v)) raise(errc::validation_error, "b entries must be finite");
        double prev = kInf;
        for (std::size_t k = 1; k < a.size(); ++k) {
            const double ratio = a[k] / b[k - 1];
            if (ratio > prev) ratio_warning = true;
            prev = ratio;
        }
    }

    std::size_t steps() const { return b.size(); }

    /// Depth of the lower boundary below the real axis at abscissa x >= 0
    /// (first covering step wins at shared endpoints).
    double depth(double x) const {
        auto it = std::lower_bound(a.begin(), a.end(), x);
        if (it == a.end()) return b.back();
        const std::size_t i = static_cast<std::size_t>(it - a.begin());
        return i == 0 ? b.front() : b[i - 1];
    }
};

/// Subgraph domain {x + iy : x > 0, y > -g(x)}.
struct GraphDomain {
    enum class Family { XLogEps, Power, Table };

    Family family;
    double eps = 0.0;               // XLogEps: g(x) = x |log x|^{1+eps}
    double p = 1.0, c = 1.0;        // Power:   g(x) = c x^p
    std::vector<std::pair<double, double>> knots;  // Table: (x, g(x)), x increasing
    double slope = 0.0;             // Table extrapolation slope beyond the last knot

    static GraphDomain xlog(double eps) {
        if (!(eps >= 0.0)) raise(errc::validation_error, "xlog eps must be >= 0");
        GraphDomain d;
        d.family = Family::XLogEps;
        d.eps = eps;
        return d;
    }
    static GraphDomain power(double p, double c) {
        if (!(p > 0.0) || !(c > 0.0)) raise(errc::validation_error, "power family needs p > 0, c > 0");
        GraphDomain d;
        d.family = Family::Power;
        d.p = p;
        d.c = c;
        return d;
    }
    static GraphDomain table(std::vector<std::pair<double, double>> knots, double slope) {
        if (knots.size() < 2) raise(errc::validation_error, "table family needs at least 2 knots");
        for (std::size_t i = 0; i < knots.size(); ++i) {
            if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second))
                raise(errc::validation_error, "table knots must be finite");
            if (!(knots[i].first > 0.0)) raise(errc::validation_error, "table knots need x > 0");
            if (i > 0 && !(knots[i].first > knots[i - 1].first))
                raise(errc::validation_error, "table knots must be strictly increasing in x");
        }
        GraphDomain d;
        d.family = Family::Table;
        d.knots = std::move(knots);
        d.slope = slope;
        return d;
    }

    /// Boundary depth g(x) for x > 0. Table graphs are flat left of the first
    /// knot and linear with the declared slope beyond the last.
    double g(double x) const {
        switch (family) {
            case Family::XLogEps:
                return x * std::pow(std::abs(std::log(x)), 1.0 + eps);
            case Family::Power:
                return c * std::pow(x, p);
            case Family::Table: {
                if (x <= knots.front().first) return knots.front().second;
                if (x >= knots.back().first)
                    return knots.back().second + slope * (x - knots.back().first);
                auto it = std::upper_bound(
                    knots.begin(), knots.end(), x,
                    [](double v, const std::pair<double, double>& k) { return v < k.first; });
                const auto& hi = *it;
                const auto& lo = *(it - 1);
                const double t = (x - lo.first) / (hi.first - lo.first);
                return lo.second + t * (hi.second - lo.second);
            }
        }
        return 0.0;
    }

    /// inf_{x' >= x} g(x'), the boundary depth of the real-direction
    /// starlike-ification (before clipping at 0).
    double running_inf(double x) const {
        switch (family) {
            case Family::XLogEps:
                // g vanishes at 1 and increases on [1, inf).
                return x <= 1.0 ? 0.0 : g(x);
            case Family::Power:
                return g(x);  // increasing
            case Family::Table: {
                if (slope < 0.0) return -kInf;
                double best = g(x);
                for (auto it = std::lower_bound(
                         knots.begin(), knots.end(), x,
                         [](const std::pair<double, double>& k, double v) { return k.first < v; });
                     it != knots.end(); ++it)
                    best = std::min(best, it->second);
                return best;
            }
        }
        return 0.0;
    }
};

struct HalfPlaneDomain {};
struct SlitPlaneDomain {};

/// Vertical semi-sector p + iV(alpha, 0): the open sector of aperture alpha
/// between the directions pi/2 - alpha and pi/2 from the vertex.
struct VerticalSectorDomain {
    complexd vertex;
    double aperture;

    VerticalSectorDomain(complexd vertex_, double aperture_)
        : vertex(vertex_), aperture(aperture_) {
        if (!(aperture > 0.0) || !(aperture < M_PI / 2.0))
            raise(errc::validation_error, "sector aperture must lie in (0, pi/2)");
    }
};

/// Tagged union of the supported starlike-at-infinity Koenigs domains.
struct DomainSpec {
    enum class Kind { Step, Graph, HalfPlane, VerticalSector, SlitPlane };

    std::variant<StepDomain, GraphDomain, HalfPlaneDomain, VerticalSectorDomain, SlitPlaneDomain> v;

    Kind kind() const {
        switch (v.index()) {
            case 0: return Kind::Step;
            case 1: return Kind::Graph;
            case 2: return Kind::HalfPlane;
            case 3: return Kind::VerticalSector;
            default: return Kind::SlitPlane;
        }
    }

    const StepDomain& step() const { return std::get<StepDomain>(v); }
    const GraphDomain& graph() const { return std::get<GraphDomain>(v); }
    const VerticalSectorDomain& sector() const { return std::get<VerticalSectorDomain>(v); }

    static DomainSpec make(StepDomain s) { return {std::move(s)}; }
    static DomainSpec make(GraphDomain g) { return {std::move(g)}; }
    static DomainSpec halfplane() { return {HalfPlaneDomain{}}; }
    static DomainSpec slitplane() { return {SlitPlaneDomain{}}; }
    static DomainSpec vertical_sector(complexd vertex, double aperture) {
        return {VerticalSectorDomain(vertex, aperture)};
    }

    const char* kind_name() const {
        switch (kind()) {
            case Kind::Step: return "step";
            case Kind::Graph: return "graph";
            case Kind::HalfPlane: return "halfplane";
            case Kind::VerticalSector: return "sector";
            case Kind::SlitPlane: return "slitplane";
        }
        return "?";
    }
};

/// Sampled profile r -> eta(r).
struct EtaProfile {
    std::vector<double> radii;
    std::vector<double> eta;
    double tolerance = 0.0;

    EtaProfile(std::vector<double> radii_, std::vector<double> eta_, double tol)
        : radii(std::move(radii_)), eta(std::move(eta_)), tolerance(tol) {
        if (radii.size() != eta.size())
            raise(errc::validation_error, "eta profile lists must have equal length");
        for (std::size_t i = 0; i + 1 < radii.size(); ++i)
            if (!(radii[i] < radii[i + 1]))
                raise(errc::validation_error, "eta profile radii must be increasing");
        for (double e : eta)
            if (!(e > 0.0) || e > 2.0 * M_PI + 1e-12)
                raise(errc::validation_error, "eta values must lie in (0, 2*pi]");
    }
};

/// Right/left boundary distances of p+it, both clipped by t.
struct DeltaSample {
    double t;
    double deltaPlus;
    double deltaMinus;

    DeltaSample(double t_, double plus, double minus)
        : t(t_), deltaPlus(plus), deltaMinus(minus) {
        if (!(t >= 0.0)) raise(errc::validation_error, "delta sample needs t >= 0");
        if (deltaPlus < 0.0 || deltaPlus > t || deltaMinus < 0.0 || deltaMinus > t)
            raise(errc::validation_error, "delta values must lie in [0, t]");
    }
};

enum class ConvergenceMode { NonTangential, TangentialMinus, TangentialPlus, Undetermined };

inline const char* mode_name(ConvergenceMode m) {
    switch (m) {
        case ConvergenceMode::NonTangential: return "NonTangential";
        case ConvergenceMode::TangentialMinus: return "TangentialMinus";
        case ConvergenceMode::TangentialPlus: return "TangentialPlus";
        case ConvergenceMode::Undetermined: return "Undetermined";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

/// Strict membership test; boundary points report false.
inline bool contains(const DomainSpec& d, complexd z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        raise(errc::invalid_argument, "membership query needs a finite point");
    const double x = z.real(), y = z.imag();
    switch (d.kind()) {
        case DomainSpec::Kind::HalfPlane:
            return x > 0.0;
        case DomainSpec::Kind::SlitPlane:
            return !(x == 0.0 && y <= 0.0);
        case DomainSpec::Kind::Step:
            return x > 0.0 && y > -d.step().depth(x);
        case DomainSpec::Kind::Graph:
            return x > 0.0 && y > -d.graph().g(x);
        case DomainSpec::Kind::VerticalSector: {
            const complexd w = z - d.sector().vertex;
            if (w == complexd(0.0, 0.0)) return false;
            const double ang = std::atan2(w.imag(), w.real());
            return ang > M_PI / 2.0 - d.sector().aperture && ang < M_PI / 2.0;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Heights b(x) of the starlike-ification
// ---------------------------------------------------------------------------

/// Infimum of the certified ray-containment radii: [r, inf) is contained in
/// the domain for every r strictly above the returned value. nullopt when no
/// real ray is eventually contained.
inline std::optional<double> ray_containment_radius(const DomainSpec& d) {
    switch (d.kind()) {
        case DomainSpec::Kind::HalfPlane:
        case DomainSpec::Kind::SlitPlane:
        case DomainSpec::Kind::Step:
            return 0.0;
        case DomainSpec::Kind::VerticalSector:
            return std::nullopt;
        case DomainSpec::Kind::Graph: {
            const GraphDomain& g = d.graph();
            switch (g.family) {
                case GraphDomain::Family::XLogEps:
                    return 1.0;  // g(1) = 0 is the only zero of g on (0, inf)
                case GraphDomain::Family::Power:
                    return 0.0;
                case GraphDomain::Family::Table: {
                    // Last abscissa where the piecewise-linear depth is <= 0.
                    if (g.slope < 0.0) return std::nullopt;
                    double last_bad = 0.0;
                    const auto& kn = g.knots;
                    if (kn.front().second <= 0.0) last_bad = kn.front().first;
                    for (std::size_t i = 0; i + 1 < kn.size(); ++i) {
                        const double y0 = kn[i].second, y1 = kn[i + 1].second;
                        if (y1 <= 0.0) {
                            last_bad = std::max(last_bad, kn[i + 1].first);
                        } else if (y0 <= 0.0) {
                            const double t = (0.0 - y0) / (y1 - y0);
                            last_bad = std::max(last_bad,
                                                kn[i].first + t * (kn[i + 1].first - kn[i].first));
                        }
                    }
                    if (kn.back().second <= 0.0) {
                        if (g.slope <= 0.0) return std::nullopt;
                        last_bad = std::max(last_bad, kn.back().first - kn.back().second / g.slope);
                    }
                    return last_bad;
                }
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

/// b(x) = inf{y > 0 : x - iy not in Omega_*}, the boundary depth of the
/// real-direction starlike-ification below x, clipped at 0.
inline double bstar_height(const DomainSpec& d, double x) {
    if (!contains(d, complexd(x, 0.0)))
        raise(errc::ray_not_contained, "real point " + std::to_string(x) + " is not in the domain");
    switch (d.kind()) {
        case DomainSpec::Kind::HalfPlane:
        case DomainSpec::Kind::SlitPlane:
            return kInf;
        case DomainSpec::Kind::Step:
            return d.step().depth(x);
        case DomainSpec::Kind::Graph:
            return std::max(0.0, d.graph().running_inf(x));
        case DomainSpec::Kind::VerticalSector:
            return 0.0;  // the starlike-ification in the real direction is empty
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Inner tangent at infinity (truncated-cone certification)
// ---------------------------------------------------------------------------

struct InnerTangent {
    double radius;
    bool analytic;  // a closed-form depth comparison backs the sample certificate
};

namespace detail {

// Analytic cone check: floor(x) >= x tan(beta) for all x in (x_lo, x_hi].
// Returns nullopt when the variant has no closed-form comparison.
inline std::optional<bool> cone_analytic_ok(const DomainSpec& d, double beta, double x_lo,
                                            double x_hi) {
    const double tb = std::tan(beta);
    switch (d.kind()) {
        case DomainSpec::Kind::HalfPlane:
        case DomainSpec::Kind::SlitPlane:
            return true;
        case DomainSpec::Kind::VerticalSector:
            return false;  // contains no truncated cone around the real axis
        case DomainSpec::Kind::Step: {
            const StepDomain& s = d.step();
            for (std::size_t k = 0; k < s.b.size(); ++k) {
                const double seg_lo = std::max(s.a[k], x_lo);
                const double seg_hi = std::min(s.a[k + 1], x_hi);
                if (seg_lo < seg_hi && s.b[k] < seg_hi * tb) return false;
            }
            if (x_hi > s.a.back() && s.b.back() < x_hi * tb) return false;
            // Guard the extension start: depth b_K applies from a_{K-1} on.
            if (x_hi > s.a[s.a.size() - 2] && s.b.back() < std::min(x_hi, s.a.back()) * tb &&
                x_lo < s.a.back())
                return s.b.back() >= std::min(x_hi, s.a.back()) * tb;
            return true;
        }
        case DomainSpec::Kind::Graph: {
            const GraphDomain& g = d.graph();
            switch (g.family) {
                case GraphDomain::Family::XLogEps: {
                    // g(x) >= x tan(beta)  <=>  |log x| >= tan(beta)^{1/(1+eps)}
                    const double s = std::pow(tb, 1.0 / (1.0 + g.eps));
                    const double bad_lo = std::exp(-s), bad_hi = std::exp(s);
                    return x_lo >= bad_hi || x_hi <= bad_lo;
                }
                case GraphDomain::Family::Power: {
                    if (g.p > 1.0) {
                        const double bad_hi = std::pow(tb / g.c, 1.0 / (g.p - 1.0));
                        return x_lo >= bad_hi;
                    }
                    if (g.p == 1.0) return g.c >= tb;
                    const double good_hi = std::pow(g.c / tb, 1.0 / (1.0 - g.p));
                    return x_hi <= good_hi;
                }
                case GraphDomain::Family::Table:
                    return std::nullopt;  // sample-only certificate
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

inline bool cone_sample_ok(const DomainSpec& d, double beta, double r, double sample_max) {
    constexpr int kAngles = 48;
    constexpr int kRadii = 48;
    const double r_in = std::max(r * (1.0 + 1e-12), 1e-9 * sample_max);
    if (r_in >= sample_max) return true;
    for (int i = 0; i < kRadii; ++i) {
        const double rho =
            r_in * std::pow(sample_max / r_in, (i + 0.5) / static_cast<double>(kRadii));
        for (int j = 0; j < kAngles; ++j) {
            const double th = -beta + 2.0 * beta * (j + 0.5) / static_cast<double>(kAngles);
            if (!contains(d, complexd(rho * std::cos(th), rho * std::sin(th)))) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Smallest grid-certified radius r <= searchMax with
/// Gamma(beta, r) inside the domain, sampling the truncated cone
/// Gamma(beta, r) intersected with {|z| <= 10 searchMax}. Closed-form depth
/// comparisons back the certificate for step and graph families.
inline std::optional<InnerTangent> inner_tangent_radius(const DomainSpec& d, double beta,
                                                        double searchMax) {
    if (!(beta > 0.0) || !(beta < M_PI / 2.0)) raise(errc::bad_angle, "beta must lie in (0, pi/2)");
    if (!(searchMax > 0.0)) raise(errc::invalid_argument, "searchMax must be positive");
    const double sample_max = 10.0 * searchMax;
    const double cb = std::cos(beta);

    constexpr int kCandidates = 64;
    const double r_min = searchMax * 1e-6;
    for (int i = 0; i < kCandidates; ++i) {
        const double r =
            r_min * std::pow(searchMax / r_min, i / static_cast<double>(kCandidates - 1));
        const auto analytic = detail::cone_analytic_ok(d, beta, r * cb, sample_max);
        if (analytic.has_value() && !*analytic) continue;
        if (!detail::cone_sample_ok(d, beta, r, sample_max)) continue;
        return InnerTangent{r, analytic.has_value()};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Radial arc profile eta
// ---------------------------------------------------------------------------

namespace detail {

// First exit angle marching from 0 in direction sign, then bisection.
// Returns the exit angle magnitude, or 2*pi when no exit is found.
inline double exit_angle(const DomainSpec& d, double r, double tol, double sign) {
    const double h = M_PI / 256.0;
    const int max_steps = static_cast<int>(std::ceil(2.0 * M_PI / h)) + 1;
    double prev = 0.0;
    for (int k = 1; k <= max_steps; ++k) {
        const double th = std::min(k * h, 2.0 * M_PI);
        const complexd z(r * std::cos(sign * th), r * std::sin(sign * th));
        if (!contains(d, z)) {
            double lo = prev, hi = th;
            int iter = 0;
            while (hi - lo > tol) {
                if (++iter > 200) raise(errc::budget_exceeded, "eta bisection budget exhausted");
                const double mid = 0.5 * (lo + hi);
                const complexd zm(r * std::cos(sign * mid), r * std::sin(sign * mid));
                (contains(d, zm) ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev = th;
        if (th >= 2.0 * M_PI) break;
    }
    return 2.0 * M_PI;
}

}  // namespace detail

/// Normalized angular length of the maximal arc of the domain's intersection
/// with |z| = r through the real point r. Outward angular marching with step
/// pi/256, then bisection to tol at each exit angle. Result in (0, 2*pi].
inline double eta(const DomainSpec& d, double r, double tol) {
    if (!(tol > 0.0)) raise(errc::invalid_argument, "eta tolerance must be positive");
    if (!contains(d, complexd(r, 0.0)))
        raise(errc::point_not_in_domain, "real point r is not in the domain");
    const double up = detail::exit_angle(d, r, tol, +1.0);
    const double down = detail::exit_angle(d, r, tol, -1.0);
    return std::min(up + down, 2.0 * M_PI);
}

/// c_k = |a_{k-1} - i b_k|, d_k = |a_k - i b_k|.
inline std::pair<std::vector<double>, std::vector<double>> cd_sequences(const StepDomain& s) {
    std::vector<double> c(s.steps()), d(s.steps());
    for (std::size_t k = 0; k < s.steps(); ++k) {
        c[k] = std::hypot(s.a[k], s.b[k]);
        d[k] = std::hypot(s.a[k + 1], s.b[k]);
    }
    return {c, d};
}

/// Closed-form eta for a step domain:
///   pi - eta(r) = arctan(sqrt(r^2-b_k^2)/b_k)   for r in [c_k, d_k],
///   pi - eta(r) = arctan(a_k / sqrt(r^2-a_k^2)) for r in [d_k, c_{k+1}],
/// with the second branch extending past d_K.
inline double eta_step_closed_form(const StepDomain& s, double r) {
    const auto [c, d] = cd_sequences(s);
    if (r < c.front()) raise(errc::radius_too_small, "closed form needs r >= c_1");
    // Largest k with c_k <= r.
    const std::size_t k = static_cast<std::size_t>(
        std::upper_bound(c.begin(), c.end(), r) - c.begin() - 1);
    if (r <= d[k]) {
        const double bk = s.b[k];
        const double x = std::sqrt(std::max(0.0, r * r - bk * bk));
        return M_PI - std::atan(x / bk);
    }
    const double ak = s.a[k + 1];
    const double y = std::sqrt(std::max(0.0, r * r - ak * ak));
    return M_PI - std::atan(ak / y);
}

/// Profile helper evaluating eta over an increasing radius list.
inline EtaProfile eta_profile(const DomainSpec& d, const std::vector<double>& radii, double tol) {
    std::vector<double> vals;
    vals.reserve(radii.size());
    for (double r : radii) vals.push_back(eta(d, r, tol));
    return EtaProfile(radii, vals, tol);
}

// ---------------------------------------------------------------------------
// Boundary distances delta+-
// ---------------------------------------------------------------------------

namespace detail {

// Distance from q to {o + s u : s in [s_lo, s_hi]}, u a unit vector.
inline double dist_to_param_segment(complexd q, complexd o, complexd u, double s_lo, double s_hi) {
    if (s_lo > s_hi) return kInf;
    const complexd w = q - o;
    double s = w.real() * u.real() + w.imag() * u.imag();
    s = std::clamp(s, s_lo, s_hi);
    return std::abs(w - s * u);
}

// Distance to the part of a horizontal segment y = y0, x in [x0, x1]
// restricted to {x >= cut} (plus=true) or {x <= cut} (plus=false).
inline double dist_to_horizontal(complexd q, double y0, double x0, double x1, double cut,
                                 bool plus) {
    double lo = x0, hi = x1;
    if (plus)
        lo = std::max(lo, cut);
    else
        hi = std::min(hi, cut);
    if (lo > hi) return kInf;
    const double x = std::clamp(q.real(), lo, hi);
    return std::hypot(q.real() - x, q.imag() - y0);
}

inline double dist_to_vertical(complexd q, double x0, double y_lo, double y_hi, double cut,
                               bool plus) {
    if (plus ? (x0 < cut) : (x0 > cut)) return kInf;
    const double y = std::clamp(q.imag(), y_lo, y_hi);
    return std::hypot(q.real() - x0, q.imag() - y);
}

// One-sided distance to a step-domain boundary.
inline double step_boundary_dist(const StepDomain& s, complexd q, double cut, bool plus) {
    double best = kInf;
    // Left wall {x = 0, y >= -b_1}.
    best = std::min(best, dist_to_vertical(q, 0.0, -s.b.front(), kInf, cut, plus));
    const std::size_t K = s.steps();
    for (std::size_t k = 0; k < K; ++k) {
        const double x_hi = (k + 1 == K) ? kInf : s.a[k + 1];
        best = std::min(best, dist_to_horizontal(q, -s.b[k], s.a[k], x_hi, cut, plus));
        if (k + 1 < K && s.b[k + 1] > s.b[k])
            best = std::min(best, dist_to_vertical(q, s.a[k + 1], -s.b[k + 1], -s.b[k], cut, plus));
    }
    return best;
}

// One-sided distance to a graph-domain boundary: the curve (x, -g(x)) plus
// the vertical ray above its x -> 0 limit. Dense log-grid scan with local
// parabolic-free golden-section refinement.
inline double graph_boundary_dist(const GraphDomain& g, complexd q, double cut, bool plus) {
    double best = kInf;
    const double axis_top = -g.g(std::numeric_limits<double>::min());
    // Axis ray {x = 0, y >= -g(0+)}; for the built-in families g(0+) = 0.
    double axis_y = 0.0;
    if (g.family == GraphDomain::Family::Table) axis_y = -g.knots.front().second;
    (void)axis_top;
    if (plus ? (0.0 >= cut) : (0.0 <= cut)) {
        const double y = std::max(q.imag(), axis_y);
        best = std::min(best, std::hypot(q.real(), q.imag() - y));
    }

    double x_lo = 1e-9, x_hi = 4.0 * (std::abs(q) + 1.0);
    if (g.family == GraphDomain::Family::Table)
        x_hi = std::max(x_hi, 2.0 * g.knots.back().first);
    if (plus)
        x_lo = std::max(x_lo, cut);
    else
        x_hi = std::min(x_hi, cut);
    if (x_lo >= x_hi) return best;

    constexpr int kSamples = 512;
    auto f = [&](double x) { return std::norm(q - complexd(x, -g.g(x))); };
    int best_i = -1;
    double best_f = kInf;
    std::vector<double> xs(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        xs[i] = x_lo * std::pow(x_hi / x_lo, i / static_cast<double>(kSamples - 1));
        const double v = f(xs[i]);
        if (v < best_f) {
            best_f = v;
            best_i = i;
        }
    }
    // Golden-section refinement in the bracket around the best sample.
    double lo = xs[std::max(0, best_i - 1)];
    double hi = xs[std::min(kSamples - 1, best_i + 1)];
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 120 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
        if (f1 < f2) {
            hi = x2, x2 = x1, f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1, x1 = x2, f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = f(x2);
        }
    }
    best = std::min(best, std::sqrt(std::min(f1, f2)));
    return best;
}

inline double sector_boundary_dist(const VerticalSectorDomain& s, complexd q, double cut,
                                   bool plus) {
    double best = kInf;
    // Vertical edge from the vertex (constant Re).
    if (plus ? (s.vertex.real() >= cut) : (s.vertex.real() <= cut))
        best = std::min(best,
                        dist_to_param_segment(q, s.vertex, complexd(0.0, 1.0), 0.0, kInf));
    // Slanted edge at angle pi/2 - alpha; Re increases along it.
    const complexd u(std::sin(s.aperture), std::cos(s.aperture));
    double s_lo = 0.0, s_hi = kInf;
    const double s_cut = (cut - s.vertex.real()) / u.real();
    if (plus)
        s_lo = std::max(s_lo, s_cut);
    else
        s_hi = std::min(s_hi, s_cut);
    best = std::min(best, dist_to_param_segment(q, s.vertex, u, s_lo, s_hi));
    return best;
}

}  // namespace detail

/// delta+-_p(t): distance of p + it from the boundary on the right
/// (Re zeta >= Re p) and on the left (Re zeta <= Re p), clipped by t.
inline DeltaSample delta_pm(const DomainSpec& d, complexd p, double t) {
    if (!(t >= 0.0)) raise(errc::invalid_argument, "delta_pm needs t >= 0");
    if (!contains(d, p)) raise(errc::point_not_in_domain, "base point is not in the domain");
    const complexd q = p + complexd(0.0, t);
    const double cut = p.real();
    double plus = kInf, minus = kInf;
    switch (d.kind()) {
        case DomainSpec::Kind::HalfPlane:
            if (0.0 >= cut) plus = std::abs(q.real());
            if (0.0 <= cut) minus = std::abs(q.real());
            break;
        case DomainSpec::Kind::SlitPlane: {
            const double dist =
                q.imag() <= 0.0 ? std::abs(q.real()) : std::abs(q);
            if (0.0 >= cut) plus = dist;
            if (0.0 <= cut) minus = dist;
            break;
        }
        case DomainSpec::Kind::Step:
            plus = detail::step_boundary_dist(d.step(), q, cut, true);
            minus = detail::step_boundary_dist(d.step(), q, cut, false);
            break;
        case DomainSpec::Kind::Graph:
            plus = detail::graph_boundary_dist(d.graph(), q, cut, true);
            minus = detail::graph_boundary_dist(d.graph(), q, cut, false);
            break;
        case DomainSpec::Kind::VerticalSector:
            plus = detail::sector_boundary_dist(d.sector(), q, cut, true);
            minus = detail::sector_boundary_dist(d.sector(), q, cut, false);
            break;
    }
    return DeltaSample(t, std::min(plus, t), std::min(minus, t));
}

struct ModeOptions {
    double diverge_threshold = 1e3;
    double decay_threshold = 1e-3;
};

/// Convergence-mode classifier from the tail of the ratio delta+/delta-.
inline ConvergenceMode classify_convergence_mode(const DomainSpec& d, complexd p,
                                                 const std::vector<double>& tGrid,
                                                 const ModeOptions& opts = {}) {
    if (!contains(d, p)) raise(errc::point_not_in_domain, "base point is not in the domain");
    for (std::size_t i = 0; i + 1 < tGrid.size(); ++i)
        if (!(tGrid[i] < tGrid[i + 1]))
            raise(errc::invalid_argument, "t grid must be strictly increasing");
    if (tGrid.size() < 4 || tGrid.back() < 1e3) return ConvergenceMode::Undetermined;

    std::vector<double> ratios;
    ratios.reserve(tGrid.size());
    for (double t : tGrid) {
        if (!(t > 0.0)) continue;
        const DeltaSample s = delta_pm(d, p, t);
        if (s.deltaMinus == 0.0 && s.deltaPlus == 0.0) continue;
        ratios.push_back(s.deltaMinus == 0.0 ? kInf : s.deltaPlus / s.deltaMinus);
    }
    if (ratios.size() < 4) return ConvergenceMode::Undetermined;

    const std::size_t tail_begin = ratios.size() / 2;
    bool nondecreasing = true, nonincreasing = true, bounded = true;
    for (std::size_t i = tail_begin; i < ratios.size(); ++i) {
        if (i > tail_begin) {
            if (ratios[i] < ratios[i - 1] * (1.0 - 1e-9)) nondecreasing = false;
            if (ratios[i] > ratios[i - 1] * (1.0 + 1e-9)) nonincreasing = false;
        }
        if (!(ratios[i] > opts.decay_threshold) || !(ratios[i] < opts.diverge_threshold))
            bounded = false;
    }
    if (nondecreasing && ratios.back() >= opts.diverge_threshold)
        return ConvergenceMode::TangentialMinus;
    if (nonincreasing && ratios.back() <= opts.decay_threshold)
        return ConvergenceMode::TangentialPlus;
    if (bounded) return ConvergenceMode::NonTangential;
    return ConvergenceMode::Undetermined;
}

}  // namespace kshift::domains
