#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <utility>

#include "kshift/errors.hpp"

namespace kshift::hypgeom {

using complexd = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this the log-form distance saturates: 1-rho has underflowed and the
// points are indistinguishable from boundary points in double precision.
inline constexpr double kBoundaryUnderflow = 1e-300;

/// Point of the open unit disc.
struct DiscPoint {
    double re = 0.0;
    double im = 0.0;

    DiscPoint() = default;
    DiscPoint(double re_, double im_) : re(re_), im(im_) {
        if (!std::isfinite(re) || !std::isfinite(im) || re * re + im * im >= 1.0)
            raise(errc::non_interior, "point is not in the open unit disc");
    }
    explicit DiscPoint(complexd z) : DiscPoint(z.real(), z.imag()) {}

    complexd value() const { return {re, im}; }
    double abs() const { return std::hypot(re, im); }
};

/// Point of the right half-plane Re w > 0.
struct HalfPlanePoint {
    double re = 1.0;
    double im = 0.0;

    HalfPlanePoint() = default;
    HalfPlanePoint(double re_, double im_) : re(re_), im(im_) {
        if (!std::isfinite(re) || !std::isfinite(im) || re <= 0.0)
            raise(errc::non_interior, "point is not in the open right half-plane");
    }
    explicit HalfPlanePoint(complexd w) : HalfPlanePoint(w.real(), w.imag()) {}

    complexd value() const { return {re, im}; }
};

/// Boundary point tau = e^{i angle}; the canonical choice is angle = 0.
struct BoundaryPoint {
    double angle = 0.0;

    BoundaryPoint() = default;
    explicit BoundaryPoint(double a) : angle(a) {
        if (!std::isfinite(a)) raise(errc::invalid_argument, "boundary angle must be finite");
    }

    complexd value() const { return {std::cos(angle), std::sin(angle)}; }
};

/// Symmetric sector W0 = {|arg z| < halfAngle} translated to start at vertex.
struct SectorParams {
    double halfAngle;
    double vertex;

    SectorParams(double halfAngle_, double vertex_) : halfAngle(halfAngle_), vertex(vertex_) {
        if (!(halfAngle > 0.0) || !(halfAngle < M_PI / 2.0))
            raise(errc::bad_angle, "half angle must lie in (0, pi/2)");
        if (!(vertex > 0.0)) raise(errc::invalid_argument, "vertex must be positive");
    }
};

namespace detail {

// 1/2 log((1+rho)/(1-rho)) with the +inf saturation convention.
inline double log_form(double rho) {
    const double one_minus = 1.0 - rho;
    if (one_minus < kBoundaryUnderflow) return kInf;
    return 0.5 * std::log((1.0 + rho) / one_minus);
}

}  // namespace detail

/// Poincare distance on the unit disc, k(z,w) = 1/2 log((1+p)/(1-p)),
/// p = |(w-z)/(1-conj(w)z)|.
inline double disc_distance(const DiscPoint& z, const DiscPoint& w) {
    const complexd zv = z.value();
    const complexd wv = w.value();
    const double p = std::abs((wv - zv) / (1.0 - std::conj(wv) * zv));
    return detail::log_form(p);
}

/// Hyperbolic distance on the right half-plane via the Cayley-pullback form
/// rho = |z-w| / |z+conj(w)|. On positive reals s1 < s2 this is 1/2 log(s2/s1).
inline double halfplane_distance(const HalfPlanePoint& z, const HalfPlanePoint& w) {
    const complexd zv = z.value();
    const complexd wv = w.value();
    const double rho = std::abs(zv - wv) / std::abs(zv + std::conj(wv));
    return detail::log_form(rho);
}

/// Numerically stable twin of halfplane_distance,
/// k = 1/2 acosh(1 + |z-w|^2 / (2 Re z Re w)).
/// Agrees with the log form away from the boundary; usable for |w| far beyond
/// the range where 1-rho is representable.
inline double halfplane_distance_acosh(complexd z, complexd w) {
    if (!(z.real() > 0.0) || !(w.real() > 0.0))
        raise(errc::non_interior, "points must lie in the open right half-plane");
    const double d2 = std::norm(z - w);
    return 0.5 * std::acosh(1.0 + d2 / (2.0 * z.real() * w.real()));
}

/// Cayley transform C_tau(z) = (tau+z)/(tau-z), mapping the disc onto the
/// right half-plane with C_tau(0) = 1.
inline HalfPlanePoint cayley(const BoundaryPoint& tau, const DiscPoint& z) {
    const complexd t = tau.value();
    const complexd zv = z.value();
    const complexd den = t - zv;
    if (std::abs(den) < kBoundaryUnderflow) raise(errc::singular, "z coincides with tau");
    return HalfPlanePoint((t + zv) / den);
}

/// Inverse Cayley transform, z = tau (w-1)/(w+1).
inline DiscPoint cayley_inverse(const BoundaryPoint& tau, const HalfPlanePoint& w) {
    const complexd t = tau.value();
    const complexd wv = w.value();
    return DiscPoint(t * (wv - 1.0) / (wv + 1.0));
}

/// Horocycle membership: |tau - z|^2 < R (1 - |z|^2).
inline bool horocycle_contains(const BoundaryPoint& tau, double R, const DiscPoint& z) {
    if (!(R > 0.0)) raise(errc::non_positive_radius, "horocycle radius must be positive");
    const double lhs = std::norm(tau.value() - z.value());
    const double rhs = R * (1.0 - (z.re * z.re + z.im * z.im));
    return lhs < rhs;
}

/// Stolz region membership: |tau - z| < R (1 - |z|), R > 1.
inline bool stolz_contains(const BoundaryPoint& tau, double R, const DiscPoint& z) {
    if (!(R > 1.0)) raise(errc::amplitude_too_small, "Stolz amplitude must exceed 1");
    const double lhs = std::abs(tau.value() - z.value());
    const double rhs = R * (1.0 - z.abs());
    return lhs < rhs;
}

/// Distance along the real axis of the translated sector vertex + W0,
/// k(s1, s2) = (pi / (4 halfAngle)) log((s2 - vertex)/(s1 - vertex)).
inline double sector_distance(const SectorParams& params, double s1, double s2) {
    if (s2 < s1) std::swap(s1, s2);
    if (!(s1 > params.vertex)) raise(errc::out_of_sector, "points must lie beyond the sector vertex");
    return (M_PI / (4.0 * params.halfAngle)) * std::log((s2 - params.vertex) / (s1 - params.vertex));
}

/// Quasi-geodesic constants A = pi/(2 b0), B = (pi log 2)/(4 b0) for the real
/// half-line in a domain containing a translated symmetric sector of half
/// angle b0.
inline std::pair<double, double> quasi_geodesic_constants(double beta0) {
    if (!(beta0 > 0.0) || !(beta0 < M_PI / 2.0))
        raise(errc::bad_angle, "beta0 must lie in (0, pi/2)");
    const double a = M_PI / (2.0 * beta0);
    const double b = (M_PI / (4.0 * beta0)) * std::log(2.0);
    return {a, b};
}

/// Hyperbolic projection of w onto the geodesic (0, +inf) of the right
/// half-plane, i.e. the positive real axis: the projection is |w|.
inline double diameter_projection(const HalfPlanePoint& w) {
    return std::hypot(w.re, w.im);
}

}  // namespace kshift::hypgeom
