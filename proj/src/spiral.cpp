#include "exponacci/spiral.hpp"

#include <cmath>
#include <numbers>

#include "exponacci/kernels.hpp"

namespace exponacci {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double gamma_of(const Params& params, const ClosedForm& cf) {
    return std::max({std::fabs(cf.alpha), std::fabs(cf.beta), std::fabs(params.d)});
}

Vec2 line_intersection(const Vec2& p, double s1, const Vec2& q, double s2) {
    const double x = (q.y - p.y + s1 * p.x - s2 * q.x) / (s1 - s2);
    return {x, s1 * (x - p.x) + p.y};
}

Vec2 corner_at(const Params& params, const ClosedForm& cf, long n) {
    const double gn = gamma_or_zero(params, cf, n);
    const double gn1 = gamma_or_zero(params, cf, n - 1);
    return (n % 2 == 0) ? Vec2{gn, gn1} : Vec2{gn1, gn};
}

std::vector<Vec2> sample_arc(const ArcSpec& spec) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(spec.samples) + 1);
    for (int i = 0; i <= spec.samples; ++i) {
        const double phi =
            (static_cast<double>(spec.n) + static_cast<double>(i) / spec.samples) * kHalfPi;
        pts.push_back({spec.center.x + spec.e_x * std::cos(phi),
                       spec.center.y + spec.e_y * std::sin(phi)});
    }
    return pts;
}

} // namespace

double gamma_or_zero(const Params& params, const ClosedForm& cf, long m) {
    if (m < 0) return 0.0;
    return gamma_n(params, cf, m).value;
}

std::vector<CornerPoint> corner_points(const Params& params, const ClosedForm& cf, long n_max) {
    std::vector<CornerPoint> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        const Vec2 v = corner_at(params, cf, n);
        out.push_back({n, v.x, v.y, static_cast<int>(n % 4)});
    }
    return out;
}

std::vector<double> segment_lengths(std::span<const CornerPoint> points) {
    std::vector<double> out;
    if (points.size() < 2) return out;
    out.reserve(points.size() - 1);
    for (std::size_t k = 1; k < points.size(); ++k)
        out.push_back(std::hypot(points[k].x - points[k - 1].x, points[k].y - points[k - 1].y));
    return out;
}

std::pair<double, double> asymptote_slopes(const Classification& classification) {
    if (classification.gamma == 0.0) throw ZeroGamma();
    return {-1.0 / classification.gamma, classification.gamma};
}

Vec2 intersection_point(const Params& params, const ClosedForm& cf) {
    const NegativePair neg = g_negative_recursion(params);
    const double b2 = params.b * params.b;
    const double den = params.a * params.a + (params.b + 1.0) * (params.b + 1.0);
    double qx = 0.0, qy = 0.0;
    if (params.c != 0.0) {
        const double d = params.d;
        const double q = params.c * (d * d + params.a * d - params.b) / (d * d + 1.0);
        qx = q;
        qy = q * d;
    }
    return {(params.g0 + b2 * neg.g_minus2 - qx) / den, (params.g1 + b2 * neg.g_minus1 - qy) / den};
}

bool intersection_converges(const Params& params, const ClosedForm& cf) {
    const double gamma = gamma_of(params, cf);
    if (gamma < 1.0) return true;
    return (cf.alpha > 1.0) != (params.d > 1.0);
}

IntersectionResult intersection_quadruple(const Params& params, const ClosedForm& cf, long n) {
    const double gamma = gamma_of(params, cf);
    if (gamma <= 1.0) throw NotOutwinding();
    const double slope_even = -1.0 / gamma;
    const double slope_odd = gamma;

    IntersectionResult result;
    result.p_star = intersection_point(params, cf);
    result.converged = intersection_converges(params, cf);

    std::array<Vec2, 4> quad;
    for (long j = 0; j < 4; ++j) {
        const long idx = n + j;
        const Vec2 pj = corner_at(params, cf, idx);
        const Vec2 pj1 = corner_at(params, cf, idx + 1);
        const double s1 = (idx % 2 == 0) ? slope_even : slope_odd;
        const double s2 = (idx % 2 == 0) ? slope_odd : slope_even;
        quad[static_cast<std::size_t>(j)] = line_intersection(pj, s1, pj1, s2);
    }
    result.quadruple = quad;
    return result;
}

double total_length_inwinding(const Params& params, const ClosedForm& cf) {
    if (gamma_of(params, cf) >= 1.0) throw NotInwinding();
    const double den = params.a + params.b - 1.0;
    if (std::fabs(den) <= 1e-9 * std::max({1.0, std::fabs(params.a), std::fabs(params.b)}))
        throw DegenerateDenominator("a + b - 1");
    double value = (params.a - 1.0) * params.g0 - params.g1;
    if (params.c != 0.0) value -= params.c * params.d * params.d / (1.0 - params.d);
    return value / den;
}

ArcSpec arc_spec_outwinding(const Params& params, const ClosedForm& cf, long n, int samples) {
    ArcSpec spec;
    spec.n = n;
    spec.samples = samples;
    spec.phi_begin = static_cast<double>(n) * kHalfPi;
    spec.phi_end = static_cast<double>(n + 1) * kHalfPi;
    const double gn = g_closed(cf, params, n);
    const double span = g_closed(cf, params, n + 1) - g_closed(cf, params, n - 1);
    // Center (Gamma_{n-2}, Gamma_{n-3}) for n even, swapped for odd. With the
    // Gamma_{m<0} = 0 convention this covers arcs 1 and 2 with their fixed
    // starting points (0, G_1) and (G_0 - G_2, 0).
    const double ge = gamma_or_zero(params, cf, n - 2);
    const double go = gamma_or_zero(params, cf, n - 3);
    if (n % 2 == 0) {
        spec.center = {ge, go};
        spec.e_x = gn;
        spec.e_y = span;
    } else {
        spec.center = {go, ge};
        spec.e_x = span;
        spec.e_y = gn;
    }
    return spec;
}

ArcSpec arc_spec_inwinding(const Params& params, const ClosedForm& cf, long n, int samples) {
    if (gamma_of(params, cf) >= 1.0) throw NotInwinding();
    ArcSpec spec;
    spec.n = n;
    spec.samples = samples;
    spec.phi_begin = static_cast<double>(n) * kHalfPi;
    spec.phi_end = static_cast<double>(n + 1) * kHalfPi;
    const double radial = std::fabs(g_closed(cf, params, n + 4) - g_closed(cf, params, n + 2));
    const double gn3 = g_closed(cf, params, n + 3);
    const double ge = gamma_or_zero(params, cf, n + 4);
    const double go = gamma_or_zero(params, cf, n + 3);
    if (n % 2 == 0) {
        spec.center = {ge, go};
        spec.e_x = radial;
        spec.e_y = gn3;
    } else {
        spec.center = {go, ge};
        spec.e_x = gn3;
        spec.e_y = radial;
    }
    return spec;
}

std::vector<Vec2> arc_points_outwinding(const Params& params, const ClosedForm& cf, long n, int samples) {
    return sample_arc(arc_spec_outwinding(params, cf, n, samples));
}

std::vector<Vec2> arc_points_inwinding(const Params& params, const ClosedForm& cf, long n, int samples) {
    return sample_arc(arc_spec_inwinding(params, cf, n, samples));
}

double ellipticity(const Params& params, const ClosedForm& cf, long n, Winding winding) {
    double e_x, e_y;
    if (winding == Winding::Inwinding) {
        const ArcSpec spec = arc_spec_inwinding(params, cf, n, 2);
        e_x = (n % 2 == 0) ? spec.e_x : spec.e_y; // |G_{n+4} - G_{n+2}|
        e_y = (n % 2 == 0) ? spec.e_y : spec.e_x; // G_{n+3}
    } else {
        const double gn = g_closed(cf, params, n);
        const double span = g_closed(cf, params, n + 1) - g_closed(cf, params, n - 1);
        e_x = gn;
        e_y = span;
    }
    if (e_x == 0.0) throw ZeroDenominator();
    return 1.0 - e_y / e_x;
}

std::vector<Vec2> arc_points_large_n(const Params& params, const ClosedForm& cf, long n, int samples) {
    const double gamma = gamma_of(params, cf);
    ArcSpec spec;
    spec.n = n;
    spec.samples = samples;
    const double ge = gamma_or_zero(params, cf, n - 2);
    const double go = gamma_or_zero(params, cf, n - 3);
    const double radius_n = std::pow(gamma, static_cast<double>(n));
    if (n % 2 == 0) {
        spec.center = {ge, go};
        spec.e_x = radius_n;
        spec.e_y = radius_n * gamma;
    } else {
        spec.center = {go, ge};
        spec.e_x = radius_n * gamma;
        spec.e_y = radius_n;
    }
    return sample_arc(spec);
}

std::vector<SpiralPoint3> spatial_points(const Params& params, const ClosedForm& cf,
                                         std::span<const TaggedPoint> planar, int samples,
                                         ZMode z_mode, AmplitudeMode amplitude_mode) {
    const double amp = amplitude_mode == AmplitudeMode::UseP ? cf.p : params.c;
    std::vector<SpiralPoint3> out;
    out.reserve(planar.size());
    for (const TaggedPoint& pt : planar) {
        const double frac = static_cast<double>(pt.n) + static_cast<double>(pt.i) / samples;
        double z = 0.0;
        switch (z_mode) {
        case ZMode::Linear:
            z = frac;
            break;
        case ZMode::LocalInput:
            z = amp * std::pow(params.d, frac);
            break;
        case ZMode::Cumulative:
            if (std::fabs(params.d - 1.0) <= kOneEps)
                z = amp * (frac + 1.0);
            else
                z = amp * (std::pow(params.d, frac + 1.0) - 1.0) / (params.d - 1.0);
            break;
        }
        out.push_back({pt.x, pt.y, z});
    }
    return out;
}

} // namespace exponacci
