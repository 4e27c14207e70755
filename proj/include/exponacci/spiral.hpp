#pragma once

#include <optional>
#include <span>
#include <vector>

#include "exponacci/core.hpp"
#include "exponacci/sums.hpp"

namespace exponacci {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Corner point P_n of the rectangular spiral. Coordinates come from Gamma
/// values: (Gamma_n, Gamma_{n-1}) for even n, swapped for odd n, with
/// Gamma_{-1} taken as 0 so that P_0 = (G_0, 0).
struct CornerPoint {
    long n = 0;
    double x = 0.0;
    double y = 0.0;
    int directional_index = 0; // n mod 4
};

/// Quarter-ellipse descriptor for arc number n.
struct ArcSpec {
    long n = 1;
    Vec2 center;
    double e_x = 0.0;
    double e_y = 0.0;
    double phi_begin = 0.0; // n * pi/2
    double phi_end = 0.0;   // (n + 1) * pi/2
    int samples = 2;
};

struct SpiralPoint3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Planar arc point tagged with its arc number and sample index, as consumed
/// by spatial_points.
struct TaggedPoint {
    long n = 1;
    int i = 0;
    double x = 0.0;
    double y = 0.0;
};

enum class ZMode { Linear, LocalInput, Cumulative };
enum class AmplitudeMode { UseC, UseP };

struct IntersectionResult {
    Vec2 p_star;
    std::optional<std::array<Vec2, 4>> quadruple;
    bool converged = false;
};

/// Gamma_m with the geometric convention Gamma_m = 0 for m < 0.
double gamma_or_zero(const Params& params, const ClosedForm& cf, long m);

/// Corner points P_0 .. P_{n_max}.
std::vector<CornerPoint> corner_points(const Params& params, const ClosedForm& cf, long n_max);

/// Euclidean distances between successive points; entry k is |P_k P_{k+1}|.
std::vector<double> segment_lengths(std::span<const CornerPoint> points);

/// Asymptote slopes (-1/gamma, gamma) for even- and odd-indexed directional
/// corner points. Their product is exactly -1.
std::pair<double, double> asymptote_slopes(const Classification& classification);

/// The intersection point P* of the two orthogonal asymptotes.
Vec2 intersection_point(const Params& params, const ClosedForm& cf);

/// Whether P* is an actual point of convergence / fixed intersection:
/// gamma < 1, or exactly one of alpha and d exceeds 1.
bool intersection_converges(const Params& params, const ClosedForm& cf);

/// The four j-indexed approximate intersections at index n (outwinding only),
/// obtained by crossing the asymptote-sloped lines through consecutive corner
/// points P_{n+j} and P_{n+j+1}.
IntersectionResult intersection_quadruple(const Params& params, const ClosedForm& cf, long n);

/// Total length of an inwinding spiral: the convergent sum of all segment
/// lengths, (1/(a+b-1)) ((a-1)G_0 - G_1 - c d^2/(1-d)).
double total_length_inwinding(const Params& params, const ClosedForm& cf);

/// Quarter-ellipse descriptor for arc n of an outwinding spiral (center
/// P_{n-2}) or an inwinding spiral (center P_{n+4}).
ArcSpec arc_spec_outwinding(const Params& params, const ClosedForm& cf, long n, int samples);
ArcSpec arc_spec_inwinding(const Params& params, const ClosedForm& cf, long n, int samples);

/// N+1 sampled points of the n-th quarter-ellipse arc.
std::vector<Vec2> arc_points_outwinding(const Params& params, const ClosedForm& cf, long n, int samples);
std::vector<Vec2> arc_points_inwinding(const Params& params, const ClosedForm& cf, long n, int samples);

/// Deviation of the n-th arc from a circle: 1 - e_y/e_x of its spec.
double ellipticity(const Params& params, const ClosedForm& cf, long n, Winding winding);

/// Geometric-spiral approximation of the n-th arc, with semi-axes gamma^n and
/// gamma^{n+1} in place of the exact ones.
std::vector<Vec2> arc_points_large_n(const Params& params, const ClosedForm& cf, long n, int samples);

/// Lifts tagged planar points to 3D with the chosen height rule. `samples` is
/// the per-arc sample count N used in the i/N fraction.
std::vector<SpiralPoint3> spatial_points(const Params& params, const ClosedForm& cf,
                                         std::span<const TaggedPoint> planar, int samples,
                                         ZMode z_mode, AmplitudeMode amplitude_mode);

} // namespace exponacci
