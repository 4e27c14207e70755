#pragma once

#include <vector>

#include "exponacci/core.hpp"

namespace exponacci {

/// One sample of the complex continuation G(t).
struct ComplexSample {
    double t = 0.0;
    double re = 0.0;
    double im = 0.0;
};

enum class CurveKind { Oscillatory, Spiral, Boundary };

/// Oscillatory for 0 < b/alpha < 1, Spiral for b/alpha > 1, Boundary at 1.
struct CurveClass {
    double ratio = 0.0; // b / alpha
    CurveKind kind = CurveKind::Oscillatory;
};

/// G(t) = (A alpha^t + B cos(pi t)(b/alpha)^t + p d^t) + i B sin(pi t)(b/alpha)^t,
/// for real t >= 0. Requires alpha > 0 and b/alpha > 0, and d >= 0 when c != 0.
ComplexSample g_continuous(const Params& params, const ClosedForm& cf, double t);

CurveClass classify_curve(const Params& params, const ClosedForm& cf);

/// steps+1 samples of G(t) at uniform spacing over [0, t_max], ordered by t.
std::vector<ComplexSample> sample_curve(const Params& params, const ClosedForm& cf,
                                        double t_max, long steps);

} // namespace exponacci
