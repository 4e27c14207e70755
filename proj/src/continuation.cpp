#include "exponacci/continuation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "exponacci/kernels.hpp"

namespace exponacci {

namespace {

void require_real_powers(const Params& params, const ClosedForm& cf) {
    if (cf.alpha <= 0.0) throw NegativeBase("alpha <= 0");
    if (params.b / cf.alpha <= 0.0) throw NegativeBase("b/alpha <= 0");
    if (params.c != 0.0 && params.d < 0.0) throw NegativeBase("d < 0 with c != 0");
}

} // namespace

ComplexSample g_continuous(const Params& params, const ClosedForm& cf, double t) {
    require_real_powers(params, cf);
    if (t < 0.0) throw std::invalid_argument("g_continuous requires t >= 0");
    const double ratio = params.b / cf.alpha;
    const double envelope = cf.cap_b * std::pow(ratio, t);
    ComplexSample s;
    s.t = t;
    s.re = cf.cap_a * std::pow(cf.alpha, t) + envelope * std::cos(std::numbers::pi * t);
    if (cf.p != 0.0) s.re += cf.p * std::pow(params.d, t);
    s.im = envelope * std::sin(std::numbers::pi * t);
    return s;
}

CurveClass classify_curve(const Params& params, const ClosedForm& cf) {
    if (cf.alpha <= 0.0) throw NegativeBase("alpha <= 0");
    if (params.b / cf.alpha <= 0.0) throw NegativeBase("b/alpha <= 0");
    CurveClass c;
    c.ratio = params.b / cf.alpha;
    if (std::fabs(c.ratio - 1.0) <= kCyclicEps)
        c.kind = CurveKind::Boundary;
    else
        c.kind = c.ratio > 1.0 ? CurveKind::Spiral : CurveKind::Oscillatory;
    return c;
}

std::vector<ComplexSample> sample_curve(const Params& params, const ClosedForm& cf,
                                        double t_max, long steps) {
    if (t_max <= 0.0) throw std::invalid_argument("sample_curve requires t_max > 0");
    if (steps < 1) throw std::invalid_argument("sample_curve requires steps >= 1");
    require_real_powers(params, cf);
    return kernels::sample_curve(params, cf, t_max, steps);
}

} // namespace exponacci
