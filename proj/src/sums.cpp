#include "exponacci/sums.hpp"

#include <cmath>

namespace exponacci {

namespace {

double sum_denominator_eps(const Params& params) {
    return 1e-9 * std::max({1.0, std::fabs(params.a), std::fabs(params.b)});
}

int alternating_sign(long n, int nu) {
    return ((n - nu) / 2) % 2 == 0 ? 1 : -1;
}

} // namespace

double geometric_sum(double d, long n) {
    if (n < 0) return 0.0;
    if (std::fabs(d - 1.0) <= kOneEps) return static_cast<double>(n + 1);
    return (std::pow(d, static_cast<double>(n + 1)) - 1.0) / (d - 1.0);
}

double partial_sum(const Params& params, const ClosedForm& cf, long n, SumForm form) {
    const double den = params.a + params.b - 1.0;
    if (std::fabs(den) <= sum_denominator_eps(params)) throw DegenerateDenominator("a + b - 1");
    const double a = params.a, b = params.b, c = params.c, d = params.d;
    switch (form) {
    case SumForm::A: {
        const double gn = g_closed(cf, params, n);
        const double gn1 = g_closed(cf, params, n + 1);
        return ((a - 1.0) * params.g0 - params.g1 + b * gn + gn1 - c * d * d * geometric_sum(d, n - 1)) / den;
    }
    case SumForm::B: {
        const double gn1 = g_closed(cf, params, n + 1);
        const double gn2 = g_closed(cf, params, n + 2);
        return ((a - 1.0) * (params.g0 - gn1) - params.g1 + gn2 - c * d * d * geometric_sum(d, n)) / den;
    }
    case SumForm::C: {
        const double hn = horadam_h(cf, params, n);
        const double hn1 = horadam_h(cf, params, n + 1);
        return ((a - 1.0) * cf.h0 - cf.h1 + b * hn + hn1) / den + cf.p * geometric_sum(d, n);
    }
    }
    return 0.0;
}

double alternating_sum(const Params& params, const ClosedForm& cf, long n, SumForm form) {
    const double den = params.a - params.b + 1.0;
    if (std::fabs(den) <= sum_denominator_eps(params)) throw DegenerateDenominator("a - b + 1");
    const double a = params.a, b = params.b, c = params.c, d = params.d;
    const double sn = (n % 2 == 0) ? 1.0 : -1.0; // (-1)^n
    switch (form) {
    case SumForm::A: {
        const double gn = g_closed(cf, params, n);
        const double gn1 = g_closed(cf, params, n + 1);
        return ((a + 1.0) * params.g0 - params.g1 + sn * (gn1 - b * gn) + c * d * d * geometric_sum(-d, n - 1)) / den;
    }
    case SumForm::B: {
        const double gn1 = g_closed(cf, params, n + 1);
        const double gn2 = g_closed(cf, params, n + 2);
        return ((a + 1.0) * (params.g0 + sn * gn1) - params.g1 - sn * gn2 + c * d * d * geometric_sum(-d, n)) / den;
    }
    case SumForm::C: {
        const double hn = horadam_h(cf, params, n);
        const double hn1 = horadam_h(cf, params, n + 1);
        return ((a + 1.0) * cf.h0 - cf.h1 + sn * (hn1 - b * hn)) / den + cf.p * geometric_sum(-d, n);
    }
    }
    return 0.0;
}

GammaValue gamma_n(const Params& params, const ClosedForm& cf, long n) {
    if (params.b == 0.0) throw ZeroB();
    const int nu = static_cast<int>(n % 2);
    const double s = alternating_sign(n, nu);
    const double b2 = params.b * params.b;
    const double den = params.a * params.a + (params.b + 1.0) * (params.b + 1.0);
    const double d = params.d;

    const double gn2 = g_closed(cf, params, n + 2);
    const double gn = g_closed(cf, params, n);
    const double gnu = g_closed(cf, params, nu);
    const double gnum2 = g_closed(cf, params, nu - 2);

    double value = s * (gn2 + b2 * gn) + gnu + b2 * gnum2;
    if (params.c != 0.0) {
        const double q = params.c * (d * d + params.a * d - params.b) / (d * d + 1.0);
        value -= q * (s * std::pow(d, static_cast<double>(n + 2)) + std::pow(d, static_cast<double>(nu)));
    }
    return GammaValue{n, nu, value / den};
}

double gamma_horadam(const Params& params, const ClosedForm& cf, long n) {
    if (params.b == 0.0) throw ZeroB();
    const int nu = static_cast<int>(n % 2);
    const double s = alternating_sign(n, nu);
    const double b2 = params.b * params.b;
    const double den = params.a * params.a + (params.b + 1.0) * (params.b + 1.0);

    const double hn2 = horadam_h(cf, params, n + 2);
    const double hn = horadam_h(cf, params, n);
    const double hnu = horadam_h(cf, params, nu);
    const double hnum2 = horadam_h(cf, params, nu - 2);
    return (s * (hn2 + b2 * hn) + hnu + b2 * hnum2) / den;
}

GammaLimit gamma_limit(const Params& params, const ClosedForm& cf, int nu) {
    if (params.b == 0.0) throw ZeroB();
    const Classification cl = classify(params, cf);
    GammaLimit out;
    if (cl.gamma >= 1.0 - kCyclicEps) {
        out.divergent = true;
        out.growth_base = cl.gamma;
        return out;
    }
    const double b2 = params.b * params.b;
    const double den = params.a * params.a + (params.b + 1.0) * (params.b + 1.0);
    const double d = params.d;
    double value = g_closed(cf, params, nu) + b2 * g_closed(cf, params, nu - 2);
    if (params.c != 0.0) {
        const double q = params.c * (d * d + params.a * d - params.b) / (d * d + 1.0);
        value -= q * std::pow(d, static_cast<double>(nu));
    }
    out.value = value / den;
    return out;
}

} // namespace exponacci
