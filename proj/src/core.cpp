#include "exponacci/core.hpp"

#include <cmath>

namespace exponacci {

void Params::validate() const {
    if (!restriction1_ok()) throw NonPositiveDiscriminant(discriminant());
    if (!restriction2_ok()) throw DegenerateExponentialBase(std::fabs(particular_denominator()));
}

std::pair<double, double> characteristic_roots(const Params& params) {
    const double disc = params.discriminant();
    if (disc <= 0.0) throw NonPositiveDiscriminant(disc);
    const double s = std::sqrt(disc);
    return {(params.a + s) / 2.0, (params.a - s) / 2.0};
}

ClosedForm solve_closed_form(const Params& params) {
    auto [alpha, beta] = characteristic_roots(params);
    ClosedForm cf;
    cf.alpha = alpha;
    cf.beta = beta;
    if (params.c != 0.0) {
        if (!params.restriction2_ok())
            throw DegenerateExponentialBase(std::fabs(params.particular_denominator()));
        cf.p = params.c * params.d * params.d / params.particular_denominator();
    } else {
        cf.p = 0.0;
    }
    cf.h0 = params.g0 - cf.p;
    cf.h1 = params.g1 - cf.p * params.d;
    const double span = alpha - beta; // sqrt(a^2 + 4b) > 0
    cf.cap_a = (cf.h1 - cf.h0 * beta) / span;
    cf.cap_b = -(cf.h1 - cf.h0 * alpha) / span;
    return cf;
}

double g_iterative(const Params& params, long n) {
    if (n == 0) return params.g0;
    if (n == 1) return params.g1;
    double prev2 = params.g0;
    double prev1 = params.g1;
    for (long k = 2; k <= n; ++k) {
        const double input = params.c == 0.0
                                 ? 0.0
                                 : params.c * std::pow(params.d, static_cast<double>(k));
        const double g = params.a * prev1 + params.b * prev2 + input;
        prev2 = prev1;
        prev1 = g;
    }
    return prev1;
}

double g_closed(const ClosedForm& cf, const Params& params, long n) {
    if (n < 0 && cf.p != 0.0 && params.d == 0.0) throw UndefinedNegativePower();
    const double t = static_cast<double>(n);
    double value = cf.cap_a * std::pow(cf.alpha, t) + cf.cap_b * std::pow(cf.beta, t);
    if (cf.p != 0.0) value += cf.p * std::pow(params.d, t);
    return value;
}

NegativePair g_negative_recursion(const Params& params) {
    if (params.b == 0.0) throw ZeroB();
    NegativePair out;
    out.g_minus1 = (params.g1 - params.a * params.g0 - params.c * params.d) / params.b;
    out.g_minus2 = ((params.a * params.a + params.b) * params.g0 - params.a * params.g1 +
                    params.c * (params.a * params.d - params.b)) /
                   (params.b * params.b);
    return out;
}

double g_backward(const Params& params, long n) {
    if (params.b == 0.0) throw ZeroB();
    // G_{-m} = (G_{-m+2} - a*G_{-m+1} - c*d^{-m+2}) / b, walked down from (G_1, G_0).
    double upper = params.g1; // G_{-m+2}
    double lower = params.g0; // G_{-m+1}
    for (long m = 1; m <= n; ++m) {
        const double input =
            params.c == 0.0 ? 0.0 : params.c * std::pow(params.d, static_cast<double>(-m + 2));
        const double g = (upper - params.a * lower - input) / params.b;
        upper = lower;
        lower = g;
    }
    return lower;
}

double horadam_h(const ClosedForm& cf, const Params& params, long n) {
    if (cf.p == 0.0) return g_closed(cf, params, n);
    return g_closed(cf, params, n) - cf.p * std::pow(params.d, static_cast<double>(n));
}

double fundamental_h(const Params& params, long n) {
    auto [alpha, beta] = characteristic_roots(params);
    const double t = static_cast<double>(n);
    return (std::pow(alpha, t) - std::pow(beta, t)) / (alpha - beta);
}

namespace {

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    Mat2 r;
    r.m00 = x.m00 * y.m00 + x.m01 * y.m10;
    r.m01 = x.m00 * y.m01 + x.m01 * y.m11;
    r.m10 = x.m10 * y.m00 + x.m11 * y.m10;
    r.m11 = x.m10 * y.m01 + x.m11 * y.m11;
    return r;
}

} // namespace

Mat2 matrix_power(const Params& params, long n) {
    Mat2 base{params.a, params.b, 1.0, 0.0};
    Mat2 result{1.0, 0.0, 0.0, 1.0};
    long e = n;
    while (e > 0) {
        if (e & 1) result = mat_mul(result, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return result;
}

double decompose(const Params& params, const ClosedForm& cf, long n) {
    const double hn = fundamental_h(params, n);
    const double hn1 = fundamental_h(params, n - 1);
    double value = hn * params.g1 + params.b * hn1 * params.g0;
    if (cf.p != 0.0) {
        const double dn = std::pow(params.d, static_cast<double>(n));
        value += cf.p * (dn - params.d * hn - params.b * hn1);
    }
    return value;
}

Classification classify(const Params& params, const ClosedForm& cf) {
    Classification cl;
    cl.gamma = std::max({std::fabs(cf.alpha), std::fabs(cf.beta), std::fabs(params.d)});
    if (std::fabs(cl.gamma - 1.0) <= kCyclicEps)
        cl.winding = Winding::Cyclic;
    else
        cl.winding = cl.gamma > 1.0 ? Winding::Outwinding : Winding::Inwinding;
    cl.restriction1_ok = params.restriction1_ok();
    cl.restriction2_ok = params.restriction2_ok();
    cl.in_paper_sign_domain = params.a > 0.0 && params.b > 0.0 && params.c >= 0.0 && params.d >= 0.0;
    return cl;
}

} // namespace exponacci
