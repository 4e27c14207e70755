#pragma once

#include <array>
#include <utility>

#include "exponacci/errors.hpp"

namespace exponacci {

/// Parameter six-tuple of the recurrence G_n = a*G_{n-1} + b*G_{n-2} + c*d^n.
///
/// Two validity conditions apply throughout the library:
///   restriction 1:  a^2 + 4b > 0          (real, distinct characteristic roots)
///   restriction 2:  d^2 - a*d - b != 0    (exponential base distinct from both roots)
struct Params {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double g0 = 0.0;
    double g1 = 0.0;

    double discriminant() const { return a * a + 4.0 * b; }
    double particular_denominator() const { return d * d - a * d - b; }

    bool restriction1_ok() const { return discriminant() > 0.0; }
    bool restriction2_ok() const;

    /// Throws if either restriction fails.
    void validate() const;
};

/// Constants of the explicit solution G_n = A*alpha^n + B*beta^n + p*d^n.
struct ClosedForm {
    double alpha = 0.0; // larger characteristic root
    double beta = 0.0;  // smaller characteristic root
    double p = 0.0;     // particular amplitude c*d^2 / (d^2 - a*d - b)
    double cap_a = 0.0; // A
    double cap_b = 0.0; // B
    double h0 = 0.0;    // G_0 - p
    double h1 = 0.0;    // G_1 - p*d
};

enum class Winding { Outwinding, Inwinding, Cyclic };

struct Classification {
    double gamma = 0.0; // max{|alpha|, |beta|, |d|}
    Winding winding = Winding::Outwinding;
    bool restriction1_ok = false;
    bool restriction2_ok = false;
    bool in_paper_sign_domain = false; // a,b > 0 and c,d >= 0
};

/// Tolerance for the cyclic boundary |gamma - 1|.
inline constexpr double kCyclicEps = 1e-12;

inline bool Params::restriction2_ok() const {
    constexpr double eps = 1e-9;
    const double dd = d * d;
    const double ad = a * d > 0 ? a * d : -(a * d);
    const double ab = b > 0 ? b : -b;
    double scale = 1.0;
    if (dd > scale) scale = dd;
    if (ad > scale) scale = ad;
    if (ab > scale) scale = ab;
    const double den = particular_denominator();
    return (den > 0 ? den : -den) > eps * scale;
}

/// Roots of lambda^2 - a*lambda - b = 0, returned as (alpha, beta) with alpha > beta.
std::pair<double, double> characteristic_roots(const Params& params);

/// Full constant set of the explicit solution. Throws on restriction violations.
ClosedForm solve_closed_form(const Params& params);

/// Brute-force forward iteration of the recurrence; the oracle everything else is
/// checked against. n must be >= 0.
double g_iterative(const Params& params, long n);

/// Explicit solution A*alpha^n + B*beta^n + p*d^n for any integer n.
double g_closed(const ClosedForm& cf, const Params& params, long n);

/// G_{-1} and G_{-2} from the backward-run recurrence. Requires b != 0.
struct NegativePair {
    double g_minus1 = 0.0;
    double g_minus2 = 0.0;
};
NegativePair g_negative_recursion(const Params& params);

/// G_{-n} (n >= 1) obtained by literally running the recurrence backwards.
double g_backward(const Params& params, long n);

/// Transformed value H_n = G_n - p*d^n; satisfies the homogeneous recurrence.
double horadam_h(const ClosedForm& cf, const Params& params, long n);

/// Fundamental sequence h_n = (alpha^n - beta^n) / (alpha - beta), h_0 = 0, h_1 = 1.
double fundamental_h(const Params& params, long n);

struct Mat2 {
    double m00 = 0.0, m01 = 0.0;
    double m10 = 0.0, m11 = 0.0;
};

/// n-th power (n >= 1) of the system matrix ((a, b), (1, 0)) by repeated squaring.
/// Entries equal (h_{n+1}, b*h_n; h_n, b*h_{n-1}).
Mat2 matrix_power(const Params& params, long n);

/// G_n rebuilt from fundamental values:
/// h_n*G_1 + b*h_{n-1}*G_0 + p*(d^n - d*h_n - b*h_{n-1}), for n >= 1.
double decompose(const Params& params, const ClosedForm& cf, long n);

Classification classify(const Params& params, const ClosedForm& cf);

} // namespace exponacci
