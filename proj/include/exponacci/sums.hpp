#pragma once

#include "exponacci/core.hpp"

namespace exponacci {

/// Value of Gamma_n, the finite sum of alternating even-indexed (nu = 0) or
/// alternating odd-indexed (nu = 1) terms up to G_n.
struct GammaValue {
    long n = 0;
    int nu = 0; // n mod 2
    double value = 0.0;
};

/// Which of the three equivalent closed forms of a partial sum to evaluate.
enum class SumForm { A, B, C };

/// Branch tolerance for d == 1 in the geometric sum.
inline constexpr double kOneEps = 1e-12;

/// S_n(d) = sum_{k=0}^{n} d^k. S_{-1} is the empty sum, 0.
double geometric_sum(double d, long n);

/// sum_{k=0}^{n} G_k. Requires |a + b - 1| away from zero.
double partial_sum(const Params& params, const ClosedForm& cf, long n, SumForm form);

/// sum_{k=0}^{n} (-1)^k G_k. Requires |a - b + 1| away from zero.
double alternating_sum(const Params& params, const ClosedForm& cf, long n, SumForm form);

/// Gamma_n in closed form. Requires b != 0 (negative-index values enter at nu-2).
GammaValue gamma_n(const Params& params, const ClosedForm& cf, long n);

/// Homogeneous special case (c = 0): Gamma_n over the H-sequence of cf.
double gamma_horadam(const Params& params, const ClosedForm& cf, long n);

/// Large-n behaviour of Gamma_n for a given parity.
struct GammaLimit {
    bool divergent = false;
    double value = 0.0;       // the constant limit when gamma < 1
    double growth_base = 0.0; // gamma when divergent; envelope grows like gamma^{n+2}
                              // with alternating sign (-1)^{(n-nu)/2}
};
GammaLimit gamma_limit(const Params& params, const ClosedForm& cf, int nu);

} // namespace exponacci
