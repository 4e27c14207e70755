#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "exponacci/continuation.hpp"
#include "exponacci/core.hpp"
#include "exponacci/identities.hpp"

namespace exponacci::kernels {

/// Data-parallel kernels used for the bulk operations, with serial reference
/// implementations kept alongside. The parallel versions write results by
/// index, so serial and parallel output is bit-identical.

/// Gamma_0 .. Gamma_{n_max} via the closed form. out.size() must be n_max + 1.
void gamma_table(const Params& params, const ClosedForm& cf, std::span<double> out);
void gamma_table_serial(const Params& params, const ClosedForm& cf, std::span<double> out);

/// Uniform samples of G(t) over [0, t_max], steps + 1 entries.
std::vector<ComplexSample> sample_curve(const Params& params, const ClosedForm& cf,
                                        double t_max, long steps);
std::vector<ComplexSample> sample_curve_serial(const Params& params, const ClosedForm& cf,
                                               double t_max, long steps);

/// Fuzz one identity over `samples` deterministic parameter/index draws and
/// reduce to the worst relative residual.
IdentityReport fuzz_identity(IdentityKind kind, std::uint64_t seed, long samples,
                             bool perturbed = false);
IdentityReport fuzz_identity_serial(IdentityKind kind, std::uint64_t seed, long samples,
                                    bool perturbed = false);

/// Fraction of fuzz samples whose residual exceeds `tolerance`.
double fuzz_failure_fraction(IdentityKind kind, std::uint64_t seed, long samples,
                             double tolerance, bool perturbed);

} // namespace exponacci::kernels
