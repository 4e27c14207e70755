#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "exponacci/core.hpp"

namespace exponacci {

/// Outcome of a fuzz run over one identity.
struct IdentityReport {
    std::string name;
    long samples = 0;
    double max_rel_residual = 0.0;
    Params worst_params;
    std::array<long, 3> worst_indices{0, 0, 0};
};

/// Left side of the product difference identity,
/// G_{n+u}*G_{n+v} - G_{n+u+v}*G_n.
double product_difference_lhs(const Params& params, const ClosedForm& cf, long n, long u, long v);

/// Right side of the product difference identity,
/// (-1)^{n+1} b^n A B (alpha^u - beta^u)(alpha^v - beta^v)
///   + p d^{n+u+v} { G_{n+u} d^{-u} + G_{n+v} d^{-v} - G_{n+u+v} d^{-u-v} - G_n }.
double product_difference_rhs(const Params& params, const ClosedForm& cf, long n, long u, long v);

/// The first right-hand term in its fundamental form,
/// (-b)^n (H_1 - H_0 alpha)(H_1 - H_0 beta) h_u h_v. Equals the A*B form exactly.
double product_difference_rhs_fundamental_term(const Params& params, const ClosedForm& cf,
                                               long n, long u, long v);

/// Relative residual of H_{n+u} H_{n+v} - H_{n+u+v} H_n = (-b)^n { H_u H_v - H_{u+v} H_0 }
/// evaluated over the transformed sequence H_n = G_n - p*d^n.
double shannon_check(const Params& params, const ClosedForm& cf, long n, long u, long v);

/// A sequence evaluator: index -> value.
using SequenceFn = std::function<double(long)>;

/// An identity over a homogeneous (Horadam) sequence: given an evaluator and an
/// index tuple, produce the two sides to compare.
struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};
using HoradamIdentity =
    std::function<IdentitySides(const SequenceFn&, std::span<const long>)>;

/// Evaluates a Horadam identity with the substituted evaluator n -> G_n - p*d^n
/// and returns its relative residual |lhs - rhs| / max(1, |lhs|).
double substitution_check(const HoradamIdentity& identity, const Params& params,
                          const ClosedForm& cf, std::span<const long> indices);

/// Identities exercised by the fuzz harness and the verify command.
enum class IdentityKind { Shannon, Tagiuri, Catalan, DOcagne, GammaDiff };

const char* identity_name(IdentityKind kind);

/// Deterministic, platform-independent draw of the k-th fuzz parameter set.
/// a, b uniform in (0.1, 2.0); c in [0, 2]; d in (0, 2) bounded away from the
/// roots and from the sum denominators.
Params sample_params(std::uint64_t seed, std::uint64_t k);

/// Index draw for the k-th sample, |value| <= max_abs.
long sample_index(std::uint64_t seed, std::uint64_t k, int slot, long max_abs);

/// Residual of the k-th fuzz sample for one identity. Exposed so that the
/// parallel and serial harnesses in kernels.hpp share one definition.
double fuzz_residual(IdentityKind kind, std::uint64_t seed, std::uint64_t k,
                     bool perturbed = false);

/// Index tuple the k-th sample uses (for reporting the worst case).
std::array<long, 3> fuzz_indices(IdentityKind kind, std::uint64_t seed, std::uint64_t k);

} // namespace exponacci
