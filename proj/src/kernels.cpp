#include "exponacci/kernels.hpp"

#include <cmath>

#include "exponacci/sums.hpp"

namespace exponacci::kernels {

namespace {

ComplexSample curve_sample_at(const Params& params, const ClosedForm& cf, double t_max,
                              long steps, long i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(steps);
    return g_continuous(params, cf, t);
}

IdentityReport reduce_report(IdentityKind kind, std::uint64_t seed, long samples,
                             std::span<const double> residuals) {
    long worst = 0;
    for (long k = 1; k < samples; ++k)
        if (residuals[static_cast<std::size_t>(k)] > residuals[static_cast<std::size_t>(worst)])
            worst = k;
    IdentityReport report;
    report.name = identity_name(kind);
    report.samples = samples;
    report.max_rel_residual = residuals[static_cast<std::size_t>(worst)];
    report.worst_params = sample_params(seed, static_cast<std::uint64_t>(worst));
    report.worst_indices = fuzz_indices(kind, seed, static_cast<std::uint64_t>(worst));
    return report;
}

} // namespace

void gamma_table(const Params& params, const ClosedForm& cf, std::span<double> out) {
    const long count = static_cast<long>(out.size());
#pragma omp parallel for schedule(static)
    for (long n = 0; n < count; ++n)
        out[static_cast<std::size_t>(n)] = gamma_n(params, cf, n).value;
}

void gamma_table_serial(const Params& params, const ClosedForm& cf, std::span<double> out) {
    const long count = static_cast<long>(out.size());
    for (long n = 0; n < count; ++n)
        out[static_cast<std::size_t>(n)] = gamma_n(params, cf, n).value;
}

std::vector<ComplexSample> sample_curve(const Params& params, const ClosedForm& cf,
                                        double t_max, long steps) {
    std::vector<ComplexSample> out(static_cast<std::size_t>(steps) + 1);
#pragma omp parallel for schedule(static)
    for (long i = 0; i <= steps; ++i)
        out[static_cast<std::size_t>(i)] = curve_sample_at(params, cf, t_max, steps, i);
    return out;
}

std::vector<ComplexSample> sample_curve_serial(const Params& params, const ClosedForm& cf,
                                               double t_max, long steps) {
    std::vector<ComplexSample> out(static_cast<std::size_t>(steps) + 1);
    for (long i = 0; i <= steps; ++i)
        out[static_cast<std::size_t>(i)] = curve_sample_at(params, cf, t_max, steps, i);
    return out;
}

IdentityReport fuzz_identity(IdentityKind kind, std::uint64_t seed, long samples, bool perturbed) {
    std::vector<double> residuals(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(static)
    for (long k = 0; k < samples; ++k)
        residuals[static_cast<std::size_t>(k)] =
            fuzz_residual(kind, seed, static_cast<std::uint64_t>(k), perturbed);
    return reduce_report(kind, seed, samples, residuals);
}

IdentityReport fuzz_identity_serial(IdentityKind kind, std::uint64_t seed, long samples,
                                    bool perturbed) {
    std::vector<double> residuals(static_cast<std::size_t>(samples));
    for (long k = 0; k < samples; ++k)
        residuals[static_cast<std::size_t>(k)] =
            fuzz_residual(kind, seed, static_cast<std::uint64_t>(k), perturbed);
    return reduce_report(kind, seed, samples, residuals);
}

double fuzz_failure_fraction(IdentityKind kind, std::uint64_t seed, long samples,
                             double tolerance, bool perturbed) {
    long failures = 0;
#pragma omp parallel for schedule(static) reduction(+ : failures)
    for (long k = 0; k < samples; ++k) {
        if (fuzz_residual(kind, seed, static_cast<std::uint64_t>(k), perturbed) > tolerance)
            ++failures;
    }
    return static_cast<double>(failures) / static_cast<double>(samples);
}

} // namespace exponacci::kernels
