// Command-line front end: sequence/sum tables, spiral geometry as SVG/CSV/JSON,
// curve samples, identity verification reports.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exponacci/continuation.hpp"
#include "exponacci/core.hpp"
#include "exponacci/identities.hpp"
#include "exponacci/kernels.hpp"
#include "exponacci/serialize.hpp"
#include "exponacci/spiral.hpp"
#include "exponacci/sums.hpp"

namespace {

using namespace exponacci;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitIncompatibleOptions = 3;

struct RunConfig {
    Params params{1.0, 1.0, 0.0, 0.0, 0.0, 1.0};
    long n_max = 20;
    std::string form = "a";
    long arcs = 12;
    int arc_samples = 60;
    std::string style = "both";
    std::string winding = "auto";
    std::string z_mode = "none";
    std::string amplitude = "c";
    double t_max = 10.0;
    double step = 0.01;
    std::string identity = "all";
    long samples = 1000;
    std::uint64_t seed = 42;
    bool perturb = false;
    std::string out;
    std::string format; // per-command default applied later
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("EXPONACCI_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 42;
}

void apply_json_config(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    nlohmann::json j;
    in >> j;
    const auto num = [&](const char* key, double& slot) {
        if (j.contains(key)) slot = j.at(key).get<double>();
    };
    num("a", cfg.params.a);
    num("b", cfg.params.b);
    num("c", cfg.params.c);
    num("d", cfg.params.d);
    num("g0", cfg.params.g0);
    num("g1", cfg.params.g1);
    num("t_max", cfg.t_max);
    num("step", cfg.step);
    if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<long>();
    if (j.contains("arcs")) cfg.arcs = j.at("arcs").get<long>();
    if (j.contains("arc_samples")) cfg.arc_samples = j.at("arc_samples").get<int>();
    if (j.contains("samples")) cfg.samples = j.at("samples").get<long>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("form")) cfg.form = j.at("form").get<std::string>();
    if (j.contains("style")) cfg.style = j.at("style").get<std::string>();
    if (j.contains("winding")) cfg.winding = j.at("winding").get<std::string>();
    if (j.contains("z")) cfg.z_mode = j.at("z").get<std::string>();
    if (j.contains("amplitude")) cfg.amplitude = j.at("amplitude").get<std::string>();
    if (j.contains("identity")) cfg.identity = j.at("identity").get<std::string>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + cfg.out);
    out << text;
}

std::string resolve_format(const RunConfig& cfg, const std::string& fallback,
                           const std::vector<std::string>& allowed) {
    const std::string fmt = cfg.format.empty() ? fallback : cfg.format;
    for (const auto& ok : allowed)
        if (fmt == ok) return fmt;
    throw CLI::ValidationError("--format", "format '" + fmt + "' not supported here");
}

SumForm parse_form(const std::string& s) {
    if (s == "a") return SumForm::A;
    if (s == "b") return SumForm::B;
    if (s == "c") return SumForm::C;
    throw CLI::ValidationError("--form", "expected a, b, or c");
}

// ---------------------------------------------------------------------------
// Row tables shared by seq/sums/curve: CSV, aligned text, or JSON.

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string table_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << (i ? "," : "") << t.header[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i];
        os << "\n";
    }
    return os.str();
}

std::string table_text(const Table& t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::ostringstream os;
    const auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << "  ";
            os << row[i];
            for (std::size_t pad = row[i].size(); pad < width[i]; ++pad) os << ' ';
        }
        os << "\n";
    };
    emit(t.header);
    for (const auto& row : t.rows) emit(row);
    return os.str();
}

std::string table_json(const Table& t) {
    // Values are emitted as raw 17-digit literals, so numbers stay numbers.
    std::ostringstream os;
    os << "[\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "  {";
        bool first = true;
        for (std::size_t i = 0; i < t.header.size(); ++i) {
            if (t.rows[r][i].empty()) continue;
            if (!first) os << ", ";
            os << "\"" << t.header[i] << "\": " << t.rows[r][i];
            first = false;
        }
        os << "}" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

std::string render_table(const Table& t, const std::string& fmt) {
    if (fmt == "csv") return table_csv(t);
    if (fmt == "json") return table_json(t);
    return table_text(t);
}

// ---------------------------------------------------------------------------

int cmd_seq(const RunConfig& cfg) {
    const std::string fmt = resolve_format(cfg, "text", {"csv", "text", "json"});
    if (cfg.n_max < 0) throw CLI::ValidationError("-n", "n must be >= 0");
    cfg.params.validate();
    const ClosedForm cf = solve_closed_form(cfg.params);

    Table t;
    t.header = {"n", "g_iterative", "g_closed", "h", "residual"};
    for (long n = 0; n <= cfg.n_max; ++n) {
        const double gi = g_iterative(cfg.params, n);
        const double gc = g_closed(cf, cfg.params, n);
        const double h = horadam_h(cf, cfg.params, n);
        const double res = std::fabs(gc - gi) / std::max(1.0, std::fabs(gi));
        t.rows.push_back({std::to_string(n), fmt17(gi), fmt17(gc), fmt17(h), fmt17(res)});
    }
    write_output(cfg, render_table(t, fmt));
    return kExitOk;
}

int cmd_sums(const RunConfig& cfg) {
    const std::string fmt = resolve_format(cfg, "text", {"csv", "text", "json"});
    if (cfg.n_max < 0) throw CLI::ValidationError("-n", "n must be >= 0");
    cfg.params.validate();
    const ClosedForm cf = solve_closed_form(cfg.params);
    const SumForm form = parse_form(cfg.form);

    Table t;
    t.header = {"n", "sum_g", "alt_sum_g", "gamma"};
    for (long n = 0; n <= cfg.n_max; ++n) {
        const double s = partial_sum(cfg.params, cf, n, form);
        const double alt = alternating_sum(cfg.params, cf, n, form);
        const double g = gamma_n(cfg.params, cf, n).value;
        t.rows.push_back({std::to_string(n), fmt17(s), fmt17(alt), fmt17(g)});
    }
    write_output(cfg, render_table(t, fmt));
    return kExitOk;
}

int cmd_curve(const RunConfig& cfg) {
    const std::string fmt = resolve_format(cfg, "csv", {"csv", "text", "json"});
    if (cfg.t_max <= 0.0) throw CLI::ValidationError("--t-max", "t_max must be > 0");
    if (cfg.step <= 0.0) throw CLI::ValidationError("--step", "step must be > 0");
    cfg.params.validate();
    const ClosedForm cf = solve_closed_form(cfg.params);

    const long steps = static_cast<long>(std::llround(cfg.t_max / cfg.step));
    const auto samples = sample_curve(cfg.params, cf, cfg.t_max, std::max(1L, steps));

    Table t;
    t.header = {"t", "re", "im", "g_n"};
    for (const ComplexSample& s : samples) {
        const double nearest = std::round(s.t);
        std::string gn;
        if (std::fabs(s.t - nearest) < 1e-9 * std::max(1.0, cfg.t_max))
            gn = fmt17(g_closed(cf, cfg.params, static_cast<long>(nearest)));
        t.rows.push_back({fmt17(s.t), fmt17(s.re), fmt17(s.im), gn});
    }
    write_output(cfg, render_table(t, fmt));
    return kExitOk;
}

int cmd_spiral(const RunConfig& cfg) {
    const std::string fmt = resolve_format(cfg, "svg", {"svg", "csv", "json"});
    if (cfg.n_max < 0) throw CLI::ValidationError("--n-max", "n-max must be >= 0");
    if (cfg.arcs < 1) throw CLI::ValidationError("--arcs", "arcs must be >= 1");
    if (cfg.arc_samples < 2) throw CLI::ValidationError("--arc-samples", "need at least 2");
    cfg.params.validate();
    const ClosedForm cf = solve_closed_form(cfg.params);
    const Classification cl = classify(cfg.params, cf);

    const bool want_rect = cfg.style == "rect" || cfg.style == "both";
    const bool want_arch = cfg.style == "arch" || cfg.style == "both";
    if (!want_rect && !want_arch)
        throw CLI::ValidationError("--style", "expected rect, arch, or both");

    bool arcs_inwinding = cl.winding == Winding::Inwinding;
    if (cfg.winding != "auto") {
        if (cfg.winding != "in" && cfg.winding != "out")
            throw CLI::ValidationError("--winding", "expected auto, in, or out");
        const bool requested_in = cfg.winding == "in";
        if (want_arch && requested_in != arcs_inwinding) {
            std::cerr << "spiral: requested " << cfg.winding
                      << "-winding arcs, but the parameters classify as "
                      << (arcs_inwinding ? "inwinding" : "outwinding (gamma >= 1)") << "\n";
            return kExitIncompatibleOptions;
        }
        arcs_inwinding = requested_in;
    }

    const auto corners = corner_points(cfg.params, cf, cfg.n_max);
    std::vector<TaggedPoint> arc_pts;
    if (want_arch) {
        for (long n = 1; n <= cfg.arcs; ++n) {
            const auto pts = arcs_inwinding
                                 ? arc_points_inwinding(cfg.params, cf, n, cfg.arc_samples)
                                 : arc_points_outwinding(cfg.params, cf, n, cfg.arc_samples);
            for (int i = 0; i < static_cast<int>(pts.size()); ++i)
                arc_pts.push_back({n, i, pts[static_cast<std::size_t>(i)].x,
                                   pts[static_cast<std::size_t>(i)].y});
        }
    }

    std::optional<ZMode> z_mode;
    if (cfg.z_mode == "linear") z_mode = ZMode::Linear;
    else if (cfg.z_mode == "local") z_mode = ZMode::LocalInput;
    else if (cfg.z_mode == "cumulative") z_mode = ZMode::Cumulative;
    else if (cfg.z_mode != "none")
        throw CLI::ValidationError("--z", "expected none, linear, local, or cumulative");
    const AmplitudeMode amp = cfg.amplitude == "p" ? AmplitudeMode::UseP : AmplitudeMode::UseC;

    std::vector<SpiralPoint3> lifted;
    if (z_mode && want_arch)
        lifted = spatial_points(cfg.params, cf, arc_pts, cfg.arc_samples, *z_mode, amp);

    if (fmt == "svg") {
        SvgBuilder svg;
        if (want_rect) {
            std::vector<Vec2> poly;
            poly.reserve(corners.size());
            for (const auto& cp : corners) poly.push_back({cp.x, cp.y});
            svg.add_polyline(poly, "black");
        }
        if (want_arch) {
            std::vector<Vec2> arc;
            for (long n = 1; n <= cfg.arcs; ++n) {
                arc.clear();
                for (const auto& tp : arc_pts)
                    if (tp.n == n) arc.push_back({tp.x, tp.y});
                svg.add_polyline(arc, "red");
            }
        }
        const Vec2 p_star = intersection_point(cfg.params, cf);
        const auto [slope_even, slope_odd] = asymptote_slopes(cl);
        double reach = 1.0;
        for (const auto& cp : corners)
            reach = std::max({reach, std::fabs(cp.x - p_star.x), std::fabs(cp.y - p_star.y)});
        for (const double s : {slope_even, slope_odd}) {
            const double norm = std::sqrt(1.0 + s * s);
            const Vec2 dir{reach / norm, s * reach / norm};
            svg.add_segment({p_star.x - dir.x, p_star.y - dir.y},
                            {p_star.x + dir.x, p_star.y + dir.y}, "blue", true);
        }
        svg.add_marker(p_star, "blue");
        write_output(cfg, svg.str());
        return kExitOk;
    }

    Table t;
    const bool with_z = z_mode.has_value();
    t.header = {"kind", "n", "i", "x", "y"};
    if (with_z) t.header.push_back("z");
    if (want_rect) {
        for (const auto& cp : corners) {
            std::vector<std::string> row{"corner", std::to_string(cp.n), "0", fmt17(cp.x),
                                         fmt17(cp.y)};
            if (with_z) row.push_back("");
            t.rows.push_back(std::move(row));
        }
    }
    if (want_arch) {
        for (std::size_t k = 0; k < arc_pts.size(); ++k) {
            const auto& tp = arc_pts[k];
            std::vector<std::string> row{"arc", std::to_string(tp.n), std::to_string(tp.i),
                                         fmt17(tp.x), fmt17(tp.y)};
            if (with_z) row.push_back(fmt17(lifted[k].z));
            t.rows.push_back(std::move(row));
        }
    }
    if (fmt == "json") {
        // kind is textual; quote it for valid JSON.
        for (auto& row : t.rows) row[0] = "\"" + row[0] + "\"";
        write_output(cfg, table_json(t));
    } else {
        write_output(cfg, table_csv(t));
    }
    return kExitOk;
}

std::string format_report(const IdentityReport& r, std::uint64_t seed) {
    std::ostringstream os;
    os << "identity=" << r.name << " samples=" << r.samples << " seed=" << seed
       << " max_rel_residual=" << fmt17(r.max_rel_residual) << " worst_params=(a=" << fmt17(r.worst_params.a)
       << ",b=" << fmt17(r.worst_params.b) << ",c=" << fmt17(r.worst_params.c)
       << ",d=" << fmt17(r.worst_params.d) << ",g0=" << fmt17(r.worst_params.g0)
       << ",g1=" << fmt17(r.worst_params.g1) << ") worst_indices=(" << r.worst_indices[0] << ","
       << r.worst_indices[1] << "," << r.worst_indices[2] << ")";
    return os.str();
}

int cmd_verify(const RunConfig& cfg) {
    const std::string fmt = resolve_format(cfg, "text", {"text", "json"});
    if (cfg.samples < 1) throw CLI::ValidationError("--samples", "samples must be >= 1");

    std::vector<IdentityKind> kinds;
    const auto add = [&](IdentityKind k) { kinds.push_back(k); };
    if (cfg.identity == "all") {
        add(IdentityKind::Shannon);
        add(IdentityKind::Tagiuri);
        add(IdentityKind::Catalan);
        add(IdentityKind::DOcagne);
        add(IdentityKind::GammaDiff);
    } else if (cfg.identity == "shannon") add(IdentityKind::Shannon);
    else if (cfg.identity == "tagiuri") add(IdentityKind::Tagiuri);
    else if (cfg.identity == "catalan") add(IdentityKind::Catalan);
    else if (cfg.identity == "docagne") add(IdentityKind::DOcagne);
    else if (cfg.identity == "gamma-diff") add(IdentityKind::GammaDiff);
    else throw CLI::ValidationError("--identity",
                                    "expected shannon, tagiuri, catalan, docagne, gamma-diff, or all");

    constexpr double kTolerance = 1e-8;
    std::vector<IdentityReport> reports;
    reports.reserve(kinds.size());
    for (const IdentityKind kind : kinds)
        reports.push_back(kernels::fuzz_identity(kind, cfg.seed, cfg.samples, cfg.perturb));

    bool ok = true;
    std::ostringstream os;
    if (fmt == "json") {
        os << "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            ok = ok && r.max_rel_residual < kTolerance;
            os << "  {\"identity\": \"" << r.name << "\", \"samples\": " << r.samples
               << ", \"max_rel_residual\": " << fmt17(r.max_rel_residual) << "}"
               << (i + 1 < reports.size() ? "," : "") << "\n";
        }
        os << "]\n";
    } else {
        for (const auto& r : reports) {
            const bool pass = r.max_rel_residual < kTolerance;
            ok = ok && pass;
            os << format_report(r, cfg.seed) << " => " << (pass ? "ok" : "RESIDUAL BREACH") << "\n";
        }
        os << "verify: " << (ok ? "PASS" : "FAIL") << " (tolerance " << fmt17(kTolerance) << ")\n";
    }
    write_output(cfg, os.str());
    return ok ? kExitOk : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.seed = default_seed();

    // --config is applied before flag parsing so that flags override it.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                apply_json_config(cfg, argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "config: " << e.what() << "\n";
                return kExitInvalidParams;
            }
        }
    }

    CLI::App app{"generalized Fibonacci sequences with exponential input: closed forms, "
                 "sums, spirals, and complex continuation"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; flags override its fields");

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("-a", cfg.params.a, "coefficient a");
        sub->add_option("-b", cfg.params.b, "coefficient b");
        sub->add_option("-c", cfg.params.c, "input amplitude c");
        sub->add_option("-d", cfg.params.d, "input base d");
        sub->add_option("--g0", cfg.params.g0, "initial value G_0");
        sub->add_option("--g1", cfg.params.g1, "initial value G_1");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv, svg, json, or text (where applicable)");
        sub->add_option("--config", config_path, "JSON config file; flags override its fields");
    };

    CLI::App* seq = app.add_subcommand("seq", "sequence table: iterative vs closed form");
    add_common(seq);
    seq->add_option("-n,--n-max", cfg.n_max, "largest index");

    CLI::App* sums = app.add_subcommand("sums", "partial, alternating, and Gamma sums");
    add_common(sums);
    sums->add_option("-n,--n-max", cfg.n_max, "largest index");
    sums->add_option("--form", cfg.form, "closed form variant: a, b, or c");

    CLI::App* spiral = app.add_subcommand("spiral", "spirangle and arched spiral geometry");
    add_common(spiral);
    spiral->add_option("--n-max", cfg.n_max, "last corner point index");
    spiral->add_option("--arcs", cfg.arcs, "number of quarter-ellipse arcs");
    spiral->add_option("-N,--arc-samples", cfg.arc_samples, "interpolation points per arc");
    spiral->add_option("--style", cfg.style, "rect, arch, or both");
    spiral->add_option("--winding", cfg.winding, "auto, out, or in (arcs only)");
    spiral->add_option("--z", cfg.z_mode, "height rule: none, linear, local, or cumulative");
    spiral->add_option("--amplitude", cfg.amplitude, "z amplitude source: c or p");

    CLI::App* curve = app.add_subcommand("curve", "complex continuation G(t) samples");
    add_common(curve);
    curve->add_option("--t-max", cfg.t_max, "largest argument t");
    curve->add_option("--step", cfg.step, "sample spacing");

    CLI::App* verify = app.add_subcommand("verify", "fuzz the identity suite");
    add_common(verify);
    verify->add_option("--identity", cfg.identity,
                       "shannon, tagiuri, catalan, docagne, gamma-diff, or all");
    verify->add_option("--samples", cfg.samples, "number of fuzz samples");
    verify->add_option("--seed", cfg.seed, "fuzz seed (default: EXPONACCI_SEED or 42)");
    verify->add_flag("--perturb", cfg.perturb, "")->group(""); // test hook: break the identities

    CLI11_PARSE(app, argc, argv);

    try {
        if (seq->parsed()) return cmd_seq(cfg);
        if (sums->parsed()) return cmd_sums(cfg);
        if (spiral->parsed()) return cmd_spiral(cfg);
        if (curve->parsed()) return cmd_curve(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitIncompatibleOptions;
    } catch (const DomainError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }
    return kExitOk;
}
