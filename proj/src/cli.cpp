#include "fixkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fixkit/error.hpp"
#include "fixkit/report.hpp"

namespace fixkit::cli {

using report::Json;

std::vector<double> parse_vector_literal(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string item = text.substr(start, comma - start);
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v)) {
            throw Error("bad-vector-literal", text);
        }
        out.push_back(v);
        if (comma == text.size()) break;
        start = comma + 1;
    }
    return out;
}

namespace {

Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    j["mapping"] = c.mapping_label;
    j["dim"] = c.dim;
    j["points_per_axis"] = c.points_per_axis;
    j["extra_random"] = c.extra_random;
    j["seed"] = c.seed;
    j["k"] = c.k ? Json(*c.k) : Json(nullptr);
    j["lambda"] = c.lambda ? Json(*c.lambda) : Json(nullptr);
    j["auto_k"] = c.auto_k;
    j["residual_tol"] = c.residual_tol;
    j["step_tol"] = c.step_tol;
    j["cert_tol"] = c.cert_tol;
    j["k_ceiling"] = c.k_ceiling;
    j["x0"] = c.x0;
    j["max_iters"] = c.max_iters;
    // Only JSON reports embed the config, so an unset format resolved to json.
    j["output_format"] = c.output_format.empty() ? std::string("json") : c.output_format;
    return j;
}

Json envelope(const RunConfig& cfg) {
    Json j;
    j["schema"] = report::kSchemaVersion;
    j["command"] = cfg.command;
    j["config"] = config_json(cfg);
    return j;
}

SampleSpec sample_spec(const RunConfig& cfg) {
    return SampleSpec{cfg.points_per_axis, cfg.extra_random, cfg.seed};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Error("io-error", "cannot write " + cfg.output_path);
    }
    f << text;
}

void emit_json(const RunConfig& cfg, const Json& j, std::ostream& out) { emit(cfg, j.dump(2) + "\n", out); }

std::string format_of(const RunConfig& cfg, const char* fallback) {
    const std::string f = cfg.output_format.empty() ? fallback : cfg.output_format;
    if (f != "json" && f != "csv") {
        throw Error("bad-format", f);
    }
    return f;
}

Mapping resolve(const RunConfig& cfg) {
    if (cfg.mapping_label.empty()) {
        throw Error("unknown-mapping", "--mapping is required");
    }
    return mapping_from_label(cfg.mapping_label, cfg.dim);
}

DiagramOptions diagram_options(const RunConfig& cfg) {
    DiagramOptions o;
    o.spec = sample_spec(cfg);
    o.tol = cfg.cert_tol;
    o.k_ceiling = cfg.k_ceiling;
    return o;
}

double resolve_k(const RunConfig& cfg, const Mapping& t) {
    if (cfg.auto_k) {
        return estimate_k_dc(t, sample_spec(cfg)).value;
    }
    if (!cfg.k) {
        throw Error("missing-argument", "--k or --auto-k is required");
    }
    return *cfg.k;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const Mapping t = resolve(cfg);
    const DiagramRow row = classify_mapping(t, diagram_options(cfg));
    if (format_of(cfg, "json") == "csv") {
        emit(cfg, report::certificates_csv(row), out);
        return kOk;
    }
    Json j = envelope(cfg);
    j["mapping"] = report::to_json(t);
    const Json r = report::to_json(row);
    j["estimates"] = {{"k_spc", r["k_spc"]},
                      {"k_dc", r["k_dc"]},
                      {"lambda_a", row.k_dc && *row.k_dc < 1.0
                                       ? Json(convert_constants(Conversion::KToLambda, *row.k_dc))
                                       : Json(nullptr)}};
    Json certs = Json::array();
    for (const auto& c : row.cells) {
        certs.push_back(report::to_json(c));
    }
    if (row.condition_a) {
        certs.push_back(report::to_json(*row.condition_a));
    }
    j["certificates"] = certs;
    emit_json(cfg, j, out);
    return kOk;
}

int cmd_estimate_k(const RunConfig& cfg, std::ostream& out) {
    const Mapping t = resolve(cfg);
    const SampleSpec spec = sample_spec(cfg);
    const ConstantEstimate spc = estimate_k_spc(t, spec);
    std::optional<ConstantEstimate> dc;
    if (t.fixed_points().is_known()) {
        dc = estimate_k_dc(t, spec);
    }
    std::optional<double> lambda_a;
    if (dc && dc->value < 1.0) {
        lambda_a = convert_constants(Conversion::KToLambda, dc->value);
    }
    if (format_of(cfg, "json") == "csv") {
        std::string s = "constant,value\n";
        s += "k_spc," + report::format_real(spc.value) + "\n";
        s += "k_dc," + (dc ? report::format_real(dc->value) : std::string()) + "\n";
        s += "lambda_a," + (lambda_a ? report::format_real(*lambda_a) : std::string()) + "\n";
        emit(cfg, s, out);
        return kOk;
    }
    Json j = envelope(cfg);
    j["mapping"] = report::to_json(t);
    j["k_spc"] = report::to_json(spc);
    j["k_dc"] = dc ? report::to_json(*dc) : Json(nullptr);
    j["lambda_a"] = lambda_a ? Json(*lambda_a) : Json(nullptr);
    emit_json(cfg, j, out);
    return kOk;
}

int cmd_verify_lemma(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Mapping t = resolve(cfg);
    if (!cfg.lambda) {
        throw Error("missing-argument", "--lambda is required");
    }
    const double k = resolve_k(cfg, t);
    const LemmaReport rep = verify_lemma(t, k, *cfg.lambda, sample_spec(cfg), cfg.cert_tol);
    if (format_of(cfg, "json") == "csv") {
        std::string s = "lambda,k,in_lemma_range,verdict,max_violation,samples\n";
        s += report::format_real(rep.lambda) + "," + report::format_real(rep.k) + "," +
             (rep.in_lemma_range ? "true" : "false") + "," + (rep.pass ? "pass" : "fail") + "," +
             report::format_real(rep.max_violation) + "," + std::to_string(rep.samples) + "\n";
        emit(cfg, s, out);
    } else {
        Json j = envelope(cfg);
        j["mapping"] = report::to_json(t);
        j["report"] = report::to_json(rep);
        emit_json(cfg, j, out);
    }
    if (rep.contradicts_lemma()) {
        err << "lemma check failed inside (0, 1-k): k may be wrong for " << t.label() << "\n";
        return kVerdictFail;
    }
    return kOk;
}

int cmd_iterate(const RunConfig& cfg, std::ostream& out) {
    const Mapping t = resolve(cfg);
    if (cfg.x0.empty()) {
        throw Error("missing-argument", "--x0 is required");
    }
    const Vector x0(parse_vector_literal(cfg.x0));
    StopRule stop;
    stop.residual_tol = cfg.residual_tol;
    stop.step_tol = cfg.step_tol;
    stop.max_iters = cfg.max_iters;

    double lambda = 0.0;
    std::optional<double> k;
    Trajectory traj;
    if (cfg.lambda) {
        lambda = *cfg.lambda;
        traj = krasnoselskij(t, x0, lambda, stop);
    } else if (cfg.k || cfg.auto_k) {
        k = resolve_k(cfg, t);
        DemicontractiveRun run = solve_demicontractive(t, *k, x0, stop);
        lambda = run.lambda;
        traj = std::move(run.trajectory);
    } else {
        throw Error("missing-argument", "one of --lambda, --k, --auto-k is required");
    }

    if (format_of(cfg, "csv") == "csv") {
        emit(cfg, report::trajectory_csv(traj, t.fixed_points()), out);
    } else {
        Json j = envelope(cfg);
        j["mapping"] = report::to_json(t);
        j["k"] = k ? Json(*k) : Json(nullptr);
        j["lambda"] = lambda;
        if (t.fixed_points().is_known()) {
            j["fejer"] = report::to_json(audit_fejer(traj, t.fixed_points()));
        }
        j["trajectory"] = report::to_json(traj);
        emit_json(cfg, j, out);
    }

    switch (traj.termination) {
        case Termination::ResidualMet:
        case Termination::StepMet: return kOk;
        case Termination::MaxIters: return kVerdictFail;
        case Termination::Diverged: return kDiverged;
    }
    return kVerdictFail;
}

int cmd_diagram(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const DiagramReport rep = reproduce_diagram(diagram_options(cfg));
    if (format_of(cfg, "json") == "csv") {
        emit(cfg, report::membership_csv(rep), out);
    } else {
        Json j = envelope(cfg);
        j["diagram"] = report::to_json(rep);
        emit_json(cfg, j, out);
    }
    if (!cfg.matrix_csv_path.empty()) {
        RunConfig csv_cfg = cfg;
        csv_cfg.output_path = cfg.matrix_csv_path;
        emit(csv_cfg, report::membership_csv(rep), out);
    }
    if (!rep.matches()) {
        err << "membership matrix differs from the expected diagram:\n";
        for (const auto& m : rep.mismatches) {
            err << "  " << m.mapping << " " << to_string(m.class_id) << ": expected " << to_string(m.expected)
                << ", observed " << to_cell(m.observed) << "\n";
        }
        return kVerdictFail;
    }
    return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_mapping) {
    if (needs_mapping) {
        sub->add_option("--mapping", cfg.mapping_label, "t1..t5 or reflection:<alpha>[:<dim>]")->required();
        sub->add_option("--dim", cfg.dim, "dimension for reflection labels without one");
    }
    sub->add_option("--points-per-axis", cfg.points_per_axis, "grid points per axis (box domains)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    sub->add_option("--extra-random", cfg.extra_random, "random samples or pairs added to the grid");
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--cert-tol", cfg.cert_tol, "inequality slack");
    sub->add_option("--format", cfg.output_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output_path, "report file (default stdout)");
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "classify") return cmd_classify(cfg, out);
        if (cfg.command == "estimate-k") return cmd_estimate_k(cfg, out);
        if (cfg.command == "verify-lemma") return cmd_verify_lemma(cfg, out, err);
        if (cfg.command == "iterate") return cmd_iterate(cfg, out);
        if (cfg.command == "diagram") return cmd_diagram(cfg, out, err);
        err << "unknown command: " << cfg.command << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << e.code() << (std::string(e.what()) != e.code() ? std::string(" (") + e.what() + ")" : "") << "\n";
        return kUsage;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"fixkit: nonexpansive-type operator classes and Krasnoselskij-Mann iteration"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "run every class check on one mapping");
    add_common(classify, cfg, true);
    classify->add_option("--k-ceiling", cfg.k_ceiling, "constant at which SPC and DC are checked");

    auto* estimate = app.add_subcommand("estimate-k", "sampled minimal SPC and DC constants");
    add_common(estimate, cfg, true);

    auto* lemma = app.add_subcommand("verify-lemma", "check that the relaxed mapping is quasi-nonexpansive");
    add_common(lemma, cfg, true);
    lemma->add_option("--k", cfg.k, "demicontractive constant");
    lemma->add_option("--lambda", cfg.lambda, "relaxation parameter");
    lemma->add_flag("--auto-k", cfg.auto_k, "estimate k from samples");

    auto* iterate = app.add_subcommand("iterate", "Krasnoselskij-Mann iteration");
    add_common(iterate, cfg, true);
    iterate->add_option("--x0", cfg.x0, "start point, comma separated")->required();
    iterate->add_option("--lambda", cfg.lambda, "constant step");
    iterate->add_option("--k", cfg.k, "demicontractive constant; step (1-k)/2");
    iterate->add_flag("--auto-k", cfg.auto_k, "estimate k from samples");
    iterate->add_option("--residual-tol", cfg.residual_tol);
    iterate->add_option("--step-tol", cfg.step_tol);
    iterate->add_option("--max-iters", cfg.max_iters)->check(CLI::PositiveNumber);

    auto* diagram = app.add_subcommand("diagram", "membership matrix of the example gallery");
    add_common(diagram, cfg, false);
    diagram->add_option("--k-ceiling", cfg.k_ceiling, "constant at which SPC and DC are checked");
    diagram->add_option("--matrix-csv", cfg.matrix_csv_path, "also write the membership matrix as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    for (auto* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
    }
    return execute(cfg, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"fixkit"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fixkit::cli
