// scaled_mtp: step-wise multiple testing with scaled error rates.
//
// Subcommands:
//   reject      apply a procedure to a file of p-values
//   thresholds  print the critical values of a procedure
//   verify      Monte-Carlo check of the control bounds
//   optimize    gain maximization over a gamma or tau grid
//   twotest     closed-form two-test gain model
//
// Exit codes: 0 ok, 2 malformed input, 3 invalid parameter combination,
// 4 a verify control check failed.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smt/engine.hpp"
#include "smt/simulate.hpp"

using nlohmann::json;

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitBadParams = 3;
constexpr int kExitControlFailed = 4;

struct InputError : std::runtime_error {
    int line;
    InputError(int line_no, const std::string& msg)
        : std::runtime_error(msg), line(line_no) {}
};

struct ParamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

smt::ScalingSpec parse_scaling(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    try {
        if (kind == "linear") return smt::ScalingSpec::linear();
        if (kind == "constant") return smt::ScalingSpec::constant(std::stod(arg));
        if (kind == "truncated") return smt::ScalingSpec::truncated_linear(std::stoi(arg));
        if (kind == "power") return smt::ScalingSpec::power(std::stod(arg));
    } catch (const std::exception&) {
        throw ParamError("bad scaling argument: " + text);
    }
    throw ParamError("unknown scaling kind: " + text);
}

smt::ShapeSpec parse_shape(const std::string& text) {
    if (text == "identity") return smt::ShapeSpec::identity();
    if (text == "harmonic") return smt::ShapeSpec::harmonic_linear();
    throw ParamError("unknown shape: " + text);
}

bool looks_numeric(const std::string& tok) {
    char* end = nullptr;
    std::strtod(tok.c_str(), &end);
    return end != tok.c_str() && *end == '\0';
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim blanks
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    return out;
}

struct ParsedInput {
    std::vector<smt::PValueSet::Entry> entries;
    std::vector<double> weights; // empty when no weight column
};

// One p-value per line, or id,p with an optional third weight column.
// A non-numeric first token on the first line is treated as a header.
ParsedInput read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(0, "cannot open input file " + path);

    ParsedInput parsed;
    std::string line;
    int line_no = 0;
    bool seen_header_slot = false;
    std::size_t n_cols = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv_line(line);
        if (fields.empty()) continue;

        if (!seen_header_slot) {
            seen_header_slot = true;
            const std::string& probe = fields.size() == 1 ? fields[0] : fields[1];
            if (!looks_numeric(probe)) continue; // header row
        }

        if (fields.size() < 1 || fields.size() > 3)
            throw InputError(line_no, "expected 1 to 3 columns");
        if (n_cols == 0) {
            n_cols = fields.size();
        } else if (fields.size() != n_cols) {
            throw InputError(line_no, "inconsistent column count");
        }

        smt::PValueSet::Entry entry;
        double w = 1.0;
        try {
            if (n_cols == 1) {
                entry.id = "h" + std::to_string(parsed.entries.size() + 1);
                entry.p = std::stod(fields[0]);
            } else {
                entry.id = fields[0];
                entry.p = std::stod(fields[1]);
                if (n_cols == 3) w = std::stod(fields[2]);
            }
        } catch (const std::exception& e) {
            throw InputError(line_no, std::string("malformed line: ") + e.what());
        }
        if (!(entry.p >= 0.0 && entry.p <= 1.0))
            throw InputError(line_no, "p-value out of [0,1]");
        parsed.entries.push_back(std::move(entry));
        parsed.weights.push_back(w);
    }
    if (parsed.entries.empty()) throw InputError(line_no, "input contains no p-values");
    if (n_cols != 3) parsed.weights.clear();
    return parsed;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

int default_workers() {
    if (const char* env = std::getenv("SCALED_MTP_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Shared flags describing a procedure.
struct ProcFlags {
    bool sev = false;
    bool stp = false;
    double alpha = 0.05;
    double beta = 0.0;
    std::string scaling = "linear";
    std::string shape = "identity";
    std::string dependence = "simes";
    std::string mode = "up";
};

void add_proc_flags(CLI::App* cmd, ProcFlags& f, bool need_kind) {
    auto* sev = cmd->add_flag("--sev", f.sev, "scaled expectation (SEV) procedure");
    auto* stp = cmd->add_flag("--stp", f.stp, "scaled tail probability (STP) procedure");
    sev->excludes(stp);
    if (need_kind) {
        // exactly one of --sev/--stp, checked after parse
    }
    cmd->add_option("--alpha", f.alpha, "control level")->capture_default_str();
    cmd->add_option("--beta", f.beta, "exceedance level for STP")->capture_default_str();
    cmd->add_option("--scaling", f.scaling,
                    "scaling: linear|constant:<c>|truncated:<tau>|power:<gamma>")
        ->capture_default_str();
    cmd->add_option("--shape", f.shape, "shape for SEV: identity|harmonic")
        ->capture_default_str();
    cmd->add_option("--dependence", f.dependence, "STP assumption: simes|arbitrary")
        ->capture_default_str();
    cmd->add_option("--mode", f.mode, "SEV stepping: up|down")->capture_default_str();
}

smt::ProcedureVariant build_procedure(const ProcFlags& f, bool weights_present,
                                      const std::vector<double>& weights) {
    if (f.sev == f.stp) throw ParamError("exactly one of --sev or --stp is required");
    if (f.stp) {
        if (weights_present) throw ParamError("weights are only supported with --sev");
        smt::StpProcedureConfig cfg;
        cfg.alpha = f.alpha;
        cfg.beta = f.beta;
        cfg.scaling = parse_scaling(f.scaling);
        if (f.dependence == "simes") {
            cfg.dependence = smt::DependenceAssumption::SimesPositive;
        } else if (f.dependence == "arbitrary") {
            cfg.dependence = smt::DependenceAssumption::Arbitrary;
        } else {
            throw ParamError("unknown dependence assumption: " + f.dependence);
        }
        return cfg;
    }
    smt::SevProcedureConfig cfg;
    cfg.alpha = f.alpha;
    cfg.scaling = parse_scaling(f.scaling);
    cfg.shape = parse_shape(f.shape);
    if (weights_present) cfg.weights = smt::WeightVector(weights);
    if (f.mode == "up") {
        cfg.mode = smt::StepMode::StepUp;
    } else if (f.mode == "down") {
        cfg.mode = smt::StepMode::StepDown;
    } else {
        throw ParamError("unknown mode: " + f.mode);
    }
    return cfg;
}

json proc_json(const ProcFlags& f) {
    json j;
    j["kind"] = f.sev ? "sev" : "stp";
    j["alpha"] = f.alpha;
    j["scaling"] = f.scaling;
    if (f.sev) {
        j["shape"] = f.shape;
        j["mode"] = f.mode;
    } else {
        j["beta"] = f.beta;
        j["dependence"] = f.dependence;
    }
    return j;
}

// Model flags for the simulation commands.
struct ModelFlags {
    int m0 = 0;
    int m1 = 0;
    double delta = 0.0;
    std::string model = "independent";
    double rho = 0.3;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
    cmd->add_option("--m0", f.m0, "number of true nulls")->required();
    cmd->add_option("--m1", f.m1, "number of alternatives")->capture_default_str();
    cmd->add_option("--delta", f.delta, "alternative mean shift")->capture_default_str();
    cmd->add_option("--model", f.model, "independent|equicorrelated")->capture_default_str();
    cmd->add_option("--rho", f.rho, "equicorrelation")->capture_default_str();
}

smt::GaussianShiftModel build_model(const ModelFlags& f) {
    smt::GaussianShiftModel model;
    model.m0 = f.m0;
    model.m1 = f.m1;
    model.delta = f.delta;
    model.rho = f.rho;
    if (f.model == "independent") {
        model.dependence = smt::GaussianShiftModel::Dependence::Independent;
    } else if (f.model == "equicorrelated") {
        model.dependence = smt::GaussianShiftModel::Dependence::Equicorrelated;
    } else {
        throw ParamError("unknown model: " + f.model);
    }
    return model;
}

json model_json(const ModelFlags& f) {
    json j;
    j["m0"] = f.m0;
    j["m1"] = f.m1;
    j["delta"] = f.delta;
    j["model"] = f.model;
    if (f.model == "equicorrelated") j["rho"] = f.rho;
    return j;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& tok : split_csv_line(text)) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ParamError("bad number in list: " + tok);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

int cmd_reject(const std::string& input, const std::string& output,
               const std::string& format, const ProcFlags& flags) {
    const ParsedInput parsed = read_input(input);
    const smt::PValueSet pvals = smt::make_pvalue_set(parsed.entries);
    const int m = static_cast<int>(pvals.size());

    const smt::ProcedureVariant proc =
        build_procedure(flags, !parsed.weights.empty(), parsed.weights);

    smt::ThresholdSequence t;
    smt::RejectionOutcome outcome;
    smt::PValueSet ranked = pvals;
    if (const auto* sev = std::get_if<smt::SevProcedureConfig>(&proc)) {
        t = smt::sev_thresholds(*sev, m);
        ranked = smt::weighted_transform(pvals, sev->weights);
        outcome = sev->mode == smt::StepMode::StepUp ? smt::step_up(ranked, t)
                                                     : smt::step_down(ranked, t);
    } else {
        const auto& stp = std::get<smt::StpProcedureConfig>(proc);
        t = smt::stp_thresholds(stp, m);
        outcome = smt::step_down(ranked, t);
    }

    const auto order = ranked.rank_order();
    const int u = outcome.boundary_rank;

    std::ostringstream os;
    if (format == "json") {
        json rows = json::array();
        for (int rank = 1; rank <= m; ++rank) {
            const auto& e = pvals.entries[order[static_cast<std::size_t>(rank - 1)]];
            rows.push_back({{"id", e.id},
                            {"p", e.p},
                            {"rank", rank},
                            {"threshold", t.values[static_cast<std::size_t>(rank - 1)]},
                            {"rejected", rank <= u ? 1 : 0}});
        }
        json doc;
        doc["rows"] = rows;
        doc["summary"] = {{"U", u},
                          {"R", static_cast<int>(outcome.count())},
                          {"alpha", flags.alpha},
                          {"scaling", flags.scaling}};
        os << doc.dump(2) << "\n";
    } else {
        os << "id,p,rank,threshold,rejected\n";
        for (int rank = 1; rank <= m; ++rank) {
            const auto& e = pvals.entries[order[static_cast<std::size_t>(rank - 1)]];
            os << e.id << ',' << fmt17(e.p) << ',' << rank << ','
               << fmt17(t.values[static_cast<std::size_t>(rank - 1)]) << ','
               << (rank <= u ? 1 : 0) << '\n';
        }
        os << "# U=" << u << ",R=" << outcome.count() << ",alpha=" << fmt17(flags.alpha)
           << ",scaling=" << flags.scaling << '\n';
    }
    write_text(output, os.str());
    return 0;
}

int cmd_thresholds(int m, const std::string& output, const std::string& format,
                   const ProcFlags& flags) {
    const smt::ProcedureVariant proc = build_procedure(flags, false, {});
    smt::ThresholdSequence t;
    std::optional<smt::ThresholdSequence> corrected;
    if (const auto* sev = std::get_if<smt::SevProcedureConfig>(&proc)) {
        t = smt::sev_thresholds(*sev, m);
    } else {
        auto stp = std::get<smt::StpProcedureConfig>(proc);
        if (stp.dependence == smt::DependenceAssumption::Arbitrary) {
            corrected = smt::stp_thresholds(stp, m);
            stp.dependence = smt::DependenceAssumption::SimesPositive;
        }
        t = smt::stp_thresholds(stp, m);
    }

    std::ostringstream os;
    if (format == "json") {
        json rows = json::array();
        for (int i = 1; i <= m; ++i) {
            json row = {{"i", i}, {"t", t.values[static_cast<std::size_t>(i - 1)]}};
            if (corrected)
                row["t_corrected"] = corrected->values[static_cast<std::size_t>(i - 1)];
            rows.push_back(row);
        }
        json doc;
        doc["rows"] = rows;
        doc["alpha"] = flags.alpha;
        doc["scaling"] = flags.scaling;
        if (corrected) doc["correction"] = corrected->correction;
        os << doc.dump(2) << "\n";
    } else {
        os << (corrected ? "i,t,t_corrected\n" : "i,t\n");
        for (int i = 1; i <= m; ++i) {
            os << i << ',' << fmt17(t.values[static_cast<std::size_t>(i - 1)]);
            if (corrected)
                os << ',' << fmt17(corrected->values[static_cast<std::size_t>(i - 1)]);
            os << '\n';
        }
        if (corrected) os << "# C=" << fmt17(corrected->correction) << '\n';
    }
    write_text(output, os.str());
    return 0;
}

json estimate_json(const smt::Estimate& e) {
    return {{"estimate", e.value}, {"std_error", e.std_error}, {"n_reps", e.n_reps}};
}

json metrics_json(const smt::MetricReport& r) {
    json j;
    j["sev"] = estimate_json(r.sev);
    j["fdr"] = estimate_json(r.fdr);
    j["pfer"] = estimate_json(r.pfer);
    j["pcer"] = estimate_json(r.pcer);
    j["fwer"] = estimate_json(r.fwer);
    j["kfwer"] = estimate_json(r.kfwer);
    j["stp"] = estimate_json(r.stp);
    j["mean_tp"] = estimate_json(r.mean_tp);
    j["mean_r"] = estimate_json(r.mean_r);
    j["gain"] = estimate_json(r.gain);
    j["k"] = r.params.k;
    j["beta"] = r.params.beta;
    j["lambda"] = r.params.lambda;
    return j;
}

int cmd_verify(const ModelFlags& mf, const ProcFlags& pf, int n_reps, std::uint64_t seed,
               int workers, long k, double lambda, const std::string& output,
               const std::string& json_path) {
    const smt::GaussianShiftModel model = build_model(mf);
    const smt::ProcedureVariant proc = build_procedure(pf, false, {});
    smt::VerifyOptions opt;
    opt.n_reps = n_reps;
    opt.seed = seed;
    opt.workers = workers;
    opt.k = k;
    opt.lambda = lambda;

    const smt::VerifyReport report = smt::verify_control(model, proc, opt);

    std::ostringstream os;
    os << "metric,estimate,std_error,bound,pass\n";
    for (const auto& c : report.checks) {
        os << c.metric << ',' << fmt17(c.estimate) << ',' << fmt17(c.std_error) << ','
           << fmt17(c.bound) << ',' << (c.pass ? 1 : 0) << '\n';
    }
    write_text(output, os.str());

    if (!json_path.empty()) {
        json doc;
        // Worker count deliberately left out: it must not affect the bytes.
        doc["config"] = {{"command", "verify"},
                         {"model", model_json(mf)},
                         {"procedure", proc_json(pf)},
                         {"n_reps", n_reps},
                         {"seed", seed},
                         {"k", k},
                         {"lambda", lambda}};
        doc["metrics"] = metrics_json(report.metrics);
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"metric", c.metric},
                              {"estimate", c.estimate},
                              {"std_error", c.std_error},
                              {"bound", c.bound},
                              {"pass", c.pass}});
        doc["checks"] = checks;
        write_text(json_path, doc.dump(2) + "\n");
    }
    return report.all_pass() ? 0 : kExitControlFailed;
}

int cmd_optimize(const ModelFlags& mf, double alpha, const std::string& lambdas,
                 const std::string& gammas, const std::string& taus, int n_reps,
                 std::uint64_t seed, int workers, const std::string& output,
                 const std::string& json_path) {
    if (gammas.empty() == taus.empty())
        throw ParamError("exactly one of --gammas or --taus is required");

    const smt::GaussianShiftModel model = build_model(mf);
    smt::GainStudyConfig study;
    study.lambdas = parse_double_list(lambdas);
    study.alpha = alpha;
    study.n_reps = n_reps;
    study.seed = seed;
    study.workers = workers;
    if (!gammas.empty()) {
        study.family = smt::GainStudyConfig::Family::PowerGamma;
        study.gammas = parse_double_list(gammas);
    } else {
        study.family = smt::GainStudyConfig::Family::TruncatedTau;
        for (double v : parse_double_list(taus)) study.taus.push_back(static_cast<int>(v));
    }

    const auto curve = smt::optimize_parameter(study, model);

    std::ostringstream os;
    os << "lambda,parameter,gain,std_error\n";
    for (const auto& pt : curve) {
        os << fmt17(pt.lambda) << ',' << fmt17(pt.parameter) << ',' << fmt17(pt.gain) << ','
           << fmt17(pt.std_error) << '\n';
    }
    write_text(output, os.str());

    if (!json_path.empty()) {
        json doc;
        doc["config"] = {{"command", "optimize"},
                         {"model", model_json(mf)},
                         {"alpha", alpha},
                         {"lambdas", lambdas},
                         {"gammas", gammas},
                         {"taus", taus},
                         {"n_reps", n_reps},
                         {"seed", seed}};
        json rows = json::array();
        for (const auto& pt : curve)
            rows.push_back({{"lambda", pt.lambda},
                            {"parameter", pt.parameter},
                            {"gain", pt.gain},
                            {"std_error", pt.std_error}});
        doc["curve"] = rows;
        write_text(json_path, doc.dump(2) + "\n");
    }
    return 0;
}

int cmd_twotest(double lambda, double delta, const std::string& output,
                const std::string& format) {
    const double cv = smt::two_test_optimal_cv(delta, lambda);
    const double gain = smt::two_test_gain(delta, lambda, cv);
    const double min_effect = smt::two_test_min_effect(lambda);

    std::ostringstream os;
    if (format == "json") {
        json doc = {{"lambda", lambda},
                    {"delta", delta},
                    {"cv_opt", cv},
                    {"gain_opt", gain},
                    {"min_effect", min_effect}};
        os << doc.dump(2) << "\n";
    } else {
        os << "lambda,delta,cv_opt,gain_opt,min_effect\n";
        os << fmt17(lambda) << ',' << fmt17(delta) << ',' << fmt17(cv) << ',' << fmt17(gain)
           << ',' << fmt17(min_effect) << '\n';
    }
    write_text(output, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiple testing with scaled false discovery proportions"};
    app.require_subcommand(1);

    // reject
    auto* reject = app.add_subcommand("reject", "apply a procedure to a p-value file");
    std::string rej_input, rej_output, rej_format = "csv";
    ProcFlags rej_flags;
    reject->add_option("-i,--input", rej_input, "input file")->required();
    reject->add_option("-o,--output", rej_output, "output file (default stdout)");
    reject->add_option("--format", rej_format, "csv|json")->capture_default_str();
    add_proc_flags(reject, rej_flags, true);

    // thresholds
    auto* thresholds = app.add_subcommand("thresholds", "print critical values");
    int thr_m = 0;
    std::string thr_output, thr_format = "csv";
    ProcFlags thr_flags;
    thresholds->add_option("--m", thr_m, "number of hypotheses")->required();
    thresholds->add_option("-o,--output", thr_output, "output file (default stdout)");
    thresholds->add_option("--format", thr_format, "csv|json")->capture_default_str();
    add_proc_flags(thresholds, thr_flags, true);

    // verify
    auto* verify = app.add_subcommand("verify", "Monte-Carlo control check");
    ModelFlags ver_model;
    ProcFlags ver_flags;
    int ver_reps = 1000, ver_workers = default_workers();
    std::uint64_t ver_seed = 0;
    long ver_k = 1;
    double ver_lambda = 1.0;
    std::string ver_output, ver_json;
    add_model_flags(verify, ver_model);
    add_proc_flags(verify, ver_flags, true);
    verify->add_option("--n-reps", ver_reps, "replications")->capture_default_str();
    verify->add_option("--seed", ver_seed, "master seed")->required();
    verify->add_option("--workers", ver_workers, "worker threads")->capture_default_str();
    verify->add_option("--k", ver_k, "k-FWER order")->capture_default_str();
    verify->add_option("--lambda", ver_lambda, "gain penalty")->capture_default_str();
    verify->add_option("-o,--output", ver_output, "CSV output (default stdout)");
    verify->add_option("--json", ver_json, "JSON mirror path");

    // optimize
    auto* optimize = app.add_subcommand("optimize", "gain maximization curve");
    ModelFlags opt_model;
    double opt_alpha = 0.05;
    std::string opt_lambdas, opt_gammas, opt_taus, opt_output, opt_json;
    int opt_reps = 200, opt_workers = default_workers();
    std::uint64_t opt_seed = 0;
    add_model_flags(optimize, opt_model);
    optimize->add_option("--alpha", opt_alpha, "control level")->capture_default_str();
    optimize->add_option("--lambdas", opt_lambdas, "comma list of penalties")->required();
    optimize->add_option("--gammas", opt_gammas, "comma list of power exponents");
    optimize->add_option("--taus", opt_taus, "comma list of truncation points");
    optimize->add_option("--n-reps", opt_reps, "replications")->capture_default_str();
    optimize->add_option("--seed", opt_seed, "master seed")->required();
    optimize->add_option("--workers", opt_workers, "worker threads")->capture_default_str();
    optimize->add_option("-o,--output", opt_output, "CSV output (default stdout)");
    optimize->add_option("--json", opt_json, "JSON mirror path");

    // twotest
    auto* twotest = app.add_subcommand("twotest", "two-test closed-form model");
    double tt_lambda = 1.0, tt_delta = 1.0;
    std::string tt_output, tt_format = "csv";
    twotest->add_option("--lambda", tt_lambda, "false-positive price")->required();
    twotest->add_option("--delta", tt_delta, "effect size")->required();
    twotest->add_option("-o,--output", tt_output, "output file (default stdout)");
    twotest->add_option("--format", tt_format, "csv|json")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (reject->parsed())
            return cmd_reject(rej_input, rej_output, rej_format, rej_flags);
        if (thresholds->parsed())
            return cmd_thresholds(thr_m, thr_output, thr_format, thr_flags);
        if (verify->parsed())
            return cmd_verify(ver_model, ver_flags, ver_reps, ver_seed, ver_workers, ver_k,
                              ver_lambda, ver_output, ver_json);
        if (optimize->parsed())
            return cmd_optimize(opt_model, opt_alpha, opt_lambdas, opt_gammas, opt_taus,
                                opt_reps, opt_seed, opt_workers, opt_output, opt_json);
        if (twotest->parsed())
            return cmd_twotest(tt_lambda, tt_delta, tt_output, tt_format);
    } catch (const InputError& e) {
        std::cerr << "input error (line " << e.line << "): " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ParamError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
