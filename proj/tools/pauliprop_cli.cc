// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// pauliprop command-line tool. Talks to the library only through the C API.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pauliprop.h"

namespace {

using ordered_json = nlohmann::ordered_json;

/// Carries a library status out of a subcommand.
struct Failure {
    pp_status status;
    std::string message;
};

int exit_code(pp_status s) {
    switch (s) {
        case PP_ERR_PARSE:
            return 2;
        case PP_ERR_VALIDATION:
        case PP_ERR_NOT_COMPLETELY_POSITIVE:
        case PP_ERR_ZERO_OPERATOR:
            return 3;
        case PP_ERR_BOUND_OVERFLOW:
            return 4;
        case PP_ERR_ORACLE_TOO_LARGE:
            return 5;
        default:
            return 1;
    }
}

void check(pp_status s) {
    if (s != PP_OK) {
        throw Failure{s, pp_last_error()};
    }
}

std::string take(char *s) {
    std::string out(s);
    pp_string_free(s);
    return out;
}

template <typename T, void (*Free)(T *)>
struct Handle {
    T *p = nullptr;
    Handle() = default;
    Handle(const Handle &) = delete;
    Handle &operator=(const Handle &) = delete;
    ~Handle() {
        Free(p);
    }
};

using CircuitHandle = Handle<pp_circuit, pp_circuit_free>;
using ChannelHandle = Handle<pp_channel, pp_channel_free>;
using InstanceHandle = Handle<pp_instance, pp_instance_free>;

std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Failure{PP_ERR_INVALID_ARGUMENT, "cannot write " + path};
    }
    out << text;
}

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{PP_ERR_INVALID_ARGUMENT, "cannot open " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string metadata(const std::string &name, const std::vector<std::pair<std::string, std::string>> &params) {
    std::string out = std::string("# pauliprop ") + pp_version() + " " + name;
    for (const auto &[k, v] : params) {
        out += " " + k + "=" + v;
    }
    return out + "\n";
}

struct RunOptions {
    std::string circuit;
    std::string direction = "heisenberg";
    std::optional<uint64_t> samples;
    std::optional<double> epsilon;
    double delta = 0.01;
    uint64_t seed = 0;
    size_t workers = 0;
    std::string output;
    std::string format = "json";
};

void add_run_options(CLI::App *cmd, RunOptions &o, bool allow_both) {
    cmd->add_option("circuit", o.circuit, "Circuit JSON file")->required();
    auto *dir = cmd->add_option("-d,--direction", o.direction, "schrodinger, heisenberg" +
                                                                   std::string(allow_both ? " or both" : ""));
    dir->check(allow_both ? CLI::IsMember({"schrodinger", "heisenberg", "both"})
                          : CLI::IsMember({"schrodinger", "heisenberg"}));
    auto *n = cmd->add_option("-n,--samples", o.samples, "Number of samples");
    auto *e = cmd->add_option("-e,--epsilon", o.epsilon, "Target error; N is planned from it");
    n->excludes(e);
    cmd->add_option("--delta", o.delta, "Failure probability")->capture_default_str();
    cmd->add_option("-s,--seed", o.seed, "RNG seed")->required();
    cmd->add_option("-w,--workers", o.workers, "Worker threads (0: PAULIPROP_WORKERS or all cores)");
    cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
    cmd->add_option("-f,--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

uint64_t resolve_samples(const RunOptions &o, const pp_circuit *c, pp_direction d) {
    if (o.samples) {
        return *o.samples;
    }
    if (!o.epsilon) {
        throw Failure{PP_ERR_INVALID_ARGUMENT, "one of --samples or --epsilon is required"};
    }
    uint64_t n = 0;
    check(pp_plan_samples(c, d, *o.epsilon, o.delta, &n));
    return n;
}

ordered_json run_one(const RunOptions &o, const pp_circuit *c, const std::string &direction) {
    pp_direction d;
    check(pp_parse_direction(direction.c_str(), &d));
    uint64_t n = resolve_samples(o, c, d);
    char *json = nullptr;
    check(pp_estimate_json(c, d, n, o.delta, o.seed, o.workers, &json));
    return ordered_json::parse(take(json));
}

std::string report_csv_header() {
    return "direction,mean,stddev,min,max,n_samples,epsilon,delta,total_bound,seed,workers,wall_time\n";
}

std::string report_csv_row(const ordered_json &r) {
    std::ostringstream out;
    out.precision(17);
    out << r["direction"].get<std::string>() << "," << r["mean"] << "," << r["stddev"] << "," << r["min"] << ","
        << r["max"] << "," << r["n_samples"] << "," << r["epsilon"] << "," << r["delta"] << ","
        << r["cost"]["total_bound"] << "," << r["seed"] << "," << r["workers"] << "," << r["wall_time"] << "\n";
    return out.str();
}

void cmd_estimate(const RunOptions &o) {
    CircuitHandle c;
    check(pp_circuit_load(o.circuit.c_str(), &c.p));
    std::vector<std::string> dirs;
    if (o.direction == "both") {
        dirs = {"schrodinger", "heisenberg"};
    } else {
        dirs = {o.direction};
    }
    std::vector<ordered_json> reports;
    for (const auto &d : dirs) {
        reports.push_back(run_one(o, c.p, d));
    }
    if (o.format == "csv") {
        std::string out = metadata("estimate", {{"circuit", o.circuit}, {"seed", std::to_string(o.seed)}});
        out += report_csv_header();
        for (const auto &r : reports) {
            out += report_csv_row(r);
        }
        emit(o.output, out);
        return;
    }
    if (reports.size() == 1) {
        emit(o.output, reports[0].dump(2) + "\n");
        return;
    }
    ordered_json j;
    j["schrodinger"] = reports[0];
    j["heisenberg"] = reports[1];
    j["discrepancy"] = std::abs(reports[0]["mean"].get<double>() - reports[1]["mean"].get<double>());
    j["combined_epsilon"] = reports[0]["epsilon"].get<double>() + reports[1]["epsilon"].get<double>();
    emit(o.output, j.dump(2) + "\n");
}

void cmd_verify(const RunOptions &o) {
    CircuitHandle c;
    check(pp_circuit_load(o.circuit.c_str(), &c.p));
    double exact = 0;
    check(pp_run_exact(c.p, &exact));
    std::vector<std::string> dirs =
        o.direction == "both" ? std::vector<std::string>{"schrodinger", "heisenberg"} : std::vector{o.direction};
    ordered_json out = ordered_json::array();
    bool all = true;
    for (const auto &d : dirs) {
        ordered_json r = run_one(o, c.p, d);
        double diff = std::abs(r["mean"].get<double>() - exact);
        bool pass = diff <= r["epsilon"].get<double>();
        all = all && pass;
        ordered_json v;
        v["direction"] = d;
        v["estimate"] = r["mean"];
        v["exact"] = exact;
        v["abs_diff"] = diff;
        v["epsilon"] = r["epsilon"];
        v["delta"] = r["delta"];
        v["n_samples"] = r["n_samples"];
        v["pass"] = pass;
        out.push_back(v);
    }
    if (o.format == "csv") {
        std::string text = metadata("verify", {{"circuit", o.circuit}, {"seed", std::to_string(o.seed)}});
        text += "direction,estimate,exact,abs_diff,epsilon,delta,n_samples,pass\n";
        for (const auto &v : out) {
            std::ostringstream row;
            row.precision(17);
            row << v["direction"].get<std::string>() << "," << v["estimate"] << "," << v["exact"] << ","
                << v["abs_diff"] << "," << v["epsilon"] << "," << v["delta"] << "," << v["n_samples"] << ","
                << (v["pass"].get<bool>() ? 1 : 0) << "\n";
            text += row.str();
        }
        emit(o.output, text);
    } else {
        ordered_json j;
        j["results"] = out;
        j["pass"] = all;
        emit(o.output, j.dump(2) + "\n");
    }
}

struct FigureOptions {
    std::string which;
    std::string params = "{}";
    std::optional<uint64_t> seed;
    std::optional<size_t> workers;
    std::optional<uint64_t> samples;
    std::string output;
};

void cmd_figures(const FigureOptions &o) {
    ordered_json p;
    try {
        p = ordered_json::parse(o.params);
    } catch (const nlohmann::json::parse_error &) {
        throw Failure{PP_ERR_PARSE, "--params: malformed JSON"};
    }
    if (!p.is_object()) {
        throw Failure{PP_ERR_PARSE, "--params: expected a JSON object"};
    }
    bool random = o.which == "fig2" || o.which == "fig5" || o.which == "fig6";
    if (random && !o.seed && !p.contains("seed")) {
        throw Failure{PP_ERR_INVALID_ARGUMENT, o.which + " needs --seed"};
    }
    if (o.seed) {
        p["seed"] = *o.seed;
    }
    if (o.workers) {
        p["workers"] = *o.workers;
    }
    if (o.samples) {
        p[o.which == "fig6" ? "N" : "samples"] = *o.samples;
    }
    char *csv = nullptr;
    check(pp_figure_csv(o.which.c_str(), p.dump().c_str(), &csv));
    emit(o.output, take(csv));
}

struct QaoaOptions {
    std::string instance;
    size_t n = 16;
    size_t m = 20;
    size_t max_degree = 0;
    std::vector<double> gammas;
    double beta = M_PI / 4;
    uint64_t samples = 10000;
    double delta = 0.01;
    uint64_t seed = 0;
    size_t workers = 0;
    bool no_timing = false;
    bool exact = false;
    std::string save_instance;
    std::string output;
};

void cmd_qaoa(const QaoaOptions &o) {
    InstanceHandle inst;
    if (!o.instance.empty()) {
        check(pp_instance_load(o.instance.c_str(), &inst.p));
    } else {
        check(pp_instance_generate(o.n, o.m, o.max_degree, o.seed, &inst.p));
    }
    if (!o.save_instance.empty()) {
        char *json = nullptr;
        check(pp_instance_json(inst.p, &json));
        emit(o.save_instance, take(json));
    }
    std::vector<double> gammas = o.gammas.empty() ? std::vector<double>{M_PI / 8} : o.gammas;
    std::string meta_gammas;
    for (size_t i = 0; i < gammas.size(); i++) {
        meta_gammas += (i ? ";" : "") + fmt(gammas[i]);
    }
    std::string out = metadata("qaoa", {{"instance", o.instance.empty() ? "generated" : o.instance},
                                        {"n", std::to_string(o.n)},
                                        {"m", std::to_string(o.m)},
                                        {"gammas", meta_gammas},
                                        {"N", std::to_string(o.samples)},
                                        {"seed", std::to_string(o.seed)}});
    std::string header = pp_qaoa_csv_header();
    if (o.exact) {
        header.insert(header.size() - 1, ",C_exact");
    }
    out += header;
    for (double g : gammas) {
        pp_qaoa_record r;
        check(pp_qaoa_run(inst.p, g, o.beta, o.samples, o.delta, o.seed, o.workers, &r));
        char *row = nullptr;
        check(pp_qaoa_csv_row(&r, o.no_timing ? 0 : 1, &row));
        std::string line = take(row);
        if (o.exact) {
            double v = 0;
            check(pp_qaoa_exact(inst.p, g, o.beta, &v));
            line.insert(line.size() - 1, "," + fmt(v));
        }
        out += line;
    }
    emit(o.output, out);
}

struct CensusOptions {
    std::string mode = "general";
    uint64_t samples = 10000;
    size_t qubits = 2;
    uint64_t seed = 0;
    size_t workers = 0;
    bool records = false;
    bool adjoints = false;
    std::string output;
};

void cmd_census(const CensusOptions &o) {
    std::string out = metadata("census", {{"mode", o.mode},
                                          {"samples", std::to_string(o.samples)},
                                          {"seed", std::to_string(o.seed)}});
    if (o.mode == "states") {
        uint64_t counts[3];
        check(pp_state_census(o.qubits, o.samples, o.seed, o.workers, counts));
        const char *names[3] = {"stabilizer_mixture", "hyper_octahedral", "magic"};
        out += "category,count,fraction\n";
        for (int i = 0; i < 3; i++) {
            double frac = o.samples ? static_cast<double>(counts[i]) / static_cast<double>(o.samples) : 0.0;
            out += std::string(names[i]) + "," + std::to_string(counts[i]) + "," + fmt(frac) + "\n";
        }
    } else {
        pp_projection mode;
        check(pp_parse_projection(o.mode.c_str(), &mode));
        char *csv = nullptr;
        check(pp_channel_census_csv(o.samples, mode, o.seed, o.workers, o.records, o.adjoints, &csv));
        out += take(csv);
    }
    emit(o.output, out);
}

struct ChannelOptions {
    std::string spec;
    std::string file;
    std::vector<double> choi;
    std::string mode = "general";
    std::string output;
};

std::string channel_text(const ChannelOptions &o) {
    if (!o.spec.empty()) {
        return o.spec;
    }
    if (!o.file.empty()) {
        return read_text(o.file);
    }
    throw Failure{PP_ERR_INVALID_ARGUMENT, "give a channel with --spec or --file"};
}

void cmd_classify(const ChannelOptions &o) {
    char *json = nullptr;
    if (!o.choi.empty()) {
        if (o.choi.size() != 16 && o.choi.size() != 32) {
            throw Failure{PP_ERR_INVALID_ARGUMENT, "--choi takes 16 real parts, optionally followed by 16 imaginary parts"};
        }
        pp_projection mode;
        check(pp_parse_projection(o.mode.c_str(), &mode));
        check(pp_choi_classify(o.choi.data(), o.choi.size() == 32 ? o.choi.data() + 16 : nullptr, mode, &json));
    } else {
        ChannelHandle ch;
        check(pp_channel_parse(channel_text(o).c_str(), &ch.p));
        check(pp_channel_classify(ch.p, &json));
    }
    emit(o.output, ordered_json::parse(take(json)).dump(2) + "\n");
}

void cmd_norms(const ChannelOptions &o) {
    ChannelHandle ch;
    check(pp_channel_parse(channel_text(o).c_str(), &ch.p));
    size_t k_in = 0;
    size_t k_out = 0;
    double d = 0;
    double d_adj = 0;
    check(pp_channel_qubits(ch.p, &k_in, &k_out));
    check(pp_channel_norms(ch.p, &d, &d_adj));
    ordered_json j;
    j["k_in"] = k_in;
    j["k_out"] = k_out;
    j["d_forward"] = d;
    j["d_adjoint"] = d_adj;
    if (k_in == 1 && k_out == 1) {
        char *json = nullptr;
        check(pp_channel_classify(ch.p, &json));
        ordered_json c = ordered_json::parse(take(json));
        j["robustness"] = c["robustness"];
        j["category"] = c["category"];
    }
    emit(o.output, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pauli propagation estimators, oracles and figure datasets"};
    app.set_version_flag("--version", std::string(pp_version()));
    app.require_subcommand(1);

    RunOptions est;
    auto *estimate = app.add_subcommand("estimate", "Estimate <E> for a circuit file");
    add_run_options(estimate, est, true);

    RunOptions ver;
    auto *verify = app.add_subcommand("verify", "Compare an estimate with the dense oracle (n <= 8)");
    add_run_options(verify, ver, true);

    FigureOptions fig;
    auto *figures = app.add_subcommand("figures", "Write a figure dataset as CSV");
    figures->add_option("which", fig.which, "fig1, fig2, fig3, fig5 or fig6")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig5", "fig6"}));
    figures->add_option("--params", fig.params, "JSON object of figure parameters");
    figures->add_option("-s,--seed", fig.seed, "RNG seed (fig2, fig5, fig6)");
    figures->add_option("-w,--workers", fig.workers, "Worker threads");
    figures->add_option("-n,--samples", fig.samples, "Sample count (N per term for fig6)");
    figures->add_option("-o,--output", fig.output, "Output file (default stdout)");

    QaoaOptions qa;
    auto *qaoa = app.add_subcommand("qaoa", "QAOA on E3LIN2: Heisenberg vs bitstring estimator");
    auto *inst_opt = qaoa->add_option("-i,--instance", qa.instance, "Instance JSON file");
    qaoa->add_option("--qubits", qa.n, "Qubits for a generated instance")->excludes(inst_opt)->capture_default_str();
    qaoa->add_option("-m,--equations", qa.m, "Equations for a generated instance")
        ->excludes(inst_opt)
        ->capture_default_str();
    qaoa->add_option("--max-degree", qa.max_degree, "Per-qubit equation cap (0: floor(m/10))")->excludes(inst_opt);
    qaoa->add_option("-g,--gamma", qa.gammas, "Gamma values (default pi/8)")->delimiter(',');
    qaoa->add_option("-b,--beta", qa.beta, "Mixer angle")->capture_default_str();
    qaoa->add_option("-n,--samples", qa.samples, "Samples per term")->capture_default_str();
    qaoa->add_option("--delta", qa.delta, "Failure probability")->capture_default_str();
    qaoa->add_option("-s,--seed", qa.seed, "RNG seed")->required();
    qaoa->add_option("-w,--workers", qa.workers, "Worker threads");
    qaoa->add_flag("--no-timing", qa.no_timing, "Write 0 in the seconds column");
    qaoa->add_flag("--exact", qa.exact, "Add the exact value (n <= 24)");
    qaoa->add_option("--save-instance", qa.save_instance, "Write the instance JSON here");
    qaoa->add_option("-o,--output", qa.output, "Output file (default stdout)");

    CensusOptions ce;
    auto *census = app.add_subcommand("census", "Classify random Hilbert-Schmidt states or channels");
    census->add_option("--mode", ce.mode, "general, unital, trace_preserving, both or states")
        ->check(CLI::IsMember({"general", "unital", "trace_preserving", "both", "states"}))
        ->capture_default_str();
    census->add_option("-n,--samples", ce.samples, "Samples")->capture_default_str();
    census->add_option("--qubits", ce.qubits, "State size for --mode states")->capture_default_str();
    census->add_option("-s,--seed", ce.seed, "RNG seed")->required();
    census->add_option("-w,--workers", ce.workers, "Worker threads");
    census->add_flag("--records", ce.records, "Append per-sample records");
    census->add_flag("--adjoints", ce.adjoints, "Also classify the transposed PTMs");
    census->add_option("-o,--output", ce.output, "Output file (default stdout)");

    ChannelOptions cl;
    auto *classify = app.add_subcommand("classify-channel", "Venn category of a single-qubit channel");
    auto *cl_spec = classify->add_option("--spec", cl.spec, "Channel spec JSON");
    auto *cl_file = classify->add_option("--file", cl.file, "Channel spec file");
    auto *cl_choi = classify->add_option("--choi", cl.choi, "Normalized Choi state, 16 or 32 numbers")->delimiter(',');
    cl_choi->excludes(cl_spec)->excludes(cl_file);
    classify->add_option("--mode", cl.mode, "Projection for --choi")
        ->check(CLI::IsMember({"general", "unital", "trace_preserving", "both"}));
    classify->add_option("-o,--output", cl.output, "Output file (default stdout)");

    ChannelOptions nm;
    auto *norms = app.add_subcommand("norms", "Stabilizer norms of a channel and its adjoint");
    norms->add_option("--spec", nm.spec, "Channel spec JSON");
    norms->add_option("--file", nm.file, "Channel spec file");
    norms->add_option("-o,--output", nm.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*estimate) {
            cmd_estimate(est);
        } else if (*verify) {
            cmd_verify(ver);
        } else if (*figures) {
            cmd_figures(fig);
        } else if (*qaoa) {
            cmd_qaoa(qa);
        } else if (*census) {
            cmd_census(ce);
        } else if (*classify) {
            cmd_classify(cl);
        } else if (*norms) {
            cmd_norms(nm);
        }
    } catch (const Failure &f) {
        ordered_json err;
        err["error"]["status"] = pp_status_name(f.status);
        err["error"]["code"] = static_cast<int>(f.status);
        err["error"]["message"] = f.message;
        std::cerr << err.dump() << "\n";
        return exit_code(f.status);
    }
    return 0;
}
