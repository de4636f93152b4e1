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


#include "pauliprop.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <numbers>
#include <string>

#include <json.hpp>

#include "pauliprop/error.h"
#include "pauliprop/figures.h"
#include "pauliprop/io.h"
#include "pauliprop/magic.h"
#include "pauliprop/oracle.h"
#include "pauliprop/propagation.h"
#include "pauliprop/qaoa.h"

struct pp_circuit {
    pauliprop::Circuit circuit;
};

struct pp_channel {
    pauliprop::Ptm ptm;
};

struct pp_instance {
    pauliprop::E3Lin2Instance instance;
};

namespace {

using namespace pauliprop;

thread_local std::string last_error;

template <typename F>
pp_status guarded(F f) {
    try {
        f();
        last_error.clear();
        return PP_OK;
    } catch (const Error &e) {
        last_error = e.what();
        return static_cast<pp_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return PP_ERR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return PP_ERR_INTERNAL;
    }
}

void require(const void *p, const char *what) {
    if (p == nullptr) {
        fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Direction to_direction(pp_direction d) {
    switch (d) {
        case PP_SCHRODINGER:
            return Direction::Schrodinger;
        case PP_HEISENBERG:
            return Direction::Heisenberg;
    }
    fail(ErrorCode::InvalidArgument, "unknown direction");
}

ProjectionMode to_mode(pp_projection m) {
    switch (m) {
        case PP_PROJECT_GENERAL:
            return ProjectionMode::General;
        case PP_PROJECT_UNITAL:
            return ProjectionMode::Unital;
        case PP_PROJECT_TRACE_PRESERVING:
            return ProjectionMode::TracePreserving;
        case PP_PROJECT_BOTH:
            return ProjectionMode::Both;
    }
    fail(ErrorCode::InvalidArgument, "unknown projection mode");
}

size_t resolve_workers(size_t workers) {
    return workers == 0 ? default_workers() : workers;
}

template <typename T>
T param(const nlohmann::json &p, const char *key, T fallback) {
    if (!p.contains(key)) {
        return fallback;
    }
    try {
        return p[key].get<T>();
    } catch (const nlohmann::json::exception &) {
        fail(ErrorCode::Parse, std::string("params.") + key + ": wrong type");
    }
}

std::string figure(const std::string &which, const nlohmann::json &p) {
    uint64_t seed = param<uint64_t>(p, "seed", 1);
    size_t workers = resolve_workers(param<size_t>(p, "workers", 0));
    if (which == "fig1") {
        return fig1_csv(param<size_t>(p, "points", 41), param<double>(p, "extent", 0.3));
    }
    if (which == "fig2") {
        return fig2_csv(param<size_t>(p, "samples", 100000), seed, workers);
    }
    if (which == "fig3") {
        return fig3_csv(param<size_t>(p, "f_points", 100), param<size_t>(p, "theta_points", 100));
    }
    if (which == "fig5") {
        return fig5_csv(param<size_t>(p, "samples", 10000), seed, workers);
    }
    if (which == "fig6") {
        Fig6Config c;
        c.num_qubits = param<size_t>(p, "n", 32);
        c.sweep_m = param<size_t>(p, "m", 40);
        std::vector<double> gammas;
        for (int k = 0; k <= 8; k++) {
            gammas.push_back(k * std::numbers::pi / 32);
        }
        c.gammas = param<std::vector<double>>(p, "gammas", gammas);
        c.fixed_gamma = param<double>(p, "fixed_gamma", std::numbers::pi / 8);
        c.ms = param<std::vector<size_t>>(p, "ms", {20, 30, 40, 50, 60, 70, 80});
        c.max_degree = param<size_t>(p, "max_degree", 0);
        c.n_samples = param<uint64_t>(p, "N", 10000);
        c.delta = param<double>(p, "delta", 0.01);
        c.seed = seed;
        c.workers = workers;
        c.timing = param<bool>(p, "timing", true);
        return fig6_csv(c);
    }
    fail(ErrorCode::InvalidArgument, "unknown figure \"" + which + "\" (expected fig1, fig2, fig3, fig5 or fig6)");
}

}  // namespace

extern "C" {

const char *pp_version(void) {
    return kVersion.data();
}

const char *pp_last_error(void) {
    return last_error.c_str();
}

const char *pp_status_name(pp_status status) {
    switch (status) {
        case PP_OK:
            return "ok";
        case PP_ERR_INVALID_ARGUMENT:
            return "invalid_argument";
        case PP_ERR_PARSE:
            return "parse";
        case PP_ERR_VALIDATION:
            return "validation";
        case PP_ERR_BOUND_OVERFLOW:
            return "bound_overflow";
        case PP_ERR_ORACLE_TOO_LARGE:
            return "oracle_too_large";
        case PP_ERR_ZERO_OPERATOR:
            return "zero_operator";
        case PP_ERR_NOT_COMPLETELY_POSITIVE:
            return "not_completely_positive";
        case PP_ERR_SOLVER:
            return "solver";
        case PP_ERR_UNSUPPORTED:
            return "unsupported";
        default:
            return "internal";
    }
}

void pp_string_free(char *s) {
    std::free(s);
}

size_t pp_default_workers(void) {
    return default_workers();
}

pp_status pp_parse_direction(const char *name, pp_direction *out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = parse_direction(name) == Direction::Schrodinger ? PP_SCHRODINGER : PP_HEISENBERG;
    });
}

pp_status pp_parse_projection(const char *name, pp_projection *out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = static_cast<pp_projection>(static_cast<int>(parse_projection_mode(name)));
    });
}

pp_status pp_circuit_parse(const char *json, pp_circuit **out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new pp_circuit{parse_circuit(json)};
    });
}

pp_status pp_circuit_load(const char *path, pp_circuit **out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new pp_circuit{load_circuit(path)};
    });
}

void pp_circuit_free(pp_circuit *circuit) {
    delete circuit;
}

pp_status pp_circuit_num_qubits(const pp_circuit *circuit, size_t *out) {
    return guarded([&] {
        require(circuit, "circuit");
        require(out, "out");
        *out = circuit->circuit.num_qubits;
    });
}

pp_status pp_cost_json(const pp_circuit *circuit, pp_direction direction, char **json) {
    return guarded([&] {
        require(circuit, "circuit");
        require(json, "json");
        *json = copy_string(cost_report_json(cost_report(circuit->circuit, to_direction(direction))));
    });
}

pp_status pp_plan_samples(const pp_circuit *circuit, pp_direction direction, double epsilon, double delta,
                          uint64_t *n_samples) {
    return guarded([&] {
        require(circuit, "circuit");
        require(n_samples, "n_samples");
        *n_samples = plan_samples(circuit->circuit, to_direction(direction), epsilon, delta);
    });
}

pp_status pp_estimate_run(const pp_circuit *circuit, pp_direction direction, uint64_t n_samples, double delta,
                          uint64_t seed, size_t workers, pp_estimate *out) {
    return guarded([&] {
        require(circuit, "circuit");
        require(out, "out");
        EstimateReport r =
            estimate(circuit->circuit, to_direction(direction), n_samples, delta, seed, resolve_workers(workers));
        *out = pp_estimate{r.mean,    r.stddev,           r.min,  r.max,     r.n_samples, r.epsilon,
                           r.delta,   r.cost.total_bound, r.seed, r.workers, r.wall_time};
    });
}

pp_status pp_estimate_json(const pp_circuit *circuit, pp_direction direction, uint64_t n_samples, double delta,
                           uint64_t seed, size_t workers, char **json) {
    return guarded([&] {
        require(circuit, "circuit");
        require(json, "json");
        EstimateReport r =
            estimate(circuit->circuit, to_direction(direction), n_samples, delta, seed, resolve_workers(workers));
        *json = copy_string(estimate_report_json(r));
    });
}

pp_status pp_run_exact(const pp_circuit *circuit, double *value) {
    return guarded([&] {
        require(circuit, "circuit");
        require(value, "value");
        *value = run_exact(circuit->circuit);
    });
}

pp_status pp_channel_parse(const char *json, pp_channel **out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new pp_channel{parse_channel(json)};
    });
}

void pp_channel_free(pp_channel *channel) {
    delete channel;
}

pp_status pp_channel_qubits(const pp_channel *channel, size_t *k_in, size_t *k_out) {
    return guarded([&] {
        require(channel, "channel");
        require(k_in, "k_in");
        require(k_out, "k_out");
        *k_in = channel->ptm.k_in();
        *k_out = channel->ptm.k_out();
    });
}

pp_status pp_channel_norms(const pp_channel *channel, double *d_forward, double *d_adjoint) {
    return guarded([&] {
        require(channel, "channel");
        require(d_forward, "d_forward");
        require(d_adjoint, "d_adjoint");
        *d_forward = channel_norm(channel->ptm);
        *d_adjoint = adjoint_norm(channel->ptm);
    });
}

pp_status pp_channel_classify(const pp_channel *channel, char **json) {
    return guarded([&] {
        require(channel, "channel");
        require(json, "json");
        *json = copy_string(classification_json(classify_ptm(channel->ptm)));
    });
}

pp_status pp_choi_classify(const double *re, const double *im, pp_projection mode, char **json) {
    return guarded([&] {
        require(re, "re");
        require(json, "json");
        ComplexMatrix rho(4, 4);
        for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) {
                rho(r, c) = Complex(re[4 * r + c], im ? im[4 * r + c] : 0.0);
            }
        }
        *json = copy_string(classification_json(classify_channel(rho, to_mode(mode))));
    });
}

pp_status pp_state_census(size_t num_qubits, uint64_t samples, uint64_t seed, size_t workers, uint64_t counts[3]) {
    return guarded([&] {
        require(counts, "counts");
        StateCensus c = state_census(num_qubits, samples, seed, resolve_workers(workers));
        counts[0] = c.stabilizer_mixture;
        counts[1] = c.hyper_octahedral;
        counts[2] = c.magic;
    });
}

pp_status pp_channel_census_csv(uint64_t samples, pp_projection mode, uint64_t seed, size_t workers, int records,
                                int with_adjoints, char **csv) {
    return guarded([&] {
        require(csv, "csv");
        ChannelCensus c = classification_census(samples, to_mode(mode), seed, resolve_workers(workers),
                                                records != 0, with_adjoints != 0);
        std::string out = census_histogram_csv(c);
        if (records) {
            out += "\n" + census_records_csv(c);
        }
        *csv = copy_string(out);
    });
}

pp_status pp_instance_generate(size_t num_qubits, size_t m, size_t max_degree, uint64_t seed, pp_instance **out) {
    return guarded([&] {
        require(out, "out");
        Rng rng = make_stream(seed, 0);
        *out = new pp_instance{generate_instance(num_qubits, m, rng, max_degree)};
    });
}

pp_status pp_instance_load(const char *path, pp_instance **out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new pp_instance{load_instance(path)};
    });
}

void pp_instance_free(pp_instance *instance) {
    delete instance;
}

pp_status pp_instance_json(const pp_instance *instance, char **json) {
    return guarded([&] {
        require(instance, "instance");
        require(json, "json");
        *json = copy_string(instance_json(instance->instance));
    });
}

pp_status pp_qaoa_run(const pp_instance *instance, double gamma, double beta, uint64_t n_samples, double delta,
                      uint64_t seed, size_t workers, pp_qaoa_record *out) {
    return guarded([&] {
        require(instance, "instance");
        require(out, "out");
        if (n_samples == 0) {
            fail(ErrorCode::InvalidArgument, "need at least one sample");
        }
        QaoaRecord r = run_experiment(instance->instance, {gamma, beta}, n_samples, delta, seed,
                                      resolve_workers(workers));
        *out = pp_qaoa_record{r.gamma, r.beta,  r.num_qubits, r.m,        r.max_degree, r.n_samples,
                              r.c_heis, r.c_vdn, r.eps_heis,   r.eps_nest, r.abs_err,    r.seconds};
    });
}

pp_status pp_qaoa_exact(const pp_instance *instance, double gamma, double beta, double *value) {
    return guarded([&] {
        require(instance, "instance");
        require(value, "value");
        *value = exact_expectation(instance->instance, {gamma, beta});
    });
}

const char *pp_qaoa_csv_header(void) {
    static const std::string header = qaoa_csv_header();
    return header.c_str();
}

pp_status pp_qaoa_csv_row(const pp_qaoa_record *record, int timing, char **csv) {
    return guarded([&] {
        require(record, "record");
        require(csv, "csv");
        QaoaRecord r;
        r.gamma = record->gamma;
        r.beta = record->beta;
        r.num_qubits = record->num_qubits;
        r.m = record->m;
        r.max_degree = record->max_degree;
        r.n_samples = record->n_samples;
        r.c_heis = record->c_heis;
        r.c_vdn = record->c_vdn;
        r.eps_heis = record->eps_heis;
        r.eps_nest = record->eps_nest;
        r.abs_err = record->abs_err;
        r.seconds = record->seconds;
        *csv = copy_string(qaoa_csv_row(r, timing != 0));
    });
}

pp_status pp_figure_csv(const char *which, const char *params, char **csv) {
    return guarded([&] {
        require(which, "which");
        require(csv, "csv");
        nlohmann::json p = nlohmann::json::object();
        if (params != nullptr && *params != '\0') {
            try {
                p = nlohmann::json::parse(params);
            } catch (const nlohmann::json::parse_error &) {
                fail(ErrorCode::Parse, "params: malformed JSON");
            }
            if (!p.is_object()) {
                fail(ErrorCode::Parse, "params: expected an object");
            }
        }
        *csv = copy_string(figure(which, p));
    });
}

}  // extern "C"
