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

#include "pauliprop/propagation.h"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "pauliprop/error.h"
#include "pauliprop/monte_carlo.h"

namespace pauliprop {

std::string_view direction_name(Direction d) {
    return d == Direction::Schrodinger ? "schrodinger" : "heisenberg";
}

Direction parse_direction(std::string_view text) {
    if (text == "schrodinger") {
        return Direction::Schrodinger;
    }
    if (text == "heisenberg") {
        return Direction::Heisenberg;
    }
    fail(ErrorCode::Parse, "unknown direction \"" + std::string(text) + "\"");
}

CostReport cost_report(const Circuit &circuit, Direction direction) {
    CostReport out;
    bool forward = direction == Direction::Schrodinger;
    out.state_cost = forward ? stabilizer_norm(circuit.input) : max_pauli_trace(circuit.input);
    out.observable_cost = forward ? max_pauli_trace(circuit.observable) : stabilizer_norm(circuit.observable);
    out.total_bound = out.state_cost * out.observable_cost;
    out.channel_costs.reserve(circuit.channels.size());
    for (const auto &app : circuit.channels) {
        double c = forward ? channel_norm(app.ptm) : adjoint_norm(app.ptm);
        out.channel_costs.push_back(c);
        out.total_bound *= c;
    }
    return out;
}

double hoeffding_epsilon(double total_bound, uint64_t n_samples, double delta) {
    if (n_samples == 0) {
        fail(ErrorCode::InvalidArgument, "need at least one sample");
    }
    if (!(delta > 0 && delta < 1)) {
        fail(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
    }
    return 2 * total_bound * std::sqrt(std::log(2 / delta) / (2 * static_cast<double>(n_samples)));
}

uint64_t plan_samples(double total_bound, double epsilon, double delta) {
    if (!(epsilon > 0)) {
        fail(ErrorCode::InvalidArgument, "epsilon must be positive");
    }
    if (!(delta > 0 && delta < 1)) {
        fail(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
    }
    if (!(total_bound <= kMaxTotalBound)) {
        fail(ErrorCode::BoundOverflow, "cost bound overflows double precision");
    }
    double range = 2 * total_bound;
    double n = std::ceil(std::log(2 / delta) * range * range / (2 * epsilon * epsilon));
    if (!(n < 1.8e19)) {
        fail(ErrorCode::BoundOverflow, "planned sample count does not fit in 64 bits");
    }
    return std::max<uint64_t>(1, static_cast<uint64_t>(n));
}

uint64_t plan_samples(const Circuit &circuit, Direction direction, double epsilon, double delta) {
    return plan_samples(cost_report(circuit, direction).total_bound, epsilon, delta);
}

Propagator::Propagator(const Circuit &circuit, Direction direction)
    : direction_(direction), num_qubits_(circuit.num_qubits), cost_(cost_report(circuit, direction)) {
    circuit.validate();
    if (!(cost_.total_bound <= kMaxTotalBound)) {
        fail(ErrorCode::BoundOverflow, "cost bound overflows double precision");
    }
    bool forward = direction == Direction::Schrodinger;
    start_ = FactoredSampler(forward ? circuit.input : circuit.observable);
    finish_ = FactoredTracer(forward ? circuit.observable : circuit.input);

    size_t count = circuit.channels.size();
    steps_.reserve(count);
    for (size_t s = 0; s < count; s++) {
        const ChannelApplication &app = circuit.channels[forward ? s : count - 1 - s];
        const Eigen::MatrixXd &r = app.ptm.matrix();
        Step step{app.qubits, {}};
        size_t size = r.rows();
        step.columns.resize(size);
        for (size_t j = 0; j < size; j++) {
            Column col{static_cast<uint32_t>(outputs_.size()), 0};
            double norm = 0;
            for (size_t i = 0; i < size; i++) {
                double v = forward ? r(i, j) : r(j, i);
                if (std::abs(v) > kZeroCoefficient) {
                    norm += std::abs(v);
                }
            }
            double running = 0;
            for (size_t i = 0; i < size; i++) {
                double v = forward ? r(i, j) : r(j, i);
                if (std::abs(v) > kZeroCoefficient) {
                    running += std::abs(v);
                    outputs_.push_back(static_cast<uint16_t>(i));
                    cumulative_.push_back(running / norm);
                    weights_.push_back(v > 0 ? norm : -norm);
                    col.count++;
                }
            }
            if (col.count > 0) {
                cumulative_.back() = 1.0;
            }
            step.columns[j] = col;
        }
        steps_.push_back(std::move(step));
    }
}

double Propagator::sample(Rng &rng) const {
    thread_local PauliString p;
    if (p.num_qubits() != num_qubits_) {
        p = PauliString(num_qubits_);
    }
    double c = start_.sample_into(rng, p);
    for (const Step &step : steps_) {
        size_t j = p.local_index_unchecked(step.qubits);
        Column col = step.columns[j];
        if (col.count == 0) {
            return 0;
        }
        size_t k = col.begin;
        if (col.count > 1) {
            double u = uniform01(rng);
            const double *lo = cumulative_.data() + col.begin;
            const double *hi = lo + col.count;
            k = std::min<size_t>(std::upper_bound(lo, hi, u) - cumulative_.data(), col.begin + col.count - 1);
        }
        p.set_local_unchecked(step.qubits, outputs_[k]);
        c *= weights_[k];
    }
    assert(std::abs(c) <= cost_.total_bound / (direction_ == Direction::Schrodinger ? cost_.observable_cost
                                                                                     : cost_.state_cost) *
                              (1 + 1e-9));
    return c * finish_.trace(p);
}

double schrodinger_sample(const Circuit &circuit, Rng &rng) {
    return Propagator(circuit, Direction::Schrodinger).sample(rng);
}

double heisenberg_sample(const Circuit &circuit, Rng &rng) {
    return Propagator(circuit, Direction::Heisenberg).sample(rng);
}

size_t default_workers() {
    if (const char *env = std::getenv("PAULIPROP_WORKERS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<size_t>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

EstimateReport estimate(const Propagator &propagator, uint64_t n_samples, double delta, uint64_t seed,
                        size_t workers) {
    if (n_samples == 0) {
        fail(ErrorCode::InvalidArgument, "need at least one sample");
    }
    if (workers == 0) {
        workers = default_workers();
    }
    auto t0 = std::chrono::steady_clock::now();
    EstimateReport report;
    report.direction = propagator.direction();
    report.n_samples = n_samples;
    report.delta = delta;
    report.cost = propagator.cost();
    report.seed = seed;
    report.workers = workers;
    report.epsilon = hoeffding_epsilon(report.cost.total_bound, n_samples, delta);

    SampleStats stats = sample_mean([&](Rng &rng) { return propagator.sample(rng); }, n_samples, seed, workers);
    report.mean = stats.mean;
    report.stddev = stats.stddev;
    report.min = stats.min;
    report.max = stats.max;
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

EstimateReport estimate(const Circuit &circuit, Direction direction, uint64_t n_samples, double delta,
                        uint64_t seed, size_t workers) {
    Propagator propagator(circuit, direction);
    return estimate(propagator, n_samples, delta, seed, workers);
}

}  // namespace pauliprop
