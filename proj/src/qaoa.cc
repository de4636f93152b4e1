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


#include "pauliprop/qaoa.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <set>
#include <string>
#include <tuple>

#include "pauliprop/error.h"
#include "pauliprop/propagation.h"

namespace pauliprop {

namespace {

constexpr int kRestarts = 200;
constexpr int kDrawsPerEquation = 10000;

size_t draw_index(Rng &rng, size_t n) {
    return std::min(n - 1, static_cast<size_t>(uniform01(rng) * static_cast<double>(n)));
}

std::tuple<size_t, size_t, size_t> sorted_triple(const Equation &e) {
    size_t q[3] = {e.a, e.b, e.c};
    std::sort(q, q + 3);
    return {q[0], q[1], q[2]};
}

double equation_sign(const Equation &e) {
    return e.d ? -1.0 : 1.0;
}

PauliString z_word(size_t n, const Equation &e) {
    PauliString p(n);
    for (size_t q : {e.a, e.b, e.c}) {
        p.set(q, PAULI_Z);
    }
    return p;
}

bool shares_qubit(const Equation &x, const Equation &y) {
    for (size_t p : {x.a, x.b, x.c}) {
        if (p == y.a || p == y.b || p == y.c) {
            return true;
        }
    }
    return false;
}

Circuit qaoa_circuit(const E3Lin2Instance &inst, const QaoaParams &params, const Equation *term) {
    size_t n = inst.num_qubits;
    Ptm plus_rotation = make_pauli_rotation(PauliString::from_text("ZZZ"), params.gamma / 2);
    Ptm minus_rotation = make_pauli_rotation(PauliString::from_text("ZZZ"), -params.gamma / 2);
    Ptm mixer = make_pauli_rotation(PauliString::from_text("X"), params.beta);

    Circuit c;
    c.num_qubits = n;
    c.input = FactoredOperator::product(n, named_state("plus"));
    for (const Equation &e : inst.equations) {
        if (term && !shares_qubit(*term, e)) {
            continue;
        }
        c.channels.push_back({e.d ? minus_rotation : plus_rotation, {e.a, e.b, e.c}});
    }
    if (term) {
        for (size_t q : {term->a, term->b, term->c}) {
            c.channels.push_back({mixer, {q}});
        }
        c.observable = FactoredOperator::from_pauli(z_word(n, *term));
    } else {
        for (size_t q = 0; q < n; q++) {
            c.channels.push_back({mixer, {q}});
        }
        c.observable = FactoredOperator::from_pauli(PauliString(n));
    }
    return c;
}

}  // namespace

void E3Lin2Instance::validate() const {
    std::set<std::tuple<size_t, size_t, size_t>> seen;
    std::vector<size_t> degree(num_qubits, 0);
    for (size_t j = 0; j < equations.size(); j++) {
        const Equation &e = equations[j];
        std::string where = "equations[" + std::to_string(j) + "]: ";
        if (e.a >= num_qubits || e.b >= num_qubits || e.c >= num_qubits) {
            fail(ErrorCode::Validation, where + "qubit index out of range");
        }
        if (e.a == e.b || e.a == e.c || e.b == e.c) {
            fail(ErrorCode::Validation, where + "qubits must be distinct");
        }
        if (e.d != 0 && e.d != 1) {
            fail(ErrorCode::Validation, where + "d must be 0 or 1");
        }
        if (!seen.insert(sorted_triple(e)).second) {
            fail(ErrorCode::Validation, where + "repeated qubit triple");
        }
        for (size_t q : {e.a, e.b, e.c}) {
            if (++degree[q] > max_degree) {
                fail(ErrorCode::Validation, where + "qubit " + std::to_string(q) + " appears in more than " +
                                                std::to_string(max_degree) + " equations");
            }
        }
    }
}

size_t default_max_degree(size_t m) {
    return m / 10;
}

E3Lin2Instance generate_instance(size_t num_qubits, size_t m, Rng &rng, size_t max_degree) {
    if (max_degree == 0) {
        max_degree = default_max_degree(m);
    }
    if (m == 0 || num_qubits < 3 || 3 * m > num_qubits * max_degree) {
        fail(ErrorCode::InvalidArgument, "cannot place " + std::to_string(m) + " equations on " +
                                             std::to_string(num_qubits) + " qubits with degree at most " +
                                             std::to_string(max_degree));
    }
    for (int restart = 0; restart < kRestarts; restart++) {
        E3Lin2Instance inst;
        inst.num_qubits = num_qubits;
        inst.max_degree = max_degree;
        std::set<std::tuple<size_t, size_t, size_t>> seen;
        std::vector<size_t> degree(num_qubits, 0);
        bool stuck = false;
        while (inst.equations.size() < m && !stuck) {
            stuck = true;
            for (int draw = 0; draw < kDrawsPerEquation; draw++) {
                Equation e;
                e.a = draw_index(rng, num_qubits);
                e.b = draw_index(rng, num_qubits);
                e.c = draw_index(rng, num_qubits);
                if (e.a == e.b || e.a == e.c || e.b == e.c) {
                    continue;
                }
                if (degree[e.a] >= max_degree || degree[e.b] >= max_degree || degree[e.c] >= max_degree) {
                    continue;
                }
                if (!seen.insert(sorted_triple(e)).second) {
                    continue;
                }
                e.d = uniform01(rng) < 0.5 ? 0 : 1;
                degree[e.a]++;
                degree[e.b]++;
                degree[e.c]++;
                inst.equations.push_back(e);
                stuck = false;
                break;
            }
        }
        if (!stuck) {
            return inst;
        }
    }
    fail(ErrorCode::InvalidArgument, "instance generation did not succeed within the retry budget");
}

Circuit build_circuit(const E3Lin2Instance &inst, const QaoaParams &params) {
    return qaoa_circuit(inst, params, nullptr);
}

Circuit term_circuit(const E3Lin2Instance &inst, const QaoaParams &params, size_t j, bool lightcone) {
    if (j >= inst.equations.size()) {
        fail(ErrorCode::InvalidArgument, "term index out of range");
    }
    if (lightcone) {
        return qaoa_circuit(inst, params, &inst.equations[j]);
    }
    Circuit c = build_circuit(inst, params);
    c.observable = FactoredOperator::from_pauli(z_word(inst.num_qubits, inst.equations[j]));
    return c;
}

size_t lightcone_size(size_t max_degree) {
    return max_degree == 0 ? 1 : 3 * (max_degree - 1) + 1;
}

double epsilon_heis(size_t m, uint64_t n_samples, double delta, double gamma, size_t max_degree) {
    double base = std::abs(std::sin(gamma)) + std::abs(std::cos(gamma));
    double exponent = 3.0 * (static_cast<double>(max_degree) - 1) + 1;
    return static_cast<double>(m) / std::sqrt(2.0 * static_cast<double>(n_samples)) * std::sqrt(std::log(2 / delta)) *
           std::pow(base, exponent);
}

double epsilon_nest(size_t m, uint64_t n_samples, double delta, double beta) {
    double f = std::abs(std::cos(2 * beta)) + std::abs(std::sin(2 * beta));
    return static_cast<double>(m) / std::sqrt(static_cast<double>(n_samples)) * std::sqrt(std::log(2 / delta)) * f *
           f * f;
}

HeisenbergQaoaResult heisenberg_estimate(const E3Lin2Instance &inst, const QaoaParams &params, uint64_t n_samples,
                                         double delta, uint64_t seed, size_t workers, bool lightcone) {
    HeisenbergQaoaResult out;
    out.samples_per_term = n_samples;
    for (size_t j = 0; j < inst.equations.size(); j++) {
        Circuit c = term_circuit(inst, params, j, lightcone);
        size_t diagonal = c.channels.size() - (lightcone ? 3 : inst.num_qubits);
        out.max_lightcone = std::max(out.max_lightcone, diagonal);
        Rng seeder = make_stream(seed, j);
        EstimateReport r = estimate(c, Direction::Heisenberg, n_samples, delta, seeder(), workers);
        out.value += 0.5 * equation_sign(inst.equations[j]) * r.mean;
        out.term_epsilon += 0.5 * r.epsilon;
    }
    return out;
}

VdnSampler::VdnSampler(const E3Lin2Instance &inst, const QaoaParams &params)
    : num_qubits_(inst.num_qubits), gamma_(params.gamma) {
    if (num_qubits_ > 64) {
        fail(ErrorCode::Unsupported, "the bitstring estimator supports at most 64 qubits");
    }
    for (const Equation &e : inst.equations) {
        masks_.push_back((uint64_t{1} << e.a) | (uint64_t{1} << e.b) | (uint64_t{1} << e.c));
        signs_.push_back(equation_sign(e));
    }
    double cs[2] = {std::cos(2 * params.beta), std::sin(2 * params.beta)};
    for (size_t j = 0; j < inst.equations.size(); j++) {
        const Equation &e = inst.equations[j];
        Term term;
        term.mask = masks_[j];
        term.sign = signs_[j];
        size_t qubits[3] = {e.a, e.b, e.c};
        for (int y = 0; y < 8; y++) {
            Branch b;
            b.coeff = 1;
            for (int t = 0; t < 3; t++) {
                bool is_y = (y >> t) & 1;
                b.coeff *= cs[is_y];
                if (is_y) {
                    b.flip |= uint64_t{1} << qubits[t];
                    b.y_count++;
                }
            }
            if (std::abs(b.coeff) < 1e-15) {
                continue;
            }
            for (size_t k = 0; k < masks_.size(); k++) {
                if (std::popcount(masks_[k] & b.flip) & 1) {
                    b.touched.push_back(k);
                }
            }
            range_ += 0.5 * std::abs(b.coeff);
            term.branches.push_back(std::move(b));
        }
        terms_.push_back(std::move(term));
    }
}

double VdnSampler::evaluate(uint64_t x) const {
    auto eigen = [&](uint64_t mask) { return (std::popcount(x & mask) & 1) ? -1.0 : 1.0; };
    double total = 0;
    for (const Term &term : terms_) {
        double value = 0;
        for (const Branch &b : term.branches) {
            double delta = 0;
            for (size_t k : b.touched) {
                delta -= signs_[k] * eigen(masks_[k]);
            }
            double angle = gamma_ * delta;
            double re = 0;
            switch (b.y_count & 3) {
                case 0:
                    re = std::cos(angle);
                    break;
                case 1:
                    re = -std::sin(angle);
                    break;
                case 2:
                    re = -std::cos(angle);
                    break;
                default:
                    re = std::sin(angle);
                    break;
            }
            value += b.coeff * re;
        }
        total += 0.5 * term.sign * eigen(term.mask) * value;
    }
    return total;
}

double VdnSampler::sample(Rng &rng) const {
    uint64_t x = rng();
    if (num_qubits_ < 64) {
        x &= (uint64_t{1} << num_qubits_) - 1;
    }
    return evaluate(x);
}

SampleStats vdn_estimate(const E3Lin2Instance &inst, const QaoaParams &params, uint64_t n_samples, uint64_t seed,
                         size_t workers) {
    if (n_samples == 0) {
        fail(ErrorCode::InvalidArgument, "need at least one sample");
    }
    VdnSampler sampler(inst, params);
    return sample_mean([&](Rng &rng) { return sampler.sample(rng); }, n_samples, seed,
                       workers == 0 ? default_workers() : workers);
}

double exact_expectation(const E3Lin2Instance &inst, const QaoaParams &params) {
    if (inst.num_qubits > 24) {
        fail(ErrorCode::InvalidArgument, "exact enumeration is limited to 24 qubits");
    }
    VdnSampler sampler(inst, params);
    uint64_t count = uint64_t{1} << inst.num_qubits;
    double total = 0;
    for (uint64_t x = 0; x < count; x++) {
        total += sampler.evaluate(x);
    }
    return total / static_cast<double>(count);
}

QaoaRecord run_experiment(const E3Lin2Instance &inst, const QaoaParams &params, uint64_t n_samples, double delta,
                          uint64_t seed, size_t workers) {
    auto t0 = std::chrono::steady_clock::now();
    QaoaRecord r;
    r.gamma = params.gamma;
    r.beta = params.beta;
    r.num_qubits = inst.num_qubits;
    r.m = inst.num_equations();
    r.max_degree = inst.max_degree;
    r.n_samples = n_samples;
    r.c_heis = heisenberg_estimate(inst, params, n_samples, delta, seed, workers).value;
    r.c_vdn = vdn_estimate(inst, params, n_samples, seed + 1, workers).mean;
    r.eps_heis = epsilon_heis(r.m, n_samples, delta, params.gamma, inst.max_degree);
    r.eps_nest = epsilon_nest(r.m, n_samples, delta, params.beta);
    r.abs_err = std::abs(r.c_heis - r.c_vdn);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace pauliprop
