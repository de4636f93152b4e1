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

#ifndef PAULIPROP_QAOA_H
#define PAULIPROP_QAOA_H

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "pauliprop/circuit.h"
#include "pauliprop/monte_carlo.h"
#include "pauliprop/rng.h"

namespace pauliprop {

/// x_a + x_b + x_c = d (mod 2).
struct Equation {
    size_t a = 0;
    size_t b = 0;
    size_t c = 0;
    int d = 0;
};

struct E3Lin2Instance {
    size_t num_qubits = 0;
    /// Largest number of equations any qubit may appear in.
    size_t max_degree = 0;
    std::vector<Equation> equations;

    size_t num_equations() const {
        return equations.size();
    }
    /// Throws Validation on repeated qubits within an equation, repeated
    /// triples, d outside {0, 1} or a qubit above max_degree.
    void validate() const;
};

/// floor(m / 10).
size_t default_max_degree(size_t m);

/// Rejection-samples m distinct triples with every qubit in at most
/// max_degree equations (floor(m/10) when max_degree is 0) and uniform d.
/// Throws InvalidArgument if 3m > n * max_degree or the retry budget runs out.
E3Lin2Instance generate_instance(size_t num_qubits, size_t m, Rng &rng, size_t max_degree = 0);

struct QaoaParams {
    double gamma = 0;
    double beta = std::numbers::pi / 4;
};

/// |gamma, beta> = e^{-i beta B} e^{-i gamma C} |+...+> with the identity as
/// observable; callers substitute the term they need.
Circuit build_circuit(const E3Lin2Instance &inst, const QaoaParams &params);

/// Circuit for <sigma_Z^(j)>. With lightcone set, only the rotations sharing a
/// qubit with equation j and the X rotations on its qubits are kept.
Circuit term_circuit(const E3Lin2Instance &inst, const QaoaParams &params, size_t j, bool lightcone = true);

/// 3 (max_degree - 1) + 1.
size_t lightcone_size(size_t max_degree);

/// m / sqrt(2N) * sqrt(ln(2/delta)) * (|sin gamma| + |cos gamma|)^(3 (max_degree - 1) + 1).
double epsilon_heis(size_t m, uint64_t n_samples, double delta, double gamma, size_t max_degree);

/// m / sqrt(N) * sqrt(ln(2/delta)) * (|cos 2beta| + |sin 2beta|)^3.
double epsilon_nest(size_t m, uint64_t n_samples, double delta, double beta);

struct HeisenbergQaoaResult {
    double value = 0;
    uint64_t samples_per_term = 0;
    /// Sum over terms of the per-term Hoeffding epsilons times 1/2.
    double term_epsilon = 0;
    /// Largest number of diagonal rotations kept for a single term.
    size_t max_lightcone = 0;
};

/// One Heisenberg estimate per term with n_samples each, combined as
/// 1/2 sum_j (-1)^{d_j} <sigma_Z^(j)>. Term j uses a seed drawn from
/// make_stream(seed, j).
HeisenbergQaoaResult heisenberg_estimate(const E3Lin2Instance &inst, const QaoaParams &params, uint64_t n_samples,
                                         double delta, uint64_t seed, size_t workers, bool lightcone = true);

/// Sampler for the bitstring estimator of <C>. Requires n <= 64.
class VdnSampler {
  public:
    VdnSampler(const E3Lin2Instance &inst, const QaoaParams &params);

    /// Value for the bitstring x.
    double evaluate(uint64_t x) const;
    double sample(Rng &rng) const;
    /// Largest possible |sample|.
    double range() const {
        return range_;
    }

  private:
    struct Branch {
        double coeff = 0;
        int y_count = 0;
        uint64_t flip = 0;
        /// Equations whose parity changes under flip.
        std::vector<size_t> touched;
    };
    struct Term {
        uint64_t mask = 0;
        double sign = 1;
        std::vector<Branch> branches;
    };

    size_t num_qubits_;
    double gamma_;
    std::vector<uint64_t> masks_;
    std::vector<double> signs_;
    std::vector<Term> terms_;
    double range_ = 0;
};

SampleStats vdn_estimate(const E3Lin2Instance &inst, const QaoaParams &params, uint64_t n_samples, uint64_t seed,
                         size_t workers);

/// Exact <C> by summing the bitstring estimator over all 2^n strings.
/// Throws InvalidArgument for n > 24.
double exact_expectation(const E3Lin2Instance &inst, const QaoaParams &params);

struct QaoaRecord {
    double gamma = 0;
    double beta = 0;
    size_t num_qubits = 0;
    size_t m = 0;
    size_t max_degree = 0;
    uint64_t n_samples = 0;
    double c_heis = 0;
    double c_vdn = 0;
    double eps_heis = 0;
    double eps_nest = 0;
    double abs_err = 0;
    double seconds = 0;
};

/// Both estimators on one configuration. The vdn estimator uses seed + 1.
QaoaRecord run_experiment(const E3Lin2Instance &inst, const QaoaParams &params, uint64_t n_samples, double delta,
                          uint64_t seed, size_t workers);

}  // namespace pauliprop

#endif
