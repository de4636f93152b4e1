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

#ifndef PAULIPROP_PROPAGATION_H
#define PAULIPROP_PROPAGATION_H

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pauliprop/circuit.h"
#include "pauliprop/dense_operator.h"
#include "pauliprop/rng.h"

namespace pauliprop {

enum class Direction {
    Schrodinger,
    Heisenberg,
};

std::string_view direction_name(Direction d);
/// "schrodinger" or "heisenberg". Throws Parse otherwise.
Direction parse_direction(std::string_view text);

/// Bounds above which a total cost is refused.
inline constexpr double kMaxTotalBound = 1e300;

/// Per-sample magnitude bound split into its factors.
///
/// Schrodinger: state_cost = D(rho_0), channel_costs = D(Lambda_i),
/// observable_cost = max_sigma |Tr(sigma E)|.
/// Heisenberg: state_cost = max_sigma |Tr(sigma rho_0)| (1 for states),
/// channel_costs = D(Lambda_i^dagger), observable_cost = D(E).
struct CostReport {
    double state_cost = 1;
    std::vector<double> channel_costs;
    double observable_cost = 1;
    double total_bound = 1;
};

CostReport cost_report(const Circuit &circuit, Direction direction);

/// eps = 2 T sqrt(ln(2/delta) / (2N)).
double hoeffding_epsilon(double total_bound, uint64_t n_samples, double delta);

/// Smallest N with hoeffding_epsilon(total_bound, N, delta) <= epsilon.
/// Throws InvalidArgument unless epsilon > 0 and delta in (0, 1).
uint64_t plan_samples(double total_bound, double epsilon, double delta);
uint64_t plan_samples(const Circuit &circuit, Direction direction, double epsilon, double delta);

/// Compiled sampler for one circuit and direction.
///
/// Every channel (or its adjoint) is turned into per-column sampling tables
/// once. Columns with a single nonzero entry are walked without drawing a
/// random number, which makes Clifford gates and channels outside a
/// trajectory's support cost one table lookup.
class Propagator {
  public:
    /// Throws BoundOverflow if the total bound exceeds kMaxTotalBound and
    /// ZeroOperator if the starting operator has a zero factor.
    Propagator(const Circuit &circuit, Direction direction);

    /// One draw of c_hat * Tr(sigma_hat X) where X is E (Schrodinger) or
    /// rho_0 (Heisenberg).
    double sample(Rng &rng) const;

    const CostReport &cost() const {
        return cost_;
    }
    Direction direction() const {
        return direction_;
    }

  private:
    struct Column {
        uint32_t begin = 0;
        uint32_t count = 0;
    };
    struct Step {
        std::vector<size_t> qubits;
        std::vector<Column> columns;
    };

    Direction direction_;
    size_t num_qubits_;
    CostReport cost_;
    FactoredSampler start_;
    FactoredTracer finish_;
    std::vector<Step> steps_;
    std::vector<uint16_t> outputs_;
    std::vector<double> cumulative_;
    std::vector<double> weights_;
};

/// Single draws, for tests. Each call compiles the circuit.
double schrodinger_sample(const Circuit &circuit, Rng &rng);
double heisenberg_sample(const Circuit &circuit, Rng &rng);

struct EstimateReport {
    Direction direction = Direction::Schrodinger;
    double mean = 0;
    double stddev = 0;
    double min = 0;
    double max = 0;
    uint64_t n_samples = 0;
    double epsilon = 0;
    double delta = 0;
    CostReport cost;
    uint64_t seed = 0;
    size_t workers = 1;
    double wall_time = 0;
};

/// Worker count from PAULIPROP_WORKERS, else the hardware concurrency.
size_t default_workers();

/// Mean of n_samples draws. Worker w draws from make_stream(seed, w); the
/// first n_samples % workers workers take one extra sample. The result is
/// bit-identical for fixed (seed, workers, n_samples).
EstimateReport estimate(const Circuit &circuit, Direction direction, uint64_t n_samples, double delta,
                        uint64_t seed, size_t workers);

/// Same, for an already compiled propagator.
EstimateReport estimate(const Propagator &propagator, uint64_t n_samples, double delta, uint64_t seed,
                        size_t workers);

}  // namespace pauliprop

#endif
