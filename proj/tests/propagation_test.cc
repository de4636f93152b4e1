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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "pauliprop/error.h"
#include "pauliprop/oracle.h"
#include "random_circuits.h"
#include "test_util.h"

using namespace pauliprop;
namespace ts = pauliprop::test_support;
using ts::product_circuit;

namespace {

const double kPi = std::numbers::pi;

}  // namespace

TEST(propagation, schrodinger_branches_by_hand) {
    // rho = (I + Z)/2: branch I gives Tr(I Z) = 0, branch Z gives Tr(Z Z) = 2.
    Circuit c = product_circuit("zero", {}, "Z");
    Propagator prop(c, Direction::Schrodinger);
    Rng rng = make_stream(1, 0);
    int twos = 0;
    const int n = 100000;
    for (int i = 0; i < n; i++) {
        double v = prop.sample(rng);
        ASSERT_TRUE(v == 0 || v == 2) << v;
        twos += v == 2;
    }
    EXPECT_NEAR(twos / double(n), 0.5, 0.01);
    EXPECT_EQ(prop.cost().observable_cost, 2);
    EXPECT_EQ(prop.cost().total_bound, 2);
}

TEST(propagation, heisenberg_identity_circuit_is_deterministic) {
    Circuit c = product_circuit("zero", {}, "Z");
    EstimateReport r = estimate(c, Direction::Heisenberg, 1000, 0.01, 5, 1);
    EXPECT_EQ(r.mean, 1);
    EXPECT_EQ(r.stddev, 0);
    EXPECT_EQ(r.min, 1);
    EXPECT_EQ(r.max, 1);
    EXPECT_EQ(r.cost.total_bound, 1);
}

TEST(propagation, t_gate_then_x) {
    Circuit c = product_circuit("zero", {{make_gate("t"), {0}}}, "X");
    EXPECT_NEAR(run_exact(c), 0, 1e-15);
    for (Direction d : {Direction::Schrodinger, Direction::Heisenberg}) {
        EstimateReport r = estimate(c, d, 200000, 0.01, 3, 1);
        EXPECT_NEAR(r.mean, 0, r.epsilon);
    }
}

TEST(propagation, depolarized_rotation_on_z) {
    Circuit c = product_circuit("zero", {{make_depolarized_rotation(0.5, kPi / 2), {0}}}, "Z");
    double exact = run_exact(c);
    EXPECT_NEAR(exact, 0.5, 1e-12);
    EstimateReport r = estimate(c, Direction::Heisenberg, 1000, 0.01, 3, 1);
    EXPECT_NEAR(r.mean, exact, 1e-15);
    EstimateReport s = estimate(c, Direction::Schrodinger, 200000, 0.01, 3, 1);
    EXPECT_NEAR(s.mean, exact, s.epsilon);
}

TEST(propagation, t_on_plus_measured_in_x) {
    Circuit c = product_circuit("plus", {{make_gate("t"), {0}}}, "X");
    for (Direction d : {Direction::Schrodinger, Direction::Heisenberg}) {
        EstimateReport r = estimate(c, d, 400000, 0.01, 8, 1);
        EXPECT_NEAR(r.mean, 1 / std::sqrt(2.0), r.epsilon);
        EXPECT_NEAR(r.mean, 1 / std::sqrt(2.0), 0.01);
    }
}

TEST(propagation, annihilated_paulis_give_zero) {
    Circuit c = product_circuit("plus", {{make_measure_z(), {0}}}, "X");
    Propagator prop(c, Direction::Schrodinger);
    Rng rng = make_stream(2, 0);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(prop.sample(rng), 0);
    }
    EstimateReport r = estimate(c, Direction::Heisenberg, 100, 0.01, 2, 1);
    EXPECT_EQ(r.mean, 0);
    EXPECT_EQ(r.stddev, 0);
}

TEST(propagation, clifford_circuits_have_unit_weights) {
    Rng rng = make_stream(3, 0);
    const char *one[] = {"h", "s", "x", "y", "z", "sdg"};
    const char *two[] = {"cnot", "cz", "swap"};
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 2 + trial % 5;
        std::vector<ChannelApplication> channels;
        for (int k = 0; k < 25; k++) {
            if (ts::pick(rng, 2) == 0) {
                channels.push_back({make_gate(one[ts::pick(rng, 6)]), ts::distinct_qubits(rng, n, 1)});
            } else {
                channels.push_back({make_gate(two[ts::pick(rng, 3)]), ts::distinct_qubits(rng, n, 2)});
            }
        }
        std::string obs;
        for (size_t q = 0; q < n; q++) {
            obs += "IXYZ"[ts::pick(rng, 4)];
        }
        const char *states[] = {"zero", "plus", "plus_i"};
        Circuit c = product_circuit(states[trial % 3], channels, obs);
        EstimateReport r = estimate(c, Direction::Heisenberg, 2000, 0.01, 11, 1);
        EXPECT_EQ(r.cost.total_bound, 1);
        EXPECT_EQ(r.stddev, 0);
        EXPECT_NEAR(r.mean, run_exact(c), 1e-9);
        for (double cost : cost_report(c, Direction::Schrodinger).channel_costs) {
            EXPECT_EQ(cost, 1);
        }
    }
}

TEST(propagation, random_circuits_agree_with_oracle) {
    Rng rng = make_stream(4, 0);
    int within[2] = {0, 0};
    const int circuits = 30;
    for (int trial = 0; trial < circuits; trial++) {
        Circuit c = ts::random_library_circuit(rng, 4, 10, 4);
        double exact = run_exact(c);
        for (int d = 0; d < 2; d++) {
            Direction dir = d == 0 ? Direction::Schrodinger : Direction::Heisenberg;
            uint64_t n = plan_samples(c, dir, 0.1, 0.05);
            EstimateReport r = estimate(c, dir, n, 0.05, 100 + trial, 1);
            within[d] += std::abs(r.mean - exact) <= r.epsilon;
        }
    }
    EXPECT_GE(within[0], circuits - 3);
    EXPECT_GE(within[1], circuits - 3);
}

TEST(propagation, reproducible_for_fixed_seed_and_workers) {
    Rng rng = make_stream(5, 0);
    Circuit c = ts::random_library_circuit(rng, 5, 12, 4);
    for (size_t workers : {1, 3, 4}) {
        EstimateReport a = estimate(c, Direction::Schrodinger, 10001, 0.01, 77, workers);
        EstimateReport b = estimate(c, Direction::Schrodinger, 10001, 0.01, 77, workers);
        EXPECT_EQ(a.mean, b.mean);
        EXPECT_EQ(a.stddev, b.stddev);
        EXPECT_EQ(a.workers, workers);
    }
    EstimateReport a = estimate(c, Direction::Heisenberg, 10000, 0.01, 77, 2);
    EstimateReport b = estimate(c, Direction::Heisenberg, 10000, 0.01, 78, 2);
    EXPECT_EQ(a.seed, 77);
    EXPECT_EQ(b.seed, 78);
}

TEST(propagation, fewer_samples_than_workers) {
    Circuit c = product_circuit("zero", {{make_gate("h"), {0}}}, "X");
    EstimateReport r = estimate(c, Direction::Heisenberg, 3, 0.01, 1, 8);
    EXPECT_EQ(r.n_samples, 3);
    EXPECT_NEAR(r.mean, 1, 1e-15);
}

TEST(propagation, plan_samples_formula) {
    long double direct = std::ceil(std::log(200.0L) * 4.0L / (2.0L * 1e-4L));
    EXPECT_EQ(plan_samples(1, 0.01, 0.01), static_cast<uint64_t>(direct));
    EXPECT_EQ(plan_samples(1, 0.01, 0.01), 105967u);
    uint64_t n1 = plan_samples(1.5, 0.02, 0.05);
    uint64_t n2 = plan_samples(3.0, 0.02, 0.05);
    EXPECT_NEAR(double(n2) / double(n1), 4, 1e-4);
    EXPECT_EQ(plan_samples(1, 1e9, 0.01), 1u);
    for (double t : {0.5, 1.0, 7.0}) {
        uint64_t n = plan_samples(t, 0.03, 0.01);
        EXPECT_LE(hoeffding_epsilon(t, n, 0.01), 0.03 * (1 + 1e-12));
        EXPECT_GT(hoeffding_epsilon(t, n - 1, 0.01), 0.03);
    }
    EXPECT_THROW(plan_samples(1, 0, 0.01), Error);
    EXPECT_THROW(plan_samples(1, 0.1, 1.5), Error);
}

TEST(propagation, cost_decomposition) {
    std::vector<ChannelApplication> chain;
    const int depth = 6;
    for (int k = 0; k < depth; k++) {
        chain.push_back({make_depolarized_rotation(0.9, kPi / 4), {0}});
    }
    Circuit c = product_circuit("plus", chain, "XI");
    CostReport h = cost_report(c, Direction::Heisenberg);
    EXPECT_NEAR(h.total_bound, std::pow(0.9 * std::sqrt(2.0), depth), 1e-12);
    EXPECT_EQ(h.state_cost, 1);
    EXPECT_EQ(h.observable_cost, 1);
    CostReport s = cost_report(c, Direction::Schrodinger);
    EXPECT_EQ(s.state_cost, 1);
    EXPECT_EQ(s.observable_cost, 4);
    EXPECT_NEAR(s.total_bound, 4 * std::pow(0.9 * std::sqrt(2.0), depth), 1e-12);

    std::vector<ChannelApplication> quiet;
    for (int k = 0; k < depth; k++) {
        quiet.push_back({make_depolarized_rotation(0.6, kPi / 4), {0}});
    }
    EXPECT_EQ(cost_report(product_circuit("plus", quiet, "X"), Direction::Heisenberg).total_bound, 1);
}

TEST(propagation, heisenberg_bound_ignores_input_state) {
    std::vector<ChannelApplication> chain{{make_gate("t"), {0}}, {make_gate("cnot"), {0, 1}}, {make_gate("t"), {1}}};
    double a = cost_report(product_circuit("zero", chain, "XZ"), Direction::Heisenberg).total_bound;
    double b = cost_report(product_circuit("H_state", chain, "XZ"), Direction::Heisenberg).total_bound;
    EXPECT_EQ(a, b);
    EXPECT_NEAR(a, 2, 1e-12);
    double s = cost_report(product_circuit("H_state", chain, "XZ"), Direction::Schrodinger).total_bound;
    EXPECT_NEAR(s, std::pow((1 + std::sqrt(2.0)) / 2, 2) * 2 * 4, 1e-12);
}

TEST(propagation, weights_stay_within_bounds) {
    Rng rng = make_stream(6, 0);
    for (int trial = 0; trial < 20; trial++) {
        Circuit c = ts::random_library_circuit(rng, 5, 12, 8);
        for (Direction d : {Direction::Schrodinger, Direction::Heisenberg}) {
            Propagator prop(c, d);
            for (int i = 0; i < 2000; i++) {
                EXPECT_LE(std::abs(prop.sample(rng)), prop.cost().total_bound * (1 + 1e-9));
            }
        }
    }
}

TEST(propagation, bound_overflow) {
    std::vector<ChannelApplication> chain(2100, ChannelApplication{make_gate("t"), {0}});
    Circuit c = product_circuit("zero", chain, "X");
    try {
        Propagator prop(c, Direction::Heisenberg);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BoundOverflow);
    }
    EXPECT_THROW(plan_samples(c, Direction::Heisenberg, 0.1, 0.1), Error);
}

TEST(propagation, directions_parse) {
    EXPECT_EQ(parse_direction("heisenberg"), Direction::Heisenberg);
    EXPECT_EQ(direction_name(Direction::Schrodinger), "schrodinger");
    EXPECT_THROW(parse_direction("sideways"), Error);
}
