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

#include "pauliprop/ptm.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pauliprop/error.h"
#include "pauliprop/oracle.h"
#include "test_util.h"

using namespace pauliprop;
namespace ts = pauliprop::test_support;
using ts::eye;
using ts::kron;

namespace {

const double kPi = std::numbers::pi;
const Complex kI(0, 1);

double max_diff(const Ptm &a, const Ptm &b) {
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

Ptm from_unitary(const ComplexMatrix &u) {
    std::vector<ComplexMatrix> ops{u};
    return ptm_from_kraus(ops);
}

ComplexMatrix permutation(const std::vector<size_t> &images) {
    ComplexMatrix m = ComplexMatrix::Zero(images.size(), images.size());
    for (size_t c = 0; c < images.size(); c++) {
        m(images[c], c) = 1;
    }
    return m;
}

ComplexMatrix projector(int bit) {
    return ts::mat2(bit == 0 ? 1 : 0, 0, 0, bit == 1 ? 1 : 0);
}

std::vector<ComplexMatrix> depolarizing_kraus(double f, size_t k) {
    size_t d = size_t{1} << k;
    double d2 = double(d * d);
    std::vector<ComplexMatrix> ops;
    ops.push_back(std::sqrt(f + (1 - f) / d2) * eye(d));
    for (size_t i = 1; i < d * d; i++) {
        std::string word;
        for (size_t q = 0; q < k; q++) {
            word += "IXYZ"[(i >> (2 * q)) & 3];
        }
        ops.push_back(std::sqrt((1 - f) / d2) * ts::word_matrix(word));
    }
    return ops;
}

std::vector<ComplexMatrix> reset_kraus(const ComplexMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho);
    size_t d = rho.rows();
    std::vector<ComplexMatrix> ops;
    for (size_t a = 0; a < d; a++) {
        double lambda = std::max(0.0, eig.eigenvalues()(a));
        for (size_t b = 0; b < d; b++) {
            ComplexMatrix k = ComplexMatrix::Zero(d, d);
            k.col(b) = std::sqrt(lambda) * eig.eigenvectors().col(a);
            ops.push_back(k);
        }
    }
    return ops;
}

std::vector<ComplexMatrix> adaptive_kraus(const std::vector<ComplexMatrix> &inner) {
    size_t d = inner[0].rows();
    std::vector<ComplexMatrix> ops{kron(eye(d), projector(0))};
    for (const auto &k : inner) {
        ops.push_back(kron(k, projector(1)));
    }
    return ops;
}

Ptm random_channel(size_t k, size_t rank, Rng &rng) {
    return ptm_from_kraus(ts::random_kraus(k, rank, rng));
}

}  // namespace

TEST(ptm, gates_match_unitary_oracle) {
    double s = 1 / std::sqrt(2.0);
    EXPECT_LT(max_diff(make_clifford("h"), from_unitary(ts::mat2(s, s, s, -s))), 1e-12);
    EXPECT_LT(max_diff(make_clifford("s"), from_unitary(ts::mat2(1, 0, 0, kI))), 1e-12);
    EXPECT_LT(max_diff(make_clifford("sdg"), from_unitary(ts::mat2(1, 0, 0, -kI))), 1e-12);
    EXPECT_LT(max_diff(make_clifford("x"), from_unitary(ts::mx())), 1e-12);
    EXPECT_LT(max_diff(make_clifford("y"), from_unitary(ts::my())), 1e-12);
    EXPECT_LT(max_diff(make_clifford("z"), from_unitary(ts::mz())), 1e-12);
    EXPECT_LT(max_diff(make_gate("t"), from_unitary(ts::mat2(1, 0, 0, std::exp(kI * kPi / 4.0)))), 1e-12);
    EXPECT_LT(max_diff(make_gate("tdg"), from_unitary(ts::mat2(1, 0, 0, std::exp(-kI * kPi / 4.0)))), 1e-12);
    // Basis index c + 2t with the control on qubit 0.
    EXPECT_LT(max_diff(make_clifford("cnot"), from_unitary(permutation({0, 3, 2, 1}))), 1e-12);
    EXPECT_LT(max_diff(make_clifford("swap"), from_unitary(permutation({0, 2, 1, 3}))), 1e-12);
    ComplexMatrix cz = eye(4);
    cz(3, 3) = -1;
    EXPECT_LT(max_diff(make_clifford("cz"), from_unitary(cz)), 1e-12);
    EXPECT_THROW(make_clifford("t"), Error);
    EXPECT_THROW(make_gate("foo"), Error);
}

TEST(ptm, cliffords_are_signed_permutations) {
    for (const char *name : {"h", "s", "sdg", "x", "y", "z", "cnot", "cz", "swap"}) {
        Ptm p = make_clifford(name);
        EXPECT_EQ(channel_norm(p), 1) << name;
        EXPECT_EQ(adjoint_norm(p), 1) << name;
        for (Eigen::Index j = 0; j < p.matrix().cols(); j++) {
            EXPECT_EQ(p.matrix().col(j).cwiseAbs().sum(), 1) << name;
        }
        EXPECT_TRUE(p.is_trace_preserving());
        EXPECT_TRUE(p.is_unital());
    }
}

TEST(ptm, rotation_and_pauli_rotation_match_oracle) {
    Rng rng = make_stream(21, 0);
    for (int trial = 0; trial < 20; trial++) {
        double theta = 2 * kPi * ts::ginibre(1, 1, rng)(0, 0).real();
        EXPECT_LT(max_diff(make_rotation(theta), from_unitary(ts::unitary_of_rz(theta))), 1e-12);
    }
    for (const char *word : {"X", "Y", "Z", "ZZ", "XY", "ZZZ", "YIX", "IZI"}) {
        double phi = 0.37;
        ComplexMatrix p = ts::word_matrix(word);
        ComplexMatrix u = std::cos(phi) * eye(p.rows()) - kI * std::sin(phi) * p;
        EXPECT_LT(max_diff(make_pauli_rotation(PauliString::from_text(word), phi), from_unitary(u)), 1e-12) << word;
    }
    // e^{-i (pi/4) X}: cost |cos 2b| + |sin 2b| = 1 at b = pi/4.
    Ptm xr = make_pauli_rotation(PauliString::from_text("X"), kPi / 4);
    EXPECT_NEAR(channel_norm(xr), 1, 1e-12);
    Ptm xr2 = make_pauli_rotation(PauliString::from_text("X"), kPi / 8);
    EXPECT_NEAR(channel_norm(xr2), std::sqrt(2.0), 1e-12);
}

TEST(ptm, noise_and_measurement_match_oracle) {
    for (double f : {0.0, 0.25, 0.6, 1.0}) {
        for (size_t k = 1; k <= 2; k++) {
            EXPECT_LT(max_diff(make_depolarizing(f, k), ptm_from_kraus(depolarizing_kraus(f, k))), 1e-12);
        }
    }
    EXPECT_THROW(make_depolarizing(1.5), Error);
    EXPECT_THROW(make_depolarizing(-0.1), Error);
    Ptm d0 = make_depolarizing(0);
    EXPECT_TRUE(d0.matrix().isApprox(Eigen::Vector4d(1, 0, 0, 0).asDiagonal().toDenseMatrix()));

    std::vector<ComplexMatrix> meas{projector(0), projector(1)};
    EXPECT_LT(max_diff(make_measure_z(), ptm_from_kraus(meas)), 1e-12);
    EXPECT_TRUE(make_measure_z().matrix().isApprox(Eigen::Vector4d(1, 0, 0, 1).asDiagonal().toDenseMatrix()));
}

TEST(ptm, reset_matches_oracle) {
    Rng rng = make_stream(22, 0);
    for (size_t k = 1; k <= 2; k++) {
        for (int trial = 0; trial < 5; trial++) {
            ComplexMatrix rho = ts::random_density(k, rng);
            EXPECT_LT(max_diff(make_reset(DenseOperator(rho)), ptm_from_kraus(reset_kraus(rho))), 1e-10);
        }
    }
    Ptm zero = make_reset(named_state("zero"));
    EXPECT_TRUE(zero.matrix().col(0).isApprox(Eigen::Vector4d(1, 0, 0, 1)));
    EXPECT_EQ(channel_norm(zero), 2);
    EXPECT_EQ(adjoint_norm(zero), 1);
    EXPECT_NEAR(channel_norm(make_reset(named_state("maximally_mixed"))), 1, 1e-15);
    EXPECT_THROW(make_reset(DenseOperator(ts::mz())), Error);
}

TEST(ptm, reset_adjoint_norm_is_one) {
    Rng rng = make_stream(23, 0);
    for (int trial = 0; trial < 100; trial++) {
        size_t k = 1 + trial % 2;
        Ptm r = make_reset(DenseOperator(ts::random_density(k, rng)));
        EXPECT_NEAR(adjoint_norm(r), 1, 1e-10);
        EXPECT_NEAR(channel_norm(adjoint(r)), 1, 1e-10);
        EXPECT_GE(channel_norm(r), 1 - 1e-12);
    }
}

TEST(ptm, reset_choi_is_mixed_input_times_target) {
    Rng rng = make_stream(24, 0);
    for (size_t k = 1; k <= 2; k++) {
        ComplexMatrix rho = ts::random_density(k, rng);
        size_t d = rho.rows();
        ChoiState c = choi_from_ptm(make_reset(DenseOperator(rho)));
        EXPECT_LT((c.normalized - kron(eye(d) / double(d), rho)).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_NEAR(c.p_lambda, 1, 1e-12);
    }
}

TEST(ptm, adaptive_matches_oracle) {
    Rng rng = make_stream(25, 0);
    double s = 1 / std::sqrt(2.0);
    std::vector<ComplexMatrix> h{ts::mat2(s, s, s, -s)};
    EXPECT_LT(max_diff(make_adaptive(make_clifford("h")), ptm_from_kraus(adaptive_kraus(h))), 1e-12);
    std::vector<ComplexMatrix> x{ts::mx()};
    EXPECT_LT(max_diff(make_adaptive(make_clifford("x")), ptm_from_kraus(adaptive_kraus(x))), 1e-12);
    for (size_t k = 1; k <= 2; k++) {
        auto inner = ts::random_kraus(k, 2, rng);
        EXPECT_LT(max_diff(make_adaptive(ptm_from_kraus(inner)), ptm_from_kraus(adaptive_kraus(inner))), 1e-10);
    }
    EXPECT_THROW(make_adaptive(make_adaptive(make_clifford("cnot"))), Error);
}

TEST(ptm, adaptive_examples) {
    Ptm id = make_adaptive(Ptm::identity(1));
    EXPECT_NEAR(channel_norm(id), 1, 1e-15);
    EXPECT_LT(max_diff(id, tensor(make_measure_z(), Ptm::identity(1))), 1e-15);
    EXPECT_NEAR(channel_norm(make_adaptive(make_clifford("x"))), 1, 1e-15);
    EXPECT_NEAR(channel_norm(make_adaptive(make_clifford("h"))), 2, 1e-15);
    EXPECT_NEAR(adjoint_norm(make_adaptive(make_clifford("h"))), 2, 1e-15);
}

TEST(ptm, adaptive_closed_forms) {
    Rng rng = make_stream(26, 0);
    for (int trial = 0; trial < 50; trial++) {
        size_t k = 1 + trial % 2;
        Ptm inner = random_channel(k, 1 + trial % 3, rng);
        if (trial % 5 == 0) {
            inner = make_reset(DenseOperator(ts::random_density(k, rng)));
        }
        const Eigen::MatrixXd &r = inner.matrix();
        double col = 0;
        double row = 0;
        for (Eigen::Index a = 0; a < r.rows(); a++) {
            double c = 0;
            double w = 0;
            for (Eigen::Index b = 0; b < r.rows(); b++) {
                if (a != b) {
                    c += std::abs(r(b, a));
                    w += std::abs(r(a, b));
                }
            }
            col = std::max(col, c);
            row = std::max(row, w);
        }
        Ptm a = make_adaptive(inner);
        EXPECT_NEAR(channel_norm(a), 1 + col, 1e-10);
        EXPECT_NEAR(adjoint_norm(a), 1 + row, 1e-10);
    }
}

TEST(ptm, depolarized_rotation_closed_form) {
    for (int a = 0; a < 100; a++) {
        for (int b = 0; b < 100; b++) {
            double f = a / 99.0;
            double theta = 2 * kPi * b / 100.0;
            Ptm p = make_depolarized_rotation(f, theta);
            double expected = std::max(1.0, f * std::abs(std::cos(theta)) + f * std::abs(std::sin(theta)));
            EXPECT_NEAR(channel_norm(p), expected, 1e-12);
            EXPECT_NEAR(adjoint_norm(p), expected, 1e-12);
        }
    }
    EXPECT_NEAR(channel_norm(make_gate("t")), std::sqrt(2.0), 1e-12);
}

TEST(ptm, composition) {
    double f = 0.7;
    double theta = 0.4;
    Eigen::Matrix4d expected;
    expected << 1, 0, 0, 0, 0, f * std::cos(theta), -f * std::sin(theta), 0, 0, f * std::sin(theta),
        f * std::cos(theta), 0, 0, 0, 0, f;
    EXPECT_LT((make_depolarized_rotation(f, theta).matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(max_diff(compose(make_rotation(0.3), make_rotation(0.9)), make_rotation(1.2)), 1e-12);
    EXPECT_LT(max_diff(compose(Ptm::identity(1), make_gate("t")), make_gate("t")), 1e-15);
    EXPECT_LT(max_diff(make_rotation(0), Ptm::identity(1)), 1e-15);
    EXPECT_THROW(compose(make_clifford("cnot"), make_gate("h")), Error);
}

TEST(ptm, tensor_matches_kraus_product) {
    double s = 1 / std::sqrt(2.0);
    ComplexMatrix h = ts::mat2(s, s, s, -s);
    ComplexMatrix t = ts::mat2(1, 0, 0, std::exp(kI * kPi / 4.0));
    EXPECT_LT(max_diff(tensor(make_clifford("h"), make_gate("t")), from_unitary(kron(t, h))), 1e-12);
}

TEST(ptm, adjoint_is_transpose) {
    Rng rng = make_stream(27, 0);
    Ptm r = random_channel(2, 3, rng);
    EXPECT_LT(max_diff(adjoint(adjoint(r)), r), 1e-15);
    EXPECT_NEAR(channel_norm(adjoint(r)), adjoint_norm(r), 1e-15);
    // The adjoint of a Kraus map has Kraus operators K^dagger; a mixture of
    // unitaries keeps both sides trace preserving.
    std::vector<ComplexMatrix> ops{std::sqrt(0.3) * ts::random_unitary(2, rng),
                                   std::sqrt(0.7) * ts::random_unitary(2, rng)};
    std::vector<ComplexMatrix> dag;
    for (const auto &k : ops) {
        dag.push_back(k.adjoint());
    }
    EXPECT_LT(max_diff(adjoint(ptm_from_kraus(ops)), ptm_from_kraus(dag)), 1e-12);
}

TEST(ptm, apply_to_pauli_reads_columns) {
    Ptm p = make_depolarized_rotation(0.5, 0.3);
    ChannelApplication app{p, {1}};
    PauliCoeffs c = apply_to_pauli(app, PauliString::from_text("ZX"));
    ASSERT_EQ(c.coeffs.size(), 4);
    EXPECT_NEAR(c.coeffs[PAULI_X], 0.5 * std::cos(0.3), 1e-15);
    EXPECT_NEAR(c.coeffs[PAULI_Y], 0.5 * std::sin(0.3), 1e-15);
    EXPECT_EQ(c.coeffs[PAULI_I], 0);
    EXPECT_EQ(c.coeffs[PAULI_Z], 0);
    ChannelApplication bad{make_clifford("cnot"), {0, 0}};
    EXPECT_THROW(bad.validate(3), Error);
    ChannelApplication far{make_gate("h"), {3}};
    EXPECT_THROW(far.validate(3), Error);
}

TEST(ptm, complete_positivity) {
    for (const char *name : {"h", "s", "t", "cnot", "cz", "swap"}) {
        EXPECT_TRUE(is_completely_positive(make_gate(name))) << name;
    }
    EXPECT_TRUE(is_completely_positive(make_measure_z()));
    EXPECT_TRUE(is_completely_positive(make_adaptive(make_clifford("cnot"))));
    EXPECT_TRUE(is_completely_positive(make_reset(named_state("T_state"))));
    // Transposition: positive but not completely positive.
    Ptm transpose(1, 1, Eigen::Vector4d(1, 1, -1, 1).asDiagonal().toDenseMatrix());
    EXPECT_FALSE(is_completely_positive(transpose));
    EXPECT_THROW(require_completely_positive(transpose, "transpose"), Error);
    EXPECT_THROW(choi_from_ptm(transpose), Error);
}

TEST(choi, postselection_example) {
    ComplexMatrix phi = ComplexMatrix::Zero(4, 4);
    phi(0, 0) = 1;
    EXPECT_EQ(postselection_probability(phi, 1, 1), 0.5);
    Ptm lambda = ptm_from_choi(phi, 1, 1);
    std::vector<ComplexMatrix> post{projector(0)};
    EXPECT_LT(max_diff(lambda, ptm_from_kraus(post)), 1e-12);

    ComplexMatrix plus = ComplexMatrix::Constant(2, 2, 0.5);
    ComplexMatrix out = apply_choi(unnormalized_choi(lambda), plus, 1, 1);
    ComplexMatrix expected = 0.5 * projector(0);
    EXPECT_LT((out - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((apply_kraus(post, plus) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(choi, identity_gives_bell_state) {
    ChoiState c = choi_from_ptm(Ptm::identity(1));
    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
    bell(0) = bell(3) = 1 / std::sqrt(2.0);
    EXPECT_LT((c.normalized - bell * bell.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(c.p_lambda, 1, 1e-15);
    EXPECT_NEAR(postselection_probability(c.normalized, 1, 1), 1, 1e-12);
}

TEST(choi, random_unitary_is_pure_and_maximally_entangled) {
    Rng rng = make_stream(28, 0);
    for (int trial = 0; trial < 10; trial++) {
        ComplexMatrix u = ts::random_unitary(2, rng);
        Ptm r = from_unitary(u);
        ChoiState c = choi_from_ptm(r);
        EXPECT_NEAR((c.normalized * c.normalized).trace().real(), 1, 1e-10);
        EXPECT_NEAR(postselection_probability(c.normalized, 1, 1), 1, 1e-10);
        EXPECT_LT(max_diff(ptm_from_choi(c.normalized, 1, 1), r), 1e-10);
    }
}

TEST(choi, round_trip_random_channels) {
    Rng rng = make_stream(29, 0);
    for (int trial = 0; trial < 100; trial++) {
        size_t k = 1 + trial % 2;
        Ptm r = random_channel(k, 1 + trial % 4, rng);
        ChoiState c = choi_from_ptm(r);
        EXPECT_NEAR(c.normalized.trace().real(), 1, 1e-12);
        EXPECT_LT(max_diff(ptm_from_choi(c.normalized, k, k), r), 1e-8);
    }
}

TEST(choi, apply_matches_kraus) {
    Rng rng = make_stream(30, 0);
    for (size_t k = 1; k <= 2; k++) {
        auto ops = ts::random_kraus(k, 3, rng);
        ComplexMatrix rho = ts::random_density(k, rng);
        ComplexMatrix phi = unnormalized_choi(ptm_from_kraus(ops));
        EXPECT_LT((apply_choi(phi, rho, k, k) - apply_kraus(ops, rho)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(choi, rejects_non_psd) {
    ComplexMatrix m = ComplexMatrix::Identity(4, 4) * 0.5;
    m(3, 3) = -0.5;
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(2, 2) = 0.5;
    EXPECT_THROW(ptm_from_choi(m, 1, 1), Error);
    try {
        ptm_from_choi(m, 1, 1);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCompletelyPositive);
    }
    EXPECT_THROW(ptm_from_choi(ComplexMatrix::Identity(8, 8) / 8.0, 1, 1), Error);
}
