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

#include "pauliprop/magic.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <numbers>
#include <set>
#include <string>
#include <thread>

#include "pauliprop/error.h"

namespace pauliprop {

namespace {

using StateVector = Eigen::VectorXcd;

StateVector apply_h(const StateVector &v, size_t q) {
    StateVector out = v;
    size_t bit = size_t{1} << q;
    double s = 1 / std::numbers::sqrt2;
    for (Eigen::Index i = 0; i < v.size(); i++) {
        if ((i & bit) == 0) {
            Complex a = v(i);
            Complex b = v(i | bit);
            out(i) = s * (a + b);
            out(i | bit) = s * (a - b);
        }
    }
    return out;
}

StateVector apply_s(const StateVector &v, size_t q) {
    StateVector out = v;
    for (Eigen::Index i = 0; i < v.size(); i++) {
        if ((i >> q) & 1) {
            out(i) *= Complex(0, 1);
        }
    }
    return out;
}

StateVector apply_cnot(const StateVector &v, size_t control, size_t target) {
    StateVector out = v;
    for (Eigen::Index i = 0; i < v.size(); i++) {
        if ((i >> control) & 1) {
            out(i) = v(i ^ (Eigen::Index{1} << target));
        }
    }
    return out;
}

std::vector<int> stabilizer_key(const std::vector<double> &traces) {
    std::vector<int> key;
    key.reserve(traces.size());
    for (double t : traces) {
        key.push_back(static_cast<int>(std::lround(t)));
    }
    return key;
}

std::vector<double> pauli_traces(const ComplexMatrix &m) {
    std::vector<double> c = pauli_coefficients(m);
    double dim = static_cast<double>(m.rows());
    for (double &v : c) {
        v *= dim;
    }
    return c;
}

Complex gaussian(Rng &rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    double r = std::sqrt(-2 * std::log(1 - u1));
    double phase = 2 * std::numbers::pi * u2;
    return Complex(r * std::cos(phase), r * std::sin(phase));
}

void set_flags(ClassificationRecord &r) {
    r.c = r.robustness <= 1 + kMagicTolerance;
    r.s = r.d_forward <= 1 + kMagicTolerance;
    r.h = r.d_adjoint <= 1 + kMagicTolerance;
    r.category.clear();
    if (r.c) {
        r.category += 'C';
    }
    if (r.s) {
        r.category += 'S';
    }
    if (r.h) {
        r.category += 'H';
    }
    if (r.category.empty()) {
        r.category = "M";
    }
    r.category_index = static_cast<size_t>(std::find(kCategories.begin(), kCategories.end(), r.category) -
                                            kCategories.begin());
}

/// Runs body(i) for i in [0, n) split into contiguous chunks.
template <typename F>
void parallel_for(size_t n, size_t workers, F body) {
    workers = std::max<size_t>(1, std::min(workers, n));
    if (workers == 1) {
        for (size_t i = 0; i < n; i++) {
            body(i);
        }
        return;
    }
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (size_t w = 0; w < workers; w++) {
        size_t lo = n * w / workers;
        size_t hi = n * (w + 1) / workers;
        threads.emplace_back([&, lo, hi] {
            try {
                for (size_t i = lo; i < hi; i++) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                error = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace

StabilizerSet enumerate_stabilizer_states(size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > 2) {
        fail(ErrorCode::Unsupported, "stabilizer enumeration supports 1 or 2 qubits");
    }
    size_t dim = size_t{1} << num_qubits;
    StabilizerSet out;
    out.num_qubits = num_qubits;
    std::set<std::vector<int>> seen;
    std::deque<StateVector> queue;
    StateVector start = StateVector::Zero(dim);
    start(0) = 1;
    queue.push_back(start);
    while (!queue.empty()) {
        StateVector v = queue.front();
        queue.pop_front();
        ComplexMatrix rho = v * v.adjoint();
        std::vector<double> traces = pauli_traces(rho);
        if (!seen.insert(stabilizer_key(traces)).second) {
            continue;
        }
        out.states.push_back(rho);
        out.traces.push_back(std::move(traces));
        for (size_t q = 0; q < num_qubits; q++) {
            queue.push_back(apply_h(v, q));
            queue.push_back(apply_s(v, q));
            for (size_t t = 0; t < num_qubits; t++) {
                if (t != q) {
                    queue.push_back(apply_cnot(v, q, t));
                }
            }
        }
    }
    return out;
}

const StabilizerSet &stabilizer_states(size_t num_qubits) {
    static const StabilizerSet one = enumerate_stabilizer_states(1);
    static const StabilizerSet two = enumerate_stabilizer_states(2);
    if (num_qubits == 1) {
        return one;
    }
    if (num_qubits == 2) {
        return two;
    }
    fail(ErrorCode::Unsupported, "stabilizer enumeration supports 1 or 2 qubits");
}

RobustnessResult robustness_lp(const ComplexMatrix &rho, const StabilizerSet &set) {
    size_t dim = size_t{1} << set.num_qubits;
    if (static_cast<size_t>(rho.rows()) != dim || static_cast<size_t>(rho.cols()) != dim) {
        fail(ErrorCode::InvalidArgument, "state dimension does not match the stabilizer set");
    }
    size_t rows = dim * dim;
    size_t m = set.states.size();
    Eigen::MatrixXd a(rows, 2 * m);
    for (size_t s = 0; s < m; s++) {
        for (size_t i = 0; i < rows; i++) {
            a(i, s) = set.traces[s][i];
            a(i, m + s) = -set.traces[s][i];
        }
    }
    std::vector<double> traces = pauli_traces(rho);
    Eigen::VectorXd b = Eigen::Map<Eigen::VectorXd>(traces.data(), rows);
    Eigen::VectorXd c = Eigen::VectorXd::Ones(2 * m);

    RobustnessResult out;
    out.lp = solve_lp(a, b, c);
    if (out.lp.primal_residual > 1e-8 || out.lp.dual_violation > kMagicTolerance ||
        std::abs(out.lp.gap) > kMagicTolerance) {
        fail(ErrorCode::Solver, "robustness LP failed its certificate (residual " +
                                    std::to_string(out.lp.primal_residual) + ", dual violation " +
                                    std::to_string(out.lp.dual_violation) + ", gap " + std::to_string(out.lp.gap) +
                                    ")");
    }
    out.value = out.lp.value;
    out.q.resize(m);
    for (size_t s = 0; s < m; s++) {
        out.q[s] = out.lp.x(s) - out.lp.x(m + s);
    }
    return out;
}

double robustness(const ComplexMatrix &rho) {
    return robustness_lp(rho, stabilizer_states(qubits_for_dimension(rho.rows()))).value;
}

std::string_view state_class_name(StateClass c) {
    switch (c) {
        case StateClass::StabilizerMixture:
            return "stabilizer_mixture";
        case StateClass::HyperOctahedral:
            return "hyper_octahedral";
        default:
            return "magic";
    }
}

StateClass classify_state(const ComplexMatrix &rho) {
    double d = stabilizer_norm(PauliCoeffs{qubits_for_dimension(rho.rows()), pauli_coefficients(rho)});
    if (d > 1 + kMagicTolerance) {
        return StateClass::Magic;
    }
    if (robustness(rho) <= 1 + kMagicTolerance) {
        return StateClass::StabilizerMixture;
    }
    return StateClass::HyperOctahedral;
}

ComplexMatrix sample_hilbert_schmidt(size_t num_qubits, Rng &rng) {
    size_t dim = size_t{1} << num_qubits;
    ComplexMatrix g(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            g(i, j) = gaussian(rng);
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return (rho + rho.adjoint()) * 0.5;
}

std::string_view projection_mode_name(ProjectionMode m) {
    switch (m) {
        case ProjectionMode::General:
            return "general";
        case ProjectionMode::Unital:
            return "unital";
        case ProjectionMode::TracePreserving:
            return "trace_preserving";
        default:
            return "both";
    }
}

ProjectionMode parse_projection_mode(std::string_view text) {
    for (ProjectionMode m :
         {ProjectionMode::General, ProjectionMode::Unital, ProjectionMode::TracePreserving, ProjectionMode::Both}) {
        if (text == projection_mode_name(m)) {
            return m;
        }
    }
    fail(ErrorCode::Parse, "unknown projection mode \"" + std::string(text) + "\"");
}

Ptm projected_ptm(const ComplexMatrix &rho_2q, ProjectionMode mode) {
    Eigen::MatrixXd r = ptm_from_choi(rho_2q, 1, 1).matrix();
    if (mode == ProjectionMode::Unital || mode == ProjectionMode::Both) {
        r.col(0).setZero();
        r(0, 0) = 1;
    }
    if (mode == ProjectionMode::TracePreserving || mode == ProjectionMode::Both) {
        r.row(0).setZero();
        r(0, 0) = 1;
    }
    return Ptm(1, 1, std::move(r));
}

ClassificationRecord classify_ptm(const Ptm &ptm) {
    if (ptm.k_in() != 1 || ptm.k_out() != 1) {
        fail(ErrorCode::Unsupported, "channel classification is implemented for single-qubit channels");
    }
    ClassificationRecord out;
    ComplexMatrix choi = unnormalized_choi(ptm);
    double trace = choi.trace().real();
    if (!is_completely_positive(ptm) || !(trace > kZeroCoefficient)) {
        out.valid = false;
        out.category = "invalid";
        out.category_index = kCategories.size();
        return out;
    }
    out.d_forward = channel_norm(ptm);
    out.d_adjoint = adjoint_norm(ptm);
    out.robustness = robustness_lp(choi / trace, stabilizer_states(2)).value;
    set_flags(out);
    return out;
}

ClassificationRecord classify_channel(const ComplexMatrix &rho_2q, ProjectionMode mode) {
    return classify_ptm(projected_ptm(rho_2q, mode));
}

ChannelCensus classification_census(size_t n_samples, ProjectionMode mode, uint64_t seed, size_t workers,
                                    bool keep_records, bool with_adjoints) {
    stabilizer_states(2);
    std::vector<ClassificationRecord> records(n_samples);
    std::vector<ClassificationRecord> mirrored(with_adjoints ? n_samples : 0);
    parallel_for(n_samples, workers, [&](size_t i) {
        Rng rng = make_stream(seed, i);
        Ptm p = projected_ptm(sample_hilbert_schmidt(2, rng), mode);
        records[i] = classify_ptm(p);
        if (with_adjoints) {
            mirrored[i] = classify_ptm(adjoint(p));
        }
    });
    ChannelCensus out;
    out.mode = mode;
    out.samples = n_samples;
    for (size_t i = 0; i < n_samples; i++) {
        if (!records[i].valid) {
            out.invalid++;
            continue;
        }
        out.counts[records[i].category_index]++;
        if (with_adjoints && mirrored[i].valid) {
            out.adjoint_counts[mirrored[i].category_index]++;
        }
    }
    if (keep_records) {
        out.records = std::move(records);
    }
    return out;
}

StateCensus state_census(size_t num_qubits, size_t n_samples, uint64_t seed, size_t workers) {
    stabilizer_states(num_qubits);
    std::vector<StateClass> classes(n_samples);
    parallel_for(n_samples, workers, [&](size_t i) {
        Rng rng = make_stream(seed, i);
        classes[i] = classify_state(sample_hilbert_schmidt(num_qubits, rng));
    });
    StateCensus out;
    out.num_qubits = num_qubits;
    out.samples = n_samples;
    for (StateClass c : classes) {
        out.stabilizer_mixture += c == StateClass::StabilizerMixture;
        out.hyper_octahedral += c == StateClass::HyperOctahedral;
        out.magic += c == StateClass::Magic;
    }
    return out;
}

ComplexMatrix cross_section_state(double x, double y) {
    auto word = [](const char *text) {
        PauliString p = PauliString::from_text(text);
        return pauli_matrix(p.local_index(std::vector<size_t>{0, 1}), 2);
    };
    return word("II") / 4.0 + x * (word("XX") + word("ZZ") - word("YY")) + y * (word("ZI") + word("IZ"));
}

}  // namespace pauliprop
