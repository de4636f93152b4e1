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

#ifndef PAULIPROP_MAGIC_H
#define PAULIPROP_MAGIC_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pauliprop/dense_operator.h"
#include "pauliprop/lp.h"
#include "pauliprop/ptm.h"
#include "pauliprop/rng.h"

namespace pauliprop {

/// Pure stabilizer states on one or two qubits.
struct StabilizerSet {
    size_t num_qubits = 0;
    std::vector<ComplexMatrix> states;
    /// coeffs[s][i] = Tr(sigma_i |phi_s><phi_s|).
    std::vector<std::vector<double>> traces;
};

/// Orbit of |0...0> under H, S and CNOT, deduplicated. Throws Unsupported
/// unless num_qubits is 1 or 2.
StabilizerSet enumerate_stabilizer_states(size_t num_qubits);
/// Cached enumeration shared between threads.
const StabilizerSet &stabilizer_states(size_t num_qubits);

/// Tolerance shared by the LP and the category thresholds.
inline constexpr double kMagicTolerance = 1e-6;

struct RobustnessResult {
    double value = 0;
    /// Quasi-probabilities over the stabilizer set.
    std::vector<double> q;
    LpSolution lp;
};

/// min sum |q_s| subject to rho = sum q_s |phi_s><phi_s|. The normalization
/// sum q_s = Tr(rho) is the identity-Pauli row. Throws Solver if the LP
/// result fails its feasibility or duality checks.
RobustnessResult robustness_lp(const ComplexMatrix &rho, const StabilizerSet &set);
double robustness(const ComplexMatrix &rho);

enum class StateClass {
    StabilizerMixture,
    HyperOctahedral,
    Magic,
};

std::string_view state_class_name(StateClass c);

/// StabilizerMixture iff R <= 1 + tol, else HyperOctahedral iff D <= 1 + tol,
/// else Magic. The LP is skipped when D > 1 + tol since R >= D.
StateClass classify_state(const ComplexMatrix &rho);

/// G G^dagger / Tr(G G^dagger) with G a complex Ginibre matrix.
ComplexMatrix sample_hilbert_schmidt(size_t num_qubits, Rng &rng);

enum class ProjectionMode {
    General,
    Unital,
    TracePreserving,
    Both,
};

std::string_view projection_mode_name(ProjectionMode m);
/// "general", "unital", "trace_preserving" or "both". Throws Parse otherwise.
ProjectionMode parse_projection_mode(std::string_view text);

/// Venn categories in a fixed order.
inline constexpr std::array<std::string_view, 8> kCategories = {"M", "C", "S", "H", "CS", "CH", "SH", "CSH"};

struct ClassificationRecord {
    bool valid = true;
    double d_forward = 0;
    double d_adjoint = 0;
    double robustness = 0;
    bool c = false;
    bool s = false;
    bool h = false;
    std::string category;
    /// Position of `category` in kCategories.
    size_t category_index = 0;
};

/// Classifies a single-qubit channel given by its PTM. Records that are not
/// completely positive come back with valid = false.
ClassificationRecord classify_ptm(const Ptm &ptm);

/// Treats rho_2q as the normalized Choi state of a postselective single-qubit
/// channel, applies the projection and classifies the result.
ClassificationRecord classify_channel(const ComplexMatrix &rho_2q, ProjectionMode mode);

/// PTM of the channel with normalized Choi state rho_2q after projection.
Ptm projected_ptm(const ComplexMatrix &rho_2q, ProjectionMode mode);

struct ChannelCensus {
    ProjectionMode mode = ProjectionMode::General;
    size_t samples = 0;
    std::array<size_t, 8> counts{};
    /// Counts obtained by classifying the transposed (adjoint) PTMs.
    std::array<size_t, 8> adjoint_counts{};
    size_t invalid = 0;
    std::vector<ClassificationRecord> records;
};

/// Sample i is drawn from make_stream(seed, i), so the result does not depend
/// on the worker count.
ChannelCensus classification_census(size_t n_samples, ProjectionMode mode, uint64_t seed, size_t workers,
                                    bool keep_records = false, bool with_adjoints = false);

struct StateCensus {
    size_t num_qubits = 0;
    size_t samples = 0;
    size_t stabilizer_mixture = 0;
    size_t hyper_octahedral = 0;
    size_t magic = 0;
};

StateCensus state_census(size_t num_qubits, size_t n_samples, uint64_t seed, size_t workers);

/// The two-qubit cross section I/4 + x (XX + ZZ - YY) + y (ZI + IZ).
ComplexMatrix cross_section_state(double x, double y);

}  // namespace pauliprop

#endif
