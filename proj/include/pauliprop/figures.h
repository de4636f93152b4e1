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


#ifndef PAULIPROP_FIGURES_H
#define PAULIPROP_FIGURES_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pauliprop/magic.h"
#include "pauliprop/qaoa.h"

namespace pauliprop {

/// "# pauliprop <version> <name> key=value ...\n".
std::string csv_metadata(std::string_view name, const std::vector<std::pair<std::string, std::string>> &params);

/// Grid over the two-qubit cross section: x,y,valid,category,d,robustness.
/// Points that are not states have valid = 0 and empty classification.
std::string fig1_csv(size_t points, double extent);

/// Two-qubit state census: category,count,fraction.
std::string fig2_csv(size_t samples, uint64_t seed, size_t workers);

/// Depolarized Z rotations on an (f, theta) grid, f in (0, 1] and theta in
/// [0, pi/2]: f,theta,d_forward,d_adjoint,robustness,category,diamond_f where
/// diamond_f = 1 / (|cos theta| + |sin theta|) is the analytic boundary of
/// D <= 1.
std::string fig3_csv(size_t f_points, size_t theta_points);

/// Channel census for every projection mode: mode,category,count,fraction,
/// with one "invalid" row per mode.
std::string fig5_csv(size_t samples, uint64_t seed, size_t workers);

struct Fig6Config {
    size_t num_qubits = 32;
    /// Top panel: fixed m, gamma sweep.
    size_t sweep_m = 40;
    std::vector<double> gammas;
    /// Bottom panel: fixed gamma, m sweep.
    double fixed_gamma = 0;
    std::vector<size_t> ms;
    /// 0 selects floor(m/10).
    size_t max_degree = 0;
    uint64_t n_samples = 10000;
    double delta = 0.01;
    uint64_t seed = 1;
    size_t workers = 1;
    bool timing = true;
};

/// panel,gamma,m,N,C_heis,C_vdn,eps_heis,eps_nest,abs_err,seconds. The
/// instance for m is generated from make_stream(seed, m).
std::string fig6_csv(const Fig6Config &config);

/// gamma,m,N,C_heis,C_vdn,eps_heis,eps_nest,abs_err,seconds rows.
std::string qaoa_csv_header();
std::string qaoa_csv_row(const QaoaRecord &r, bool timing);

/// seed_index,d_forward,d_adjoint,robustness,category,mode.
std::string census_records_csv(const ChannelCensus &census);
/// mode,category,count,fraction plus adjoint_count when present.
std::string census_histogram_csv(const ChannelCensus &census);

}  // namespace pauliprop

#endif
