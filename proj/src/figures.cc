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


#include "pauliprop/figures.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pauliprop/io.h"

namespace pauliprop {

namespace {

std::string fraction(size_t count, size_t total) {
    return format_double(total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total));
}

double grid(double lo, double hi, size_t i, size_t points) {
    return points < 2 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
}

}  // namespace

std::string csv_metadata(std::string_view name, const std::vector<std::pair<std::string, std::string>> &params) {
    std::string out = "# pauliprop " + std::string(kVersion) + " " + std::string(name);
    for (const auto &[key, value] : params) {
        out += " " + key + "=" + value;
    }
    return out + "\n";
}

std::string fig1_csv(size_t points, double extent) {
    std::ostringstream out;
    out << csv_metadata("fig1", {{"points", std::to_string(points)}, {"extent", format_double(extent)}});
    out << "x,y,valid,category,d,robustness\n";
    for (size_t i = 0; i < points; i++) {
        for (size_t j = 0; j < points; j++) {
            double x = grid(-extent, extent, i, points);
            double y = grid(-extent, extent, j, points);
            ComplexMatrix rho = cross_section_state(x, y);
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
            out << format_double(x) << "," << format_double(y) << ",";
            if (es.eigenvalues().minCoeff() < -1e-12) {
                out << "0,,,\n";
                continue;
            }
            double d = stabilizer_norm(PauliCoeffs{2, pauli_coefficients(rho)});
            double r = robustness(rho);
            out << "1," << state_class_name(classify_state(rho)) << "," << format_double(d) << "," << format_double(r)
                << "\n";
        }
    }
    return out.str();
}

std::string fig2_csv(size_t samples, uint64_t seed, size_t workers) {
    StateCensus c = state_census(2, samples, seed, workers);
    std::ostringstream out;
    out << csv_metadata("fig2", {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}});
    out << "category,count,fraction\n";
    out << "stabilizer_mixture," << c.stabilizer_mixture << "," << fraction(c.stabilizer_mixture, samples) << "\n";
    out << "hyper_octahedral," << c.hyper_octahedral << "," << fraction(c.hyper_octahedral, samples) << "\n";
    out << "magic," << c.magic << "," << fraction(c.magic, samples) << "\n";
    return out.str();
}

std::string fig3_csv(size_t f_points, size_t theta_points) {
    std::ostringstream out;
    out << csv_metadata("fig3", {{"f_points", std::to_string(f_points)}, {"theta_points", std::to_string(theta_points)}});
    out << "f,theta,d_forward,d_adjoint,robustness,category,diamond_f\n";
    for (size_t i = 0; i < f_points; i++) {
        double f = static_cast<double>(i + 1) / static_cast<double>(f_points);
        for (size_t j = 0; j < theta_points; j++) {
            double theta = grid(0, std::numbers::pi / 2, j, theta_points);
            ClassificationRecord r = classify_ptm(make_depolarized_rotation(f, theta));
            double diamond = 1 / (std::abs(std::cos(theta)) + std::abs(std::sin(theta)));
            out << format_double(f) << "," << format_double(theta) << "," << format_double(r.d_forward) << ","
                << format_double(r.d_adjoint) << "," << format_double(r.robustness) << "," << r.category << ","
                << format_double(diamond) << "\n";
        }
    }
    return out.str();
}

std::string fig5_csv(size_t samples, uint64_t seed, size_t workers) {
    std::ostringstream out;
    out << csv_metadata("fig5", {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}});
    out << "mode,category,count,fraction\n";
    for (ProjectionMode mode :
         {ProjectionMode::General, ProjectionMode::Unital, ProjectionMode::TracePreserving, ProjectionMode::Both}) {
        ChannelCensus c = classification_census(samples, mode, seed, workers);
        for (size_t k = 0; k < kCategories.size(); k++) {
            out << projection_mode_name(mode) << "," << kCategories[k] << "," << c.counts[k] << ","
                << fraction(c.counts[k], samples) << "\n";
        }
        out << projection_mode_name(mode) << ",invalid," << c.invalid << "," << fraction(c.invalid, samples) << "\n";
    }
    return out.str();
}

std::string qaoa_csv_header() {
    return "gamma,m,N,C_heis,C_vdn,eps_heis,eps_nest,abs_err,seconds\n";
}

std::string qaoa_csv_row(const QaoaRecord &r, bool timing) {
    return format_double(r.gamma) + "," + std::to_string(r.m) + "," + std::to_string(r.n_samples) + "," +
           format_double(r.c_heis) + "," + format_double(r.c_vdn) + "," + format_double(r.eps_heis) + "," +
           format_double(r.eps_nest) + "," + format_double(r.abs_err) + "," +
           (timing ? format_double(r.seconds) : std::string("0")) + "\n";
}

std::string fig6_csv(const Fig6Config &config) {
    std::ostringstream out;
    out << csv_metadata("fig6", {{"n", std::to_string(config.num_qubits)},
                                 {"N", std::to_string(config.n_samples)},
                                 {"delta", format_double(config.delta)},
                                 {"seed", std::to_string(config.seed)},
                                 {"max_degree", std::to_string(config.max_degree)}});
    out << "panel," << qaoa_csv_header();
    auto run = [&](const char *panel, size_t m, double gamma) {
        Rng rng = make_stream(config.seed, m);
        E3Lin2Instance inst = generate_instance(config.num_qubits, m, rng, config.max_degree);
        QaoaRecord r = run_experiment(inst, {gamma, std::numbers::pi / 4}, config.n_samples, config.delta,
                                      config.seed, config.workers);
        out << panel << "," << qaoa_csv_row(r, config.timing);
    };
    for (double gamma : config.gammas) {
        run("gamma_sweep", config.sweep_m, gamma);
    }
    for (size_t m : config.ms) {
        run("m_sweep", m, config.fixed_gamma);
    }
    return out.str();
}

std::string census_records_csv(const ChannelCensus &census) {
    std::ostringstream out;
    out << "seed_index,d_forward,d_adjoint,robustness,category,mode\n";
    for (size_t i = 0; i < census.records.size(); i++) {
        const ClassificationRecord &r = census.records[i];
        out << i << ",";
        if (r.valid) {
            out << format_double(r.d_forward) << "," << format_double(r.d_adjoint) << ","
                << format_double(r.robustness);
        } else {
            out << ",,";
        }
        out << "," << r.category << "," << projection_mode_name(census.mode) << "\n";
    }
    return out.str();
}

std::string census_histogram_csv(const ChannelCensus &census) {
    std::ostringstream out;
    out << "mode,category,count,fraction,adjoint_count\n";
    for (size_t k = 0; k < kCategories.size(); k++) {
        out << projection_mode_name(census.mode) << "," << kCategories[k] << "," << census.counts[k] << ","
            << fraction(census.counts[k], census.samples) << "," << census.adjoint_counts[k] << "\n";
    }
    out << projection_mode_name(census.mode) << ",invalid," << census.invalid << ","
        << fraction(census.invalid, census.samples) << ",\n";
    return out.str();
}

}  // namespace pauliprop
