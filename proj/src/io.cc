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


#include "pauliprop/io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pauliprop/error.h"

namespace pauliprop {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        size_t line = 1;
        size_t column = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); i++) {
            if (text[i] == '\n') {
                line++;
                column = 1;
            } else {
                column++;
            }
        }
        fail(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                   ": malformed JSON");
    }
}

std::string join(const std::string &path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string at_index(const std::string &path, size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

[[noreturn]] void bad(const std::string &path, const std::string &what) {
    fail(ErrorCode::Parse, (path.empty() ? std::string("document") : path) + ": " + what);
}

/// Runs f, prefixing library errors with the field path.
template <typename F>
auto located(const std::string &path, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error &e) {
        fail(e.code(), path + ": " + e.what());
    }
}

void require_object(const json &j, const std::string &path) {
    if (!j.is_object()) {
        bad(path, "expected an object");
    }
}

const json &field(const json &obj, const std::string &path, std::string_view key) {
    require_object(obj, path);
    auto it = obj.find(key);
    if (it == obj.end()) {
        bad(join(path, key), "missing field");
    }
    return *it;
}

double number(const json &j, const std::string &path) {
    if (!j.is_number()) {
        bad(path, "expected a number");
    }
    return j.get<double>();
}

size_t index(const json &j, const std::string &path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        bad(path, "expected a non-negative integer");
    }
    return j.get<size_t>();
}

std::string text(const json &j, const std::string &path) {
    if (!j.is_string()) {
        bad(path, "expected a string");
    }
    return j.get<std::string>();
}

std::vector<double> numbers(const json &j, const std::string &path) {
    if (!j.is_array()) {
        bad(path, "expected an array of numbers");
    }
    std::vector<double> out;
    for (size_t i = 0; i < j.size(); i++) {
        out.push_back(number(j[i], at_index(path, i)));
    }
    return out;
}

std::vector<size_t> qubit_list(const json &obj, const std::string &path) {
    std::string p = join(path, "qubits");
    const json &j = field(obj, path, "qubits");
    if (!j.is_array() || j.empty()) {
        bad(p, "expected a non-empty array of qubit indices");
    }
    std::vector<size_t> out;
    for (size_t i = 0; i < j.size(); i++) {
        out.push_back(index(j[i], at_index(p, i)));
    }
    return out;
}

/// Operator from one of "state", "bloch", "pauli", "pauli_coeffs".
DenseOperator operator_spec(const json &obj, const std::string &path, bool allow_pauli) {
    require_object(obj, path);
    int given = 0;
    DenseOperator op;
    if (obj.contains("state")) {
        given++;
        std::string p = join(path, "state");
        std::string name = text(obj["state"], p);
        op = located(p, [&] { return named_state(name); });
    }
    if (obj.contains("bloch")) {
        given++;
        std::string p = join(path, "bloch");
        std::vector<double> v = numbers(obj["bloch"], p);
        if (v.size() != 3) {
            bad(p, "expected three numbers");
        }
        op = located(p, [&] { return state_from_bloch(v[0], v[1], v[2]); });
    }
    if (obj.contains("pauli_coeffs")) {
        given++;
        std::string p = join(path, "pauli_coeffs");
        std::vector<double> v = numbers(obj["pauli_coeffs"], p);
        op = located(p, [&] { return DenseOperator::from_pauli_coeffs(v); });
    }
    if (allow_pauli && obj.contains("pauli")) {
        given++;
        std::string p = join(path, "pauli");
        std::string word = text(obj["pauli"], p);
        op = located(p, [&] { return DenseOperator::from_pauli(PauliString::from_text(word)); });
    }
    if (given != 1) {
        bad(path, allow_pauli ? "expected exactly one of state, bloch, pauli, pauli_coeffs"
                              : "expected exactly one of state, bloch, pauli_coeffs");
    }
    return op;
}

Eigen::MatrixXd ptm_matrix(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        bad(path, "expected a non-empty array");
    }
    if (j[0].is_array()) {
        size_t rows = j.size();
        size_t cols = j[0].size();
        Eigen::MatrixXd m(rows, cols);
        for (size_t r = 0; r < rows; r++) {
            std::vector<double> row = numbers(j[r], at_index(path, r));
            if (row.size() != cols) {
                bad(at_index(path, r), "rows have different lengths");
            }
            for (size_t c = 0; c < cols; c++) {
                m(r, c) = row[c];
            }
        }
        return m;
    }
    std::vector<double> flat = numbers(j, path);
    size_t side = 1;
    while (side * side < flat.size()) {
        side++;
    }
    if (side * side != flat.size()) {
        bad(path, "flat matrix length is not a square");
    }
    Eigen::MatrixXd m(side, side);
    for (size_t r = 0; r < side; r++) {
        for (size_t c = 0; c < side; c++) {
            m(r, c) = flat[r * side + c];
        }
    }
    return m;
}

size_t qubits_of_side(size_t side, const std::string &path) {
    for (size_t k = 1; k <= kMaxChannelQubits; k++) {
        if (side == (size_t{1} << (2 * k))) {
            return k;
        }
    }
    fail(ErrorCode::Validation, path + ": PTM side " + std::to_string(side) + " is not 4, 16 or 64");
}

/// k is the number of listed qubits, or 0 when the spec stands alone.
Ptm channel_spec(const json &obj, const std::string &path, size_t k) {
    std::string kind = text(field(obj, path, "kind"), join(path, "kind"));
    auto num = [&](std::string_view key) { return number(field(obj, path, key), join(path, key)); };
    if (kind == "gate") {
        std::string p = join(path, "name");
        std::string name = text(field(obj, path, "name"), p);
        return located(p, [&] { return make_gate(name); });
    }
    if (kind == "rotation") {
        return make_rotation(num("theta"));
    }
    if (kind == "depolarizing") {
        double f = num("f");
        size_t width = k;
        if (obj.contains("num_qubits")) {
            width = index(obj["num_qubits"], join(path, "num_qubits"));
        }
        return located(path, [&] { return make_depolarizing(f, width == 0 ? 1 : width); });
    }
    if (kind == "depolarized_rotation") {
        double f = num("f");
        double theta = num("theta");
        return located(path, [&] { return make_depolarized_rotation(f, theta); });
    }
    if (kind == "measure_z") {
        return make_measure_z();
    }
    if (kind == "reset") {
        DenseOperator rho = operator_spec(obj, path, false);
        return located(path, [&] { return make_reset(rho); });
    }
    if (kind == "adaptive") {
        std::string p = join(path, "inner");
        Ptm inner = channel_spec(field(obj, path, "inner"), p, k > 0 ? k - 1 : 0);
        return located(path, [&] { return make_adaptive(inner); });
    }
    if (kind == "ptm") {
        std::string p = join(path, "matrix");
        Eigen::MatrixXd m = ptm_matrix(field(obj, path, "matrix"), p);
        size_t k_out = qubits_of_side(static_cast<size_t>(m.rows()), p);
        size_t k_in = qubits_of_side(static_cast<size_t>(m.cols()), p);
        return located(path, [&] {
            Ptm out(k_in, k_out, m);
            require_completely_positive(out, "PTM");
            return out;
        });
    }
    if (kind == "pauli_rotation") {
        std::string p = join(path, "pauli");
        std::string word = text(field(obj, path, "pauli"), p);
        double angle = num("angle");
        return located(p, [&] { return make_pauli_rotation(PauliString::from_text(word), angle); });
    }
    bad(join(path, "kind"), "unknown channel kind \"" + kind + "\"");
}

std::vector<Factor> factor_list(const json &j, const std::string &path, bool allow_pauli) {
    std::vector<Factor> out;
    for (size_t i = 0; i < j.size(); i++) {
        std::string p = at_index(path, i);
        Factor f;
        f.qubits = qubit_list(j[i], p);
        f.op = operator_spec(j[i], p, allow_pauli);
        if (f.op.num_qubits() != f.qubits.size()) {
            fail(ErrorCode::Validation, p + ": operator acts on " + std::to_string(f.op.num_qubits()) +
                                            " qubits but lists " + std::to_string(f.qubits.size()));
        }
        out.push_back(std::move(f));
    }
    return out;
}

ordered_json cost_json(const CostReport &cost) {
    ordered_json j;
    j["state_cost"] = cost.state_cost;
    j["channel_costs"] = cost.channel_costs;
    j["observable_cost"] = cost.observable_cost;
    j["total_bound"] = cost.total_bound;
    return j;
}

}  // namespace

Circuit parse_circuit(std::string_view source) {
    json doc = parse_json(source);
    require_object(doc, "");
    Circuit c;
    c.num_qubits = index(field(doc, "", "n"), "n");
    if (c.num_qubits == 0) {
        fail(ErrorCode::Validation, "n: register must have at least one qubit");
    }

    const json &input = field(doc, "", "input");
    if (input.is_string()) {
        std::string name = input.get<std::string>();
        c.input = located("input", [&] { return FactoredOperator::product(c.num_qubits, named_state(name)); });
    } else if (input.is_array()) {
        std::vector<Factor> factors = factor_list(input, "input", false);
        c.input = located("input", [&] { return FactoredOperator(c.num_qubits, std::move(factors)); });
    } else {
        bad("input", "expected a state name or an array of factor specs");
    }

    const json &channels = field(doc, "", "channels");
    if (!channels.is_array()) {
        bad("channels", "expected an array");
    }
    for (size_t i = 0; i < channels.size(); i++) {
        std::string p = at_index("channels", i);
        std::vector<size_t> qubits = qubit_list(channels[i], p);
        Ptm ptm = channel_spec(channels[i], p, qubits.size());
        ChannelApplication app{std::move(ptm), std::move(qubits)};
        located(p, [&] { app.validate(c.num_qubits); });
        c.channels.push_back(std::move(app));
    }

    const json &obs = field(doc, "", "observable");
    if (obs.is_string()) {
        std::string word = obs.get<std::string>();
        if (word.size() != c.num_qubits) {
            fail(ErrorCode::Validation, "observable: Pauli string has " + std::to_string(word.size()) +
                                            " letters for " + std::to_string(c.num_qubits) + " qubits");
        }
        c.observable = located("observable", [&] { return FactoredOperator::from_pauli(PauliString::from_text(word)); });
    } else if (obs.is_array()) {
        std::vector<Factor> factors = factor_list(obs, "observable", true);
        std::vector<bool> covered(c.num_qubits, false);
        for (const Factor &f : factors) {
            for (size_t q : f.qubits) {
                if (q < c.num_qubits) {
                    covered[q] = true;
                }
            }
        }
        for (size_t q = 0; q < c.num_qubits; q++) {
            if (!covered[q]) {
                factors.push_back({{q}, DenseOperator::from_pauli(PauliString(1))});
            }
        }
        c.observable = located("observable", [&] { return FactoredOperator(c.num_qubits, std::move(factors)); });
    } else {
        bad("observable", "expected a Pauli string or an array of factor specs");
    }
    c.validate();
    return c;
}

Circuit load_circuit(const std::string &path) {
    return located(path, [&] { return parse_circuit(read_file(path)); });
}

Ptm parse_channel(std::string_view source) {
    json doc = parse_json(source);
    size_t k = 0;
    if (doc.is_object() && doc.contains("qubits")) {
        k = qubit_list(doc, "").size();
    }
    return channel_spec(doc, "", k);
}

E3Lin2Instance parse_instance(std::string_view source) {
    json doc = parse_json(source);
    require_object(doc, "");
    E3Lin2Instance inst;
    inst.num_qubits = index(field(doc, "", "n"), "n");
    const json &eqs = field(doc, "", "equations");
    if (!eqs.is_array()) {
        bad("equations", "expected an array");
    }
    for (size_t i = 0; i < eqs.size(); i++) {
        std::string p = at_index("equations", i);
        if (!eqs[i].is_array() || eqs[i].size() != 4) {
            bad(p, "expected [a, b, c, d]");
        }
        Equation e;
        e.a = index(eqs[i][0], at_index(p, 0));
        e.b = index(eqs[i][1], at_index(p, 1));
        e.c = index(eqs[i][2], at_index(p, 2));
        e.d = static_cast<int>(index(eqs[i][3], at_index(p, 3)));
        inst.equations.push_back(e);
    }
    if (doc.contains("m") && index(doc["m"], "m") != inst.equations.size()) {
        fail(ErrorCode::Validation, "m: does not match the number of equations");
    }
    inst.max_degree = doc.contains("max_degree") ? index(doc["max_degree"], "max_degree")
                                                 : default_max_degree(inst.equations.size());
    inst.validate();
    return inst;
}

E3Lin2Instance load_instance(const std::string &path) {
    return located(path, [&] { return parse_instance(read_file(path)); });
}

std::string instance_json(const E3Lin2Instance &inst) {
    ordered_json j;
    j["n"] = inst.num_qubits;
    j["m"] = inst.num_equations();
    j["max_degree"] = inst.max_degree;
    ordered_json eqs = ordered_json::array();
    for (const Equation &e : inst.equations) {
        eqs.push_back({e.a, e.b, e.c, e.d});
    }
    j["equations"] = eqs;
    return j.dump() + "\n";
}

std::string cost_report_json(const CostReport &cost) {
    return cost_json(cost).dump();
}

std::string estimate_report_json(const EstimateReport &r) {
    ordered_json j;
    j["direction"] = direction_name(r.direction);
    j["mean"] = r.mean;
    j["stddev"] = r.stddev;
    j["min"] = r.min;
    j["max"] = r.max;
    j["n_samples"] = r.n_samples;
    j["epsilon"] = r.epsilon;
    j["delta"] = r.delta;
    j["cost"] = cost_json(r.cost);
    j["seed"] = r.seed;
    j["workers"] = r.workers;
    j["wall_time"] = r.wall_time;
    return j.dump();
}

std::string classification_json(const ClassificationRecord &r) {
    ordered_json j;
    j["valid"] = r.valid;
    j["d_forward"] = r.d_forward;
    j["d_adjoint"] = r.d_adjoint;
    j["robustness"] = r.robustness;
    j["category"] = r.category;
    return j.dump();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::InvalidArgument, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(ErrorCode::InvalidArgument, "cannot write " + path);
    }
    out << contents;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace pauliprop
