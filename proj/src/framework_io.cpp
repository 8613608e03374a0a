// Copyright 2026 The chist authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chist/framework_io.hpp"

#include <fstream>

namespace chist {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected a complex number as a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json vector_to_json(const CVector& v) {
    json out = json::array();
    for (const Complex& z : v) out.push_back(complex_to_json(z));
    return out;
}

CVector vector_from_json(const json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError("vector length does not match dim");
    CVector v;
    v.reserve(dim);
    for (const json& e : j) v.push_back(complex_from_json(e));
    return v;
}

json matrix_to_json(const CMatrix& M) {
    json out = json::array();
    for (std::size_t r = 0; r < M.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < M.cols; ++c) row.push_back(complex_to_json(M(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

CMatrix matrix_from_json(const json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError("matrix row count does not match dim");
    CMatrix M(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != dim)
            throw ParseError("matrix column count does not match dim");
        for (std::size_t c = 0; c < dim; ++c) M(r, c) = complex_from_json(row[c]);
    }
    return M;
}

}  // namespace

json framework_to_json(const HistoryFramework& fw) {
    json j;
    j["dim"] = fw.dim();
    j["label"] = fw.label;
    j["initial"] = json{{"label", fw.initial.label},
                        {"amplitudes", vector_to_json(fw.initial.v)}};
    json steps = json::array();
    for (const Decomposition& dec : fw.steps) {
        json projs = json::array();
        for (const Projector& p : dec.projectors)
            projs.push_back(json{{"label", p.label}, {"matrix", matrix_to_json(p.mat)}});
        steps.push_back(json{{"projectors", std::move(projs)}});
    }
    j["steps"] = std::move(steps);
    if (!fw.evolutions.empty()) {
        json evs = json::array();
        for (const CMatrix& U : fw.evolutions) evs.push_back(matrix_to_json(U));
        j["evolutions"] = std::move(evs);
    }
    return j;
}

HistoryFramework framework_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("initial") || !j.contains("steps"))
        throw ParseError("framework file needs 'dim', 'initial' and 'steps'");
    const std::size_t dim = j.at("dim").get<std::size_t>();
    if (dim < 1 || dim > 16) throw ParseError("dim must be in [1, 16]");

    const json& ji = j.at("initial");
    StateVector initial =
        ji.is_object()
            ? make_state(vector_from_json(ji.at("amplitudes"), dim),
                         ji.value("label", std::string{}))
            : make_state(vector_from_json(ji, dim));

    std::vector<Decomposition> steps;
    std::size_t step_no = 0;
    for (const json& js : j.at("steps")) {
        ++step_no;
        if (!js.is_object() || !js.contains("projectors"))
            throw ParseError("step " + std::to_string(step_no) + ": missing 'projectors'");
        std::vector<Projector> ps;
        for (const json& jp : js.at("projectors")) {
            const std::string label = jp.value("label", std::string{});
            try {
                if (jp.contains("matrix")) {
                    ps.push_back(make_projector(matrix_from_json(jp.at("matrix"), dim), label));
                } else if (jp.contains("generating_vector")) {
                    ps.push_back(projector_from_vector(
                        make_state(vector_from_json(jp.at("generating_vector"), dim), label)));
                } else {
                    throw ParseError("needs 'matrix' or 'generating_vector'");
                }
            } catch (const Error& e) {
                throw ParseError("step " + std::to_string(step_no) + ": " + e.what());
            }
        }
        try {
            steps.push_back(make_decomposition(std::move(ps)));
        } catch (const Error& e) {
            throw ParseError("step " + std::to_string(step_no) + ": " + e.what());
        }
    }

    std::vector<CMatrix> evolutions;
    if (j.contains("evolutions"))
        for (const json& je : j.at("evolutions"))
            evolutions.push_back(matrix_from_json(je, dim));

    try {
        return make_framework(std::move(initial), std::move(steps), std::move(evolutions),
                              j.value("label", std::string{}));
    } catch (const Error& e) {
        throw ParseError(std::string("framework: ") + e.what());
    }
}

void save_framework(const HistoryFramework& fw, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << framework_to_json(fw).dump(2) << "\n";
}

HistoryFramework load_framework(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return framework_from_json(j);
}

}  // namespace chist
