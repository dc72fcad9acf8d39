// Copyright 2026 The dessins Authors
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

#include "dessins/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "dessins/error.hpp"

namespace dessins::io {

namespace {

const json &field(const json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw InputError(fmt::format("missing field \"{}\"", name));
    }
    return j.at(name);
}

template <typename T>
T get(const json &j, const char *what) {
    try {
        return j.get<T>();
    } catch (const json::exception &) {
        throw InputError(fmt::format("malformed {}: {}", what, j.dump()));
    }
}

std::size_t index_value(const json &j, const char *what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw InputError(fmt::format("malformed {}: {}", what, j.dump()));
    }
    return j.get<std::size_t>();
}

std::vector<std::vector<std::size_t>> index_lists(const json &j, const char *what) {
    if (!j.is_array()) {
        throw InputError(fmt::format("{} must be an array of arrays", what));
    }
    std::vector<std::vector<std::size_t>> out;
    for (const auto &row : j) {
        if (!row.is_array()) {
            throw InputError(fmt::format("{} must be an array of arrays", what));
        }
        std::vector<std::size_t> list;
        for (const auto &x : row) {
            list.push_back(index_value(x, what));
        }
        out.push_back(std::move(list));
    }
    return out;
}

json cycles_json(const Permutation &p) {
    json out = json::array();
    for (const auto &cycle : p.cycles(false)) {
        json c = json::array();
        for (auto x : cycle) {
            c.push_back(x + 1);
        }
        out.push_back(std::move(c));
    }
    return out;
}

Permutation cycles_from_json(std::size_t n, const json &j, const char *what) {
    std::vector<std::vector<std::uint32_t>> cycles;
    for (const auto &cycle : index_lists(j, what)) {
        std::vector<std::uint32_t> c;
        for (auto x : cycle) {
            if (x == 0 || x > n) {
                throw InputError(fmt::format("{}: label {} outside 1..{}", what, x, n));
            }
            c.push_back(static_cast<std::uint32_t>(x));
        }
        cycles.push_back(std::move(c));
    }
    return Permutation::from_cycles(n, cycles);
}

json field_element_json(const QSqrt2 &x) { return json::array({to_json(x.a()), to_json(x.b())}); }

Poly poly_from_json(const json &j, const char *what) {
    if (!j.is_array()) {
        throw InputError(fmt::format("\"{}\" must be an array of [a, b] pairs", what));
    }
    std::vector<QSqrt2> coeffs;
    for (const auto &c : j) {
        if (!c.is_array() || c.size() != 2) {
            throw InputError(fmt::format("\"{}\": coefficient {} is not an [a, b] pair", what, c.dump()));
        }
        coeffs.emplace_back(rational_from_json(c[0]), rational_from_json(c[1]));
    }
    return Poly(std::move(coeffs));
}

json poly_json(const Poly &p) {
    json out = json::array();
    for (const auto &c : p.coefficients()) {
        out.push_back(field_element_json(c));
    }
    return out;
}

}  // namespace

std::string read_text_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(fmt::format("cannot open {}", path));
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json read_json_file(const std::string &path) {
    std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(fmt::format("{}: invalid JSON ({})", path, e.what()));
    }
}

json to_json(const MagicConfiguration &config) {
    json obs = json::array();
    for (const auto &o : config.observables()) {
        obs.push_back(o.to_string());
    }
    return {{"observables", obs}, {"lines", config.lines()}};
}

MagicConfiguration magic_from_json(const json &j) {
    std::vector<PauliOperator> obs;
    const auto &list = field(j, "observables");
    if (!list.is_array()) {
        throw InputError("\"observables\" must be an array of strings");
    }
    for (const auto &o : list) {
        obs.push_back(parse_pauli(get<std::string>(o, "observable")));
    }
    return MagicConfiguration(std::move(obs), index_lists(field(j, "lines"), "lines"));
}

json to_json(const Dessin &d) {
    return {{"edges", d.n_edges()}, {"alpha", cycles_json(d.alpha())}, {"beta", cycles_json(d.beta())}};
}

Dessin dessin_from_json(const json &j) {
    std::size_t n = index_value(field(j, "edges"), "edge count");
    return Dessin::make(cycles_from_json(n, field(j, "alpha"), "alpha"),
                        cycles_from_json(n, field(j, "beta"), "beta"));
}

json to_json(const IncidenceGeometry &geom) { return {{"points", geom.points()}, {"lines", geom.lines()}}; }

IncidenceGeometry geometry_from_json(const json &j) {
    const auto &points = field(j, "points");
    std::vector<std::string> labels;
    if (points.is_number_integer()) {
        for (std::size_t i = 0; i < index_value(points, "point count"); ++i) {
            labels.push_back(std::to_string(i));
        }
    } else if (points.is_array()) {
        for (const auto &p : points) {
            labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
        }
    } else {
        throw InputError("\"points\" must be an array of labels or a count");
    }
    return IncidenceGeometry(std::move(labels), index_lists(field(j, "lines"), "lines"));
}

json to_json(const Graph &g) {
    json edges = json::array();
    for (const auto &[u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json &j) {
    std::size_t n = index_value(field(j, "vertices"), "vertex count");
    if (n > Graph::kMaxVertices) {
        throw CapExceeded(fmt::format("graphs are limited to {} vertices, got {}", Graph::kMaxVertices, n));
    }
    Graph g(n);
    for (const auto &e : index_lists(field(j, "edges"), "edges")) {
        if (e.size() != 2) {
            throw InputError("every edge needs exactly two endpoints");
        }
        g.add_edge(e[0], e[1]);
    }
    return g;
}

json to_json(const mpq_class &q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
        return q.get_num().get_si();
    }
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        return json::array({q.get_num().get_si(), q.get_den().get_si()});
    }
    return q.get_str();
}

mpq_class rational_from_json(const json &j) {
    try {
        if (j.is_number_integer()) {
            return mpq_class(j.get<long>());
        }
        if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
            if (j[1].get<long>() == 0) {
                throw InputError("zero denominator");
            }
            mpq_class q(j[0].get<long>(), j[1].get<long>());
            q.canonicalize();
            return q;
        }
        if (j.is_string()) {
            mpq_class q(j.get<std::string>());
            if (q.get_den() == 0) {
                throw InputError("zero denominator");
            }
            q.canonicalize();
            return q;
        }
    } catch (const std::invalid_argument &) {
        // gmp rejects malformed strings this way; InputError derives from it too
    }
    throw InputError(fmt::format("malformed rational: {}", j.dump()));
}

json to_json(const BelyiCandidate &f) {
    return {{"num", poly_json(f.numerator())}, {"den", poly_json(f.denominator())}};
}

BelyiCandidate candidate_from_json(const json &j) {
    return BelyiCandidate(poly_from_json(field(j, "num"), "num"), poly_from_json(field(j, "den"), "den"));
}

json to_json(const CosetTable &t) {
    json rows = json::array();
    const std::size_t width = 2 * t.generator_count();
    for (std::size_t c = 0; c < t.index(); ++c) {
        json row = json::array();
        for (std::size_t k = 0; k < width; ++k) {
            row.push_back(t.image(c, k));
        }
        rows.push_back(std::move(row));
    }
    return {{"generators", t.generator_count()}, {"table", rows}};
}

CosetTable coset_table_from_json(const json &j) {
    std::size_t gens = index_value(field(j, "generators"), "generator count");
    std::vector<std::uint32_t> entries;
    for (const auto &row : index_lists(field(j, "table"), "table")) {
        if (row.size() != 2 * gens) {
            throw InputError(fmt::format("coset table rows need {} entries", 2 * gens));
        }
        for (auto x : row) {
            entries.push_back(static_cast<std::uint32_t>(x));
        }
    }
    return CosetTable(gens, std::move(entries));
}

json to_json(const Passport &p) {
    json out = json::array();
    for (const auto &entry : p.entries) {
        out.push_back(format_cycle_type(entry));
    }
    return out;
}

json to_json(const GroupFingerprint &fp) {
    json orders = json::object();
    for (const auto &[order, count] : fp.element_orders) {
        orders[std::to_string(order)] = count;
    }
    return {{"order", fp.order}, {"element_orders", orders}};
}

}  // namespace dessins::io
