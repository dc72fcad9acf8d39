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

// Python bindings. Structured results cross the boundary as JSON text; the
// dessins package decodes them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dessins/belyi.hpp"
#include "dessins/contextuality.hpp"
#include "dessins/dessin.hpp"
#include "dessins/error.hpp"
#include "dessins/fpgroup.hpp"
#include "dessins/geometry.hpp"
#include "dessins/graph.hpp"
#include "dessins/io.hpp"

namespace py = pybind11;
using namespace dessins;
using io::json;

namespace {

json group_json(const GroupSummary &g) {
    json j = {{"order", g.order}, {"abelian", g.abelian}, {"fingerprint", io::to_json(g.fingerprint)}};
    j["name"] = g.name ? json(*g.name) : json(nullptr);
    return j;
}

std::string analyze_dessin(const std::string &text) {
    auto d = io::dessin_from_json(json::parse(text));
    auto s = signature(d);
    json j = {{"edges", d.n_edges()},
              {"passport", passport(d).to_string()},
              {"signature", {s.black, s.white, s.faces, s.genus}},
              {"genus", s.genus},
              {"group", group_json(monodromy_group(d))}};
    json classes = json::array();
    for (const auto &c : pair_stabilizer_classes(d)) {
        classes.push_back({{"fingerprint", io::to_json(c.fingerprint)}, {"pairs", c.pairs.size()}});
    }
    j["stabilizer_classes"] = classes;
    return j.dump();
}

std::string low_index(const std::string &presentation, std::size_t max_index) {
    auto p = FinitePresentation::parse(presentation);
    json out = json::array();
    for (const auto &t : low_index_subgroups(p, max_index)) {
        json j = {{"index", t.index()}, {"table", io::to_json(t)["table"]}};
        if (p.generator_count() == 2) {
            j["passport"] = passport(dessin_from_table(t)).to_string();
        }
        out.push_back(std::move(j));
    }
    return out.dump();
}

std::string verify_magic(const std::string &text) {
    auto cert = is_magic(io::magic_from_json(json::parse(text)));
    return json{{"magic", cert.magic},
                {"all_occurrences_even", cert.all_occurrences_even},
                {"negative_lines", cert.negative_lines},
                {"sign_product", cert.sign_product}}
        .dump();
}

std::string pentagram_census(unsigned threads) {
    auto census = census_pentagrams(threads, false);
    json hist = json::object();
    for (const auto &[neg, count] : census.negative_line_histogram) {
        hist[std::to_string(neg)] = count;
    }
    return json{{"count", census.count}, {"negative_line_histogram", hist}}.dump();
}

Graph graph_of(const json &j) {
    if (j.contains("points")) {
        return collinearity_graph(io::geometry_from_json(j));
    }
    return io::graph_from_json(j);
}

std::string identify(const std::string &text) {
    auto g = graph_of(json::parse(text));
    auto form = canonical_form(g);
    auto f = graph_facts(g);
    json j = {{"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"automorphisms", form.automorphism_count.str()},
              {"catalog_matches", catalog_matches(g)},
              {"independence_number", f.independence_number},
              {"bipartite", f.bipartite},
              {"planar", f.planar}};
    j["edge_chromatic_number"] = f.edge_chromatic_number ? json(*f.edge_chromatic_number) : json(nullptr);
    return j.dump();
}

std::string polygon(const std::string &text, std::size_t n) {
    auto r = verify_generalized_polygon(io::geometry_from_json(json::parse(text)), n);
    json j = {{"pass", r.pass}, {"diameter", r.diameter}};
    j["s"] = r.s ? json(*r.s) : json(nullptr);
    j["t"] = r.t ? json(*r.t) : json(nullptr);
    j["girth"] = r.girth ? json(*r.girth) : json(nullptr);
    return j.dump();
}

std::string hyperplane_list(const std::string &text) {
    json out = json::array();
    for (const auto &h : hyperplanes(io::geometry_from_json(json::parse(text)))) {
        out.push_back({{"points", h.points}, {"kind", to_string(h.kind)}, {"internal_lines", h.internal_lines}});
    }
    return out.dump();
}

std::string catalog_entry(const std::string &name) {
    auto entry = catalog(name);
    if (const auto *g = std::get_if<Graph>(&entry)) {
        return io::to_json(*g).dump();
    }
    if (const auto *geom = std::get_if<IncidenceGeometry>(&entry)) {
        return io::to_json(*geom).dump();
    }
    return io::to_json(std::get<MagicConfiguration>(entry)).dump();
}

std::string belyi(const std::string &candidate, const std::string &dessin) {
    auto f = io::candidate_from_json(json::parse(candidate));
    auto report = critical_values_ok(f);
    json j = {{"degree", f.degree()}, {"critical_values_ok", report.ok}};
    if (report.ok) {
        j["passport"] = passport_of(f).to_string();
        if (!dessin.empty()) {
            j["matches_dessin"] = matches_dessin(f, io::dessin_from_json(json::parse(dessin)));
        }
    } else {
        j["witness"] = report.witness.to_string();
    }
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "dessins native core";
    static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const CapExceeded &e) {
            PyErr_SetString(cap_exceeded.ptr(), e.what());
        } catch (const InputError &e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const json::exception &e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("pauli_multiply", [](const std::string &a, const std::string &b) {
        return format_pauli(multiply(parse_pauli(a), parse_pauli(b)));
    });
    m.def("pauli_commutes",
          [](const std::string &a, const std::string &b) { return commutes(parse_pauli(a), parse_pauli(b)); });
    m.def("chsh_norm", [](const std::vector<std::string> &labels) {
        if (labels.size() != 4) {
            throw InputError("chsh_norm takes four observables");
        }
        return chsh_norm(ChshQuadruple({parse_pauli(labels[0]), parse_pauli(labels[1]), parse_pauli(labels[2]),
                                        parse_pauli(labels[3])}));
    });
    m.def("verify_magic", &verify_magic);
    m.def("census_squares", [](unsigned qubits, unsigned threads) { return census_squares(qubits, threads, false).count; },
          py::arg("qubits"), py::arg("threads") = 0);
    m.def("census_pentagrams", &pentagram_census, py::arg("threads") = 0);
    m.def("analyze_dessin", &analyze_dessin);
    m.def("low_index", &low_index);
    m.def("coset_index", [](const std::string &presentation, std::size_t max_cosets) {
        return coset_enumerate(FinitePresentation::parse(presentation), {}, max_cosets).index();
    });
    m.def("identify", &identify);
    m.def("polygon", &polygon);
    m.def("hyperplanes", &hyperplane_list);
    m.def("catalog_names", &catalog_names);
    m.def("catalog_get", &catalog_entry);
    m.def("belyi_verify", &belyi, py::arg("candidate"), py::arg("dessin") = "");
}
