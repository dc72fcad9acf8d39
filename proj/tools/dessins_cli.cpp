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

// Command-line front end. Exit codes: 0 success or property holds, 1 property
// fails, 2 bad input or usage, 3 resource cap exceeded.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <openssl/evp.h>

#include "dessins/belyi.hpp"
#include "dessins/contextuality.hpp"
#include "dessins/dessin.hpp"
#include "dessins/error.hpp"
#include "dessins/fpgroup.hpp"
#include "dessins/geometry.hpp"
#include "dessins/graph.hpp"
#include "dessins/io.hpp"

using namespace dessins;
using io::json;

namespace {

constexpr const char *kVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

struct Run {
    json result = json::object();
    std::string text;
    int exit_code = 0;
    std::vector<std::string> input_files;
    std::string dot;
};

struct Globals {
    bool json_out = false;
    bool timing = false;
    unsigned threads = 0;
    std::string dot_path;
};

std::string sha256_hex(const std::string &data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += fmt::format("{:02x}", digest[i]);
    }
    return out;
}

json load(Run &run, const std::string &path) {
    run.input_files.push_back(path);
    return io::read_json_file(path);
}

void line(Run &run, const std::string &s) { run.text += s + "\n"; }

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
    std::string out;
    for (const auto &p : parts) {
        out += (out.empty() ? "" : sep) + p;
    }
    return out;
}

std::string format_list(const std::vector<std::size_t> &v, std::size_t offset = 0) {
    std::vector<std::string> parts;
    for (auto x : v) {
        parts.push_back(std::to_string(x + offset));
    }
    return "{" + join(parts, ",") + "}";
}

json group_json(const GroupSummary &g) {
    json j = {{"order", g.order}, {"abelian", g.abelian}, {"fingerprint", io::to_json(g.fingerprint)}};
    j["name"] = g.name ? json(*g.name) : json(nullptr);
    return j;
}

json dessin_report(const Dessin &d, std::size_t cap) {
    auto s = signature(d);
    json j = io::to_json(d);
    j["passport"] = passport(d).to_string();
    j["signature"] = {{"black", s.black}, {"white", s.white}, {"faces", s.faces}, {"genus", s.genus}};
    j["group"] = group_json(monodromy_group(d, cap));
    return j;
}

std::string certificate_digest(const GraphCanonicalForm &form) {
    std::string bytes;
    for (auto w : form.certificate) {
        for (int k = 0; k < 8; ++k) {
            bytes.push_back(static_cast<char>((w >> (8 * k)) & 0xff));
        }
    }
    return sha256_hex(bytes);
}

Graph graph_or_geometry(const json &j) {
    if (j.is_object() && j.contains("points")) {
        return collinearity_graph(io::geometry_from_json(j));
    }
    return io::graph_from_json(j);
}

// ---- pauli, chsh, magic

void pauli_mul(Run &run, const std::string &a, const std::string &b) {
    auto p = multiply(parse_pauli(a), parse_pauli(b));
    run.result = {{"product", format_pauli(p)}};
    line(run, format_pauli(p));
}

void pauli_commutes(Run &run, const std::string &a, const std::string &b) {
    bool c = commutes(parse_pauli(a), parse_pauli(b));
    run.result = {{"commutes", c}};
    line(run, c ? "true" : "false");
    run.exit_code = c ? 0 : 1;
}

void chsh_norm_cmd(Run &run, const std::vector<std::string> &labels) {
    if (labels.size() != 4) {
        throw InputError("chsh norm takes exactly four observables");
    }
    ChshQuadruple q({parse_pauli(labels[0]), parse_pauli(labels[1]), parse_pauli(labels[2]), parse_pauli(labels[3])});
    if (q[0].n_qubits() > kChshMaxQubits) {
        throw InputError(fmt::format("chsh norm supports up to {} qubits", kChshMaxQubits));
    }
    double norm = chsh_norm(q);
    run.result = {{"norm", norm}};
    line(run, fmt::format("{:.12f}", norm));
}

void magic_verify(Run &run, const std::string &path) {
    auto config = io::magic_from_json(load(run, path));
    auto cert = is_magic(config);
    json signs = json::array();
    for (std::size_t l = 0; l < config.lines().size(); ++l) {
        signs.push_back(config.line_signs()[l]);
        std::vector<std::string> ops;
        for (const auto &o : config.line_operators(l)) {
            ops.push_back(o.to_string());
        }
        line(run, fmt::format("line {}: {} = {}{}", l, join(ops, "."), config.line_signs()[l] < 0 ? "-" : "+",
                              std::string(config.n_qubits(), 'I')));
    }
    run.result = {{"magic", cert.magic},
                  {"occurrences", cert.occurrences},
                  {"all_occurrences_even", cert.all_occurrences_even},
                  {"sign_product", cert.sign_product},
                  {"negative_lines", cert.negative_lines},
                  {"line_signs", signs}};
    line(run, fmt::format("every observable on an even number of lines: {}", cert.all_occurrences_even ? "yes" : "no"));
    line(run, fmt::format("negative lines: {}, sign product {}", cert.negative_lines, cert.sign_product));
    line(run, cert.magic ? "magic" : "not magic");
    run.exit_code = cert.magic ? 0 : 1;
}

void magic_census(Run &run, const Globals &g, bool squares, bool pentagrams, unsigned qubits, bool count_only) {
    if (squares == pentagrams) {
        throw InputError("choose exactly one of --squares and --pentagrams");
    }
    json members = json::array();
    if (squares) {
        auto census = census_squares(qubits, g.threads, !count_only);
        run.result["kind"] = "squares";
        run.result["qubits"] = qubits;
        run.result["count"] = census.count;
        for (const auto &sq : census.squares) {
            json m = json::array();
            for (const auto &o : sq.sigma()) {
                m.push_back(o.to_string());
            }
            members.push_back({{"square", m}});
        }
    } else {
        auto census = census_pentagrams(g.threads, !count_only);
        run.result["kind"] = "pentagrams";
        run.result["count"] = census.count;
        json hist = json::object();
        for (const auto &[neg, count] : census.negative_line_histogram) {
            hist[std::to_string(neg)] = count;
        }
        run.result["negative_line_histogram"] = hist;
        for (const auto &p : census.pentagrams) {
            json m = io::to_json(p);
            m["negative_lines"] = is_magic(p).negative_lines;
            members.push_back(m);
        }
    }
    if (count_only) {
        line(run, std::to_string(run.result["count"].get<std::size_t>()));
        return;
    }
    run.result["members"] = members;
    for (const auto &m : members) {
        line(run, m.dump());
    }
}

// ---- dessins and presentations

void dessin_analyze(Run &run, const std::string &path, std::size_t cap) {
    auto d = io::dessin_from_json(load(run, path));
    run.result = dessin_report(d, cap);
    const auto &r = run.result;
    line(run, fmt::format("edges: {}", d.n_edges()));
    line(run, "passport: " + r["passport"].get<std::string>());
    line(run, fmt::format("signature (B,W,F,g): ({},{},{},{})", r["signature"]["black"].get<int>(),
                          r["signature"]["white"].get<int>(), r["signature"]["faces"].get<int>(),
                          r["signature"]["genus"].get<int>()));
    line(run, fmt::format("genus: {}", r["signature"]["genus"].get<int>()));
    auto group = monodromy_group(d, cap);
    line(run, fmt::format("monodromy group: {}{}", format_fingerprint(group.fingerprint),
                          group.name ? " ~ " + *group.name : ""));
    run.dot = to_dot(d);
}

DessinFilter make_filter(const std::string &black, const std::string &white, const std::string &faces,
                         std::uint64_t order) {
    DessinFilter f;
    if (!black.empty()) {
        f.black = parse_cycle_type(black);
    }
    if (!white.empty()) {
        f.white = parse_cycle_type(white);
    }
    if (!faces.empty()) {
        f.faces = parse_cycle_type(faces);
    }
    if (order != 0) {
        f.group_order = order;
    }
    return f;
}

void dessin_enumerate(Run &run, std::size_t edges, const DessinFilter &filter) {
    auto found = enumerate_dessins_direct(edges, filter);
    json list = json::array();
    for (const auto &d : found) {
        json j = dessin_report(d, PermutationGroup::kDefaultCap);
        line(run, j.dump());
        list.push_back(std::move(j));
    }
    run.result = {{"edges", edges}, {"count", found.size()}, {"dessins", list}};
}

std::vector<Word> subgroup_words(const FinitePresentation &p, const std::string &text) {
    std::vector<Word> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        out.push_back(p.parse_word(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) {
            return out;
        }
        start = comma + 1;
    }
}

FinitePresentation load_presentation(Run &run, const std::string &path) {
    run.input_files.push_back(path);
    return FinitePresentation::parse(io::read_text_file(path));
}

void fp_coset(Run &run, const std::string &path, std::size_t max_cosets, const std::string &subgroup) {
    auto p = load_presentation(run, path);
    CosetEnumerationStats stats;
    auto t = coset_enumerate(p, subgroup_words(p, subgroup), max_cosets, &stats);
    run.result = io::to_json(t);
    run.result["index"] = t.index();
    run.result["defined"] = stats.defined;
    run.result["coincidences"] = stats.coincidences;
    line(run, fmt::format("index: {}", t.index()));
    line(run, fmt::format("cosets defined: {}, coincidences: {}", stats.defined, stats.coincidences));
    for (std::size_t g = 0; g < p.generator_count(); ++g) {
        line(run, fmt::format("{}: {}", p.generators()[g], t.action(g).to_cycle_string()));
    }
}

void fp_low_index(Run &run, const Globals &g, const std::string &path, std::size_t max_index, bool unbounded,
                  const DessinFilter &filter) {
    auto p = load_presentation(run, path);
    LowIndexOptions opts;
    opts.unbounded = unbounded;
    opts.threads = g.threads;
    auto tables = low_index_subgroups(p, max_index, opts);
    json classes = json::array();
    for (const auto &t : tables) {
        json j = {{"index", t.index()}};
        if (p.generator_count() == 2) {
            auto d = dessin_from_table(t);
            auto pp = passport(d);
            if ((filter.black && pp.entries[0] != *filter.black) || (filter.white && pp.entries[1] != *filter.white) ||
                (filter.faces && pp.entries[2] != *filter.faces)) {
                continue;
            }
            if (filter.group_order) {
                const Permutation gens[] = {d.alpha(), d.beta()};
                if (group_order(gens) != *filter.group_order) {
                    continue;
                }
            }
            auto group = monodromy_group(d);
            j["dessin"] = dessin_report(d, PermutationGroup::kDefaultCap);
            line(run, fmt::format("index {}: {} genus {} group order {}{}", t.index(), pp.to_string(),
                                  signature(d).genus, group.order, group.name ? " (" + *group.name + ")" : ""));
        } else {
            line(run, fmt::format("index {}", t.index()));
        }
        j["table"] = io::to_json(t)["table"];
        classes.push_back(std::move(j));
    }
    line(run, fmt::format("{} conjugacy class(es)", classes.size()));
    run.result = {{"max_index", max_index}, {"count", classes.size()}, {"classes", classes}};
}

// ---- geometry

void geometry_induce(Run &run, const std::string &path, int which, std::size_t cap) {
    auto d = io::dessin_from_json(load(run, path));
    auto classes = pair_stabilizer_classes(d, cap);
    json list = json::array();
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto &c = classes[k];
        json pairs = json::array();
        for (const auto &[i, j] : c.pairs) {
            pairs.push_back({i + 1, j + 1});
        }
        json entry = {{"class", k}, {"fingerprint", io::to_json(c.fingerprint)}, {"pairs", pairs}};
        entry["name"] = c.name ? json(*c.name) : json(nullptr);
        list.push_back(entry);
        line(run, fmt::format("class {}: stabilizer {}{}, {} pairs", k, format_fingerprint(c.fingerprint),
                              c.name ? " ~ " + *c.name : "", c.pairs.size()));
    }
    run.result = {{"classes", list}};
    if (which < 0) {
        return;
    }
    if (static_cast<std::size_t>(which) >= classes.size()) {
        throw InputError(fmt::format("--class {} out of range (found {})", which, classes.size()));
    }
    auto induced = induce_geometry(d, classes[static_cast<std::size_t>(which)]);
    run.result["graph"] = io::to_json(induced.graph);
    run.result["geometry"] = io::to_json(induced.geometry);
    auto form = canonical_form(induced.graph);
    auto matches = catalog_matches(induced.graph);
    run.result["automorphisms"] = form.automorphism_count.str();
    run.result["catalog_matches"] = matches;
    line(run, fmt::format("class {} graph: {} vertices, {} edges, |Aut| = {}", which, induced.graph.vertex_count(),
                          induced.graph.edge_count(), form.automorphism_count.str()));
    for (const auto &l : induced.geometry.lines()) {
        line(run, "line " + format_list(l, 1));
    }
    line(run, "catalog matches: " + (matches.empty() ? std::string("none") : join(matches, ", ")));
    std::vector<std::string> labels(induced.graph.vertex_count());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = std::to_string(i + 1);
    }
    run.dot = to_dot(induced.graph, labels);
}

void geometry_identify(Run &run, const std::string &path) {
    auto g = graph_or_geometry(load(run, path));
    auto form = canonical_form(g);
    auto matches = catalog_matches(g);
    run.result = {{"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"certificate_sha256", certificate_digest(form)},
                  {"canonical_position", form.position},
                  {"automorphisms", form.automorphism_count.str()},
                  {"catalog_matches", matches}};
    line(run, fmt::format("vertices: {}, edges: {}", g.vertex_count(), g.edge_count()));
    line(run, "certificate: " + certificate_digest(form));
    line(run, "|Aut|: " + form.automorphism_count.str());
    line(run, "catalog matches: " + (matches.empty() ? std::string("none") : join(matches, ", ")));
    run.dot = to_dot(g);
}

void geometry_polygon(Run &run, const std::string &path, std::size_t n) {
    auto geom = io::geometry_from_json(load(run, path));
    auto r = verify_generalized_polygon(geom, n);
    run.result = {{"points", geom.point_count()}, {"lines", geom.line_count()}, {"n", n},
                  {"diameter", r.diameter},       {"pass", r.pass}};
    run.result["s"] = r.s ? json(*r.s) : json(nullptr);
    run.result["t"] = r.t ? json(*r.t) : json(nullptr);
    run.result["girth"] = r.girth ? json(*r.girth) : json(nullptr);
    auto opt = [](const std::optional<std::size_t> &x) { return x ? std::to_string(*x) : std::string("-"); };
    line(run, fmt::format("points: {}, lines: {}", geom.point_count(), geom.line_count()));
    line(run, fmt::format("s: {}, t: {}", opt(r.s), opt(r.t)));
    line(run, fmt::format("incidence graph diameter: {}, girth: {}", r.diameter, opt(r.girth)));
    line(run, fmt::format("generalized {}-gon: {}", n, r.pass ? "yes" : "no"));
    run.exit_code = r.pass ? 0 : 1;
    run.dot = to_dot(levi_graph(geom));
}

void geometry_hyperplanes(Run &run, const std::string &path) {
    auto geom = io::geometry_from_json(load(run, path));
    auto hs = hyperplanes(geom);
    json list = json::array();
    std::map<std::string, std::size_t> kinds;
    for (const auto &h : hs) {
        list.push_back({{"points", h.points}, {"kind", to_string(h.kind)}, {"internal_lines", h.internal_lines}});
        ++kinds[to_string(h.kind)];
        std::vector<std::string> labels;
        for (auto p : h.points) {
            labels.push_back(geom.points()[p]);
        }
        line(run, fmt::format("{:5} size {:2}, {} internal lines: {}", to_string(h.kind), h.points.size(),
                              h.internal_lines, join(labels, " ")));
    }
    run.result = {{"count", hs.size()}, {"kinds", kinds}, {"hyperplanes", list}};
    std::vector<std::string> summary;
    for (const auto &[k, c] : kinds) {
        summary.push_back(fmt::format("{} {}", c, k));
    }
    line(run, fmt::format("{} hyperplanes: {}", hs.size(), join(summary, ", ")));
}

void geometry_cliques(Run &run, const std::string &path) {
    auto g = graph_or_geometry(load(run, path));
    auto cliques = maximal_cliques(g);
    std::map<std::size_t, std::size_t> sizes;
    for (const auto &c : cliques) {
        ++sizes[c.size()];
        line(run, format_list(c));
    }
    json by_size = json::object();
    for (const auto &[s, c] : sizes) {
        by_size[std::to_string(s)] = c;
    }
    run.result = {{"count", cliques.size()}, {"sizes", by_size}, {"cliques", cliques}};
    line(run, fmt::format("{} maximal cliques", cliques.size()));
}

void geometry_facts(Run &run, const std::string &path) {
    auto g = graph_or_geometry(load(run, path));
    auto f = graph_facts(g);
    run.result = {{"vertices", f.vertices}, {"edges", f.edges},       {"min_degree", f.min_degree},
                  {"max_degree", f.max_degree}, {"independence_number", f.independence_number},
                  {"bipartite", f.bipartite}, {"planar", f.planar}};
    run.result["edge_chromatic_number"] = f.edge_chromatic_number ? json(*f.edge_chromatic_number) : json(nullptr);
    line(run, fmt::format("vertices {}, edges {}, degrees {}..{}", f.vertices, f.edges, f.min_degree, f.max_degree));
    line(run, fmt::format("independence number: {}", f.independence_number));
    line(run, fmt::format("edge chromatic number: {}",
                          f.edge_chromatic_number ? std::to_string(*f.edge_chromatic_number) : std::string("-")));
    line(run, fmt::format("bipartite: {}, planar: {}", f.bipartite ? "yes" : "no", f.planar ? "yes" : "no"));
}

// ---- belyi

json roots_json(const std::vector<VertexRoot> &roots) {
    json out = json::array();
    for (const auto &r : roots) {
        json j = {{"re", r.value.real()}, {"im", r.value.imag()}, {"multiplicity", r.multiplicity}};
        j["exact"] = r.exact ? json(r.exact->to_string()) : json(nullptr);
        out.push_back(j);
    }
    return out;
}

std::string roots_text(const std::vector<VertexRoot> &roots, unsigned at_infinity) {
    std::vector<std::string> parts;
    for (const auto &r : roots) {
        std::string v = r.exact ? r.exact->to_string()
                                : (r.value.imag() == 0.0 ? fmt::format("{:.12g}", r.value.real())
                                                         : fmt::format("{:.12g}{:+.12g}i", r.value.real(),
                                                                       r.value.imag()));
        parts.push_back(r.multiplicity > 1 ? fmt::format("{} (x{})", v, r.multiplicity) : v);
    }
    if (at_infinity > 0) {
        parts.push_back(at_infinity > 1 ? fmt::format("inf (x{})", at_infinity) : "inf");
    }
    return parts.empty() ? "none" : join(parts, ", ");
}

void belyi_verify(Run &run, const std::string &candidate_path, const std::string &dessin_path) {
    auto f = io::candidate_from_json(load(run, candidate_path));
    auto report = critical_values_ok(f);
    line(run, fmt::format("f = ({}) / ({})", f.numerator().to_string(), f.denominator().to_string()));
    line(run, fmt::format("degree: {}", f.degree()));
    run.result = io::to_json(f);
    run.result["degree"] = f.degree();
    run.result["critical_values_ok"] = report.ok;
    if (!report.ok) {
        run.result["witness"] = report.witness.to_string();
        if (report.value_at_infinity) {
            run.result["value_at_infinity"] = report.value_at_infinity->to_string();
        }
        line(run, "critical values outside {0, 1, inf}: roots of " + report.witness.to_string() +
                      (report.value_at_infinity ? ", and f(inf) = " + report.value_at_infinity->to_string() : ""));
        line(run, "not a Belyi function");
        run.exit_code = 1;
        return;
    }
    line(run, "critical values within {0, 1, inf}");
    auto pp = passport_of(f);
    run.result["passport"] = pp.to_string();
    line(run, "passport: " + pp.to_string());
    if (f.degree() <= kCoordinatesMaxDegree) {
        auto v = vertex_coordinates(f);
        run.result["black"] = roots_json(v.black);
        run.result["white"] = roots_json(v.white);
        run.result["poles"] = roots_json(v.faces);
        run.result["infinity"] = {v.black_at_infinity, v.white_at_infinity, v.faces_at_infinity};
        line(run, "black vertices: " + roots_text(v.black, v.black_at_infinity));
        line(run, "white vertices: " + roots_text(v.white, v.white_at_infinity));
        line(run, "poles: " + roots_text(v.faces, v.faces_at_infinity));
    }
    if (!dessin_path.empty()) {
        auto d = io::dessin_from_json(load(run, dessin_path));
        bool match = matches_dessin(f, d);
        run.result["dessin_passport"] = passport(d).to_string();
        run.result["matches_dessin"] = match;
        line(run, fmt::format("dessin passport: {} ({})", passport(d).to_string(), match ? "match" : "mismatch"));
        run.exit_code = match ? 0 : 1;
    }
}

// ---- catalog

void catalog_list(Run &run) {
    run.result = {{"names", catalog_names()}};
    for (const auto &n : catalog_names()) {
        line(run, n);
    }
}

void catalog_get(Run &run, const std::string &name) {
    auto entry = catalog(name);
    if (const auto *g = std::get_if<Graph>(&entry)) {
        run.result = {{"type", "graph"}, {"graph", io::to_json(*g)}};
        run.text = io::to_json(*g).dump() + "\n";
    } else if (const auto *geom = std::get_if<IncidenceGeometry>(&entry)) {
        run.result = {{"type", "geometry"}, {"geometry", io::to_json(*geom)}};
        run.text = io::to_json(*geom).dump() + "\n";
    } else {
        const auto &config = std::get<MagicConfiguration>(entry);
        run.result = {{"type", "magic_configuration"}, {"configuration", io::to_json(config)}};
        run.text = io::to_json(config).dump() + "\n";
    }
    run.dot = to_dot(catalog_graph(entry));
}

int finish(const Run &run, const Globals &g, const std::vector<std::string> &argv, double seconds) {
    if (!g.dot_path.empty()) {
        if (run.dot.empty()) {
            throw InputError("this command does not produce a graph for --dot");
        }
        std::ofstream out(g.dot_path);
        if (!out) {
            throw InputError("cannot write " + g.dot_path);
        }
        out << run.dot;
    }
    if (g.json_out) {
        std::string inputs;
        for (const auto &path : run.input_files) {
            inputs += sha256_hex(io::read_text_file(path));
        }
        json report = {{"schema", kSchemaVersion},
                       {"version", kVersion},
                       {"command", argv},
                       {"inputs_sha256", sha256_hex(inputs)},
                       {"exit_code", run.exit_code},
                       {"result", run.result}};
        if (g.timing) {
            report["seconds"] = seconds;
        }
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << run.text;
        if (g.timing) {
            std::cerr << fmt::format("{:.3f} s\n", seconds);
        }
    }
    return run.exit_code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Dessins d'enfants, Pauli contextuality and finite geometries"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);
    Globals g;
    app.add_flag("--json", g.json_out, "Print a machine-readable report");
    app.add_flag("--timing", g.timing, "Report wall time (kept out of the default output for reproducibility)");
    app.add_option("--threads", g.threads, "Worker threads, 0 = all cores")->capture_default_str();
    app.add_option("--dot", g.dot_path, "Write a Graphviz drawing of the command's graph");

    std::function<void(Run &)> action;
    auto set = [&](std::function<void(Run &)> f) { action = std::move(f); };

    std::string a, b, path, path2, black, white, faces, subgroup, name;
    std::vector<std::string> labels;
    std::size_t n = 0, max_cosets = 1'000'000, max_index = 0, cap = PermutationGroup::kDefaultCap;
    std::uint64_t order = 0;
    unsigned qubits = 2;
    bool squares = false, pentagrams = false, count_only = false, unbounded = false;
    int which = -1;

    auto *pauli = app.add_subcommand("pauli", "Pauli operator arithmetic (labels like -iXYZ)");
    pauli->require_subcommand(1);
    auto *mul = pauli->add_subcommand("mul", "Product A*B with its phase");
    mul->add_option("A", a)->required();
    mul->add_option("B", b)->required();
    mul->callback([&] { set([&](Run &r) { pauli_mul(r, a, b); }); });
    auto *comm = pauli->add_subcommand("commutes", "Exit 0 iff A and B commute");
    comm->add_option("A", a)->required();
    comm->add_option("B", b)->required();
    comm->callback([&] { set([&](Run &r) { pauli_commutes(r, a, b); }); });

    auto *chsh = app.add_subcommand("chsh", "CHSH operator of a square");
    chsh->require_subcommand(1);
    auto *norm = chsh->add_subcommand("norm", "Operator norm of s1 s2 + s2 s3 + s3 s4 - s4 s1");
    norm->add_option("observables", labels, "S1 S2 S3 S4")->required()->expected(4);
    norm->callback([&] { set([&](Run &r) { chsh_norm_cmd(r, labels); }); });

    auto *magic = app.add_subcommand("magic", "Parity proofs of contextuality");
    magic->require_subcommand(1);
    auto *verify = magic->add_subcommand("verify", "Parity certificate; exit 0 iff magic");
    verify->add_option("config", path, "MagicConfiguration JSON")->required();
    verify->callback([&] { set([&](Run &r) { magic_verify(r, path); }); });
    auto *census = magic->add_subcommand("census", "Count squares or pentagrams; members as JSON lines");
    census->add_flag("--squares", squares);
    census->add_flag("--pentagrams", pentagrams);
    census->add_option("--qubits", qubits, "1, 2 or 3 (squares)")->check(CLI::Range(1, 3))->capture_default_str();
    census->add_flag("--count-only", count_only, "Print only the count");
    census->callback(
        [&] { set([&](Run &r) { magic_census(r, g, squares, pentagrams, qubits, count_only); }); });

    auto *dessin = app.add_subcommand("dessin", "Dessins as permutation pairs");
    dessin->require_subcommand(1);
    auto *analyze = dessin->add_subcommand("analyze", "Passport, signature, genus and monodromy group");
    analyze->add_option("dessin", path, "Dessin JSON")->required();
    analyze->add_option("--cap", cap, "Group order cap")->capture_default_str();
    analyze->callback([&] { set([&](Run &r) { dessin_analyze(r, path, cap); }); });
    auto *enumerate = dessin->add_subcommand("enumerate", "All clean dessins with N edges, optionally filtered");
    enumerate->add_option("--edges", n)->required();
    enumerate->add_option("--black", black, "Black cycle type, e.g. \"3^3 1^1\"");
    enumerate->add_option("--white", white, "White cycle type");
    enumerate->add_option("--faces", faces, "Face cycle type");
    enumerate->add_option("--order", order, "Monodromy group order");
    enumerate->callback(
        [&] { set([&](Run &r) { dessin_enumerate(r, n, make_filter(black, white, faces, order)); }); });

    auto *fp = app.add_subcommand("fp", "Finitely presented groups");
    fp->require_subcommand(1);
    auto *coset = fp->add_subcommand("coset", "Todd-Coxeter coset enumeration");
    coset->add_option("--presentation", path, "File like \"gens: a,b; rels: a^2, b^3, (a*b)^5\"")->required();
    coset->add_option("--max-cosets", max_cosets)->capture_default_str();
    coset->add_option("--subgroup", subgroup, "Comma-separated subgroup generators");
    coset->callback([&] { set([&](Run &r) { fp_coset(r, path, max_cosets, subgroup); }); });
    auto *low = fp->add_subcommand("low-index", "Conjugacy classes of subgroups of bounded index");
    low->add_option("--presentation", path)->required();
    low->add_option("--max-index", max_index)->required();
    low->add_flag("--unbounded", unbounded, "Lift the index cap");
    low->add_option("--black", black);
    low->add_option("--white", white);
    low->add_option("--faces", faces);
    low->add_option("--order", order, "Keep classes whose permutation image has this order");
    low->callback([&] {
        set([&](Run &r) { fp_low_index(r, g, path, max_index, unbounded, make_filter(black, white, faces, order)); });
    });

    auto *geometry = app.add_subcommand("geometry", "Induced geometries and graph identification");
    geometry->require_subcommand(1);
    auto *induce = geometry->add_subcommand("induce", "Pair-stabilizer classes of a dessin");
    induce->add_option("dessin", path)->required();
    induce->add_option("--class", which, "Induce the geometry of this class");
    induce->add_option("--cap", cap)->capture_default_str();
    induce->callback([&] { set([&](Run &r) { geometry_induce(r, path, which, cap); }); });
    auto *identify = geometry->add_subcommand("identify", "Canonical certificate, |Aut| and catalog matches");
    identify->add_option("graph", path, "Graph or geometry JSON")->required();
    identify->callback([&] { set([&](Run &r) { geometry_identify(r, path); }); });
    auto *polygon = geometry->add_subcommand("polygon", "Generalized n-gon test; exit 0 iff it passes");
    polygon->add_option("geometry", path)->required();
    polygon->add_option("--n", n)->required();
    polygon->callback([&] { set([&](Run &r) { geometry_polygon(r, path, n); }); });
    auto *hyper = geometry->add_subcommand("hyperplanes", "Classified geometric hyperplanes");
    hyper->add_option("geometry", path)->required();
    hyper->callback([&] { set([&](Run &r) { geometry_hyperplanes(r, path); }); });
    auto *cliques = geometry->add_subcommand("cliques", "Maximal cliques");
    cliques->add_option("graph", path)->required();
    cliques->callback([&] { set([&](Run &r) { geometry_cliques(r, path); }); });
    auto *facts = geometry->add_subcommand("facts", "Independence number, edge chromatic number, flags");
    facts->add_option("graph", path)->required();
    facts->callback([&] { set([&](Run &r) { geometry_facts(r, path); }); });

    auto *belyi = app.add_subcommand("belyi", "Belyi functions over Q(sqrt2)");
    belyi->require_subcommand(1);
    auto *bverify = belyi->add_subcommand("verify", "Critical values, passport and vertex coordinates");
    bverify->add_option("--candidate", path, "{\"num\": [[a,b],...], \"den\": [[a,b],...]}")->required();
    bverify->add_option("--dessin", path2, "Dessin JSON to compare passports with");
    bverify->callback([&] { set([&](Run &r) { belyi_verify(r, path, path2); }); });

    auto *cat = app.add_subcommand("catalog", "Reference structures");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "Names")->callback([&] { set([&](Run &r) { catalog_list(r); }); });
    auto *get = cat->add_subcommand("get", "Print an entry as JSON");
    get->add_option("NAME", name)->required();
    get->callback([&] { set([&](Run &r) { catalog_get(r, name); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        Run run;
        auto start = std::chrono::steady_clock::now();
        action(run);
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return finish(run, g, args, seconds);
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded &e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const PropertyFailure &e) {
        std::cerr << "property fails: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
