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

#pragma once

#include <string>

#include <json.hpp>

#include "dessins/belyi.hpp"
#include "dessins/contextuality.hpp"
#include "dessins/dessin.hpp"
#include "dessins/fpgroup.hpp"
#include "dessins/geometry.hpp"
#include "dessins/graph.hpp"

// JSON forms of the library types. Readers throw InputError with a short
// description of what is wrong; writers emit the normalized form, so
// read(write(x)) == x.

namespace dessins::io {

using nlohmann::json;

json read_json_file(const std::string &path);
std::string read_text_file(const std::string &path);

/// { "observables": ["XX", ...], "lines": [[0, 1, 2], ...] }
json to_json(const MagicConfiguration &config);
MagicConfiguration magic_from_json(const json &j);

/// { "edges": n, "alpha": [[1, 2, 4], ...], "beta": [[2, 5], ...] }, 1-based
/// cycles; fixed points may be omitted on input and are omitted on output.
json to_json(const Dessin &d);
Dessin dessin_from_json(const json &j);

/// { "points": ["label", ...], "lines": [[0, 1, 2], ...] }, 0-based.
json to_json(const IncidenceGeometry &geom);
IncidenceGeometry geometry_from_json(const json &j);

/// { "vertices": n, "edges": [[u, v], ...] }, 0-based.
json to_json(const Graph &g);
Graph graph_from_json(const json &j);

/// A rational is an integer or an integer pair [num, den]; "p/q" strings are
/// also read.
json to_json(const mpq_class &q);
mpq_class rational_from_json(const json &j);

/// { "num": [[a, b], ...], "den": [[a, b], ...] }, [a, b] = a + b sqrt2,
/// lowest degree first.
json to_json(const BelyiCandidate &f);
BelyiCandidate candidate_from_json(const json &j);

/// { "generators": k, "table": [[...], ...] }, one row per coset, columns
/// g0, g0^-1, g1, g1^-1, ...
json to_json(const CosetTable &t);
CosetTable coset_table_from_json(const json &j);

json to_json(const Passport &p);
json to_json(const GroupFingerprint &fp);

}  // namespace dessins::io
