// Copyright 2026 The amr2sparql Authors.
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

#ifndef AMR2SPARQL_SPARQL_PARSER_HPP_
#define AMR2SPARQL_SPARQL_PARSER_HPP_

#include <string_view>

#include "amr2sparql/sparql.hpp"

namespace amr2sparql {

// Parses the supported subset: PREFIX declarations, then
//   SELECT [DISTINCT] ?v WHERE { ... }
//   SELECT [DISTINCT] (COUNT([DISTINCT] ?v) AS ?c) WHERE { ... }
//   SELECT DISTINCT COUNT(?v) WHERE { ... }
//   ASK [WHERE] { ... }
// over basic graph patterns (with `;` and `,` abbreviations and `a`).
// Prefixed names are expanded; `<label:local>` is expanded too when `label`
// is declared. Anything else throws UnsupportedConstruct naming the
// construct; syntax errors throw MalformedSparql.
SparqlQuery parse_sparql(std::string_view text);

}  // namespace amr2sparql

#endif  // AMR2SPARQL_SPARQL_PARSER_HPP_
