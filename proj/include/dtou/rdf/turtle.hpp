// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dtou/rdf/graph.hpp"

namespace dtou::rdf {

/// Namespace the empty prefix `:` resolves to when a document declares no
/// @prefix for it. Configurable process-wide (set once at startup).
const std::string& policy_namespace();
void set_policy_namespace(const std::string& ns);

struct ParseOptions {
  std::optional<std::string> base;
  /// Pre-bound prefixes; document @prefix directives override them.
  std::map<std::string, std::string> prefixes;
};

/// "" -> policy namespace, plus rdf / rdfs / xsd.
ParseOptions default_parse_options();

/// Parse the Turtle subset used by policy documents: @prefix/@base, `a`,
/// `;` predicate lists, `,` object lists, `[...]` blank nodes, `(...)`
/// collections, IRIs, prefixed names, string and integer literals,
/// comments. Collections are stored as a List term plus their
/// rdf:first/rdf:rest triple encoding. Throws ParseError with line/column.
Graph parse_turtle(std::string_view text,
                   const ParseOptions& opts = default_parse_options());

struct SerializeOptions {
  std::map<std::string, std::string> prefixes;
};

SerializeOptions default_serialize_options();

/// Deterministic serialization: sorted prefixes, subjects, predicates and
/// objects; list spines folded back into `(...)`. Output re-parses to a
/// graph isomorphic to the input.
std::string serialize_turtle(
    const Graph& g, const SerializeOptions& opts = default_serialize_options());

}  // namespace dtou::rdf
