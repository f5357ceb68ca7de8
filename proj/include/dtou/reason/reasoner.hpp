// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dtou/reason/knowledge_base.hpp"
#include "dtou/reason/reports.hpp"

namespace dtou::reason {

struct ReasonerOptions {
  /// Iterate rule families and pairings in reverse; results must not change
  /// (negation is evaluated only against fully materialized facts).
  bool reversed_order = false;
};

/// Unsatisfied requirements, unmatched expectations and prohibited uses for
/// the usage context. Empty result means the usage is permitted (uncovered
/// inputs are reported on the knowledge base, not here).
std::vector<Conflict> check_conformance(const KnowledgeBase& kb,
                                        const ReasonerOptions& opts = {});

/// Obligations whose activation condition matches the direct context, with
/// argument attribute values resolved. Downstreams do not activate
/// obligations.
std::vector<ActivatedObligation> check_obligations(
    const KnowledgeBase& kb, const ReasonerOptions& opts = {});

/// Derived data policy per output port: attributes copied/edited/dropped by
/// refinement, semantic terms kept only when every binding (and obligation
/// argument) survives, references remapped through forward links. Output
/// node ids are deterministic functions of (origin node, output port).
std::vector<DerivedPolicy> derive_policies(const KnowledgeBase& kb,
                                           const ReasonerOptions& opts = {});

enum class ObligationAudience { User, Process, Unspecified };

/// User-facing vs process-facing labeling via the UserObligation /
/// ProcessObligation vocabulary classes and the subClassOf table.
ObligationAudience obligation_audience(const KnowledgeBase& kb,
                                       const std::string& obligation_class);

const char* to_string(ObligationAudience a);

/// Binds a derived policy to the IRI of the stored output data.
void bind_derived_policy(DerivedPolicy& derived, const std::string& uri);

/// Materializes the transitive closure of rdfs:subClassOf into a copy of g.
/// Cycles produce warnings (members become mutually reachable).
rdf::Graph rdfs_closure(const rdf::Graph& g,
                        std::vector<std::string>* warnings = nullptr);

}  // namespace dtou::reason
