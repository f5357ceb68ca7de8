// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dtou/model/policy.hpp"
#include "dtou/rdf/graph.hpp"

namespace dtou::reason {

/// Transitive subClassOf table over vocabulary IRIs.
class SubclassTable {
 public:
  void add(const std::string& sub, const std::string& super);
  void add_from(const rdf::Graph& g);
  /// Computes reachability; repeated calls are allowed after more adds.
  void close();
  /// Reflexive-transitive: true when sub == super or sub is a (transitive)
  /// subclass of super.
  bool is_subclass(const std::string& sub, const std::string& super) const;
  const std::vector<std::string>& cycle_warnings() const { return warnings_; }
  const std::map<std::string, std::set<std::string>>& edges() const {
    return edges_;
  }

 private:
  std::map<std::string, std::set<std::string>> edges_;   // direct
  std::map<std::string, std::set<std::string>> closed_;  // transitive
  std::vector<std::string> warnings_;
};

struct AssembleOptions {
  /// When set, tag-descriptor matching consults the subClassOf closure.
  bool rdfs_closure = false;
};

/// One (input, data policy) pairing, matched on the data URI.
struct Pairing {
  std::size_t input_index;
  std::size_t policy_index;
};

struct KnowledgeBase {
  model::UsageContext context;
  model::AppPolicy app;
  std::vector<model::DataPolicySet> data_policies;
  std::vector<Pairing> pairings;
  std::vector<std::string> uncovered_inputs;  // port names, in input order
  std::vector<std::string> warnings;
  SubclassTable subclass;
  bool use_closure = false;

  const model::InputSpec& input(const Pairing& p) const {
    return app.inputs[p.input_index];
  }
  const model::DataPolicySet& policy(const Pairing& p) const {
    return data_policies[p.policy_index];
  }
};

/// Parse-free assembly from already-extracted models; pairings are
/// materialized here (stratum one of the evaluation).
KnowledgeBase assemble_models(model::UsageContext context,
                              model::AppPolicy app,
                              std::vector<model::DataPolicySet> data_policies,
                              SubclassTable subclass = {},
                              const AssembleOptions& opts = {});

/// Graph-level assembly: extracts the context, the app policy and every data
/// policy, validates the context app reference, collects subClassOf triples,
/// and computes pairings.
KnowledgeBase assemble(const rdf::Graph& context_graph,
                       const rdf::Graph& app_graph,
                       const std::vector<rdf::Graph>& data_graphs,
                       const AssembleOptions& opts = {});

}  // namespace dtou::reason
