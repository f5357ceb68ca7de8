// SPDX-License-Identifier: Apache-2.0
#include "dtou/reason/knowledge_base.hpp"

#include <functional>

#include "dtou/errors.hpp"
#include "dtou/model/extract.hpp"

namespace dtou::reason {

void SubclassTable::add(const std::string& sub, const std::string& super) {
  if (sub == super) return;
  edges_[sub].insert(super);
}

void SubclassTable::add_from(const rdf::Graph& g) {
  for (const auto& t :
       g.match(std::nullopt, rdf::rdfs_subclass_of(), std::nullopt)) {
    if (t.subject.is_iri() && t.object.is_iri())
      add(t.subject.text(), t.object.text());
  }
}

void SubclassTable::close() {
  closed_.clear();
  warnings_.clear();
  for (const auto& [sub, _] : edges_) {
    std::set<std::string>& reach = closed_[sub];
    std::vector<std::string> stack{sub};
    while (!stack.empty()) {
      std::string cur = stack.back();
      stack.pop_back();
      auto it = edges_.find(cur);
      if (it == edges_.end()) continue;
      for (const auto& super : it->second) {
        if (reach.insert(super).second) stack.push_back(super);
      }
    }
    if (reach.count(sub))
      warnings_.push_back("subClassOf cycle through <" + sub +
                          ">; members treated as equivalent");
  }
}

bool SubclassTable::is_subclass(const std::string& sub,
                                const std::string& super) const {
  if (sub == super) return true;
  auto it = closed_.find(sub);
  return it != closed_.end() && it->second.count(super) > 0;
}

KnowledgeBase assemble_models(model::UsageContext context, model::AppPolicy app,
                              std::vector<model::DataPolicySet> data_policies,
                              SubclassTable subclass,
                              const AssembleOptions& opts) {
  KnowledgeBase kb;
  kb.context = std::move(context);
  kb.app = std::move(app);
  kb.data_policies = std::move(data_policies);
  kb.subclass = std::move(subclass);
  kb.subclass.close();
  kb.use_closure = opts.rdfs_closure;
  for (const auto& w : kb.subclass.cycle_warnings()) kb.warnings.push_back(w);

  // Stratum one: materialize pairings by data-URI equality before any
  // negation-dependent rule runs.
  std::map<std::string, int> uri_counts;
  for (const auto& dps : kb.data_policies) uri_counts[dps.uri]++;
  for (const auto& [uri, count] : uri_counts) {
    if (count > 1)
      kb.warnings.push_back("multiple data policies for <" + uri + ">");
  }
  for (std::size_t i = 0; i < kb.app.inputs.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < kb.data_policies.size(); ++j) {
      if (kb.app.inputs[i].data_uri == kb.data_policies[j].uri) {
        kb.pairings.push_back({i, j});
        covered = true;
      }
    }
    if (!covered) kb.uncovered_inputs.push_back(kb.app.inputs[i].port_name);
  }
  return kb;
}

KnowledgeBase assemble(const rdf::Graph& context_graph,
                       const rdf::Graph& app_graph,
                       const std::vector<rdf::Graph>& data_graphs,
                       const AssembleOptions& opts) {
  model::AppPolicy app = model::extract_app_policy(app_graph);
  model::UsageContext ctx = model::extract_usage_context(context_graph);
  if (ctx.app_policy_ref.is_iri() && !(ctx.app_policy_ref == app.id))
    throw ModelError("usage context references app policy " +
                     ctx.app_policy_ref.to_string() +
                     " but the provided app policy is " + app.id.to_string());

  std::vector<model::DataPolicySet> policies;
  SubclassTable subclass;
  subclass.add_from(context_graph);
  subclass.add_from(app_graph);
  for (const auto& g : data_graphs) {
    for (auto& dps : model::extract_data_policies(g))
      policies.push_back(std::move(dps));
    subclass.add_from(g);
  }
  return assemble_models(std::move(ctx), std::move(app), std::move(policies),
                         std::move(subclass), opts);
}

}  // namespace dtou::reason
