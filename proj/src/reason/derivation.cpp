// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>

#include "dtou/errors.hpp"
#include "dtou/model/vocab.hpp"
#include "dtou/reason/reasoner.hpp"

namespace dtou::reason {

using model::Attribute;
using model::DataPolicySet;
using model::Filter;
using model::InputSpec;
using model::OutputSpec;
using model::Refinement;
using model::RefinementKind;
using rdf::Term;

namespace {

std::string fnv1a_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
            c == '_' || c == '.')
               ? c
               : '-';
  return out;
}

Term mint(const std::string& port, const char* kind, const Term& origin) {
  return Term::iri("urn:dtou:derived:" + sanitize(port) + ":" + kind + ":" +
                   fnv1a_hex(origin.to_string()));
}

bool filter_matches(const Filter& f, const std::string& input_port,
                    const Attribute& a) {
  if (f.input_port && *f.input_port != input_port) return false;
  if (f.name && *f.name != a.name) return false;
  if (f.cls && *f.cls != a.cls) return false;
  if (f.value && !(*f.value == a.value)) return false;
  return true;
}

struct Row {
  const InputSpec* input;
  const DataPolicySet* policy;
  std::size_t policy_index;
};

struct Candidate {
  std::string name;
  std::string cls;
  Term value;
};

}  // namespace

std::vector<DerivedPolicy> derive_policies(const KnowledgeBase& kb,
                                           const ReasonerOptions& opts) {
  std::vector<DerivedPolicy> out;
  std::vector<const OutputSpec*> outputs;
  for (const auto& o : kb.app.outputs) outputs.push_back(&o);
  if (opts.reversed_order) std::reverse(outputs.begin(), outputs.end());

  for (const OutputSpec* output : outputs) {
    const std::string& port = output->port_name;

    // Canonical row order (from-port name, then policy index) keeps image
    // selection independent of iteration direction.
    std::vector<Row> rows;
    std::vector<std::string> from_ports = output->from_ports;
    std::sort(from_ports.begin(), from_ports.end());
    for (const auto& fp : from_ports) {
      const InputSpec* input = kb.app.find_input(fp);
      if (!input)
        throw DerivationError("output \"" + port +
                                  "\": unknown from input \"" + fp + "\"",
                              fp);
      bool any = false;
      for (const auto& pairing : kb.pairings) {
        if (kb.input(pairing).port_name != fp) continue;
        rows.push_back({input, &kb.policy(pairing), pairing.policy_index});
        any = true;
      }
      if (!any)
        throw DerivationError("output \"" + port + "\": from input \"" + fp +
                                  "\" is paired with no data policy",
                              fp);
    }

    // Stratum one: output attributes and forward links. Per row, the first
    // refinement whose filter matches (document order) decides an
    // attribute's fate; with no match the attribute is copied. When the
    // same origin node is reachable through several rows, the candidate
    // from the canonically first row wins, keeping one link per
    // (origin, port).
    std::map<Term, std::vector<Candidate>> candidates;
    std::vector<Term> origin_order;
    for (const Row& row : rows) {
      const std::string& in_port = row.input->port_name;
      for (const auto& a : row.policy->policy.attributes) {
        const Refinement* hit = nullptr;
        for (const auto& r : output->refinements) {
          if (filter_matches(r.filter, in_port, a)) {
            hit = &r;
            break;
          }
        }
        std::optional<Candidate> cand;
        if (!hit) {
          cand = Candidate{a.name, a.cls, a.value};
        } else if (hit->kind == RefinementKind::Edit) {
          cand = Candidate{a.name, hit->new_class, hit->new_value};
        }
        if (cand) {
          auto [it, fresh] = candidates.try_emplace(a.id);
          if (fresh || it->second.empty()) origin_order.push_back(a.id);
          it->second.push_back(std::move(*cand));
        }
      }
    }

    DerivedPolicy derived;
    derived.output_port = port;
    derived.policy.data_node =
        Term::iri("urn:dtou:derived:" + sanitize(port) + ":data");
    derived.policy.policy_node =
        Term::iri("urn:dtou:derived:" + sanitize(port) + ":policy");

    std::map<Term, Term> image;  // origin -> output attribute id
    for (const auto& origin : origin_order) {
      const Candidate& c = candidates[origin].front();
      Attribute a;
      a.id = mint(port, "attr", origin);
      a.name = c.name;
      a.cls = c.cls;
      a.value = c.value;
      derived.policy.policy.attributes.push_back(std::move(a));
      image[origin] = derived.policy.policy.attributes.back().id;
      derived.links.push_back(
          {origin, port, derived.policy.policy.attributes.back().id});
    }

    auto surviving = [&](const std::vector<Term>& refs) {
      for (const auto& r : refs)
        if (!image.count(r)) return false;
      return true;
    };
    auto remap = [&](const std::vector<Term>& refs) {
      std::vector<Term> out_refs;
      out_refs.reserve(refs.size());
      for (const auto& r : refs) out_refs.push_back(image.at(r));
      return out_refs;
    };

    // Stratum two: semantic terms survive only when every reference
    // resolves through a forward link; fields are replicated and references
    // remapped to the output attributes.
    std::set<Term> seen;
    for (const Row& row : rows) {
      for (const auto& tag : row.policy->policy.tags) {
        if (!seen.insert(tag.id).second) continue;
        if (!image.count(tag.attribute_ref) ||
            !surviving(tag.validity_bindings))
          continue;
        model::Tag t;
        t.id = mint(port, "tag", tag.id);
        t.category = tag.category;
        t.attribute_ref = image.at(tag.attribute_ref);
        t.validity_bindings = remap(tag.validity_bindings);
        derived.policy.policy.tags.push_back(std::move(t));
      }
      for (const auto& pro : row.policy->policy.prohibitions) {
        if (!seen.insert(pro.id).second) continue;
        if (!surviving(pro.validity_bindings)) continue;
        model::Prohibition p;
        p.id = mint(port, "pro", pro.id);
        p.mode = pro.mode;
        p.condition = pro.condition;
        p.validity_bindings = remap(pro.validity_bindings);
        derived.policy.policy.prohibitions.push_back(std::move(p));
      }
      for (const auto& ob : row.policy->policy.obligations) {
        if (!seen.insert(ob.id).second) continue;
        if (!surviving(ob.args) || !surviving(ob.validity_bindings)) continue;
        model::Obligation o;
        o.id = mint(port, "ob", ob.id);
        o.obligation_class = ob.obligation_class;
        o.args = remap(ob.args);  // member-for-member, order preserved
        o.condition = ob.condition;
        o.validity_bindings = remap(ob.validity_bindings);
        derived.policy.policy.obligations.push_back(std::move(o));
      }
    }
    out.push_back(std::move(derived));
  }
  if (opts.reversed_order) std::reverse(out.begin(), out.end());
  return out;
}

void bind_derived_policy(DerivedPolicy& derived, const std::string& uri) {
  derived.policy.uri = uri;
}

rdf::Graph rdfs_closure(const rdf::Graph& g,
                        std::vector<std::string>* warnings) {
  SubclassTable table;
  table.add_from(g);
  table.close();
  if (warnings)
    for (const auto& w : table.cycle_warnings()) warnings->push_back(w);
  rdf::Graph out = g;  // copies triples and indexes
  for (const auto& [sub, supers] : table.edges()) {
    // Materialize the full reachable set, not just direct edges.
    std::set<std::string> reach;
    std::vector<std::string> stack{sub};
    while (!stack.empty()) {
      std::string cur = stack.back();
      stack.pop_back();
      auto it = table.edges().find(cur);
      if (it == table.edges().end()) continue;
      for (const auto& s : it->second)
        if (reach.insert(s).second) stack.push_back(s);
    }
    for (const auto& super : reach) {
      if (super == sub) continue;
      out.add(Term::iri(sub), rdf::rdfs_subclass_of(), Term::iri(super));
    }
  }
  return out;
}

}  // namespace dtou::reason
