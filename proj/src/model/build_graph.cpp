// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <sstream>

#include "dtou/model/extract.hpp"
#include "dtou/model/vocab.hpp"

namespace dtou::model {

using rdf::Graph;
using rdf::Term;

namespace {

Term condition_node(Graph& g, const ActivationCondition& cond,
                    const std::string& label) {
  Term node = Term::blank(label);
  if (cond.user) g.add(node, vocab::user(), Term::iri(*cond.user));
  if (cond.app_name) g.add(node, vocab::app_name(), Term::iri(*cond.app_name));
  if (cond.purpose) g.add(node, vocab::purpose(), Term::iri(*cond.purpose));
  return node;
}

std::string canonical_value(const Term& v) { return v.to_string(); }

std::string canonical_condition(const ActivationCondition& c) {
  std::string s = "u=";
  s += c.user ? *c.user : "*";
  s += ";n=";
  s += c.app_name ? *c.app_name : "*";
  s += ";p=";
  s += c.purpose ? *c.purpose : "*";
  return s;
}

std::string attr_content(const PolicyTerms& terms, const Term& id) {
  const Attribute* a = terms.find_attribute(id);
  if (!a) return "?" + id.to_string();
  return a->name + "|" + a->cls + "|" + canonical_value(a->value);
}

std::string bindings_content(const PolicyTerms& terms,
                             const std::vector<Term>& bindings) {
  std::vector<std::string> parts;
  for (const auto& b : bindings) parts.push_back(attr_content(terms, b));
  std::sort(parts.begin(), parts.end());
  std::string s = "{";
  for (const auto& p : parts) s += p + ",";
  return s + "}";
}

}  // namespace

Graph policy_to_graph(const DataPolicySet& p) {
  Graph g;
  g.add(p.data_node, rdf::rdf_type(), vocab::data_type());
  g.add(p.data_node, vocab::uri(), Term::iri(p.uri));
  g.add(p.data_node, vocab::policy(), p.policy_node);
  g.add(p.policy_node, rdf::rdf_type(), vocab::policy_type());

  for (const auto& a : p.policy.attributes) {
    g.add(p.policy_node, vocab::attribute(), a.id);
    g.add(a.id, rdf::rdf_type(), vocab::attribute_type());
    g.add(a.id, vocab::name(), Term::iri(a.name));
    g.add(a.id, vocab::clazz(), Term::iri(a.cls));
    g.add(a.id, vocab::value(), a.value);
  }

  for (const auto& t : p.policy.tags) {
    Term listing = vocab::tagging();
    if (t.category == vocab::security_category()) listing = vocab::security();
    else if (t.category == vocab::integrity_category())
      listing = vocab::integrity();
    else if (t.category == vocab::purpose_category())
      listing = vocab::purpose();
    g.add(p.policy_node, listing, t.id);
    g.add(t.id, rdf::rdf_type(), Term::iri(t.category));
    g.add(t.id, vocab::attribute_ref(), t.attribute_ref);
    for (const auto& b : t.validity_bindings)
      g.add(t.id, vocab::validity_binding(), b);
  }

  int seq = 0;
  for (const auto& pr : p.policy.prohibitions) {
    g.add(p.policy_node, vocab::prohibition(), pr.id);
    g.add(pr.id, rdf::rdf_type(), vocab::prohibition_type());
    g.add(pr.id, vocab::mode(), vocab::use_mode());
    g.add(pr.id, vocab::activation_condition(),
          condition_node(g, pr.condition, "cond_p" + std::to_string(seq++)));
    for (const auto& b : pr.validity_bindings)
      g.add(pr.id, vocab::validity_binding(), b);
  }

  seq = 0;
  for (const auto& ob : p.policy.obligations) {
    g.add(p.policy_node, vocab::obligation(), ob.id);
    g.add(ob.id, rdf::rdf_type(), vocab::obligation_type());
    g.add(ob.id, vocab::obligation_class(), Term::iri(ob.obligation_class));
    std::string tag = std::to_string(seq++);
    if (ob.args.empty()) {
      g.add(ob.id, vocab::args(), Term::list({}, ""));
    } else {
      std::vector<Term> spine;
      for (std::size_t i = 0; i < ob.args.size(); ++i)
        spine.push_back(Term::blank("args" + tag + "_" + std::to_string(i)));
      for (std::size_t i = 0; i < ob.args.size(); ++i) {
        g.add(spine[i], rdf::rdf_first(), ob.args[i]);
        g.add(spine[i], rdf::rdf_rest(),
              i + 1 < ob.args.size() ? spine[i + 1] : rdf::rdf_nil());
      }
      g.add(ob.id, vocab::args(),
            Term::list(ob.args, spine.front().text()));
    }
    g.add(ob.id, vocab::activation_condition(),
          condition_node(g, ob.condition, "cond_o" + tag));
    for (const auto& b : ob.validity_bindings)
      g.add(ob.id, vocab::validity_binding(), b);
  }
  return g;
}

std::vector<std::string> canonical_terms(const DataPolicySet& p) {
  std::vector<std::string> out;
  const PolicyTerms& terms = p.policy;
  for (const auto& a : terms.attributes)
    out.push_back("A|" + a.name + "|" + a.cls + "|" + canonical_value(a.value));
  for (const auto& t : terms.tags)
    out.push_back("T|" + t.category + "|" + attr_content(terms, t.attribute_ref) +
                  "|" + bindings_content(terms, t.validity_bindings));
  for (const auto& pr : terms.prohibitions)
    out.push_back("P|" + pr.mode + "|" + canonical_condition(pr.condition) +
                  "|" + bindings_content(terms, pr.validity_bindings));
  for (const auto& ob : terms.obligations) {
    std::string args = "[";
    for (const auto& a : ob.args) args += attr_content(terms, a) + ",";
    args += "]";
    out.push_back("O|" + ob.obligation_class + "|" + args + "|" +
                  canonical_condition(ob.condition) + "|" +
                  bindings_content(terms, ob.validity_bindings));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool structurally_equal(const DataPolicySet& a, const DataPolicySet& b) {
  return a.uri == b.uri && canonical_terms(a) == canonical_terms(b);
}

}  // namespace dtou::model
