// SPDX-License-Identifier: Apache-2.0
#include "dtou/model/extract.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "dtou/errors.hpp"
#include "dtou/model/vocab.hpp"

namespace dtou::model {

using rdf::Graph;
using rdf::Term;

namespace {

std::string node_str(const Term& t) { return t.to_string(); }

[[noreturn]] void structural(const Term& node, const std::string& field,
                             const std::string& what) {
  throw ModelError("node " + node_str(node) + ": " + what, node_str(node),
                   field);
}

/// Exactly one object for (node, prop); otherwise a structural error.
Term require_one(const Graph& g, const Term& node, const Term& prop,
                 const std::string& field) {
  auto objs = g.objects(node, prop);
  if (objs.empty()) structural(node, field, "missing :" + field);
  if (objs.size() > 1)
    structural(node, field, "more than one :" + field);
  return objs.front();
}

std::string require_iri(const Graph& g, const Term& node, const Term& prop,
                        const std::string& field) {
  Term t = require_one(g, node, prop, field);
  if (!t.is_iri())
    structural(node, field, ":" + field + " must be an IRI");
  return t.text();
}

std::optional<std::string> optional_iri(const Graph& g, const Term& node,
                                        const Term& prop,
                                        const std::string& field) {
  auto objs = g.objects(node, prop);
  if (objs.empty()) return std::nullopt;
  if (objs.size() > 1)
    structural(node, field, "more than one :" + field);
  if (!objs.front().is_iri())
    structural(node, field, ":" + field + " must be an IRI");
  return objs.front().text();
}

/// Attribute values and filter values: Iri (including :nil) or Literal.
void check_value_term(const Term& node, const Term& v,
                      const std::string& field) {
  if (!v.is_iri() && !v.is_literal())
    structural(node, field, ":" + field + " must be an IRI or literal");
}

ActivationCondition extract_condition(const Graph& g, const Term& owner) {
  Term cond = require_one(g, owner, vocab::activation_condition(),
                          "activation_condition");
  if (!cond.is_iri() && !cond.is_blank())
    structural(owner, "activation_condition",
               ":activation_condition must be a node");
  ActivationCondition out;
  out.user = optional_iri(g, cond, vocab::user(), "user");
  out.app_name = optional_iri(g, cond, vocab::app_name(), "app_name");
  out.purpose = optional_iri(g, cond, vocab::purpose(), "purpose");
  if (out.empty())
    structural(cond, "activation_condition",
               "activation condition has no fields");
  return out;
}

std::vector<Term> extract_bindings(const Graph& g, const Term& owner) {
  std::vector<Term> out = g.objects(owner, vocab::validity_binding());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Attribute extract_attribute(const Graph& g, const Term& node) {
  Attribute a;
  a.id = node;
  a.name = require_iri(g, node, vocab::name(), "name");
  a.cls = require_iri(g, node, vocab::clazz(), "class");
  a.value = require_one(g, node, vocab::value(), "value");
  check_value_term(node, a.value, "value");
  return a;
}

std::string tag_category_from_type(const Graph& g, const Term& node,
                                   const std::string& listing_category) {
  auto types = g.objects(node, rdf::rdf_type());
  std::string found;
  for (const auto& t : types) {
    if (!t.is_iri()) continue;
    const std::string& iri = t.text();
    if (iri == vocab::security_category() ||
        iri == vocab::integrity_category() ||
        iri == vocab::purpose_category()) {
      if (!listing_category.empty() && iri != listing_category)
        structural(node, "type",
                   "tag type disagrees with its policy listing");
      found = iri;
    } else if (listing_category.empty() && found.empty()) {
      found = iri;  // open extension category
    }
  }
  if (!listing_category.empty()) return listing_category;
  if (found.empty())
    structural(node, "type", "tag listed under :tagging needs a type");
  return found;
}

Tag extract_tag(const Graph& g, const Term& node,
                const std::string& listing_category) {
  Tag t;
  t.id = node;
  t.category = tag_category_from_type(g, node, listing_category);
  t.attribute_ref = require_one(g, node, vocab::attribute_ref(),
                                "attribute_ref");
  t.validity_bindings = extract_bindings(g, node);
  return t;
}

Prohibition extract_prohibition(const Graph& g, const Term& node) {
  Prohibition p;
  p.id = node;
  Term mode = require_one(g, node, vocab::mode(), "mode");
  if (!(mode == vocab::use_mode()))
    structural(node, "mode", "unsupported use mode " + mode.to_string());
  p.mode = mode.text();
  p.condition = extract_condition(g, node);
  p.validity_bindings = extract_bindings(g, node);
  return p;
}

Obligation extract_obligation(const Graph& g, const Term& node) {
  Obligation o;
  o.id = node;
  o.obligation_class =
      require_iri(g, node, vocab::obligation_class(), "obligation_class");
  auto args = g.objects(node, vocab::args());
  if (args.size() > 1) structural(node, "args", "more than one :args");
  if (!args.empty()) {
    if (!args.front().is_list())
      structural(node, "args", ":args must be an ordered collection");
    o.args = args.front().items();
  }
  o.condition = extract_condition(g, node);
  o.validity_bindings = extract_bindings(g, node);
  return o;
}

PolicyTerms extract_policy_terms(const Graph& g, const Term& pol) {
  PolicyTerms terms;
  for (const auto& a : g.objects(pol, vocab::attribute()))
    terms.attributes.push_back(extract_attribute(g, a));

  auto add_tags = [&](const Term& prop, const std::string& category) {
    for (const auto& t : g.objects(pol, prop))
      terms.tags.push_back(extract_tag(g, t, category));
  };
  add_tags(vocab::security(), vocab::security_category());
  add_tags(vocab::integrity(), vocab::integrity_category());
  add_tags(vocab::purpose(), vocab::purpose_category());
  add_tags(vocab::tagging(), "");

  for (const auto& p : g.objects(pol, vocab::prohibition()))
    terms.prohibitions.push_back(extract_prohibition(g, p));
  for (const auto& o : g.objects(pol, vocab::obligation()))
    terms.obligations.push_back(extract_obligation(g, o));

  // Cross-reference validation: every reference resolves to an attribute of
  // this policy.
  std::set<Term> attr_ids;
  for (const auto& a : terms.attributes) attr_ids.insert(a.id);
  auto check_ref = [&](const Term& owner, const Term& ref,
                       const std::string& field) {
    if (!attr_ids.count(ref))
      structural(owner, field,
                 ":" + field + " " + ref.to_string() +
                     " does not resolve to an attribute of this policy");
  };
  for (const auto& t : terms.tags) {
    check_ref(t.id, t.attribute_ref, "attribute_ref");
    for (const auto& b : t.validity_bindings)
      check_ref(t.id, b, "validity_binding");
  }
  for (const auto& p : terms.prohibitions)
    for (const auto& b : p.validity_bindings)
      check_ref(p.id, b, "validity_binding");
  for (const auto& o : terms.obligations) {
    for (const auto& a : o.args) check_ref(o.id, a, "args");
    for (const auto& b : o.validity_bindings)
      check_ref(o.id, b, "validity_binding");
  }
  return terms;
}

std::string port_name_of(const Graph& g, const Term& owner, const Term& prop,
                         const std::string& field) {
  Term port = require_one(g, owner, prop, field);
  if (port.is_literal()) return port.text();  // tolerated shorthand
  if (!port.is_iri() && !port.is_blank())
    structural(owner, field, ":" + field + " must be a node");
  Term name = require_one(g, port, vocab::name(), "name");
  if (!name.is_literal())
    structural(port, "name", "port :name must be a string literal");
  return name.text();
}

Filter extract_filter(const Graph& g, const Term& refinement) {
  Term f = require_one(g, refinement, vocab::filter(), "filter");
  if (!f.is_iri() && !f.is_blank())
    structural(refinement, "filter", ":filter must be a node");
  Filter out;
  auto inputs = g.objects(f, vocab::input());
  if (inputs.size() > 1) structural(f, "input", "more than one :input");
  if (!inputs.empty()) {
    if (inputs.front().is_literal()) {
      out.input_port = inputs.front().text();
    } else {
      Term name = require_one(g, inputs.front(), vocab::name(), "name");
      if (!name.is_literal())
        structural(inputs.front(), "name",
                   "filter :input port :name must be a string literal");
      out.input_port = name.text();
    }
  }
  out.name = optional_iri(g, f, vocab::name(), "name");
  out.cls = optional_iri(g, f, vocab::clazz(), "class");
  auto values = g.objects(f, vocab::value());
  if (values.size() > 1) structural(f, "value", "more than one :value");
  if (!values.empty()) {
    check_value_term(f, values.front(), "value");
    out.value = values.front();
  }
  if (!out.input_port && !out.name && !out.cls && !out.value)
    structural(f, "filter", "filter has no fields");
  return out;
}

Refinement extract_refinement(const Graph& g, const Term& node) {
  Refinement r;
  r.id = node;
  bool is_delete = g.contains({node, rdf::rdf_type(), vocab::delete_type()});
  bool is_edit = g.contains({node, rdf::rdf_type(), vocab::edit_type()});
  if (is_delete == is_edit)
    structural(node, "type", "refinement must be typed :Delete or :Edit");
  r.kind = is_delete ? RefinementKind::Delete : RefinementKind::Edit;
  r.filter = extract_filter(g, node);
  auto new_classes = g.objects(node, vocab::new_class());
  auto new_values = g.objects(node, vocab::new_value());
  if (is_delete) {
    if (!new_classes.empty() || !new_values.empty())
      structural(node, "new_class",
                 "a :Delete refinement carries no :new_class or :new_value");
  } else {
    r.new_class = require_iri(g, node, vocab::new_class(), "new_class");
    Term nv = require_one(g, node, vocab::new_value(), "new_value");
    check_value_term(node, nv, "new_value");
    r.new_value = nv;
  }
  return r;
}

InputSpec extract_input(const Graph& g, const Term& node) {
  InputSpec in;
  in.id = node;
  in.port_name = port_name_of(g, node, vocab::port(), "port");
  in.data_uri = require_iri(g, node, vocab::data(), "data");
  auto collect_iris = [&](const Term& prop, const std::string& field) {
    std::vector<std::string> out;
    for (const auto& t : g.objects(node, prop)) {
      if (!t.is_iri()) structural(node, field, ":" + field + " must be an IRI");
      if (std::find(out.begin(), out.end(), t.text()) == out.end())
        out.push_back(t.text());
    }
    return out;
  };
  in.provides = collect_iris(vocab::security(), "security");
  in.expects = collect_iris(vocab::integrity(), "integrity");
  in.purposes = collect_iris(vocab::purpose(), "purpose");
  for (const auto& d : g.objects(node, vocab::downstream())) {
    if (!d.is_iri() && !d.is_blank())
      structural(node, "downstream", ":downstream must be a node");
    Downstream ds;
    ds.app_name = require_iri(g, d, vocab::app_name(), "app_name");
    ds.user = optional_iri(g, d, vocab::user(), "user");
    ds.purpose = optional_iri(g, d, vocab::purpose(), "purpose");
    in.downstreams.push_back(std::move(ds));
  }
  return in;
}

OutputSpec extract_output(const Graph& g, const Term& node) {
  OutputSpec out;
  out.id = node;
  out.port_name = port_name_of(g, node, vocab::port(), "port");
  for (const auto& f : g.objects(node, vocab::from())) {
    std::string port;
    if (f.is_literal()) {
      port = f.text();
    } else {
      Term name = require_one(g, f, vocab::name(), "name");
      if (!name.is_literal())
        structural(f, "name", ":from port :name must be a string literal");
      port = name.text();
    }
    if (std::find(out.from_ports.begin(), out.from_ports.end(), port) ==
        out.from_ports.end())
      out.from_ports.push_back(port);
  }
  for (const auto& r : g.objects(node, vocab::refinement()))
    out.refinements.push_back(extract_refinement(g, r));
  return out;
}

}  // namespace

std::vector<DataPolicySet> extract_data_policies(const Graph& g) {
  std::vector<DataPolicySet> out;
  for (const auto& data_node : g.subjects_of_type(vocab::data_type())) {
    DataPolicySet dps;
    dps.data_node = data_node;
    dps.uri = require_iri(g, data_node, vocab::uri(), "uri");
    dps.policy_node = require_one(g, data_node, vocab::policy(), "policy");
    dps.policy = extract_policy_terms(g, dps.policy_node);
    out.push_back(std::move(dps));
  }
  return out;
}

AppPolicy extract_app_policy(const Graph& g) {
  auto nodes = g.subjects_of_type(vocab::app_policy_type());
  if (nodes.empty())
    throw ModelError("no :AppPolicy node in document");
  if (nodes.size() > 1)
    throw ModelError("more than one :AppPolicy node in document");
  AppPolicy app;
  app.id = nodes.front();
  app.name = require_iri(g, app.id, vocab::name(), "name");
  for (const auto& i : g.objects(app.id, vocab::input_spec()))
    app.inputs.push_back(extract_input(g, i));
  for (const auto& o : g.objects(app.id, vocab::output_spec()))
    app.outputs.push_back(extract_output(g, o));

  std::unordered_set<std::string> ports;
  for (const auto& in : app.inputs) {
    if (!ports.insert(in.port_name).second)
      structural(in.id, "port", "duplicate input port \"" + in.port_name + "\"");
  }
  std::unordered_set<std::string> out_ports;
  for (const auto& out : app.outputs) {
    if (!out_ports.insert(out.port_name).second)
      structural(out.id, "port",
                 "duplicate output port \"" + out.port_name + "\"");
    for (const auto& fp : out.from_ports) {
      if (!ports.count(fp))
        structural(out.id, "from",
                   ":from references unknown input port \"" + fp + "\"");
    }
  }
  return app;
}

UsageContext extract_usage_context(const Graph& g) {
  auto nodes = g.subjects_of_type(vocab::usage_context_type());
  if (nodes.empty())
    throw ModelError("no :UsageContext node in document");
  if (nodes.size() > 1)
    throw ModelError("more than one :UsageContext node in document");
  UsageContext ctx;
  ctx.id = nodes.front();
  ctx.user = require_iri(g, ctx.id, vocab::user(), "user");
  Term time = require_one(g, ctx.id, vocab::time(), "time");
  if (!time.is_literal())
    structural(ctx.id, "time", ":time must be a literal");
  ctx.time = time.text();
  Term app = require_one(g, ctx.id, vocab::app(), "app");
  if (!app.is_iri() && !app.is_blank())
    structural(ctx.id, "app", ":app must be a node");
  // The :app node is an AppInfo holding the policy reference; accept a
  // direct policy reference as well.
  auto pol = g.objects(app, vocab::policy());
  if (pol.empty()) {
    ctx.app_policy_ref = app;
  } else if (pol.size() == 1) {
    ctx.app_policy_ref = pol.front();
  } else {
    structural(app, "policy", "more than one :policy on app reference");
  }
  return ctx;
}

const Attribute* PolicyTerms::find_attribute(const Term& id) const {
  for (const auto& a : attributes)
    if (a.id == id) return &a;
  return nullptr;
}

const std::string& DataPolicySet::tag_descriptor(const Tag& tag) const {
  const Attribute* a = policy.find_attribute(tag.attribute_ref);
  static const std::string empty;
  return a ? a->cls : empty;
}

const InputSpec* AppPolicy::find_input(const std::string& port_name) const {
  for (const auto& in : inputs)
    if (in.port_name == port_name) return &in;
  return nullptr;
}

const OutputSpec* AppPolicy::find_output(const std::string& port_name) const {
  for (const auto& out : outputs)
    if (out.port_name == port_name) return &out;
  return nullptr;
}

}  // namespace dtou::model
