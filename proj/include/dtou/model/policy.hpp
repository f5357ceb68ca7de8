// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtou/rdf/term.hpp"

namespace dtou::model {

using rdf::Term;

/// Base-layer fact: a (name, class, value) tuple. The value is an Iri,
/// a Literal, or the :nil sentinel Iri.
struct Attribute {
  Term id;
  std::string name;
  std::string cls;
  Term value;
};

/// Semantic-layer tag. The descriptor of a tag is the class of its
/// referenced attribute; category is the tag type IRI (security, integrity,
/// purpose, or an open extension category).
struct Tag {
  Term id;
  std::string category;
  Term attribute_ref;
  std::vector<Term> validity_bindings;
};

/// Matcher against the usage context. Absent fields are wildcards; a
/// present field requires equality with the matching context value.
struct ActivationCondition {
  std::optional<std::string> user;
  std::optional<std::string> app_name;
  std::optional<std::string> purpose;

  bool empty() const { return !user && !app_name && !purpose; }
};

struct Prohibition {
  Term id;
  std::string mode;  // always the :Use mode
  ActivationCondition condition;
  std::vector<Term> validity_bindings;
};

struct Obligation {
  Term id;
  std::string obligation_class;
  std::vector<Term> args;  // ordered attribute references
  ActivationCondition condition;
  std::vector<Term> validity_bindings;
};

struct PolicyTerms {
  std::vector<Attribute> attributes;
  std::vector<Tag> tags;
  std::vector<Prohibition> prohibitions;
  std::vector<Obligation> obligations;

  const Attribute* find_attribute(const Term& id) const;
};

/// A policy paired with the IRI of the data it governs.
struct DataPolicySet {
  Term data_node;
  Term policy_node;
  std::string uri;
  PolicyTerms policy;

  /// Descriptor of a tag: the class of the referenced attribute.
  const std::string& tag_descriptor(const Tag& tag) const;
};

struct Downstream {
  std::string app_name;
  std::optional<std::string> user;
  std::optional<std::string> purpose;
};

struct InputSpec {
  Term id;
  std::string port_name;
  std::string data_uri;
  std::vector<std::string> provides;  // security descriptors complied with
  std::vector<std::string> expects;   // integrity descriptors expected
  std::vector<std::string> purposes;  // intended purposes
  std::vector<Downstream> downstreams;
};

struct Filter {
  std::optional<std::string> input_port;
  std::optional<std::string> name;
  std::optional<std::string> cls;
  std::optional<Term> value;
};

enum class RefinementKind { Delete, Edit };

struct Refinement {
  Term id;
  RefinementKind kind;
  Filter filter;
  // Edit only:
  std::string new_class;
  Term new_value;
};

struct OutputSpec {
  Term id;
  std::string port_name;
  std::vector<std::string> from_ports;
  std::vector<Refinement> refinements;  // document order; first match wins
};

struct AppPolicy {
  Term id;
  std::string name;
  std::vector<InputSpec> inputs;
  std::vector<OutputSpec> outputs;

  const InputSpec* find_input(const std::string& port_name) const;
  const OutputSpec* find_output(const std::string& port_name) const;
};

struct UsageContext {
  Term id;
  std::string user;
  Term app_policy_ref;
  std::string time;
};

/// Content-level equality up to node renaming (multiset comparison of
/// canonical term descriptions).
bool structurally_equal(const DataPolicySet& a, const DataPolicySet& b);

/// Canonical multiset description used by structurally_equal and by tests;
/// node identities are replaced by attribute content.
std::vector<std::string> canonical_terms(const DataPolicySet& p);

}  // namespace dtou::model
