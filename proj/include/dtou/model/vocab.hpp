// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "dtou/rdf/term.hpp"
#include "dtou/rdf/turtle.hpp"

namespace dtou::vocab {

/// Policy vocabulary IRIs, resolved against the configurable policy
/// namespace (see rdf::set_policy_namespace).
inline std::string iri(const std::string& local) {
  return rdf::policy_namespace() + local;
}
inline rdf::Term term(const std::string& local) {
  return rdf::Term::iri(iri(local));
}

// Node types.
inline rdf::Term attribute_type() { return term("Attribute"); }
inline rdf::Term security_tag_type() { return term("SecurityTag"); }
inline rdf::Term integrity_tag_type() { return term("IntegrityTag"); }
inline rdf::Term purpose_tag_type() { return term("PurposeTag"); }
inline rdf::Term prohibition_type() { return term("Prohibition"); }
inline rdf::Term obligation_type() { return term("Obligation"); }
inline rdf::Term policy_type() { return term("Policy"); }
inline rdf::Term data_type() { return term("Data"); }
inline rdf::Term app_policy_type() { return term("AppPolicy"); }
inline rdf::Term input_spec_type() { return term("InputSpec"); }
inline rdf::Term output_spec_type() { return term("OutputSpec"); }
inline rdf::Term usage_context_type() { return term("UsageContext"); }
inline rdf::Term app_info_type() { return term("AppInfo"); }
inline rdf::Term delete_type() { return term("Delete"); }
inline rdf::Term edit_type() { return term("Edit"); }
inline rdf::Term user_obligation_type() { return term("UserObligation"); }
inline rdf::Term process_obligation_type() { return term("ProcessObligation"); }

// Properties.
inline rdf::Term name() { return term("name"); }
inline rdf::Term clazz() { return term("class"); }
inline rdf::Term value() { return term("value"); }
inline rdf::Term attribute_ref() { return term("attribute_ref"); }
inline rdf::Term validity_binding() { return term("validity_binding"); }
inline rdf::Term mode() { return term("mode"); }
inline rdf::Term activation_condition() { return term("activation_condition"); }
inline rdf::Term user() { return term("user"); }
inline rdf::Term app_name() { return term("app_name"); }
inline rdf::Term purpose() { return term("purpose"); }
inline rdf::Term obligation_class() { return term("obligation_class"); }
inline rdf::Term args() { return term("args"); }
inline rdf::Term uri() { return term("uri"); }
inline rdf::Term policy() { return term("policy"); }
inline rdf::Term attribute() { return term("attribute"); }
inline rdf::Term security() { return term("security"); }
inline rdf::Term integrity() { return term("integrity"); }
inline rdf::Term prohibition() { return term("prohibition"); }
inline rdf::Term obligation() { return term("obligation"); }
inline rdf::Term tagging() { return term("tagging"); }
inline rdf::Term input_spec() { return term("input_spec"); }
inline rdf::Term output_spec() { return term("output_spec"); }
inline rdf::Term data() { return term("data"); }
inline rdf::Term port() { return term("port"); }
inline rdf::Term downstream() { return term("downstream"); }
inline rdf::Term from() { return term("from"); }
inline rdf::Term refinement() { return term("refinement"); }
inline rdf::Term filter() { return term("filter"); }
inline rdf::Term input() { return term("input"); }
inline rdf::Term new_class() { return term("new_class"); }
inline rdf::Term new_value() { return term("new_value"); }
inline rdf::Term app() { return term("app"); }
inline rdf::Term time() { return term("time"); }

// Individuals.
inline rdf::Term use_mode() { return term("Use"); }
inline rdf::Term nil() { return term("nil"); }

// Tag category identifiers (the tag type IRIs double as category IRIs;
// unknown categories carry their own type IRI).
inline std::string security_category() { return iri("SecurityTag"); }
inline std::string integrity_category() { return iri("IntegrityTag"); }
inline std::string purpose_category() { return iri("PurposeTag"); }

}  // namespace dtou::vocab
