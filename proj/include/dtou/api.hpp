// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtou/reason/reasoner.hpp"

namespace dtou::api {

/// Knowledge base from document strings. When no context document is given,
/// a usage context is synthesized from `user` / `time` and the app policy
/// node.
reason::KnowledgeBase load_kb(const std::string& app_doc,
                              const std::vector<std::string>& data_docs,
                              const std::optional<std::string>& context_doc,
                              const std::optional<std::string>& user,
                              const std::optional<std::string>& time,
                              bool rdfs_closure = false);

nlohmann::json term_json(const rdf::Term& t);

nlohmann::json conformance_report(const reason::KnowledgeBase& kb,
                                  const std::vector<reason::Conflict>& conflicts,
                                  bool strict);

nlohmann::json obligations_report(
    const reason::KnowledgeBase& kb,
    const std::vector<reason::ActivatedObligation>& obligations);

/// Canonical Turtle for a derived policy bound to its target uri.
std::string derived_policy_document(const reason::DerivedPolicy& derived);

}  // namespace dtou::api
