// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtou/model/policy.hpp"

namespace dtou::reason {

enum class ConflictKind {
  UnsatisfiedRequirement,
  UnmatchedExpectation,
  ProhibitedUse,
};

const char* to_string(ConflictKind kind);

struct Conflict {
  ConflictKind kind;
  std::string input_port;
  // Tag conflicts:
  std::string category;
  std::string descriptor;
  // Prohibited use:
  std::optional<std::string> user;
  std::optional<std::string> app_name;
  std::optional<std::string> purpose;

  std::string key() const;
  bool operator==(const Conflict& o) const { return key() == o.key(); }
  bool operator<(const Conflict& o) const { return key() < o.key(); }
};

struct ResolvedArg {
  std::string name;
  std::string cls;
  rdf::Term value;
};

struct ActivatedObligation {
  std::string obligation_class;
  std::vector<ResolvedArg> args;
  std::string input_port;

  std::string key() const;
  bool operator==(const ActivatedObligation& o) const {
    return key() == o.key();
  }
  bool operator<(const ActivatedObligation& o) const { return key() < o.key(); }
};

/// Mapping from an input attribute to its surviving output attribute at one
/// output port. At most one link per (origin, port).
struct ForwardLink {
  rdf::Term origin;
  std::string port;
  rdf::Term ref;
};

struct DerivedPolicy {
  std::string output_port;
  model::DataPolicySet policy;  // uri assigned later by the caller
  std::vector<ForwardLink> links;
};

}  // namespace dtou::reason
