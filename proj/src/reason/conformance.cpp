// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <unordered_set>

#include "dtou/model/vocab.hpp"
#include "dtou/reason/reasoner.hpp"

namespace dtou::reason {

using model::DataPolicySet;
using model::InputSpec;

namespace {

template <typename T>
std::vector<T> ordered(std::vector<T> v, bool reversed) {
  if (reversed) std::reverse(v.begin(), v.end());
  return v;
}

/// "provided descriptor satisfies a required descriptor that is its
/// superclass" when the closure is enabled; exact equality otherwise.
bool descriptor_satisfies(const KnowledgeBase& kb, const std::string& provided,
                          const std::string& required) {
  if (provided == required) return true;
  return kb.use_closure && kb.subclass.is_subclass(provided, required);
}

void requirement_conflicts(const KnowledgeBase& kb, const Pairing& pairing,
                           std::vector<Conflict>& out) {
  const InputSpec& input = kb.input(pairing);
  const DataPolicySet& dps = kb.policy(pairing);
  for (const auto& tag : dps.policy.tags) {
    if (tag.category != vocab::security_category()) continue;
    const std::string& required = dps.tag_descriptor(tag);
    bool satisfied = false;
    for (const auto& provided : input.provides) {
      if (descriptor_satisfies(kb, provided, required)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) {
      Conflict c;
      c.kind = ConflictKind::UnsatisfiedRequirement;
      c.input_port = input.port_name;
      c.category = tag.category;
      c.descriptor = required;
      out.push_back(std::move(c));
    }
  }
}

void expectation_conflicts(const KnowledgeBase& kb, const Pairing& pairing,
                           std::vector<Conflict>& out) {
  const InputSpec& input = kb.input(pairing);
  const DataPolicySet& dps = kb.policy(pairing);
  // Integrity expectations: satisfied by a data-side integrity tag whose
  // descriptor is the expected one (or a subclass of it).
  for (const auto& expected : input.expects) {
    bool matched = false;
    for (const auto& tag : dps.policy.tags) {
      if (tag.category != vocab::integrity_category()) continue;
      if (descriptor_satisfies(kb, dps.tag_descriptor(tag), expected)) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      Conflict c;
      c.kind = ConflictKind::UnmatchedExpectation;
      c.input_port = input.port_name;
      c.category = vocab::integrity_category();
      c.descriptor = expected;
      out.push_back(std::move(c));
    }
  }
  // Purpose expectations: an intended purpose is permitted when some purpose
  // tag covers it (the intended purpose may be a subclass of the permitted
  // one under the closure).
  for (const auto& intended : input.purposes) {
    bool permitted = false;
    for (const auto& tag : dps.policy.tags) {
      if (tag.category != vocab::purpose_category()) continue;
      if (descriptor_satisfies(kb, intended, dps.tag_descriptor(tag))) {
        permitted = true;
        break;
      }
    }
    if (!permitted) {
      Conflict c;
      c.kind = ConflictKind::UnmatchedExpectation;
      c.input_port = input.port_name;
      c.category = vocab::purpose_category();
      c.descriptor = intended;
      out.push_back(std::move(c));
    }
  }
}

void prohibition_conflicts(const KnowledgeBase& kb, const Pairing& pairing,
                           std::vector<Conflict>& out) {
  const InputSpec& input = kb.input(pairing);
  const DataPolicySet& dps = kb.policy(pairing);
  for (const auto& pro : dps.policy.prohibitions) {
    const auto& cond = pro.condition;
    // Direct context: usage user, app name, the input's declared purposes.
    bool direct_ok =
        (!cond.user || *cond.user == kb.context.user) &&
        (!cond.app_name || *cond.app_name == kb.app.name);
    if (direct_ok) {
      auto emit = [&](const std::optional<std::string>& purpose) {
        Conflict c;
        c.kind = ConflictKind::ProhibitedUse;
        c.input_port = input.port_name;
        c.user = kb.context.user;
        c.app_name = kb.app.name;
        c.purpose = purpose;
        out.push_back(std::move(c));
      };
      if (cond.purpose) {
        if (std::find(input.purposes.begin(), input.purposes.end(),
                      *cond.purpose) != input.purposes.end())
          emit(cond.purpose);
      } else if (input.purposes.empty()) {
        emit(std::nullopt);
      } else {
        for (const auto& p : input.purposes) emit(p);
      }
    }
    // Downstream context: app name and purpose declared for the downstream.
    for (const auto& ds : input.downstreams) {
      bool app_ok = !cond.app_name || *cond.app_name == ds.app_name;
      bool purpose_ok = !cond.purpose || (ds.purpose && *ds.purpose == *cond.purpose);
      if (!app_ok || !purpose_ok) continue;
      Conflict c;
      c.kind = ConflictKind::ProhibitedUse;
      c.input_port = input.port_name;
      c.user = cond.user;
      c.app_name = ds.app_name;
      c.purpose = cond.purpose ? cond.purpose : ds.purpose;
      out.push_back(std::move(c));
    }
  }
}

}  // namespace

std::vector<Conflict> check_conformance(const KnowledgeBase& kb,
                                        const ReasonerOptions& opts) {
  std::vector<Conflict> out;
  using Rule = void (*)(const KnowledgeBase&, const Pairing&,
                        std::vector<Conflict>&);
  std::vector<Rule> rules{requirement_conflicts, expectation_conflicts,
                          prohibition_conflicts};
  if (opts.reversed_order) std::reverse(rules.begin(), rules.end());
  for (Rule rule : rules) {
    for (const auto& pairing : ordered(kb.pairings, opts.reversed_order))
      rule(kb, pairing, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ActivatedObligation> check_obligations(const KnowledgeBase& kb,
                                                   const ReasonerOptions& opts) {
  std::vector<ActivatedObligation> out;
  for (const auto& pairing : ordered(kb.pairings, opts.reversed_order)) {
    const InputSpec& input = kb.input(pairing);
    const DataPolicySet& dps = kb.policy(pairing);
    for (const auto& ob : dps.policy.obligations) {
      const auto& cond = ob.condition;
      bool match =
          (!cond.user || *cond.user == kb.context.user) &&
          (!cond.app_name || *cond.app_name == kb.app.name) &&
          (!cond.purpose ||
           std::find(input.purposes.begin(), input.purposes.end(),
                     *cond.purpose) != input.purposes.end());
      if (!match) continue;
      ActivatedObligation act;
      act.obligation_class = ob.obligation_class;
      act.input_port = input.port_name;
      for (const auto& arg : ob.args) {
        const model::Attribute* a = dps.policy.find_attribute(arg);
        // Extraction guarantees resolution; guard stays for hand-built KBs.
        if (!a)
          throw ModelError("obligation argument " + arg.to_string() +
                               " does not resolve to an attribute",
                           ob.id.to_string(), "args");
        act.args.push_back({a->name, a->cls, a->value});
      }
      out.push_back(std::move(act));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ObligationAudience obligation_audience(const KnowledgeBase& kb,
                                       const std::string& obligation_class) {
  if (kb.subclass.is_subclass(obligation_class,
                              vocab::user_obligation_type().text()))
    return ObligationAudience::User;
  if (kb.subclass.is_subclass(obligation_class,
                              vocab::process_obligation_type().text()))
    return ObligationAudience::Process;
  return ObligationAudience::Unspecified;
}

const char* to_string(ObligationAudience a) {
  switch (a) {
    case ObligationAudience::User: return "user";
    case ObligationAudience::Process: return "process";
    case ObligationAudience::Unspecified: return "unspecified";
  }
  return "unspecified";
}

const char* to_string(ConflictKind kind) {
  switch (kind) {
    case ConflictKind::UnsatisfiedRequirement: return "unsatisfied-requirement";
    case ConflictKind::UnmatchedExpectation: return "unmatched-expectation";
    case ConflictKind::ProhibitedUse: return "prohibited-use";
  }
  return "?";
}

std::string Conflict::key() const {
  std::string k = std::string(to_string(kind)) + "|" + input_port + "|" +
                  category + "|" + descriptor + "|";
  k += (user ? *user : "*");
  k += "|";
  k += (app_name ? *app_name : "*");
  k += "|";
  k += (purpose ? *purpose : "*");
  return k;
}

std::string ActivatedObligation::key() const {
  std::string k = obligation_class + "|" + input_port + "|";
  for (const auto& a : args)
    k += a.name + "," + a.cls + "," + a.value.to_string() + ";";
  return k;
}

}  // namespace dtou::reason
