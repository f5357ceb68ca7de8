// SPDX-License-Identifier: Apache-2.0
#include "dtou/rdf/graph.hpp"

#include <string>

namespace dtou::rdf {

const char kRdfNs[] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
const char kRdfsNs[] = "http://www.w3.org/2000/01/rdf-schema#";
const char kXsdNs[] = "http://www.w3.org/2001/XMLSchema#";

Term rdf_type() { return Term::iri(std::string(kRdfNs) + "type"); }
Term rdf_first() { return Term::iri(std::string(kRdfNs) + "first"); }
Term rdf_rest() { return Term::iri(std::string(kRdfNs) + "rest"); }
Term rdf_nil() { return Term::iri(std::string(kRdfNs) + "nil"); }
Term rdfs_subclass_of() {
  return Term::iri(std::string(kRdfsNs) + "subClassOf");
}

bool Graph::insert(Triple t) {
  SPKey key{t.subject, t.predicate};
  auto it = by_sp_.find(key);
  if (it != by_sp_.end()) {
    for (uint32_t idx : it->second) {
      if (triples_[idx].object == t.object) return false;
    }
  }
  uint32_t idx = static_cast<uint32_t>(triples_.size());
  by_s_[t.subject].push_back(idx);
  by_p_[t.predicate].push_back(idx);
  by_sp_[std::move(key)].push_back(idx);
  triples_.push_back(std::move(t));
  return true;
}

bool Graph::contains(const Triple& t) const {
  auto it = by_sp_.find(SPKey{t.subject, t.predicate});
  if (it == by_sp_.end()) return false;
  for (uint32_t idx : it->second) {
    if (triples_[idx].object == t.object) return true;
  }
  return false;
}

std::vector<Triple> Graph::match(const std::optional<Term>& s,
                                 const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  auto emit = [&](const Triple& t) {
    if (s && !(t.subject == *s)) return;
    if (p && !(t.predicate == *p)) return;
    if (o && !(t.object == *o)) return;
    out.push_back(t);
  };
  if (s && p) {
    auto it = by_sp_.find(SPKey{*s, *p});
    if (it != by_sp_.end())
      for (uint32_t idx : it->second) emit(triples_[idx]);
  } else if (s) {
    auto it = by_s_.find(*s);
    if (it != by_s_.end())
      for (uint32_t idx : it->second) emit(triples_[idx]);
  } else if (p) {
    auto it = by_p_.find(*p);
    if (it != by_p_.end())
      for (uint32_t idx : it->second) emit(triples_[idx]);
  } else {
    for (const auto& t : triples_) emit(t);
  }
  return out;
}

std::vector<Term> Graph::objects(const Term& s, const Term& p) const {
  std::vector<Term> out;
  auto it = by_sp_.find(SPKey{s, p});
  if (it != by_sp_.end())
    for (uint32_t idx : it->second) out.push_back(triples_[idx].object);
  return out;
}

std::optional<Term> Graph::object(const Term& s, const Term& p,
                                  bool* ambiguous) const {
  if (ambiguous) *ambiguous = false;
  auto objs = objects(s, p);
  if (objs.empty()) return std::nullopt;
  if (objs.size() > 1) {
    if (ambiguous) *ambiguous = true;
    return std::nullopt;
  }
  return objs.front();
}

std::vector<Term> Graph::subjects_of_type(const Term& type) const {
  std::vector<Term> out;
  for (const auto& t : match(std::nullopt, rdf_type(), type))
    out.push_back(t.subject);
  return out;
}

namespace {
Term rename_blanks(const Term& t, const std::string& prefix) {
  switch (t.kind()) {
    case TermKind::Blank:
      return Term::blank(prefix + t.text());
    case TermKind::List: {
      std::vector<Term> items;
      items.reserve(t.items().size());
      for (const auto& item : t.items())
        items.push_back(rename_blanks(item, prefix));
      std::string head = t.head_label();
      if (!head.empty()) head = prefix + head;
      return Term::list(std::move(items), std::move(head));
    }
    default:
      return t;
  }
}
}  // namespace

void Graph::merge(const Graph& other) {
  std::string prefix = "m" + std::to_string(merge_counter_++) + "_";
  for (const auto& t : other.triples_) {
    insert({rename_blanks(t.subject, prefix), t.predicate,
            rename_blanks(t.object, prefix)});
  }
}

}  // namespace dtou::rdf
