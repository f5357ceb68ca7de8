// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dtou/rdf/turtle.hpp"

namespace dtou::rdf {

namespace {

bool pn_local_safe(const std::string& local) {
  if (local.empty()) return true;  // a bare prefix like `:` is valid
  if (local.back() == '.') return false;
  for (unsigned char c : local) {
    if (!(std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80))
      return false;
  }
  return true;
}

class Writer {
 public:
  Writer(const Graph& g, const SerializeOptions& opts) : g_(g), opts_(opts) {}

  std::string run() {
    triple_index_.reserve(g_.triples().size());
    for (std::size_t i = 0; i < g_.triples().size(); ++i)
      triple_index_.emplace(g_.triples()[i], i);
    collect_list_spines();
    std::ostringstream out;
    for (const auto& [prefix, ns] : opts_.prefixes)
      out << "@prefix " << prefix << ": <" << ns << "> .\n";
    if (!opts_.prefixes.empty()) out << "\n";

    // Group by subject, skipping folded list-spine triples.
    std::map<Term, std::map<Term, std::set<Term>>> by_subject;
    for (std::size_t i = 0; i < g_.triples().size(); ++i) {
      if (spine_triples_.count(i)) continue;
      const Triple& t = g_.triples()[i];
      by_subject[t.subject][t.predicate].insert(t.object);
    }
    for (const auto& [subject, preds] : by_subject) {
      out << render(subject);
      bool first_pred = true;
      // rdf:type first, as `a`.
      std::vector<std::pair<Term, const std::set<Term>*>> ordered;
      auto type_it = preds.find(rdf_type());
      if (type_it != preds.end()) ordered.push_back({type_it->first, &type_it->second});
      for (const auto& [pred, objs] : preds) {
        if (pred == rdf_type()) continue;
        ordered.push_back({pred, &objs});
      }
      for (const auto& [pred, objs] : ordered) {
        out << (first_pred ? " " : " ;\n    ");
        first_pred = false;
        out << (pred == rdf_type() ? std::string("a") : render(pred));
        bool first_obj = true;
        for (const auto& obj : *objs) {
          out << (first_obj ? " " : ", ");
          first_obj = false;
          out << render(obj);
        }
      }
      out << " .\n";
    }
    return out.str();
  }

 private:
  // Mark rdf:first/rdf:rest triples that belong to a list spine reachable
  // from some List object's head label, so they are not written twice.
  void collect_list_spines() {
    for (const auto& t : g_.triples()) {
      if (t.object.is_list()) mark_spine(t.object);
      if (t.subject.is_list()) mark_spine(t.subject);
    }
  }

  void mark_spine(const Term& list) {
    for (const auto& item : list.items())
      if (item.is_list()) mark_spine(item);
    if (list.head_label().empty()) return;
    Term node = Term::blank(list.head_label());
    std::size_t item_idx = 0;
    while (item_idx < list.items().size()) {
      auto firsts = g_.match(node, rdf_first(), list.items()[item_idx]);
      auto rests = g_.match(node, rdf_rest(), std::nullopt);
      if (firsts.size() != 1 || rests.size() != 1) return;  // incomplete spine
      std::size_t fi = index_of(firsts.front());
      std::size_t ri = index_of(rests.front());
      spine_triples_.insert(fi);
      spine_triples_.insert(ri);
      node = rests.front().object;
      ++item_idx;
    }
  }

  std::size_t index_of(const Triple& t) const {
    auto it = triple_index_.find(t);
    return it != triple_index_.end() ? it->second : g_.triples().size();
  }

  std::string render(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Iri: {
        // Longest-namespace prefix compression.
        const std::string& iri = t.text();
        std::string best_prefix;
        std::size_t best_len = 0;
        for (const auto& [prefix, ns] : opts_.prefixes) {
          if (ns.size() > best_len && iri.size() >= ns.size() &&
              iri.compare(0, ns.size(), ns) == 0 &&
              pn_local_safe(iri.substr(ns.size()))) {
            best_prefix = prefix;
            best_len = ns.size();
          }
        }
        if (best_len > 0)
          return best_prefix + ":" + iri.substr(best_len);
        return "<" + iri + ">";
      }
      case TermKind::Blank:
        return "_:" + t.text();
      case TermKind::Literal: {
        std::string s = "\"" + escape_literal(t.text()) + "\"";
        if (!t.datatype().empty())
          s += "^^" + render(Term::iri(t.datatype()));
        return s;
      }
      case TermKind::List: {
        std::string s = "(";
        bool first = true;
        for (const auto& item : t.items()) {
          if (!first) s += " ";
          first = false;
          s += render(item);
        }
        return s + ")";
      }
    }
    return "";
  }

  const Graph& g_;
  const SerializeOptions& opts_;
  std::unordered_set<std::size_t> spine_triples_;
  std::unordered_map<Triple, std::size_t, TripleHash> triple_index_;
};

}  // namespace

SerializeOptions default_serialize_options() {
  SerializeOptions opts;
  opts.prefixes[""] = policy_namespace();
  opts.prefixes["rdf"] = kRdfNs;
  opts.prefixes["rdfs"] = kRdfsNs;
  opts.prefixes["xsd"] = kXsdNs;
  return opts;
}

std::string serialize_turtle(const Graph& g, const SerializeOptions& opts) {
  return Writer(g, opts).run();
}

}  // namespace dtou::rdf
