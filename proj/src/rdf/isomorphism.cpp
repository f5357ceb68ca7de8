// SPDX-License-Identifier: Apache-2.0
#include "dtou/rdf/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace dtou::rdf {

namespace {

void collect_blanks(const Term& t, std::set<std::string>& out) {
  if (t.is_blank()) {
    out.insert(t.text());
  } else if (t.is_list()) {
    for (const auto& item : t.items()) collect_blanks(item, out);
  }
}

bool has_blank(const Term& t) {
  if (t.is_blank()) return true;
  if (t.is_list())
    for (const auto& item : t.items())
      if (has_blank(item)) return true;
  return false;
}

// Render with blank labels replaced by a placeholder (or by a signature).
std::string skeleton(const Term& t,
                     const std::unordered_map<std::string, std::string>* sig) {
  switch (t.kind()) {
    case TermKind::Blank: {
      if (sig) {
        auto it = sig->find(t.text());
        if (it != sig->end()) return "_[" + it->second + "]";
      }
      return "_[]";
    }
    case TermKind::List: {
      std::string s = "(";
      for (const auto& item : t.items()) s += skeleton(item, sig) + " ";
      return s + ")";
    }
    default:
      return t.to_string();
  }
}

std::string triple_skeleton(
    const Triple& t, const std::unordered_map<std::string, std::string>* sig) {
  return skeleton(t.subject, sig) + "|" + skeleton(t.predicate, sig) + "|" +
         skeleton(t.object, sig);
}

Term substitute(const Term& t,
                const std::unordered_map<std::string, std::string>& mapping) {
  switch (t.kind()) {
    case TermKind::Blank: {
      auto it = mapping.find(t.text());
      return Term::blank(it != mapping.end() ? it->second : t.text());
    }
    case TermKind::List: {
      std::vector<Term> items;
      items.reserve(t.items().size());
      for (const auto& item : t.items())
        items.push_back(substitute(item, mapping));
      // Head labels are ignored by equality, so drop them here.
      return Term::list(std::move(items), "");
    }
    default:
      return t;
  }
}

std::multiset<std::string> canonical_triples(
    const Graph& g, const std::unordered_map<std::string, std::string>& map) {
  std::multiset<std::string> out;
  for (const auto& t : g.triples()) {
    Triple s{substitute(t.subject, map), t.predicate,
             substitute(t.object, map)};
    out.insert(s.to_string());
  }
  return out;
}

// Iterated neighborhood signatures for blank nodes.
std::unordered_map<std::string, std::string> blank_signatures(
    const Graph& g, const std::set<std::string>& blanks, int rounds) {
  std::unordered_map<std::string, std::string> sig;
  for (const auto& b : blanks) sig[b] = "0";
  for (int r = 0; r < rounds; ++r) {
    std::unordered_map<std::string, std::vector<std::string>> parts;
    for (const auto& t : g.triples()) {
      std::set<std::string> tb;
      collect_blanks(t.subject, tb);
      collect_blanks(t.object, tb);
      if (tb.empty()) continue;
      std::string shape = triple_skeleton(t, &sig);
      for (const auto& b : tb) parts[b].push_back(shape);
    }
    std::unordered_map<std::string, std::string> next;
    for (const auto& b : blanks) {
      auto it = parts.find(b);
      std::string acc = sig[b] + "/";
      if (it != parts.end()) {
        std::sort(it->second.begin(), it->second.end());
        for (const auto& p : it->second) acc += p + ";";
      }
      next[b] = std::to_string(std::hash<std::string>{}(acc));
    }
    sig = std::move(next);
  }
  return sig;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;

  std::set<std::string> blanks_a, blanks_b;
  std::multiset<std::string> ground_a, ground_b;
  for (const auto& t : a.triples()) {
    collect_blanks(t.subject, blanks_a);
    collect_blanks(t.object, blanks_a);
    if (!has_blank(t.subject) && !has_blank(t.object))
      ground_a.insert(t.to_string());
  }
  for (const auto& t : b.triples()) {
    collect_blanks(t.subject, blanks_b);
    collect_blanks(t.object, blanks_b);
    if (!has_blank(t.subject) && !has_blank(t.object))
      ground_b.insert(t.to_string());
  }
  if (blanks_a.size() != blanks_b.size()) return false;
  if (ground_a != ground_b) return false;
  if (blanks_a.empty()) return true;

  auto sig_a = blank_signatures(a, blanks_a, 3);
  auto sig_b = blank_signatures(b, blanks_b, 3);

  // Group by signature; group sizes must agree.
  std::map<std::string, std::vector<std::string>> groups_a, groups_b;
  for (const auto& x : blanks_a) groups_a[sig_a[x]].push_back(x);
  for (const auto& x : blanks_b) groups_b[sig_b[x]].push_back(x);
  if (groups_a.size() != groups_b.size()) return false;
  for (const auto& [s, xs] : groups_a) {
    auto it = groups_b.find(s);
    if (it == groups_b.end() || it->second.size() != xs.size()) return false;
  }

  // Backtracking assignment within signature groups; final check is a full
  // canonical comparison, so pruning only needs to be sound.
  std::vector<std::pair<std::string, std::vector<std::string>>> order;
  for (auto& [s, xs] : groups_a) order.push_back({s, xs});
  std::unordered_map<std::string, std::string> mapping;
  std::set<std::string> used;
  auto target = canonical_triples(b, {});

  std::function<bool(std::size_t, std::size_t)> assign =
      [&](std::size_t gi, std::size_t xi) -> bool {
    if (gi == order.size())
      return canonical_triples(a, mapping) == target;
    const auto& [s, xs] = order[gi];
    if (xi == xs.size()) return assign(gi + 1, 0);
    for (const auto& cand : groups_b[s]) {
      if (used.count(cand)) continue;
      mapping[xs[xi]] = cand;
      used.insert(cand);
      if (assign(gi, xi + 1)) return true;
      used.erase(cand);
      mapping.erase(xs[xi]);
    }
    return false;
  };
  return assign(0, 0);
}

}  // namespace dtou::rdf
