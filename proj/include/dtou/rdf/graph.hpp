// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dtou/rdf/term.hpp"

namespace dtou::rdf {

/// A set of triples with subject / predicate / (subject,predicate) indexes.
/// Insertion is idempotent and order-preserving; document order matters to
/// the policy model (attribute listings, refinement precedence).
///
/// Graphs are built single-writer and treated as immutable by the reasoner,
/// so a constructed Graph is safe to share across concurrent requests.
class Graph {
 public:
  bool insert(Triple t);
  bool add(Term s, Term p, Term o) {
    return insert({std::move(s), std::move(p), std::move(o)});
  }

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const std::vector<Triple>& triples() const { return triples_; }

  /// All triples matching the given components; nullopt is a wildcard.
  std::vector<Triple> match(const std::optional<Term>& s,
                            const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  bool contains(const Triple& t) const;

  /// Objects of (s, p, ?) in insertion order.
  std::vector<Term> objects(const Term& s, const Term& p) const;
  /// The single object of (s, p, ?), or nullopt when absent or ambiguous
  /// (`ambiguous` reports multiplicity when provided).
  std::optional<Term> object(const Term& s, const Term& p,
                             bool* ambiguous = nullptr) const;
  /// Subjects with rdf:type `type`, in insertion order.
  std::vector<Term> subjects_of_type(const Term& type) const;

  /// Union with blank-node renaming: `other`'s blank labels get a fresh
  /// per-merge prefix so two documents never collide in one knowledge base.
  void merge(const Graph& other);

 private:
  struct SPKey {
    Term s, p;
    bool operator==(const SPKey& k) const { return s == k.s && p == k.p; }
  };
  struct SPKeyHash {
    std::size_t operator()(const SPKey& k) const {
      return k.s.hash() * 31 + k.p.hash();
    }
  };

  std::vector<Triple> triples_;
  std::unordered_map<Term, std::vector<uint32_t>, TermHash> by_s_;
  std::unordered_map<Term, std::vector<uint32_t>, TermHash> by_p_;
  std::unordered_map<SPKey, std::vector<uint32_t>, SPKeyHash> by_sp_;
  int merge_counter_ = 0;
};

Term rdf_type();
Term rdf_first();
Term rdf_rest();
Term rdf_nil();
Term rdfs_subclass_of();

extern const char kRdfNs[];
extern const char kRdfsNs[];
extern const char kXsdNs[];

}  // namespace dtou::rdf
