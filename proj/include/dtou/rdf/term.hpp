// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dtou::rdf {

enum class TermKind { Iri, Blank, Literal, List };

/// One RDF term. Iri values are absolute after prefix resolution. Lists come
/// from Turtle collection syntax; a list remembers the blank label of its
/// rdf:first/rdf:rest spine head so the serializer can fold the spine back
/// into `(...)` form. Spine labels are ignored by equality and hashing.
class Term {
 public:
  Term() : kind_(TermKind::Iri) {}

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = "");
  static Term list(std::vector<Term> items, std::string head_label = "");

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_blank() const { return kind_ == TermKind::Blank; }
  bool is_literal() const { return kind_ == TermKind::Literal; }
  bool is_list() const { return kind_ == TermKind::List; }

  /// Iri value, blank label, or literal lexical form.
  const std::string& text() const { return text_; }
  /// Literal datatype Iri; empty for plain literals and non-literals.
  const std::string& datatype() const { return datatype_; }
  const std::vector<Term>& items() const;
  const std::string& head_label() const { return head_label_; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  /// Total order: Iri < Blank < Literal < List, then field-wise.
  int compare(const Term& other) const;
  bool operator<(const Term& other) const { return compare(other) < 0; }

  std::size_t hash() const;

  /// Canonical N-Triples-style rendering, used for sorting, node-id minting
  /// and diagnostics.
  std::string to_string() const;

 private:
  TermKind kind_;
  std::string text_;
  std::string datatype_;
  std::shared_ptr<const std::vector<Term>> items_;
  std::string head_label_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  bool operator==(const Triple& other) const {
    return subject == other.subject && predicate == other.predicate &&
           object == other.object;
  }
  int compare(const Triple& other) const;
  bool operator<(const Triple& other) const { return compare(other) < 0; }
  std::string to_string() const;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const;
};

std::string escape_literal(const std::string& lexical);

}  // namespace dtou::rdf
