// SPDX-License-Identifier: Apache-2.0
#include "dtou/rdf/term.hpp"

namespace dtou::rdf {

namespace {
const std::vector<Term> kEmptyItems;

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace

Term Term::iri(std::string value) {
  Term t;
  t.kind_ = TermKind::Iri;
  t.text_ = std::move(value);
  return t;
}

Term Term::blank(std::string label) {
  Term t;
  t.kind_ = TermKind::Blank;
  t.text_ = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype) {
  Term t;
  t.kind_ = TermKind::Literal;
  t.text_ = std::move(lexical);
  t.datatype_ = std::move(datatype);
  return t;
}

Term Term::list(std::vector<Term> items, std::string head_label) {
  Term t;
  t.kind_ = TermKind::List;
  t.items_ = std::make_shared<const std::vector<Term>>(std::move(items));
  t.head_label_ = std::move(head_label);
  return t;
}

const std::vector<Term>& Term::items() const {
  return items_ ? *items_ : kEmptyItems;
}

bool Term::operator==(const Term& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case TermKind::Iri:
    case TermKind::Blank:
      return text_ == other.text_;
    case TermKind::Literal:
      return text_ == other.text_ && datatype_ == other.datatype_;
    case TermKind::List:
      return items() == other.items();
  }
  return false;
}

int Term::compare(const Term& other) const {
  if (kind_ != other.kind_)
    return static_cast<int>(kind_) < static_cast<int>(other.kind_) ? -1 : 1;
  switch (kind_) {
    case TermKind::Iri:
    case TermKind::Blank:
      return text_.compare(other.text_);
    case TermKind::Literal: {
      if (int c = text_.compare(other.text_)) return c;
      return datatype_.compare(other.datatype_);
    }
    case TermKind::List: {
      const auto& a = items();
      const auto& b = other.items();
      for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (int c = a[i].compare(b[i])) return c;
      }
      if (a.size() == b.size()) return 0;
      return a.size() < b.size() ? -1 : 1;
    }
  }
  return 0;
}

std::size_t Term::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 1099511628211ULL;
  if (kind_ == TermKind::List) {
    for (const auto& item : items()) h = hash_combine(h, item.hash());
    return h;
  }
  h = hash_combine(h, std::hash<std::string>{}(text_));
  if (kind_ == TermKind::Literal)
    h = hash_combine(h, std::hash<std::string>{}(datatype_));
  return h;
}

std::string escape_literal(const std::string& lexical) {
  std::string out;
  out.reserve(lexical.size());
  for (char c : lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Term::to_string() const {
  switch (kind_) {
    case TermKind::Iri:
      return "<" + text_ + ">";
    case TermKind::Blank:
      return "_:" + text_;
    case TermKind::Literal: {
      std::string s = "\"" + escape_literal(text_) + "\"";
      if (!datatype_.empty()) s += "^^<" + datatype_ + ">";
      return s;
    }
    case TermKind::List: {
      std::string s = "(";
      bool first = true;
      for (const auto& item : items()) {
        if (!first) s += " ";
        s += item.to_string();
        first = false;
      }
      return s + ")";
    }
  }
  return "";
}

int Triple::compare(const Triple& other) const {
  if (int c = subject.compare(other.subject)) return c;
  if (int c = predicate.compare(other.predicate)) return c;
  return object.compare(other.object);
}

std::string Triple::to_string() const {
  return subject.to_string() + " " + predicate.to_string() + " " +
         object.to_string() + " .";
}

std::size_t TripleHash::operator()(const Triple& t) const {
  std::size_t h = t.subject.hash();
  h = hash_combine(h, t.predicate.hash());
  h = hash_combine(h, t.object.hash());
  return h;
}

}  // namespace dtou::rdf
