// SPDX-License-Identifier: Apache-2.0
#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "dtou/errors.hpp"
#include "dtou/rdf/turtle.hpp"

namespace dtou::rdf {

namespace {

std::string g_policy_ns = "https://dtou.example/ns#";

bool is_pn_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' ||
         c >= 0x80;  // UTF-8 continuation/lead bytes pass through
}

bool has_scheme(const std::string& iri) {
  // scheme := ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0])))
    return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.')
      return false;
  }
  return false;
}

std::string resolve_iri(const std::string& ref, const std::string& base) {
  if (ref.empty()) return base;
  if (ref[0] == '#') {
    auto hash = base.find('#');
    return base.substr(0, hash) + ref;
  }
  if (ref.substr(0, 2) == "//") {
    auto colon = base.find(':');
    return base.substr(0, colon + 1) + ref;
  }
  if (ref[0] == '/') {
    auto scheme_end = base.find("://");
    if (scheme_end == std::string::npos) return base + ref;
    auto authority_end = base.find('/', scheme_end + 3);
    return base.substr(0, authority_end) + ref;
  }
  auto slash = base.rfind('/');
  if (slash == std::string::npos) return base + ref;
  return base.substr(0, slash + 1) + ref;
}

void append_utf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts)
      : text_(text), base_(opts.base) {
    for (const auto& [p, ns] : opts.prefixes) prefixes_[p] = ns;
  }

  Graph run() {
    skip_ws();
    while (!at_end()) {
      if (try_directive()) {
        skip_ws();
        continue;
      }
      parse_triples();
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col());
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      line_start_ = pos_;
    }
    return c;
  }
  int col() const { return static_cast<int>(pos_ - line_start_) + 1; }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  bool try_keyword(const std::string& kw) {
    // Case-insensitive match for SPARQL-style PREFIX/BASE; exact for @forms.
    if (pos_ + kw.size() > text_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) !=
          std::tolower(static_cast<unsigned char>(kw[i])))
        return false;
    }
    char after = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
    if (is_pn_char(static_cast<unsigned char>(after))) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) advance();
    return true;
  }

  bool try_directive() {
    skip_ws();
    if (at_end()) return false;
    if (peek() == '@') {
      if (try_keyword("@prefix")) {
        parse_prefix_directive(true);
        return true;
      }
      if (try_keyword("@base")) {
        parse_base_directive(true);
        return true;
      }
      fail("unknown directive");
    }
    // SPARQL-style PREFIX / BASE (no trailing dot). `prefix:local` with no
    // whitespace is a prefixed name, not a directive.
    std::size_t save_pos = pos_;
    int save_line = line_;
    std::size_t save_ls = line_start_;
    auto restore = [&] {
      pos_ = save_pos;
      line_ = save_line;
      line_start_ = save_ls;
    };
    if (try_keyword("prefix")) {
      if (peek() != ':') {
        skip_ws();
        parse_prefix_directive(false);
        return true;
      }
      restore();
      return false;
    }
    if (try_keyword("base")) {
      if (peek() != ':') {
        skip_ws();
        if (peek() == '<') {
          parse_base_directive(false);
          return true;
        }
      }
      restore();
      return false;
    }
    return false;
  }

  void parse_prefix_directive(bool dotted) {
    skip_ws();
    std::string prefix;
    while (!at_end() && is_pn_char(static_cast<unsigned char>(peek())))
      prefix += advance();
    expect(':');
    skip_ws();
    std::string iri = parse_iriref();
    prefixes_[prefix] = iri;
    if (dotted) expect('.');
  }

  void parse_base_directive(bool dotted) {
    skip_ws();
    base_ = parse_iriref();
    if (dotted) expect('.');
  }

  std::string parse_iriref() {
    if (peek() != '<') fail("expected IRI");
    advance();
    std::string iri;
    while (!at_end() && peek() != '>') {
      char c = advance();
      if (c == '\n') fail("unterminated IRI");
      iri += c;
    }
    if (at_end()) fail("unterminated IRI");
    advance();  // '>'
    if (!has_scheme(iri)) {
      if (!base_) fail("relative IRI <" + iri + "> with no base");
      iri = resolve_iri(iri, *base_);
    }
    return iri;
  }

  Term parse_prefixed_name() {
    std::string prefix;
    while (!at_end() && is_pn_char(static_cast<unsigned char>(peek())))
      prefix += advance();
    if (peek() != ':') fail("expected ':' in prefixed name");
    advance();
    std::string local;
    while (!at_end()) {
      unsigned char c = static_cast<unsigned char>(peek());
      if (is_pn_char(c)) {
        local += advance();
      } else if (c == '.' &&
                 is_pn_char(static_cast<unsigned char>(peek(1)))) {
        // Dots are allowed inside local names but never terminal.
        local += advance();
      } else {
        break;
      }
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end())
      fail("undefined prefix '" + prefix + ":'");
    return Term::iri(it->second + local);
  }

  Term parse_literal() {
    advance();  // opening quote
    std::string lex;
    while (true) {
      if (at_end()) fail("unterminated string literal");
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail("unterminated escape");
        char e = advance();
        switch (e) {
          case 't': lex += '\t'; break;
          case 'n': lex += '\n'; break;
          case 'r': lex += '\r'; break;
          case 'b': lex += '\b'; break;
          case 'f': lex += '\f'; break;
          case '"': lex += '"'; break;
          case '\'': lex += '\''; break;
          case '\\': lex += '\\'; break;
          case 'u': lex_unicode(lex, 4); break;
          case 'U': lex_unicode(lex, 8); break;
          default: fail(std::string("invalid escape '\\") + e + "'");
        }
      } else {
        lex += c;
      }
    }
    if (peek() == '@') fail("language tags are not supported");
    std::string datatype;
    if (peek() == '^' && peek(1) == '^') {
      advance();
      advance();
      skip_ws();
      Term dt = peek() == '<' ? Term::iri(parse_iriref())
                              : parse_prefixed_name();
      datatype = dt.text();
    }
    return Term::literal(std::move(lex), std::move(datatype));
  }

  void lex_unicode(std::string& out, int digits) {
    uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end()) fail("unterminated unicode escape");
      char c = advance();
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= static_cast<uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') cp |= static_cast<uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') cp |= static_cast<uint32_t>(c - 'A' + 10);
      else fail("invalid unicode escape");
    }
    append_utf8(out, cp);
  }

  Term parse_integer() {
    std::string lex;
    if (peek() == '+' || peek() == '-') lex += advance();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected digits in numeric literal");
    while (std::isdigit(static_cast<unsigned char>(peek()))) lex += advance();
    // A '.' directly followed by a digit starts a decimal; a bare '.' is the
    // statement terminator.
    if ((peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) ||
        peek() == 'e' || peek() == 'E')
      fail("only integer numeric literals are supported");
    return Term::literal(std::move(lex), std::string(kXsdNs) + "integer");
  }

  Term fresh_blank() { return Term::blank("b" + std::to_string(blank_seq_++)); }

  Term parse_blank_property_list() {
    advance();  // '['
    Term node = fresh_blank();
    skip_ws();
    if (peek() == ']') {
      advance();
      return node;
    }
    parse_predicate_object_list(node);
    expect(']');
    return node;
  }

  Term parse_collection() {
    advance();  // '('
    std::vector<Term> items;
    std::vector<Term> spine;
    skip_ws();
    while (peek() != ')') {
      if (at_end()) fail("unterminated collection");
      items.push_back(parse_object());
      spine.push_back(fresh_blank());
      skip_ws();
    }
    advance();  // ')'
    if (items.empty()) return Term::list({}, "");
    for (std::size_t i = 0; i < items.size(); ++i) {
      graph_.add(spine[i], rdf_first(), items[i]);
      graph_.add(spine[i], rdf_rest(),
                 i + 1 < items.size() ? spine[i + 1] : rdf_nil());
    }
    return Term::list(std::move(items), spine.front().text());
  }

  Term parse_object() {
    skip_ws();
    char c = peek();
    if (c == '<') return Term::iri(parse_iriref());
    if (c == '"') return parse_literal();
    if (c == '[') return parse_blank_property_list();
    if (c == '(') return parse_collection();
    if (c == '_' && peek(1) == ':') return parse_blank_label();
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
      return parse_integer();
    if (c == ':' || is_pn_char(static_cast<unsigned char>(c))) {
      // `a` is only a keyword in the predicate position.
      return parse_prefixed_name();
    }
    fail("expected object");
  }

  Term parse_blank_label() {
    advance();  // '_'
    advance();  // ':'
    std::string label;
    while (!at_end() && (is_pn_char(static_cast<unsigned char>(peek())) ||
                         (peek() == '.' &&
                          is_pn_char(static_cast<unsigned char>(peek(1))))))
      label += advance();
    if (label.empty()) fail("empty blank node label");
    return Term::blank("u_" + label);  // distinct from generated b<N> labels
  }

  Term parse_subject() {
    skip_ws();
    char c = peek();
    if (c == '<') return Term::iri(parse_iriref());
    if (c == '[') return parse_blank_property_list();
    if (c == '_' && peek(1) == ':') return parse_blank_label();
    if (c == '(') return parse_collection();
    if (c == ':' || is_pn_char(static_cast<unsigned char>(c)))
      return parse_prefixed_name();
    fail("expected subject");
  }

  Term parse_predicate() {
    skip_ws();
    if (peek() == 'a' && !is_pn_char(static_cast<unsigned char>(peek(1))) &&
        peek(1) != ':')
      {
        advance();
        return rdf_type();
      }
    if (peek() == '<') return Term::iri(parse_iriref());
    if (peek() == ':' || is_pn_char(static_cast<unsigned char>(peek())))
      return parse_prefixed_name();
    fail("expected predicate");
  }

  void parse_object_list(const Term& subject, const Term& predicate) {
    while (true) {
      Term obj = parse_object();
      graph_.add(subject, predicate, obj);
      skip_ws();
      if (peek() == ',') {
        advance();
        continue;
      }
      break;
    }
  }

  void parse_predicate_object_list(const Term& subject) {
    while (true) {
      Term pred = parse_predicate();
      if (!pred.is_iri()) fail("predicate must be an IRI");
      parse_object_list(subject, pred);
      skip_ws();
      if (peek() == ';') {
        advance();
        skip_ws();
        // Trailing ';' before '.' or ']' is legal Turtle.
        if (peek() == '.' || peek() == ']' || peek() == ';') {
          while (peek() == ';') {
            advance();
            skip_ws();
          }
          if (peek() == '.' || peek() == ']') break;
        }
        continue;
      }
      break;
    }
  }

  void parse_triples() {
    skip_ws();
    bool bracketed = peek() == '[';
    Term subject = parse_subject();
    skip_ws();
    // A bare `[ ... ] .` statement is allowed; properties already recorded.
    if (bracketed && peek() == '.') {
      advance();
      return;
    }
    parse_predicate_object_list(subject);
    expect('.');
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
  std::optional<std::string> base_;
  std::map<std::string, std::string> prefixes_;
  Graph graph_;
  int blank_seq_ = 0;
};

}  // namespace

const std::string& policy_namespace() { return g_policy_ns; }

void set_policy_namespace(const std::string& ns) { g_policy_ns = ns; }

ParseOptions default_parse_options() {
  ParseOptions opts;
  opts.prefixes[""] = policy_namespace();
  opts.prefixes["rdf"] = kRdfNs;
  opts.prefixes["rdfs"] = kRdfsNs;
  opts.prefixes["xsd"] = kXsdNs;
  return opts;
}

Graph parse_turtle(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).run();
}

}  // namespace dtou::rdf
