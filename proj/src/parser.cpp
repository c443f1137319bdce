#include "freedl/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace freedl {

namespace {

enum class Tok {
  Ident, Number, LBrace, RBrace, LParen, RParen, Dot, Colon,
  SubsumedBy,  // [=
  ImpliesOp,   // =>
  IffOp,       // <=>
  Arrow,       // ->
  SomeNeq,     // some!=
  SomeEq1,     // some=1
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { tokenize(); }
  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  void tokenize() {
    std::size_t i = 0, line = 1, col = 1;
    auto span_at = [&](std::size_t len) { return SourceSpan{line, col, len}; };
    auto advance = [&](std::size_t k) {
      for (std::size_t j = 0; j < k; ++j) {
        if (src_[i] == '\n') { ++line; col = 1; } else { ++col; }
        ++i;
      }
    };
    while (i < src_.size()) {
      char c = src_[i];
      if (c == '#') {
        while (i < src_.size() && src_[i] != '\n') advance(1);
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
        std::string word = src_.substr(i, j - i);
        // some!= and some=1 are single tokens when attached directly.
        if (word == "some" && src_.compare(j, 2, "!=") == 0) {
          tokens_.push_back({Tok::SomeNeq, "some!=", span_at(6)});
          advance(j - i + 2);
          continue;
        }
        if (word == "some" && src_.compare(j, 2, "=1") == 0) {
          tokens_.push_back({Tok::SomeEq1, "some=1", span_at(6)});
          advance(j - i + 2);
          continue;
        }
        tokens_.push_back({Tok::Ident, word, span_at(word.size())});
        advance(j - i);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        tokens_.push_back({Tok::Number, src_.substr(i, j - i), span_at(j - i)});
        advance(j - i);
        continue;
      }
      if (src_.compare(i, 3, "<=>") == 0) { tokens_.push_back({Tok::IffOp, "<=>", span_at(3)}); advance(3); continue; }
      if (src_.compare(i, 2, "=>") == 0) { tokens_.push_back({Tok::ImpliesOp, "=>", span_at(2)}); advance(2); continue; }
      if (src_.compare(i, 2, "[=") == 0) { tokens_.push_back({Tok::SubsumedBy, "[=", span_at(2)}); advance(2); continue; }
      if (src_.compare(i, 2, "->") == 0) { tokens_.push_back({Tok::Arrow, "->", span_at(2)}); advance(2); continue; }
      switch (c) {
        case '{': tokens_.push_back({Tok::LBrace, "{", span_at(1)}); advance(1); continue;
        case '}': tokens_.push_back({Tok::RBrace, "}", span_at(1)}); advance(1); continue;
        case '(': tokens_.push_back({Tok::LParen, "(", span_at(1)}); advance(1); continue;
        case ')': tokens_.push_back({Tok::RParen, ")", span_at(1)}); advance(1); continue;
        case '.': tokens_.push_back({Tok::Dot, ".", span_at(1)}); advance(1); continue;
        case ':': tokens_.push_back({Tok::Colon, ":", span_at(1)}); advance(1); continue;
        default:
          throw ParseError("unexpected character '" + std::string(1, c) + "'", span_at(1));
      }
    }
    tokens_.push_back({Tok::End, "", SourceSpan{line, col, 1}});
  }

  const std::string& src_;
  std::vector<Token> tokens_;
};

bool is_capitalized(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

// dia<k> / box<k> with k >= 1.
std::optional<std::pair<bool, int>> match_modal_ident(const std::string& s) {
  bool dia;
  std::size_t pos;
  if (s.rfind("dia", 0) == 0) { dia = true; pos = 3; }
  else if (s.rfind("box", 0) == 0) { dia = false; pos = 3; }
  else return std::nullopt;
  if (pos >= s.size()) return std::nullopt;
  int k = 0;
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    k = k * 10 + (s[i] - '0');
    if (k > 1000) return std::nullopt;
  }
  if (k < 1) return std::nullopt;
  return std::make_pair(dia, k);
}

const std::set<std::string> kKeywords = {"not", "and", "or", "some", "only",
                                         "iota", "top", "bot", "u", "inc",
                                         "dec", "else", "states", "X", "F", "G"};

class ConceptParser {
 public:
  ConceptParser(const std::vector<Token>& toks, const ParseOptions& opts)
      : toks_(toks), opts_(opts) {}

  Concept parse_full_concept() {
    Concept c = parse_concept();
    expect(Tok::End, "end of input");
    return c;
  }

  Ontology parse_full_ontology() {
    Ontology o;
    while (cur().kind != Tok::End) {
      Concept lhs = parse_concept();
      expect(Tok::SubsumedBy, "'[='");
      Concept rhs = parse_concept();
      o.cis.push_back(CI{lhs, rhs});
    }
    o.modality_count = std::max(1, max_modality_seen_);
    return o;
  }

  int max_modality_seen() const { return max_modality_seen_; }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  void expect(Tok k, const std::string& what) {
    if (cur().kind != k)
      throw ParseError("expected " + what + ", found '" + cur().text + "'", cur().span);
    ++pos_;
  }

  Concept parse_concept() { return parse_iff(); }

  Concept parse_iff() {
    Concept c = parse_implies();
    while (cur().kind == Tok::IffOp) {
      ++pos_;
      c = make_iff(c, parse_implies());
    }
    return c;
  }

  Concept parse_implies() {
    Concept c = parse_or();
    if (cur().kind == Tok::ImpliesOp) {
      ++pos_;
      return make_implies(c, parse_implies());
    }
    return c;
  }

  Concept parse_or() {
    Concept c = parse_and();
    while (cur().kind == Tok::Ident && cur().text == "or") {
      ++pos_;
      c = make_or(c, parse_and());
    }
    return c;
  }

  Concept parse_and() {
    Concept c = parse_unary();
    while (cur().kind == Tok::Ident && cur().text == "and") {
      ++pos_;
      c = make_and(c, parse_unary());
    }
    return c;
  }

  Concept parse_quantifier(bool existential, const Token& kw) {
    const Token& r = cur();
    if (r.kind != Tok::Ident)
      throw ParseError("expected role name or 'u' after '" + kw.text + "'", r.span);
    ++pos_;
    expect(Tok::Dot, "'.'");
    Concept body = parse_unary();
    if (r.text == "u") return existential ? make_exists_u(body) : make_forall_u(body);
    if (is_capitalized(r.text) || kKeywords.count(r.text))
      throw ParseError("role names start with a lowercase letter", r.span);
    return existential ? make_exists(r.text, body) : make_forall(r.text, body);
  }

  Concept parse_unary() {
    const Token& t = cur();
    if (t.kind == Tok::Ident) {
      if (t.text == "not") {
        ++pos_;
        return make_not(parse_unary());
      }
      if (t.text == "some" || t.text == "only") {
        ++pos_;
        return parse_quantifier(t.text == "some", t);
      }
      if (auto m = match_modal_ident(t.text)) {
        ++pos_;
        check_modality(m->second, t);
        Concept body = parse_unary();
        return m->first ? make_dia(m->second, body) : make_box(m->second, body);
      }
      // Temporal aliases: X = dia1 (next), F = dia2, G = box2 (strict order).
      if (t.text == "X" || t.text == "F" || t.text == "G") {
        ++pos_;
        int idx = t.text == "X" ? 1 : 2;
        check_modality(idx, t);
        Concept body = parse_unary();
        return t.text == "G" ? make_box(idx, body) : make_dia(idx, body);
      }
    }
    if (t.kind == Tok::SomeNeq || t.kind == Tok::SomeEq1) {
      if (!opts_.allow_diff)
        throw ParseError("'" + t.text + "' is only available in counting mode", t.span);
      bool neq = t.kind == Tok::SomeNeq;
      ++pos_;
      const Token& u = cur();
      if (u.kind != Tok::Ident || u.text != "u")
        throw ParseError("counting quantifiers apply to the universal role 'u'", u.span);
      ++pos_;
      expect(Tok::Dot, "'.'");
      Concept body = parse_unary();
      return neq ? make_exists_neq_u(body) : make_exists_eq1_u(body);
    }
    return parse_atom();
  }

  Concept parse_atom() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::LParen: {
        ++pos_;
        Concept c = parse_concept();
        expect(Tok::RParen, "')'");
        return c;
      }
      case Tok::LBrace: {
        ++pos_;
        Concept c = parse_term_nominal();
        expect(Tok::RBrace, "'}'");
        return c;
      }
      case Tok::Ident: {
        if (t.text == "top") { ++pos_; return make_top(); }
        if (t.text == "bot") { ++pos_; return make_bot(); }
        if (t.text == kReservedBotName)
          throw ParseError("'" + t.text + "' is a reserved concept name", t.span);
        if (is_capitalized(t.text) && !kKeywords.count(t.text)) {
          ++pos_;
          return make_name(t.text);
        }
        throw ParseError("expected a concept, found '" + t.text + "'", t.span);
      }
      default:
        throw ParseError("expected a concept, found '" + t.text + "'", t.span);
    }
  }

  Concept parse_term_nominal() {
    const Token& t = cur();
    if (t.kind == Tok::Ident && t.text == "iota") {
      ++pos_;
      return make_iota(parse_concept());
    }
    if (t.kind == Tok::Ident && !is_capitalized(t.text) && !kKeywords.count(t.text)) {
      ++pos_;
      return make_nominal(t.text);
    }
    throw ParseError("expected an individual name or 'iota' inside '{...}'", t.span);
  }

  void check_modality(int k, const Token& t) {
    if (opts_.max_modality > 0 && k > opts_.max_modality)
      throw ParseError("modality index " + std::to_string(k) + " exceeds the declared count " +
                           std::to_string(opts_.max_modality),
                       t.span);
    max_modality_seen_ = std::max(max_modality_seen_, k);
  }

  const std::vector<Token>& toks_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
  int max_modality_seen_ = 0;
};

}  // namespace

Concept parse_concept(const std::string& text, const ParseOptions& opts) {
  Lexer lex(text);
  ConceptParser p(lex.tokens(), opts);
  return p.parse_full_concept();
}

Ontology parse_ontology(const std::string& text, const ParseOptions& opts) {
  Lexer lex(text);
  ConceptParser p(lex.tokens(), opts);
  return p.parse_full_ontology();
}

MinskyMachine parse_minsky(const std::string& text) {
  Lexer lex(text);
  const std::vector<Token>& toks = lex.tokens();
  std::size_t pos = 0;
  auto cur = [&]() -> const Token& { return toks[pos]; };
  auto expect_ident = [&](const std::string& what) -> Token {
    if (cur().kind != Tok::Ident)
      throw ParseError("expected " + what + ", found '" + cur().text + "'", cur().span);
    return toks[pos++];
  };
  auto expect = [&](Tok k, const std::string& what) {
    if (cur().kind != k)
      throw ParseError("expected " + what + ", found '" + cur().text + "'", cur().span);
    ++pos;
  };

  Token hdr = expect_ident("'states'");
  if (hdr.text != "states") throw ParseError("machine files start with 'states:'", hdr.span);
  expect(Tok::Colon, "':'");

  MinskyMachine m;
  std::map<std::string, int> state_index;
  while (cur().kind == Tok::Ident) {
    Token st = toks[pos++];
    if (state_index.count(st.text)) throw ParseError("duplicate state '" + st.text + "'", st.span);
    state_index[st.text] = static_cast<int>(m.state_names.size());
    m.state_names.push_back(st.text);
  }
  if (m.state_names.empty())
    throw ParseError("at least one state is required", cur().span);

  int expected_index = 0;
  while (cur().kind == Tok::Number) {
    Token num = toks[pos++];
    if (std::stoi(num.text) != expected_index)
      throw ParseError("instructions must be numbered consecutively from 0; expected " +
                           std::to_string(expected_index),
                       num.span);
    expect(Tok::Colon, "':'");
    Token op = expect_ident("'inc' or 'dec'");
    if (op.text != "inc" && op.text != "dec")
      throw ParseError("expected 'inc' or 'dec', found '" + op.text + "'", op.span);
    Token reg = expect_ident("'r1' or 'r2'");
    if (reg.text != "r1" && reg.text != "r2")
      throw ParseError("expected 'r1' or 'r2', found '" + reg.text + "'", reg.span);
    expect(Tok::Arrow, "'->'");
    Token tgt = expect_ident("a state name");
    auto it = state_index.find(tgt.text);
    if (it == state_index.end()) throw ParseError("unknown state '" + tgt.text + "'", tgt.span);

    Instruction ins;
    ins.is_inc = op.text == "inc";
    ins.reg = reg.text == "r1" ? 1 : 2;
    ins.target = it->second;
    if (!ins.is_inc) {
      Token kw = expect_ident("'else'");
      if (kw.text != "else") throw ParseError("expected 'else', found '" + kw.text + "'", kw.span);
      Token tz = expect_ident("a state name");
      auto zt = state_index.find(tz.text);
      if (zt == state_index.end()) throw ParseError("unknown state '" + tz.text + "'", tz.span);
      ins.target_zero = zt->second;
    }
    m.instructions.push_back(ins);
    ++expected_index;
  }
  if (cur().kind != Tok::End)
    throw ParseError("unexpected trailing input '" + cur().text + "'", cur().span);
  if (static_cast<int>(m.instructions.size()) != m.state_count() - 1)
    throw ParseError("expected " + std::to_string(m.state_count() - 1) +
                         " instructions (one per non-halting state), found " +
                         std::to_string(m.instructions.size()),
                     cur().span);
  return m;
}

}  // namespace freedl
