// Recursive-descent parser shared by the three formula layers.
//
// Precedence, tightest first:
//   classical / MEL:   !   >  &  >  |  >  -> <-> (right-assoc)
//   Lukasiewicz:       !   >  && (-) /\  >  (+) \/  >  -> <-> (right-assoc)

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belfl/error.hpp"
#include "belfl/mel.hpp"
#include "belfl/pformula.hpp"
#include "belfl/propcore.hpp"

namespace belfl {

namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  Bang,     // ! ¬
  Amp,      // &
  AmpAmp,   // && ⊙
  Wedge,    // ∧
  Bar,      // |
  Vee,      // ∨
  Arrow,    // -> →
  DArrow,   // <-> ↔ ≡
  Box,      // [] □
  Diamond,  // <> ◇
  OPlus,    // (+) ⊕
  OMinus,   // (-) ⊖
  Meet,     // /\ (weak conjunction)
  Join,     // \/ (weak disjunction)
  Top,      // ⊤
  Bottom,   // ⊥
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

// Longest spellings first so "<->" wins over "<>" and "&&" over "&".
constexpr std::array<std::pair<std::string_view, Tok>, 24> kSymbols{{
    {"<->", Tok::DArrow},
    {"(+)", Tok::OPlus},
    {"(-)", Tok::OMinus},
    {"->", Tok::Arrow},
    {"<>", Tok::Diamond},
    {"[]", Tok::Box},
    {"&&", Tok::AmpAmp},
    {"/\\", Tok::Meet},
    {"\\/", Tok::Join},
    {"\xC2\xAC", Tok::Bang},         // ¬
    {"\xE2\x88\xA7", Tok::Wedge},    // ∧
    {"\xE2\x88\xA8", Tok::Vee},      // ∨
    {"\xE2\x86\x92", Tok::Arrow},    // →
    {"\xE2\x86\x94", Tok::DArrow},   // ↔
    {"\xE2\x89\xA1", Tok::DArrow},   // ≡
    {"\xE2\x96\xA1", Tok::Box},      // □
    {"\xE2\x97\x87", Tok::Diamond},  // ◇
    {"\xE2\x8A\x95", Tok::OPlus},    // ⊕
    {"\xE2\x8A\x96", Tok::OMinus},   // ⊖
    {"\xE2\x8A\x99", Tok::AmpAmp},   // ⊙
    {"\xE2\x8A\xA4", Tok::Top},      // ⊤
    {"\xE2\x8A\xA5", Tok::Bottom},   // ⊥
    {"!", Tok::Bang},
    {"&", Tok::Amp},
}};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (digit(c) || (c == '.' && i + 1 < text.size() && digit(text[i + 1]))) {
      std::size_t j = i;
      while (j < text.size() && digit(text[j])) ++j;
      if (j < text.size() && text[j] == '.') {
        ++j;
        while (j < text.size() && digit(text[j])) ++j;
      } else if (j + 1 < text.size() && text[j] == '/' && digit(text[j + 1])) {
        ++j;
        while (j < text.size() && digit(text[j])) ++j;
      }
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& [spelling, kind] : kSymbols) {
      if (text.substr(i).starts_with(spelling)) {
        out.push_back({kind, std::string(spelling), i});
        i += spelling.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (c == '(') {
      out.push_back({Tok::LParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", i++});
    } else if (c == '|') {
      out.push_back({Tok::Bar, "|", i++});
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocab)
      : tokens_(tokenize(text)), vocab_(vocab) {}

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

  // --- classical layer ---

  PropFormula prop() {
    PropFormula lhs = prop_disj();
    if (peek().kind == Tok::Arrow || peek().kind == Tok::DArrow) {
      PropOp op = next().kind == Tok::Arrow ? PropOp::Implies : PropOp::Iff;
      return PropFormula::binary(op, std::move(lhs), prop());
    }
    return lhs;
  }

  // --- MEL layer ---

  MelFormula mel() {
    MelFormula lhs = mel_disj();
    if (peek().kind == Tok::Arrow || peek().kind == Tok::DArrow) {
      MelOp op = next().kind == Tok::Arrow ? MelOp::Implies : MelOp::Iff;
      return MelFormula::binary(op, std::move(lhs), mel());
    }
    return lhs;
  }

  // --- Lukasiewicz layer ---

  PFormula pf() {
    PFormula lhs = pf_disj();
    if (peek().kind == Tok::Arrow || peek().kind == Tok::DArrow) {
      LukOp op = next().kind == Tok::Arrow ? LukOp::Implies : LukOp::Iff;
      return PFormula::binary(op, std::move(lhs), pf());
    }
    return lhs;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(peek().pos), peek().pos);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(std::string("expected ") + what +
           (peek().kind == Tok::End ? " but reached end of input"
                                    : " but found '" + peek().text + "'"));
    }
    next();
  }

  bool is_operator_keyword(const Token& t) const {
    return t.kind == Tok::Ident && (t.text == "P" || t.text == "B") &&
           peek(1).kind == Tok::LParen && !vocab_.index_of(t.text);
  }

  PropFormula prop_disj() {
    PropFormula lhs = prop_conj();
    while (peek().kind == Tok::Bar || peek().kind == Tok::Vee) {
      next();
      lhs = PropFormula::disjunction(std::move(lhs), prop_conj());
    }
    return lhs;
  }

  PropFormula prop_conj() {
    PropFormula lhs = prop_unary();
    while (peek().kind == Tok::Amp || peek().kind == Tok::Wedge) {
      next();
      lhs = PropFormula::conjunction(std::move(lhs), prop_unary());
    }
    return lhs;
  }

  PropFormula prop_unary() {
    if (peek().kind == Tok::Bang) {
      next();
      return PropFormula::negation(prop_unary());
    }
    return prop_primary();
  }

  PropFormula prop_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        if (t.text == "0") return next(), PropFormula::falsum();
        if (t.text == "1") return next(), PropFormula::verum();
        fail("only 0 and 1 are constants in classical formulas, found '" + t.text + "'");
      case Tok::Top: next(); return PropFormula::verum();
      case Tok::Bottom: next(); return PropFormula::falsum();
      case Tok::Ident: {
        if (is_operator_keyword(t)) fail("nested " + t.text + "(...) is not allowed here");
        auto idx = vocab_.index_of(t.text);
        if (!idx) throw UnknownVariableError(t.text, t.pos);
        next();
        return PropFormula::var(*idx);
      }
      case Tok::LParen: {
        next();
        PropFormula inner = prop();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Box:
      case Tok::Diamond: fail("modal operator inside a classical formula");
      default: fail("expected a classical formula");
    }
  }

  MelFormula mel_disj() {
    MelFormula lhs = mel_conj();
    while (peek().kind == Tok::Bar || peek().kind == Tok::Vee) {
      next();
      lhs = MelFormula::disjunction(std::move(lhs), mel_conj());
    }
    return lhs;
  }

  MelFormula mel_conj() {
    MelFormula lhs = mel_unary();
    while (peek().kind == Tok::Amp || peek().kind == Tok::Wedge) {
      next();
      lhs = MelFormula::conjunction(std::move(lhs), mel_unary());
    }
    return lhs;
  }

  MelFormula mel_unary() {
    if (peek().kind == Tok::Bang) {
      next();
      return MelFormula::negation(mel_unary());
    }
    return mel_primary();
  }

  MelFormula mel_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Box:
      case Tok::Diamond: {
        bool box = next().kind == Tok::Box;
        expect(Tok::LParen, "'(' after modal operator");
        PropFormula body = prop();
        expect(Tok::RParen, "')'");
        return box ? MelFormula::box(std::move(body)) : MelFormula::diamond(std::move(body));
      }
      case Tok::LParen: {
        next();
        MelFormula inner = mel();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        if (is_operator_keyword(t)) fail("nested " + t.text + "(...) is not allowed here");
        fail("propositional atom '" + t.text + "' must appear inside [](...) or <>(...)");
      default: fail("expected a MEL formula");
    }
  }

  PFormula pf_disj() {
    PFormula lhs = pf_conj();
    for (;;) {
      switch (peek().kind) {
        case Tok::OPlus: next(); lhs = PFormula::binary(LukOp::StrongOr, std::move(lhs), pf_conj()); break;
        case Tok::Join:
        case Tok::Vee: next(); lhs = PFormula::binary(LukOp::WeakOr, std::move(lhs), pf_conj()); break;
        default: return lhs;
      }
    }
  }

  PFormula pf_conj() {
    PFormula lhs = pf_unary();
    for (;;) {
      switch (peek().kind) {
        case Tok::AmpAmp: next(); lhs = PFormula::binary(LukOp::StrongAnd, std::move(lhs), pf_unary()); break;
        case Tok::OMinus: next(); lhs = PFormula::binary(LukOp::Minus, std::move(lhs), pf_unary()); break;
        case Tok::Meet:
        case Tok::Wedge: next(); lhs = PFormula::binary(LukOp::WeakAnd, std::move(lhs), pf_unary()); break;
        case Tok::Amp: fail("'&' is classical; use '&&' for strong conjunction");
        default: return lhs;
      }
    }
  }

  PFormula pf_unary() {
    if (peek().kind == Tok::Bang) {
      next();
      return PFormula::negation(pf_unary());
    }
    return pf_primary();
  }

  PFormula pf_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        std::size_t at = t.pos;
        Rational value;
        try {
          value = parse_rational(t.text);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), at);
        }
        if (!in_unit_interval(value)) {
          throw ConstantRangeError("truth constant " + t.text + " outside [0,1]", at);
        }
        next();
        return PFormula::constant(value);
      }
      case Tok::Top: next(); return PFormula::constant(1);
      case Tok::Bottom: next(); return PFormula::constant(0);
      case Tok::Ident: {
        if (t.text == "P" && peek(1).kind == Tok::LParen) {
          next();
          next();
          MelFormula body = mel();
          expect(Tok::RParen, "')'");
          return PFormula::atom(std::move(body));
        }
        if (t.text == "B" && peek(1).kind == Tok::LParen) {
          next();
          next();
          PropFormula body = prop();
          expect(Tok::RParen, "')'");
          return PFormula::belief(std::move(body));
        }
        fail("expected P(...), B(...) or a truth constant, found '" + t.text + "'");
      }
      case Tok::LParen: {
        next();
        PFormula inner = pf();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Box:
      case Tok::Diamond: fail("MEL formula must be wrapped in P(...)");
      default: fail("expected a P-formula");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Vocabulary& vocab_;
};

}  // namespace

PropFormula parse_prop(std::string_view text, const Vocabulary& vocab) {
  Parser p(text, vocab);
  PropFormula f = p.prop();
  p.expect_end();
  return f;
}

MelFormula parse_mel(std::string_view text, const Vocabulary& vocab) {
  Parser p(text, vocab);
  MelFormula f = p.mel();
  p.expect_end();
  return f;
}

PFormula parse_p(std::string_view text, const Vocabulary& vocab) {
  Parser p(text, vocab);
  PFormula f = p.pf();
  p.expect_end();
  return f;
}

std::vector<std::string> scan_variables(std::string_view text) {
  auto tokens = tokenize(text);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind != Tok::Ident) continue;
    if ((t.text == "P" || t.text == "B") && tokens[i + 1].kind == Tok::LParen) continue;
    if (std::find(names.begin(), names.end(), t.text) == names.end()) names.push_back(t.text);
  }
  return names;
}

}  // namespace belfl
