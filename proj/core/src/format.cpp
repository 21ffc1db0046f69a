#include "nlb/format.hpp"

#include <cctype>
#include <set>
#include <vector>

#include "nlb/errors.hpp"

namespace nlb {
namespace {

enum class Tok { ident, integer, punct, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    const std::size_t l = line;
    const std::size_t cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        s += src[i];
        advance();
      }
      out.push_back({Tok::ident, std::move(s), l, cl});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        s += src[i];
        advance();
      }
      out.push_back({Tok::integer, std::move(s), l, cl});
    } else if (std::string_view("{}:;*^+-()/,").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), l, cl});
      advance();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  SpecFile file() {
    std::optional<Ring> ring;
    std::optional<BracketTensor> tensor;
    std::optional<AlgebroidSpec> algebroid;
    while (peek().kind != Tok::end) {
      const Token& head = peek();
      const std::string kw = expect_ident("block name");
      if (kw == "ring") {
        if (ring) fail("duplicate ring block", head);
        ring = ring_block();
      } else if (kw == "tensor") {
        if (!ring) fail("tensor block before ring block", head);
        if (tensor) fail("duplicate tensor block", head);
        tensor = tensor_block(*ring);
      } else if (kw == "algebroid") {
        if (!ring) fail("algebroid block before ring block", head);
        if (algebroid) fail("duplicate algebroid block", head);
        algebroid = algebroid_block(*ring);
      } else {
        fail("unknown block '" + kw + "'", head);
      }
    }
    if (!ring) fail("missing ring block", peek());
    return SpecFile{std::move(*ring), std::move(tensor), std::move(algebroid)};
  }

  Polynomial standalone(const Ring& ring) {
    Polynomial p = expression(ring);
    if (peek().kind != Tok::end) fail("trailing input after polynomial", peek());
    return p;
  }

 private:
  [[noreturn]] static void fail(const std::string& msg, const Token& at) {
    throw ParseError(msg, at.line, at.column);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool accept(const char* punct) {
    if (peek().kind == Tok::punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(const char* punct) {
    if (!accept(punct))
      fail(std::string("expected '") + punct + "', found '" + describe(peek()) + "'", peek());
  }

  static std::string describe(const Token& t) { return t.kind == Tok::end ? "end of input" : t.text; }

  std::string expect_ident(const char* what) {
    if (peek().kind != Tok::ident)
      fail(std::string("expected ") + what + ", found '" + describe(peek()) + "'", peek());
    return take().text;
  }

  std::uint64_t expect_uint(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::integer)
      fail(std::string("expected ") + what + ", found '" + describe(t) + "'", t);
    take();
    if (t.text.size() > 9) fail(std::string(what) + " is too large", t);
    return std::stoull(t.text);
  }

  // 1-based index in the text -> 0-based, range checked.
  std::size_t expect_index(std::size_t bound, const char* what) {
    const Token& t = peek();
    const std::uint64_t v = expect_uint(what);
    if (v < 1 || v > bound)
      fail(std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(bound), t);
    return static_cast<std::size_t>(v - 1);
  }

  // Names separated by whitespace or commas.
  std::vector<std::string> name_list() {
    std::vector<std::string> names;
    while (true) {
      if (peek().kind == Tok::ident) {
        names.push_back(take().text);
      } else if (!accept(",")) {
        return names;
      }
    }
  }

  Ring ring_block() {
    expect("{");
    std::optional<std::vector<std::string>> vars;
    std::vector<Monomial> nilpotent;
    while (!accept("}")) {
      const Token& head = peek();
      const std::string kw = expect_ident("'vars' or 'nilpotent'");
      expect(":");
      if (kw == "vars") {
        if (vars) fail("duplicate vars statement", head);
        vars = name_list();
        if (vars->empty()) fail("vars needs at least one name", head);
        std::set<std::string> seen;
        for (const auto& v : *vars)
          if (!seen.insert(v).second) fail("duplicate variable '" + v + "'", head);
      } else if (kw == "nilpotent") {
        if (!vars) fail("nilpotent before vars", head);
        const Ring plain(*vars);
        do {
          const Token& at = peek();
          const Polynomial p = expression(plain);
          if (p.size() != 1 || !p.terms()[0].coeff.is_one() || p.terms()[0].monomial.is_one())
            fail("nilpotent generator must be a nonconstant monomial", at);
          nilpotent.push_back(p.terms()[0].monomial);
        } while (accept(","));
      } else {
        fail("unknown ring statement '" + kw + "'", head);
      }
      expect(";");
    }
    if (!vars) fail("ring block without vars", peek());
    return Ring(std::move(*vars), std::move(nilpotent));
  }

  BracketTensor tensor_block(const Ring& ring) {
    expect("{");
    std::optional<BracketTensor> t;
    std::set<IndexTuple> seen;
    while (!accept("}")) {
      const Token& head = peek();
      const std::string kw = expect_ident("'arity' or 'coeff'");
      if (kw == "arity") {
        expect(":");
        if (t) fail("duplicate arity statement", head);
        const Token& at = peek();
        const auto n = expect_uint("arity");
        if (n < 2) fail("arity must be at least 2", at);
        t.emplace(ring, static_cast<std::size_t>(n));
      } else if (kw == "coeff") {
        if (!t) fail("coeff before arity", head);
        IndexTuple idx;
        for (std::size_t s = 0; s < t->arity(); ++s) idx.push_back(expect_index(ring.nvars(), "index"));
        if (peek().kind == Tok::integer) fail("too many indices for arity " + std::to_string(t->arity()), peek());
        expect(":");
        if (!seen.insert(idx).second) fail("duplicate coefficient " + format_index(idx), head);
        t->set(idx, expression(ring));
      } else {
        fail("unknown tensor statement '" + kw + "'", head);
      }
      expect(";");
    }
    if (!t) fail("tensor block without arity", peek());
    return std::move(*t);
  }

  AlgebroidSpec algebroid_block(const Ring& ring) {
    const Token& open = peek();
    expect("{");
    std::optional<std::vector<std::string>> base_vars;
    std::optional<AlgebroidSpec> a;
    std::optional<Ring> base;
    std::set<std::vector<std::size_t>> seen;
    auto need_spec = [&](const Token& at) {
      if (!base_vars) fail("base_vars must precede structure data", at);
      if (!a) fail("rank must precede structure data", at);
    };
    while (!accept("}")) {
      const Token& head = peek();
      const std::string kw = expect_ident("algebroid statement");
      if (kw == "base_vars") {
        expect(":");
        if (base_vars) fail("duplicate base_vars statement", head);
        base_vars = name_list();
        for (const auto& v : *base_vars) {
          const auto idx = ring.index_of(v);
          if (!idx) fail("undeclared variable '" + v + "'", head);
          for (const auto& g : ring.nilpotent_generators())
            if (g[*idx] != 0) fail("algebroid base variable '" + v + "' is nilpotent", head);
        }
        try {
          base.emplace(*base_vars);
        } catch (const StructuralError& e) {
          fail(e.what(), head);
        }
      } else if (kw == "rank") {
        expect(":");
        if (a) fail("duplicate rank statement", head);
        if (!base) fail("base_vars must precede rank", head);
        const Token& at = peek();
        const auto r = expect_uint("rank");
        if (r < 1) fail("rank must be at least 1", at);
        a.emplace(*base, static_cast<std::size_t>(r));
      } else if (kw == "c") {
        need_spec(head);
        const std::size_t r = a->rank();
        const std::size_t i = expect_index(r, "index");
        const std::size_t j = expect_index(r, "index");
        const std::size_t k = expect_index(r, "index");
        expect(":");
        if (!seen.insert({0, i, j, k}).second) fail("duplicate structure entry", head);
        a->set_structure(i, j, k, expression(*base));
      } else if (kw == "anchor_left" || kw == "anchor_right") {
        need_spec(head);
        const std::size_t u = expect_index(base->nvars(), "base index");
        const std::size_t i = expect_index(a->rank(), "index");
        expect(":");
        const bool left = kw == "anchor_left";
        if (!seen.insert({left ? 1U : 2U, u, i}).second) fail("duplicate " + kw + " entry", head);
        a->set_anchor(left ? AnchorSide::left : AnchorSide::right, u, i, expression(*base));
      } else {
        fail("unknown algebroid statement '" + kw + "'", head);
      }
      expect(";");
    }
    if (!a) fail("algebroid block needs base_vars and rank", open);
    return std::move(*a);
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Polynomial expression(const Ring& ring) {
    Polynomial acc(ring.nvars());
    bool negate = false;
    if (accept("-")) {
      negate = true;
    } else {
      accept("+");
    }
    Polynomial t = product(ring);
    acc = negate ? -t : t;
    while (true) {
      if (accept("+")) {
        acc += product(ring);
      } else if (accept("-")) {
        acc -= product(ring);
      } else {
        return acc;
      }
    }
  }

  // term := unary ('*' unary)*
  Polynomial product(const Ring& ring) {
    Polynomial acc = unary(ring);
    while (accept("*")) acc = multiply(acc, unary(ring), ring);
    return acc;
  }

  Polynomial unary(const Ring& ring) {
    if (accept("-")) return -unary(ring);
    return power_expr(ring);
  }

  Polynomial power_expr(const Ring& ring) {
    Polynomial base = primary(ring);
    if (accept("^")) {
      const auto e = expect_uint("exponent");
      return power(base, e, ring);
    }
    return base;
  }

  Polynomial primary(const Ring& ring) {
    const Token& t = peek();
    if (t.kind == Tok::integer) {
      take();
      std::string literal = t.text;
      if (accept("/")) {
        const Token& d = peek();
        if (d.kind != Tok::integer) fail("expected denominator", d);
        take();
        if (d.text.find_first_not_of('0') == std::string::npos) fail("zero denominator", d);
        literal += "/" + d.text;
      }
      return reduce(Polynomial::constant(ring.nvars(), Rational::parse(literal)), ring);
    }
    if (t.kind == Tok::ident) {
      take();
      const auto idx = ring.index_of(t.text);
      if (!idx) fail("undeclared variable '" + t.text + "'", t);
      return reduce(Polynomial::variable(ring.nvars(), *idx), ring);
    }
    if (accept("(")) {
      Polynomial p = expression(ring);
      expect(")");
      return p;
    }
    fail("expected polynomial term, found '" + describe(t) + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

SpecFile parse_spec(std::string_view source) {
  Parser p(source);
  return p.file();
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  Parser p(text);
  return p.standalone(ring);
}

std::string print_spec(const SpecFile& spec) {
  const Ring& ring = spec.ring;
  std::string out = "ring {\n  vars:";
  for (const auto& v : ring.variables()) out += " " + v;
  out += ";\n";
  for (const auto& g : ring.nilpotent_generators())
    out += "  nilpotent: " + Polynomial::term(g, 1).str(ring) + ";\n";
  out += "}\n";

  if (spec.tensor) {
    const BracketTensor& t = *spec.tensor;
    out += "tensor {\n  arity: " + std::to_string(t.arity()) + ";\n";
    for (const auto& [idx, c] : t.coefficients()) {
      out += "  coeff";
      for (auto i : idx) out += " " + std::to_string(i + 1);
      out += " : " + c.str(ring) + ";\n";
    }
    out += "}\n";
  }

  if (spec.algebroid) {
    const AlgebroidSpec& a = *spec.algebroid;
    const Ring& base = a.base();
    out += "algebroid {\n  base_vars:";
    for (const auto& v : base.variables()) out += " " + v;
    out += ";\n  rank: " + std::to_string(a.rank()) + ";\n";
    for (const auto& [key, c] : a.structure_constants()) {
      out += "  c " + std::to_string(key[0] + 1) + " " + std::to_string(key[1] + 1) + " " +
             std::to_string(key[2] + 1) + " : " + c.str(base) + ";\n";
    }
    for (const auto side : {AnchorSide::left, AnchorSide::right}) {
      const char* name = side == AnchorSide::left ? "anchor_left" : "anchor_right";
      const AnchorMatrix& m = a.anchor(side);
      for (std::size_t u = 0; u < m.size(); ++u)
        for (std::size_t i = 0; i < m[u].size(); ++i)
          if (!m[u][i].is_zero())
            out += std::string("  ") + name + " " + std::to_string(u + 1) + " " +
                   std::to_string(i + 1) + " : " + m[u][i].str(base) + ";\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace nlb
