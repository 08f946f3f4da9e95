#include "hyalba/syntax.hpp"

#include <cctype>
#include <vector>

#include "hyalba/errors.hpp"

namespace hyalba {

namespace {

enum class Tok {
  Ident,
  Nominal,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Diamond,
  Box,
  At,
  Bang,
  Dot,
  LParen,
  RParen,
  Leq,
  Semicolon,
  Entails,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Ident:
      return "'" + t.text + "'";
    case Tok::Nominal:
      return "nominal '" + t.text;
    default:
      return "'" + t.text + "'";
  }
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto two = [&](char a, char b) { return i + 1 < s.size() && s[i] == a && s[i + 1] == b; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (c == '\'') {
      ++i;
      if (i >= s.size() || !ident_start(s[i])) throw ParseError("expected nominal name after '", start);
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Nominal, std::string(s.substr(start + 1, i - start - 1)), start});
      continue;
    }
    if (i + 2 < s.size() && s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, "<->", start});
      i += 3;
      continue;
    }
    if (two('<', '>')) {
      out.push_back({Tok::Diamond, "<>", start});
      i += 2;
      continue;
    }
    if (two('<', '=')) {
      out.push_back({Tok::Leq, "<=", start});
      i += 2;
      continue;
    }
    if (two('-', '>')) {
      out.push_back({Tok::Implies, "->", start});
      i += 2;
      continue;
    }
    if (two('[', ']')) {
      out.push_back({Tok::Box, "[]", start});
      i += 2;
      continue;
    }
    if (two('=', '>')) {
      out.push_back({Tok::Entails, "=>", start});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '~':
        k = Tok::Not;
        break;
      case '&':
        k = Tok::And;
        break;
      case '|':
        k = Tok::Or;
        break;
      case '@':
        k = Tok::At;
        break;
      case '!':
        k = Tok::Bang;
        break;
      case '.':
        k = Tok::Dot;
        break;
      case '(':
        k = Tok::LParen;
        break;
      case ')':
        k = Tok::RParen;
        break;
      case ';':
        k = Tok::Semicolon;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula formula() { return iff(); }

  Inequality inequality() {
    Formula l = formula();
    expect(Tok::Leq, "'<='");
    Formula r = formula();
    return {l, r};
  }

  QuasiInequality quasi() {
    QuasiInequality q;
    if (!accept(Tok::Entails)) {
      q.antecedents.push_back(inequality());
      while (accept(Tok::Semicolon)) q.antecedents.push_back(inequality());
      expect(Tok::Entails, "'=>'");
    }
    q.conclusion = inequality();
    return q;
  }

  void finish() {
    if (peek().kind != Tok::End) throw ParseError("unexpected " + describe(peek()), peek().pos);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what + ", found " + describe(peek()), peek().pos);
    return next();
  }

  Formula iff() {
    Formula f = implies();
    while (accept(Tok::Iff)) {
      Formula g = implies();
      f = Formula::conjunction(Formula::implication(f, g), Formula::implication(g, f));
    }
    return f;
  }

  Formula implies() {
    Formula f = disj();
    if (accept(Tok::Implies)) return Formula::implication(f, implies());
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (accept(Tok::Or)) f = Formula::disjunction(f, conj());
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conjunction(f, unary());
    return f;
  }

  Symbol term_after_at() {
    const Token& t = next();
    if (t.kind == Tok::Nominal) return Symbol::nominal(t.text);
    if (t.kind == Tok::Ident) {
      if (t.text == "T" || t.text == "F") throw KindError("@ expects a nominal or state variable, found " + t.text, t.pos);
      SymbolKind k = identifier_kind(t.text);
      if (k != SymbolKind::StateVar) {
        throw KindError("@ expects a nominal or state variable, but " + t.text + " is a propositional variable", t.pos);
      }
      return Symbol::state(t.text);
    }
    throw ParseError("expected nominal or state variable after @, found " + describe(t), t.pos);
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        ++pos_;
        return Formula::negation(unary());
      case Tok::Diamond:
        ++pos_;
        return Formula::diamond(unary());
      case Tok::Box:
        ++pos_;
        return Formula::box(unary());
      case Tok::At: {
        ++pos_;
        Symbol term = term_after_at();
        return Formula::at(std::move(term), unary());
      }
      case Tok::Bang: {
        ++pos_;
        const Token& v = next();
        if (v.kind == Tok::Nominal) throw KindError("binder expects a state variable, found nominal '" + v.text, v.pos);
        if (v.kind != Tok::Ident) throw ParseError("expected state variable after !, found " + describe(v), v.pos);
        if (v.text == "T" || v.text == "F" || identifier_kind(v.text) != SymbolKind::StateVar) {
          throw KindError("binder expects a state variable, but " + v.text + " is not one", v.pos);
        }
        Symbol var = Symbol::state(v.text);
        expect(Tok::Dot, "'.' after binder variable");
        return Formula::binder(std::move(var), unary());
      }
      case Tok::LParen: {
        ++pos_;
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Nominal:
        ++pos_;
        return Formula::nominal(Symbol::nominal(t.text));
      case Tok::Ident:
        ++pos_;
        if (t.text == "T") return Formula::top();
        if (t.text == "F") return Formula::bottom();
        if (identifier_kind(t.text) == SymbolKind::StateVar) return Formula::state(Symbol::state(t.text));
        return Formula::prop(Symbol::prop(t.text));
      default:
        throw ParseError("expected a formula, found " + describe(t), t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---- printing ------------------------------------------------------------

int precedence(Connective c) {
  switch (c) {
    case Connective::Implies:
      return 1;
    case Connective::Or:
      return 2;
    case Connective::And:
      return 3;
    default:
      return 4;
  }
}

void emit(const Formula& f, std::string& out);

void emit_wrapped(const Formula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  emit(f, out);
  if (wrap) out += ')';
}

void emit_term(const Symbol& s, std::string& out) { out += to_string(s); }

void emit(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Connective::PropVar:
    case Connective::StateVar:
    case Connective::Nominal:
      emit_term(f.symbol(), out);
      return;
    case Connective::Top:
      out += 'T';
      return;
    case Connective::Bottom:
      out += 'F';
      return;
    case Connective::Not:
      out += '~';
      emit_wrapped(f.child(), precedence(f.child().op()) < 4, out);
      return;
    case Connective::Diamond:
      out += "<>";
      emit_wrapped(f.child(), precedence(f.child().op()) < 4, out);
      return;
    case Connective::Box:
      out += "[]";
      emit_wrapped(f.child(), precedence(f.child().op()) < 4, out);
      return;
    case Connective::AtNominal:
    case Connective::AtStateVar:
      out += '@';
      emit_term(f.symbol(), out);
      out += ' ';
      emit_wrapped(f.child(), precedence(f.child().op()) < 4, out);
      return;
    case Connective::Binder:
      out += '!';
      out += f.symbol().name;
      out += ". ";
      emit_wrapped(f.child(), precedence(f.child().op()) < 4, out);
      return;
    case Connective::Implies:
      emit_wrapped(f.left(), precedence(f.left().op()) <= 1, out);
      out += " -> ";
      emit(f.right(), out);
      return;
    case Connective::Or:
    case Connective::And: {
      int p = precedence(f.op());
      emit_wrapped(f.left(), precedence(f.left().op()) < p, out);
      out += f.op() == Connective::Or ? " | " : " & ";
      emit_wrapped(f.right(), precedence(f.right().op()) <= p, out);
      return;
    }
  }
}

}  // namespace

SymbolKind identifier_kind(std::string_view ident) {
  if (ident.empty()) return SymbolKind::PropVar;
  switch (ident.front()) {
    case 'x':
    case 'y':
    case 'z':
    case 'u':
    case 'v':
    case 'w':
      return SymbolKind::StateVar;
    default:
      return SymbolKind::PropVar;
  }
}

Formula parse(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

Inequality parse_inequality(std::string_view text) {
  Parser p(text);
  Inequality i = p.inequality();
  p.finish();
  return i;
}

QuasiInequality parse_quasi(std::string_view text) {
  Parser p(text);
  QuasiInequality q = p.quasi();
  p.finish();
  return q;
}

std::string print(const Formula& f) {
  std::string out;
  emit(f, out);
  return out;
}

std::string print(const Inequality& ineq) { return print(ineq.lhs) + " <= " + print(ineq.rhs); }

std::string print(const QuasiInequality& q) {
  std::string out;
  for (std::size_t i = 0; i < q.antecedents.size(); ++i) {
    if (i > 0) out += " ; ";
    out += print(q.antecedents[i]);
  }
  if (!out.empty()) out += ' ';
  out += "=> " + print(q.conclusion);
  return out;
}

}  // namespace hyalba
