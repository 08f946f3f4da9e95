#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hyalba/symbol.hpp"

namespace hyalba {

enum class Connective : std::uint8_t {
  PropVar,
  StateVar,
  Nominal,
  Bottom,
  Top,
  Not,
  Or,
  And,
  Implies,
  Diamond,
  Box,
  AtNominal,
  AtStateVar,
  Binder,
};

std::string_view to_string(Connective c);
// Inverse of to_string(Connective); throws hyalba::Error on unknown names.
Connective connective_from_string(std::string_view name);

int arity(Connective c) noexcept;
// True for the connectives that carry a Symbol (atoms, @ and the binder).
bool has_symbol(Connective c) noexcept;

namespace detail {
struct FormulaNode;
}

// Immutable hybrid formula of L(@, binder). Copies share structure.
class Formula {
 public:
  // Default-constructed formulas are Top.
  Formula();

  static Formula prop(Symbol s);
  static Formula state(Symbol s);
  static Formula nominal(Symbol s);
  // Dispatches on s.kind.
  static Formula atom(Symbol s);
  static Formula bottom();
  static Formula top();
  static Formula negation(Formula f);
  static Formula disjunction(Formula a, Formula b);
  static Formula conjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula diamond(Formula f);
  static Formula box(Formula f);
  // AtNominal or AtStateVar depending on the kind of `term`.
  static Formula at(Symbol term, Formula f);
  static Formula binder(Symbol var, Formula f);

  // Left-nested folds; the empty disjunction is Bottom, the empty conjunction Top.
  static Formula disjunction_of(const std::vector<Formula>& fs);
  static Formula conjunction_of(const std::vector<Formula>& fs);

  Connective op() const noexcept;
  // Valid when has_symbol(op()).
  const Symbol& symbol() const;
  // Only child of a unary node (Not, Diamond, Box, @, binder).
  Formula child() const;
  Formula left() const;
  Formula right() const;
  // Children in order; empty for atoms.
  std::vector<Formula> children() const;

  bool is_atom() const noexcept { return arity(op()) == 0; }
  // Nominal or state-variable atom.
  bool is_term() const noexcept {
    return op() == Connective::Nominal || op() == Connective::StateVar;
  }
  // Not(term), the right-hand side shape `~i` / `~x`.
  bool is_negated_term() const noexcept;

  std::size_t size() const noexcept;
  std::size_t depth() const noexcept;
  std::size_t hash() const noexcept;

  // Rebuilds this node with new children, keeping connective and symbol.
  Formula with_children(const std::vector<Formula>& kids) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}
  static Formula make(Connective op, Symbol s, std::shared_ptr<const detail::FormulaNode> a,
                      std::shared_ptr<const detail::FormulaNode> b);

  std::shared_ptr<const detail::FormulaNode> node_;
};

struct Inequality {
  Formula lhs;
  Formula rhs;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

struct QuasiInequality {
  std::vector<Inequality> antecedents;
  Inequality conclusion;

  friend bool operator==(const QuasiInequality&, const QuasiInequality&) = default;
};

// ---- syntactic queries -------------------------------------------------

// Each returns distinct symbols in order of first occurrence (preorder, left to right).
std::vector<Symbol> props(const Formula& f);
std::vector<Symbol> nominals(const Formula& f);
std::vector<Symbol> free_state_vars(const Formula& f);
// Every symbol occurring anywhere, bound variables included.
std::vector<Symbol> all_symbols(const Formula& f);

std::vector<Symbol> props(const Inequality& ineq);
std::vector<Symbol> nominals(const Inequality& ineq);
std::vector<Symbol> free_state_vars(const Inequality& ineq);
std::vector<Symbol> props(const QuasiInequality& q);
std::vector<Symbol> nominals(const QuasiInequality& q);
std::vector<Symbol> free_state_vars(const QuasiInequality& q);

bool occurs(const Formula& f, const Symbol& s);
bool is_pure(const Formula& f);
bool is_pure(const Inequality& ineq);
bool is_pure(const QuasiInequality& q);
bool is_sentence(const Formula& f);

enum class Polarity : std::uint8_t { Absent, Positive, Negative, Both };
std::string_view to_string(Polarity p);

// Sign of the occurrences of `p` in the positive generation tree of `f`.
Polarity polarity(const Formula& f, const Symbol& p);

// ---- substitution ------------------------------------------------------

// f[theta/p]. Throws CaptureError when a free state variable of theta would
// land under a binder for that variable.
Formula substitute_prop(const Formula& f, const Symbol& p, const Formula& theta);

// f[t/x] on free occurrences of x only; t is a nominal or a state variable.
// Throws CaptureError if t is a state variable that would be captured.
Formula replace_state_var(const Formula& f, const Symbol& x, const Symbol& t);

}  // namespace hyalba

template <>
struct std::hash<hyalba::Formula> {
  std::size_t operator()(const hyalba::Formula& f) const noexcept { return f.hash(); }
};
