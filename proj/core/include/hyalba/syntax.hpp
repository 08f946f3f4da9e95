#pragma once

#include <string>
#include <string_view>

#include "hyalba/formula.hpp"

namespace hyalba {

// Concrete syntax, loosest binding first:
//
//   a <-> b          sugar for (a -> b) & (b -> a)
//   a -> b           right associative
//   a | b, a & b     left associative
//   ~a  <>a  []a  @'i a  @x a  !x. a
//
// Atoms: `T`, `F`, nominals `'i`, state variables (identifiers starting
// with x, y, z, u, v or w), everything else is a propositional variable.
// Inequalities are `a <= b`; quasi-inequalities `i1 ; i2 => c`.
Formula parse(std::string_view text);
Inequality parse_inequality(std::string_view text);
QuasiInequality parse_quasi(std::string_view text);

// Minimal parenthesisation; parse(print(f)) == f for user symbols.
std::string print(const Formula& f);
std::string print(const Inequality& ineq);
std::string print(const QuasiInequality& q);

// Which lexical class an identifier falls into.
SymbolKind identifier_kind(std::string_view ident);

}  // namespace hyalba
