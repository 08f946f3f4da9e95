#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace hyalba {

enum class SymbolKind : std::uint8_t { PropVar, StateVar, Nominal };

std::string_view to_string(SymbolKind kind);

// A propositional variable, state variable or nominal.
//
// User symbols carry index 0. Symbols minted by a FreshContext carry a
// positive index, so they compare unequal to any user symbol even if the
// printed names coincide (FreshContext also avoids that).
struct Symbol {
  SymbolKind kind = SymbolKind::PropVar;
  std::string name;
  std::uint32_t index = 0;

  static Symbol prop(std::string name) { return {SymbolKind::PropVar, std::move(name), 0}; }
  static Symbol state(std::string name) { return {SymbolKind::StateVar, std::move(name), 0}; }
  static Symbol nominal(std::string name) { return {SymbolKind::Nominal, std::move(name), 0}; }

  bool is_prop() const noexcept { return kind == SymbolKind::PropVar; }
  bool is_state() const noexcept { return kind == SymbolKind::StateVar; }
  bool is_nominal() const noexcept { return kind == SymbolKind::Nominal; }
  bool is_term() const noexcept { return kind != SymbolKind::PropVar; }
  bool is_machine() const noexcept { return index > 0; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Concrete-syntax rendering: nominals get a leading quote.
std::string to_string(const Symbol& s);

class Formula;

// Source of fresh symbols for one engine run.
//
// Nominals are minted as i0, i1 for the first two requests and j1, j2, ...
// afterwards; state variables as x1, x2, ...; propositional variables as
// q1, q2, .... A name already taken (by any symbol of the same kind) is
// skipped by bumping the numeric suffix.
class FreshContext {
 public:
  FreshContext() = default;

  void observe(const Symbol& s);
  void observe(const Formula& f);

  bool contains(const Symbol& s) const;
  bool name_taken(SymbolKind kind, std::string_view name) const;

  Symbol fresh(SymbolKind kind);
  // Mints `<base><k>` for the smallest k >= start that is not taken.
  Symbol fresh(SymbolKind kind, std::string_view base, std::uint32_t start);

  std::uint32_t issued() const noexcept { return serial_; }
  std::uint32_t issued_nominals() const noexcept { return nominals_issued_; }

 private:
  std::set<Symbol> symbols_;
  std::set<std::pair<SymbolKind, std::string>> names_;
  std::uint32_t serial_ = 0;
  std::uint32_t nominals_issued_ = 0;
};

}  // namespace hyalba
