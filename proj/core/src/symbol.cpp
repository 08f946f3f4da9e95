#include "hyalba/symbol.hpp"

#include "hyalba/formula.hpp"

namespace hyalba {

std::string_view to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::PropVar:
      return "PropVar";
    case SymbolKind::StateVar:
      return "StateVar";
    case SymbolKind::Nominal:
      return "Nominal";
  }
  return "?";
}

std::string to_string(const Symbol& s) {
  if (s.is_nominal()) return "'" + s.name;
  return s.name;
}

void FreshContext::observe(const Symbol& s) {
  symbols_.insert(s);
  names_.emplace(s.kind, s.name);
}

void FreshContext::observe(const Formula& f) {
  for (const auto& s : all_symbols(f)) observe(s);
}

bool FreshContext::contains(const Symbol& s) const { return symbols_.contains(s); }

bool FreshContext::name_taken(SymbolKind kind, std::string_view name) const {
  return names_.contains({kind, std::string(name)});
}

Symbol FreshContext::fresh(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Nominal:
      // The first two nominals of a run are the first-approximation pair.
      if (nominals_issued_ < 2) return fresh(kind, "i", 0);
      return fresh(kind, "j", 1);
    case SymbolKind::StateVar:
      return fresh(kind, "x", 1);
    case SymbolKind::PropVar:
      return fresh(kind, "q", 1);
  }
  return fresh(kind, "s", 1);
}

Symbol FreshContext::fresh(SymbolKind kind, std::string_view base, std::uint32_t start) {
  std::uint32_t k = start;
  std::string name;
  do {
    name = std::string(base) + std::to_string(k++);
  } while (name_taken(kind, name));
  Symbol s{kind, name, ++serial_};
  if (kind == SymbolKind::Nominal) ++nominals_issued_;
  observe(s);
  return s;
}

}  // namespace hyalba
