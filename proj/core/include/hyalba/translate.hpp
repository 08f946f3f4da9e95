#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyalba/formula.hpp"
#include "hyalba/semantics.hpp"

namespace hyalba {

// Clause order used when an inequality matches several shapes.
enum class TrClause : std::uint8_t { AtNominal, AtStateVar, NotAtNominal, NotAtStateVar };

// First matching clause of i <= g, x <= g, g <= ~i, g <= ~x; nullopt if none.
std::optional<TrClause> tr_clause(const Inequality& ineq);

// Throws ShapeError on an inequality of none of the four shapes.
Formula tr_ineq(const Inequality& ineq);
// Conjunction of the antecedent translations implying ~@i j; the conclusion
// must be i <= ~j.
Formula tr_quasi(const QuasiInequality& q);
// Conjunction in list order; T when empty.
Formula tr_quasiset(const std::vector<QuasiInequality>& qs);

struct TrMismatch {
  std::string model;
  bool item_holds = false;
  bool translation_holds = false;
};

struct TrReport {
  std::uint64_t checked = 0;
  std::vector<TrMismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

// Exhaustive over every model with <= max_worlds worlds.
TrReport verify_tr_equivalence(const Inequality& ineq, std::size_t max_worlds, const EnumerationLimits& limits = {});
TrReport verify_tr_equivalence(const QuasiInequality& q, std::size_t max_worlds, const EnumerationLimits& limits = {});
TrReport verify_tr_equivalence(const std::vector<QuasiInequality>& qs, std::size_t max_worlds,
                               const EnumerationLimits& limits = {});

// Over `samples` random models with <= max_worlds worlds.
TrReport verify_tr_equivalence_sampled(const std::vector<QuasiInequality>& qs, std::size_t samples,
                                       std::size_t max_worlds, std::uint64_t seed);

}  // namespace hyalba
