#include "hyalba/translate.hpp"

#include "hyalba/errors.hpp"
#include "hyalba/syntax.hpp"

namespace hyalba {

std::optional<TrClause> tr_clause(const Inequality& ineq) {
  if (ineq.lhs.op() == Connective::Nominal) return TrClause::AtNominal;
  if (ineq.lhs.op() == Connective::StateVar) return TrClause::AtStateVar;
  if (ineq.rhs.is_negated_term()) {
    return ineq.rhs.child().op() == Connective::Nominal ? TrClause::NotAtNominal : TrClause::NotAtStateVar;
  }
  return std::nullopt;
}

Formula tr_ineq(const Inequality& ineq) {
  auto clause = tr_clause(ineq);
  if (!clause) throw ShapeError("cannot translate " + print(ineq) + ": no nominal or state variable anchor");
  switch (*clause) {
    case TrClause::AtNominal:
    case TrClause::AtStateVar:
      return Formula::at(ineq.lhs.symbol(), ineq.rhs);
    case TrClause::NotAtNominal:
    case TrClause::NotAtStateVar:
      return Formula::negation(Formula::at(ineq.rhs.child().symbol(), ineq.lhs));
  }
  throw ShapeError("unreachable");
}

Formula tr_quasi(const QuasiInequality& q) {
  const auto& c = q.conclusion;
  if (c.lhs.op() != Connective::Nominal || !c.rhs.is_negated_term() || c.rhs.child().op() != Connective::Nominal) {
    throw ShapeError("quasi-inequality conclusion must be 'i <= ~'j, got " + print(c));
  }
  std::vector<Formula> parts;
  for (const auto& a : q.antecedents) parts.push_back(tr_ineq(a));
  Formula conclusion = Formula::negation(Formula::at(c.lhs.symbol(), c.rhs.child()));
  return Formula::implication(Formula::conjunction_of(parts), conclusion);
}

Formula tr_quasiset(const std::vector<QuasiInequality>& qs) {
  std::vector<Formula> parts;
  for (const auto& q : qs) parts.push_back(tr_quasi(q));
  return Formula::conjunction_of(parts);
}

namespace {

template <class Holds>
TrReport check_all(const Signature& sig, std::size_t max_worlds, const EnumerationLimits& limits,
                   const Formula& translation, Holds holds) {
  TrReport report;
  for_each_model(
      sig, max_worlds,
      [&](const ModelInstance& mi) {
        bool a = holds(mi);
        bool b = globally_true(mi.model, mi.assignment, translation);
        ++report.checked;
        if (a != b) report.mismatches.push_back({format_model(mi.model, mi.assignment), a, b});
        return report.mismatches.size() < 10;
      },
      limits);
  return report;
}

bool holds_all(const ModelInstance& mi, const std::vector<QuasiInequality>& qs) {
  for (const auto& q : qs) {
    if (!holds_quasi(mi.model, mi.assignment, q)) return false;
  }
  return true;
}

}  // namespace

TrReport verify_tr_equivalence(const Inequality& ineq, std::size_t max_worlds, const EnumerationLimits& limits) {
  return check_all(signature_of(ineq), max_worlds, limits, tr_ineq(ineq),
                   [&](const ModelInstance& mi) { return holds_inequality(mi.model, mi.assignment, ineq); });
}

TrReport verify_tr_equivalence(const QuasiInequality& q, std::size_t max_worlds, const EnumerationLimits& limits) {
  return check_all(signature_of(q), max_worlds, limits, tr_quasi(q),
                   [&](const ModelInstance& mi) { return holds_quasi(mi.model, mi.assignment, q); });
}

TrReport verify_tr_equivalence(const std::vector<QuasiInequality>& qs, std::size_t max_worlds,
                               const EnumerationLimits& limits) {
  return check_all(signature_of(qs), max_worlds, limits, tr_quasiset(qs),
                   [&](const ModelInstance& mi) { return holds_all(mi, qs); });
}

TrReport verify_tr_equivalence_sampled(const std::vector<QuasiInequality>& qs, std::size_t samples,
                                       std::size_t max_worlds, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Signature sig = signature_of(qs);
  const Formula translation = tr_quasiset(qs);
  TrReport report;
  for (std::size_t k = 0; k < samples; ++k) {
    ModelInstance mi = random_model(rng, sig, max_worlds);
    bool a = holds_all(mi, qs);
    bool b = globally_true(mi.model, mi.assignment, translation);
    ++report.checked;
    if (a != b) report.mismatches.push_back({format_model(mi.model, mi.assignment), a, b});
  }
  return report;
}

}  // namespace hyalba
