#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyalba/classify.hpp"
#include "hyalba/formula.hpp"
#include "hyalba/symbol.hpp"

namespace hyalba {

// One rule application. Replaying removes every consumed inequality and
// inserts the produced ones where the first consumed one stood.
struct Step {
  std::string rule;
  std::vector<Inequality> consumed;
  std::vector<Inequality> produced;
  // Id of the schema in the axiom catalogue licensing the step.
  std::string justification;
  // Nominals minted by this step.
  std::vector<Symbol> introduced;
};

// Inequalities in flight for one preprocessed inequality, anchored by the
// first-approximation nominals.
struct System {
  std::vector<Inequality> inequalities;
  Symbol i0;
  Symbol i1;
  std::size_t origin = 0;
};

struct SystemTrace {
  std::size_t origin = 0;
  Inequality source;
  // Starts with the first approximation; replay from {source} yields `final`.
  std::vector<Step> steps;
  System final;
};

struct AlbaTrace {
  Inequality input;
  std::vector<Step> preprocess;
  std::vector<Inequality> preprocessed;
  std::vector<SystemTrace> systems;
};

enum class AlbaStatus : std::uint8_t { Success, Failure };
std::string_view to_string(AlbaStatus s);

struct AlbaResult {
  AlbaStatus status = AlbaStatus::Failure;
  // The order-type the run used; `skeletal` says whether the input is
  // skeletal Sahlqvist for it.
  OrderType order_type;
  bool skeletal = false;
  std::vector<QuasiInequality> pure;
  AlbaTrace trace;

  // Failure details.
  std::optional<std::size_t> stuck_system;
  std::vector<Symbol> unresolved;
  std::string reason;

  bool ok() const noexcept { return status == AlbaStatus::Success; }
};

struct AlbaOptions {
  std::optional<OrderType> eps;
  std::size_t step_budget = 10'000;
  // Post-hoc T/F simplification of the output.
  bool simplify = false;
  // Assert the anchor shape after every reduction step and freshness at
  // every introduction; violations throw EngineError.
  bool check_invariants = true;
};

// Left side is a nominal or state variable, or right side is ~nominal / ~state variable.
bool has_anchor_shape(const Inequality& ineq);

// Distribution, then splitting, then monotone/antitone variable elimination,
// each to fixpoint. Steps are appended to `steps` when given.
std::vector<Inequality> preprocess(const Inequality& ineq, std::vector<Step>* steps = nullptr,
                                   std::size_t step_budget = 10'000);

// {i0 <= lhs, rhs <= ~i1} with i0, i1 minted from `ctx`.
System first_approximation(const Inequality& ineq, FreshContext& ctx, std::size_t origin = 0,
                           Step* step = nullptr);

// Splitting, approximation and residuation rules until no inequality has an
// eps-critical leaf left to expose.
System reduce_substage1(System sys, const OrderType& eps, FreshContext& ctx, std::vector<Step>* steps = nullptr,
                        std::size_t step_budget = 10'000, bool check_invariants = true);

enum class AckermannSide : std::uint8_t { Right, Left };

// Eliminates p with its minimal (Right) or maximal (Left) valuation.
// Throws PolarityError naming the offending inequality.
System ackermann(const System& sys, const Symbol& p, AckermannSide side, Step* step = nullptr);

// Stage 3: one quasi-inequality per system, free state variables replaced by
// fresh nominals from the matching context.
std::vector<QuasiInequality> finalize(const std::vector<System>& systems, std::vector<FreshContext>& contexts);
QuasiInequality finalize(const System& sys, FreshContext& ctx);

AlbaResult run(const Formula& input, const AlbaOptions& options = {});

std::vector<Inequality> apply_step(const std::vector<Inequality>& system, const Step& step);
std::vector<Inequality> replay(const std::vector<Inequality>& initial, const std::vector<Step>& steps);

// T/F simplification; semantics preserving.
Formula simplify_constants(const Formula& f);
// Also drops antecedents that became trivially true.
QuasiInequality simplify_constants(const QuasiInequality& q);

}  // namespace hyalba
