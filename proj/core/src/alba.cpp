#include "hyalba/alba.hpp"

#include <algorithm>
#include <functional>

#include "hyalba/errors.hpp"
#include "hyalba/syntax.hpp"

namespace hyalba {

std::string_view to_string(AlbaStatus s) { return s == AlbaStatus::Success ? "success" : "failure"; }

bool has_anchor_shape(const Inequality& ineq) { return ineq.lhs.is_term() || ineq.rhs.is_negated_term(); }

std::vector<Inequality> apply_step(const std::vector<Inequality>& system, const Step& step) {
  std::vector<Inequality> out = system;
  std::optional<std::size_t> insert_at;
  for (const auto& c : step.consumed) {
    auto it = std::find(out.begin(), out.end(), c);
    if (it == out.end()) throw EngineError("step '" + step.rule + "' consumes " + print(c) + ", which is not present");
    auto pos = static_cast<std::size_t>(it - out.begin());
    out.erase(it);
    if (!insert_at || pos < *insert_at) insert_at = pos;
  }
  std::size_t at = insert_at.value_or(out.size());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), step.produced.begin(), step.produced.end());
  return out;
}

std::vector<Inequality> replay(const std::vector<Inequality>& initial, const std::vector<Step>& steps) {
  std::vector<Inequality> cur = initial;
  for (const auto& s : steps) cur = apply_step(cur, s);
  return cur;
}

namespace {

Formula neg(const Formula& f) { return Formula::negation(f); }
Formula term(const Symbol& s) { return Formula::atom(s); }

void check_budget(std::size_t used, std::size_t budget, const char* where) {
  if (used > budget) {
    throw EngineError(std::string("step budget of ") + std::to_string(budget) + " exhausted in " + where);
  }
}

// ---- distribution --------------------------------------------------------------

struct Rewrite {
  Formula result;
  std::string tag;
};

// Redex rooted at f (sign s) with its +| / -& child moved above f.
std::optional<Rewrite> distribute_here(const Formula& f, Sign s) {
  auto is_or = [](const Formula& g) { return g.op() == Connective::Or; };
  auto is_and = [](const Formula& g) { return g.op() == Connective::And; };
  if (s == Sign::Plus) {
    switch (f.op()) {
      case Connective::Diamond:
        if (is_or(f.child())) {
          return Rewrite{Formula::disjunction(Formula::diamond(f.child().left()), Formula::diamond(f.child().right())),
                         "DistDiamondOr"};
        }
        break;
      case Connective::Binder:
        if (is_or(f.child())) {
          return Rewrite{Formula::disjunction(Formula::binder(f.symbol(), f.child().left()),
                                              Formula::binder(f.symbol(), f.child().right())),
                         "DistBinderOr"};
        }
        break;
      case Connective::AtNominal:
      case Connective::AtStateVar:
        if (is_or(f.child())) {
          return Rewrite{Formula::disjunction(Formula::at(f.symbol(), f.child().left()),
                                              Formula::at(f.symbol(), f.child().right())),
                         "DistAtOr"};
        }
        break;
      case Connective::And:
        if (is_or(f.left())) {
          const Formula& c = f.right();
          return Rewrite{Formula::disjunction(Formula::conjunction(f.left().left(), c),
                                              Formula::conjunction(f.left().right(), c)),
                         "DistAndOr"};
        }
        if (is_or(f.right())) {
          const Formula& c = f.left();
          return Rewrite{Formula::disjunction(Formula::conjunction(c, f.right().left()),
                                              Formula::conjunction(c, f.right().right())),
                         "DistAndOr"};
        }
        break;
      case Connective::Not:
        if (is_and(f.child())) {
          return Rewrite{Formula::disjunction(neg(f.child().left()), neg(f.child().right())), "DistNotAnd"};
        }
        break;
      default:
        break;
    }
    return std::nullopt;
  }
  switch (f.op()) {
    case Connective::Not:
      if (is_or(f.child())) {
        return Rewrite{Formula::conjunction(neg(f.child().left()), neg(f.child().right())), "DistNotOr"};
      }
      break;
    case Connective::Implies:
      if (is_or(f.left())) {
        const Formula& c = f.right();
        return Rewrite{Formula::conjunction(Formula::implication(f.left().left(), c),
                                            Formula::implication(f.left().right(), c)),
                       "DistImpliesOr"};
      }
      if (is_and(f.right())) {
        const Formula& c = f.left();
        return Rewrite{Formula::conjunction(Formula::implication(c, f.right().left()),
                                            Formula::implication(c, f.right().right())),
                       "DistImpliesAnd"};
      }
      break;
    case Connective::Box:
      if (is_and(f.child())) {
        return Rewrite{Formula::conjunction(Formula::box(f.child().left()), Formula::box(f.child().right())),
                       "DistBoxAnd"};
      }
      break;
    case Connective::Binder:
      if (is_and(f.child())) {
        return Rewrite{Formula::conjunction(Formula::binder(f.symbol(), f.child().left()),
                                            Formula::binder(f.symbol(), f.child().right())),
                       "DistBinderAnd"};
      }
      break;
    case Connective::AtNominal:
    case Connective::AtStateVar:
      if (is_and(f.child())) {
        return Rewrite{Formula::conjunction(Formula::at(f.symbol(), f.child().left()),
                                            Formula::at(f.symbol(), f.child().right())),
                       "DistAtAnd"};
      }
      break;
    case Connective::Or:
      if (is_and(f.left())) {
        const Formula& c = f.right();
        return Rewrite{Formula::conjunction(Formula::disjunction(f.left().left(), c),
                                            Formula::disjunction(f.left().right(), c)),
                       "DistOrAnd"};
      }
      if (is_and(f.right())) {
        const Formula& c = f.left();
        return Rewrite{Formula::conjunction(Formula::disjunction(c, f.right().left()),
                                            Formula::disjunction(c, f.right().right())),
                       "DistOrAnd"};
      }
      break;
    default:
      break;
  }
  return std::nullopt;
}

// Innermost redex first: children (left to right) before the node itself.
std::optional<Rewrite> distribute_once(const Formula& f, Sign s) {
  if (f.is_atom()) return std::nullopt;
  auto kids = f.children();
  for (std::size_t k = 0; k < kids.size(); ++k) {
    Sign cs = s;
    if (f.op() == Connective::Not || (f.op() == Connective::Implies && k == 0)) cs = flip(s);
    if (auto r = distribute_once(kids[k], cs)) {
      kids[k] = r->result;
      return Rewrite{f.with_children(kids), r->tag};
    }
  }
  return distribute_here(f, s);
}

// ---- substage 1 ------------------------------------------------------------------

bool has_critical_leaf(const Formula& f, Sign s, const OrderType& eps) {
  if (f.is_atom()) return is_critical_leaf(f, s, eps);
  auto kids = f.children();
  for (std::size_t k = 0; k < kids.size(); ++k) {
    Sign cs = s;
    if (f.op() == Connective::Not || (f.op() == Connective::Implies && k == 0)) cs = flip(s);
    if (has_critical_leaf(kids[k], cs, eps)) return true;
  }
  return false;
}

bool occurs_in(const std::vector<Inequality>& sys, const Symbol& s) {
  return std::any_of(sys.begin(), sys.end(),
                     [&](const Inequality& i) { return occurs(i.lhs, s) || occurs(i.rhs, s); });
}

class Reducer {
 public:
  Reducer(System& sys, const OrderType& eps, FreshContext& ctx, std::vector<Step>* steps, bool check)
      : sys_(sys), eps_(eps), ctx_(ctx), steps_(steps), check_(check) {}

  // Rewrites the inequality at `k` if a rule applies; returns false otherwise.
  bool try_rule(std::size_t k) {
    const Inequality ineq = sys_.inequalities[k];
    std::optional<Step> step;
    if (ineq.lhs.is_term()) {
      if (!ineq.rhs.is_atom() && has_critical_leaf(ineq.rhs, Sign::Plus, eps_)) step = left_rule(ineq);
    } else if (ineq.rhs.is_negated_term()) {
      if (!ineq.lhs.is_atom() && has_critical_leaf(ineq.lhs, Sign::Minus, eps_)) step = right_rule(ineq);
    } else {
      throw EngineError("inequality without anchor in reduction: " + print(ineq));
    }
    if (!step) return false;
    auto& v = sys_.inequalities;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(k), step->produced.begin(), step->produced.end());
    if (check_) {
      for (const auto& p : step->produced) {
        if (!has_anchor_shape(p)) throw EngineError("shape invariant broken by '" + step->rule + "': " + print(p));
      }
    }
    if (steps_ != nullptr) steps_->push_back(std::move(*step));
    return true;
  }

 private:
  Symbol mint() {
    Symbol j = ctx_.fresh(SymbolKind::Nominal);
    if (check_ && occurs_in(sys_.inequalities, j)) {
      throw EngineError("minted nominal " + to_string(j) + " already occurs in the system");
    }
    return j;
  }

  Step make(std::string rule, const Inequality& from, std::vector<Inequality> to, std::string tag,
            std::vector<Symbol> introduced = {}) {
    return Step{std::move(rule), {from}, std::move(to), std::move(tag), std::move(introduced)};
  }

  // a <= alpha, alpha signed +.
  std::optional<Step> left_rule(const Inequality& ineq) {
    const Formula& a = ineq.lhs;
    const Formula& f = ineq.rhs;
    switch (f.op()) {
      case Connective::And:
        return make("split-and", ineq, {{a, f.left()}, {a, f.right()}}, "AtAnd");
      case Connective::Diamond: {
        Symbol j = mint();
        return make("approx-diamond", ineq, {{a, Formula::diamond(term(j))}, {term(j), f.child()}}, "DiamondWitness",
                    {j});
      }
      case Connective::AtNominal:
      case Connective::AtStateVar:
        return make("approx-at", ineq, {{term(f.symbol()), f.child()}}, "Agree");
      case Connective::Binder:
        return make("approx-binder", ineq, {{a, replace_state_var(f.child(), f.symbol(), a.symbol())}}, "DA");
      case Connective::Not:
        return make("residuate", ineq, {{f.child(), neg(a)}}, "Selfdual");
      default:
        return std::nullopt;
    }
  }

  // alpha <= ~a, alpha signed -.
  std::optional<Step> right_rule(const Inequality& ineq) {
    const Formula& f = ineq.lhs;
    const Formula& na = ineq.rhs;
    const Symbol& a = na.child().symbol();
    switch (f.op()) {
      case Connective::Or:
        return make("split-or", ineq, {{f.left(), na}, {f.right(), na}}, "NotAtOr");
      case Connective::Box: {
        Symbol j = mint();
        return make("approx-box", ineq, {{Formula::box(neg(term(j))), na}, {f.child(), neg(term(j))}},
                    "DiamondWitness", {j});
      }
      case Connective::AtNominal:
      case Connective::AtStateVar:
        return make("approx-at", ineq, {{f.child(), neg(term(f.symbol()))}}, "Agree");
      case Connective::Binder:
        return make("approx-binder", ineq, {{replace_state_var(f.child(), f.symbol(), a), na}}, "DA");
      case Connective::Not:
        return make("residuate", ineq, {{term(a), f.child()}}, "Selfdual");
      case Connective::Implies: {
        Symbol j = mint();
        Symbol k = mint();
        return make("approx-implies", ineq,
                    {{Formula::implication(term(j), neg(term(k))), na}, {term(j), f.left()}, {f.right(), neg(term(k))}},
                    "ImpliesWitness", {j, k});
      }
      default:
        return std::nullopt;
    }
  }

  System& sys_;
  const OrderType& eps_;
  FreshContext& ctx_;
  std::vector<Step>* steps_;
  bool check_;
};

std::vector<Symbol> system_props(const std::vector<Inequality>& sys) {
  std::vector<Symbol> out;
  for (const auto& i : sys) {
    for (const auto& p : props(i)) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  return out;
}

}  // namespace

// ---- stage 1 ---------------------------------------------------------------------

std::vector<Inequality> preprocess(const Inequality& ineq, std::vector<Step>* steps, std::size_t step_budget) {
  std::vector<Inequality> cur{ineq};
  std::size_t used = 0;
  auto record = [&](Step s) {
    ++used;
    check_budget(used, step_budget, "preprocessing");
    cur = apply_step(cur, s);
    if (steps != nullptr) steps->push_back(std::move(s));
  };

  // Distribution, one innermost redex per step.
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& i : cur) {
      if (auto r = distribute_once(i.lhs, Sign::Plus)) {
        record(Step{"distribute", {i}, {{r->result, i.rhs}}, r->tag, {}});
        changed = true;
        break;
      }
      if (auto r = distribute_once(i.rhs, Sign::Minus)) {
        record(Step{"distribute", {i}, {{i.lhs, r->result}}, r->tag, {}});
        changed = true;
        break;
      }
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& i : cur) {
      if (i.lhs.op() == Connective::Or) {
        record(Step{"split-join", {i}, {{i.lhs.left(), i.rhs}, {i.lhs.right(), i.rhs}}, "SplitJoin", {}});
        changed = true;
        break;
      }
      if (i.rhs.op() == Connective::And) {
        record(Step{"split-meet", {i}, {{i.lhs, i.rhs.left()}, {i.lhs, i.rhs.right()}}, "SplitMeet", {}});
        changed = true;
        break;
      }
    }
  }

  // Monotone / antitone elimination: every occurrence of p in (+lhs, -rhs)
  // carries the same sign.
  for (std::size_t k = 0; k < cur.size(); ++k) {
    for (const auto& p : props(cur[k])) {
      const Inequality i = cur[k];
      Polarity l = polarity(i.lhs, p);
      Polarity r = polarity(i.rhs, p);
      bool all_plus = (l == Polarity::Positive || l == Polarity::Absent) &&
                      (r == Polarity::Negative || r == Polarity::Absent);
      bool all_minus = (l == Polarity::Negative || l == Polarity::Absent) &&
                       (r == Polarity::Positive || r == Polarity::Absent);
      if (!all_plus && !all_minus) continue;
      Formula value = all_plus ? Formula::top() : Formula::bottom();
      Inequality out{substitute_prop(i.lhs, p, value), substitute_prop(i.rhs, p, value)};
      record(Step{all_plus ? "eliminate-top" : "eliminate-bottom", {i}, {out}, "VarElim", {}});
    }
  }
  return cur;
}

System first_approximation(const Inequality& ineq, FreshContext& ctx, std::size_t origin, Step* step) {
  ctx.observe(ineq.lhs);
  ctx.observe(ineq.rhs);
  System sys;
  sys.i0 = ctx.fresh(SymbolKind::Nominal);
  sys.i1 = ctx.fresh(SymbolKind::Nominal);
  sys.origin = origin;
  sys.inequalities = {{term(sys.i0), ineq.lhs}, {ineq.rhs, neg(term(sys.i1))}};
  if (step != nullptr) *step = Step{"first-approximation", {ineq}, sys.inequalities, "Trans", {sys.i0, sys.i1}};
  return sys;
}

// ---- stage 2 ---------------------------------------------------------------------

System reduce_substage1(System sys, const OrderType& eps, FreshContext& ctx, std::vector<Step>* steps,
                        std::size_t step_budget, bool check_invariants) {
  for (const auto& i : sys.inequalities) {
    ctx.observe(i.lhs);
    ctx.observe(i.rhs);
  }
  Reducer reducer(sys, eps, ctx, steps, check_invariants);
  std::size_t used = 0;
  // Everything before `k` is saturated; a rewrite only touches position k.
  std::size_t k = 0;
  while (k < sys.inequalities.size()) {
    if (reducer.try_rule(k)) {
      check_budget(++used, step_budget, "reduction");
    } else {
      ++k;
    }
  }
  return sys;
}

System ackermann(const System& sys, const Symbol& p, AckermannSide side, Step* step) {
  std::vector<Inequality> defining;
  std::vector<Inequality> touched;
  std::vector<Formula> anchors;
  const Formula pf = Formula::prop(p);
  for (const auto& i : sys.inequalities) {
    bool defines = side == AckermannSide::Right ? (i.lhs.is_term() && i.rhs == pf)
                                                : (i.lhs == pf && i.rhs.is_negated_term());
    if (defines) {
      defining.push_back(i);
      anchors.push_back(side == AckermannSide::Right ? i.lhs : i.rhs);
      continue;
    }
    if (!occurs(i.lhs, p) && !occurs(i.rhs, p)) continue;
    // Right: gamma in a <= gamma negative, beta in beta <= ~k positive. Left: the reverse.
    bool ok = false;
    if (i.lhs.is_term()) {
      Polarity pol = polarity(i.rhs, p);
      ok = pol == (side == AckermannSide::Right ? Polarity::Negative : Polarity::Positive);
    } else if (i.rhs.is_negated_term()) {
      Polarity pol = polarity(i.lhs, p);
      ok = pol == (side == AckermannSide::Right ? Polarity::Positive : Polarity::Negative);
    }
    if (!ok) {
      throw PolarityError(std::string(side == AckermannSide::Right ? "right" : "left") +
                          " Ackermann rule for " + to_string(p) + " blocked by " + print(i));
    }
    touched.push_back(i);
  }
  Formula value = side == AckermannSide::Right ? Formula::disjunction_of(anchors) : Formula::conjunction_of(anchors);
  Step s{side == AckermannSide::Right ? "ackermann-right" : "ackermann-left",
         {},
         {},
         side == AckermannSide::Right ? "NamesDisj" : "NamesConj",
         {}};
  for (const auto& i : sys.inequalities) {
    if (std::find(defining.begin(), defining.end(), i) != defining.end() ||
        std::find(touched.begin(), touched.end(), i) != touched.end()) {
      s.consumed.push_back(i);
    }
  }
  for (const auto& i : touched) s.produced.push_back({substitute_prop(i.lhs, p, value), substitute_prop(i.rhs, p, value)});
  System out = sys;
  out.inequalities = apply_step(sys.inequalities, s);
  if (step != nullptr) *step = std::move(s);
  return out;
}

// ---- stage 3 ---------------------------------------------------------------------

QuasiInequality finalize(const System& sys, FreshContext& ctx) {
  if (!system_props(sys.inequalities).empty()) {
    throw EngineError("finalize called on a system that still has propositional variables");
  }
  QuasiInequality q{sys.inequalities, {term(sys.i0), neg(term(sys.i1))}};
  for (const auto& x : free_state_vars(q)) {
    Symbol j = ctx.fresh(SymbolKind::Nominal);
    for (auto& a : q.antecedents) a = {replace_state_var(a.lhs, x, j), replace_state_var(a.rhs, x, j)};
  }
  return q;
}

std::vector<QuasiInequality> finalize(const std::vector<System>& systems, std::vector<FreshContext>& contexts) {
  if (systems.size() != contexts.size()) throw PreconditionError("finalize needs one context per system");
  std::vector<QuasiInequality> out;
  for (std::size_t k = 0; k < systems.size(); ++k) out.push_back(finalize(systems[k], contexts[k]));
  return out;
}

// ---- simplification ------------------------------------------------------------

Formula simplify_constants(const Formula& f) {
  if (f.is_atom()) return f;
  std::vector<Formula> kids;
  for (const auto& c : f.children()) kids.push_back(simplify_constants(c));
  auto is_top = [](const Formula& g) { return g.op() == Connective::Top; };
  auto is_bot = [](const Formula& g) { return g.op() == Connective::Bottom; };
  switch (f.op()) {
    case Connective::Not:
      if (is_top(kids[0])) return Formula::bottom();
      if (is_bot(kids[0])) return Formula::top();
      break;
    case Connective::And:
      if (is_bot(kids[0]) || is_bot(kids[1])) return Formula::bottom();
      if (is_top(kids[0])) return kids[1];
      if (is_top(kids[1])) return kids[0];
      break;
    case Connective::Or:
      if (is_top(kids[0]) || is_top(kids[1])) return Formula::top();
      if (is_bot(kids[0])) return kids[1];
      if (is_bot(kids[1])) return kids[0];
      break;
    case Connective::Implies:
      if (is_bot(kids[0]) || is_top(kids[1])) return Formula::top();
      if (is_top(kids[0])) return kids[1];
      if (is_bot(kids[1])) return simplify_constants(neg(kids[0]));
      break;
    case Connective::Diamond:
      if (is_bot(kids[0])) return Formula::bottom();
      break;
    case Connective::Box:
      if (is_top(kids[0])) return Formula::top();
      break;
    case Connective::AtNominal:
    case Connective::AtStateVar:
    case Connective::Binder:
      if (is_top(kids[0]) || is_bot(kids[0])) return kids[0];
      break;
    default:
      break;
  }
  return f.with_children(kids);
}

QuasiInequality simplify_constants(const QuasiInequality& q) {
  QuasiInequality out;
  for (const auto& a : q.antecedents) {
    Inequality s{simplify_constants(a.lhs), simplify_constants(a.rhs)};
    if (s.lhs.op() == Connective::Bottom || s.rhs.op() == Connective::Top || s.lhs == s.rhs) continue;
    out.antecedents.push_back(s);
  }
  out.conclusion = {simplify_constants(q.conclusion.lhs), simplify_constants(q.conclusion.rhs)};
  return out;
}

// ---- driver ----------------------------------------------------------------------

namespace {

AlbaResult run_with(const Inequality& ineq, const OrderType& eps, const AlbaOptions& options) {
  AlbaResult result;
  result.order_type = eps;
  result.skeletal = is_skeletal_sahlqvist(ineq, eps);
  result.trace.input = ineq;
  result.trace.preprocessed = preprocess(ineq, &result.trace.preprocess, options.step_budget);

  std::vector<System> finals;
  std::vector<FreshContext> contexts;
  for (std::size_t origin = 0; origin < result.trace.preprocessed.size(); ++origin) {
    const Inequality& source = result.trace.preprocessed[origin];
    FreshContext ctx;
    ctx.observe(ineq.lhs);
    ctx.observe(ineq.rhs);
    SystemTrace st;
    st.origin = origin;
    st.source = source;
    Step first;
    System sys = first_approximation(source, ctx, origin, &first);
    st.steps.push_back(std::move(first));
    sys = reduce_substage1(std::move(sys), eps, ctx, &st.steps, options.step_budget, options.check_invariants);

    for (auto remaining = system_props(sys.inequalities); !remaining.empty();
         remaining = system_props(sys.inequalities)) {
      const Symbol& p = remaining.front();
      if (!eps.contains(p)) throw EngineError("order-type lost track of " + to_string(p));
      AckermannSide side = eps.at(p) == Epsilon::One ? AckermannSide::Right : AckermannSide::Left;
      Step s;
      try {
        sys = ackermann(sys, p, side, &s);
      } catch (const PolarityError& e) {
        st.final = sys;
        result.trace.systems.push_back(std::move(st));
        result.status = AlbaStatus::Failure;
        result.stuck_system = origin;
        result.unresolved = remaining;
        result.reason = e.what();
        return result;
      } catch (const CaptureError& e) {
        st.final = sys;
        result.trace.systems.push_back(std::move(st));
        result.status = AlbaStatus::Failure;
        result.stuck_system = origin;
        result.unresolved = remaining;
        result.reason = e.what();
        return result;
      }
      if (options.check_invariants) {
        for (const auto& i : s.produced) {
          if (!has_anchor_shape(i)) throw EngineError("shape invariant broken by Ackermann step: " + print(i));
        }
      }
      st.steps.push_back(std::move(s));
      check_budget(st.steps.size(), options.step_budget, "the Ackermann stage");
    }
    st.final = sys;
    result.trace.systems.push_back(std::move(st));
    finals.push_back(std::move(sys));
    contexts.push_back(std::move(ctx));
  }

  result.pure = finalize(finals, contexts);
  if (options.simplify) {
    for (auto& q : result.pure) q = simplify_constants(q);
  }
  result.status = AlbaStatus::Success;
  return result;
}

}  // namespace

AlbaResult run(const Formula& input, const AlbaOptions& options) {
  const Inequality ineq = as_inequality(input);
  const auto vars = props(ineq);
  if (options.eps) {
    if (!options.eps->covers(vars)) throw PreconditionError("order-type does not cover every variable of the input");
    return run_with(ineq, options.eps->restricted(vars), options);
  }
  if (auto eps = find_order_type(ineq)) return run_with(ineq, *eps, options);

  // Not skeletal for any order-type: the rules may still go through.
  std::optional<AlbaResult> first_failure;
  const std::size_t n = vars.size();
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    std::vector<Epsilon> values(n);
    for (std::size_t v = 0; v < n; ++v) values[v] = ((k >> (n - 1 - v)) & 1U) ? Epsilon::Partial : Epsilon::One;
    AlbaResult r = run_with(ineq, OrderType(vars, std::move(values)), options);
    if (r.ok()) return r;
    if (!first_failure) first_failure = std::move(r);
  }
  return std::move(*first_failure);
}

}  // namespace hyalba
