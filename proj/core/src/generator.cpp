#include "hyalba/generator.hpp"

#include <string>
#include <vector>

namespace hyalba {

namespace {

const char* const kBinderNames[] = {"x", "y", "z", "u", "v", "w"};

class Builder {
 public:
  Builder(std::mt19937_64& rng, std::size_t n_props, std::size_t n_noms, const OrderType* eps)
      : rng_(rng), eps_(eps) {
    for (std::size_t k = 1; k <= n_props; ++k) props_.push_back(Symbol::prop("p" + std::to_string(k)));
    for (std::size_t k = 1; k <= n_noms; ++k) noms_.push_back(Symbol::nominal("n" + std::to_string(k)));
  }

  const std::vector<Symbol>& props() const { return props_; }

  // `critical_ok`: a critical leaf may appear here (every ancestor skeletal).
  Formula node(Sign s, std::size_t depth, bool critical_ok, double leaf_bias, double free_bias) {
    if (depth == 0 || coin(leaf_bias)) return leaf(s, critical_ok);
    bool skeletal_pick = critical_ok && !coin(free_bias);
    Connective c = skeletal_pick ? pick_skeletal(s) : pick_any();
    if (c == Connective::Binder && bound_.size() >= std::size(kBinderNames)) c = Connective::Not;
    if (c == Connective::AtNominal && bound_.empty() && noms_.empty()) c = Connective::Not;
    bool keep = critical_ok && is_skeletal_node(c, s);
    auto sub = [&](Sign cs) { return node(cs, depth - 1, keep, leaf_bias, free_bias); };
    switch (c) {
      case Connective::Not:
        return Formula::negation(sub(flip(s)));
      case Connective::Or:
        return Formula::disjunction(sub(s), sub(s));
      case Connective::And:
        return Formula::conjunction(sub(s), sub(s));
      case Connective::Implies: {
        Formula a = sub(flip(s));
        return Formula::implication(a, sub(s));
      }
      case Connective::Diamond:
        return Formula::diamond(sub(s));
      case Connective::Box:
        return Formula::box(sub(s));
      case Connective::Binder: {
        Symbol x = Symbol::state(kBinderNames[bound_.size()]);
        bound_.push_back(x);
        Formula body = sub(s);
        bound_.pop_back();
        return Formula::binder(x, body);
      }
      case Connective::AtNominal: {
        // @ over a bound variable when one is in scope, otherwise a nominal.
        std::vector<Symbol> terms = bound_;
        terms.insert(terms.end(), noms_.begin(), noms_.end());
        Symbol t = terms[uniform(terms.size())];
        return Formula::at(t, sub(s));
      }
      default:
        return leaf(s, critical_ok);
    }
  }

 private:
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Connective pick_skeletal(Sign s) {
    static const Connective plus[] = {Connective::Or,     Connective::And,       Connective::Diamond,
                                      Connective::Not,    Connective::Binder,    Connective::AtNominal};
    static const Connective minus[] = {Connective::And,    Connective::Or,        Connective::Box,    Connective::Not,
                                       Connective::Binder, Connective::AtNominal, Connective::Implies};
    return s == Sign::Plus ? plus[uniform(std::size(plus))] : minus[uniform(std::size(minus))];
  }

  Connective pick_any() {
    static const Connective all[] = {Connective::Not,     Connective::Or,  Connective::And,    Connective::Implies,
                                     Connective::Diamond, Connective::Box, Connective::Binder, Connective::AtNominal};
    return all[uniform(std::size(all))];
  }

  Formula leaf(Sign s, bool critical_ok) {
    // Weighted: props, then bound variables, nominals and constants.
    std::vector<Formula> options;
    for (const auto& p : props_) {
      Formula f = Formula::prop(p);
      if (eps_ == nullptr || critical_ok || !is_critical_leaf(f, s, *eps_)) {
        options.push_back(f);
        options.push_back(f);
      }
    }
    for (const auto& x : bound_) options.push_back(Formula::state(x));
    for (const auto& i : noms_) options.push_back(Formula::nominal(i));
    if (options.empty() || coin(0.1)) return coin(0.5) ? Formula::top() : Formula::bottom();
    return options[uniform(options.size())];
  }

  std::mt19937_64& rng_;
  const OrderType* eps_;
  std::vector<Symbol> props_;
  std::vector<Symbol> noms_;
  std::vector<Symbol> bound_;
};

}  // namespace

GeneratedFormula random_skeletal(std::mt19937_64& rng, const GeneratorOptions& options) {
  std::size_t n_props = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(options.max_props, 1))(rng);
  std::size_t n_noms = std::uniform_int_distribution<std::size_t>(0, options.max_nominals)(rng);
  std::vector<Symbol> vars;
  std::vector<Epsilon> values;
  for (std::size_t k = 1; k <= n_props; ++k) {
    vars.push_back(Symbol::prop("p" + std::to_string(k)));
    values.push_back(std::bernoulli_distribution(0.5)(rng) ? Epsilon::One : Epsilon::Partial);
  }
  OrderType eps(vars, values);
  Builder b(rng, n_props, n_noms, &eps);
  // The implication root is not part of either side's tree; depth counts it.
  const std::size_t depth = options.max_depth > 0 ? options.max_depth - 1 : 0;
  Formula lhs = b.node(Sign::Plus, depth, true, options.leaf_bias, options.free_bias);
  Formula rhs = b.node(Sign::Minus, depth, true, options.leaf_bias, options.free_bias);
  Formula f = Formula::implication(lhs, rhs);
  // Variables that did not make it into the formula are dropped from eps.
  return {f, eps.restricted(hyalba::props(Inequality{lhs, rhs}))};
}

Formula random_formula(std::mt19937_64& rng, std::size_t max_depth, std::size_t max_props, std::size_t max_nominals,
                       bool sentence) {
  Builder b(rng, std::max<std::size_t>(max_props, 1), max_nominals, nullptr);
  Formula f = b.node(Sign::Plus, max_depth, true, 0.25, 1.0);
  if (!sentence && std::bernoulli_distribution(0.3)(rng)) {
    f = Formula::conjunction(f, Formula::diamond(Formula::state(Symbol::state("x"))));
  }
  return f;
}

}  // namespace hyalba
