#include "hyalba/formula.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hyalba/errors.hpp"

namespace hyalba {

namespace detail {

struct FormulaNode {
  Connective op;
  Symbol symbol;
  std::shared_ptr<const FormulaNode> first;
  std::shared_ptr<const FormulaNode> second;
  std::size_t size;
  std::size_t depth;
  std::size_t hash;
};

}  // namespace detail

namespace {

using NodePtr = std::shared_ptr<const detail::FormulaNode>;

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const NodePtr& top_node() {
  static const NodePtr node = std::make_shared<const detail::FormulaNode>(
      detail::FormulaNode{Connective::Top, Symbol{}, nullptr, nullptr, 1, 0,
                          mix(0, static_cast<std::size_t>(Connective::Top))});
  return node;
}

bool nodes_equal(const detail::FormulaNode* a, const detail::FormulaNode* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->hash != b->hash || a->op != b->op || a->size != b->size) return false;
  if (has_symbol(a->op) && a->symbol != b->symbol) return false;
  return nodes_equal(a->first.get(), b->first.get()) &&
         nodes_equal(a->second.get(), b->second.get());
}

}  // namespace

std::string_view to_string(Connective c) {
  switch (c) {
    case Connective::PropVar:
      return "PropVar";
    case Connective::StateVar:
      return "StateVar";
    case Connective::Nominal:
      return "Nominal";
    case Connective::Bottom:
      return "Bottom";
    case Connective::Top:
      return "Top";
    case Connective::Not:
      return "Not";
    case Connective::Or:
      return "Or";
    case Connective::And:
      return "And";
    case Connective::Implies:
      return "Implies";
    case Connective::Diamond:
      return "Diamond";
    case Connective::Box:
      return "Box";
    case Connective::AtNominal:
      return "AtNominal";
    case Connective::AtStateVar:
      return "AtStateVar";
    case Connective::Binder:
      return "Binder";
  }
  return "?";
}

Connective connective_from_string(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Connective::Binder); ++i) {
    auto c = static_cast<Connective>(i);
    if (to_string(c) == name) return c;
  }
  throw Error("unknown formula kind '" + std::string(name) + "'");
}

int arity(Connective c) noexcept {
  switch (c) {
    case Connective::PropVar:
    case Connective::StateVar:
    case Connective::Nominal:
    case Connective::Bottom:
    case Connective::Top:
      return 0;
    case Connective::Or:
    case Connective::And:
    case Connective::Implies:
      return 2;
    default:
      return 1;
  }
}

bool has_symbol(Connective c) noexcept {
  switch (c) {
    case Connective::PropVar:
    case Connective::StateVar:
    case Connective::Nominal:
    case Connective::AtNominal:
    case Connective::AtStateVar:
    case Connective::Binder:
      return true;
    default:
      return false;
  }
}

Formula::Formula() : node_(top_node()) {}

Formula Formula::make(Connective op, Symbol s, NodePtr a, NodePtr b) {
  std::size_t h = mix(0, static_cast<std::size_t>(op));
  if (has_symbol(op)) {
    h = mix(h, static_cast<std::size_t>(s.kind));
    h = mix(h, std::hash<std::string>{}(s.name));
    h = mix(h, s.index);
  } else {
    s = Symbol{};
  }
  std::size_t size = 1;
  std::size_t depth = 0;
  for (const auto* kid : {a.get(), b.get()}) {
    if (kid == nullptr) continue;
    h = mix(h, kid->hash);
    size += kid->size;
    depth = std::max(depth, kid->depth + 1);
  }
  return Formula(std::make_shared<const detail::FormulaNode>(
      detail::FormulaNode{op, std::move(s), std::move(a), std::move(b), size, depth, h}));
}

Formula Formula::prop(Symbol s) {
  if (!s.is_prop()) throw PreconditionError("expected a propositional variable, got " + to_string(s));
  return make(Connective::PropVar, std::move(s), nullptr, nullptr);
}

Formula Formula::state(Symbol s) {
  if (!s.is_state()) throw PreconditionError("expected a state variable, got " + to_string(s));
  return make(Connective::StateVar, std::move(s), nullptr, nullptr);
}

Formula Formula::nominal(Symbol s) {
  if (!s.is_nominal()) throw PreconditionError("expected a nominal, got " + to_string(s));
  return make(Connective::Nominal, std::move(s), nullptr, nullptr);
}

Formula Formula::atom(Symbol s) {
  switch (s.kind) {
    case SymbolKind::PropVar:
      return prop(std::move(s));
    case SymbolKind::StateVar:
      return state(std::move(s));
    case SymbolKind::Nominal:
      return nominal(std::move(s));
  }
  return prop(std::move(s));
}

Formula Formula::bottom() { return make(Connective::Bottom, {}, nullptr, nullptr); }
Formula Formula::top() { return Formula(top_node()); }
Formula Formula::negation(Formula f) { return make(Connective::Not, {}, std::move(f.node_), nullptr); }
Formula Formula::disjunction(Formula a, Formula b) {
  return make(Connective::Or, {}, std::move(a.node_), std::move(b.node_));
}
Formula Formula::conjunction(Formula a, Formula b) {
  return make(Connective::And, {}, std::move(a.node_), std::move(b.node_));
}
Formula Formula::implication(Formula a, Formula b) {
  return make(Connective::Implies, {}, std::move(a.node_), std::move(b.node_));
}
Formula Formula::diamond(Formula f) { return make(Connective::Diamond, {}, std::move(f.node_), nullptr); }
Formula Formula::box(Formula f) { return make(Connective::Box, {}, std::move(f.node_), nullptr); }

Formula Formula::at(Symbol term, Formula f) {
  if (term.is_nominal()) return make(Connective::AtNominal, std::move(term), std::move(f.node_), nullptr);
  if (term.is_state()) return make(Connective::AtStateVar, std::move(term), std::move(f.node_), nullptr);
  throw PreconditionError("@ needs a nominal or state variable, got " + to_string(term));
}

Formula Formula::binder(Symbol var, Formula f) {
  if (!var.is_state()) throw PreconditionError("binder needs a state variable, got " + to_string(var));
  return make(Connective::Binder, std::move(var), std::move(f.node_), nullptr);
}

Formula Formula::disjunction_of(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disjunction(acc, fs[i]);
  return acc;
}

Formula Formula::conjunction_of(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conjunction(acc, fs[i]);
  return acc;
}

Connective Formula::op() const noexcept { return node_->op; }

const Symbol& Formula::symbol() const {
  if (!has_symbol(node_->op)) throw PreconditionError(std::string(to_string(node_->op)) + " carries no symbol");
  return node_->symbol;
}

Formula Formula::child() const {
  if (arity(node_->op) != 1) throw PreconditionError(std::string(to_string(node_->op)) + " is not unary");
  return Formula(node_->first);
}

Formula Formula::left() const {
  if (arity(node_->op) != 2) throw PreconditionError(std::string(to_string(node_->op)) + " is not binary");
  return Formula(node_->first);
}

Formula Formula::right() const {
  if (arity(node_->op) != 2) throw PreconditionError(std::string(to_string(node_->op)) + " is not binary");
  return Formula(node_->second);
}

std::vector<Formula> Formula::children() const {
  std::vector<Formula> kids;
  if (node_->first) kids.push_back(Formula(node_->first));
  if (node_->second) kids.push_back(Formula(node_->second));
  return kids;
}

bool Formula::is_negated_term() const noexcept {
  if (node_->op != Connective::Not) return false;
  auto k = node_->first->op;
  return k == Connective::Nominal || k == Connective::StateVar;
}

std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::depth() const noexcept { return node_->depth; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

Formula Formula::with_children(const std::vector<Formula>& kids) const {
  if (static_cast<int>(kids.size()) != arity(node_->op)) {
    throw PreconditionError("wrong number of children for " + std::string(to_string(node_->op)));
  }
  if (kids.empty()) return *this;
  bool same = kids[0].node_ == node_->first && (kids.size() < 2 || kids[1].node_ == node_->second);
  if (same) return *this;
  return make(node_->op, node_->symbol, kids[0].node_, kids.size() > 1 ? kids[1].node_ : nullptr);
}

bool operator==(const Formula& a, const Formula& b) { return nodes_equal(a.node_.get(), b.node_.get()); }

// ---- queries -----------------------------------------------------------

namespace {

void push_unique(std::vector<Symbol>& out, std::set<Symbol>& seen, const Symbol& s) {
  if (seen.insert(s).second) out.push_back(s);
}

template <class Pred>
std::vector<Symbol> collect(const std::vector<Formula>& roots, Pred pred) {
  std::vector<Symbol> out;
  std::set<Symbol> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (has_symbol(f.op()) && pred(f.symbol())) push_unique(out, seen, f.symbol());
    for (const auto& k : f.children()) walk(k);
  };
  for (const auto& r : roots) walk(r);
  return out;
}

std::vector<Symbol> collect_free(const std::vector<Formula>& roots) {
  std::vector<Symbol> out;
  std::set<Symbol> seen;
  std::vector<Symbol> bound;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    switch (f.op()) {
      case Connective::StateVar:
      case Connective::AtStateVar:
        if (std::find(bound.begin(), bound.end(), f.symbol()) == bound.end()) push_unique(out, seen, f.symbol());
        break;
      case Connective::Binder:
        bound.push_back(f.symbol());
        walk(f.child());
        bound.pop_back();
        return;
      default:
        break;
    }
    for (const auto& k : f.children()) walk(k);
  };
  for (const auto& r : roots) walk(r);
  return out;
}

std::vector<Formula> sides(const Inequality& i) { return {i.lhs, i.rhs}; }

std::vector<Formula> sides(const QuasiInequality& q) {
  std::vector<Formula> out;
  for (const auto& a : q.antecedents) {
    out.push_back(a.lhs);
    out.push_back(a.rhs);
  }
  out.push_back(q.conclusion.lhs);
  out.push_back(q.conclusion.rhs);
  return out;
}

auto is_prop_sym = [](const Symbol& s) { return s.is_prop(); };
auto is_nominal_sym = [](const Symbol& s) { return s.is_nominal(); };

}  // namespace

std::vector<Symbol> props(const Formula& f) { return collect({f}, is_prop_sym); }
std::vector<Symbol> nominals(const Formula& f) { return collect({f}, is_nominal_sym); }
std::vector<Symbol> free_state_vars(const Formula& f) { return collect_free({f}); }
std::vector<Symbol> all_symbols(const Formula& f) {
  return collect({f}, [](const Symbol&) { return true; });
}

std::vector<Symbol> props(const Inequality& i) { return collect(sides(i), is_prop_sym); }
std::vector<Symbol> nominals(const Inequality& i) { return collect(sides(i), is_nominal_sym); }
std::vector<Symbol> free_state_vars(const Inequality& i) { return collect_free(sides(i)); }
std::vector<Symbol> props(const QuasiInequality& q) { return collect(sides(q), is_prop_sym); }
std::vector<Symbol> nominals(const QuasiInequality& q) { return collect(sides(q), is_nominal_sym); }
std::vector<Symbol> free_state_vars(const QuasiInequality& q) { return collect_free(sides(q)); }

bool occurs(const Formula& f, const Symbol& s) {
  if (has_symbol(f.op()) && f.symbol() == s) return true;
  for (const auto& k : f.children()) {
    if (occurs(k, s)) return true;
  }
  return false;
}

bool is_pure(const Formula& f) { return props(f).empty(); }
bool is_pure(const Inequality& i) { return props(i).empty(); }
bool is_pure(const QuasiInequality& q) { return props(q).empty(); }
bool is_sentence(const Formula& f) { return free_state_vars(f).empty(); }

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::Absent:
      return "absent";
    case Polarity::Positive:
      return "positive";
    case Polarity::Negative:
      return "negative";
    case Polarity::Both:
      return "both";
  }
  return "?";
}

Polarity polarity(const Formula& f, const Symbol& p) {
  bool pos = false;
  bool neg = false;
  std::function<void(const Formula&, bool)> walk = [&](const Formula& g, bool positive) {
    switch (g.op()) {
      case Connective::PropVar:
        if (g.symbol() == p) (positive ? pos : neg) = true;
        return;
      case Connective::Not:
        walk(g.child(), !positive);
        return;
      case Connective::Implies:
        walk(g.left(), !positive);
        walk(g.right(), positive);
        return;
      default:
        for (const auto& k : g.children()) walk(k, positive);
    }
  };
  walk(f, true);
  if (pos && neg) return Polarity::Both;
  if (pos) return Polarity::Positive;
  if (neg) return Polarity::Negative;
  return Polarity::Absent;
}

// ---- substitution ------------------------------------------------------

namespace {

Formula subst_rec(const Formula& f, const Symbol& p, const Formula& theta, const std::vector<Symbol>& theta_free,
                  std::vector<Symbol>& binders) {
  switch (f.op()) {
    case Connective::PropVar:
      if (f.symbol() != p) return f;
      for (const auto& x : theta_free) {
        if (std::find(binders.begin(), binders.end(), x) != binders.end()) {
          throw CaptureError("substituting for " + to_string(p) + " would capture free state variable " +
                             to_string(x) + " under binder !" + x.name + ".");
        }
      }
      return theta;
    case Connective::Binder: {
      binders.push_back(f.symbol());
      Formula body = subst_rec(f.child(), p, theta, theta_free, binders);
      binders.pop_back();
      return f.with_children({body});
    }
    default: {
      if (f.is_atom()) return f;
      std::vector<Formula> kids;
      for (const auto& k : f.children()) kids.push_back(subst_rec(k, p, theta, theta_free, binders));
      return f.with_children(kids);
    }
  }
}

Formula replace_rec(const Formula& f, const Symbol& x, const Symbol& t) {
  switch (f.op()) {
    case Connective::StateVar:
      return f.symbol() == x ? Formula::atom(t) : f;
    case Connective::AtStateVar: {
      Formula body = replace_rec(f.child(), x, t);
      if (f.symbol() == x) return Formula::at(t, body);
      return f.with_children({body});
    }
    case Connective::Binder: {
      if (f.symbol() == x) return f;
      if (t.is_state() && f.symbol() == t) {
        auto inner = free_state_vars(f.child());
        if (std::find(inner.begin(), inner.end(), x) != inner.end()) {
          throw CaptureError("replacing " + to_string(x) + " by " + to_string(t) +
                             " would be captured by binder !" + t.name + ".");
        }
      }
      return f.with_children({replace_rec(f.child(), x, t)});
    }
    default: {
      if (f.is_atom()) return f;
      std::vector<Formula> kids;
      for (const auto& k : f.children()) kids.push_back(replace_rec(k, x, t));
      return f.with_children(kids);
    }
  }
}

}  // namespace

Formula substitute_prop(const Formula& f, const Symbol& p, const Formula& theta) {
  if (!p.is_prop()) throw PreconditionError("substitute_prop expects a propositional variable");
  std::vector<Symbol> binders;
  return subst_rec(f, p, theta, free_state_vars(theta), binders);
}

Formula replace_state_var(const Formula& f, const Symbol& x, const Symbol& t) {
  if (!x.is_state()) throw PreconditionError("replace_state_var expects a state variable to replace");
  if (!t.is_term()) throw PreconditionError("replacement must be a nominal or state variable");
  return replace_rec(f, x, t);
}

}  // namespace hyalba
