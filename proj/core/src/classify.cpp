#include "hyalba/classify.hpp"

#include <algorithm>
#include <functional>

#include "hyalba/errors.hpp"
#include "hyalba/syntax.hpp"

namespace hyalba {

std::string_view to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::string_view to_string(Epsilon e) { return e == Epsilon::One ? "1" : "d"; }

Epsilon epsilon_from_string(std::string_view s) {
  if (s == "1") return Epsilon::One;
  if (s == "d" || s == "D" || s == "partial" || s == "∂") return Epsilon::Partial;
  throw Error("order-type values are 1 or d, got '" + std::string(s) + "'");
}

std::string_view to_string(Side s) { return s == Side::Lhs ? "lhs" : "rhs"; }

// ---- OrderType ---------------------------------------------------------------

OrderType::OrderType(std::vector<Symbol> vars, std::vector<Epsilon> values)
    : vars_(std::move(vars)), values_(std::move(values)) {
  if (vars_.size() != values_.size()) throw PreconditionError("order-type needs one value per variable");
  for (const auto& p : vars_) {
    if (!p.is_prop()) throw PreconditionError("order-types range over propositional variables only");
  }
}

OrderType OrderType::uniform(const std::vector<Symbol>& vars, Epsilon e) {
  return OrderType(vars, std::vector<Epsilon>(vars.size(), e));
}

OrderType OrderType::parse(std::string_view text, const std::vector<Symbol>& vars) {
  std::string s;
  for (char c : text) {
    if (c != '(' && c != ')' && c != ' ') s += c;
  }
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    if (comma > start) parts.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  OrderType out = uniform(vars, Epsilon::One);
  bool named = !parts.empty() && parts.front().find('=') != std::string::npos;
  if (!named) {
    if (parts.size() != vars.size()) {
      throw Error("order-type has " + std::to_string(parts.size()) + " entries but the input has " +
                  std::to_string(vars.size()) + " propositional variables");
    }
    for (std::size_t k = 0; k < parts.size(); ++k) out.values_[k] = epsilon_from_string(parts[k]);
    return out;
  }
  std::vector<bool> seen(vars.size(), false);
  for (const auto& part : parts) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw Error("mixed positional and named order-type entries");
    Symbol p = Symbol::prop(part.substr(0, eq));
    auto it = std::find(vars.begin(), vars.end(), p);
    if (it == vars.end()) throw Error("order-type names unknown variable '" + p.name + "'");
    auto k = static_cast<std::size_t>(it - vars.begin());
    out.values_[k] = epsilon_from_string(part.substr(eq + 1));
    seen[k] = true;
  }
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!seen[k]) throw Error("order-type is missing variable '" + vars[k].name + "'");
  }
  return out;
}

bool OrderType::contains(const Symbol& p) const { return std::find(vars_.begin(), vars_.end(), p) != vars_.end(); }

Epsilon OrderType::at(const Symbol& p) const {
  auto it = std::find(vars_.begin(), vars_.end(), p);
  if (it == vars_.end()) throw PreconditionError("order-type does not cover " + to_string(p));
  return values_[static_cast<std::size_t>(it - vars_.begin())];
}

void OrderType::set(const Symbol& p, Epsilon e) {
  auto it = std::find(vars_.begin(), vars_.end(), p);
  if (it == vars_.end()) {
    if (!p.is_prop()) throw PreconditionError("order-types range over propositional variables only");
    vars_.push_back(p);
    values_.push_back(e);
  } else {
    values_[static_cast<std::size_t>(it - vars_.begin())] = e;
  }
}

bool OrderType::covers(const std::vector<Symbol>& ps) const {
  return std::all_of(ps.begin(), ps.end(), [&](const Symbol& p) { return contains(p); });
}

OrderType OrderType::opposite() const {
  OrderType out = *this;
  for (auto& v : out.values_) v = v == Epsilon::One ? Epsilon::Partial : Epsilon::One;
  return out;
}

OrderType OrderType::restricted(const std::vector<Symbol>& ps) const {
  OrderType out;
  for (const auto& p : ps) out.set(p, at(p));
  return out;
}

std::string OrderType::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k > 0) out += ',';
    out += to_string(values_[k]);
  }
  return out + ")";
}

// ---- signed generation trees -------------------------------------------------

bool is_skeletal_node(Connective c, Sign s) noexcept {
  switch (c) {
    case Connective::Or:
    case Connective::And:
    case Connective::Not:
    case Connective::Binder:
    case Connective::AtNominal:
    case Connective::AtStateVar:
      return true;
    case Connective::Diamond:
      return s == Sign::Plus;
    case Connective::Box:
    case Connective::Implies:
      return s == Sign::Minus;
    default:
      return false;
  }
}

bool is_critical_leaf(const Formula& leaf, Sign s, const OrderType& eps) {
  if (leaf.op() != Connective::PropVar) return false;
  Epsilon e = eps.at(leaf.symbol());
  return (s == Sign::Plus && e == Epsilon::One) || (s == Sign::Minus && e == Epsilon::Partial);
}

namespace {

SignedNode build(const Formula& f, Sign s, const OrderType* eps) {
  SignedNode n{f, s, false, false, {}};
  if (f.is_atom()) {
    n.critical = eps != nullptr && is_critical_leaf(f, s, *eps);
    return n;
  }
  n.skeletal = is_skeletal_node(f.op(), s);
  switch (f.op()) {
    case Connective::Not:
      n.children.push_back(build(f.child(), flip(s), eps));
      break;
    case Connective::Implies:
      n.children.push_back(build(f.left(), flip(s), eps));
      n.children.push_back(build(f.right(), s, eps));
      break;
    default:
      for (const auto& c : f.children()) n.children.push_back(build(c, s, eps));
      break;
  }
  return n;
}

std::string node_label(const SignedNode& n) {
  const Formula& f = n.formula;
  switch (f.op()) {
    case Connective::PropVar:
    case Connective::StateVar:
    case Connective::Nominal:
    case Connective::Top:
    case Connective::Bottom:
      return print(f);
    case Connective::Not:
      return "~";
    case Connective::Or:
      return "|";
    case Connective::And:
      return "&";
    case Connective::Implies:
      return "->";
    case Connective::Diamond:
      return "<>";
    case Connective::Box:
      return "[]";
    case Connective::AtNominal:
    case Connective::AtStateVar:
      return "@" + to_string(f.symbol());
    case Connective::Binder:
      return "!" + f.symbol().name + ".";
  }
  return "?";
}

std::string entry_label(const BranchEntry& e) {
  switch (e.op) {
    case Connective::Not:
      return "~";
    case Connective::Or:
      return "|";
    case Connective::And:
      return "&";
    case Connective::Implies:
      return "->";
    case Connective::Diamond:
      return "<>";
    case Connective::Box:
      return "[]";
    case Connective::AtNominal:
    case Connective::AtStateVar:
      return "@";
    case Connective::Binder:
      return "!";
    default:
      return std::string(to_string(e.op));
  }
}

}  // namespace

SignedNode signed_tree(const Formula& f, Sign root_sign) { return build(f, root_sign, nullptr); }

SignedNode signed_tree(const Formula& f, Sign root_sign, const OrderType& eps) {
  for (const auto& p : props(f)) {
    if (!eps.contains(p)) throw PreconditionError("order-type does not cover " + to_string(p));
  }
  return build(f, root_sign, &eps);
}

std::string render(const SignedNode& t) {
  std::string out;
  std::function<void(const SignedNode&, std::size_t)> walk = [&](const SignedNode& n, std::size_t depth) {
    out.append(depth * 2, ' ');
    out += to_string(n.sign);
    out += node_label(n);
    if (n.skeletal) out += "  [skeletal]";
    if (n.critical) out += "  [critical]";
    out += '\n';
    for (const auto& c : n.children) walk(c, depth + 1);
  };
  walk(t, 0);
  return out;
}

// ---- branches ----------------------------------------------------------------

bool Branch::skeletal() const {
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (!is_skeletal_node(path[k].op, path[k].sign)) return false;
  }
  return true;
}

bool Branch::has_nondefinite_node() const {
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (path[k].op == Connective::Or && path[k].sign == Sign::Plus) return true;
    if (path[k].op == Connective::And && path[k].sign == Sign::Minus) return true;
  }
  return false;
}

std::string Branch::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(path[k].sign);
    out += k == 0 ? to_string(leaf) : entry_label(path[k]);
  }
  return out + "]";
}

std::vector<Branch> critical_branches(const SignedNode& t, const OrderType& eps, Side side) {
  std::vector<Branch> out;
  std::vector<const SignedNode*> stack;
  std::vector<std::size_t> position;
  std::function<void(const SignedNode&)> walk = [&](const SignedNode& n) {
    stack.push_back(&n);
    if (n.formula.is_atom()) {
      if (is_critical_leaf(n.formula, n.sign, eps)) {
        Branch b;
        b.side = side;
        b.position = position;
        b.leaf = n.formula.symbol();
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) b.path.push_back({(*it)->op(), (*it)->sign});
        out.push_back(std::move(b));
      }
    } else {
      for (std::size_t k = 0; k < n.children.size(); ++k) {
        position.push_back(k);
        walk(n.children[k]);
        position.pop_back();
      }
    }
    stack.pop_back();
  };
  walk(t);
  return out;
}

std::vector<Branch> critical_branches(const Inequality& ineq, const OrderType& eps) {
  auto out = critical_branches(signed_tree(ineq.lhs, Sign::Plus, eps), eps, Side::Lhs);
  auto rhs = critical_branches(signed_tree(ineq.rhs, Sign::Minus, eps), eps, Side::Rhs);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

// ---- classification ----------------------------------------------------------

Inequality as_inequality(const Formula& f) {
  if (f.op() == Connective::Implies) return {f.left(), f.right()};
  return {Formula::top(), f};
}

bool is_skeletal_sahlqvist(const Inequality& ineq, const OrderType& eps) {
  auto branches = critical_branches(ineq, eps);
  return std::all_of(branches.begin(), branches.end(), [](const Branch& b) { return b.skeletal(); });
}

std::optional<OrderType> find_order_type(const Inequality& ineq, std::size_t max_vars) {
  auto vars = props(ineq);
  if (vars.size() > max_vars) {
    throw ResourceLimitError("order-type search over " + std::to_string(vars.size()) +
                             " variables exceeds the cap of " + std::to_string(max_vars));
  }
  const std::size_t n = vars.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<Epsilon> values(n);
    for (std::size_t v = 0; v < n; ++v) {
      values[v] = ((k >> (n - 1 - v)) & 1U) ? Epsilon::Partial : Epsilon::One;
    }
    OrderType eps(vars, std::move(values));
    if (is_skeletal_sahlqvist(ineq, eps)) return eps;
  }
  return std::nullopt;
}

bool is_definite(const Inequality& ineq, const OrderType& eps) {
  auto branches = critical_branches(ineq, eps);
  for (const auto& b : branches) {
    if (!b.skeletal()) throw PreconditionError("is_definite needs an " + eps.str() + "-skeletal Sahlqvist inequality");
  }
  return std::none_of(branches.begin(), branches.end(), [](const Branch& b) { return b.has_nondefinite_node(); });
}

bool is_epsilon_uniform(const Inequality& ineq, const OrderType& eps) {
  bool ok = true;
  std::function<void(const SignedNode&)> walk = [&](const SignedNode& n) {
    if (n.op() == Connective::PropVar) {
      Sign want = eps.at(n.formula.symbol()) == Epsilon::One ? Sign::Plus : Sign::Minus;
      if (n.sign != want) ok = false;
    }
    for (const auto& c : n.children) walk(c);
  };
  walk(signed_tree(ineq.lhs, Sign::Plus, eps));
  walk(signed_tree(ineq.rhs, Sign::Minus, eps));
  return ok;
}

Classification classify(const Inequality& ineq, const std::optional<OrderType>& eps, std::size_t max_vars) {
  Classification c;
  std::optional<OrderType> chosen;
  if (eps) {
    if (!eps->covers(props(ineq))) throw PreconditionError("order-type does not cover every variable of the input");
    OrderType e = eps->restricted(props(ineq));
    if (is_skeletal_sahlqvist(ineq, e)) chosen = e;
    c.branches = critical_branches(ineq, e);
  } else {
    chosen = find_order_type(ineq, max_vars);
  }
  if (chosen) {
    c.skeletal = true;
    c.order_type = chosen;
    c.branches = critical_branches(ineq, *chosen);
    c.definite = is_definite(ineq, *chosen);
  }
  return c;
}

}  // namespace hyalba
