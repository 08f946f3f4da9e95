#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyalba/formula.hpp"

namespace hyalba {

enum class Sign : std::uint8_t { Plus, Minus };

inline Sign flip(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
std::string_view to_string(Sign s);

// One component of an order-type: One is 1, Partial is the dual (written d).
enum class Epsilon : std::uint8_t { One, Partial };

std::string_view to_string(Epsilon e);
Epsilon epsilon_from_string(std::string_view s);

// Polarity assignment over propositional variables, kept in a fixed order.
class OrderType {
 public:
  OrderType() = default;
  OrderType(std::vector<Symbol> vars, std::vector<Epsilon> values);

  // Every variable of `vars` set to `e`.
  static OrderType uniform(const std::vector<Symbol>& vars, Epsilon e);
  // "1,d,1" against `vars` in order; also accepts "p=1,q=d".
  static OrderType parse(std::string_view text, const std::vector<Symbol>& vars);

  const std::vector<Symbol>& vars() const noexcept { return vars_; }
  const std::vector<Epsilon>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return vars_.size(); }

  bool contains(const Symbol& p) const;
  Epsilon at(const Symbol& p) const;
  void set(const Symbol& p, Epsilon e);
  bool covers(const std::vector<Symbol>& ps) const;

  OrderType opposite() const;
  // Restriction to the given variables (order preserved from `ps`).
  OrderType restricted(const std::vector<Symbol>& ps) const;

  // "(1,d)".
  std::string str() const;

  friend bool operator==(const OrderType&, const OrderType&) = default;

 private:
  std::vector<Symbol> vars_;
  std::vector<Epsilon> values_;
};

// Node of a signed generation tree. @-nodes keep only their formula child.
struct SignedNode {
  Formula formula;
  Sign sign = Sign::Plus;
  bool skeletal = false;
  bool critical = false;
  std::vector<SignedNode> children;

  Connective op() const { return formula.op(); }
};

// Skeletal nodes: Plus {|, &, <>, ~, !x., @}; Minus {&, |, [], ~, !x., @, ->}.
bool is_skeletal_node(Connective c, Sign s) noexcept;

// A leaf is critical when it is +p with eps(p)=1 or -p with eps(p)=d.
bool is_critical_leaf(const Formula& leaf, Sign s, const OrderType& eps);

SignedNode signed_tree(const Formula& f, Sign root_sign);
// Same tree with `critical` set on the eps-critical leaves.
SignedNode signed_tree(const Formula& f, Sign root_sign, const OrderType& eps);

// Indented rendering, one node per line.
std::string render(const SignedNode& t);

struct BranchEntry {
  Connective op;
  Sign sign;

  friend bool operator==(const BranchEntry&, const BranchEntry&) = default;
};

enum class Side : std::uint8_t { Lhs, Rhs };
std::string_view to_string(Side s);

struct Branch {
  Side side = Side::Lhs;
  // Child indices from the root of the side's tree down to the leaf.
  std::vector<std::size_t> position;
  // Leaf first, root last.
  std::vector<BranchEntry> path;
  Symbol leaf;

  bool skeletal() const;
  // Has a +| or -& among its inner nodes.
  bool has_nondefinite_node() const;
  std::string str() const;
};

std::vector<Branch> critical_branches(const SignedNode& t, const OrderType& eps, Side side = Side::Lhs);
// Branches of +lhs followed by those of -rhs.
std::vector<Branch> critical_branches(const Inequality& ineq, const OrderType& eps);

// phi -> psi becomes phi <= psi; anything else is read as T <= phi.
Inequality as_inequality(const Formula& f);

bool is_skeletal_sahlqvist(const Inequality& ineq, const OrderType& eps);

// First witness in lexicographic order, variables by first occurrence and
// One before Partial. Throws ResourceLimitError above `max_vars` variables.
std::optional<OrderType> find_order_type(const Inequality& ineq, std::size_t max_vars = 10);

// Throws PreconditionError unless is_skeletal_sahlqvist(ineq, eps).
bool is_definite(const Inequality& ineq, const OrderType& eps);

bool is_epsilon_uniform(const Inequality& ineq, const OrderType& eps);

struct Classification {
  bool skeletal = false;
  std::optional<OrderType> order_type;
  std::vector<Branch> branches;
  bool definite = false;
};

// With `eps` given only that order-type is tried.
Classification classify(const Inequality& ineq, const std::optional<OrderType>& eps = std::nullopt,
                        std::size_t max_vars = 10);

}  // namespace hyalba
