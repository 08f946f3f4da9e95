#include "hyalba/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "hyalba/errors.hpp"
#include "hyalba/syntax.hpp"

namespace hyalba {

// ---- frames and models -------------------------------------------------------

KripkeFrame::KripkeFrame(std::size_t size) : size_(size), succ_(size, 0) {
  if (size == 0) throw PreconditionError("a frame needs at least one world");
  if (size > kMaxWorlds) throw ResourceLimitError("frames are limited to " + std::to_string(kMaxWorlds) + " worlds");
}

KripkeFrame::KripkeFrame(std::size_t size, const std::vector<std::pair<World, World>>& edges) : KripkeFrame(size) {
  for (auto [u, v] : edges) add_edge(u, v);
}

KripkeFrame KripkeFrame::from_relation_bits(std::size_t size, std::uint64_t bits) {
  if (size > 8) throw PreconditionError("relation bitmasks cover at most 8 worlds");
  KripkeFrame f(size);
  for (World u = 0; u < size; ++u) {
    for (World v = 0; v < size; ++v) {
      if ((bits >> (u * size + v)) & 1U) f.add_edge(u, v);
    }
  }
  return f;
}

WorldMask KripkeFrame::all_worlds() const noexcept {
  return size_ == 64 ? ~WorldMask{0} : ((WorldMask{1} << size_) - 1);
}

void KripkeFrame::add_edge(World u, World v) {
  if (u >= size_ || v >= size_) {
    throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside a frame of " +
                            std::to_string(size_) + " worlds");
  }
  succ_[u] |= WorldMask{1} << v;
}

std::vector<std::pair<World, World>> KripkeFrame::edges() const {
  std::vector<std::pair<World, World>> out;
  for (World u = 0; u < size_; ++u) {
    for (World v = 0; v < size_; ++v) {
      if (related(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t KripkeFrame::relation_bits() const {
  if (size_ > 8) throw PreconditionError("relation bitmasks cover at most 8 worlds");
  std::uint64_t bits = 0;
  for (auto [u, v] : edges()) bits |= std::uint64_t{1} << (u * size_ + v);
  return bits;
}

void KripkeModel::set_prop(const Symbol& p, WorldMask extension) {
  if (!p.is_prop()) throw PreconditionError(to_string(p) + " is not a propositional variable");
  if (extension & ~frame_.all_worlds()) throw PreconditionError("extension of " + to_string(p) + " leaves the frame");
  props_[p] = extension;
}

void KripkeModel::set_nominal(const Symbol& i, World w) {
  if (!i.is_nominal()) throw PreconditionError(to_string(i) + " is not a nominal");
  if (w >= frame_.size()) throw PreconditionError("nominal " + to_string(i) + " denotes a world outside the frame");
  nominals_[i] = w;
}

WorldMask KripkeModel::prop(const Symbol& p) const {
  auto it = props_.find(p);
  if (it == props_.end()) throw UnboundSymbolError("no valuation for " + to_string(p));
  return it->second;
}

World KripkeModel::nominal(const Symbol& i) const {
  auto it = nominals_.find(i);
  if (it == nominals_.end()) throw UnboundSymbolError("no valuation for nominal " + to_string(i));
  return it->second;
}

void Assignment::bind(const Symbol& x, World w) {
  if (!x.is_state()) throw PreconditionError(to_string(x) + " is not a state variable");
  values_[x] = w;
}

World Assignment::at(const Symbol& x) const {
  auto it = values_.find(x);
  if (it == values_.end()) throw UnboundSymbolError("no assignment for state variable " + to_string(x));
  return it->second;
}

Assignment Assignment::variant(const Symbol& x, World w) const {
  Assignment g = *this;
  g.bind(x, w);
  return g;
}

// ---- compiled evaluator ----------------------------------------------------------

namespace {

// Flattened formula(s) over integer slots, evaluated to truth sets.
class Program {
 public:
  struct Node {
    Connective op;
    int slot = -1;
    int a = -1;
    int b = -1;
  };

  int add(const Formula& f) {
    Node n{f.op()};
    switch (f.op()) {
      case Connective::PropVar:
        n.slot = slot_of(props, f.symbol());
        break;
      case Connective::Nominal:
      case Connective::AtNominal:
        n.slot = slot_of(noms, f.symbol());
        break;
      case Connective::StateVar:
      case Connective::AtStateVar:
      case Connective::Binder:
        n.slot = slot_of(states, f.symbol());
        break;
      default:
        break;
    }
    if (!f.is_atom()) {
      auto kids = f.children();
      n.a = add(kids[0]);
      if (kids.size() > 1) n.b = add(kids[1]);
    }
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }

  std::vector<Node> nodes;
  std::vector<Symbol> props;
  std::vector<Symbol> noms;
  std::vector<Symbol> states;

 private:
  static int slot_of(std::vector<Symbol>& table, const Symbol& s) {
    auto it = std::find(table.begin(), table.end(), s);
    if (it != table.end()) return static_cast<int>(it - table.begin());
    table.push_back(s);
    return static_cast<int>(table.size()) - 1;
  }
};

struct Env {
  const KripkeFrame* frame;
  std::size_t n;
  WorldMask full;
  std::vector<WorldMask> succ;
  std::vector<WorldMask> props;
  std::vector<World> noms;
  std::vector<World> states;

  Env(const KripkeFrame& f, const Program& p)
      : frame(&f),
        n(f.size()),
        full(f.all_worlds()),
        props(p.props.size(), 0),
        noms(p.noms.size(), 0),
        states(p.states.size(), 0) {
    for (World w = 0; w < n; ++w) succ.push_back(f.successors(w));
  }
};

WorldMask run(const Program& p, int idx, Env& env) {
  const auto& node = p.nodes[static_cast<std::size_t>(idx)];
  switch (node.op) {
    case Connective::PropVar:
      return env.props[node.slot];
    case Connective::Nominal:
      return WorldMask{1} << env.noms[node.slot];
    case Connective::StateVar:
      return WorldMask{1} << env.states[node.slot];
    case Connective::Top:
      return env.full;
    case Connective::Bottom:
      return 0;
    case Connective::Not:
      return ~run(p, node.a, env) & env.full;
    case Connective::Or:
      return run(p, node.a, env) | run(p, node.b, env);
    case Connective::And: {
      WorldMask l = run(p, node.a, env);
      return l == 0 ? 0 : (l & run(p, node.b, env));
    }
    case Connective::Implies:
      return (~run(p, node.a, env) & env.full) | run(p, node.b, env);
    case Connective::Diamond: {
      WorldMask t = run(p, node.a, env);
      WorldMask out = 0;
      for (World w = 0; w < env.n; ++w) {
        if (env.succ[w] & t) out |= WorldMask{1} << w;
      }
      return out;
    }
    case Connective::Box: {
      WorldMask t = run(p, node.a, env);
      WorldMask out = 0;
      for (World w = 0; w < env.n; ++w) {
        if ((env.succ[w] & ~t) == 0) out |= WorldMask{1} << w;
      }
      return out;
    }
    case Connective::AtNominal:
      return ((run(p, node.a, env) >> env.noms[node.slot]) & 1U) ? env.full : 0;
    case Connective::AtStateVar:
      return ((run(p, node.a, env) >> env.states[node.slot]) & 1U) ? env.full : 0;
    case Connective::Binder: {
      World saved = env.states[node.slot];
      WorldMask out = 0;
      for (World w = 0; w < env.n; ++w) {
        env.states[node.slot] = w;
        if ((run(p, node.a, env) >> w) & 1U) out |= WorldMask{1} << w;
      }
      env.states[node.slot] = saved;
      return out;
    }
  }
  return 0;
}

// Loads valuation/assignment for every slot that is free in the program roots.
void load(const Program& p, Env& env, const KripkeModel& m, const Assignment& g,
          const std::vector<Symbol>& free_states) {
  for (std::size_t k = 0; k < p.props.size(); ++k) env.props[k] = m.prop(p.props[k]);
  for (std::size_t k = 0; k < p.noms.size(); ++k) env.noms[k] = m.nominal(p.noms[k]);
  for (std::size_t k = 0; k < p.states.size(); ++k) {
    const Symbol& x = p.states[k];
    if (std::find(free_states.begin(), free_states.end(), x) != free_states.end()) env.states[k] = g.at(x);
  }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

int slot_index(const std::vector<Symbol>& table, const Symbol& s) {
  auto it = std::find(table.begin(), table.end(), s);
  return it == table.end() ? -1 : static_cast<int>(it - table.begin());
}

}  // namespace

WorldMask truth_set(const KripkeModel& m, const Assignment& g, const Formula& f) {
  Program p;
  int root = p.add(f);
  Env env(m.frame(), p);
  load(p, env, m, g, free_state_vars(f));
  return run(p, root, env);
}

bool eval(const KripkeModel& m, const Assignment& g, World w, const Formula& f) {
  if (w >= m.frame().size()) throw PreconditionError("world " + std::to_string(w) + " outside the frame");
  return (truth_set(m, g, f) >> w) & 1U;
}

bool globally_true(const KripkeModel& m, const Assignment& g, const Formula& f) {
  return truth_set(m, g, f) == m.frame().all_worlds();
}

bool holds_inequality(const KripkeModel& m, const Assignment& g, const Inequality& ineq) {
  return (truth_set(m, g, ineq.lhs) & ~truth_set(m, g, ineq.rhs)) == 0;
}

bool holds_quasi(const KripkeModel& m, const Assignment& g, const QuasiInequality& q) {
  for (const auto& a : q.antecedents) {
    if (!holds_inequality(m, g, a)) return true;
  }
  return holds_inequality(m, g, q.conclusion);
}

// ---- frame validity ----------------------------------------------------------------

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* v = std::getenv("HYALBA_MAX_EVALUATIONS")) {
    try {
      limits.max_evaluations = std::stoull(v);
    } catch (const std::exception&) {
      throw Error(std::string("HYALBA_MAX_EVALUATIONS is not a number: ") + v);
    }
  }
  return limits;
}

bool frame_valid(const KripkeFrame& frame, const Formula& f, const EnumerationLimits& limits) {
  Program p;
  int root = p.add(f);
  auto free = free_state_vars(f);
  const std::size_t n = frame.size();

  if (p.props.size() > limits.max_props) {
    throw ResourceLimitError("formula has " + std::to_string(p.props.size()) +
                             " propositional variables; limit is " + std::to_string(limits.max_props));
  }
  if (p.noms.size() > limits.max_nominals) {
    throw ResourceLimitError("formula has " + std::to_string(p.noms.size()) + " nominals; limit is " +
                             std::to_string(limits.max_nominals));
  }
  std::uint64_t count = saturating_pow(n, p.noms.size());
  count = saturating_mul(count, n * p.props.size() >= 64 ? std::numeric_limits<std::uint64_t>::max()
                                                         : std::uint64_t{1} << (n * p.props.size()));
  count = saturating_mul(count, saturating_pow(n, free.size()));
  if (count > limits.max_evaluations) {
    throw ResourceLimitError("enumeration of " + std::to_string(count) + " valuations exceeds the cap of " +
                             std::to_string(limits.max_evaluations));
  }

  std::vector<int> free_slots;
  for (const auto& x : free) free_slots.push_back(slot_index(p.states, x));

  Env env(frame, p);
  const WorldMask world_mask = frame.all_worlds();
  const std::uint64_t prop_combos = std::uint64_t{1} << (n * p.props.size());
  const std::size_t terms = p.noms.size() + free_slots.size();
  std::vector<World> odo(terms, 0);

  for (std::uint64_t pv = 0; pv < prop_combos; ++pv) {
    for (std::size_t k = 0; k < p.props.size(); ++k) env.props[k] = (pv >> (k * n)) & world_mask;
    std::fill(odo.begin(), odo.end(), 0);
    while (true) {
      for (std::size_t k = 0; k < p.noms.size(); ++k) env.noms[k] = odo[k];
      for (std::size_t k = 0; k < free_slots.size(); ++k) env.states[free_slots[k]] = odo[p.noms.size() + k];
      if (run(p, root, env) != world_mask) return false;
      std::size_t k = 0;
      while (k < terms && ++odo[k] == n) odo[k++] = 0;
      if (k == terms) break;
    }
  }
  return true;
}

namespace {

struct TermSlot {
  bool nominal;
  int slot;
};

struct QuasiConstraint {
  int lhs;
  int rhs;
  bool must_hold;  // antecedents must hold; the conclusion must fail
};

class CounterexampleSearch {
 public:
  CounterexampleSearch(const KripkeFrame& frame, const QuasiInequality& q, const EnumerationLimits& limits)
      : limits_(limits) {
    if (!is_pure(q)) throw PreconditionError("quasi-inequality is not pure: " + print(q));
    // Conclusion first so that its terms are placed early.
    add_constraint(q.conclusion, false);
    for (const auto& a : q.antecedents) add_constraint(a, true);
    env_ = std::make_unique<Env>(frame, prog_);

    std::vector<std::vector<Symbol>> constraint_terms;
    auto note_term = [&](const Symbol& s) {
      bool nominal = s.is_nominal();
      int slot = slot_index(nominal ? prog_.noms : prog_.states, s);
      for (const auto& t : order_) {
        if (t.nominal == nominal && t.slot == slot) return;
      }
      order_.push_back({nominal, slot});
    };
    for (const auto& terms : terms_) {
      for (const auto& s : terms) note_term(s);
    }
    by_level_.assign(order_.size() + 1, {});
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      int level = -1;
      for (const auto& s : terms_[c]) {
        bool nominal = s.is_nominal();
        int slot = slot_index(nominal ? prog_.noms : prog_.states, s);
        for (std::size_t k = 0; k < order_.size(); ++k) {
          if (order_[k].nominal == nominal && order_[k].slot == slot) level = std::max(level, static_cast<int>(k));
        }
      }
      by_level_[static_cast<std::size_t>(level + 1)].push_back(c);
    }
  }

  bool found() {
    if (!satisfied(0)) return false;
    return search(0);
  }

 private:
  void add_constraint(const Inequality& ineq, bool must_hold) {
    int l = prog_.add(ineq.lhs);
    int r = prog_.add(ineq.rhs);
    constraints_.push_back({l, r, must_hold});
    std::vector<Symbol> terms = nominals(ineq);
    for (const auto& x : free_state_vars(ineq)) terms.push_back(x);
    terms_.push_back(std::move(terms));
  }

  bool satisfied(std::size_t level) {
    for (std::size_t c : by_level_[level]) {
      const auto& k = constraints_[c];
      bool holds = (run(prog_, k.lhs, *env_) & ~run(prog_, k.rhs, *env_)) == 0;
      if (holds != k.must_hold) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto& t = order_[depth];
    for (World w = 0; w < env_->n; ++w) {
      if (++visited_ > limits_.max_evaluations) {
        throw ResourceLimitError("counterexample search exceeded " + std::to_string(limits_.max_evaluations) +
                                 " nodes");
      }
      (t.nominal ? env_->noms[t.slot] : env_->states[t.slot]) = w;
      if (satisfied(depth + 1) && search(depth + 1)) return true;
    }
    return false;
  }

  const EnumerationLimits& limits_;
  Program prog_;
  std::unique_ptr<Env> env_;
  std::vector<QuasiConstraint> constraints_;
  std::vector<std::vector<Symbol>> terms_;
  std::vector<TermSlot> order_;
  std::vector<std::vector<std::size_t>> by_level_;
  std::uint64_t visited_ = 0;
};

}  // namespace

bool frame_valid_quasi_set(const KripkeFrame& frame, const std::vector<QuasiInequality>& qs,
                           const EnumerationLimits& limits) {
  for (const auto& q : qs) {
    CounterexampleSearch search(frame, q, limits);
    if (search.found()) return false;
  }
  return true;
}

std::vector<KripkeFrame> enumerate_frames(std::size_t max_size, const EnumerationLimits& limits) {
  if (max_size > limits.max_worlds) {
    throw ResourceLimitError("frame enumeration up to " + std::to_string(max_size) + " worlds exceeds the cap of " +
                             std::to_string(limits.max_worlds));
  }
  if (max_size > 5) throw ResourceLimitError("frame enumeration is limited to 5 worlds");
  std::vector<KripkeFrame> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * n);
    for (std::uint64_t bits = 0; bits < count; ++bits) out.push_back(KripkeFrame::from_relation_bits(n, bits));
  }
  return out;
}

// ---- sampling ----------------------------------------------------------------------

void Signature::merge(const Signature& other) {
  auto join = [](std::vector<Symbol>& into, const std::vector<Symbol>& from) {
    for (const auto& s : from) {
      if (std::find(into.begin(), into.end(), s) == into.end()) into.push_back(s);
    }
  };
  join(props, other.props);
  join(nominals, other.nominals);
  join(state_vars, other.state_vars);
}

Signature signature_of(const Formula& f) { return {props(f), nominals(f), free_state_vars(f)}; }
Signature signature_of(const Inequality& ineq) { return {props(ineq), nominals(ineq), free_state_vars(ineq)}; }
Signature signature_of(const QuasiInequality& q) { return {props(q), nominals(q), free_state_vars(q)}; }

Signature signature_of(const std::vector<QuasiInequality>& qs) {
  Signature sig;
  for (const auto& q : qs) sig.merge(signature_of(q));
  return sig;
}

std::uint64_t for_each_model(const Signature& sig, std::size_t max_worlds,
                             const std::function<bool(const ModelInstance&)>& visit,
                             const EnumerationLimits& limits) {
  std::uint64_t visited = 0;
  for (const auto& frame : enumerate_frames(max_worlds, limits)) {
    const std::size_t n = frame.size();
    if (n * sig.props.size() >= 64) throw ResourceLimitError("too many propositional variables to enumerate");
    const std::uint64_t prop_combos = std::uint64_t{1} << (n * sig.props.size());
    const std::size_t terms = sig.nominals.size() + sig.state_vars.size();
    std::uint64_t per_frame = saturating_mul(prop_combos, saturating_pow(n, terms));
    if (per_frame > limits.max_evaluations) {
      throw ResourceLimitError("model enumeration of " + std::to_string(per_frame) + " models per frame exceeds the cap");
    }
    std::vector<World> odo(terms, 0);
    for (std::uint64_t pv = 0; pv < prop_combos; ++pv) {
      std::fill(odo.begin(), odo.end(), 0);
      while (true) {
        ModelInstance mi{KripkeModel(frame), Assignment{}};
        for (std::size_t k = 0; k < sig.props.size(); ++k) {
          mi.model.set_prop(sig.props[k], (pv >> (k * n)) & frame.all_worlds());
        }
        for (std::size_t k = 0; k < sig.nominals.size(); ++k) mi.model.set_nominal(sig.nominals[k], odo[k]);
        for (std::size_t k = 0; k < sig.state_vars.size(); ++k) {
          mi.assignment.bind(sig.state_vars[k], odo[sig.nominals.size() + k]);
        }
        ++visited;
        if (!visit(mi)) return visited;
        std::size_t k = 0;
        while (k < terms && ++odo[k] == n) odo[k++] = 0;
        if (k == terms) break;
      }
    }
  }
  return visited;
}

ModelInstance random_model(std::mt19937_64& rng, const Signature& sig, std::size_t max_worlds) {
  if (max_worlds == 0 || max_worlds > kMaxWorlds) throw PreconditionError("max_worlds must be in 1..64");
  std::uniform_int_distribution<std::size_t> size_dist(1, max_worlds);
  const std::size_t n = size_dist(rng);
  KripkeFrame frame(n);
  std::bernoulli_distribution coin(0.5);
  for (World u = 0; u < n; ++u) {
    for (World v = 0; v < n; ++v) {
      if (coin(rng)) frame.add_edge(u, v);
    }
  }
  std::uniform_int_distribution<World> world_dist(0, static_cast<World>(n - 1));
  ModelInstance mi{KripkeModel(frame), Assignment{}};
  for (const auto& p : sig.props) mi.model.set_prop(p, rng() & frame.all_worlds());
  for (const auto& i : sig.nominals) mi.model.set_nominal(i, world_dist(rng));
  for (const auto& x : sig.state_vars) mi.assignment.bind(x, world_dist(rng));
  return mi;
}

// ---- text format -------------------------------------------------------------------

namespace {

std::string format_set(WorldMask m, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (World w = 0; w < n; ++w) {
    if (!((m >> w) & 1U)) continue;
    if (!first) out += ',';
    out += std::to_string(w);
    first = false;
  }
  return out + "}";
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (c == ';' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (!trim(cur).empty()) parts.push_back(trim(cur));
  return parts;
}

std::vector<World> parse_numbers(std::string_view s) {
  std::vector<World> out;
  std::string digits;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (!digits.empty()) {
      out.push_back(static_cast<World>(std::stoul(digits)));
      digits.clear();
    }
  }
  if (!digits.empty()) out.push_back(static_cast<World>(std::stoul(digits)));
  return out;
}

World parse_world(const std::string& s, std::size_t n) {
  auto nums = parse_numbers(s);
  if (nums.size() != 1 || nums[0] >= n) throw Error("bad world '" + s + "'");
  return nums[0];
}

}  // namespace

std::string format_frame(const KripkeFrame& frame) {
  std::string out = "worlds=" + std::to_string(frame.size()) + "; rel={";
  bool first = true;
  for (auto [u, v] : frame.edges()) {
    if (!first) out += ',';
    out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    first = false;
  }
  return out + "}";
}

std::string format_model(const KripkeModel& m, const Assignment& g) {
  std::string out = format_frame(m.frame());
  for (const auto& [i, w] : m.nominal_valuation()) out += "; " + to_string(i) + "=" + std::to_string(w);
  for (const auto& [p, ext] : m.prop_valuation()) out += "; " + to_string(p) + "=" + format_set(ext, m.frame().size());
  for (const auto& [x, w] : g.values()) out += "; " + to_string(x) + "=" + std::to_string(w);
  return out;
}

KripkeFrame parse_frame(std::string_view text) { return parse_model(text).model.frame(); }

ModelInstance parse_model(std::string_view text) {
  auto parts = split_top_level(text);
  std::size_t n = 0;
  std::vector<std::pair<World, World>> edges;
  std::vector<std::pair<std::string, std::string>> rest;
  for (const auto& part : parts) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw Error("expected key=value in model text, got '" + part + "'");
    std::string key = trim(std::string_view(part).substr(0, eq));
    std::string value = trim(std::string_view(part).substr(eq + 1));
    if (key == "worlds") {
      n = static_cast<std::size_t>(std::stoul(value));
    } else if (key == "rel") {
      auto nums = parse_numbers(value);
      if (nums.size() % 2 != 0) throw Error("relation needs pairs of worlds");
      for (std::size_t k = 0; k < nums.size(); k += 2) edges.emplace_back(nums[k], nums[k + 1]);
    } else {
      rest.emplace_back(key, value);
    }
  }
  if (n == 0) throw Error("model text needs worlds=<n>");
  ModelInstance mi{KripkeModel(KripkeFrame(n, edges)), Assignment{}};
  for (const auto& [key, value] : rest) {
    if (key.empty()) throw Error("empty symbol name in model text");
    if (key.front() == '\'') {
      mi.model.set_nominal(Symbol::nominal(key.substr(1)), parse_world(value, n));
    } else if (identifier_kind(key) == SymbolKind::StateVar) {
      mi.assignment.bind(Symbol::state(key), parse_world(value, n));
    } else {
      WorldMask m = 0;
      for (World w : parse_numbers(value)) {
        if (w >= n) throw Error("world " + std::to_string(w) + " outside the frame");
        m |= WorldMask{1} << w;
      }
      mi.model.set_prop(Symbol::prop(key), m);
    }
  }
  return mi;
}

}  // namespace hyalba
