#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyalba/formula.hpp"

namespace hyalba {

using World = std::uint32_t;
// Bit w set iff world w is in the set.
using WorldMask = std::uint64_t;

inline constexpr std::size_t kMaxWorlds = 64;

class KripkeFrame {
 public:
  // `size` worlds, empty relation.
  explicit KripkeFrame(std::size_t size);
  KripkeFrame(std::size_t size, const std::vector<std::pair<World, World>>& edges);
  // Bit (u * size + v) of `bits` encodes R(u, v). Requires size <= 8.
  static KripkeFrame from_relation_bits(std::size_t size, std::uint64_t bits);

  std::size_t size() const noexcept { return size_; }
  WorldMask all_worlds() const noexcept;
  WorldMask successors(World u) const { return succ_.at(u); }
  bool related(World u, World v) const { return (succ_.at(u) >> v) & 1U; }
  void add_edge(World u, World v);
  std::vector<std::pair<World, World>> edges() const;
  // Inverse of from_relation_bits.
  std::uint64_t relation_bits() const;

  friend bool operator==(const KripkeFrame&, const KripkeFrame&) = default;

 private:
  std::size_t size_;
  std::vector<WorldMask> succ_;
};

// Frame plus valuation. Every nominal denotes exactly one world.
class KripkeModel {
 public:
  explicit KripkeModel(KripkeFrame frame) : frame_(std::move(frame)) {}

  const KripkeFrame& frame() const noexcept { return frame_; }

  void set_prop(const Symbol& p, WorldMask extension);
  void set_nominal(const Symbol& i, World w);

  bool has_prop(const Symbol& p) const { return props_.contains(p); }
  bool has_nominal(const Symbol& i) const { return nominals_.contains(i); }
  WorldMask prop(const Symbol& p) const;
  World nominal(const Symbol& i) const;

  const std::map<Symbol, WorldMask>& prop_valuation() const noexcept { return props_; }
  const std::map<Symbol, World>& nominal_valuation() const noexcept { return nominals_; }

 private:
  KripkeFrame frame_;
  std::map<Symbol, WorldMask> props_;
  std::map<Symbol, World> nominals_;
};

class Assignment {
 public:
  Assignment() = default;

  void bind(const Symbol& x, World w);
  bool has(const Symbol& x) const { return values_.contains(x); }
  World at(const Symbol& x) const;
  // The x-variant g[x := w].
  Assignment variant(const Symbol& x, World w) const;
  const std::map<Symbol, World>& values() const noexcept { return values_; }

 private:
  std::map<Symbol, World> values_;
};

// A model together with an assignment; the unit every sampling routine yields.
struct ModelInstance {
  KripkeModel model;
  Assignment assignment;
};

// ---- evaluation ------------------------------------------------------------

WorldMask truth_set(const KripkeModel& m, const Assignment& g, const Formula& f);
bool eval(const KripkeModel& m, const Assignment& g, World w, const Formula& f);
bool globally_true(const KripkeModel& m, const Assignment& g, const Formula& f);
bool holds_inequality(const KripkeModel& m, const Assignment& g, const Inequality& ineq);
bool holds_quasi(const KripkeModel& m, const Assignment& g, const QuasiInequality& q);

// ---- frame validity ----------------------------------------------------------

struct EnumerationLimits {
  std::size_t max_worlds = 3;
  std::size_t max_props = 3;
  std::size_t max_nominals = 4;
  std::size_t max_order_type_vars = 10;
  // Upper bound on (valuation x assignment) combinations per frame, and on
  // search nodes per frame for quasi-inequality validity.
  std::uint64_t max_evaluations = 50'000'000;

  // Defaults, with max_evaluations overridable through HYALBA_MAX_EVALUATIONS.
  static EnumerationLimits from_environment();
};

// Valid on the frame: globally true under every valuation of the occurring
// propositional variables and nominals and every assignment to its free
// state variables. Throws ResourceLimitError past the configured caps.
bool frame_valid(const KripkeFrame& frame, const Formula& f, const EnumerationLimits& limits = {});

// Every (pure) quasi-inequality holds under every nominal valuation and
// assignment of free state variables. Searches for a counterexample by
// backtracking over nominal placements, checking each antecedent as soon as
// its terms are placed.
bool frame_valid_quasi_set(const KripkeFrame& frame, const std::vector<QuasiInequality>& qs,
                           const EnumerationLimits& limits = {});

// All frames with 1..max_size worlds, by size and then by ascending relation bitmask.
std::vector<KripkeFrame> enumerate_frames(std::size_t max_size, const EnumerationLimits& limits = {});

// ---- model sampling ----------------------------------------------------------

// Symbols a model/assignment must interpret.
struct Signature {
  std::vector<Symbol> props;
  std::vector<Symbol> nominals;
  std::vector<Symbol> state_vars;

  void merge(const Signature& other);
};

Signature signature_of(const Formula& f);
Signature signature_of(const Inequality& ineq);
Signature signature_of(const QuasiInequality& q);
Signature signature_of(const std::vector<QuasiInequality>& qs);

// Visits every model over `sig` on every frame with <= max_worlds worlds.
// Returns the number of models visited; stops early when `visit` returns false.
std::uint64_t for_each_model(const Signature& sig, std::size_t max_worlds,
                             const std::function<bool(const ModelInstance&)>& visit,
                             const EnumerationLimits& limits = {});

ModelInstance random_model(std::mt19937_64& rng, const Signature& sig, std::size_t max_worlds);

// ---- text format -------------------------------------------------------------
//   worlds=3; rel={(0,1),(1,2)}; 'i=0; p={0,2}; x=1

std::string format_frame(const KripkeFrame& frame);
std::string format_model(const KripkeModel& m, const Assignment& g = {});
KripkeFrame parse_frame(std::string_view text);
ModelInstance parse_model(std::string_view text);

}  // namespace hyalba
