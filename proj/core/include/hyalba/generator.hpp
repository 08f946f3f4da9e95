#pragma once

#include <cstddef>
#include <random>

#include "hyalba/classify.hpp"
#include "hyalba/formula.hpp"

namespace hyalba {

struct GeneratorOptions {
  std::size_t max_depth = 5;
  std::size_t max_props = 3;
  std::size_t max_nominals = 2;
  // Chance of stopping at a leaf before max_depth.
  double leaf_bias = 0.3;
  // Chance that a node off the critical part uses an arbitrary connective.
  double free_bias = 0.35;
};

struct GeneratedFormula {
  Formula formula;  // lhs -> rhs
  OrderType eps;
};

// Random sentence lhs -> rhs that is eps-skeletal Sahlqvist by construction:
// wherever a critical leaf may still appear, only skeletal nodes are used;
// a non-skeletal node switches its subtree to non-critical leaves only.
GeneratedFormula random_skeletal(std::mt19937_64& rng, const GeneratorOptions& options = {});

// Arbitrary random formula over the same atoms (no skeletal guarantee).
Formula random_formula(std::mt19937_64& rng, std::size_t max_depth, std::size_t max_props = 3,
                       std::size_t max_nominals = 2, bool sentence = true);

}  // namespace hyalba
