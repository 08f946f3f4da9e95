#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hyalba/formula.hpp"
#include "hyalba/semantics.hpp"

namespace hyalba {

enum class SchemaKind : std::uint8_t { Axiom, Derived, Rule };
std::string_view to_string(SchemaKind k);

// A schema over formula metavariables A, B, C. `Asub` stands for A with its
// free x replaced by 'i (used by the binder schemas).
struct Schema {
  std::string id;
  SchemaKind kind = SchemaKind::Axiom;
  std::string text;
  // Metavariables must not contain x (Name).
  bool x_free = false;
};

// Axioms, derived theorems and the equivalences behind the rewrite rules.
const std::vector<Schema>& schema_catalogue();
const Schema* find_schema(std::string_view id);

// Trace justifications are catalogue ids, plus VarElim for the
// monotone/antitone elimination (a frame-level fact, not a schema).
bool is_known_justification(std::string_view tag);

// Atoms and one-connective formulas used to instantiate metavariables.
std::vector<Formula> instance_pool();

// Metavariables replaced without capture checks: instantiating a schema is
// not a substitution into an object formula.
std::vector<Formula> instantiate(const Schema& s, const std::vector<Formula>& pool, std::size_t max_instances);

struct SchemaResult {
  std::string id;
  std::size_t instances = 0;
  std::vector<std::string> failures;
  // failing frame for the first failure, if any
  std::string counterexample;
};

// Every instance checked for validity on every frame with <= max_worlds worlds.
std::vector<SchemaResult> check_schemas(std::size_t max_worlds, std::size_t max_instances = 16,
                                        const EnumerationLimits& limits = {});

}  // namespace hyalba
