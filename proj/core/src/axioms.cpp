#include "hyalba/axioms.hpp"

#include <algorithm>

#include "hyalba/errors.hpp"
#include "hyalba/syntax.hpp"

namespace hyalba {

std::string_view to_string(SchemaKind k) {
  switch (k) {
    case SchemaKind::Axiom:
      return "axiom";
    case SchemaKind::Derived:
      return "derived";
    case SchemaKind::Rule:
      return "rule";
  }
  return "?";
}

const std::vector<Schema>& schema_catalogue() {
  static const std::vector<Schema> catalogue = {
      {"Dual", SchemaKind::Axiom, "<>A <-> ~[]~A"},
      {"K", SchemaKind::Axiom, "[](A -> B) -> []A -> []B"},
      {"K@", SchemaKind::Axiom, "@'i (A -> B) -> @'i A -> @'i B"},
      {"Selfdual", SchemaKind::Axiom, "~@'i A <-> @'i ~A"},
      {"Ref", SchemaKind::Axiom, "@'i 'i"},
      {"Intro", SchemaKind::Axiom, "'i & A -> @'i A"},
      {"Back", SchemaKind::Axiom, "<>@'i A -> @'i A"},
      {"Agree", SchemaKind::Axiom, "@'i @'j A -> @'j A"},
      {"DA", SchemaKind::Axiom, "@'i (!x. A <-> Asub)"},
      {"Name", SchemaKind::Axiom, "!x. @x A -> A", true},
      {"BG", SchemaKind::Axiom, "@'i []!x. @'i <>x"},

      {"Trans", SchemaKind::Derived, "@'j A & @'i 'j -> @'i A"},
      {"Sym", SchemaKind::Derived, "@'i 'j -> @'j 'i"},
      {"AtAnd", SchemaKind::Derived, "@'i (A & B) <-> @'i A & @'i B"},
      {"NotAtOr", SchemaKind::Derived, "~@'i (A | B) <-> ~@'i A & ~@'i B"},
      {"DiamondWitness", SchemaKind::Derived, "@'j A & @'i <>'j -> @'i <>A"},
      {"AtAt", SchemaKind::Derived, "@'i @'j A <-> @'j A"},
      {"AtBinder", SchemaKind::Derived, "@'i !x. A <-> @'i Asub"},
      {"ImpliesWitness", SchemaKind::Derived, "@'j A & ~@'k B & ~@'i ('j -> ~'k) -> ~@'i (A -> B)"},
      {"NamesDisj", SchemaKind::Derived, "@'j ('i | 'j | 'k)"},
      {"NamesConj", SchemaKind::Derived, "~@'j (~'i & ~'j & ~'k)"},

      {"SplitJoin", SchemaKind::Rule, "(A | B -> C) <-> (A -> C) & (B -> C)"},
      {"SplitMeet", SchemaKind::Rule, "(A -> B & C) <-> (A -> B) & (A -> C)"},
      {"DistDiamondOr", SchemaKind::Rule, "<>(A | B) <-> <>A | <>B"},
      {"DistBinderOr", SchemaKind::Rule, "!x. (A | B) <-> (!x. A) | !x. B"},
      {"DistAtOr", SchemaKind::Rule, "@'i (A | B) <-> @'i A | @'i B"},
      {"DistAndOr", SchemaKind::Rule, "(A | B) & C <-> A & C | B & C"},
      {"DistNotAnd", SchemaKind::Rule, "~(A & B) <-> ~A | ~B"},
      {"DistNotOr", SchemaKind::Rule, "~(A | B) <-> ~A & ~B"},
      {"DistImpliesOr", SchemaKind::Rule, "(A | B -> C) <-> (A -> C) & (B -> C)"},
      {"DistImpliesAnd", SchemaKind::Rule, "(C -> A & B) <-> (C -> A) & (C -> B)"},
      {"DistBoxAnd", SchemaKind::Rule, "[](A & B) <-> []A & []B"},
      {"DistBinderAnd", SchemaKind::Rule, "!x. (A & B) <-> (!x. A) & !x. B"},
      {"DistAtAnd", SchemaKind::Rule, "@'i (A & B) <-> @'i A & @'i B"},
      {"DistOrAnd", SchemaKind::Rule, "A & B | C <-> (A | C) & (B | C)"},
  };
  return catalogue;
}

const Schema* find_schema(std::string_view id) {
  for (const auto& s : schema_catalogue()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

bool is_known_justification(std::string_view tag) { return tag == "VarElim" || find_schema(tag) != nullptr; }

std::vector<Formula> instance_pool() {
  static const char* const texts[] = {"p",      "q",     "~p",        "<>p", "[]q", "p & q", "p | ~q",
                                      "p -> q", "@'k p", "x",         "<>x", "T",   "F",     "!y. <>(y & p)"};
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse(t));
  return out;
}

namespace {

const Symbol kA = Symbol::prop("A");
const Symbol kB = Symbol::prop("B");
const Symbol kC = Symbol::prop("C");
const Symbol kAsub = Symbol::prop("Asub");

// Plain replacement of metavariables; binders in the schema may capture.
Formula plug(const Formula& f, const std::vector<std::pair<Symbol, Formula>>& map) {
  if (f.op() == Connective::PropVar) {
    for (const auto& [m, v] : map) {
      if (f.symbol() == m) return v;
    }
    return f;
  }
  if (f.is_atom()) return f;
  std::vector<Formula> kids;
  for (const auto& k : f.children()) kids.push_back(plug(k, map));
  return f.with_children(kids);
}

std::size_t arity_of(const Formula& f) {
  auto ps = props(f);
  if (std::find(ps.begin(), ps.end(), kC) != ps.end()) return 3;
  if (std::find(ps.begin(), ps.end(), kB) != ps.end()) return 2;
  if (std::find(ps.begin(), ps.end(), kA) != ps.end() || std::find(ps.begin(), ps.end(), kAsub) != ps.end()) {
    return 1;
  }
  return 0;
}

}  // namespace

std::vector<Formula> instantiate(const Schema& s, const std::vector<Formula>& pool_in, std::size_t max_instances) {
  const Formula tmpl = parse(s.text);
  std::vector<Formula> pool;
  const Symbol x = Symbol::state("x");
  for (const auto& f : pool_in) {
    if (s.x_free && occurs(f, x)) continue;
    pool.push_back(f);
  }
  const std::size_t n = arity_of(tmpl);
  if (n == 0) return {tmpl};
  if (pool.empty()) return {};

  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= pool.size();
  // Spread the chosen tuples evenly over the lexicographic enumeration.
  const std::size_t want = std::min(total, std::max<std::size_t>(max_instances, 1));
  std::vector<Formula> out;
  for (std::size_t t = 0; t < want; ++t) {
    std::size_t code = t * total / want;
    std::vector<Formula> args;
    for (std::size_t k = 0; k < n; ++k) {
      args.push_back(pool[code % pool.size()]);
      code /= pool.size();
    }
    std::vector<std::pair<Symbol, Formula>> map{{kA, args[0]}};
    map.emplace_back(kAsub, replace_state_var(args[0], x, Symbol::nominal("i")));
    if (n > 1) map.emplace_back(kB, args[1]);
    if (n > 2) map.emplace_back(kC, args[2]);
    out.push_back(plug(tmpl, map));
  }
  return out;
}

std::vector<SchemaResult> check_schemas(std::size_t max_worlds, std::size_t max_instances,
                                        const EnumerationLimits& limits) {
  const auto frames = enumerate_frames(max_worlds, limits);
  const auto pool = instance_pool();
  std::vector<SchemaResult> out;
  for (const auto& s : schema_catalogue()) {
    SchemaResult r{s.id, 0, {}, {}};
    for (const auto& inst : instantiate(s, pool, max_instances)) {
      ++r.instances;
      for (const auto& fr : frames) {
        if (!frame_valid(fr, inst, limits)) {
          r.failures.push_back(print(inst));
          if (r.counterexample.empty()) r.counterexample = format_frame(fr);
          break;
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hyalba
