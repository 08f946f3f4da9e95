// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyalba/alba.hpp"
#include "hyalba/axioms.hpp"
#include "hyalba/classify.hpp"
#include "hyalba/generator.hpp"
#include "hyalba/json_io.hpp"
#include "hyalba/semantics.hpp"
#include "hyalba/syntax.hpp"
#include "hyalba/translate.hpp"
#include "support/oracle.hpp"

using namespace hyalba;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(int n, const std::string& title, Check& c, double secs) {
  std::cout << (c.pass ? "PASS" : "FAIL") << "  [" << n << "] " << title << ": " << c.detail.str() << " ("
            << std::fixed << std::setprecision(2) << secs << " s)\n";
  return c.pass;
}

struct Case {
  std::string name;
  Formula input;
  AlbaResult result;
};

// Anchor shape checked independently of the engine's own predicate.
bool anchored(const Inequality& i) {
  auto term = [](const Formula& f) { return f.op() == Connective::Nominal || f.op() == Connective::StateVar; };
  return term(i.lhs) || (i.rhs.op() == Connective::Not && term(i.rhs.child()));
}

bool mentions(const std::vector<Inequality>& sys, const Symbol& s) {
  oracle::Atoms a;
  for (const auto& i : sys) {
    oracle::collect(i.lhs, a);
    oracle::collect(i.rhs, a);
  }
  return a.nominals.contains(s) || a.free_vars.contains(s);
}

std::vector<Case> generated(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Case> out;
  for (std::size_t k = 0; k < n; ++k) {
    auto g = random_skeletal(rng);
    out.push_back({"generated#" + std::to_string(k), g.formula, run(g.formula)});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path corpus_path =
      argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::path(HYALBA_SOURCE_DIR) / "corpus/corpus.json";
  bool all = true;
  const auto frames = enumerate_frames(3);

  // 1. two-branch example
  {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    Inequality ineq = as_inequality(parse("<>p1 & p2 -> <>[]<>p1 | <>[]<>p2"));
    Classification cl = classify(ineq);
    std::vector<std::string> branches;
    for (const auto& b : cl.branches) branches.push_back(b.str());
    const std::vector<std::string> expected{"[+p1, +<>, +&]", "[+p2, +&]"};
    if (!cl.skeletal || !cl.order_type || cl.order_type->str() != "(1,1)") c.fail("order-type is not (1,1)");
    if (branches != expected) c.fail("critical branches differ");
    if (!run(Formula::implication(ineq.lhs, ineq.rhs)).ok()) c.fail("run failed");
    double secs = seconds_since(t0);
    if (secs >= 1.0) c.fail("too slow");
    if (c.pass) c.detail << "eps=(1,1), branches " << branches[0] << " " << branches[1];
    all &= report(1, "two-branch example", c, secs);
  }

  // 2. success on generated skeletal formulas
  std::vector<Case> thousand;
  {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    thousand = generated(1000, kSeed);
    std::size_t ok = 0;
    for (const auto& k : thousand) {
      bool skeletal = is_skeletal_sahlqvist(as_inequality(k.input), k.result.order_type);
      if (k.result.ok() && skeletal) {
        ++ok;
      } else {
        c.fail(print(k.input) + " did not succeed; ");
      }
    }
    double secs = seconds_since(t0);
    if (secs >= 60.0) c.fail("too slow");
    c.detail << ok << "/1000 succeeded";
    all &= report(2, "success theorem", c, secs);
  }

  // 3. soundness on corpus + 100 generated
  std::vector<Case> corpus;
  std::vector<Case> hundred(thousand.begin(), thousand.begin() + 100);
  {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    std::ifstream in(corpus_path);
    auto entries = nlohmann::json::parse(in);
    std::size_t binders = 0;
    for (const auto& e : entries) {
      Formula f = parse(e.at("input").get<std::string>());
      AlbaResult r = run(f);
      if (!r.ok()) continue;
      binders += print(f).find('!') != std::string::npos;
      corpus.push_back({e.at("name").get<std::string>(), f, std::move(r)});
    }
    if (corpus.size() < 12) c.fail("corpus has fewer than 12 succeeding entries; ");
    if (binders < 3) c.fail("corpus has fewer than 3 binder entries; ");

    std::size_t disagreements = 0;
    std::size_t comparisons = 0;
    auto compare = [&](const Case& k, bool with_oracle) {
      for (const auto& fr : frames) {
        bool a = frame_valid(fr, k.input);
        bool b = frame_valid_quasi_set(fr, k.result.pure);
        ++comparisons;
        if (with_oracle) {
          auto of = oracle::from_library(fr);
          if (oracle::frame_valid(of, k.input) != a || oracle::frame_valid(of, k.result.pure) != b) {
            c.fail("library and oracle differ on " + k.name + " at " + format_frame(fr) + "; ");
          }
        }
        if (a != b) {
          if (disagreements++ == 0) c.fail(k.name + " disagrees on " + format_frame(fr) + "; ");
        }
      }
    };
    for (const auto& k : corpus) compare(k, true);
    for (const auto& k : hundred) compare(k, false);
    double secs = seconds_since(t0);
    if (secs >= 300.0) c.fail("too slow");
    c.detail << corpus.size() << " corpus (" << binders << " with binders) + " << hundred.size() << " generated, "
             << comparisons << " frame checks, " << disagreements << " disagreements";
    all &= report(3, "soundness on all 530 frames", c, secs);
  }

  // 4. known correspondents
  {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    struct Known {
      const char* input;
      const char* cls;
      std::function<bool(const oracle::Frame&)> expected;
    };
    const std::vector<Known> known{{"[]p -> p", "reflexive", oracle::reflexive},
                                   {"<><>p -> <>p", "transitive", oracle::transitive},
                                   {"p -> <>p", "reflexive", oracle::reflexive}};
    for (const auto& k : known) {
      AlbaResult r = run(parse(k.input));
      std::size_t valid = 0;
      for (const auto& fr : frames) {
        bool got = r.ok() && frame_valid_quasi_set(fr, r.pure);
        valid += got;
        if (got != k.expected(oracle::from_library(fr))) {
          c.fail(std::string(k.input) + " differs from " + k.cls + " at " + format_frame(fr) + "; ");
          break;
        }
      }
      c.detail << k.input << " -> " << valid << " " << k.cls << " frames; ";
    }
    all &= report(4, "known correspondents", c, seconds_since(t0));
  }

  // 5. Tr equivalence
  {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    std::size_t models = 0;
    std::size_t mismatches = 0;
    auto agree = [&](const oracle::Model& m, const QuasiInequality& q, const Formula& tr) {
      ++models;
      if (oracle::holds(m, q) != oracle::everywhere(m, tr)) {
        if (mismatches++ == 0) c.fail("mismatch for " + print(q) + "; ");
      }
    };
    for (const auto& k : corpus) {
      for (const auto& q : k.result.pure) {
        Formula tr = tr_quasi(q);
        for (const auto& fr : oracle::frames(2)) {
          oracle::for_each_model(fr, oracle::collect({q}), [&](const oracle::Model& m) {
            agree(m, q, tr);
            return true;
          });
        }
      }
    }
    std::size_t exhaustive = models;
    std::mt19937_64 rng(kSeed + 5);
    for (const auto& k : hundred) {
      for (const auto& q : k.result.pure) {
        Formula tr = tr_quasi(q);
        Signature sig = signature_of(q);
        for (int s = 0; s < 1000; ++s) agree(oracle::from_library(random_model(rng, sig, 3)), q, tr);
      }
    }
    c.detail << exhaustive << " exhaustive models (<=2 worlds), " << models - exhaustive
             << " sampled models (<=3 worlds), " << mismatches << " mismatches";
    all &= report(5, "translation equivalence", c, seconds_since(t0));
  }

  // 6. Hilbert schemas
  {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    std::size_t instances = 0;
    auto results = check_schemas(3);
    for (const auto& r : results) {
      instances += r.instances;
      if (!r.failures.empty()) c.fail(r.id + " fails: " + r.failures.front() + "; ");
    }
    c.detail << results.size() << " schemas, " << instances << " instances";
    all &= report(6, "schema validity on <=3 worlds", c, seconds_since(t0));
  }

  // 7. invariants: shape, freshness, replay
  {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    std::size_t steps = 0;
    std::vector<const Case*> cases;
    for (const auto& k : thousand) cases.push_back(&k);
    for (const auto& k : corpus) cases.push_back(&k);
    for (const Case* k : cases) {
      const AlbaTrace& t = k->result.trace;
      if (replay({as_inequality(k->input)}, t.preprocess) != t.preprocessed) c.fail(k->name + " preprocess replay; ");
      for (const auto& st : t.systems) {
        std::vector<Inequality> cur{st.source};
        for (const auto& s : st.steps) {
          ++steps;
          for (const auto& sym : s.introduced) {
            if (mentions(cur, sym)) c.fail(k->name + ": " + to_string(sym) + " not fresh; ");
          }
          cur = apply_step(cur, s);
          for (const auto& i : cur) {
            if (!anchored(i)) c.fail(k->name + ": " + print(i) + " not anchored after " + s.rule + "; ");
          }
        }
        if (cur != st.final.inequalities) c.fail(k->name + " replay differs; ");
      }
    }
    auto again = generated(1000, kSeed);
    for (std::size_t n = 0; n < again.size(); ++n) {
      if (to_json(again[n].result.trace).dump() != to_json(thousand[n].result.trace).dump()) {
        c.fail("trace " + std::to_string(n) + " not reproduced; ");
      }
    }
    c.detail << cases.size() << " runs, " << steps << " steps replayed and re-derived";
    all &= report(7, "engine invariants", c, seconds_since(t0));
  }

  std::cout << (all ? "all acceptance criteria pass" : "acceptance FAILED") << "\n";
  return all ? 0 : 1;
}
