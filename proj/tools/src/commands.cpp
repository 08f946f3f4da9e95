#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyalba/alba.hpp"
#include "hyalba/axioms.hpp"
#include "hyalba/classify.hpp"
#include "hyalba/cli.hpp"
#include "hyalba/errors.hpp"
#include "hyalba/frames.hpp"
#include "hyalba/json_io.hpp"
#include "hyalba/semantics.hpp"
#include "hyalba/syntax.hpp"
#include "hyalba/translate.hpp"

namespace hyalba::cli {

using nlohmann::json;

namespace {

template <typename Fn>
Outcome guarded(Fn fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return Outcome{Error, "", std::string("error: ") + e.what() + "\n"};
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::optional<OrderType> parse_eps(const Options& opts, const Inequality& ineq) {
  if (!opts.eps) return std::nullopt;
  return OrderType::parse(*opts.eps, props(ineq));
}

AlbaOptions alba_options(const Options& opts, const Inequality& ineq) {
  AlbaOptions ao;
  ao.eps = parse_eps(opts, ineq);
  ao.simplify = opts.simplify;
  return ao;
}

json flat_trace(const AlbaTrace& t) {
  json steps = json::array();
  for (const auto& s : t.preprocess) {
    json j = to_json(s);
    j["phase"] = "preprocess";
    steps.push_back(std::move(j));
  }
  for (std::size_t k = 0; k < t.systems.size(); ++k) {
    for (const auto& s : t.systems[k].steps) {
      json j = to_json(s);
      j["phase"] = "reduce";
      j["system"] = k;
      steps.push_back(std::move(j));
    }
  }
  return steps;
}

void print_step(std::ostringstream& os, const Step& s) {
  os << "  " << s.rule << " [" << s.justification << "]\n";
  for (const auto& c : s.consumed) os << "    - " << print(c) << "\n";
  for (const auto& p : s.produced) os << "    + " << print(p) << "\n";
}

void print_trace(std::ostringstream& os, const AlbaTrace& t) {
  os << "trace:\n";
  for (const auto& s : t.preprocess) print_step(os, s);
  for (std::size_t k = 0; k < t.systems.size(); ++k) {
    os << " system " << k << ": " << print(t.systems[k].source) << "\n";
    for (const auto& s : t.systems[k].steps) print_step(os, s);
  }
}

json pure_json(const std::vector<QuasiInequality>& pure) {
  json out = json::array();
  for (const auto& q : pure) out.push_back(pure_entry_json(q));
  return out;
}

struct FrameReport {
  std::size_t frames = 0;
  std::size_t agree = 0;
  std::size_t valid = 0;
  std::vector<std::string> disagreements;
  std::string frame_class;
};

// Input validity against output validity on every frame; without an output
// only the input's valid-frame class is computed.
FrameReport compare_frames(const Formula& input, const std::vector<QuasiInequality>* pure, std::size_t max_worlds) {
  auto limits = EnumerationLimits::from_environment();
  limits.max_worlds = std::max(limits.max_worlds, max_worlds);
  FrameReport r;
  auto frames = enumerate_frames(max_worlds, limits);
  std::vector<bool> valid;
  valid.reserve(frames.size());
  for (const auto& fr : frames) {
    bool a = frame_valid(fr, input, limits);
    if (pure != nullptr) {
      bool b = frame_valid_quasi_set(fr, *pure, limits);
      if (a == b) {
        ++r.agree;
      } else {
        r.disagreements.push_back(format_frame(fr));
      }
    }
    r.valid += a;
    valid.push_back(a);
  }
  r.frames = frames.size();
  r.frame_class = describe_frame_class(frames, valid);
  return r;
}

// Golden record for one corpus entry.
struct EntryResult {
  json golden;
  FrameReport frames;
  bool ok = false;
};

EntryResult evaluate_entry(const json& entry, std::size_t max_worlds) {
  const std::string input_text = entry.at("input").get<std::string>();
  Formula f = parse(input_text);
  Inequality ineq = as_inequality(f);
  AlbaResult r = run(f);
  Classification c = classify(ineq, r.ok() ? std::optional<OrderType>(r.order_type) : std::nullopt);

  EntryResult out;
  out.ok = r.ok();
  out.frames = compare_frames(f, r.ok() ? &r.pure : nullptr, max_worlds);
  json g{{"name", entry.at("name")},
         {"input", input_text},
         {"classification", to_json(c)},
         {"status", std::string(to_string(r.status))},
         {"order_type", to_json(r.order_type)},
         {"pure", pure_json(r.pure)},
         {"frame_class", out.frames.frame_class},
         {"valid_frames", out.frames.valid}};
  if (r.ok()) {
    Formula tr = tr_quasiset(r.pure);
    g["translation"] = json{{"text", print(tr)}, {"ast", to_json(tr)}};
  } else {
    g["reason"] = r.reason;
  }
  out.golden = std::move(g);
  return out;
}

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw hyalba::Error("cannot read " + p.string());
  return json::parse(in);
}

std::filesystem::path golden_path(const std::filesystem::path& corpus, const std::string& name) {
  return corpus.parent_path() / "goldens" / (name + ".json");
}

// Checks shared by run and bless: expected classification and frame class,
// and zero disagreements.
std::vector<std::string> entry_problems(const json& entry, const EntryResult& res) {
  std::vector<std::string> problems;
  const auto& g = res.golden;
  if (entry.contains("skeletal") && entry["skeletal"] != g["classification"]["skeletal"]) {
    problems.push_back("skeletal classification differs from corpus");
  }
  if (entry.contains("frame_class") && entry["frame_class"] != g["frame_class"]) {
    problems.push_back("frame class " + g["frame_class"].get<std::string>() + ", corpus says " +
                       entry["frame_class"].get<std::string>());
  }
  if (!res.frames.disagreements.empty()) {
    problems.push_back(std::to_string(res.frames.disagreements.size()) + " frame disagreements, first " +
                       res.frames.disagreements.front());
  }
  return problems;
}

}  // namespace

Outcome cmd_classify(const std::string& formula, const Options& opts) {
  return guarded([&] {
    Inequality ineq = as_inequality(parse(formula));
    Classification c = classify(ineq, parse_eps(opts, ineq));
    int code = c.skeletal ? Ok : NotSkeletal;
    if (opts.json) return Outcome{code, dump(to_json(c)), ""};

    std::ostringstream os;
    os << "inequality: " << print(ineq) << "\n";
    os << "skeletal: " << (c.skeletal ? "yes" : "no") << "\n";
    os << "order-type: " << (c.order_type ? c.order_type->str() : "none") << "\n";
    if (c.skeletal) os << "definite: " << (c.definite ? "yes" : "no") << "\n";
    if (!c.branches.empty()) {
      os << "critical branches:\n";
      for (const auto& b : c.branches) os << "  " << to_string(b.side) << " " << b.str() << "\n";
    }
    auto tree = [&](const Formula& g, Sign s) {
      return c.order_type ? signed_tree(g, s, *c.order_type) : signed_tree(g, s);
    };
    os << "+lhs:\n" << render(tree(ineq.lhs, Sign::Plus));
    os << "-rhs:\n" << render(tree(ineq.rhs, Sign::Minus));
    return Outcome{code, os.str(), ""};
  });
}

Outcome cmd_correspond(const std::string& formula, const Options& opts) {
  return guarded([&] {
    Formula f = parse(formula);
    Inequality ineq = as_inequality(f);
    AlbaResult r = run(f, alba_options(opts, ineq));
    if (opts.require_skeletal && !r.skeletal) {
      return Outcome{NotSkeletal, "", "error: input is not skeletal Sahlqvist\n"};
    }
    int code = r.ok() ? Ok : AlbaFailure;

    if (opts.json) {
      json j{{"status", std::string(to_string(r.status))},
             {"order_type", to_json(r.order_type)},
             {"skeletal", r.skeletal},
             {"pure", pure_json(r.pure)},
             {"trace", opts.trace ? flat_trace(r.trace) : json::array()}};
      if (r.ok()) {
        Formula tr = tr_quasiset(r.pure);
        j["translation"] = json{{"text", print(tr)}, {"ast", to_json(tr)}};
      } else {
        j["reason"] = r.reason;
        if (r.stuck_system) j["stuck_system"] = *r.stuck_system;
        json unresolved = json::array();
        for (const auto& p : r.unresolved) unresolved.push_back(p.name);
        j["unresolved"] = std::move(unresolved);
      }
      return Outcome{code, dump(j), ""};
    }

    std::ostringstream os;
    os << "status: " << to_string(r.status) << "\n";
    os << "order-type: " << r.order_type.str() << (r.skeletal ? "" : " (not skeletal)") << "\n";
    if (r.ok()) {
      os << "pure:\n";
      for (const auto& q : r.pure) os << "  " << print(q) << "\n";
      os << "tr:\n";
      for (const auto& q : r.pure) os << "  " << print(tr_quasi(q)) << "\n";
    } else {
      os << "reason: " << r.reason << "\n";
    }
    if (opts.trace) print_trace(os, r.trace);
    return Outcome{code, os.str(), ""};
  });
}

Outcome cmd_translate(const std::string& text, const Options& opts) {
  return guarded([&] {
    Formula tr;
    std::string source;
    if (text.find("=>") != std::string::npos) {
      QuasiInequality q = parse_quasi(text);
      tr = tr_quasi(q);
      source = print(q);
    } else {
      Inequality i = parse_inequality(text);
      tr = tr_ineq(i);
      source = print(i);
    }
    if (opts.json) return Outcome{Ok, dump(json{{"input", source}, {"text", print(tr)}, {"ast", to_json(tr)}}), ""};
    return Outcome{Ok, print(tr) + "\n", ""};
  });
}

Outcome cmd_verify(const std::string& formula, const Options& opts) {
  return guarded([&] {
    Formula f = parse(formula);
    Inequality ineq = as_inequality(f);
    AlbaResult r = run(f, alba_options(opts, ineq));
    if (!r.ok()) return Outcome{AlbaFailure, "", "error: no pure correspondent: " + r.reason + "\n"};

    FrameReport fr = compare_frames(f, &r.pure, opts.max_worlds);
    TrReport exhaustive = verify_tr_equivalence(r.pure, std::min<std::size_t>(opts.max_worlds, 2));
    TrReport sampled;
    if (opts.samples > 0) sampled = verify_tr_equivalence_sampled(r.pure, opts.samples, opts.max_worlds, opts.seed);
    bool ok = fr.disagreements.empty() && exhaustive.ok() && sampled.ok();

    if (opts.json) {
      json j{{"frames", fr.frames},
             {"agree", fr.agree},
             {"valid_frames", fr.valid},
             {"frame_class", fr.frame_class},
             {"disagreements", fr.disagreements},
             {"tr_models", exhaustive.checked + sampled.checked},
             {"tr_mismatches", exhaustive.mismatches.size() + sampled.mismatches.size()},
             {"ok", ok}};
      return Outcome{ok ? Ok : Error, dump(j), ""};
    }
    std::ostringstream os;
    os << "frames: " << fr.agree << "/" << fr.frames << " agree\n";
    os << "valid frames: " << fr.valid << " (" << fr.frame_class << ")\n";
    for (const auto& d : fr.disagreements) os << "  disagreement: " << d << "\n";
    os << "tr: " << exhaustive.checked + sampled.checked << " models, "
       << exhaustive.mismatches.size() + sampled.mismatches.size() << " mismatches\n";
    for (const auto* rep : {&exhaustive, &sampled}) {
      for (const auto& m : rep->mismatches) os << "  mismatch: " << m.model << "\n";
    }
    return Outcome{ok ? Ok : Error, os.str(), ""};
  });
}

Outcome cmd_axioms_check(const Options& opts) {
  return guarded([&] {
    auto limits = EnumerationLimits::from_environment();
    limits.max_worlds = std::max(limits.max_worlds, opts.max_worlds);
    auto results = check_schemas(opts.max_worlds, 16, limits);
    std::size_t failed = 0;
    json arr = json::array();
    std::ostringstream os;
    for (const auto& s : results) {
      failed += !s.failures.empty();
      arr.push_back(json{{"id", s.id},
                         {"instances", s.instances},
                         {"failures", s.failures},
                         {"counterexample", s.counterexample}});
      os << (s.failures.empty() ? "ok   " : "FAIL ") << s.id << " (" << s.instances << " instances)\n";
      for (const auto& f : s.failures) os << "       " << f << "\n";
      if (!s.counterexample.empty()) os << "       frame " << s.counterexample << "\n";
    }
    int code = failed == 0 ? Ok : Error;
    if (opts.json) return Outcome{code, dump(json{{"schemas", arr}, {"failed", failed}}), ""};
    os << results.size() - failed << "/" << results.size() << " schemas valid\n";
    return Outcome{code, os.str(), ""};
  });
}

Outcome cmd_corpus_run(const std::filesystem::path& corpus, const Options& opts) {
  return guarded([&] {
    json entries = read_json(corpus);
    std::ostringstream os;
    std::size_t bad = 0;
    for (const auto& entry : entries) {
      const auto name = entry.at("name").get<std::string>();
      EntryResult res = evaluate_entry(entry, opts.max_worlds);
      auto problems = entry_problems(entry, res);
      auto gp = golden_path(corpus, name);
      if (!std::filesystem::exists(gp)) {
        problems.push_back("missing golden " + gp.string());
      } else if (read_json(gp) != res.golden) {
        problems.push_back("output differs from golden");
      }
      bad += !problems.empty();
      os << (problems.empty() ? "ok   " : "FAIL ") << name << "\n";
      for (const auto& p : problems) os << "       " << p << "\n";
    }
    os << entries.size() - bad << "/" << entries.size() << " corpus entries match\n";
    return Outcome{bad == 0 ? Ok : Error, os.str(), ""};
  });
}

Outcome cmd_corpus_bless(const std::filesystem::path& corpus, const Options& opts) {
  return guarded([&] {
    json entries = read_json(corpus);
    std::filesystem::create_directories(corpus.parent_path() / "goldens");
    std::ostringstream os;
    std::size_t bad = 0;
    for (const auto& entry : entries) {
      const auto name = entry.at("name").get<std::string>();
      EntryResult res = evaluate_entry(entry, opts.max_worlds);
      std::ofstream(golden_path(corpus, name)) << dump(res.golden);
      auto problems = entry_problems(entry, res);
      bad += !problems.empty();
      os << "wrote " << name << "\n";
      for (const auto& p : problems) os << "       " << p << "\n";
    }
    return Outcome{bad == 0 ? Ok : Error, os.str(), ""};
  });
}

}  // namespace hyalba::cli
