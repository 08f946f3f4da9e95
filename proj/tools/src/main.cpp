#include <iostream>
#include <string>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "hyalba/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hyalba: skeletal Sahlqvist classification and correspondence for hybrid logic"};
  app.require_subcommand(1);

  hyalba::cli::Options opts;
  std::string input;
  std::string eps;
  std::string corpus_path = "corpus/corpus.json";
  std::string corpus_mode;

  auto with_eps = [&](CLI::App* sub) { sub->add_option("--eps", eps, "order-type, e.g. 1,d or p=1,q=d"); };
  auto with_json = [&](CLI::App* sub) { sub->add_flag("--json", opts.json, "emit JSON"); };
  auto with_worlds = [&](CLI::App* sub) {
    sub->add_option("--max-worlds", opts.max_worlds, "largest frame size")->check(CLI::Range(1, 4));
  };

  auto* classify = app.add_subcommand("classify", "signed generation trees and skeletal Sahlqvist check");
  classify->add_option("formula", input)->required();
  with_eps(classify);
  with_json(classify);

  auto* correspond = app.add_subcommand("correspond", "compute the pure correspondent");
  correspond->add_option("formula", input)->required();
  with_eps(correspond);
  with_json(correspond);
  correspond->add_flag("--trace", opts.trace, "print every rule application");
  correspond->add_flag("--simplify", opts.simplify, "simplify T/F in the output");
  correspond->add_flag("--require-skeletal", opts.require_skeletal, "exit 3 on non-skeletal input");

  auto* translate = app.add_subcommand("translate", "translate a pure quasi-inequality to a formula");
  translate->add_option("quasi", input, "a ; b => c, or a <= b")->required();
  with_json(translate);

  auto* verify = app.add_subcommand("verify", "check input and output agree on all small frames");
  verify->add_option("formula", input)->required();
  with_eps(verify);
  with_json(verify);
  with_worlds(verify);
  verify->add_flag("--simplify", opts.simplify, "simplify T/F in the output");
  verify->add_option("--seed", opts.seed, "seed for sampled models");
  verify->add_option("--samples", opts.samples, "random models for the translation check");

  auto* axioms = app.add_subcommand("axioms-check", "validate the axiom and theorem schemas");
  with_json(axioms);
  with_worlds(axioms);

  auto* corpus = app.add_subcommand("corpus", "golden-file regression over the corpus");
  corpus->add_option("mode", corpus_mode)->required()->check(CLI::IsMember({"run", "bless"}));
  corpus->add_option("--corpus", corpus_path, "path to corpus.json");
  with_worlds(corpus);

  CLI11_PARSE(app, argc, argv);
  if (!eps.empty()) opts.eps = eps;

  namespace cli = hyalba::cli;
  cli::Outcome r;
  if (*classify) {
    r = cli::cmd_classify(input, opts);
  } else if (*correspond) {
    r = cli::cmd_correspond(input, opts);
  } else if (*translate) {
    r = cli::cmd_translate(input, opts);
  } else if (*verify) {
    r = cli::cmd_verify(input, opts);
  } else if (*axioms) {
    r = cli::cmd_axioms_check(opts);
  } else if (corpus_mode == "run") {
    r = cli::cmd_corpus_run(corpus_path, opts);
  } else {
    r = cli::cmd_corpus_bless(corpus_path, opts);
  }
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
