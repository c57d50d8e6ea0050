// pqa: question entailment, answerhood and answer generation from a problem file.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "pqa/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"First-order question entailment and answer generation"};
  pqa::RunOptions o;
  std::string mode = "answer";
  std::string file;
  std::string algorithm = "tableau";
  std::string equality = "off";

  app.add_option("mode", mode, "answer | entail | check-development | check-answer")
      ->required()
      ->check(CLI::IsMember({"answer", "entail", "check-development", "check-answer"}));
  app.add_option("file", file, "problem file")->required()->check(CLI::ExistingFile);

  app.add_option("--max-level", o.max_level, "deepening levels for the answer stream")->check(CLI::NonNegativeNumber);
  app.add_option("--max-answers", o.max_answers, "stop after this many answers");
  app.add_option("--max-instances", o.max_instances, "Add Instance applications per tableau")->check(CLI::NonNegativeNumber);
  app.add_option("--timeout-ms", o.timeout_ms, "wall-clock budget, 0 for none")->check(CLI::NonNegativeNumber);
  app.add_flag("--horn", o.horn, "Prolog restriction: Horn theory, atomic question");
  app.add_flag("--assume-rigid", o.assume_rigid, "treat every function symbol as rigid");
  app.add_option("--algorithm", algorithm, "tableau (stream) or enumerate (developments)")
      ->check(CLI::IsMember({"tableau", "enumerate"}));
  app.add_option("--depth", o.depth, "development depth for --algorithm=enumerate")->check(CLI::NonNegativeNumber);
  app.add_option("--equality", equality, "off | axioms")->check(CLI::IsMember({"off", "axioms"}));
  app.add_option("--max-gamma", o.max_gamma, "largest gamma multiplicity")->check(CLI::PositiveNumber);
  app.add_option("--max-branches", o.max_branches, "branch bound per tableau");
  app.add_flag("--trace", o.trace, "dump tableaux and schedule to stderr");
  app.add_flag("--oracle,!--no-oracle", o.oracle, "use the finite-model oracle (default on)");
  app.add_flag("--prover,!--no-prover", o.prover, "use the tableau prover (default on)");
  app.add_option("--max-worlds", o.max_worlds, "oracle world bound")->check(CLI::Range(1, 2));
  app.add_option("--max-domain", o.max_domain, "oracle domain bound")->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "threads for the oracle")->check(CLI::PositiveNumber);
  app.add_flag("--show-translation", o.show_translation, "print the classical sequent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : pqa::exit_code::usage;
  }

  static const std::map<std::string, pqa::Mode> modes{{"answer", pqa::Mode::answer},
                                                     {"entail", pqa::Mode::entail},
                                                     {"check-development", pqa::Mode::check_development},
                                                     {"check-answer", pqa::Mode::check_answer}};
  o.mode = modes.at(mode);
  o.enumerate = algorithm == "enumerate";
  o.equality_axioms = equality == "axioms";

  try {
    pqa::ProblemFile pf = pqa::load_problem(file);
    return pqa::run(pf, o, std::cout, std::cerr);
  } catch (const pqa::ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return pqa::exit_code::usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pqa::exit_code::usage;
  }
}
