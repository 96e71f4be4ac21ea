#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "command.hpp"

int main(int argc, char** argv) {
  using litf::cli::Command;
  using litf::cli::Verb;

  CLI::App app{"Lattice-induced threshold functions"};
  app.require_subcommand(1);

  Command cmd;
  std::string format = "text";

  struct Spec {
    Verb verb;
    const char* help;
    bool function_input;
  };
  const Spec specs[] = {
      {Verb::Synthesize, "Build a threshold representation over the free distributive lattice", true},
      {Verb::CheckIsotone, "Test whether a Boolean function is isotone", true},
      {Verb::CheckClassical, "Test for a real-weighted threshold representation", true},
      {Verb::BetaCuts, "List the distinct cuts of the canonical linear map on {0,1}^n", false},
      {Verb::Representable, "Decide linear representability of a closure system of up-sets", false},
      {Verb::Cuts, "Cut collection of a lattice-valued function", false},
      {Verb::Canonical, "Canonical representation of a lattice-valued function", false},
      {Verb::Quotient, "Quotient of the codomain by equal cuts", false},
  };

  for (const Spec& spec : specs) {
    CLI::App* sub = app.add_subcommand(std::string(litf::cli::to_string(spec.verb)), spec.help);
    sub->callback([&cmd, verb = spec.verb] { cmd.verb = verb; });
    if (spec.function_input) {
      sub->add_option("--table", cmd.table, "Truth table of 2^n characters, x1 least significant");
      sub->add_option("--expr", cmd.expr, "Monotone expression, e.g. \"x1&x2 | x3\"");
      sub->add_option("--n", cmd.n, "Arity (lower bound for expressions)");
    }
    if (spec.verb == Verb::BetaCuts) sub->add_option("--n", cmd.n, "Arity")->required();
    if (spec.verb != Verb::BetaCuts) {
      sub->add_option("--file", cmd.file, "Input file, '-' for stdin");
    }
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : litf::cli::kExitInputError;
  }
  cmd.format = *litf::cli::format_from_string(format);
  return litf::cli::run(cmd, std::cout, std::cerr);
}
