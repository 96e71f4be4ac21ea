#include "command.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "litf/litf.hpp"
#include "parse.hpp"

namespace litf::cli {
namespace {

using io::json;

constexpr std::array<std::pair<Verb, std::string_view>, 8> kVerbs = {{
    {Verb::Synthesize, "synthesize"},
    {Verb::CheckIsotone, "check-isotone"},
    {Verb::CheckClassical, "check-classical"},
    {Verb::BetaCuts, "beta-cuts"},
    {Verb::Representable, "representable"},
    {Verb::Cuts, "cuts"},
    {Verb::Canonical, "canonical"},
    {Verb::Quotient, "quotient"},
}};

// Bad command-line usage (as opposed to bad input data).
class InvocationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvocationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  auto blank = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), blank));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), blank).base(), s.end());
  return s;
}

BooleanFunction load_function(const Command& cmd) {
  const int sources = cmd.table.has_value() + cmd.expr.has_value() + cmd.file.has_value();
  if (sources != 1) {
    throw InvocationError("give exactly one of --table, --expr, --file");
  }
  std::optional<BooleanFunction> f;
  if (cmd.table) {
    f = parse_truth_table(*cmd.table);
  } else if (cmd.expr) {
    f = parse_expression(*cmd.expr, cmd.n.value_or(0));
  } else {
    const std::string text = trim(read_input(*cmd.file));
    const bool table = !text.empty() && std::all_of(text.begin(), text.end(),
                                                    [](char c) { return c == '0' || c == '1'; });
    f = table ? parse_truth_table(text) : parse_expression(text, cmd.n.value_or(0));
  }
  if (cmd.n && *cmd.n != f->arity()) {
    throw InvocationError("--n " + std::to_string(*cmd.n) + " does not match input arity " +
                          std::to_string(f->arity()));
  }
  return *f;
}

json load_json_file(const Command& cmd) {
  if (!cmd.file || cmd.table || cmd.expr) {
    throw InvocationError(std::string(to_string(cmd.verb)) + " reads its input from --file");
  }
  return io::parse(read_input(*cmd.file));
}

void require_format(const Command& cmd, std::initializer_list<Format> allowed) {
  if (std::find(allowed.begin(), allowed.end(), cmd.format) == allowed.end()) {
    throw InvocationError("output format not available for " + std::string(to_string(cmd.verb)));
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json point_pair(const std::optional<std::pair<Point, Point>>& p) {
  if (!p) return nullptr;
  return json::array({p->first.to_string(), p->second.to_string()});
}

std::string subset_text(const Domain& d, const Subset& s) { return d.format(s); }

int do_synthesize(const Command& cmd, std::ostream& out, std::ostream& err) {
  require_format(cmd, {Format::Text, Format::Json});
  const BooleanFunction f = load_function(cmd);
  if (auto bad = find_monotonicity_violation(f)) {
    err << "not isotone: f(" << bad->first.to_string() << ") = 1 but f("
        << bad->second.to_string() << ") = 0; no lattice-induced threshold representation\n";
    return kExitNegative;
  }
  const FdlThresholdRepr repr = synthesize_threshold(f);
  if (cmd.format == Format::Json) {
    json weights = json::array();
    for (const auto& w : repr.weights) weights.push_back(w.to_string());
    json clauses = json::array();
    for (Clause c : repr.threshold.clauses()) {
      json generators = json::array();
      for (int j = 0; j < f.arity(); ++j) {
        if ((c >> j) & 1U) generators.push_back(j + 1);
      }
      clauses.push_back(generators);
    }
    json minimal = json::array();
    for (Point m : minimal_elements(f.truth(), f.arity())) minimal.push_back(m.to_string());
    emit(out, {{"n", f.arity()},
               {"table", f.to_table()},
               {"weights", weights},
               {"threshold", repr.threshold.to_string()},
               {"clauses", clauses},
               {"minimal_points", minimal}});
  } else {
    out << "n = " << f.arity() << '\n' << "weights =";
    for (const auto& w : repr.weights) out << ' ' << w.to_string();
    out << '\n' << "t = " << repr.threshold.to_string() << '\n';
  }
  return kExitOk;
}

int do_check_isotone(const Command& cmd, std::ostream& out) {
  require_format(cmd, {Format::Text, Format::Json});
  const BooleanFunction f = load_function(cmd);
  const bool isotone = is_isotone(f);
  const auto bad = find_monotonicity_violation(f);
  if (cmd.format == Format::Json) {
    emit(out, {{"n", f.arity()}, {"isotone", isotone}, {"counterexample", point_pair(bad)}});
  } else if (isotone) {
    out << "isotone\n";
  } else {
    out << "not isotone: f(" << bad->first.to_string() << ") = 1 but f("
        << bad->second.to_string() << ") = 0\n";
  }
  return isotone ? kExitOk : kExitNegative;
}

int do_check_classical(const Command& cmd, std::ostream& out) {
  require_format(cmd, {Format::Text, Format::Json});
  const BooleanFunction f = load_function(cmd);
  const auto witness = is_classical_threshold(f);
  if (cmd.format == Format::Json) {
    json j = {{"n", f.arity()}, {"threshold_function", witness.has_value()}};
    if (witness) {
      json weights = json::array();
      for (const auto& w : witness->weights) weights.push_back(format_rational(w));
      j["weights"] = weights;
      j["threshold"] = format_rational(witness->threshold);
    }
    emit(out, j);
  } else if (witness) {
    out << "classical threshold function\nweights =";
    for (const auto& w : witness->weights) out << ' ' << format_rational(w);
    out << "\nt = " << format_rational(witness->threshold) << '\n';
  } else {
    out << "not a classical threshold function\n";
  }
  return witness ? kExitOk : kExitNegative;
}

int do_beta_cuts(const Command& cmd, std::ostream& out) {
  if (!cmd.n || cmd.table || cmd.expr || cmd.file) {
    throw InvocationError("beta-cuts takes only --n");
  }
  const LValuedFunction beta = beta_bar(*cmd.n);
  const ClosureSystem cuts = cut_collection(beta);
  const ThetaPartition theta = theta_classes(beta);
  // Each cut is labelled by the largest threshold producing it.
  std::vector<std::string> thresholds(cuts.size());
  for (Element sup : theta.suprema) {
    thresholds[*cuts.index_of(cut(beta, sup))] = beta.codomain().label(sup);
  }
  if (cmd.format == Format::Dot) {
    out << to_dot(from_closure_system(cuts), "beta_cuts");
    return kExitOk;
  }
  if (cmd.format == Format::Json) {
    json list = json::array();
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      list.push_back({{"threshold", thresholds[i]},
                      {"members", io::subset_to_json(cuts.domain(), cuts.members()[i])}});
    }
    emit(out, {{"n", *cmd.n}, {"count", cuts.size()}, {"cuts", list}});
    return kExitOk;
  }
  out << cuts.size() << " distinct cuts of beta-bar on {0,1}^" << *cmd.n << '\n';
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    out << "t = " << thresholds[i] << " : " << subset_text(cuts.domain(), cuts.members()[i])
        << '\n';
  }
  return kExitOk;
}

json condition_json(const ConditionResult& c) {
  return {{"holds", c.holds}, {"counterexample", point_pair(c.counterexample)}};
}

void condition_text(std::ostream& out, const char* name, const ConditionResult& c) {
  out << "condition " << name << ": ";
  if (c.holds) {
    out << "holds\n";
  } else {
    out << "fails at x = " << c.counterexample->first.to_string()
        << ", y = " << c.counterexample->second.to_string() << '\n';
  }
}

int do_representable(const Command& cmd, std::ostream& out) {
  const json input = load_json_file(cmd);
  const ClosureSystem parsed = io::closure_system_from_json(input);
  const int n = parsed.domain().cube_arity();
  const ClosureSystem system =
      make_up_set_system(n, {parsed.members().begin(), parsed.members().end()});
  const RepresentabilityReport report = synthesize_linear_representation(system);

  if (cmd.format == Format::Dot) {
    out << to_dot(from_closure_system(system), "closure_system");
  } else if (cmd.format == Format::Json) {
    json rep = nullptr;
    if (report.representation) {
      json weights = json::array();
      for (Element w : report.representation->weights) {
        weights.push_back(report.representation->lattice->label(w));
      }
      rep = {{"lattice", io::to_json(*report.representation->lattice)}, {"weights", weights}};
    }
    emit(out, {{"n", n},
               {"condition_i", condition_json(report.condition_i)},
               {"condition_ii", condition_json(report.condition_ii)},
               {"representation", rep}});
  } else {
    condition_text(out, "(i)", report.condition_i);
    condition_text(out, "(ii)", report.condition_ii);
    if (report.representation) {
      out << "representable by a linear combination over the closure-system lattice\n";
      const auto& rep = *report.representation;
      for (std::size_t i = 0; i < rep.weights.size(); ++i) {
        out << "w" << i + 1 << " = " << rep.lattice->label(rep.weights[i]) << '\n';
      }
    } else {
      out << "not representable by a linear combination\n";
    }
  }
  return report.representable() ? kExitOk : kExitNegative;
}

int do_cuts(const Command& cmd, std::ostream& out) {
  const LValuedFunction mu = io::function_from_json(load_json_file(cmd));
  const ClosureSystem cuts = cut_collection(mu);
  if (cmd.format == Format::Dot) {
    out << to_dot(from_closure_system(cuts), "cuts");
    return kExitOk;
  }
  if (cmd.format == Format::Json) {
    json by_element = json::object();
    for (Element p = 0; p < mu.codomain().size(); ++p) {
      by_element[mu.codomain().label(p)] = io::subset_to_json(mu.domain(), cut(mu, p));
    }
    json j = io::to_json(cuts);
    j["by_element"] = by_element;
    emit(out, j);
    return kExitOk;
  }
  out << cuts.size() << " distinct cuts\n";
  for (Element p = 0; p < mu.codomain().size(); ++p) {
    out << "cut " << mu.codomain().label(p) << " = " << subset_text(mu.domain(), cut(mu, p))
        << '\n';
  }
  return kExitOk;
}

int do_canonical(const Command& cmd, std::ostream& out) {
  const LValuedFunction mu = io::function_from_json(load_json_file(cmd));
  const LValuedFunction hat = canonical_representation(mu);
  if (cmd.format == Format::Dot) {
    out << to_dot(hat.codomain(), "canonical");
  } else if (cmd.format == Format::Json) {
    emit(out, io::to_json(hat));
  } else {
    for (std::size_t x = 0; x < hat.domain().size(); ++x) {
      out << hat.domain().label(x) << " -> " << hat.codomain().label(hat(x)) << '\n';
    }
  }
  return kExitOk;
}

int do_quotient(const Command& cmd, std::ostream& out) {
  const LValuedFunction mu = io::function_from_json(load_json_file(cmd));
  const QuotientLattice q = quotient_lattice(mu);
  if (cmd.format == Format::Dot) {
    out << to_dot(q.lattice, "quotient");
    return kExitOk;
  }
  if (cmd.format == Format::Json) {
    json classes = json::array();
    for (std::size_t i = 0; i < q.partition.classes.size(); ++i) {
      json members = json::array();
      for (Element p : q.partition.classes[i]) members.push_back(mu.codomain().label(p));
      classes.push_back(
          {{"members", members},
           {"supremum", mu.codomain().label(q.partition.suprema[i])},
           {"cut", io::subset_to_json(mu.domain(), q.cuts.members()[q.class_to_cut[i]])}});
    }
    emit(out, {{"classes", classes}, {"lattice", io::to_json(q.lattice)}});
    return kExitOk;
  }
  out << q.partition.classes.size() << " classes\n";
  for (std::size_t i = 0; i < q.partition.classes.size(); ++i) {
    out << q.lattice.label(i) << " sup " << mu.codomain().label(q.partition.suprema[i])
        << " cut " << subset_text(mu.domain(), q.cuts.members()[q.class_to_cut[i]]) << '\n';
  }
  return kExitOk;
}

}  // namespace

std::optional<Verb> verb_from_string(std::string_view name) {
  for (auto [verb, text] : kVerbs) {
    if (text == name) return verb;
  }
  return std::nullopt;
}

std::string_view to_string(Verb verb) {
  for (auto [v, text] : kVerbs) {
    if (v == verb) return text;
  }
  return "?";
}

std::optional<Format> format_from_string(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  return std::nullopt;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.verb) {
      case Verb::Synthesize: return do_synthesize(cmd, out, err);
      case Verb::CheckIsotone: return do_check_isotone(cmd, out);
      case Verb::CheckClassical: return do_check_classical(cmd, out);
      case Verb::BetaCuts: return do_beta_cuts(cmd, out);
      case Verb::Representable: return do_representable(cmd, out);
      case Verb::Cuts: return do_cuts(cmd, out);
      case Verb::Canonical: return do_canonical(cmd, out);
      case Verb::Quotient: return do_quotient(cmd, out);
    }
  } catch (const InvocationError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace litf::cli
