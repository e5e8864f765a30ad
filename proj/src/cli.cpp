#include "operalang/cli.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "operalang/enumeration.hpp"
#include "operalang/errors.hpp"
#include "operalang/language.hpp"
#include "operalang/laws.hpp"
#include "operalang/literal.hpp"
#include "operalang/regop.hpp"

namespace operalang {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// An operator expression, or failing that a regular expression.
EpsilonAutomaton automaton_of_text(const std::string& text) {
  if (starts_operator(text, 0)) return build_automaton(parse_expression(text));
  return build_automaton(compile(*parse_regex(text)));
}

int parse_position(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer position", 0);
  }
  if (used != text.size()) throw ParseError("expected an integer position", used);
  return value;
}

struct Options {
  std::string lhs, position, rhs;
  std::string expr, expr2;
  std::string format = "dot";
  int words = -1;
  std::string op;
  std::string leaves;
  int k = 2;
  int samples = 1000;
  int max_pairs = 3;
};

void do_compose(const Options& o, std::ostream& out) {
  const OperadElement a = parse_operator(o.lhs);
  const OperadElement b = parse_operator(o.rhs);
  out << to_literal(compose(a, parse_position(o.position), b)) << "\n";
}

void do_eval(const Options& o, std::ostream& out) {
  const EpsilonAutomaton a = automaton_of_text(o.expr);
  if (o.words >= 0) {
    for (const auto& w : accepted_words(a, o.words)) out << format_word(w) << "\n";
    return;
  }
  out << (o.format == "json" ? to_json(a) : to_dot(a));
}

int do_equiv(const Options& o, std::ostream& out) {
  const auto r = language_equivalent(automaton_of_text(o.expr), automaton_of_text(o.expr2));
  if (r.equivalent) {
    out << "EQUIVALENT\n";
    return kExitOk;
  }
  out << "NOT EQUIVALENT\ncounterexample: " << format_word(*r.counterexample) << "\n";
  return kExitVerification;
}

void do_transform(const Options& o, std::ostream& out) {
  std::string leaves = trim(o.leaves);
  if (!leaves.empty() && leaves.front() != '(') leaves = "(" + leaves + ")";
  const FlatOperator f = !starts_operator(o.expr, 0) && leaves.empty() ? compile(*parse_regex(o.expr))
                                                                       : parse_flat(o.expr + leaves);
  out << to_string(apply_transform(o.op, f)) << "\n";
}

void do_census(const Options& o, std::ostream& out) {
  const Census c = census(o.k);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["k"] = c.arity;
    j["count"] = c.entries.size();
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : c.entries) {
      nlohmann::ordered_json row;
      row["relation"] = to_literal(e.order);
      row["regex"] = e.regex;
      row["dfa_states"] = e.automaton.state_count();
      j["entries"].push_back(row);
    }
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& e : c.entries) out << to_literal(e.order) << "\t" << e.regex << "\n";
}

int do_faithful(const Options& o, std::ostream& out) {
  const FaithfulnessReport r = verify_faithfulness(o.k);
  out << "k = " << r.arity << "\n"
      << "quasiorders: " << r.orders << "\n"
      << "pairs checked: " << r.pairs_checked << "\n"
      << "equivalent pairs: " << r.equivalent_pairs << "\n"
      << "witness failures: " << r.witness_failures << "\n"
      << "max witness length: " << r.max_witness_length << "\n"
      << "max shortest counterexample length: " << r.max_counterexample_length << "\n"
      << "shortest counterexamples within k: "
      << (r.counterexamples_within_arity()
              ? std::string("yes")
              : "no (" + std::to_string(r.counterexamples_longer_than_arity) + " pairs exceed)")
      << "\n";
  for (const auto& p : r.problems) out << "problem: " << p << "\n";
  out << "faithful: " << (r.faithful() ? "yes" : "no") << "\n";
  return r.faithful() ? kExitOk : kExitVerification;
}

int do_laws(const Options& o, std::ostream& out) {
  LawOptions opts;
  opts.random_samples = o.samples;
  opts.max_total_pairs = o.max_pairs;
  bool ok = true;
  for (const auto& r : run_all_laws(opts)) {
    out << kind_name(r.kind) << ": " << r.checks << " checks, " << r.failures << " failures\n";
    for (const auto& e : r.examples) out << "  " << e << "\n";
    ok = ok && r.passed();
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Operads of relations acting on regular languages", "operalang"};
  app.require_subcommand(1);
  Options o;

  auto* compose_cmd = app.add_subcommand("compose", "Compose two operator literals at a position");
  compose_cmd->add_option("lhs", o.lhs, "Outer operator literal")->required();
  compose_cmd->add_option("position", o.position, "Slot of the outer operator (1-based)")->required();
  compose_cmd->add_option("rhs", o.rhs, "Inner operator literal")->required();

  auto* eval_cmd = app.add_subcommand("eval", "Build the automaton of an expression or regex");
  eval_cmd->add_option("expr", o.expr, "Operator expression or regex")->required();
  eval_cmd->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  eval_cmd->add_option("--words", o.words, "List accepted words up to this length")
      ->check(CLI::Range(0, 12));

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide language equivalence");
  equiv_cmd->add_option("first", o.expr, "Operator expression or regex")->required();
  equiv_cmd->add_option("second", o.expr2, "Operator expression or regex")->required();

  auto* compile_cmd = app.add_subcommand("compile", "Compile a regex into one operator");
  compile_cmd->add_option("regex", o.expr, "Regular expression")->required();

  auto* transform_cmd = app.add_subcommand("transform", "Apply a language transform");
  transform_cmd->add_option("--op", o.op, "prefixes, suffixes, factors, subwords or mirror")
      ->required()
      ->check(CLI::IsMember({"prefixes", "suffixes", "factors", "subwords", "mirror"}));
  transform_cmd->add_option("operator", o.expr, "Operator literal, optionally with leaves, or a regex")
      ->required();
  transform_cmd->add_option("leaves", o.leaves, "Leaf list such as (a,b,_,c) or a,b,_,c");

  auto* census_cmd = app.add_subcommand("census", "Languages of every quasiorder of arity k");
  census_cmd->add_option("--k", o.k, "Arity (1..3)")->check(CLI::Range(1, 3));
  census_cmd->add_option("--format", o.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* faithful_cmd = app.add_subcommand("faithful", "Check that quasiorders act faithfully");
  faithful_cmd->add_option("--k", o.k, "Arity (1..3)")->check(CLI::Range(1, 3));

  auto* laws_cmd = app.add_subcommand("laws", "Sweep the operad axioms");
  laws_cmd->add_option("--samples", o.samples, "Random samples per operad")
      ->check(CLI::NonNegativeNumber);
  laws_cmd->add_option("--max-pairs", o.max_pairs, "Pair budget of the exhaustive sweep")
      ->check(CLI::Range(0, 4));

  std::vector<std::string> argv(args);
  if (std::find(argv.begin(), argv.end(), "-") != argv.end()) {
    const std::string piped = trim(std::string(std::istreambuf_iterator<char>(in), {}));
    std::replace(argv.begin(), argv.end(), std::string("-"), piped);
  }
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(std::move(argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitParse;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (*compose_cmd) {
      do_compose(o, buffer);
    } else if (*eval_cmd) {
      do_eval(o, buffer);
    } else if (*equiv_cmd) {
      status = do_equiv(o, buffer);
    } else if (*compile_cmd) {
      buffer << to_string(compile(*parse_regex(o.expr))) << "\n";
    } else if (*transform_cmd) {
      do_transform(o, buffer);
    } else if (*census_cmd) {
      if (o.format == "dot") o.format = "table";
      do_census(o, buffer);
    } else if (*faithful_cmd) {
      status = do_faithful(o, buffer);
    } else if (*laws_cmd) {
      status = do_laws(o, buffer);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ArityError& e) {
    err << "arity error: " << e.what() << "\n";
    return kExitArity;
  } catch (const InvariantError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitParse;
  }
  out << buffer.str();
  return status;
}

}  // namespace operalang
