// Command-line front end: check, table, prob, adams, countermodel-search,
// principles, mcgee, triviality.  Exit codes: 0 valid/success, 1 invalid or
// violation found, 2 usage or input error.  With --json exactly one JSON
// document goes to stdout; diagnostics go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "trivalent/consequence.hpp"
#include "trivalent/formula.hpp"
#include "trivalent/principles.hpp"
#include "trivalent/probability.hpp"
#include "trivalent/semantics.hpp"

namespace {

using nlohmann::ordered_json;
using namespace trivalent;

constexpr const char* kSchemaVersion = "1";

struct CommonOptions {
  std::string semantics = "cooper-quasi";
  bool bivalent = false;
  bool json = false;
  int max_atoms = 0;  // 0: keep the defaults

  SemanticsConfig config() const { return SemanticsConfig::from_name(semantics); }
  Mode mode() const { return bivalent ? Mode::Bivalent : Mode::Trivalent; }
  ConsequenceLimits limits() const {
    ConsequenceLimits out;
    if (max_atoms > 0) {
      out.enumeration.max_trivalent_atoms = max_atoms;
      out.enumeration.max_bivalent_atoms = max_atoms;
    }
    return out;
  }
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_mode = true) {
  cmd->add_option("--semantics", opts.semantics,
                  "cooper-quasi (default), definetti-quasi, cooper-sk or "
                  "definetti-sk")
      ->capture_default_str();
  if (with_mode)
    cmd->add_flag("--bivalent", opts.bivalent,
                  "restrict atoms to classical values");
  cmd->add_flag("--json", opts.json, "emit one JSON document on stdout");
  cmd->add_option("--max-atoms", opts.max_atoms,
                  "override the valuation enumeration caps");
}

ordered_json json_valuation(const Valuation& v) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    out[v.names()[i]] = to_string(v.value_at(i));
  return out;
}

ordered_json json_header(const std::string& command,
                         const CommonOptions& opts) {
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  out["semantics"] = opts.semantics;
  return out;
}

Credence load_credence(const std::string& path, const CommonOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open credence file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Credence::from_json_text(buffer.str(), opts.limits().enumeration);
}

// ---- check ------------------------------------------------------------------

int run_check(const CommonOptions& opts, const std::string& logic,
              const std::string& sequent_text, bool exhaustive) {
  Sequent s = parse_sequent(sequent_text);
  SemanticsConfig cfg = opts.config();
  ConsequenceLimits limits = opts.limits();
  Mode mode = opts.mode();

  Verdict verdict;
  if (logic == "c") {
    verdict = entails_c(s, cfg, mode, limits);
  } else if (logic == "ss") {
    if (s.premises.size() > 1)
      throw Error("logic ss takes a single premise");
    FormulaPtr premise = s.premises.empty() ? top() : s.premises[0];
    verdict = entails_ss(premise, s.conclusion, cfg, mode, limits);
  } else if (logic == "u") {
    verdict = entails_u(s, cfg, mode, limits);
  } else {
    throw Error("unknown logic '" + logic + "' (use c, ss or u)");
  }

  if (opts.json) {
    ordered_json out = json_header("check", opts);
    out["logic"] = logic;
    out["mode"] = to_string(mode);
    out["sequent"] = render(s);
    out["verdict"] = verdict.is_valid() ? "valid" : "invalid";
    if (verdict.countermodel)
      out["countermodel"] = json_valuation(*verdict.countermodel);
    if (verdict.witness_subset) {
      ordered_json witness = ordered_json::array();
      for (std::size_t idx : *verdict.witness_subset)
        witness.push_back(idx);
      out["witness_subset"] = std::move(witness);
    }
    if (exhaustive && logic == "u") {
      ordered_json subsets = ordered_json::array();
      for (const auto& outcome : u_subset_outcomes(s, cfg, mode, limits)) {
        ordered_json entry;
        entry["subset"] = outcome.subset;
        entry["conjunction"] = render(subset_conjunction(s, outcome.subset));
        if (outcome.countermodel)
          entry["countermodel"] = json_valuation(*outcome.countermodel);
        else
          entry["witnesses_validity"] = true;
        subsets.push_back(std::move(entry));
      }
      out["subsets"] = std::move(subsets);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (verdict.is_valid() ? "Valid" : "Invalid") << "  [logic "
              << logic << ", " << opts.semantics << ", " << to_string(mode)
              << "]\n";
    if (verdict.countermodel)
      std::cout << "  countermodel: " << verdict.countermodel->to_string()
                << "\n";
    if (verdict.witness_subset) {
      std::cout << "  witness subset:";
      if (verdict.witness_subset->empty()) std::cout << " (empty)";
      for (std::size_t idx : *verdict.witness_subset)
        std::cout << " [" << idx << "] " << render(*s.premises[idx]);
      std::cout << "\n";
    }
    if (exhaustive && logic == "u") {
      for (const auto& outcome : u_subset_outcomes(s, cfg, mode, limits)) {
        std::cout << "  subset {";
        for (std::size_t i = 0; i < outcome.subset.size(); ++i)
          std::cout << (i ? "," : "") << outcome.subset[i];
        std::cout << "} " << render(subset_conjunction(s, outcome.subset))
                  << ": ";
        if (outcome.countermodel)
          std::cout << "fails at " << outcome.countermodel->to_string()
                    << "\n";
        else
          std::cout << "witnesses validity\n";
      }
    }
  }
  return verdict.is_valid() ? 0 : 1;
}

// ---- table ------------------------------------------------------------------

int run_table(const CommonOptions& opts, const std::string& formula_text) {
  FormulaPtr f = parse(formula_text);
  TruthTable table =
      truth_table(*f, opts.config(), opts.mode(), opts.limits().enumeration);

  if (opts.json) {
    ordered_json out = json_header("table", opts);
    out["formula"] = render(*f);
    out["mode"] = to_string(opts.mode());
    out["atoms"] = table.space.names();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < table.space.size(); ++i) {
      ordered_json row;
      row["valuation"] = json_valuation(table.space.at(i));
      row["value"] = to_string(table.values[i]);
      rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  const auto& names = table.space.names();
  for (const auto& name : names)
    std::cout << std::setw(4) << name;
  std::cout << "  | " << render(*f) << "\n";
  for (const auto& name : names)
    std::cout << "----" << std::string(name.size() > 4 ? name.size() - 4 : 0, '-');
  std::cout << "--+-" << std::string(render(*f).size() + 1, '-') << "\n";
  for (std::size_t i = 0; i < table.space.size(); ++i) {
    Valuation v = table.space.at(i);
    for (std::size_t k = 0; k < v.size(); ++k)
      std::cout << std::setw(4) << to_string(v.value_at(k));
    std::cout << "  | " << to_string(table.values[i]) << "\n";
  }
  return 0;
}

// ---- prob -------------------------------------------------------------------

int run_prob(const CommonOptions& opts, const std::string& credence_path,
             const std::string& formula_text) {
  Credence cr = load_credence(credence_path, opts);
  FormulaPtr f = parse(formula_text);
  SemanticsConfig cfg = opts.config();
  TruthPartition parts = partition(*f, cr, cfg);
  Rational p = probability(*f, cr, cfg);

  std::string odds_text;
  if (parts.true_mass == 0 && parts.false_mass == 0)
    odds_text = "undefined";
  else {
    DecimalOdds odds = decimal_odds(*f, cr, cfg);
    odds_text = odds.is_infinite ? "infinite" : rational_to_string(odds.value);
  }

  if (opts.json) {
    ordered_json out = json_header("prob", opts);
    out["formula"] = render(*f);
    out["probability"] = rational_to_string(p);
    out["partition"] = {
        {"true", rational_to_string(parts.true_mass)},
        {"indeterminate", rational_to_string(parts.indeterminate_mass)},
        {"false", rational_to_string(parts.false_mass)}};
    out["decimal_odds"] = odds_text;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "p(" << render(*f) << ") = " << rational_to_string(p) << "\n"
              << "  mass true " << rational_to_string(parts.true_mass)
              << ", indeterminate "
              << rational_to_string(parts.indeterminate_mass) << ", false "
              << rational_to_string(parts.false_mass) << "\n"
              << "  decimal odds " << odds_text << "\n";
  }
  return 0;
}

// ---- adams ------------------------------------------------------------------

int run_adams(const CommonOptions& opts, const std::string& credence_path,
              const std::string& antecedent_text,
              const std::string& consequent_text) {
  Credence cr = load_credence(credence_path, opts);
  FormulaPtr a = parse(antecedent_text);
  FormulaPtr c = parse(consequent_text);
  SemanticsConfig cfg = opts.config();
  Rational lhs = probability(*cond(a, c), cr, cfg);
  Rational rhs = conditional_probability(*c, *a, cr);
  Rational residual = lhs - rhs;

  if (opts.json) {
    ordered_json out = json_header("adams", opts);
    out["conditional"] = render(*cond(a, c));
    out["p_conditional"] = rational_to_string(lhs);
    out["p_consequent_given_antecedent"] = rational_to_string(rhs);
    out["residual"] = rational_to_string(residual);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "p(" << render(*cond(a, c)) << ") = " << rational_to_string(lhs)
              << "\n"
              << "p(" << render(*c) << " | " << render(*a)
              << ") = " << rational_to_string(rhs) << "\n"
              << "residual = " << rational_to_string(residual) << "\n";
  }
  return residual == 0 ? 0 : 1;
}

// ---- countermodel-search ----------------------------------------------------

int run_search(const CommonOptions& opts, const std::string& sequent_text,
               std::size_t budget, std::uint64_t seed) {
  Sequent s = parse_sequent(sequent_text);
  SemanticsConfig cfg = opts.config();
  auto result =
      search_probabilistic_countermodel(s, cfg, budget, seed, opts.limits());

  if (opts.json) {
    ordered_json out = json_header("countermodel-search", opts);
    out["sequent"] = render(s);
    out["seed"] = seed;
    out["budget"] = budget;
    out["found"] = result.has_value();
    if (result) {
      ordered_json certs = ordered_json::array();
      for (const auto& cert : result->certificates) {
        ordered_json entry;
        entry["subset"] = cert.subset;
        entry["conjunction"] = render(*cert.subset_formula);
        entry["credence"] =
            ordered_json::parse(cert.credence.to_json_text());
        entry["p_conjunction"] = rational_to_string(cert.premise_probability);
        entry["p_conclusion"] =
            rational_to_string(cert.conclusion_probability);
        certs.push_back(std::move(entry));
      }
      out["certificates"] = std::move(certs);
    }
    std::cout << out.dump(2) << "\n";
    return result ? 1 : 0;
  }

  if (!result) {
    std::cout << "inconclusive: no probabilistic countermodel within budget "
              << budget << " (not a validity proof)\n";
    return 0;
  }
  std::cout << "probabilistic countermodel found: every premise subset "
               "fails\n";
  for (const auto& cert : result->certificates) {
    std::cout << "  p(" << render(*cert.subset_formula)
              << ") = " << rational_to_string(cert.premise_probability)
              << " > " << rational_to_string(cert.conclusion_probability)
              << " = p(" << render(*s.conclusion) << ")  under "
              << cert.credence.to_json_text() << "\n";
  }
  return 1;
}

// ---- principles -------------------------------------------------------------

int run_principles(const CommonOptions& opts) {
  PrincipleReport report = full_report(opts.config(), opts.limits());

  if (opts.json) {
    ordered_json out = json_header("principles", opts);
    out["mismatches"] = report.mismatches;
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
      ordered_json entry;
      entry["name"] = row.principle;
      entry["group"] = row.group;
      entry["fixture"] = row.fixture;
      entry["logic"] = to_string(row.logic);
      entry["mode"] = to_string(row.mode);
      entry["expected"] = row.expected_valid ? "valid" : "invalid";
      entry["computed"] = row.computed_valid ? "valid" : "invalid";
      if (row.countermodel) entry["countermodel"] = *row.countermodel;
      rows.push_back(std::move(entry));
    }
    out["rows"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(46) << "principle" << std::setw(7)
              << "logic" << std::setw(11) << "mode" << std::setw(10)
              << "expected" << std::setw(10) << "computed" << "\n";
    std::cout << std::string(84, '-') << "\n";
    for (const auto& row : report.rows) {
      std::cout << std::left << std::setw(46) << row.principle << std::setw(7)
                << to_string(row.logic) << std::setw(11) << to_string(row.mode)
                << std::setw(10) << (row.expected_valid ? "valid" : "invalid")
                << std::setw(10) << (row.computed_valid ? "valid" : "invalid")
                << (row.mismatch() ? "  MISMATCH" : "") << "\n";
    }
    std::cout << report.mismatches << " mismatch"
              << (report.mismatches == 1 ? "" : "es") << "\n";
  }
  return report.mismatches == 0 ? 0 : 1;
}

// ---- mcgee ------------------------------------------------------------------

int run_mcgee(const CommonOptions& opts) {
  McGeeReport report = mcgee_demo();
  bool ok = report.total_probability_exact && report.nested_decomposition_exact;

  if (opts.json) {
    ordered_json out = json_header("mcgee", opts);
    out["credence"] = ordered_json::parse(report.credence.to_json_text());
    out["p_major_premise"] = rational_to_string(report.p_major);
    out["p_minor_premise"] = rational_to_string(report.p_minor);
    out["p_conclusion"] = rational_to_string(report.p_conclusion);
    out["total_probability_exact"] = report.total_probability_exact;
    out["nested_decomposition_exact"] = report.nested_decomposition_exact;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "election credence: " << report.credence.to_json_text()
              << "\n"
              << "p((r | n) -> (~r -> n)) = "
              << rational_to_string(report.p_major) << "\n"
              << "p(r | n)                = "
              << rational_to_string(report.p_minor) << "\n"
              << "p(~r -> n)              = "
              << rational_to_string(report.p_conclusion) << "\n"
              << "total probability decomposition exact: "
              << (report.total_probability_exact ? "yes" : "NO") << "\n"
              << "nested decomposition exact: "
              << (report.nested_decomposition_exact ? "yes" : "NO") << "\n";
  }
  return ok ? 0 : 1;
}

// ---- triviality -------------------------------------------------------------

int run_triviality(const CommonOptions& opts, std::uint64_t seed) {
  TrivialityReport report = triviality_witness(seed);
  bool ok = report.p_conditional != report.p_consequent &&
            report.p_both > 0 && report.p_with_negation > 0 &&
            report.preservation_holds;

  if (opts.json) {
    ordered_json out = json_header("triviality", opts);
    out["credence"] = ordered_json::parse(report.credence.to_json_text());
    out["p_conditional"] = rational_to_string(report.p_conditional);
    out["p_consequent"] = rational_to_string(report.p_consequent);
    out["p_antecedent_and_consequent"] = rational_to_string(report.p_both);
    out["p_antecedent_and_negation"] =
        rational_to_string(report.p_with_negation);
    out["preservation_checks"] = report.preservation_checks;
    out["preservation_holds"] = report.preservation_holds;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "witness credence: " << report.credence.to_json_text() << "\n"
              << "p(a -> c) = " << rational_to_string(report.p_conditional)
              << "  !=  p(c) = " << rational_to_string(report.p_consequent)
              << "\n"
              << "compatibility: p(a & c) = "
              << rational_to_string(report.p_both) << ", p(a & ~c) = "
              << rational_to_string(report.p_with_negation) << "\n"
              << "preservation condition verified on "
              << report.preservation_checks << " random credences: "
              << (report.preservation_holds ? "yes" : "NO") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trivalent semantics of indicative conditionals: truth "
               "tables, exact probability and the logics C, SS and U"};
  app.require_subcommand(1);

  CommonOptions check_opts, table_opts, prob_opts, adams_opts, search_opts,
      principles_opts, mcgee_opts, triviality_opts;

  auto* check = app.add_subcommand(
      "check", "decide a sequent \"P1; P2 |- C\" in logic c, ss or u");
  std::string check_logic = "c";
  std::string check_sequent;
  bool check_exhaustive = false;
  check->add_option("--logic", check_logic, "c, ss or u")->required();
  check->add_option("sequent", check_sequent, "\"P1; P2; ... |- C\"")
      ->required();
  check->add_flag("--exhaustive", check_exhaustive,
                  "list the outcome of every premise subset (logic u)");
  add_common(check, check_opts);

  auto* table = app.add_subcommand("table", "print a truth table");
  std::string table_formula;
  table->add_option("formula", table_formula, "formula text")->required();
  add_common(table, table_opts);

  auto* prob = app.add_subcommand(
      "prob", "probability of a formula under a credence file");
  std::string prob_credence, prob_formula;
  prob->add_option("--credence", prob_credence, "credence JSON file")
      ->required();
  prob->add_option("formula", prob_formula, "formula text")->required();
  add_common(prob, prob_opts, false);

  auto* adams = app.add_subcommand(
      "adams", "compare p(a -> c) with p(c | a) under a credence file");
  std::string adams_credence, adams_a, adams_c;
  adams->add_option("--credence", adams_credence, "credence JSON file")
      ->required();
  adams->add_option("antecedent", adams_a, "conditional-free formula")
      ->required();
  adams->add_option("consequent", adams_c, "conditional-free formula")
      ->required();
  add_common(adams, adams_opts, false);

  auto* search = app.add_subcommand(
      "countermodel-search",
      "look for credences making every premise subset more probable than "
      "the conclusion");
  std::string search_sequent;
  std::size_t search_budget = 1000;
  std::uint64_t search_seed = 1;
  search->add_option("sequent", search_sequent, "\"P1; P2; ... |- C\"")
      ->required();
  search->add_option("--budget", search_budget, "random samples per subset")
      ->capture_default_str();
  search->add_option("--seed", search_seed, "random seed")
      ->capture_default_str();
  add_common(search, search_opts, false);

  auto* principles = app.add_subcommand(
      "principles", "reproduce the inference-principle table in C and U");
  add_common(principles, principles_opts, false);

  auto* mcgee = app.add_subcommand(
      "mcgee", "three-outcome election credence for nested Modus Ponens");
  add_common(mcgee, mcgee_opts, false);

  auto* triviality = app.add_subcommand(
      "triviality", "credence with p(a -> c) != p(c) plus preservation "
                    "spot-checks");
  std::uint64_t triviality_seed = 1;
  triviality->add_option("--seed", triviality_seed, "random seed")
      ->capture_default_str();
  add_common(triviality, triviality_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed())
      return run_check(check_opts, check_logic, check_sequent,
                       check_exhaustive);
    if (table->parsed()) return run_table(table_opts, table_formula);
    if (prob->parsed()) return run_prob(prob_opts, prob_credence, prob_formula);
    if (adams->parsed())
      return run_adams(adams_opts, adams_credence, adams_a, adams_c);
    if (search->parsed())
      return run_search(search_opts, search_sequent, search_budget,
                        search_seed);
    if (principles->parsed()) return run_principles(principles_opts);
    if (mcgee->parsed()) return run_mcgee(mcgee_opts);
    if (triviality->parsed())
      return run_triviality(triviality_opts, triviality_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
