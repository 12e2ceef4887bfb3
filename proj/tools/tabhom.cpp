// tabhom: semistandard expansions of tableau homomorphisms for Hecke algebras.

#include "tabhom/errors.hpp"
#include "tabhom/garnir.hpp"
#include "tabhom/io.hpp"
#include "tabhom/oracle.hpp"
#include "tabhom/props.hpp"
#include "tabhom/straighten.hpp"
#include "tabhom/tabloid.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

using namespace tabhom;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerify = 4;

struct Common {
  std::string format = "text";
  bool strict = false;
  int jobs = 1;
};

std::string read_input(const std::string& arg, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot read " + file);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  if (arg.empty() || arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  return arg;
}

void print_warnings(const ParseNotes& notes) {
  for (const auto& w : notes.warnings) std::cerr << "warning: " << w << "\n";
}

// Runs the H_n oracle on c when n <= cap; returns false only on a failed check.
bool run_check(const LinComb& c, int n, std::optional<int> cap, std::ostream& out, bool json, Json* report) {
  if (!cap) return true;
  if (n > *cap) {
    if (json) (*report)["check"] = "skipped";
    else out << "check: skipped (n = " << n << " > " << *cap << ")\n";
    return true;
  }
  check_oracle_cap(n);
  const bool ok = specht_check(c);
  if (json) (*report)["check"] = ok ? "PASS" : "FAIL";
  else out << "check: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

int cmd_straighten(const Common& common, const std::string& arg, const std::string& file,
                   const std::string& q, std::optional<int> check, const std::string& algorithm,
                   bool alternate) {
  ParseNotes notes;
  const Tableau a = parse_tableau_any(read_input(arg, file), {common.strict}, &notes);
  print_warnings(notes);
  StraightenOptions options;
  if (algorithm == "worklist") options.algorithm = Algorithm::worklist;
  if (alternate) {
    options.window = WindowChoice::bottommost;
    options.column = ColumnChoice::rightmost;
  }
  const LinComb result = Straightener(options).semistandardize(a);
  const bool json = common.format == "json";
  Json report;
  if (q.empty()) {
    if (json) report = lincomb_to_json(result);
    else std::cout << result.to_string();
  } else {
    const RationalLinComb special = specialize(result, parse_rational(q));
    if (json) report = lincomb_to_json(special);
    else std::cout << special.to_string();
  }
  const bool ok = run_check(LinComb::single(a) - result, a.size(), check, std::cout, json, &report);
  if (json) std::cout << report.dump(2) << "\n";
  return ok ? 0 : kExitVerify;
}

int cmd_garnir(const Common& common, const std::string& r, const std::string& s, const std::string& t,
               int m, std::optional<int> check) {
  const GarnirDatum d(parse_multiset(r), parse_multiset(s), parse_multiset(t), m);
  const LinComb rel = garnir_relation(d);
  const bool json = common.format == "json";
  Json report;
  if (json) report = lincomb_to_json(rel);
  else std::cout << rel.to_string();
  const bool ok = run_check(rel, d.n(), check, std::cout, json, &report);
  if (json) std::cout << report.dump(2) << "\n";
  return ok ? 0 : kExitVerify;
}

int cmd_basis(const Common& common, const std::string& mu_text, const std::string& la_text) {
  const Partition mu(parse_composition(mu_text));
  const Composition lambda = parse_composition(la_text);
  require(mu.total() == lambda.total(), "shape " + mu.to_string() + " and type " + lambda.to_string() +
                                            " have different sizes");
  const auto basis = enumerate_semistandard(mu, lambda);
  if (common.format == "json") {
    Json list = Json::array();
    for (const auto& t : basis) list.push_back(tableau_to_json(t));
    std::cout << list.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) std::cout << "\n";
    std::cout << render_tableau_lines(basis[i]);
  }
  return 0;
}

int cmd_verify(const Common& common, const std::string& arg, const std::string& file,
               std::optional<int> props, int max_value, const std::string& route) {
  const bool json = common.format == "json";
  if (props) {
    PropsOptions o;
    o.max_n = *props;
    o.max_value = max_value;
    o.route = route == "hecke" ? OracleRoute::hecke : OracleRoute::tabloid;
    o.jobs = common.jobs;
    bool ok = true;
    Json report = Json::array();
    for (const auto& r : verify_composition_props(o)) {
      ok = ok && r.ok();
      if (json) {
        report.push_back({{"identity", r.name}, {"instances", r.instances}, {"failures", r.failures},
                          {"counterexamples", r.counterexamples}});
      } else {
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.instances << " instances, "
                  << r.failures << " failures\n";
        for (const auto& c : r.counterexamples) std::cout << "  " << c << "\n";
      }
    }
    if (json) std::cout << report.dump(2) << "\n";
    return ok ? 0 : kExitVerify;
  }
  const LinComb c = parse_lincomb_any(read_input(arg, file), {common.strict});
  if (!c.is_zero()) require(c.shape().is_partition(), "shape " + c.shape().to_string() + " is not a partition");
  const bool ok = route == "tabloid" ? specht_check_tabloid(c) : specht_check(c);
  if (json)
    std::cout << Json{{"result", ok ? "PASS" : "FAIL"}}.dump(2) << "\n";
  else
    std::cout << (ok ? "PASS" : "FAIL") << ": combination " << (ok ? "vanishes" : "does not vanish")
              << " on the Specht module\n";
  return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semistandard expansions of tableau homomorphisms for Iwahori-Hecke algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--strict", common.strict, "Reject rows that are not weakly increasing");
  app.add_option("--jobs", common.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  std::optional<int> check;

  auto* straighten = app.add_subcommand("straighten", "Expand phi_A in the semistandard basis");
  std::string tab_arg, tab_file, q, algorithm = "memoized";
  bool alternate = false;
  straighten->add_option("tableau", tab_arg, "Tableau, e.g. \"1 2 2 3 4 / 1 3 3 3\", or - for stdin");
  straighten->add_option("--input", tab_file, "Read the tableau (text or JSON) from a file");
  straighten->add_option("--q", q, "Specialise q to a nonzero rational");
  straighten->add_option("--check", check, "Verify with the H_n oracle when n <= this cap");
  straighten->add_option("--algorithm", algorithm, "memoized or worklist")
      ->check(CLI::IsMember({"memoized", "worklist"}));
  straighten->add_flag("--alternate", alternate, "Bottommost row pair and rightmost column");

  auto* garnir = app.add_subcommand("garnir", "Garnir relation for two-row data R, S, T, m");
  std::string r_text, s_text, t_text;
  int m = 0;
  garnir->add_option("--R", r_text, "Multiset R, e.g. \"\" or \"1 1 2\"");
  garnir->add_option("--S", s_text, "Multiset S")->required();
  garnir->add_option("--T", t_text, "Multiset T");
  garnir->add_option("--m", m, "First row length")->required();
  garnir->add_option("--check", check, "Verify with the H_n oracle when n <= this cap");

  auto* basis = app.add_subcommand("basis", "Semistandard tableaux of shape mu and type lambda");
  std::string mu_text, la_text;
  basis->add_option("mu", mu_text, "Partition, e.g. 5,4")->required();
  basis->add_option("lambda", la_text, "Composition, e.g. 2,3,4")->required();

  auto* verify = app.add_subcommand("verify", "Check that a combination vanishes on the Specht module");
  std::string comb_arg, comb_file, route;
  std::optional<int> props;
  int max_value = 0;
  verify->add_option("combination", comb_arg, "Combination (JSON or text), or - for stdin");
  verify->add_option("--input", comb_file, "Read the combination from a file");
  verify->add_option("--props", props, "Check the composition identities for all n up to this");
  verify->add_option("--max-value", max_value, "Largest entry in --props sweeps (0 = n)");
  verify->add_option("--route", route, "hecke (standard basis of H_n) or tabloid (coordinates in M^la); defaults to hecke, or tabloid with --props")
      ->check(CLI::IsMember({"hecke", "tabloid"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*straighten) return cmd_straighten(common, tab_arg, tab_file, q, check, algorithm, alternate);
    if (*garnir) return cmd_garnir(common, r_text, s_text, t_text, m, check);
    if (*basis) return cmd_basis(common, mu_text, la_text);
    if (*verify) {
      if (route.empty()) route = props ? "tabloid" : "hecke";
      return cmd_verify(common, comb_arg, comb_file, props, max_value, route);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const OracleCapExceeded& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
