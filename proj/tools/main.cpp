// Command-line surface for the localization engine: compute characteristic
// numbers, verify fixed-point datasets, list the builtin catalog, and run the
// floating-point cross-checks.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "fploc/catalog.hpp"
#include "fploc/errors.hpp"
#include "fploc/localization.hpp"
#include "fploc/model_io.hpp"
#include "fploc/numcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

bool use_color() {
  return isatty(fileno(stdout)) != 0 && std::getenv("NO_COLOR") == nullptr;
}

std::string verdict(bool pass) {
  if (!use_color()) return pass ? "[PASS]" : "[FAIL]";
  return pass ? "\033[32m[PASS]\033[0m" : "\033[31m[FAIL]\033[0m";
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

struct ModelSource {
  std::string builtin;
  std::string path;

  fploc::Model resolve() const {
    if (!builtin.empty()) return fploc::builtin_model(builtin);
    if (path == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      return fploc::load_model(buf.str());
    }
    return fploc::load_model_file(path);
  }
};

nlohmann::json polynomial_json(const fploc::Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json term;
    term["coeff"] = c.to_string();
    term["exponents"] = e;
    terms.push_back(term);
  }
  return terms;
}

int cmd_compute(const ModelSource& source, const std::string& class_text,
                const std::string& convention, bool structured) {
  fploc::Model model = source.resolve();
  if (!convention.empty())
    model.sign_convention = fploc::sign_convention_from_string(convention);
  model.validate();

  fploc::ClassExpr cls = fploc::ClassExpr::parse(class_text, model.q);
  auto degree = cls.degree();
  if (!degree) {
    std::cerr << "error: class expression is inhomogeneous; "
                 "compute one homogeneous part at a time\n";
    return kExitUsage;
  }

  fploc::LocalizationResult result = fploc::localization_sum(model, cls);
  if (!result.is_polynomial()) {
    std::cerr << "error: inconsistent fixed-point data; the localization sum must be a "
                 "polynomial but denominators survive:\n  "
              << result.total.to_string() << "\n";
    return kExitInconsistent;
  }
  const fploc::Polynomial& sum = *result.polynomial;

  if (structured) {
    nlohmann::json out;
    out["model"] = model.name;
    out["class"] = class_text;
    out["degree"] = *degree;
    out["q"] = model.q;
    out["sum"] = polynomial_json(sum);
    out["sum_text"] = sum.to_string();
    if (*degree == model.q)
      out["characteristic_number"] = fploc::ev_zero(sum).to_string();
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  if (*degree < model.q) {
    std::cout << sum.to_string() << " (degree < q)\n";
  } else if (*degree == model.q && sum.is_constant()) {
    std::cout << fploc::ev_zero(sum).to_string() << "\n";
  } else {
    std::cout << sum.to_string() << "\n";
    if (*degree == model.q)
      std::cout << "characteristic number (ev at 0) = " << fploc::ev_zero(sum).to_string()
                << "\n";
  }
  return kExitOk;
}

int cmd_verify(const ModelSource& source, int max_degree, const std::string& convention,
               bool structured) {
  fploc::Model model = source.resolve();
  if (!convention.empty())
    model.sign_convention = fploc::sign_convention_from_string(convention);
  model.validate();

  std::uint32_t limit = max_degree >= 0 ? static_cast<std::uint32_t>(max_degree) : model.q;
  fploc::VerifyReport report = fploc::verify_model(model, limit);

  if (structured) {
    nlohmann::json out;
    out["model"] = model.name;
    out["max_degree"] = limit;
    out["all_pass"] = report.all_pass;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
      nlohmann::json entry;
      entry["class"] = e.class_text;
      entry["degree"] = e.class_degree;
      entry["polynomial"] = e.is_polynomial;
      entry["degree_ok"] = e.degree_ok;
      entry["pass"] = e.pass;
      entry["value"] = e.value_text;
      entries.push_back(entry);
    }
    out["classes"] = entries;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : report.entries) {
      std::cout << verdict(e.pass) << " degree " << e.class_degree << ": " << e.class_text
                << " -> " << e.value_text;
      if (!e.is_polynomial)
        std::cout << "  (not a polynomial)";
      else if (!e.degree_ok)
        std::cout << "  (wrong degree)";
      std::cout << "\n";
    }
    std::cout << "verify " << model.name << ": " << report.entries.size() << " classes, "
              << (report.all_pass ? "all pass" : "FAILURES above") << "\n";
  }
  return report.all_pass ? kExitOk : kExitInconsistent;
}

int cmd_catalog() {
  for (const auto& info : fploc::catalog_listing()) {
    std::string head = info.name;
    if (!info.params.empty()) head += ":<" + info.params + ">";
    std::printf("%-26s %s\n", head.c_str(), info.description.c_str());
    std::printf("%-26s known: %s\n", "", info.known_numbers.c_str());
  }
  return kExitOk;
}

int cmd_numcheck(const ModelSource& source, const std::string& class_text, int trials,
                 std::uint64_t seed, double tolerance, bool structured) {
  fploc::Model model = source.resolve();
  model.validate();
  fploc::ClassExpr cls = fploc::ClassExpr::parse(class_text, model.q);

  bool all_pass = true;
  nlohmann::json checks = nlohmann::json::array();
  std::ostringstream text;

  fploc::OracleReport oracle = fploc::random_point_oracle(model, cls, trials, seed);
  bool oracle_pass = oracle.symbolic_polynomial && oracle.max_rel_error < tolerance;
  all_pass = all_pass && oracle_pass;
  if (oracle.symbolic_polynomial) {
    text << verdict(oracle_pass) << " oracle " << model.name << " / " << class_text
         << ": max relative error " << format_double(oracle.max_rel_error) << " over "
         << oracle.trials_run << " trials (tolerance " << format_double(tolerance) << ")\n";
  } else {
    text << verdict(false) << " oracle " << model.name << " / " << class_text << ": "
         << oracle.note << "\n";
  }
  checks.push_back({{"check", "oracle"},
                    {"pass", oracle_pass},
                    {"max_rel_error", oracle.max_rel_error},
                    {"trials", oracle.trials_run},
                    {"symbolic_polynomial", oracle.symbolic_polynomial}});

  for (double t : {0.5, 1.0, 2.0}) {
    fploc::QuadratureSpec spec;
    spec.t = t;
    double quad = fploc::dh_quadrature(spec);
    double loc = fploc::dh_localization(t);
    double err = std::abs(quad - loc);
    bool pass = err < spec.tolerance;
    all_pass = all_pass && pass;
    text << verdict(pass) << " dh quadrature t=" << t << ": |quadrature - localization| = "
         << format_double(err) << " (tolerance " << format_double(spec.tolerance) << ")\n";
    checks.push_back({{"check", "dh_quadrature"}, {"t", t}, {"error", err}, {"pass", pass}});
  }

  {
    double exact = fploc::dh_localization(1.0);
    fploc::QuadratureSpec coarse{1.0, 16, 16, 1e-3};
    fploc::QuadratureSpec fine{1.0, 32, 16, 1e-3};
    double e_coarse = std::abs(fploc::dh_quadrature(coarse) - exact);
    double e_fine = std::abs(fploc::dh_quadrature(fine) - exact);
    double ratio = e_fine > 0 ? e_coarse / e_fine : 1e9;
    bool pass = ratio >= 4.0;
    all_pass = all_pass && pass;
    text << verdict(pass) << " dh convergence: doubling n_theta shrinks the error "
         << format_double(ratio) << "x (>= 4 required)\n";
    checks.push_back({{"check", "dh_convergence"}, {"ratio", ratio}, {"pass", pass}});
  }

  if (structured) {
    nlohmann::json out;
    out["model"] = model.name;
    out["class"] = class_text;
    out["seed"] = seed;
    out["all_pass"] = all_pass;
    out["checks"] = checks;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text.str();
    std::cout << "numcheck: " << (all_pass ? "all checks pass" : "FAILURES above") << "\n";
  }
  return all_pass ? kExitOk : kExitInconsistent;
}

void add_model_source(CLI::App* sub, ModelSource& source) {
  auto* group = sub->add_option_group("model source");
  group->add_option("--builtin", source.builtin,
                    "builtin model spec, e.g. cpn:2 or product:s2_rotation*s2_rotation");
  group->add_option("--model", source.path, "model document path ('-' reads stdin)");
  group->require_option(1);
}

void add_format_option(CLI::App* sub, bool& structured) {
  sub->add_option_function<std::string>(
         "--format",
         [&structured](const std::string& v) { structured = (v == "structured"); },
         "output format: text (default) or structured")
      ->check(CLI::IsMember({"text", "structured"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"characteristic numbers of Killing foliations via fixed-point localization"};
  app.require_subcommand(1);

  ModelSource compute_source, verify_source, numcheck_source;
  std::string compute_class, numcheck_class;
  std::string compute_convention, verify_convention;
  bool compute_structured = false, verify_structured = false, numcheck_structured = false;
  int verify_max_degree = -1;
  int numcheck_trials = 50;
  std::uint64_t numcheck_seed = 1;
  double numcheck_tolerance = 1e-9;

  CLI::App* compute =
      app.add_subcommand("compute", "localization sum and characteristic number of a class");
  add_model_source(compute, compute_source);
  compute->add_option("--class", compute_class, "class expression, e.g. 'e' or 'p1^2 - 4*p2'")
      ->required();
  compute->add_option("--sign-convention", compute_convention,
                      "override: classical or paper_corollary")
      ->check(CLI::IsMember({"classical", "paper_corollary"}));
  add_format_option(compute, compute_structured);

  CLI::App* verify = app.add_subcommand(
      "verify", "check forced cancellation for all generator classes up to a degree");
  add_model_source(verify, verify_source);
  verify->add_option("--max-degree", verify_max_degree, "highest class degree (default: q)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--sign-convention", verify_convention,
                     "override: classical or paper_corollary")
      ->check(CLI::IsMember({"classical", "paper_corollary"}));
  add_format_option(verify, verify_structured);

  app.add_subcommand("catalog", "list builtin models and their known numbers");

  CLI::App* numcheck =
      app.add_subcommand("numcheck", "floating-point oracle runs against the symbolic engine");
  add_model_source(numcheck, numcheck_source);
  numcheck->add_option("--class", numcheck_class, "class expression")->required();
  numcheck->add_option("--trials", numcheck_trials, "random points to test (default 50)")
      ->check(CLI::Range(1, 1000000));
  numcheck->add_option("--seed", numcheck_seed, "RNG seed (default 1)");
  numcheck->add_option("--tolerance", numcheck_tolerance,
                       "max relative error for the oracle (default 1e-9)");
  add_format_option(numcheck, numcheck_structured);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("compute"))
      return cmd_compute(compute_source, compute_class, compute_convention, compute_structured);
    if (app.got_subcommand("verify"))
      return cmd_verify(verify_source, verify_max_degree, verify_convention, verify_structured);
    if (app.got_subcommand("catalog")) return cmd_catalog();
    if (app.got_subcommand("numcheck"))
      return cmd_numcheck(numcheck_source, numcheck_class, numcheck_trials, numcheck_seed,
                          numcheck_tolerance, numcheck_structured);
  } catch (const fploc::not_polynomial_error& e) {
    std::cerr << "error: inconsistent fixed-point data: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const fploc::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fploc::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fploc::degree_mismatch_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
