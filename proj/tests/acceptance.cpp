// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion is exercised at its stated tolerance; runtimes are
// enforced where the criterion names one.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fploc/catalog.hpp"
#include "fploc/errors.hpp"
#include "fploc/localization.hpp"
#include "fploc/model_io.hpp"
#include "fploc/numcheck.hpp"
#include "support/generators.hpp"

using namespace fploc;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool check(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// --- criterion 1: Euler characteristics -----------------------------------

bool euler_characteristics(std::string& detail) {
  auto start = Clock::now();
  bool ok = true;

  auto chi = [](const Model& m) {
    return characteristic_number(m, ClassExpr::parse("e", m.q));
  };

  ok &= check(chi(builtin_s2_rotation()) == Rational(2), detail, "chi(S^2) != 2");
  for (unsigned n = 1; n <= 5; ++n) {
    ok &= check(chi(builtin_cpn(n)) == Rational(static_cast<long>(n) + 1), detail,
                "chi(CP^" + std::to_string(n) + ") != " + std::to_string(n + 1));
  }
  ok &= check(chi(builtin_s4_t2()) == Rational(2), detail, "chi(S^4) != 2");
  ok &= check(chi(product_model(builtin_s2_rotation(), builtin_s2_rotation())) == Rational(4),
              detail, "chi(S^2 x S^2) != 4");

  double elapsed = seconds_since(start);
  ok &= check(elapsed < 1.0, detail,
              "runtime " + std::to_string(elapsed) + " s exceeds 1 s");
  std::ostringstream note;
  note.setf(std::ios::fixed);
  note.precision(3);
  note << "S^2=2, CP^n=n+1 (n=1..5), S^4=2, S^2xS^2=4 exact in " << elapsed << " s";
  if (ok) detail = note.str();
  return ok;
}

// --- criterion 2: p1[CP^2] = 3 with numeric cross-check --------------------

bool pontryagin_cp2(std::string& detail) {
  Model cp2 = builtin_cpn(2);
  ClassExpr p1 = ClassExpr::parse("p1", 4);
  bool ok = check(characteristic_number(cp2, p1) == Rational(3), detail, "p1[CP^2] != 3");

  OracleReport rep = random_point_oracle(cp2, p1, 50, 20240601);
  ok &= check(rep.symbolic_polynomial, detail, "oracle: symbolic side not polynomial");
  ok &= check(rep.max_rel_error < 1e-9, detail,
              "oracle max relative error " + std::to_string(rep.max_rel_error));
  if (ok) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "p1[CP^2] = 3 exact (signature 1 = p1/3); oracle max rel err %.2e over "
                  "50 points",
                  rep.max_rel_error);
    detail = buf;
  }
  return ok;
}

// --- criterion 3: degree underflow vanishes --------------------------------

bool degree_underflow(std::string& detail) {
  auto start = Clock::now();
  bool ok = true;
  int classes = 0;
  for (const Model& m : catalog_models()) {
    for (std::uint32_t d = 0; d < m.q && ok; d += 2) {
      for (const ClassExpr& cls : generator_classes(m.q, d)) {
        LocalizationResult r = localization_sum(m, cls);
        ++classes;
        ok &= check(r.is_polynomial() && r.polynomial->is_zero(), detail,
                    m.name + " / " + cls.to_string() + " does not vanish");
        if (!ok) break;
      }
    }
  }
  double elapsed = seconds_since(start);
  ok &= check(elapsed < 5.0, detail,
              "runtime " + std::to_string(elapsed) + " s exceeds 5 s");
  if (ok) {
    std::ostringstream note;
    note.setf(std::ios::fixed);
    note.precision(3);
    note << classes << " classes below degree q vanish exactly across "
         << catalog_models().size() << " catalog models in " << elapsed << " s";
    detail = note.str();
  }
  return ok;
}

// --- criterion 4: degree-q classes give constants ---------------------------

bool degree_q_constancy(std::string& detail) {
  bool ok = true;
  int classes = 0;
  for (const Model& m : catalog_models()) {
    for (const ClassExpr& cls : generator_classes(m.q, m.q)) {
      LocalizationResult r = localization_sum(m, cls);
      ++classes;
      ok &= check(r.is_polynomial(), detail, m.name + " / " + cls.to_string() + " not polynomial");
      if (!r.is_polynomial()) continue;
      ok &= check(r.polynomial->is_constant(), detail,
                  m.name + " / " + cls.to_string() + " not a degree-0 polynomial");
      ok &= check(ev_zero(*r.polynomial) == characteristic_number(m, cls), detail,
                  m.name + " / " + cls.to_string() + ": ev_zero != characteristic number");
    }
  }
  if (ok)
    detail = std::to_string(classes) + " degree-q classes are degree-0 polynomials with "
             "ev_zero matching the characteristic number";
  return ok;
}

// --- criterion 5: invariance suite ------------------------------------------

bool invariance_suite(std::string& detail) {
  bool ok = true;
  std::mt19937_64 rng(20240602);
  std::vector<Model> catalog = catalog_models();
  std::uniform_int_distribution<std::size_t> model_pick(0, catalog.size() - 1);

  // Component-order permutation invariance (exact fraction equality), run on
  // catalog and on random (generally inconsistent) datasets alike.
  for (int trial = 0; trial < 200 && ok; ++trial) {
    Model m = trial % 2 == 0 ? catalog[model_pick(rng)] : testgen::random_model(rng);
    auto classes = generator_classes(m.q, m.q);
    std::uniform_int_distribution<std::size_t> class_pick(0, classes.size() - 1);
    const ClassExpr& cls = classes[class_pick(rng)];

    Model shuffled = m;
    std::shuffle(shuffled.components.begin(), shuffled.components.end(), rng);
    ok &= check(localization_sum(m, cls).total == localization_sum(shuffled, cls).total,
                detail, "permutation changed the sum on " + m.name);
  }

  // Global weight scaling leaves every degree-q characteristic number fixed.
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const Model& m = catalog[model_pick(rng)];
    Rational s = testgen::random_nonzero_rational(rng);
    Model scaled = testgen::scale_weights(m, s);
    auto classes = generator_classes(m.q, m.q);
    std::uniform_int_distribution<std::size_t> class_pick(0, classes.size() - 1);
    const ClassExpr& cls = classes[class_pick(rng)];
    ok &= check(characteristic_number(scaled, cls) == characteristic_number(m, cls), detail,
                "weight scaling changed " + m.name + " / " + cls.to_string());
  }

  // Simultaneous (weight sign, epsilon) flip is invisible per component.
  for (int trial = 0; trial < 200 && ok; ++trial) {
    Model m = testgen::random_model(rng);
    std::uniform_int_distribution<std::size_t> comp_pick(0, m.components.size() - 1);
    std::size_t ci = comp_pick(rng);
    Model flipped = m;
    auto& wf = flipped.components[ci].weights;
    std::uniform_int_distribution<std::size_t> weight_pick(0, wf.weights.size() - 1);
    std::size_t wi = weight_pick(rng);
    wf.weights[wi] = -wf.weights[wi];
    wf.sign = -wf.sign;

    auto classes = generator_classes(m.q, m.q);
    std::uniform_int_distribution<std::size_t> class_pick(0, classes.size() - 1);
    const ClassExpr& cls = classes[class_pick(rng)];
    ok &= check(component_contribution(m, m.components[ci], cls) ==
                    component_contribution(flipped, flipped.components[ci], cls),
                detail, "orientation flip changed a contribution");
  }

  // Scaling every c_i scales every characteristic number linearly.
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const Model& m = catalog[model_pick(rng)];
    Rational s = testgen::random_nonzero_rational(rng);
    Model scaled = testgen::scale_constants(m, s);
    auto classes = generator_classes(m.q, m.q);
    std::uniform_int_distribution<std::size_t> class_pick(0, classes.size() - 1);
    const ClassExpr& cls = classes[class_pick(rng)];
    ok &= check(characteristic_number(scaled, cls) == s * characteristic_number(m, cls),
                detail, "c_i scaling is not linear on " + m.name);
  }

  if (ok)
    detail = "permutation, weight-scaling, orientation-flip, and c_i-scaling invariances "
             "hold over 200 randomized trials each";
  return ok;
}

// --- criterion 6: consistency detector --------------------------------------

bool consistency_detector(std::string& detail) {
  bool ok = true;
  for (const Model& m : catalog_models()) {
    for (std::size_t drop = 0; drop < m.components.size() && ok; ++drop) {
      Model broken = m;
      broken.components.erase(broken.components.begin() + static_cast<std::ptrdiff_t>(drop));
      VerifyReport rep = verify_model(broken, 0);  // degree 0 runs exactly class "1"
      ok &= check(!rep.entries.empty() && rep.entries[0].class_text == "1", detail,
                  "verify did not run class \"1\"");
      ok &= check(!rep.entries[0].is_polynomial, detail,
                  m.name + " minus '" + m.components[drop].id +
                      "' still cancels on class \"1\"");
      ok &= check(!rep.all_pass, detail, "verify unexpectedly passed");
    }
  }

  // Exit-code contract end to end: verify on a one-pole sphere exits 3.
#ifdef FPLOC_CLI_PATH
  {
    std::string path = std::string(FPLOC_CLI_PATH) + "_acceptance_broken.json";
    {
      Model broken = builtin_s2_rotation();
      broken.components.pop_back();
      std::FILE* f = std::fopen(path.c_str(), "w");
      if (f) {
        std::string doc = save_model(broken);
        std::fwrite(doc.data(), 1, doc.size(), f);
        std::fclose(f);
      }
    }
    std::string cmd =
        std::string(FPLOC_CLI_PATH) + " verify --model " + path + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    ok &= check(code == 3, detail, "CLI verify exit code " + std::to_string(code) + " != 3");
    std::remove(path.c_str());
  }
#endif

  if (ok)
    detail = "every single-component deletion across the catalog trips NotPolynomial on "
             "class \"1\"; CLI exits 3";
  return ok;
}

// --- criterion 7: numeric localization oracle -------------------------------

bool dh_oracle(std::string& detail) {
  bool ok = true;
  double max_err = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    QuadratureSpec spec{t, 512, 64, 1e-6};
    double err = std::abs(dh_quadrature(spec) - dh_localization(t));
    max_err = std::max(max_err, err);
    ok &= check(err < 1e-6, detail,
                "quadrature vs localization at t=" + std::to_string(t) + ": error " +
                    std::to_string(err));
  }

  double worst_ratio = 1e300;
  for (double t : {0.5, 1.0, 2.0}) {
    double exact = dh_localization(t);
    double coarse = std::abs(dh_quadrature(QuadratureSpec{t, 16, 16, 1e-3}) - exact);
    double fine = std::abs(dh_quadrature(QuadratureSpec{t, 32, 16, 1e-3}) - exact);
    double ratio = fine > 0 ? coarse / fine : 1e300;
    worst_ratio = std::min(worst_ratio, ratio);
    ok &= check(ratio >= 4.0, detail,
                "doubling n_theta shrank the error only " + std::to_string(ratio) + "x");
  }

  if (ok) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "max |quadrature - fixed-point sum| = %.2e at (512,64); doubling n_theta "
                  "shrinks error >= %.1fx",
                  max_err, worst_ratio);
    detail = buf;
  }
  return ok;
}

// --- criterion 8: round trip and fuzz ---------------------------------------

bool roundtrip_and_fuzz(std::string& detail) {
  bool ok = true;
  for (const Model& m : catalog_models())
    ok &= check(load_model(save_model(m)) == m, detail, "catalog round trip broke " + m.name);

  std::mt19937_64 rng(20240603);
  for (int trial = 0; trial < 100 && ok; ++trial) {
    Model m = testgen::random_model(rng);
    m.name = "fuzz_" + std::to_string(trial);
    ok &= check(load_model(save_model(m)) == m, detail, "random round trip failed");
  }

  std::vector<Model> catalog = catalog_models();
  int rejected = 0, accepted = 0;
  for (int trial = 0; trial < 500 && ok; ++trial) {
    nlohmann::json doc = nlohmann::json::parse(save_model(catalog[trial % catalog.size()]));
    std::uniform_int_distribution<int> mutation(0, 13);
    switch (mutation(rng)) {
      // benign edits stay valid
      case 11: doc["name"] = "renamed"; break;
      case 12: if (!doc["components"].empty()) doc["components"][0]["c"] = "2/7"; break;
      case 13: doc["metadata"]["note"] = "mutated"; break;
      case 0: doc["q"] = 3; break;
      case 1: doc["k"] = 0; break;
      case 2: doc.erase("components"); break;
      case 3: doc["components"] = nlohmann::json::array(); break;
      case 4: if (!doc["components"].empty()) doc["components"][0]["epsilon"] = 0; break;
      case 5: if (!doc["components"].empty()) doc["components"][0]["c"] = "0"; break;
      case 6:
        if (!doc["components"].empty() && !doc["components"][0]["weights"].empty())
          for (auto& entry : doc["components"][0]["weights"][0]) entry = 0;
        break;
      case 7:
        if (doc["components"].size() > 1)
          doc["components"][1]["id"] = doc["components"][0]["id"];
        break;
      case 8: if (!doc["components"].empty()) doc["components"][0]["weights"] = 7; break;
      case 9: doc["q"] = "four"; break;
      case 10: if (!doc["components"].empty()) doc["components"][0]["c"] = "1/0"; break;
    }
    try {
      Model m = load_model(doc.dump());
      m.validate();
      ++accepted;
    } catch (const validation_error&) {
      ++rejected;
    } catch (const parse_error&) {
      ++rejected;
    } catch (...) {
      ok = check(false, detail, "mutation escaped with an unnamed exception");
    }
  }

  ok &= check(accepted > 0 && rejected > 0, detail,
              "mutation coverage skew: " + std::to_string(accepted) + " valid / " +
                  std::to_string(rejected) + " rejected");
  if (ok) {
    detail = "load(save(m)) = m on " + std::to_string(catalog.size()) +
             " catalog + 100 random models; 500 mutations -> " + std::to_string(accepted) +
             " still valid / " + std::to_string(rejected) + " named rejections, no crashes";
  }
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<bool(std::string&)> run;
  };

  const std::vector<Criterion> criteria = {
      {1, "Euler characteristics via localization of \"e\"", euler_characteristics},
      {2, "Pontryagin number p1[CP^2] = 3 with numeric cross-check", pontryagin_cp2},
      {3, "degree-underflow cancellation across the catalog", degree_underflow},
      {4, "degree-q classes give constants matching ev_zero", degree_q_constancy},
      {5, "invariance suite (200 randomized trials per property)", invariance_suite},
      {6, "consistency detector on component deletion", consistency_detector},
      {7, "Duistermaat-Heckman quadrature vs fixed-point sum", dh_oracle},
      {8, "round-trip serialization and document fuzzing", roundtrip_and_fuzz},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!pass) ++failures;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
              << criterion.title << " -- " << detail << "\n";
  }

  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: " + std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
