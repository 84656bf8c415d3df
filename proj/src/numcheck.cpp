#include "fploc/numcheck.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace fploc {

namespace {

constexpr double kAbsFloor = 1e-12;

// Relative to the conditioning of the sum: a cancelling sum (exact value 0,
// e.g. every class below degree q) is judged against the magnitude of its
// terms, with an absolute floor near zero.
double rel_error(double got, double want, double term_magnitude) {
  double scale = std::max({std::abs(want), term_magnitude, kAbsFloor});
  return std::abs(got - want) / scale;
}

// One component evaluated in plain double arithmetic, without the symbolic
// reduction: numerator polynomial over the product of weight values.
double contribution_double(const Model& m, const FixedComponent& comp, const ClassExpr& cls,
                           std::span<const double> x) {
  if (comp.local_integral)
    return comp.constant.to_double() * comp.local_integral->eval_double(x);
  double num = eval_at_weights(cls, comp.weights).eval_double(x);
  double den = comp.weights.sign;
  for (const auto& w : comp.weights.weights) den *= w.eval_double(x);
  return sign_convention_factor(m).to_double() * comp.constant.to_double() * num / den;
}

}  // namespace

OracleReport random_point_oracle(const Model& m, const ClassExpr& cls, int trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!cls.degree().has_value())
    throw std::invalid_argument("oracle requires a homogeneous class expression");
  m.validate();

  LocalizationResult symbolic = localization_sum(m, cls);

  OracleReport report;
  report.symbolic_polynomial = symbolic.is_polynomial();
  if (!report.symbolic_polynomial) {
    report.note = "symbolic side is NotPolynomial: " + symbolic.total.to_string();
    return report;
  }

  // Hyperplanes the sample point must avoid: every weight and every
  // denominator factor of a precomputed local integral.
  std::vector<LinearForm> avoid;
  for (const auto& comp : m.components) {
    avoid.insert(avoid.end(), comp.weights.weights.begin(), comp.weights.weights.end());
    if (comp.local_integral)
      avoid.insert(avoid.end(), comp.local_integral->denom_factors().begin(),
                   comp.local_integral->denom_factors().end());
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num_dist(-19, 19);
  std::uniform_int_distribution<int> den_dist(1, 2);

  constexpr int kResampleCap = 10000;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rational> x;
    bool found = false;
    for (int attempt = 0; attempt < kResampleCap && !found; ++attempt) {
      x.clear();
      for (std::size_t i = 0; i < m.k; ++i)
        x.emplace_back(num_dist(rng), den_dist(rng));
      found = true;
      for (const auto& w : avoid) {
        if (w.eval(x).is_zero()) {
          found = false;
          break;
        }
      }
    }
    if (!found)
      throw std::runtime_error("resampling exhausted: weight hyperplanes cover the sample box");

    std::vector<double> xd;
    xd.reserve(x.size());
    for (const auto& c : x) xd.push_back(c.to_double());

    double numeric = 0.0;
    double magnitude = 0.0;
    for (const auto& comp : m.components) {
      double v = contribution_double(m, comp, cls, xd);
      numeric += v;
      magnitude += std::abs(v);
    }
    double exact = symbolic.polynomial->eval(x).to_double();

    report.max_rel_error = std::max(report.max_rel_error, rel_error(numeric, exact, magnitude));
    ++report.trials_run;
  }
  return report;
}

void QuadratureSpec::validate() const {
  if (n_theta < 8 || n_phi < 8)
    throw std::invalid_argument("quadrature grid sizes must be >= 8");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
}

double dh_quadrature(const QuadratureSpec& spec) {
  spec.validate();
  // Composite Simpson needs an even panel count.
  int nz = spec.n_theta % 2 == 0 ? spec.n_theta : spec.n_theta + 1;
  double hz = 2.0 / nz;
  double hphi = 2.0 * std::numbers::pi / spec.n_phi;

  double total = 0.0;
  for (int i = 0; i <= nz; ++i) {
    double z = -1.0 + i * hz;
    double wz = (i == 0 || i == nz) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    // Midpoint rule around the circle.
    double ring = 0.0;
    for (int j = 0; j < spec.n_phi; ++j) ring += std::exp(spec.t * z) * hphi;
    total += wz * ring;
  }
  return total * hz / 3.0;
}

double dh_localization(double t) {
  if (t == 0.0)
    throw std::invalid_argument("dh_localization has a pole at t = 0 (the limit is 4*pi)");
  return 2.0 * std::numbers::pi * (std::exp(t) - std::exp(-t)) / t;
}

}  // namespace fploc
