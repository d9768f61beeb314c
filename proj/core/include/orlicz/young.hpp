#ifndef ORLICZ_YOUNG_HPP
#define ORLICZ_YOUNG_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/extended_real.hpp"

namespace orlicz {

struct Grid {
  std::vector<double> pts;

  static Grid log_space(double lo, double hi, int n);
  static Grid linear(double lo, double hi, int n);
};

// A Young function: convex, even, vanishing at 0, possibly jumping to +inf at
// b(). Immutable after construction; all member calls are pure and
// thread-safe.
//
// Supported families:
//   power(p, scaled)       |x|^p / p  (scaled)  or  |x|^p
//   exp_growth             e^|x| - |x| - 1
//   piecewise_linear       convex polyline through user points, linear tail,
//                          optional jump to +inf at a finite b
//   composed(outer, inner) x -> outer(inner^{-1}(|x|))
//   conjugate              numerically maximized sup{ x|y| - base(x) }
class YoungFunction {
 public:
  static YoungFunction power(double p, bool scaled);
  static YoungFunction exp_growth();
  static YoungFunction piecewise_linear(std::vector<std::pair<double, double>> points,
                                        double jump_at = std::numeric_limits<double>::infinity());
  static YoungFunction composed(const YoungFunction& outer, const YoungFunction& inner_inverse);

  ExtReal operator()(double x) const;

  // log Phi(x) given log x; closed form for power families, log(eval) otherwise.
  double log_value(double log_x) const;

  // Generalized inverse inf{ x >= 0 : Phi(x) > y }. Returns b() when Phi never
  // exceeds y (degenerate / bounded case).
  double inverse(double y) const;

  // Complementary function in the sense of Young. Closed form for scaled
  // powers, numeric maximization otherwise.
  YoungFunction conjugate() const;

  // Always the numeric-maximization route, even when a closed form exists.
  // Kept separate so closed forms can be cross-checked against it.
  YoungFunction numeric_conjugate() const;

  double a() const;  // sup{ x >= 0 : Phi(x) = 0 }
  double b() const;  // sup{ x > 0 : Phi(x) < inf }

  bool is_power() const;
  double power_exponent() const;
  bool power_scaled() const;

  const std::string& describe() const;

 private:
  struct Impl;
  explicit YoungFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct InequalityReport {
  int checked = 0;
  int violations = 0;
  double max_violation = 0.0;
  double worst_x = 0.0;
  double worst_y = 0.0;

  bool ok() const { return violations == 0; }
};

// x*y <= Phi(x) + Phi*(y) over the sample grid (both coordinates).
InequalityReport check_young_inequality(const YoungFunction& phi, const Grid& g, double tol = 1e-9);

// x < Phi^{-1}(x) Phi*^{-1}(x) <= 2x over the sample grid; the strict lower
// bound is checked with tolerance padding and waived at x = 0.
InequalityReport check_eq12(const YoungFunction& phi, const Grid& g, double tol = 1e-8);

// Structural sanity for a candidate Young function: evenness, Phi(0) = 0,
// convexity and monotonicity on sampled points.
InequalityReport validate_young(const YoungFunction& phi, const Grid& g, double tol = 1e-8);

// Sampled evidence for a growth condition. Never a proof; the sampled range is
// recorded so the verdict is reproducible.
struct GrowthEvidence {
  bool holds = false;
  double constant = 0.0;  // K-hat, c-hat or b-hat over the sampled range
  double worst_x = 0.0;
  double worst_y = 0.0;
  double x0 = 0.0;
  double horizon = 0.0;
  int samples = 0;
  bool degenerate = false;  // Phi identically zero on the sampled range
};

GrowthEvidence check_delta2(const YoungFunction& phi, double x0, double horizon, int samples = 64);
GrowthEvidence check_delta_prime(const YoungFunction& phi, double x0, double horizon, int samples = 48);
GrowthEvidence check_nabla_prime(const YoungFunction& phi, double x0, double horizon, int samples = 48);

enum class DominanceMode { at_infinity, global };

// Verdict of the search for Psi(x) <= Phi(a x) for x >= x0.
struct DominanceVerdict {
  bool holds = false;
  double scale = 0.0;   // witness a
  double x0 = 0.0;      // witness threshold
  double x_star = 0.0;  // counterexample point at the maximal scale
  bool global = false;
};

// Does Phi dominate Psi (Phi stronger than Psi)?
DominanceVerdict dominance(const YoungFunction& phi, const YoungFunction& psi, DominanceMode mode,
                           double scale_max = 1e6, double sample_hi = 1e6);

struct LemmaL2Report {
  bool premise_ok = false;  // Phi(xy) <= Psi(x) + Theta(y) on samples
  double premise_worst = 0.0;
  bool inequality_ok = false;  // Psi^{-1}(t) Theta^{-1}(t) <= 2 Phi^{-1}(t)
  double max_violation = 0.0;
  bool dominance_refuted = false;  // dominance(Phi, Psi) returned counterevidence
};

LemmaL2Report check_lemma_l2(const YoungFunction& phi, const YoungFunction& psi,
                             const YoungFunction& theta, const Grid& g, double tol = 1e-8);

}  // namespace orlicz

#endif
