#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Golden-section maximization of a concave objective on [lo, hi].
// Exact in the limit for unimodal functions; 200 iterations take the bracket
// below 1e-12 absolute / 1e-10 relative for any practical interval.
template <typename F>
double golden_max(F&& f, double lo, double hi, int max_iter = 200) {
  const double gr = (std::sqrt(5.0) + 1.0) / 2.0;
  double c = hi - (hi - lo) / gr;
  double d = lo + (hi - lo) / gr;
  for (int i = 0; i < max_iter; ++i) {
    if (hi - lo < 1e-12 + 1e-10 * std::abs(hi)) break;
    if (f(c) > f(d)) {
      hi = d;
    } else {
      lo = c;
    }
    c = hi - (hi - lo) / gr;
    d = lo + (hi - lo) / gr;
  }
  const double m = 0.5 * (lo + hi);
  return std::max(f(m), 0.0);
}

}  // namespace

Grid Grid::log_space(double lo, double hi, int n) {
  Grid g;
  g.pts.reserve(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) {
    const double t = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
    g.pts.push_back(std::exp(llo + t * (lhi - llo)));
  }
  return g;
}

Grid Grid::linear(double lo, double hi, int n) {
  Grid g;
  g.pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
    g.pts.push_back(lo + t * (hi - lo));
  }
  return g;
}

struct YoungFunction::Impl {
  enum class Kind { power, exp_growth, piecewise, composed, conjugate };

  Kind kind;
  double p = 0.0;
  bool scaled = false;
  std::vector<std::pair<double, double>> pts;  // piecewise, ascending x, pts[0] = (0,0)
  double jump = kInf;                          // piecewise b
  std::shared_ptr<const Impl> outer, inner;    // composed; conjugate base lives in outer
  double a_phi = 0.0;
  double b_phi = kInf;
  std::string desc;

  double eval(double x) const;
  double inverse(double y) const;
};

namespace {

double piecewise_eval(const std::vector<std::pair<double, double>>& pts, double jump, double x) {
  if (x > jump) return kInf;
  x = std::min(x, jump);  // left limit at the jump
  if (x <= pts.front().first) return 0.0;
  auto it = std::upper_bound(pts.begin(), pts.end(), x,
                             [](double v, const auto& pt) { return v < pt.first; });
  if (it == pts.end()) {
    const auto& a = pts[pts.size() - 2];
    const auto& b = pts.back();
    const double slope = (b.second - a.second) / (b.first - a.first);
    return b.second + slope * (x - b.first);
  }
  const auto& b = *it;
  const auto& a = *(it - 1);
  const double t = (x - a.first) / (b.first - a.first);
  return a.second + t * (b.second - a.second);
}

}  // namespace

double YoungFunction::Impl::eval(double x) const {
  x = std::abs(x);
  switch (kind) {
    case Kind::power:
      if (x == 0.0) return 0.0;
      return scaled ? std::pow(x, p) / p : std::pow(x, p);
    case Kind::exp_growth:
      return std::expm1(x) - x;
    case Kind::piecewise:
      return piecewise_eval(pts, jump, x);
    case Kind::composed: {
      const double t = inner->inverse(x);
      return outer->eval(t);
    }
    case Kind::conjugate: {
      const double y = x;
      if (y == 0.0) return 0.0;
      const Impl& base = *outer;
      auto h = [&](double s) {
        const double v = base.eval(s);
        return std::isinf(v) ? -kInf : s * y - v;
      };
      const double horizon = std::min(base.b_phi, 1e15);
      double hi = std::min(1.0, horizon);
      while (2.0 * hi <= horizon && h(2.0 * hi) > h(hi)) hi *= 2.0;
      if (2.0 * hi > horizon && horizon < base.b_phi * 0.999 && h(horizon) > h(horizon * 0.5)) {
        // objective still climbing at the search horizon: conjugate diverges
        return kInf;
      }
      return golden_max(h, 0.0, std::min(2.0 * hi, horizon));
    }
  }
  return 0.0;
}

double YoungFunction::Impl::inverse(double y) const {
  if (y < 0.0) throw std::invalid_argument("generalized inverse: negative argument");
  if (kind == Kind::power) {
    return scaled ? std::pow(p * y, 1.0 / p) : std::pow(y, 1.0 / p);
  }
  // inf{ x >= 0 : Phi(x) > y } by bracket expansion + bisection.
  double lo = a_phi;
  double hi = std::max(1.0, 2.0 * std::max(lo, 1e-12));
  if (eval(lo) > y) return lo;
  while (eval(hi) <= y) {
    if (hi >= b_phi) return b_phi;  // Phi never exceeds y below the jump
    hi *= 2.0;
    if (hi > 1e300) return b_phi;  // bounded Young function: degenerate signal
  }
  hi = std::min(hi, b_phi);
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid) > y) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

// sup{ x : f(x) = 0 } by geometric scan + bisection. f convex, f(0) = 0.
template <typename F>
double compute_a(F&& f) {
  if (f(1e-12) > 0.0) return 0.0;
  double lo = 1e-12, hi = lo;
  bool found = false;
  for (double x = 1e-11; x <= 1e12; x *= 2.0) {
    if (f(x) > 0.0) {
      hi = x;
      found = true;
      break;
    }
    lo = x;
  }
  if (!found) return 1e12;  // effectively degenerate
  for (int i = 0; i < 120; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// sup{ x : f(x) < inf } by geometric scan + bisection.
template <typename F>
double compute_b(F&& f) {
  if (std::isfinite(f(1e12))) return kInf;
  double lo = 0.0, hi = 0.0;
  for (double x = 1e-12; x <= 1e12; x *= 2.0) {
    if (!std::isfinite(f(x))) {
      hi = x;
      break;
    }
    lo = x;
  }
  for (int i = 0; i < 120; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (std::isfinite(f(mid))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

YoungFunction YoungFunction::power(double p, bool scaled) {
  if (p < 1.0) throw std::invalid_argument("power family requires p >= 1");
  auto impl = std::make_shared<YoungFunction::Impl>();
  impl->kind = Impl::Kind::power;
  impl->p = p;
  impl->scaled = scaled;
  impl->a_phi = 0.0;
  impl->b_phi = kInf;
  std::ostringstream os;
  os << "power(p=" << p << (scaled ? ", scaled)" : ")");
  impl->desc = os.str();
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::exp_growth() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::exp_growth;
  impl->a_phi = 0.0;
  impl->b_phi = kInf;
  impl->desc = "exp_growth";
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::piecewise_linear(std::vector<std::pair<double, double>> points,
                                              double jump_at) {
  std::sort(points.begin(), points.end());
  if (points.empty() || points.front().first > 0.0) {
    points.insert(points.begin(), {0.0, 0.0});
  }
  if (points.front() != std::pair<double, double>{0.0, 0.0}) {
    throw std::invalid_argument("piecewise_linear: must pass through (0,0)");
  }
  double prev_slope = -kInf;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double dx = points[i].first - points[i - 1].first;
    if (dx <= 0.0) throw std::invalid_argument("piecewise_linear: duplicate x");
    if (points[i].second < 0.0) throw std::invalid_argument("piecewise_linear: negative value");
    const double slope = (points[i].second - points[i - 1].second) / dx;
    if (slope < prev_slope - 1e-12 * std::max(1.0, std::abs(prev_slope))) {
      throw std::invalid_argument("piecewise_linear: points are not convex");
    }
    prev_slope = slope;
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::piecewise;
  impl->jump = jump_at;
  double a = 0.0;
  for (const auto& pt : points) {
    if (pt.second == 0.0) a = pt.first;
  }
  impl->a_phi = a;
  impl->b_phi = jump_at;
  std::ostringstream os;
  os << "piecewise_linear(" << points.size() << " pts";
  if (std::isfinite(jump_at)) os << ", jump@" << jump_at;
  os << ")";
  impl->desc = os.str();
  impl->pts = std::move(points);
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::composed(const YoungFunction& outer, const YoungFunction& inner_inverse) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::composed;
  impl->outer = outer.impl_;
  impl->inner = inner_inverse.impl_;
  auto f = [&impl](double x) { return impl->eval(x); };
  impl->a_phi = compute_a(f);
  impl->b_phi = compute_b(f);
  impl->desc = "composed(" + outer.describe() + " o " + inner_inverse.describe() + "^-1)";
  return YoungFunction(std::move(impl));
}

ExtReal YoungFunction::operator()(double x) const { return ExtReal(impl_->eval(x)); }

double YoungFunction::log_value(double log_x) const {
  switch (impl_->kind) {
    case Impl::Kind::power:
      return impl_->scaled ? impl_->p * log_x - std::log(impl_->p) : impl_->p * log_x;
    case Impl::Kind::exp_growth: {
      const double x = std::exp(log_x);
      if (x > 700.0) return x;  // log(e^x - x - 1) ~ x
      return std::log(impl_->eval(x));
    }
    default:
      return std::log(impl_->eval(std::exp(log_x)));
  }
}

double YoungFunction::inverse(double y) const { return impl_->inverse(y); }

YoungFunction YoungFunction::numeric_conjugate() const {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::conjugate;
  impl->outer = impl_;
  auto f = [&impl](double x) { return impl->eval(x); };
  impl->a_phi = compute_a(f);
  impl->b_phi = compute_b(f);
  impl->desc = "conjugate(" + describe() + ")";
  return YoungFunction(std::move(impl));
}

YoungFunction YoungFunction::conjugate() const {
  if (impl_->kind == Impl::Kind::power) {
    if (impl_->p == 1.0 && impl_->scaled) {
      // conjugate of |x| is the indicator of [-1, 1]
      return piecewise_linear({{0.0, 0.0}, {1.0, 0.0}}, 1.0);
    }
    if (impl_->scaled) {
      const double q = impl_->p / (impl_->p - 1.0);
      return power(q, true);
    }
  }
  return numeric_conjugate();
}

double YoungFunction::a() const { return impl_->a_phi; }
double YoungFunction::b() const { return impl_->b_phi; }

bool YoungFunction::is_power() const { return impl_->kind == Impl::Kind::power; }
double YoungFunction::power_exponent() const { return impl_->p; }
bool YoungFunction::power_scaled() const { return impl_->scaled; }

const std::string& YoungFunction::describe() const { return impl_->desc; }

namespace {

void record(InequalityReport& r, double violation, double x, double y) {
  ++r.checked;
  if (violation > 0.0) {
    ++r.violations;
    if (violation > r.max_violation) {
      r.max_violation = violation;
      r.worst_x = x;
      r.worst_y = y;
    }
  }
}

}  // namespace

InequalityReport check_young_inequality(const YoungFunction& phi, const Grid& g, double tol) {
  const YoungFunction conj = phi.conjugate();
  InequalityReport rep;
  for (double x : g.pts) {
    const ExtReal px = phi(x);
    for (double y : g.pts) {
      const ExtReal qy = conj(y);
      if (px.is_inf() || qy.is_inf()) {
        record(rep, 0.0, x, y);
        continue;
      }
      const double lhs = x * y;
      const double rhs = px.value() + qy.value();
      record(rep, lhs - rhs - tol * std::max(1.0, std::abs(lhs)), x, y);
    }
  }
  return rep;
}

InequalityReport check_eq12(const YoungFunction& phi, const Grid& g, double tol) {
  const YoungFunction conj = phi.conjugate();
  InequalityReport rep;
  for (double x : g.pts) {
    const double prod = phi.inverse(x) * conj.inverse(x);
    const double pad = tol * std::max(1.0, x);
    double violation = prod - 2.0 * x - pad;  // upper bound
    if (x > 0.0) violation = std::max(violation, (x - pad) - prod);
    record(rep, violation, x, prod);
  }
  return rep;
}

InequalityReport validate_young(const YoungFunction& phi, const Grid& g, double tol) {
  InequalityReport rep;
  record(rep, phi(0.0).value(), 0.0, 0.0);
  for (double x : g.pts) {
    const ExtReal pos = phi(x), neg = phi(-x);
    if (pos.is_inf() != neg.is_inf()) {
      record(rep, 1.0, x, 0.0);
    } else if (pos.finite()) {
      record(rep, std::abs(pos.value() - neg.value()) - tol * (1.0 + pos.value()), x, 0.0);
    }
  }
  // monotone on consecutive sampled points below b
  double prev = 0.0, prev_x = 0.0;
  for (double x : g.pts) {
    if (x >= phi.b()) break;
    const double v = phi(x).value();
    record(rep, prev - v - tol * (1.0 + std::abs(v)), prev_x, x);
    prev = v;
    prev_x = x;
  }
  // convexity on sampled pairs
  const double lambdas[] = {0.25, 0.5, 0.75};
  for (std::size_t i = 0; i < g.pts.size(); i += 3) {
    for (std::size_t j = i + 1; j < g.pts.size(); j += 3) {
      const double x = g.pts[i], y = g.pts[j];
      const ExtReal fx = phi(x), fy = phi(y);
      if (fx.is_inf() || fy.is_inf()) continue;
      for (double lam : lambdas) {
        const double mid = lam * x + (1.0 - lam) * y;
        const double lhs = phi(mid).value();
        const double rhs = lam * fx.value() + (1.0 - lam) * fy.value();
        record(rep, lhs - rhs - tol * (1.0 + std::abs(rhs)), x, y);
      }
    }
  }
  return rep;
}

namespace {

// Trend rule shared by the growth-condition checks: the tracked constant is
// recomputed over the lower half of the range; growth past 5% between the two
// flags the condition as failing at infinity.
struct RatioScan {
  double worst = 0.0;
  double worst_half = 0.0;
  double worst_x = 0.0, worst_y = 0.0;
  bool saw_inf = false;
  bool any = false;

  void add(double ratio, double x, double y, bool in_lower_half) {
    if (std::isinf(ratio)) {
      saw_inf = true;
      worst_x = x;
      worst_y = y;
      return;
    }
    any = true;
    if (ratio > worst) {
      worst = ratio;
      worst_x = x;
      worst_y = y;
    }
    if (in_lower_half && ratio > worst_half) worst_half = ratio;
  }
};

}  // namespace

GrowthEvidence check_delta2(const YoungFunction& phi, double x0, double horizon, int samples) {
  GrowthEvidence ev;
  ev.x0 = x0;
  ev.horizon = horizon;
  ev.samples = samples;
  const double lo = std::max(x0, phi.a() + 1e-9 * std::max(1.0, phi.a()));
  const Grid g = Grid::log_space(std::max(lo, 1e-9), horizon, samples);
  const double half = std::sqrt(std::max(lo, 1e-9) * horizon);
  RatioScan scan;
  for (double x : g.pts) {
    const double den = phi(x).value();
    if (den == 0.0) continue;
    const ExtReal num = phi(2.0 * x);
    scan.add(num.is_inf() ? kInf : num.value() / den, x, 2.0 * x, x <= half);
  }
  if (!scan.any && !scan.saw_inf) {
    ev.degenerate = true;
    return ev;
  }
  ev.constant = scan.worst;
  ev.worst_x = scan.worst_x;
  ev.worst_y = scan.worst_y;
  ev.holds = !scan.saw_inf && scan.worst <= scan.worst_half * 1.05 + 1e-12;
  return ev;
}

GrowthEvidence check_delta_prime(const YoungFunction& phi, double x0, double horizon, int samples) {
  GrowthEvidence ev;
  ev.x0 = x0;
  ev.horizon = horizon;
  ev.samples = samples;
  const double lo = std::max({x0, phi.a() * 1.000001, 1e-6});
  const Grid g = Grid::log_space(lo, horizon, samples);
  const double half = std::sqrt(lo * horizon);
  RatioScan scan;
  for (double x : g.pts) {
    const double px = phi(x).value();
    if (px == 0.0 || std::isinf(px)) continue;
    for (double y : g.pts) {
      const double py = phi(y).value();
      if (py == 0.0 || std::isinf(py)) continue;
      const ExtReal pxy = phi(x * y);
      scan.add(pxy.is_inf() ? kInf : pxy.value() / (px * py), x, y,
               x <= half && y <= half);
    }
  }
  if (!scan.any && !scan.saw_inf) {
    ev.degenerate = true;
    return ev;
  }
  ev.constant = scan.worst;
  ev.worst_x = scan.worst_x;
  ev.worst_y = scan.worst_y;
  ev.holds = !scan.saw_inf && scan.worst <= scan.worst_half * 1.05 + 1e-12;
  return ev;
}

GrowthEvidence check_nabla_prime(const YoungFunction& phi, double x0, double horizon, int samples) {
  GrowthEvidence ev;
  ev.x0 = x0;
  ev.horizon = horizon;
  ev.samples = samples;
  const double lo = std::max({x0, phi.a() * 1.000001, 1e-6});
  const Grid g = Grid::log_space(lo, horizon, samples);
  const double half = std::sqrt(lo * horizon);
  double lowest = kInf, lowest_half = kInf;
  for (double x : g.pts) {
    const double px = phi(x).value();
    if (px == 0.0 || std::isinf(px)) continue;
    for (double y : g.pts) {
      const double py = phi(y).value();
      if (py == 0.0 || std::isinf(py)) continue;
      const ExtReal pxy = phi(x * y);
      const double ratio = pxy.is_inf() ? kInf : pxy.value() / (px * py);
      if (ratio < lowest) {
        lowest = ratio;
        ev.worst_x = x;
        ev.worst_y = y;
      }
      if (x <= half && y <= half && ratio < lowest_half) lowest_half = ratio;
    }
  }
  if (std::isinf(lowest)) {
    ev.degenerate = true;
    return ev;
  }
  ev.constant = lowest;
  ev.holds = lowest > 0.0 && lowest >= lowest_half * 0.95 - 1e-12;
  return ev;
}

DominanceVerdict dominance(const YoungFunction& phi, const YoungFunction& psi, DominanceMode mode,
                           double scale_max, double sample_hi) {
  DominanceVerdict v;
  const Grid g = Grid::log_space(1e-3, std::max(sample_hi, 100.0 * scale_max), 200);
  const std::size_t n = g.pts.size();
  const std::size_t tail_floor = (3 * n) / 4;  // a witness must cover at least the top quarter

  std::vector<double> scales;
  for (double a = 1.0; a < scale_max; a *= 2.0) scales.push_back(a);
  scales.push_back(scale_max);

  auto holds_at = [&](double a, double x) {
    const ExtReal lhs = psi(x);
    const ExtReal rhs = phi(a * x);
    if (rhs.is_inf()) return true;
    if (lhs.is_inf()) return false;
    return lhs.value() <= rhs.value() * (1.0 + 1e-9) + 1e-12;
  };

  for (double a : scales) {
    std::size_t first_ok = n;  // smallest index such that all samples beyond it hold
    for (std::size_t i = n; i-- > 0;) {
      if (!holds_at(a, g.pts[i])) break;
      first_ok = i;
    }
    if (first_ok == 0) {
      v.holds = true;
      v.scale = a;
      v.x0 = 0.0;
      v.global = true;
      return v;
    }
    if (mode == DominanceMode::at_infinity && first_ok <= tail_floor) {
      v.holds = true;
      v.scale = a;
      v.x0 = g.pts[first_ok];
      v.global = false;
      return v;
    }
  }
  // best counterexample at the maximal scale
  double worst = 0.0;
  for (double x : g.pts) {
    if (!holds_at(scale_max, x)) worst = x;
  }
  v.holds = false;
  v.x_star = worst;
  return v;
}

LemmaL2Report check_lemma_l2(const YoungFunction& phi, const YoungFunction& psi,
                             const YoungFunction& theta, const Grid& g, double tol) {
  LemmaL2Report rep;
  rep.premise_ok = true;
  for (double x : g.pts) {
    for (double y : g.pts) {
      const ExtReal lhs = phi(x * y);
      const ExtReal rhs = psi(x) + theta(y);
      if (rhs.is_inf()) continue;
      if (lhs.is_inf() ||
          lhs.value() > rhs.value() * (1.0 + tol) + tol) {
        rep.premise_ok = false;
        rep.premise_worst = lhs.finite() ? lhs.value() - rhs.value() : kInf;
        return rep;
      }
    }
  }
  rep.inequality_ok = true;
  for (double t : g.pts) {
    const double lhs = psi.inverse(t) * theta.inverse(t);
    const double rhs = 2.0 * phi.inverse(t);
    const double violation = lhs - rhs - tol * std::max(1.0, rhs);
    if (violation > rep.max_violation) rep.max_violation = violation;
    if (violation > 0.0) rep.inequality_ok = false;
  }
  rep.dominance_refuted = !dominance(phi, psi, DominanceMode::at_infinity).holds;
  return rep;
}

}  // namespace orlicz
