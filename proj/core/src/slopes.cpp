#include "chpos/slopes.hpp"

#include "chpos/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace chpos::slopes {

SplitCurveBundle::SplitCurveBundle(std::vector<long> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw ParameterError("a curve bundle needs at least one summand");
}

long SplitCurveBundle::degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0L); }

SplitCurveBundle SplitCurveBundle::dual() const {
  std::vector<long> d = degrees_;
  for (auto& x : d) x = -x;
  return SplitCurveBundle(std::move(d));
}

SplitCurveBundle SplitCurveBundle::pullback(long cover_degree) const {
  if (cover_degree < 1) throw ParameterError("cover degree must be positive");
  std::vector<long> d = degrees_;
  for (auto& x : d) x *= cover_degree;
  return SplitCurveBundle(std::move(d));
}

Rational mu(long deg, long rank) {
  if (rank < 1) throw ParameterError("slope needs positive rank");
  return Rational(deg, rank);
}

Rational mu_cover(CoverSpec cover, long deg, long rank) {
  if (cover.degree < 1) throw ParameterError("cover degree must be positive");
  if (rank < 1) throw ParameterError("slope needs positive rank");
  return Rational(Integer(deg), Integer(cover.degree) * rank);
}

Rational mu(const SplitCurveBundle& e) { return mu(e.degree(), e.rank()); }

Rational mu_k_split(const SplitCurveBundle& e, int k) {
  if (k < 1 || k > e.rank()) {
    throw ParameterError("k = " + std::to_string(k) + " outside 1.." + std::to_string(e.rank()));
  }
  std::vector<long> d = e.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return mu(std::accumulate(d.begin(), d.begin() + k, 0L), k);
}

bool is_semistable_split(const SplitCurveBundle& e) {
  const auto& d = e.degrees();
  return std::all_of(d.begin(), d.end(), [&](long x) { return x == d.front(); });
}

bool is_ample_split(const SplitCurveBundle& e) { return mu_k_split(e.dual(), 1) < 0; }

std::vector<Rational> chain_check(const SplitCurveBundle& e) {
  std::vector<Rational> out;
  for (int k = 1; k <= e.rank(); ++k) out.push_back(mu_k_split(e, k));
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] > out[i - 1]) throw InvariantFailure("slope chain increases at k = " + std::to_string(i + 1));
  }
  const Rational m = mu(e);
  if (out.back() != m) throw InvariantFailure("mu^r differs from the slope");
  const bool semistable = is_semistable_split(e);
  for (std::size_t k = 0; k + 1 < out.size(); ++k) {
    if ((out[k] == m) != semistable) throw InvariantFailure("equality in the slope chain disagrees with semistability");
  }
  return out;
}

EpsilonInequality thm_epsilon_check(const SplitCurveBundle& e) {
  const SplitCurveBundle dual = e.dual();
  EpsilonInequality out{mu_k_split(dual, 1), mu(dual), false};
  out.holds = out.mu1_dual >= out.mu_dual;
  return out;
}

bool QuotientScheduleCertificate::satisfied(const Rational& mu) const {
  return std::all_of(slopes.begin(), slopes.end(), [&](const Rational& s) { return s < mu + epsilon; });
}

namespace {

// Smallest positive integer D with 1/D < bound.
Integer denominator_below(const Rational& bound) {
  const Integer q = numerator(1 / bound);
  const Integer r = denominator(1 / bound);
  return q / r + 1;
}

Integer ceil_of(const Rational& x) {
  Integer q = numerator(x) / denominator(x);
  if (Rational(q) < x) q += 1;
  return q;
}

struct Step {
  Integer level_degree;
  Rational delta;
};

// mu(M) = a / D just below mu, with the gap under bound.
Step choose_twist(const Rational& mu, const Rational& bound, const Integer& cumulative) {
  const Integer level = denominator_below(bound);
  const Integer total = cumulative * level;
  const Integer a = ceil_of(mu * total) - 1;
  return {level, mu - Rational(a, total)};
}

// Base slopes of E^1..E^r for a rank-r bundle of slope mu.
std::vector<Rational> schedule(long r, const Rational& mu, const Rational& epsilon, Integer& cover) {
  if (r == 1) return {mu};
  const Step step = choose_twist(mu, epsilon / (r - 1), cover);
  cover *= step.level_degree;
  const Rational line = mu + (r - 1) * step.delta;
  const Rational kernel = (r * mu - line) / (r - 1);
  const std::vector<Rational> sub = schedule(r - 1, kernel, epsilon, cover);
  std::vector<Rational> out{line};
  for (long k = 2; k <= r; ++k) out.push_back((line + (k - 1) * sub[k - 2]) / k);
  return out;
}

}  // namespace

QuotientScheduleCertificate epsilon_quotient_schedule(const SplitCurveBundle& e, const Rational& epsilon) {
  if (epsilon <= 0) throw ParameterError("epsilon must be positive");
  Integer cover = 1;
  std::vector<Rational> ascending = schedule(e.rank(), mu(e), epsilon, cover);
  std::reverse(ascending.begin(), ascending.end());
  QuotientScheduleCertificate cert{epsilon, cover, std::move(ascending)};
  if (!cert.satisfied(mu(e))) throw InvariantFailure("quotient schedule violates its bound");
  return cert;
}

ZhangTrace zhang_slope_trace(int rank, long deg_e, const std::vector<long>& bertini_degrees) {
  if (rank < 1) throw ParameterError("rank must be positive");
  if (deg_e < 1) throw ParameterError("an ample bundle has positive degree");
  if (static_cast<int>(bertini_degrees.size()) != rank - 1) {
    throw ParameterError("expected " + std::to_string(rank - 1) + " Bertini degrees");
  }
  Integer f = 1;
  for (long d : bertini_degrees) {
    if (d < 1) throw ParameterError("Bertini degrees must be positive");
    f *= d;
  }
  ZhangTrace t{f, f * deg_e, Rational(0), false};
  t.line_slope = Rational(t.line_degree, t.cover_degree);
  t.slope_matches = t.line_slope == Rational(deg_e);
  return t;
}

SemistableZhangTrace zhang_semistable_trace(const SplitCurveBundle& e, const Rational& epsilon) {
  if (epsilon <= 0) throw ParameterError("epsilon must be positive");
  const Rational m = mu(e);
  const long r = e.rank();
  if (r == 1) return {Rational(0), m, true};
  const Step step = choose_twist(m, epsilon / (r - 1), Integer(1));
  SemistableZhangTrace out{step.delta, m + (r - 1) * step.delta, false};
  out.within_bound = out.line_slope < m + epsilon;
  return out;
}

Ch2Witness prop_ch2P_witness(const SpaceModel& base, const std::vector<int>& twists) {
  if (twists.size() <= 2) throw ParameterError("the rank > 2 witness needs at least three twists");
  const bool supported = std::holds_alternative<PointData>(base.data) ||
                         std::holds_alternative<WeightedData>(base.data) ||
                         std::holds_alternative<CompleteIntersectionData>(base.data);
  if (!supported) throw UnsupportedConstruction("witness needs a base P(n), WP(...) or CI(...)");
  const long r = static_cast<long>(twists.size());
  std::vector<std::size_t> order(twists.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return twists[a] > twists[b]; });
  Ch2Witness w{std::min(order[0], order[1]), std::max(order[0], order[1]), Rational(0), false};
  // Degrees on a curve meeting h once.
  std::vector<long> restricted(twists.begin(), twists.end());
  const SplitCurveBundle e(restricted);
  const Rational mu_f = mu(static_cast<long>(twists[w.first]) + twists[w.second], 2);
  w.value = r * (mu(e) - mu_f);
  w.semistable = is_semistable_split(e);
  return w;
}

CycleClass ch2P_surface(const SpaceModel& bundle, const Ch2Witness& w) {
  const auto* data = std::get_if<BundleData>(&bundle.data);
  if (!data) throw StructuralError("ch2P_surface needs a projective bundle model");
  const CycleClass& h = *bundle.hyperplane;
  CycleClass s = (*data->pullback)(data->base->minimal_curve());
  for (std::size_t k = 0; k < data->normalized_twists.size(); ++k) {
    if (k == w.first || k == w.second) continue;
    s = s * (data->zeta + Rational(data->normalized_twists[k]) * h);
  }
  return s;
}

}  // namespace chpos::slopes
