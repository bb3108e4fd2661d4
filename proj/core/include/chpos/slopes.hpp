#pragma once

#include "chpos/rational.hpp"
#include "chpos/spaces.hpp"

#include <optional>
#include <vector>

namespace chpos::slopes {

/// Direct sum of line bundles on a smooth curve, by degree.
class SplitCurveBundle {
 public:
  explicit SplitCurveBundle(std::vector<long> degrees);

  const std::vector<long>& degrees() const { return degrees_; }
  long rank() const { return static_cast<long>(degrees_.size()); }
  long degree() const;
  SplitCurveBundle dual() const;
  /// f^*E under a cover of the given degree.
  SplitCurveBundle pullback(long cover_degree) const;

 private:
  std::vector<long> degrees_;
};

struct CoverSpec {
  long degree;
};

Rational mu(long deg, long rank);
/// Slope measured on the base: deg / (deg f * rank).
Rational mu_cover(CoverSpec cover, long deg, long rank);
Rational mu(const SplitCurveBundle& e);

/// Average of the k largest summand degrees.
Rational mu_k_split(const SplitCurveBundle& e, int k);

bool is_semistable_split(const SplitCurveBundle& e);
/// mu^1 of the dual is negative.
bool is_ample_split(const SplitCurveBundle& e);

/// (mu^1, ..., mu^r). Throws InvariantFailure if the chain is not weakly
/// decreasing to mu, or if strictness disagrees with semistability.
std::vector<Rational> chain_check(const SplitCurveBundle& e);

struct EpsilonInequality {
  Rational mu1_dual;
  Rational mu_dual;
  bool holds;
};
/// mu^1(E^dual) >= mu(E^dual).
EpsilonInequality thm_epsilon_check(const SplitCurveBundle& e);

struct QuotientScheduleCertificate {
  Rational epsilon;
  Integer cover_degree;
  /// Base slopes of E^r, ..., E^1.
  std::vector<Rational> slopes;

  /// Every entry below mu + epsilon.
  bool satisfied(const Rational& mu) const;
};

/// Quotient chain E^r -> ... -> E^1 with every slope below mu(E) + epsilon,
/// following the twist-by-M recursion. Throws ParameterError for epsilon <= 0.
QuotientScheduleCertificate epsilon_quotient_schedule(const SplitCurveBundle& e, const Rational& epsilon);

struct ZhangTrace {
  Integer cover_degree;
  Integer line_degree;
  Rational line_slope;
  bool slope_matches;
};
/// Bookkeeping of the inductive cover: deg f = prod d_i, deg L = deg f * deg E.
ZhangTrace zhang_slope_trace(int rank, long deg_e, const std::vector<long>& bertini_degrees);

struct SemistableZhangTrace {
  Rational delta;
  Rational line_slope;  // mu + (r - 1) delta
  bool within_bound;    // line_slope < mu + epsilon
};
/// Semistable variant: L_i = N_i (x) M with mu(N_i) = r delta.
SemistableZhangTrace zhang_semistable_trace(const SplitCurveBundle& e, const Rational& epsilon);

struct Ch2Witness {
  /// Positions of the rank-two summand F in the twist list.
  std::size_t first;
  std::size_t second;
  /// r (mu(E|line) - mu(F)); negative proves ch_2 is not nef.
  Rational value;
  bool semistable;
};

/// Restricts E = sum O(w_i) to a minimal curve and picks F = the two largest
/// summands. Requires r > 2 and a Picard-rank-one base.
Ch2Witness prop_ch2P_witness(const SpaceModel& base, const std::vector<int>& twists);

/// Class of P(F) over the minimal curve inside the bundle model.
CycleClass ch2P_surface(const SpaceModel& bundle, const Ch2Witness& w);

}  // namespace chpos::slopes
