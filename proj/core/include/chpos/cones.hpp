#pragma once

#include "chpos/chern.hpp"
#include "chpos/spaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chpos {

enum class Level { not_nef, nef, weakly_positive, positive, ample };

std::string to_string(Level level);

/// A declared cone generator together with its pairing against the tested class.
struct Witness {
  CycleClass generator;
  std::string label;
  Rational pairing;
};

struct ConeTest {
  bool holds = false;
  std::optional<Witness> witness;
};

enum class AmpleStatus { yes, no, boundary, unknown };

std::string to_string(AmpleStatus status);

struct PositivityVerdict {
  Level level = Level::not_nef;
  std::optional<Witness> witness;
  Provenance provenance = Provenance::exact;
  AmpleStatus ample = AmpleStatus::unknown;

  /// "nef, not weakly positive"; candidate verdicts carry a qualifier.
  std::string describe() const;
};

/// pair(c, g) >= 0 for every generator; witness is the first violator.
ConeTest is_nef(const CycleClass& c, const ConeSpec& cone);
/// pair(c, g) > 0 for every generator; witness is the first non-positive one.
ConeTest is_weakly_positive(const CycleClass& c, const ConeSpec& cone);
/// As is_weakly_positive, after checking that the generators span the dual
/// space. Throws IndeterminateVerdict when they do not.
ConeTest is_positive(const CycleClass& c, const ConeSpec& cone);

/// Membership of c in the relative interior of the cone spanned by k-fold
/// products of the nef divisor generators.
AmpleStatus is_ample(const CycleClass& c, const SpaceModel& space);
/// Codimension-two case of is_ample.
bool is_ample_deg2(const CycleClass& c, const SpaceModel& space);

/// Runs all four tests and returns the strongest level. Throws
/// InvariantFailure if the levels are not nested.
PositivityVerdict classify(const CycleClass& c, const SpaceModel& space);

/// c_1(T) pairs positively with every declared curve generator.
ConeTest is_fano(const SpaceModel& space);

/// max w - (sum w) / r < deg(-K_X on the minimal curve) / r.
bool fano_pe_slope_criterion(const SpaceModel& base, const std::vector<int>& twists);

/// Both curve families of Bl_{P^m} P^n against c_1.
bool bup_fano_criterion(int n, int m);

namespace polyhedral {

/// Facet normals of cone(generators) inside its linear span, expressed as
/// functionals on the ambient coordinates (nonnegative on every generator).
std::vector<linalg::Vector> facets(const linalg::Matrix& generators, std::size_t ambient);

enum class Membership { outside, boundary, interior };

Membership locate(const linalg::Vector& point, const linalg::Matrix& generators, std::size_t ambient);

}  // namespace polyhedral

}  // namespace chpos
