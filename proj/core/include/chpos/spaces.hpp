#pragma once

#include "chpos/ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chpos {

struct SpaceSpec;
using SpecPtr = std::shared_ptr<const SpaceSpec>;

struct ProjectiveSpaceSpec {
  int n;
  bool operator==(const ProjectiveSpaceSpec&) const = default;
};
struct WeightedProjectiveSpec {
  std::vector<int> weights;
  bool operator==(const WeightedProjectiveSpec&) const = default;
};
struct GrassmannianSpec {
  int k;
  int n;
  bool operator==(const GrassmannianSpec&) const = default;
};
struct CompleteIntersectionSpec {
  SpecPtr base;
  std::vector<int> degrees;
};
struct ProductSpec {
  SpecPtr left;
  SpecPtr right;
};
struct ProjectiveBundleSpec {
  SpecPtr base;
  std::vector<int> twists;
};
struct BlowupLinearSpec {
  int n;
  int m;
  bool operator==(const BlowupLinearSpec&) const = default;
};

/// Construction tree of a catalog space.
struct SpaceSpec {
  std::variant<ProjectiveSpaceSpec, WeightedProjectiveSpec, GrassmannianSpec, CompleteIntersectionSpec,
               ProductSpec, ProjectiveBundleSpec, BlowupLinearSpec>
      node;
};

bool operator==(const SpaceSpec& a, const SpaceSpec& b);

SpecPtr make_spec(SpaceSpec spec);

enum class Provenance { exact, candidate };

std::string to_string(Provenance p);
/// candidate dominates exact.
Provenance weakest(Provenance a, Provenance b);

/// Generators of the effective cone of cycles of a fixed dimension.
struct ConeSpec {
  int dimension = 0;
  std::vector<CycleClass> generators;
  std::vector<std::string> labels;
  Provenance provenance = Provenance::exact;
};

struct SpaceModel;
using ModelPtr = std::shared_ptr<const SpaceModel>;

struct PointData {
  int n;
};
struct WeightedData {
  std::vector<int> weights;
};
struct GrassmannianData {
  int k;
  int n;
};
struct CompleteIntersectionData {
  std::vector<int> base_weights;  // all ones over an ordinary projective space
  std::vector<int> degrees;
};
struct ProductData {
  ModelPtr left;
  ModelPtr right;
  std::shared_ptr<const RingMap> pull_left;
  std::shared_ptr<const RingMap> pull_right;
};
struct BundleData {
  ModelPtr base;
  std::vector<int> twists;             // as written
  std::vector<int> normalized_twists;  // max subtracted, all <= 0
  std::shared_ptr<const RingMap> pullback;
  CycleClass zeta;
};
struct BlowupData {
  int n;
  int m;
  CycleClass H;
  CycleClass E;
  CycleClass pushforward;  // i_* pi^* c_1(N) of the exceptional divisor
  ModelPtr bundle;         // the same space as a projective bundle over P^(c-1)
  std::shared_ptr<const RingMap> from_bundle;
};

using ConstructionData = std::variant<PointData, WeightedData, GrassmannianData, CompleteIntersectionData,
                                      ProductData, BundleData, BlowupData>;

/// A catalog space: graded numerical ring, declared cones, construction data.
struct SpaceModel {
  SpecPtr spec;
  RingPtr ring;
  /// Distinguished ample degree-one class for Picard-rank-one members and the
  /// pulled-back base hyperplane on projective bundles.
  std::optional<CycleClass> hyperplane;
  /// Generators of the nef cone of divisors.
  std::vector<CycleClass> nef_divisors;
  std::vector<std::string> nef_labels;
  /// Keyed by cycle dimension.
  std::map<int, ConeSpec> cones;
  /// Highest Chern-character degree the model computes.
  int chern_truncation = 2;
  ConstructionData data;

  int dim() const { return ring->dim(); }
  bool picard_rank_one() const;
  /// The declared curve-cone generator of a Picard-rank-one model, scaled so
  /// that it meets the hyperplane class in degree one.
  CycleClass minimal_curve() const;
};

ModelPtr projective_space(int n);
ModelPtr weighted_projective(const std::vector<int>& weights);
ModelPtr grassmannian(int k, int n);
ModelPtr complete_intersection(const SpaceSpec& base, const std::vector<int>& degrees);
ModelPtr product(const SpaceSpec& left, const SpaceSpec& right);
ModelPtr projective_bundle(const SpaceSpec& base, const std::vector<int>& twists);
ModelPtr blowup_linear(int n, int m);

/// Dispatches on the construction tree. Throws ParameterError or
/// UnsupportedConstruction.
ModelPtr build(const SpaceSpec& spec);

}  // namespace chpos
