#include "chpos/spaces.hpp"

#include "chpos/errors.hpp"
#include "chpos/schubert.hpp"

#include <algorithm>
#include <numeric>

namespace chpos {

namespace {

bool same(const SpecPtr& a, const SpecPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

}  // namespace

bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, CompleteIntersectionSpec>) {
          return same(x.base, y.base) && x.degrees == y.degrees;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return same(x.left, y.left) && same(x.right, y.right);
        } else if constexpr (std::is_same_v<T, ProjectiveBundleSpec>) {
          return same(x.base, y.base) && x.twists == y.twists;
        } else {
          return x == y;
        }
      },
      a.node);
}

SpecPtr make_spec(SpaceSpec spec) { return std::make_shared<const SpaceSpec>(std::move(spec)); }

std::string to_string(Provenance p) { return p == Provenance::exact ? "exact" : "candidate"; }

Provenance weakest(Provenance a, Provenance b) {
  return (a == Provenance::candidate || b == Provenance::candidate) ? Provenance::candidate : Provenance::exact;
}

bool SpaceModel::picard_rank_one() const {
  return std::holds_alternative<PointData>(data) || std::holds_alternative<WeightedData>(data) ||
         std::holds_alternative<GrassmannianData>(data) || std::holds_alternative<CompleteIntersectionData>(data);
}

CycleClass SpaceModel::minimal_curve() const {
  if (!picard_rank_one()) throw UnsupportedConstruction("minimal curve class needs Picard rank one");
  return cones.at(1).generators.front();
}

namespace {

RingPtr truncated_polynomial_ring(int dim, const Rational& top_degree) {
  return tower_ring({TowerGenerator{"h", dim + 1, {}}}, top_degree);
}

std::string cycle_name(int dim) {
  switch (dim) {
    case 0:
      return "point";
    case 1:
      return "curve";
    case 2:
      return "surface";
    default:
      return std::to_string(dim) + "-fold";
  }
}

// Cones of a Picard-rank-one model: the h-power in each dimension, scaled to
// meet h^d in degree one.
std::map<int, ConeSpec> hyperplane_cones(const RingPtr& ring, const CycleClass& h, Provenance prov) {
  const int dim = ring->dim();
  const Rational top = degree(power(h, dim));
  std::map<int, ConeSpec> cones;
  for (int d = 0; d <= dim; ++d) {
    ConeSpec cone;
    cone.dimension = d;
    cone.provenance = prov;
    cone.generators.push_back(scale(1 / top, power(h, dim - d)));
    cone.labels.push_back(d == 0 ? "[pt]" : "[h^" + std::to_string(dim - d) + "]");
    cones.emplace(d, std::move(cone));
  }
  return cones;
}

ModelPtr picard_one_model(SpecPtr spec, RingPtr ring, Provenance prov, int truncation, ConstructionData data) {
  verify_ring(*ring);
  auto model = std::make_shared<SpaceModel>(SpaceModel{std::move(spec), ring, std::nullopt, {}, {}, {}, truncation,
                                                       std::move(data)});
  const CycleClass h = CycleClass::named(ring, 1, "h");
  model->hyperplane = h;
  model->nef_divisors = {h};
  model->nef_labels = {"h"};
  model->cones = hyperplane_cones(ring, h, prov);
  return model;
}

Rational product_of(const std::vector<int>& xs) {
  Rational p = 1;
  for (int x : xs) p *= x;
  return p;
}

std::vector<int> base_weights(const SpaceSpec& base) {
  if (const auto* p = std::get_if<ProjectiveSpaceSpec>(&base.node)) {
    if (p->n < 1) throw ParameterError("P(n) needs n >= 1");
    return std::vector<int>(p->n + 1, 1);
  }
  if (const auto* w = std::get_if<WeightedProjectiveSpec>(&base.node)) return w->weights;
  throw UnsupportedConstruction("complete intersections are supported only in P(n) or WP(...)");
}

int product_truncation(const SpaceModel& l, const SpaceModel& r) {
  const bool full = l.chern_truncation >= l.dim() && r.chern_truncation >= r.dim();
  return full ? std::max(l.dim() + r.dim(), 2) : std::min(l.chern_truncation, r.chern_truncation);
}

RingMap pullback_into_product(const ProductRing& prod, const RingPtr& prod_ptr, bool left_side) {
  const RingPtr& factor = left_side ? prod.left() : prod.right();
  std::vector<std::vector<CycleClass>> images(factor->dim() + 1);
  for (int a = 0; a <= factor->dim(); ++a) {
    for (std::size_t i = 0; i < factor->rank(a); ++i) {
      const std::size_t idx = left_side ? prod.index_of(a, i, 0, 0) : prod.index_of(0, 0, a, i);
      images[a].push_back(CycleClass::basis_element(prod_ptr, a, idx));
    }
  }
  return RingMap(factor, prod_ptr, std::move(images));
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t s) {
  std::vector<std::vector<std::size_t>> out;
  if (s > n) return out;
  std::vector<std::size_t> cur(s);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = s;
    while (i > 0 && cur[i - 1] == n - s + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < s; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

ModelPtr projective_space(int n) {
  if (n < 1) throw ParameterError("P(n) needs n >= 1, got " + std::to_string(n));
  return picard_one_model(make_spec({ProjectiveSpaceSpec{n}}), truncated_polynomial_ring(n, 1), Provenance::exact, std::max(n, 2),
                          PointData{n});
}

ModelPtr weighted_projective(const std::vector<int>& weights) {
  if (weights.size() < 2) throw ParameterError("WP needs at least two weights");
  for (int a : weights) {
    if (a < 1) throw ParameterError("WP weights must be positive, got " + std::to_string(a));
  }
  const int n = static_cast<int>(weights.size()) - 1;
  return picard_one_model(make_spec({WeightedProjectiveSpec{weights}}),
                          truncated_polynomial_ring(n, 1 / product_of(weights)), Provenance::exact, std::max(n, 2),
                          WeightedData{weights});
}

ModelPtr grassmannian(int k, int n) {
  if (k < 1 || k >= n) {
    throw ParameterError("G(k,n) needs 1 <= k < n, got G(" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  RingPtr ring = schubert::grassmannian_ring(k, n);
  verify_ring(*ring);
  auto model = std::make_shared<SpaceModel>(SpaceModel{make_spec({GrassmannianSpec{k, n}}), ring, std::nullopt, {},
                                                       {}, {}, 2, GrassmannianData{k, n}});
  const CycleClass s1 = schubert::special_class(ring, k, n, 1);
  model->hyperplane = s1;
  model->nef_divisors = {s1};
  model->nef_labels = {"s1"};
  const int dim = ring->dim();
  for (int d = 0; d <= dim; ++d) {
    ConeSpec cone;
    cone.dimension = d;
    for (std::size_t i = 0; i < ring->rank(dim - d); ++i) {
      cone.generators.push_back(CycleClass::basis_element(ring, dim - d, i));
      cone.labels.push_back("[" + ring->basis(dim - d)[i].str() + "]");
    }
    model->cones.emplace(d, std::move(cone));
  }
  return model;
}

ModelPtr complete_intersection(const SpaceSpec& base, const std::vector<int>& degrees) {
  const std::vector<int> weights = base_weights(base);
  if (degrees.empty()) throw ParameterError("CI needs at least one degree");
  for (int d : degrees) {
    if (d < 1) throw ParameterError("CI degrees must be positive, got " + std::to_string(d));
  }
  const int n = static_cast<int>(weights.size()) - 1;
  const int dim = n - static_cast<int>(degrees.size());
  if (dim < 2) throw ParameterError("CI of dimension " + std::to_string(dim) + " is below the supported minimum 2");
  const Rational top = product_of(degrees) / product_of(weights);
  return picard_one_model(make_spec({CompleteIntersectionSpec{make_spec(base), degrees}}),
                          truncated_polynomial_ring(dim, top), Provenance::candidate, dim,
                          CompleteIntersectionData{weights, degrees});
}

ModelPtr product(const SpaceSpec& left, const SpaceSpec& right) {
  ModelPtr l = build(left);
  ModelPtr r = build(right);
  auto prod = std::make_shared<const ProductRing>(l->ring, r->ring);
  RingPtr ring = prod;
  verify_ring(*ring);
  auto pl = std::make_shared<const RingMap>(pullback_into_product(*prod, ring, true));
  auto pr = std::make_shared<const RingMap>(pullback_into_product(*prod, ring, false));
  auto model = std::make_shared<SpaceModel>(SpaceModel{make_spec({ProductSpec{l->spec, r->spec}}), ring, std::nullopt,
                                                       {}, {}, {}, product_truncation(*l, *r),
                                                       ProductData{l, r, pl, pr}});
  for (std::size_t i = 0; i < l->nef_divisors.size(); ++i) {
    model->nef_divisors.push_back((*pl)(l->nef_divisors[i]));
    model->nef_labels.push_back("pr1*" + l->nef_labels[i]);
  }
  for (std::size_t i = 0; i < r->nef_divisors.size(); ++i) {
    model->nef_divisors.push_back((*pr)(r->nef_divisors[i]));
    model->nef_labels.push_back("pr2*" + r->nef_labels[i]);
  }
  const int dim = ring->dim();
  for (int d = 0; d <= dim; ++d) {
    ConeSpec cone;
    cone.dimension = d;
    for (int i = std::max(0, d - r->dim()); i <= std::min(d, l->dim()); ++i) {
      const ConeSpec& cl = l->cones.at(i);
      const ConeSpec& cr = r->cones.at(d - i);
      cone.provenance = weakest(cone.provenance, weakest(cl.provenance, cr.provenance));
      for (std::size_t a = 0; a < cl.generators.size(); ++a) {
        for (std::size_t b = 0; b < cr.generators.size(); ++b) {
          cone.generators.push_back((*pl)(cl.generators[a]) * (*pr)(cr.generators[b]));
          cone.labels.push_back(cl.labels[a] + "x" + cr.labels[b]);
        }
      }
    }
    model->cones.emplace(d, std::move(cone));
  }
  return model;
}

ModelPtr projective_bundle(const SpaceSpec& base_spec, const std::vector<int>& twists) {
  const std::size_t r = twists.size();
  if (r < 2) throw ParameterError("projective bundle needs rank >= 2");
  const bool supported = std::holds_alternative<ProjectiveSpaceSpec>(base_spec.node) ||
                         std::holds_alternative<WeightedProjectiveSpec>(base_spec.node) ||
                         std::holds_alternative<CompleteIntersectionSpec>(base_spec.node);
  if (!supported) throw UnsupportedConstruction("projective bundles need a base P(n), WP(...) or CI(...)");
  ModelPtr base = build(base_spec);
  const int dx = base->dim();
  const int top = *std::max_element(twists.begin(), twists.end());
  std::vector<int> w(r);
  for (std::size_t i = 0; i < r; ++i) w[i] = twists[i] - top;

  // zeta^r = -sum_i e_i(w) h^i zeta^(r-i)
  std::vector<Integer> e(r + 1, 0);
  e[0] = 1;
  for (int wi : w) {
    for (std::size_t i = r; i >= 1; --i) e[i] += e[i - 1] * wi;
  }
  Polynomial relation;
  for (std::size_t i = 1; i <= r; ++i) {
    if (e[i] != 0) relation[{static_cast<int>(i), static_cast<int>(r - i)}] = Rational(-e[i]);
  }
  RingPtr ring = tower_ring({TowerGenerator{"h", dx + 1, {}}, TowerGenerator{"z", static_cast<int>(r), relation}},
                            base->ring->degree().front());
  verify_ring(*ring);
  const CycleClass h = CycleClass::named(ring, 1, "h");
  const CycleClass z = CycleClass::named(ring, 1, "z");
  auto pull = std::make_shared<const RingMap>(RingMap::from_generators(base->ring, ring, {{"h", h}}));

  const Provenance prov = std::holds_alternative<CompleteIntersectionData>(base->data) ? Provenance::candidate
                                                                                       : Provenance::exact;
  auto model = std::make_shared<SpaceModel>(SpaceModel{make_spec({ProjectiveBundleSpec{base->spec, twists}}), ring, h,
                                                       {z, h}, {"z", "h"}, {}, ring->dim(),
                                                       BundleData{base, twists, w, pull, z}});
  // Torus-invariant subvarieties: sub-projective-bundles of coordinate
  // summands over the base cycles.
  const int dim = ring->dim();
  for (int d = 0; d <= dim; ++d) {
    ConeSpec cone;
    cone.dimension = d;
    cone.provenance = prov;
    for (int b = 0; b <= std::min(d, dx); ++b) {
      const int s = d - b + 1;
      if (s < 1 || s > static_cast<int>(r)) continue;
      const CycleClass zb = (*pull)(base->cones.at(b).generators.front());
      for (const auto& subset : subsets_of_size(r, static_cast<std::size_t>(s))) {
        CycleClass g = zb;
        std::string summands;
        for (std::size_t k = 0, t = 0; k < r; ++k) {
          if (t < subset.size() && subset[t] == k) {
            summands += (summands.empty() ? "" : "+") + std::string("O(") + std::to_string(w[k]) + ")";
            ++t;
          } else {
            g = g * (z + Rational(w[k]) * h);
          }
        }
        if (g.overflow() || g.is_zero()) continue;
        if (std::find(cone.generators.begin(), cone.generators.end(), g) != cone.generators.end()) continue;
        std::string lab = "P(" + summands + ") over " + cycle_name(b);
        if (d == 1 && b == 0) lab = "f";
        if (d == 1 && b == 1 && w[subset.front()] == 0) lab = "C0";
        cone.generators.push_back(std::move(g));
        cone.labels.push_back(std::move(lab));
      }
    }
    model->cones.emplace(d, std::move(cone));
  }
  return model;
}

ModelPtr blowup_linear(int n, int m) {
  if (n < 2 || m < 0 || m > n - 2) {
    throw ParameterError("Bl(P(n); L(m)) needs 0 <= m <= n-2, got n=" + std::to_string(n) + ", m=" +
                         std::to_string(m));
  }
  const int c = n - m;
  // Lines in O^(m+1) + O(-1) over P^(c-1); zeta is the pulled-back hyperplane.
  std::vector<int> twists(m + 1, 0);
  twists.push_back(-1);
  ModelPtr bundle = projective_bundle(SpaceSpec{ProjectiveSpaceSpec{c - 1}}, twists);
  const RingPtr& old = bundle->ring;
  const CycleClass oH = std::get<BundleData>(bundle->data).zeta;
  const CycleClass oE = oH - *bundle->hyperplane;

  const int dim = old->dim();
  std::vector<linalg::Matrix> blocks(dim + 1);
  std::vector<std::vector<Label>> labels(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    for (int j = 0; j <= k && blocks[k].size() < old->rank(k); ++j) {
      const CycleClass mono = power(oH, k - j) * power(oE, j);
      linalg::Matrix trial = blocks[k];
      trial.push_back(mono.coords());
      if (linalg::rank(trial) == trial.size()) {
        blocks[k] = std::move(trial);
        Label lab;
        if (k - j > 0) lab.factors.emplace_back("H", k - j);
        if (j > 0) lab.factors.emplace_back("E", j);
        labels[k].push_back(std::move(lab));
      }
    }
    if (blocks[k].size() != old->rank(k)) throw InvariantFailure("H, E monomials do not span the blow-up ring");
  }
  RingPtr ring = rebase(*old, blocks, labels);
  verify_ring(*ring);
  std::vector<std::vector<CycleClass>> images(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    const linalg::Matrix inv = linalg::inverse(blocks[k]);
    for (std::size_t o = 0; o < old->rank(k); ++o) images[k].emplace_back(ring, k, inv[o]);
  }
  auto to_new = std::make_shared<const RingMap>(old, ring, std::move(images));

  const CycleClass H = CycleClass::named(ring, 1, "H");
  const CycleClass E = CycleClass::named(ring, 1, "E");
  const CycleClass push = Rational(c) * H * E;
  auto model = std::make_shared<SpaceModel>(SpaceModel{make_spec({BlowupLinearSpec{n, m}}), ring, std::nullopt,
                                                       {H, H - E}, {"H", "H-E"}, {}, 2,
                                                       BlowupData{n, m, H, E, push, bundle, to_new}});
  for (const auto& [d, cone] : bundle->cones) {
    ConeSpec moved;
    moved.dimension = d;
    moved.provenance = Provenance::exact;
    for (std::size_t i = 0; i < cone.generators.size(); ++i) {
      moved.generators.push_back((*to_new)(cone.generators[i]));
      std::string lab = cone.labels[i];
      if (lab == "f") lab = "l~";
      else if (lab == "C0") lab = "f";
      moved.labels.push_back(std::move(lab));
    }
    model->cones.emplace(d, std::move(moved));
  }
  return model;
}

ModelPtr build(const SpaceSpec& spec) {
  return std::visit(
      [](const auto& x) -> ModelPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ProjectiveSpaceSpec>) {
          return projective_space(x.n);
        } else if constexpr (std::is_same_v<T, WeightedProjectiveSpec>) {
          return weighted_projective(x.weights);
        } else if constexpr (std::is_same_v<T, GrassmannianSpec>) {
          return grassmannian(x.k, x.n);
        } else if constexpr (std::is_same_v<T, CompleteIntersectionSpec>) {
          return complete_intersection(*x.base, x.degrees);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return product(*x.left, *x.right);
        } else if constexpr (std::is_same_v<T, ProjectiveBundleSpec>) {
          return projective_bundle(*x.base, x.twists);
        } else {
          return blowup_linear(x.n, x.m);
        }
      },
      spec.node);
}

}  // namespace chpos
