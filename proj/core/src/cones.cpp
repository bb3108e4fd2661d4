#include "chpos/cones.hpp"

#include "chpos/errors.hpp"

#include <algorithm>
#include <functional>

namespace chpos {

std::string to_string(Level level) {
  switch (level) {
    case Level::not_nef:
      return "not-nef";
    case Level::nef:
      return "nef";
    case Level::weakly_positive:
      return "weakly-positive";
    case Level::positive:
      return "positive";
    case Level::ample:
      return "ample";
  }
  return "?";
}

std::string to_string(AmpleStatus status) {
  switch (status) {
    case AmpleStatus::yes:
      return "yes";
    case AmpleStatus::no:
      return "no";
    case AmpleStatus::boundary:
      return "boundary";
    case AmpleStatus::unknown:
      return "unknown";
  }
  return "?";
}

std::string PositivityVerdict::describe() const {
  std::string out;
  switch (level) {
    case Level::ample:
      out = "ample";
      break;
    case Level::positive:
      out = ample == AmpleStatus::unknown ? "positive, ample unknown" : "positive, not ample";
      break;
    case Level::weakly_positive:
      out = "weakly positive, not positive";
      break;
    case Level::nef:
      out = "nef, not weakly positive";
      break;
    case Level::not_nef:
      out = "not nef";
      break;
  }
  // Below weakly positive the boundary position is already implied.
  if (ample == AmpleStatus::boundary && level >= Level::weakly_positive) {
    out += " (on the boundary of the ample cone)";
  }
  if (provenance == Provenance::candidate) out += " (relative to declared cone)";
  return out;
}

namespace {

void require_dual(const CycleClass& c, const ConeSpec& cone) {
  if (c.codim() != cone.dimension) {
    throw StructuralError("class of codimension " + std::to_string(c.codim()) + " cannot be tested against " +
                          std::to_string(cone.dimension) + "-dimensional cycles");
  }
}

template <class Pred>
ConeTest scan(const CycleClass& c, const ConeSpec& cone, Pred ok) {
  require_dual(c, cone);
  for (std::size_t i = 0; i < cone.generators.size(); ++i) {
    const Rational v = pair(c, cone.generators[i]);
    if (!ok(v)) return {false, Witness{cone.generators[i], cone.labels[i], v}};
  }
  return {true, std::nullopt};
}

}  // namespace

ConeTest is_nef(const CycleClass& c, const ConeSpec& cone) {
  return scan(c, cone, [](const Rational& v) { return v >= 0; });
}

ConeTest is_weakly_positive(const CycleClass& c, const ConeSpec& cone) {
  return scan(c, cone, [](const Rational& v) { return v > 0; });
}

ConeTest is_positive(const CycleClass& c, const ConeSpec& cone) {
  require_dual(c, cone);
  linalg::Matrix gens;
  for (const auto& g : cone.generators) gens.push_back(g.coords());
  const std::size_t need = c.ring()->rank(c.ring()->dim() - cone.dimension);
  if (linalg::rank(gens) != need) {
    throw IndeterminateVerdict("declared " + std::to_string(cone.dimension) +
                               "-dimensional cone does not span; positivity is indeterminate");
  }
  return is_weakly_positive(c, cone);
}

namespace polyhedral {

namespace {

void combinations(std::size_t n, std::size_t s, std::size_t start, std::vector<std::size_t>& cur,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (cur.size() == s) {
    visit(cur);
    return;
  }
  for (std::size_t i = start; i + (s - cur.size()) <= n; ++i) {
    cur.push_back(i);
    combinations(n, s, i + 1, cur, visit);
    cur.pop_back();
  }
}

linalg::Matrix span_basis(const linalg::Matrix& generators, std::size_t ambient) {
  // Row space basis by greedy selection.
  linalg::Matrix basis;
  for (const auto& g : generators) {
    linalg::Matrix trial = basis;
    trial.push_back(g);
    if (linalg::rank(trial) == trial.size()) basis = std::move(trial);
    if (basis.size() == ambient) break;
  }
  return basis;
}

}  // namespace

std::vector<linalg::Vector> facets(const linalg::Matrix& generators, std::size_t ambient) {
  const linalg::Matrix basis = span_basis(generators, ambient);
  const std::size_t m = basis.size();
  std::vector<linalg::Vector> out;
  if (m == 0) return out;
  std::vector<std::size_t> cur;
  combinations(generators.size(), m - 1, 0, cur, [&](const std::vector<std::size_t>& subset) {
    linalg::Matrix rows;
    for (auto i : subset) rows.push_back(generators[i]);
    if (linalg::rank(rows) != m - 1) return;
    // Functional y . basis vanishing on the subset.
    linalg::Matrix gram;
    for (const auto& g : rows) {
      linalg::Vector row;
      for (const auto& b : basis) row.push_back(linalg::dot(b, g));
      gram.push_back(std::move(row));
    }
    const linalg::Matrix kernel = linalg::nullspace(gram, m);
    if (kernel.size() != 1) return;
    linalg::Vector phi(ambient);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < ambient; ++t) phi[t] += kernel[0][j] * basis[j][t];
    int sign_seen = 0;
    for (const auto& g : generators) {
      const int s = linalg::dot(phi, g).sign();
      if (s == 0) continue;
      if (sign_seen == 0) sign_seen = s;
      if (s != sign_seen) return;
    }
    if (sign_seen == 0) return;
    if (sign_seen < 0)
      for (auto& x : phi) x = -x;
    if (std::find(out.begin(), out.end(), phi) == out.end()) out.push_back(std::move(phi));
  });
  return out;
}

Membership locate(const linalg::Vector& point, const linalg::Matrix& generators, std::size_t ambient) {
  const linalg::Matrix basis = span_basis(generators, ambient);
  linalg::Matrix with = basis;
  with.push_back(point);
  if (linalg::rank(with) != basis.size()) return Membership::outside;
  if (basis.empty()) return Membership::boundary;
  bool on_boundary = false;
  for (const auto& phi : facets(generators, ambient)) {
    const int s = linalg::dot(phi, point).sign();
    if (s < 0) return Membership::outside;
    if (s == 0) on_boundary = true;
  }
  return on_boundary ? Membership::boundary : Membership::interior;
}

}  // namespace polyhedral

AmpleStatus is_ample(const CycleClass& c, const SpaceModel& space) {
  const int k = c.codim();
  if (k < 1 || k > space.dim() || space.nef_divisors.empty()) return AmpleStatus::unknown;
  linalg::Matrix gens;
  std::vector<std::size_t> pick(k, 0);
  const std::size_t n = space.nef_divisors.size();
  // Multisets of size k as nondecreasing index vectors.
  while (true) {
    CycleClass prod = CycleClass::one(space.ring);
    for (auto i : pick) prod = prod * space.nef_divisors[i];
    if (!prod.overflow() && !prod.is_zero()) gens.push_back(prod.coords());
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == n - 1) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j < k; ++j) pick[j] = pick[pos];
  }
  if (gens.empty()) return AmpleStatus::unknown;
  switch (polyhedral::locate(c.coords(), gens, space.ring->rank(k))) {
    case polyhedral::Membership::interior:
      return AmpleStatus::yes;
    case polyhedral::Membership::boundary:
      return AmpleStatus::boundary;
    case polyhedral::Membership::outside:
      return AmpleStatus::no;
  }
  return AmpleStatus::unknown;
}

bool is_ample_deg2(const CycleClass& c, const SpaceModel& space) {
  if (c.codim() != 2) throw StructuralError("is_ample_deg2 needs a codimension-two class");
  const AmpleStatus s = is_ample(c, space);
  if (s == AmpleStatus::unknown) throw UnsupportedConstruction("no ample-cone description in N^2");
  return s == AmpleStatus::yes;
}

PositivityVerdict classify(const CycleClass& c, const SpaceModel& space) {
  if (c.codim() < 1 || c.codim() > space.dim()) throw StructuralError("classify needs 1 <= codim <= dim");
  const ConeSpec& cone = space.cones.at(c.codim());
  const ConeTest nef = is_nef(c, cone);
  const ConeTest weak = is_weakly_positive(c, cone);
  const ConeTest pos = is_positive(c, cone);
  const AmpleStatus ample = is_ample(c, space);

  if ((ample == AmpleStatus::yes && !pos.holds) || (pos.holds && !weak.holds) || (weak.holds && !nef.holds)) {
    throw InvariantFailure("positivity levels are not nested for " + to_string(c));
  }
  PositivityVerdict v;
  v.provenance = cone.provenance;
  v.ample = ample;
  if (ample == AmpleStatus::yes) {
    v.level = Level::ample;
  } else if (pos.holds) {
    v.level = Level::positive;
  } else if (weak.holds) {
    v.level = Level::weakly_positive;
  } else if (nef.holds) {
    v.level = Level::nef;
    v.witness = weak.witness;
  } else {
    v.level = Level::not_nef;
    v.witness = nef.witness;
  }
  return v;
}

ConeTest is_fano(const SpaceModel& space) {
  const CycleClass c1 = ch_tangent(space).ch(1);
  return is_weakly_positive(c1, space.cones.at(1));
}

bool fano_pe_slope_criterion(const SpaceModel& base, const std::vector<int>& twists) {
  const bool supported = std::holds_alternative<PointData>(base.data) ||
                         std::holds_alternative<WeightedData>(base.data) ||
                         std::holds_alternative<CompleteIntersectionData>(base.data);
  if (!supported) throw UnsupportedConstruction("slope criterion needs a base P(n), WP(...) or CI(...)");
  if (twists.size() < 2) throw ParameterError("slope criterion needs rank >= 2");
  const Rational K = pair(ch_tangent(base).ch(1), base.minimal_curve());
  const Rational r(static_cast<long>(twists.size()));
  Rational sum = 0;
  for (int w : twists) sum += w;
  const Rational top(*std::max_element(twists.begin(), twists.end()));
  return top - sum / r < K / r;
}

bool bup_fano_criterion(int n, int m) {
  if (n < 2 || m < 0 || m > n - 2) throw ParameterError("bup criterion needs 0 <= m <= n-2");
  const int c = n - m;
  // Against h = hyperplane: deg c_1(T) = n + 1 on lines.
  const Rational bound(n + 1, c - 1);
  // (i) strict transforms of lines meet the center at most once
  const bool lines = Rational(1) < bound;
  // (ii) lines inside the center, normal bundle O(1)^c; vacuous for a point
  const bool center = m == 0 || Rational(1) < bound;
  return lines && center;
}

}  // namespace chpos
