#include "chpos/chern.hpp"

#include "chpos/errors.hpp"
#include "chpos/schubert.hpp"

#include <algorithm>

namespace chpos {

namespace {

CycleClass zero_or_overflow(const RingPtr& ring, int codim) {
  return codim > ring->dim() ? CycleClass(ring, codim, {}) : CycleClass::zero(ring, codim);
}

void check_graded(const RingPtr& ring, const std::vector<CycleClass>& graded) {
  for (std::size_t i = 0; i < graded.size(); ++i) {
    if (graded[i].ring().get() != ring.get()) throw StructuralError("graded piece lives on another space");
    if (graded[i].codim() != static_cast<int>(i) + 1) throw StructuralError("graded piece has wrong codimension");
  }
}

Rational power_sum(const std::vector<int>& xs, int k) {
  Rational s = 0;
  for (int x : xs) {
    Rational p = 1;
    for (int i = 0; i < k; ++i) p *= x;
    s += p;
  }
  return s;
}

// sum_i (a_i^k - ...) h^k / k! for k = 1..K
ChernCharacter polynomial_character(const RingPtr& ring, const CycleClass& h, Rational rank,
                                    const std::vector<int>& plus, const std::vector<int>& minus, int truncation) {
  std::vector<CycleClass> graded;
  for (int k = 1; k <= truncation; ++k) {
    graded.push_back(scale((power_sum(plus, k) - power_sum(minus, k)) * inverse_factorial(k), power(h, k)));
  }
  return ChernCharacter(ring, std::move(rank), std::move(graded));
}

ChernCharacter tangent(const SpaceModel& space, int truncation);

ChernCharacter grassmannian_tangent(const SpaceModel& space, int k, int n) {
  const RingPtr& ring = space.ring;
  const int t = space.chern_truncation;
  std::vector<CycleClass> sdual;
  std::vector<CycleClass> quot;
  for (int i = 1; i <= t; ++i) {
    sdual.push_back(schubert::column_class(ring, k, n, i));
    quot.push_back(schubert::special_class(ring, k, n, i));
  }
  const ChernCharacter a = ch_from_chern(ChernClasses(ring, std::move(sdual)), Rational(k));
  const ChernCharacter b = ch_from_chern(ChernClasses(ring, std::move(quot)), Rational(n - k));
  return ch_tensor(a, b);
}

ChernCharacter bundle_tangent(const SpaceModel& space, const BundleData& data, int truncation) {
  const RingPtr& ring = space.ring;
  const CycleClass& h = *space.hyperplane;
  const int t = truncation;
  const ChernCharacter base = tangent(*data.base, t);
  const ChernCharacter pulled = pullback(base, *data.pullback);
  // T_{PE/X} = pi^*E (x) O(1) - O
  std::vector<CycleClass> graded;
  for (int k = 1; k <= t; ++k) {
    CycleClass rel = zero_or_overflow(ring, k);
    for (int w : data.normalized_twists) rel = rel + scale(inverse_factorial(k), power(data.zeta + Rational(w) * h, k));
    graded.push_back(pulled.ch(k) + rel);
  }
  return ChernCharacter(ring, Rational(space.dim()), std::move(graded));
}

ChernCharacter blowup_tangent(const SpaceModel& space, const BlowupData& data) {
  const int n = data.n;
  const int c = data.n - data.m;
  const CycleClass& H = data.H;
  const CycleClass& E = data.E;
  CycleClass ch1 = Rational(n + 1) * H - Rational(c - 1) * E;
  CycleClass ch2 = Rational(n + 1, 2) * (H * H) + Rational(c + 1, 2) * (E * E) - data.pushforward;
  return ChernCharacter(space.ring, Rational(n), {std::move(ch1), std::move(ch2)});
}

// Full-graded models honour any requested truncation; the others cap it.
ChernCharacter tangent(const SpaceModel& space, int truncation) {
  return std::visit(
      [&](const auto& d) -> ChernCharacter {
        using T = std::decay_t<decltype(d)>;
        const RingPtr& ring = space.ring;
        if constexpr (std::is_same_v<T, PointData>) {
          return polynomial_character(ring, *space.hyperplane, Rational(d.n), std::vector<int>(d.n + 1, 1), {},
                                      truncation);
        } else if constexpr (std::is_same_v<T, WeightedData>) {
          return polynomial_character(ring, *space.hyperplane, Rational(space.dim()), d.weights, {},
                                      truncation);
        } else if constexpr (std::is_same_v<T, CompleteIntersectionData>) {
          return polynomial_character(ring, *space.hyperplane, Rational(space.dim()), d.base_weights, d.degrees,
                                      truncation);
        } else if constexpr (std::is_same_v<T, GrassmannianData>) {
          return grassmannian_tangent(space, d.k, d.n);
        } else if constexpr (std::is_same_v<T, ProductData>) {
          return ch_sum(pullback(tangent(*d.left, truncation), *d.pull_left),
                        pullback(tangent(*d.right, truncation), *d.pull_right));
        } else if constexpr (std::is_same_v<T, BundleData>) {
          return bundle_tangent(space, d, truncation);
        } else {
          return blowup_tangent(space, d);
        }
      },
      space.data);
}

}  // namespace

ChernCharacter::ChernCharacter(RingPtr ring, Rational rank, std::vector<CycleClass> graded)
    : ring_(std::move(ring)), rank_(std::move(rank)), graded_(std::move(graded)) {
  check_graded(ring_, graded_);
}

ChernCharacter ChernCharacter::trivial(RingPtr ring, Rational rank, int truncation) {
  std::vector<CycleClass> graded;
  for (int k = 1; k <= truncation; ++k) graded.push_back(zero_or_overflow(ring, k));
  return ChernCharacter(std::move(ring), std::move(rank), std::move(graded));
}

const CycleClass& ChernCharacter::ch(int k) const {
  if (k < 1 || k > truncation()) {
    throw StructuralError("ch_" + std::to_string(k) + " is past the truncation " + std::to_string(truncation()));
  }
  return graded_[k - 1];
}

ChernClasses::ChernClasses(RingPtr ring, std::vector<CycleClass> classes)
    : ring_(std::move(ring)), classes_(std::move(classes)) {
  check_graded(ring_, classes_);
}

const CycleClass& ChernClasses::c(int k) const {
  if (k < 1 || k > truncation()) throw StructuralError("c_" + std::to_string(k) + " is past the truncation");
  return classes_[k - 1];
}

ChernCharacter ch_tangent(const SpaceModel& space) { return tangent(space, space.chern_truncation); }

ChernCharacter ch_split(const SpaceModel& space, const std::vector<int>& twists) {
  if (!space.hyperplane) throw UnsupportedConstruction("split characters need a distinguished hyperplane class");
  return polynomial_character(space.ring, *space.hyperplane, Rational(static_cast<long>(twists.size())), twists, {},
                              std::max(space.chern_truncation, 2));
}

ChernCharacter ch_line(const CycleClass& divisor, int truncation) {
  if (divisor.codim() != 1) throw StructuralError("ch_line needs a divisor class");
  std::vector<CycleClass> graded;
  for (int k = 1; k <= truncation; ++k) graded.push_back(scale(inverse_factorial(k), power(divisor, k)));
  return ChernCharacter(divisor.ring(), Rational(1), std::move(graded));
}

ChernClasses chern_from_ch(const ChernCharacter& c) {
  // k c_k = sum_{i=1}^k (-1)^(i-1) i! ch_i c_(k-i)
  const RingPtr& ring = c.ring();
  std::vector<CycleClass> cs;
  for (int k = 1; k <= c.truncation(); ++k) {
    CycleClass acc = zero_or_overflow(ring, k);
    Rational fact = 1;
    for (int i = 1; i <= k; ++i) {
      fact *= i;
      const CycleClass prev = i == k ? CycleClass::one(ring) : cs[k - i - 1];
      const Rational coeff = (i % 2 == 1 ? fact : Rational(-fact));
      acc = acc + scale(coeff, c.ch(i) * prev);
    }
    cs.push_back(scale(Rational(1, k), acc));
  }
  return ChernClasses(ring, std::move(cs));
}

ChernCharacter ch_from_chern(const ChernClasses& c, Rational rank) {
  // p_k = sum_{i=1}^{k-1} (-1)^(i-1) c_i p_(k-i) + (-1)^(k-1) k c_k,  ch_k = p_k / k!
  const RingPtr& ring = c.ring();
  std::vector<CycleClass> p;
  std::vector<CycleClass> graded;
  for (int k = 1; k <= c.truncation(); ++k) {
    CycleClass acc = scale(Rational(k % 2 == 1 ? k : -k), c.c(k));
    for (int i = 1; i < k; ++i) acc = acc + scale(Rational(i % 2 == 1 ? 1 : -1), c.c(i) * p[k - i - 1]);
    p.push_back(acc);
    graded.push_back(scale(inverse_factorial(k), acc));
  }
  return ChernCharacter(ring, std::move(rank), std::move(graded));
}

CycleClass ch2_pbundle_rank2(const CycleClass& base_ch2, const ChernClasses& e) {
  return base_ch2 + scale(Rational(1, 2), e.c1() * e.c1() - Rational(4) * e.c2());
}

ChernCharacter ch_tensor(const ChernCharacter& a, const ChernCharacter& b) {
  if (a.ring().get() != b.ring().get()) throw StructuralError("tensor of characters on different spaces");
  const RingPtr& ring = a.ring();
  const int t = std::min(a.truncation(), b.truncation());
  auto piece = [&](const ChernCharacter& x, int k) {
    return k == 0 ? scale(x.rank(), CycleClass::one(ring)) : x.ch(k);
  };
  std::vector<CycleClass> graded;
  for (int k = 1; k <= t; ++k) {
    CycleClass acc = zero_or_overflow(ring, k);
    for (int i = 0; i <= k; ++i) acc = acc + piece(a, i) * piece(b, k - i);
    graded.push_back(std::move(acc));
  }
  return ChernCharacter(ring, a.rank() * b.rank(), std::move(graded));
}

ChernCharacter ch_tensor_deg2(const ChernCharacter& a, const ChernCharacter& b) {
  if (a.truncation() < 2 || b.truncation() < 2) throw StructuralError("degree-two tensor needs ch_1 and ch_2");
  const ChernCharacter full = ch_tensor(a, b);
  return ChernCharacter(full.ring(), full.rank(), {full.ch(1), full.ch(2)});
}

ChernCharacter ch_dual(const ChernCharacter& a) {
  std::vector<CycleClass> graded;
  for (int k = 1; k <= a.truncation(); ++k) graded.push_back(k % 2 == 1 ? -a.ch(k) : a.ch(k));
  return ChernCharacter(a.ring(), a.rank(), std::move(graded));
}

ChernCharacter ch_sum(const ChernCharacter& a, const ChernCharacter& b) {
  if (a.ring().get() != b.ring().get()) throw StructuralError("sum of characters on different spaces");
  const int t = std::min(a.truncation(), b.truncation());
  std::vector<CycleClass> graded;
  for (int k = 1; k <= t; ++k) graded.push_back(a.ch(k) + b.ch(k));
  return ChernCharacter(a.ring(), a.rank() + b.rank(), std::move(graded));
}

ChernCharacter ch_difference(const ChernCharacter& a, const ChernCharacter& b) {
  const ChernCharacter neg(b.ring(), -b.rank(), [&] {
    std::vector<CycleClass> g;
    for (int k = 1; k <= b.truncation(); ++k) g.push_back(-b.ch(k));
    return g;
  }());
  return ch_sum(a, neg);
}

ChernCharacter pullback(const ChernCharacter& a, const RingMap& map) {
  const RingPtr& target = map.target();
  std::vector<CycleClass> graded;
  for (int k = 1; k <= a.truncation(); ++k) graded.push_back(map(a.ch(k)));
  return ChernCharacter(target, a.rank(), std::move(graded));
}

}  // namespace chpos
