#pragma once

#include "chpos/linalg.hpp"
#include "chpos/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chpos {

/// Name of a basis element as a product of named generators, e.g. h^2*z.
/// Schubert classes use a single opaque generator such as "s21".
struct Label {
  std::vector<std::pair<std::string, int>> factors;

  std::string str() const;
  bool operator==(const Label&) const = default;
};

/// Exact-rational graded commutative ring N^*(X)_Q of a modeled space.
///
/// Each graded piece N^k carries an ordered basis; multiplication is given on
/// basis elements and products past the top degree vanish. The degree
/// functional lives on N^dim.
class GradedRing {
 public:
  virtual ~GradedRing() = default;

  int dim() const { return dim_; }
  std::size_t rank(int codim) const;
  const std::vector<Label>& basis(int codim) const;
  const std::vector<Rational>& degree() const { return degree_; }

  /// Index of the basis element with the given rendered label, if any.
  std::optional<std::size_t> find(int codim, std::string_view label) const;

  /// Coordinates in N^(ca+cb) of basis(ca)[i] * basis(cb)[j]; requires
  /// ca + cb <= dim.
  virtual std::vector<Rational> multiply_basis(int ca, std::size_t i, int cb, std::size_t j) const = 0;

 protected:
  GradedRing(int dim, std::vector<std::vector<Label>> basis, std::vector<Rational> degree);

 private:
  int dim_;
  std::vector<std::vector<Label>> basis_;
  std::vector<Rational> degree_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

/// Ring with a precomputed structure-constant table.
class TableRing final : public GradedRing {
 public:
  using ProductFn = std::function<std::vector<Rational>(int, std::size_t, int, std::size_t)>;

  TableRing(int dim, std::vector<std::vector<Label>> basis, std::vector<Rational> degree,
            const ProductFn& product);

  std::vector<Rational> multiply_basis(int ca, std::size_t i, int cb, std::size_t j) const override;

 private:
  std::size_t flat(int codim, std::size_t i) const { return offsets_[codim] + i; }

  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::vector<std::vector<Rational>> table_;
};

/// N^*(X) (x) N^*(Y) with generators renamed by factor index (h -> h1, h2).
class ProductRing final : public GradedRing {
 public:
  ProductRing(RingPtr left, RingPtr right);

  std::vector<Rational> multiply_basis(int ca, std::size_t i, int cb, std::size_t j) const override;

  const RingPtr& left() const { return left_; }
  const RingPtr& right() const { return right_; }

  /// Position in N^(a+b) of left(a)[i] (x) right(b)[j].
  std::size_t index_of(int a, std::size_t i, int b, std::size_t j) const;

  struct Entry {
    int left_codim;
    std::size_t left_index;
    int right_codim;
    std::size_t right_index;
  };
  const Entry& entry(int codim, std::size_t i) const { return entries_[codim][i]; }

  /// Precomputed basis data; defined in the implementation.
  struct Layout;

 private:
  ProductRing(RingPtr left, RingPtr right, Layout layout);

  RingPtr left_;
  RingPtr right_;
  std::vector<std::vector<Entry>> entries_;
  // block_offset_[k][a] = first index in N^k of the block with left codim a.
  std::vector<std::vector<std::size_t>> block_offset_;
};

/// Polynomial in the generators of a tower presentation, keyed by exponents.
using Exponents = std::vector<int>;
using Polynomial = std::map<Exponents, Rational>;

/// Generator v of degree 1 with monic relation v^bound == relation, where the
/// relation involves only this and earlier generators and has v-degree below
/// bound.
struct TowerGenerator {
  std::string name;
  int bound;
  Polynomial relation;
};

/// Builds Q[v_1..v_m]/(relations) with standard monomials as basis (ordered
/// lexicographically descending in the exponent vector) and the given degree
/// of the unique top monomial.
RingPtr tower_ring(const std::vector<TowerGenerator>& generators, const Rational& top_degree);

/// Changes basis: new_basis[k] rows are the new basis vectors of N^k written in
/// the old basis. Throws ParameterError if any block is singular.
RingPtr rebase(const GradedRing& ring, const std::vector<linalg::Matrix>& new_basis,
               std::vector<std::vector<Label>> labels);

/// Element of N^codim. Products past the top degree produce an "overflow"
/// class (codim > dim, no coordinates) that behaves as zero.
class CycleClass {
 public:
  CycleClass(RingPtr ring, int codim, std::vector<Rational> coords);

  static CycleClass zero(RingPtr ring, int codim);
  static CycleClass one(RingPtr ring);
  static CycleClass basis_element(RingPtr ring, int codim, std::size_t i);
  /// Basis element looked up by rendered label; throws StructuralError.
  static CycleClass named(RingPtr ring, int codim, std::string_view label);

  const RingPtr& ring() const { return ring_; }
  int codim() const { return codim_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool overflow() const;
  bool is_zero() const;

  bool operator==(const CycleClass& other) const;

 private:
  RingPtr ring_;
  int codim_;
  std::vector<Rational> coords_;
};

CycleClass add(const CycleClass& a, const CycleClass& b);
CycleClass mul(const CycleClass& a, const CycleClass& b);
CycleClass scale(const Rational& s, const CycleClass& a);
CycleClass power(const CycleClass& a, int k);

/// degree(a * z); requires codim(a) + codim(z) == dim.
Rational pair(const CycleClass& c, const CycleClass& z);
/// Degree of a top-codimension class.
Rational degree(const CycleClass& top);

inline CycleClass operator+(const CycleClass& a, const CycleClass& b) { return add(a, b); }
inline CycleClass operator-(const CycleClass& a) { return scale(Rational(-1), a); }
inline CycleClass operator-(const CycleClass& a, const CycleClass& b) { return add(a, -b); }
inline CycleClass operator*(const CycleClass& a, const CycleClass& b) { return mul(a, b); }
inline CycleClass operator*(const Rational& s, const CycleClass& a) { return scale(s, a); }
inline CycleClass operator*(long s, const CycleClass& a) { return scale(Rational(s), a); }

/// "3/2*s2 + 1/2*s11"; "0" for the zero class.
std::string to_string(const CycleClass& c);

/// Graded ring homomorphism given by images of basis elements.
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<std::vector<CycleClass>> images);

  /// Sends each source basis label (a monomial in generator names) to the
  /// product of the generator images.
  static RingMap from_generators(RingPtr source, RingPtr target,
                                 const std::map<std::string, CycleClass>& generator_images);

  CycleClass operator()(const CycleClass& c) const;

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<std::vector<CycleClass>> images_;
};

/// Randomized self-test: commutativity and associativity on random triples of
/// basis elements. Throws InvariantFailure.
void verify_ring(const GradedRing& ring, std::uint64_t seed = 0x5eed, int trials = 64);

}  // namespace chpos
