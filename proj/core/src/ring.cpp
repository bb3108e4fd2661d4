#include "chpos/ring.hpp"

#include "chpos/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace chpos {

std::string Label::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [name, exponent] : factors) {
    if (!out.empty()) out += '*';
    out += name;
    if (exponent != 1) out += "^" + std::to_string(exponent);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GradedRing

GradedRing::GradedRing(int dim, std::vector<std::vector<Label>> basis, std::vector<Rational> degree)
    : dim_(dim), basis_(std::move(basis)), degree_(std::move(degree)) {
  if (dim_ < 0) throw ParameterError("negative ring dimension");
  if (static_cast<int>(basis_.size()) != dim_ + 1) throw StructuralError("basis must cover codim 0..dim");
  if (degree_.size() != basis_[dim_].size()) throw StructuralError("degree functional has wrong length");
}

std::size_t GradedRing::rank(int codim) const {
  if (codim < 0 || codim > dim_) return 0;
  return basis_[codim].size();
}

const std::vector<Label>& GradedRing::basis(int codim) const {
  if (codim < 0 || codim > dim_) throw StructuralError("codimension " + std::to_string(codim) + " out of range");
  return basis_[codim];
}

std::optional<std::size_t> GradedRing::find(int codim, std::string_view label) const {
  if (codim < 0 || codim > dim_) return std::nullopt;
  const auto& b = basis_[codim];
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].str() == label) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// TableRing

TableRing::TableRing(int dim, std::vector<std::vector<Label>> basis, std::vector<Rational> degree,
                     const ProductFn& product)
    : GradedRing(dim, std::move(basis), std::move(degree)) {
  offsets_.resize(dim + 2);
  for (int k = 0; k <= dim; ++k) offsets_[k + 1] = offsets_[k] + rank(k);
  total_ = offsets_[dim + 1];
  table_.resize(total_ * total_);
  for (int a = 0; a <= dim; ++a) {
    for (int b = a; a + b <= dim; ++b) {
      for (std::size_t i = 0; i < rank(a); ++i) {
        for (std::size_t j = 0; j < rank(b); ++j) {
          if (a == b && j < i) continue;
          auto v = product(a, i, b, j);
          if (v.size() != rank(a + b)) throw StructuralError("product has wrong length");
          table_[flat(b, j) * total_ + flat(a, i)] = v;
          table_[flat(a, i) * total_ + flat(b, j)] = std::move(v);
        }
      }
    }
  }
}

std::vector<Rational> TableRing::multiply_basis(int ca, std::size_t i, int cb, std::size_t j) const {
  if (ca + cb > dim()) throw StructuralError("product exceeds top degree");
  return table_[flat(ca, i) * total_ + flat(cb, j)];
}

// ---------------------------------------------------------------------------
// ProductRing

namespace {

std::string qualify(const std::string& name, int index) {
  const char last = name.empty() ? '_' : name.back();
  const bool alpha = (last >= 'a' && last <= 'z') || (last >= 'A' && last <= 'Z');
  return alpha ? name + std::to_string(index) : name + "_" + std::to_string(index);
}

Label qualify(const Label& label, int index) {
  Label out;
  for (const auto& [name, e] : label.factors) out.factors.emplace_back(qualify(name, index), e);
  return out;
}

}  // namespace

struct ProductRing::Layout {
  std::vector<std::vector<Label>> basis;
  std::vector<Rational> degree;
  std::vector<std::vector<Entry>> entries;
  std::vector<std::vector<std::size_t>> block_offset;
};

namespace {

ProductRing::Layout product_layout(const GradedRing& l, const GradedRing& r) {
  ProductRing::Layout out;
  const int dim = l.dim() + r.dim();
  out.basis.resize(dim + 1);
  out.entries.resize(dim + 1);
  out.block_offset.assign(dim + 1, std::vector<std::size_t>(l.dim() + 1, 0));
  for (int k = 0; k <= dim; ++k) {
    for (int a = std::min(k, l.dim()); a >= std::max(0, k - r.dim()); --a) {
      const int b = k - a;
      out.block_offset[k][a] = out.entries[k].size();
      for (std::size_t i = 0; i < l.rank(a); ++i) {
        for (std::size_t j = 0; j < r.rank(b); ++j) {
          Label lab = qualify(l.basis(a)[i], 1);
          const Label rl = qualify(r.basis(b)[j], 2);
          lab.factors.insert(lab.factors.end(), rl.factors.begin(), rl.factors.end());
          out.basis[k].push_back(std::move(lab));
          out.entries[k].push_back({a, i, b, j});
        }
      }
    }
  }
  for (const auto& e : out.entries[dim]) {
    out.degree.push_back(l.degree()[e.left_index] * r.degree()[e.right_index]);
  }
  return out;
}

}  // namespace

ProductRing::ProductRing(RingPtr left, RingPtr right)
    : ProductRing(left, right, product_layout(*left, *right)) {}

ProductRing::ProductRing(RingPtr left, RingPtr right, Layout layout)
    : GradedRing(left->dim() + right->dim(), std::move(layout.basis), std::move(layout.degree)),
      left_(std::move(left)),
      right_(std::move(right)),
      entries_(std::move(layout.entries)),
      block_offset_(std::move(layout.block_offset)) {}

std::size_t ProductRing::index_of(int a, std::size_t i, int b, std::size_t j) const {
  return block_offset_[a + b][a] + i * right_->rank(b) + j;
}

std::vector<Rational> ProductRing::multiply_basis(int ca, std::size_t i, int cb, std::size_t j) const {
  if (ca + cb > dim()) throw StructuralError("product exceeds top degree");
  std::vector<Rational> out(rank(ca + cb));
  const Entry& x = entries_[ca][i];
  const Entry& y = entries_[cb][j];
  const int la = x.left_codim + y.left_codim;
  const int rb = x.right_codim + y.right_codim;
  if (la > left_->dim() || rb > right_->dim()) return out;
  const auto lv = left_->multiply_basis(x.left_codim, x.left_index, y.left_codim, y.left_index);
  const auto rv = right_->multiply_basis(x.right_codim, x.right_index, y.right_codim, y.right_index);
  for (std::size_t p = 0; p < lv.size(); ++p) {
    if (lv[p] == 0) continue;
    for (std::size_t q = 0; q < rv.size(); ++q) {
      if (rv[q] == 0) continue;
      out[index_of(la, p, rb, q)] += lv[p] * rv[q];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tower presentations

namespace {

class TowerNormalizer {
 public:
  explicit TowerNormalizer(const std::vector<TowerGenerator>& gens) : gens_(gens) {
    dim_ = 0;
    for (const auto& g : gens_) {
      if (g.bound < 1) throw ParameterError("tower generator bound must be positive");
      for (const auto& [exps, coeff] : g.relation) {
        int d = 0;
        for (int e : exps) d += e;
        if (d != g.bound || exps.size() != gens_.size()) {
          throw ParameterError("tower relation for " + g.name + " is not homogeneous");
        }
      }
      dim_ += g.bound - 1;
    }
    basis_.resize(dim_ + 1);
    Exponents e(gens_.size(), 0);
    enumerate(0, e);
    for (auto& b : basis_) std::sort(b.begin(), b.end(), std::greater<>());
    index_.resize(dim_ + 1);
    for (int k = 0; k <= dim_; ++k)
      for (std::size_t i = 0; i < basis_[k].size(); ++i) index_[k][basis_[k][i]] = i;
  }

  int dim() const { return dim_; }
  const std::vector<std::vector<Exponents>>& basis() const { return basis_; }

  std::vector<Rational> normal_form(const Exponents& exps) {
    int total = 0;
    for (int e : exps) total += e;
    if (total > dim_) return {};
    if (auto it = memo_.find(exps); it != memo_.end()) return it->second;
    std::vector<Rational> out(basis_[total].size());
    int j = static_cast<int>(gens_.size()) - 1;
    while (j >= 0 && exps[j] < gens_[j].bound) --j;
    if (j < 0) {
      out[index_[total].at(exps)] = 1;
    } else {
      Exponents rest = exps;
      rest[j] -= gens_[j].bound;
      for (const auto& [mono, coeff] : gens_[j].relation) {
        Exponents next = rest;
        for (std::size_t v = 0; v < next.size(); ++v) next[v] += mono[v];
        const auto sub = normal_form(next);
        for (std::size_t t = 0; t < sub.size(); ++t) {
          if (sub[t] != 0) out[t] += coeff * sub[t];
        }
      }
    }
    memo_.emplace(exps, out);
    return out;
  }

 private:
  void enumerate(std::size_t var, Exponents& e) {
    if (var == gens_.size()) {
      int total = 0;
      for (int x : e) total += x;
      basis_[total].push_back(e);
      return;
    }
    for (int x = 0; x < gens_[var].bound; ++x) {
      e[var] = x;
      enumerate(var + 1, e);
    }
    e[var] = 0;
  }

  const std::vector<TowerGenerator>& gens_;
  int dim_ = 0;
  std::vector<std::vector<Exponents>> basis_;
  std::vector<std::map<Exponents, std::size_t>> index_;
  std::map<Exponents, std::vector<Rational>> memo_;
};

}  // namespace

RingPtr tower_ring(const std::vector<TowerGenerator>& generators, const Rational& top_degree) {
  TowerNormalizer nf(generators);
  const int dim = nf.dim();
  std::vector<std::vector<Label>> labels(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    for (const auto& exps : nf.basis()[k]) {
      Label lab;
      for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] > 0) lab.factors.emplace_back(generators[v].name, exps[v]);
      }
      labels[k].push_back(std::move(lab));
    }
  }
  const auto& basis = nf.basis();
  return std::make_shared<TableRing>(dim, std::move(labels), std::vector<Rational>{top_degree},
                                     [&](int a, std::size_t i, int b, std::size_t j) {
                                       Exponents e = basis[a][i];
                                       for (std::size_t v = 0; v < e.size(); ++v) e[v] += basis[b][j][v];
                                       return nf.normal_form(e);
                                     });
}

RingPtr rebase(const GradedRing& ring, const std::vector<linalg::Matrix>& new_basis,
               std::vector<std::vector<Label>> labels) {
  const int dim = ring.dim();
  if (static_cast<int>(new_basis.size()) != dim + 1) throw StructuralError("rebase needs every codimension");
  std::vector<linalg::Matrix> inverse(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    if (new_basis[k].size() != ring.rank(k)) throw ParameterError("rebase block has wrong size");
    inverse[k] = linalg::inverse(new_basis[k]);
  }
  std::vector<Rational> degree(ring.rank(dim));
  for (std::size_t t = 0; t < degree.size(); ++t) degree[t] = linalg::dot(new_basis[dim][t], ring.degree());
  return std::make_shared<TableRing>(
      dim, std::move(labels), std::move(degree), [&](int a, std::size_t i, int b, std::size_t j) {
        std::vector<Rational> old(ring.rank(a + b));
        for (std::size_t o = 0; o < ring.rank(a); ++o) {
          if (new_basis[a][i][o] == 0) continue;
          for (std::size_t p = 0; p < ring.rank(b); ++p) {
            if (new_basis[b][j][p] == 0) continue;
            const auto prod = ring.multiply_basis(a, o, b, p);
            const Rational f = new_basis[a][i][o] * new_basis[b][j][p];
            for (std::size_t t = 0; t < prod.size(); ++t) {
              if (prod[t] != 0) old[t] += f * prod[t];
            }
          }
        }
        std::vector<Rational> out(old.size());
        const auto& inv = inverse[a + b];
        for (std::size_t o = 0; o < old.size(); ++o) {
          if (old[o] == 0) continue;
          for (std::size_t t = 0; t < out.size(); ++t) out[t] += old[o] * inv[o][t];
        }
        return out;
      });
}

// ---------------------------------------------------------------------------
// CycleClass

CycleClass::CycleClass(RingPtr ring, int codim, std::vector<Rational> coords)
    : ring_(std::move(ring)), codim_(codim), coords_(std::move(coords)) {
  if (!ring_) throw StructuralError("cycle class without a space");
  if (codim_ < 0) throw StructuralError("negative codimension");
  if (codim_ > ring_->dim()) {
    if (!coords_.empty()) throw StructuralError("overflow class cannot carry coordinates");
  } else if (coords_.size() != ring_->rank(codim_)) {
    throw StructuralError("coordinate vector length " + std::to_string(coords_.size()) +
                          " does not match rank " + std::to_string(ring_->rank(codim_)) + " of N^" +
                          std::to_string(codim_));
  }
}

CycleClass CycleClass::zero(RingPtr ring, int codim) {
  const std::size_t n = ring->rank(codim);
  return CycleClass(std::move(ring), codim, std::vector<Rational>(n));
}

CycleClass CycleClass::one(RingPtr ring) { return basis_element(std::move(ring), 0, 0); }

CycleClass CycleClass::basis_element(RingPtr ring, int codim, std::size_t i) {
  auto c = zero(std::move(ring), codim);
  std::vector<Rational> v = c.coords();
  v.at(i) = 1;
  return CycleClass(c.ring(), codim, std::move(v));
}

CycleClass CycleClass::named(RingPtr ring, int codim, std::string_view label) {
  const auto idx = ring->find(codim, label);
  if (!idx) throw StructuralError("no basis element '" + std::string(label) + "' in N^" + std::to_string(codim));
  return basis_element(std::move(ring), codim, *idx);
}

bool CycleClass::overflow() const { return codim_ > ring_->dim(); }

bool CycleClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool CycleClass::operator==(const CycleClass& other) const {
  return ring_.get() == other.ring_.get() && codim_ == other.codim_ && coords_ == other.coords_;
}

namespace {

void require_same_space(const CycleClass& a, const CycleClass& b) {
  if (a.ring().get() != b.ring().get()) throw StructuralError("cycle classes live on different spaces");
}

}  // namespace

CycleClass add(const CycleClass& a, const CycleClass& b) {
  require_same_space(a, b);
  if (a.codim() != b.codim()) {
    throw StructuralError("cannot add classes of codimension " + std::to_string(a.codim()) + " and " +
                          std::to_string(b.codim()));
  }
  std::vector<Rational> v = a.coords();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coords()[i];
  return CycleClass(a.ring(), a.codim(), std::move(v));
}

CycleClass scale(const Rational& s, const CycleClass& a) {
  std::vector<Rational> v = a.coords();
  for (auto& x : v) x *= s;
  return CycleClass(a.ring(), a.codim(), std::move(v));
}

CycleClass mul(const CycleClass& a, const CycleClass& b) {
  require_same_space(a, b);
  const auto& ring = a.ring();
  const int codim = a.codim() + b.codim();
  if (codim > ring->dim()) return CycleClass(ring, codim, {});
  std::vector<Rational> out(ring->rank(codim));
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (a.coords()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords().size(); ++j) {
      if (b.coords()[j] == 0) continue;
      const auto prod = ring->multiply_basis(a.codim(), i, b.codim(), j);
      const Rational f = a.coords()[i] * b.coords()[j];
      for (std::size_t t = 0; t < prod.size(); ++t) {
        if (prod[t] != 0) out[t] += f * prod[t];
      }
    }
  }
  return CycleClass(ring, codim, std::move(out));
}

CycleClass power(const CycleClass& a, int k) {
  if (k < 0) throw ParameterError("negative power");
  CycleClass out = CycleClass::one(a.ring());
  for (int i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

Rational degree(const CycleClass& top) {
  if (top.codim() != top.ring()->dim()) throw StructuralError("degree needs a top-codimension class");
  return linalg::dot(top.coords(), top.ring()->degree());
}

Rational pair(const CycleClass& c, const CycleClass& z) {
  require_same_space(c, z);
  if (c.codim() + z.codim() != c.ring()->dim()) {
    throw StructuralError("pairing needs complementary codimensions, got " + std::to_string(c.codim()) + " and " +
                          std::to_string(z.codim()));
  }
  return degree(mul(c, z));
}

std::string to_string(const CycleClass& c) {
  if (c.overflow()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& labels = c.ring()->basis(c.codim());
  for (std::size_t i = 0; i < c.coords().size(); ++i) {
    const Rational& q = c.coords()[i];
    if (q == 0) continue;
    const Rational mag = abs(q);
    if (first) {
      if (q < 0) os << '-';
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    const std::string lab = labels[i].str();
    if (lab == "1") {
      os << to_string(mag);
    } else if (mag == 1) {
      os << lab;
    } else {
      os << to_string(mag) << '*' << lab;
    }
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// RingMap

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<std::vector<CycleClass>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->dim() + 1) throw StructuralError("ring map needs every codim");
  for (int k = 0; k <= source_->dim(); ++k) {
    if (images_[k].size() != source_->rank(k)) throw StructuralError("ring map block has wrong size");
    for (const auto& img : images_[k]) {
      if (img.ring().get() != target_.get() || img.codim() != k) {
        throw StructuralError("ring map image has wrong space or codim");
      }
    }
  }
}

RingMap RingMap::from_generators(RingPtr source, RingPtr target,
                                 const std::map<std::string, CycleClass>& generator_images) {
  std::vector<std::vector<CycleClass>> images(source->dim() + 1);
  for (int k = 0; k <= source->dim(); ++k) {
    for (const auto& label : source->basis(k)) {
      CycleClass img = CycleClass::one(target);
      for (const auto& [name, e] : label.factors) {
        const auto it = generator_images.find(name);
        if (it == generator_images.end()) throw StructuralError("no image for generator " + name);
        img = mul(img, power(it->second, e));
      }
      if (img.overflow()) img = CycleClass::zero(target, k);
      images[k].push_back(std::move(img));
    }
  }
  return RingMap(std::move(source), std::move(target), std::move(images));
}

CycleClass RingMap::operator()(const CycleClass& c) const {
  if (c.ring().get() != source_.get()) throw StructuralError("ring map applied to a class on another space");
  if (c.overflow()) {
    return c.codim() > target_->dim() ? CycleClass(target_, c.codim(), {}) : CycleClass::zero(target_, c.codim());
  }
  CycleClass out = CycleClass::zero(target_, c.codim());
  for (std::size_t i = 0; i < c.coords().size(); ++i) {
    if (c.coords()[i] != 0) out = add(out, scale(c.coords()[i], images_[c.codim()][i]));
  }
  return out;
}

// ---------------------------------------------------------------------------

void verify_ring(const GradedRing& ring, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  const int dim = ring.dim();
  auto pick_codim = [&](int budget) { return std::uniform_int_distribution<int>(0, budget)(rng); };
  auto as_vec = [&](int codim, std::size_t i) {
    std::vector<Rational> v(ring.rank(codim));
    v[i] = 1;
    return v;
  };
  auto mul_vec = [&](int ca, const std::vector<Rational>& x, int cb, const std::vector<Rational>& y) {
    std::vector<Rational> out(ring.rank(ca + cb));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) continue;
        const auto p = ring.multiply_basis(ca, i, cb, j);
        for (std::size_t t = 0; t < p.size(); ++t) out[t] += x[i] * y[j] * p[t];
      }
    }
    return out;
  };
  for (int t = 0; t < trials; ++t) {
    const int a = pick_codim(dim);
    const int b = pick_codim(dim - a);
    const int c = pick_codim(dim - a - b);
    if (ring.rank(a) == 0 || ring.rank(b) == 0 || ring.rank(c) == 0) continue;
    const auto i = std::uniform_int_distribution<std::size_t>(0, ring.rank(a) - 1)(rng);
    const auto j = std::uniform_int_distribution<std::size_t>(0, ring.rank(b) - 1)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(0, ring.rank(c) - 1)(rng);
    if (ring.multiply_basis(a, i, b, j) != ring.multiply_basis(b, j, a, i)) {
      throw InvariantFailure("ring multiplication is not commutative on " + ring.basis(a)[i].str() + ", " +
                             ring.basis(b)[j].str());
    }
    const auto left = mul_vec(a + b, ring.multiply_basis(a, i, b, j), c, as_vec(c, k));
    const auto right = mul_vec(a, as_vec(a, i), b + c, ring.multiply_basis(b, j, c, k));
    if (left != right) {
      throw InvariantFailure("ring multiplication is not associative on " + ring.basis(a)[i].str() + ", " +
                             ring.basis(b)[j].str() + ", " + ring.basis(c)[k].str());
    }
  }
}

}  // namespace chpos
