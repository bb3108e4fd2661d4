#include "chpos/schubert.hpp"

#include "chpos/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace chpos::schubert {

namespace {

void fill(int remaining, int rows, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (rows == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    fill(remaining - part, rows - 1, part, cur, out);
    cur.pop_back();
  }
}

// All nu with nu / lambda a horizontal strip of the given size, rows below
// `row` still open.
void strips(const Partition& lambda, int rows, int cols, int row, int left, Partition& nu,
            std::vector<Partition>& out) {
  if (row == rows) {
    if (left == 0) {
      Partition trimmed = nu;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      out.push_back(std::move(trimmed));
    }
    return;
  }
  const int base = row < static_cast<int>(lambda.size()) ? lambda[row] : 0;
  const int cap = row == 0 ? cols : (row - 1 < static_cast<int>(lambda.size()) ? lambda[row - 1] : 0);
  for (int add = std::min(left, cap - base); add >= 0; --add) {
    nu[row] = base + add;
    strips(lambda, rows, cols, row + 1, left - add, nu, out);
  }
  nu[row] = base;
}

using Combination = std::map<Partition, Integer>;

Combination apply_pieri(const Combination& in, int p, int rows, int cols) {
  Combination out;
  if (p < 0) return out;
  for (const auto& [lambda, coeff] : in) {
    for (auto& nu : pieri(lambda, p, rows, cols)) out[nu] += coeff;
  }
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// sigma_lambda * sigma_mu via Giambelli on mu.
Combination product(const Partition& lambda, const Partition& mu, int rows, int cols) {
  Combination total;
  const int len = static_cast<int>(mu.size());
  std::vector<int> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Combination acc{{lambda, Integer(1)}};
    for (int i = 0; i < len && !acc.empty(); ++i) acc = apply_pieri(acc, mu[i] + perm[i] - i, rows, cols);
    const int s = permutation_sign(perm);
    for (const auto& [nu, c] : acc) total[nu] += s * c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

std::vector<Partition> partitions_in_box(int size, int rows, int cols) {
  std::vector<Partition> out;
  Partition cur;
  fill(size, rows, cols, cur, out);
  return out;
}

std::string label(const Partition& p) {
  if (p.empty()) return "1";
  const bool wide = std::any_of(p.begin(), p.end(), [](int x) { return x >= 10; });
  std::string out = "s";
  if (wide) out += '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  if (wide) out += ']';
  return out;
}

Partition complement(const Partition& p, int rows, int cols) {
  Partition out;
  for (int i = rows - 1; i >= 0; --i) {
    const int part = cols - (i < static_cast<int>(p.size()) ? p[i] : 0);
    if (part > 0) out.push_back(part);
  }
  return out;
}

std::vector<Partition> pieri(const Partition& lambda, int p, int rows, int cols) {
  std::vector<Partition> out;
  if (p < 0) return out;
  Partition nu(rows, 0);
  for (std::size_t i = 0; i < lambda.size() && i < nu.size(); ++i) nu[i] = lambda[i];
  strips(lambda, rows, cols, 0, p, nu, out);
  return out;
}

RingPtr grassmannian_ring(int k, int n) {
  if (k < 1 || k >= n) throw ParameterError("G(" + std::to_string(k) + "," + std::to_string(n) + ") needs 1 <= k < n");
  const int rows = k;
  const int cols = n - k;
  const int dim = rows * cols;
  std::vector<std::vector<Partition>> parts(dim + 1);
  std::vector<std::vector<Label>> labels(dim + 1);
  std::vector<std::map<Partition, std::size_t>> index(dim + 1);
  for (int c = 0; c <= dim; ++c) {
    parts[c] = partitions_in_box(c, rows, cols);
    for (std::size_t i = 0; i < parts[c].size(); ++i) {
      index[c][parts[c][i]] = i;
      Label lab;
      if (!parts[c][i].empty()) lab.factors.emplace_back(label(parts[c][i]), 1);
      labels[c].push_back(std::move(lab));
    }
  }
  return std::make_shared<TableRing>(dim, std::move(labels), std::vector<Rational>{Rational(1)},
                                     [&](int a, std::size_t i, int b, std::size_t j) {
                                       std::vector<Rational> v(parts[a + b].size());
                                       for (const auto& [nu, c] : product(parts[a][i], parts[b][j], rows, cols)) {
                                         if (c != 0) v[index[a + b].at(nu)] = Rational(c);
                                       }
                                       return v;
                                     });
}

CycleClass schubert_class(const RingPtr& ring, int k, int n, const Partition& lambda) {
  const int size = std::accumulate(lambda.begin(), lambda.end(), 0);
  const bool fits = static_cast<int>(lambda.size()) <= k &&
                    std::all_of(lambda.begin(), lambda.end(), [&](int x) { return x <= n - k; });
  if (!fits) return size > ring->dim() ? CycleClass(ring, size, {}) : CycleClass::zero(ring, size);
  return CycleClass::named(ring, size, label(lambda));
}

CycleClass special_class(const RingPtr& ring, int k, int n, int p) {
  return p == 0 ? CycleClass::one(ring) : schubert_class(ring, k, n, Partition{p});
}

CycleClass column_class(const RingPtr& ring, int k, int n, int p) {
  return p == 0 ? CycleClass::one(ring) : schubert_class(ring, k, n, Partition(p, 1));
}

}  // namespace chpos::schubert
