#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <bit>
#include <numeric>
#include <optional>

namespace oracle {

std::vector<int> Gen::ints(std::size_t count, int lo, int hi) {
  std::vector<int> out(count);
  for (auto& x : out) x = int_in(lo, hi);
  return out;
}

std::vector<long> Gen::longs(std::size_t count, long lo, long hi) {
  std::vector<long> out(count);
  for (auto& x : out) x = long_in(lo, hi);
  return out;
}

Rational Gen::rational(long num_bound, long den_bound) {
  return Rational(long_in(-num_bound, num_bound), long_in(1, den_bound));
}

Rational Gen::positive_rational(long num_bound, long den_bound) {
  return Rational(long_in(1, num_bound), long_in(1, den_bound));
}

std::map<std::vector<int>, Integer> schur_polynomial(const Partition& lambda, int vars) {
  std::map<std::vector<int>, Integer> poly;
  if (static_cast<int>(lambda.size()) > vars) return poly;
  // Fill cells row by row; entries weakly increase along rows and strictly
  // down columns.
  std::vector<std::vector<int>> tab(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) tab[r].assign(lambda[r], 0);
  std::vector<int> weight(vars, 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
    if (r == lambda.size()) {
      poly[weight] += 1;
      return;
    }
    if (c == lambda[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v <= vars; ++v) {
      tab[r][c] = v;
      ++weight[v - 1];
      fill(r, c + 1);
      --weight[v - 1];
    }
  };
  fill(0, 0);
  return poly;
}

std::map<Partition, Integer> schubert_product(const Partition& lambda, const Partition& mu, int k, int n) {
  const auto a = schur_polynomial(lambda, k);
  const auto b = schur_polynomial(mu, k);
  std::map<std::vector<int>, Integer> prod;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(k);
      for (int i = 0; i < k; ++i) e[i] = ea[i] + eb[i];
      prod[e] += ca * cb;
    }
  }
  // Peel off the lex-largest monomial; in a symmetric polynomial it is x^nu
  // for a partition nu, the leading term of s_nu.
  std::map<Partition, Integer> out;
  while (true) {
    auto it = std::find_if(prod.rbegin(), prod.rend(), [](const auto& kv) { return kv.second != 0; });
    if (it == prod.rend()) break;
    const std::vector<int> top = it->first;
    const Integer coeff = it->second;
    Partition nu;
    for (int x : top)
      if (x > 0) nu.push_back(x);
    for (const auto& [e, c] : schur_polynomial(nu, k)) prod[e] -= coeff * c;
    if (nu.empty() || nu.front() <= n - k) out[nu] += coeff;
  }
  return out;
}

Integer rectangle_tableaux(int rows, int cols) {
  Integer num = 1;
  for (int i = 2; i <= rows * cols; ++i) num *= i;
  Integer hooks = 1;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) hooks *= (rows - r - 1) + (cols - c - 1) + 1;
  return num / hooks;
}

Integer elementary(const std::vector<int>& w, int i) {
  const std::size_t r = w.size();
  Integer total = 0;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    if (std::popcount(mask) != i) continue;
    Integer term = 1;
    for (std::size_t j = 0; j < r; ++j)
      if (mask & (1u << j)) term *= w[j];
    total += term;
  }
  return total;
}

Integer complete_homogeneous(const std::vector<int>& w, int j) {
  Integer total = 0;
  std::function<void(std::size_t, int, Integer)> go = [&](std::size_t start, int left, Integer acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    for (std::size_t i = start; i < w.size(); ++i) go(i, left - 1, acc * w[i]);
  };
  go(0, j, 1);
  return total;
}

namespace {

// Is there an injective assignment of the chosen line degrees to summands of
// at least that degree?
bool has_matching(const std::vector<long>& lines, const std::vector<long>& targets) {
  std::vector<std::size_t> perm(targets.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t j = 0; j < lines.size() && ok; ++j) ok = lines[j] <= targets[perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

Rational mu_k_bruteforce(const std::vector<long>& degrees, int k, int max_cover) {
  std::optional<Rational> best;
  for (int m = 1; m <= max_cover; ++m) {
    std::vector<long> pulled;
    for (long d : degrees) pulled.push_back(d * m);
    const long lo = *std::min_element(pulled.begin(), pulled.end()) - 1;
    const long hi = *std::max_element(pulled.begin(), pulled.end());
    // Nondecreasing line-degree tuples in [lo, hi]^k.
    std::vector<long> lines(k, lo);
    while (true) {
      if (has_matching(lines, pulled)) {
        const long sum = std::accumulate(lines.begin(), lines.end(), 0L);
        const Rational slope(sum, static_cast<long>(m) * k);
        if (!best || slope > *best) best = slope;
      }
      int pos = k - 1;
      while (pos >= 0 && lines[pos] == hi) --pos;
      if (pos < 0) break;
      ++lines[pos];
      for (int j = pos + 1; j < k; ++j) lines[j] = lines[pos];
    }
  }
  return *best;
}

std::vector<Rational> power_sums(const std::vector<Rational>& e, int K) {
  auto el = [&](int i) -> Rational { return i <= static_cast<int>(e.size()) ? e[i - 1] : Rational(0); };
  std::vector<Rational> p(K + 1);
  for (int k = 1; k <= K; ++k) {
    Rational s = 0;
    for (int i = 1; i < k; ++i) s += ((i % 2) ? 1 : -1) * el(i) * p[k - i];
    s += ((k % 2) ? 1 : -1) * Rational(k) * el(k);
    p[k] = s;
  }
  p.erase(p.begin());
  return p;
}

}  // namespace oracle
