#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the ring, Chern or slope code; results are compared against it.

#include "chpos/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using chpos::Integer;
using chpos::Rational;
using Partition = std::vector<int>;

/// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int int_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  long long_in(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return int_in(0, 1) == 1; }
  std::vector<int> ints(std::size_t count, int lo, int hi);
  std::vector<long> longs(std::size_t count, long lo, long hi);
  /// p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rational rational(long num_bound, long den_bound);
  /// Strictly positive p/q.
  Rational positive_rational(long num_bound, long den_bound);

 private:
  std::mt19937_64 rng_;
};

/// Schur polynomial of lambda in `vars` variables, by semistandard tableaux.
std::map<std::vector<int>, Integer> schur_polynomial(const Partition& lambda, int vars);

/// sigma_lambda * sigma_mu in H^*(G(k, n)) via Schur polynomials in k
/// variables, dropping shapes wider than n - k.
std::map<Partition, Integer> schubert_product(const Partition& lambda, const Partition& mu, int k, int n);

/// Number of standard Young tableaux of a rows x cols rectangle (hook length).
Integer rectangle_tableaux(int rows, int cols);

/// e_i(w) by subsets.
Integer elementary(const std::vector<int>& w, int i);
/// h_j(w) by multisets.
Integer complete_homogeneous(const std::vector<int>& w, int j);

/// sup of slopes of rank-k subsheaves of f^*E over covers of degree
/// 1..max_cover, restricted to split subsheaves embedded by a matching.
Rational mu_k_bruteforce(const std::vector<long>& degrees, int k, int max_cover);

/// Power sums p_1..p_K of the roots of 1 + e_1 t + ... (Newton identities).
std::vector<Rational> power_sums(const std::vector<Rational>& elementary, int K);

}  // namespace oracle
