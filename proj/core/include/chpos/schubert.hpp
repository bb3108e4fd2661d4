#pragma once

#include "chpos/ring.hpp"

#include <vector>

namespace chpos::schubert {

/// Weakly decreasing positive parts; the empty partition is the unit class.
using Partition = std::vector<int>;

/// Partitions of `size` inside a rows x cols box, lexicographically descending.
std::vector<Partition> partitions_in_box(int size, int rows, int cols);

/// "s2", "s11", "s21"; "s[10,2]" once a part reaches two digits.
std::string label(const Partition& p);

/// Complement of p in the rows x cols box (the Poincare dual class).
Partition complement(const Partition& p, int rows, int cols);

/// Pieri: sigma_p * sigma_lambda as the list of partitions nu in the box with
/// nu / lambda a horizontal strip of size p (multiplicity one each).
std::vector<Partition> pieri(const Partition& lambda, int p, int rows, int cols);

/// Full Schubert ring of G(k, n): basis in codim c is the partitions of c in a
/// k x (n - k) box, products by Giambelli expansion plus Pieri, degree of the
/// point class 1.
RingPtr grassmannian_ring(int k, int n);

/// sigma_p in the ring (zero when p does not fit).
CycleClass special_class(const RingPtr& ring, int k, int n, int p);
/// sigma_{1^p} in the ring (zero when p does not fit).
CycleClass column_class(const RingPtr& ring, int k, int n, int p);
/// sigma_lambda; zero when lambda does not fit the box.
CycleClass schubert_class(const RingPtr& ring, int k, int n, const Partition& lambda);

}  // namespace chpos::schubert
