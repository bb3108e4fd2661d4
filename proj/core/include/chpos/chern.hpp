#pragma once

#include "chpos/spaces.hpp"

#include <vector>

namespace chpos {

/// Truncated Chern character: rank plus ch_1..ch_K.
class ChernCharacter {
 public:
  ChernCharacter(RingPtr ring, Rational rank, std::vector<CycleClass> graded);

  static ChernCharacter trivial(RingPtr ring, Rational rank, int truncation);

  const RingPtr& ring() const { return ring_; }
  const Rational& rank() const { return rank_; }
  int truncation() const { return static_cast<int>(graded_.size()); }
  /// ch_k for 1 <= k <= truncation.
  const CycleClass& ch(int k) const;

 private:
  RingPtr ring_;
  Rational rank_;
  std::vector<CycleClass> graded_;
};

/// Total Chern class c_1..c_K.
class ChernClasses {
 public:
  ChernClasses(RingPtr ring, std::vector<CycleClass> classes);

  const RingPtr& ring() const { return ring_; }
  int truncation() const { return static_cast<int>(classes_.size()); }
  const CycleClass& c(int k) const;
  const CycleClass& c1() const { return c(1); }
  const CycleClass& c2() const { return c(2); }

 private:
  RingPtr ring_;
  std::vector<CycleClass> classes_;
};

ChernCharacter ch_tangent(const SpaceModel& space);

/// ch(O(w_1 h) + ... + O(w_r h)) through the model's truncation.
ChernCharacter ch_split(const SpaceModel& space, const std::vector<int>& twists);

/// e^D - 1 plus rank one, through degree `truncation`.
ChernCharacter ch_line(const CycleClass& divisor, int truncation);

/// Newton inversion.
ChernClasses chern_from_ch(const ChernCharacter& c);
ChernCharacter ch_from_chern(const ChernClasses& c, Rational rank);

/// ch_2(T_X) + (c_1^2 - 4 c_2)(E) / 2, a class on X.
CycleClass ch2_pbundle_rank2(const CycleClass& base_ch2, const ChernClasses& e);

/// Degree-two truncation of ch(a) * ch(b).
ChernCharacter ch_tensor_deg2(const ChernCharacter& a, const ChernCharacter& b);
/// ch(a) * ch(b) through the common truncation.
ChernCharacter ch_tensor(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter ch_dual(const ChernCharacter& a);
ChernCharacter ch_sum(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter ch_difference(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter pullback(const ChernCharacter& a, const RingMap& map);

}  // namespace chpos
