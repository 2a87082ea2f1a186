#ifndef SKEWPBW_TOWER_HPP
#define SKEWPBW_TOWER_HPP

#include "skewpbw/pbw.hpp"

namespace skewpbw {

/// Stage j of the iterated Ore extension R[z_1;theta_1]...[z_n;theta_n]:
/// theta_j acts on R by sigma_j and on each earlier variable by
/// theta_j(z_i) = c_{i,j} z_i (the stored upper-triangular scalars, no inverses).
struct OreStage {
  RingEndo r_action;
  std::vector<Scalar> lower_scalars;  // lower_scalars[i] = c_{i,j} for i < j
};

/// Ore-extension presentation of a graded quasi-commutative extension.
/// Elements are shared with the pbw module (the isomorphism is the identity
/// on standard monomials), so products can be compared by plain equality.
class OreTower {
public:
  static OreTower build(AlgebraHandle algebra);

  const AlgebraHandle& algebra() const { return algebra_; }
  std::size_t stage_count() const { return stages_.size(); }
  const OreStage& stage(std::size_t j) const { return stages_[j]; }

  /// Product computed stage by stage: the top variable's powers move left
  /// through everything of lower stage via theta. Independent of
  /// PbwElement::multiply's closed-form commutation scalar.
  PbwElement multiply(const PbwElement& f, const PbwElement& g) const;

  /// theta_j applied to an element supported on stages < j.
  PbwElement theta_apply(std::size_t j, const PbwElement& f) const;

  std::string to_string() const;

private:
  explicit OreTower(AlgebraHandle algebra) : algebra_(std::move(algebra)) {}

  PbwElement multiply_level(std::size_t level, const PbwElement& f, const PbwElement& g) const;
  PbwElement theta_power_apply(std::size_t j, unsigned long long e, const PbwElement& f) const;

  AlgebraHandle algebra_;
  std::vector<OreStage> stages_;
};

}  // namespace skewpbw

#endif
