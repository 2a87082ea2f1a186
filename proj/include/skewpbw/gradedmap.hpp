#ifndef SKEWPBW_GRADEDMAP_HPP
#define SKEWPBW_GRADEDMAP_HPP

#include <memory>
#include <string>
#include <vector>

#include "skewpbw/coeffring.hpp"

namespace skewpbw {

/// Dense matrix of field scalars with an exact determinant.
class ScalarMatrix {
public:
  /// The fill scalar also fixes the matrix's field (even for 0x0 matrices).
  ScalarMatrix(std::size_t rows, std::size_t cols, const Scalar& fill);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  /// Determinant by fraction-free (Bareiss) elimination; the 0x0 matrix has
  /// determinant 1. Square matrices only.
  Scalar determinant() const;

  bool operator==(const ScalarMatrix& other) const;

private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Ring endomorphism of R given by affine-linear generator images
/// (total degree <= 1). This covers every sigma in scope: q-scalings,
/// shifts t -> t - h, and linear mixes of equal-weight generators.
/// Gradedness is a queried property, not a construction requirement,
/// so validators can report on non-graded maps.
class RingEndo {
public:
  RingEndo(std::shared_ptr<const PolyRing> ring, std::vector<CoeffPoly> images);

  static RingEndo identity(std::shared_ptr<const PolyRing> ring);

  const std::shared_ptr<const PolyRing>& ring() const { return ring_; }
  const CoeffPoly& image(std::size_t k) const { return images_[k]; }
  const std::vector<CoeffPoly>& images() const { return images_; }

  /// Substitutes the generator images into f (exact ring homomorphism).
  CoeffPoly apply(const CoeffPoly& f) const;

  /// Functional composition: apply(compose(inner), f) == apply(this, apply(inner, f))
  /// would be backwards — compose(e1, e2) below is e1 after e2.
  RingEndo compose_after(const RingEndo& inner) const;
  /// this iterated `exponent` times (binary exponentiation).
  RingEndo power(unsigned long long exponent) const;
  /// Two-sided inverse of the affine map; NotInvertible if the linear part is singular.
  RingEndo inverse() const;

  /// Every nonzero generator image is homogeneous of that generator's weight.
  bool is_graded() const;
  /// For affine-linear maps injectivity coincides with bijectivity:
  /// the full linear part must be nonsingular.
  bool is_injective() const;
  bool is_identity() const;
  bool commutes_with(const RingEndo& other) const;

  /// Matrix of the map on the span of the weight-1 generators (rows = images,
  /// entry (a,b) = coefficient of the b-th weight-1 generator in the image of
  /// the a-th). NotGradedRestrictable if some weight-1 generator maps outside
  /// that span. Trivially graded rings give the 0x0 matrix.
  ScalarMatrix linear_part_matrix() const;

  /// Full m x m linear part over all generators plus the constant column.
  ScalarMatrix full_linear_part() const;
  std::vector<Scalar> constant_part() const;

  bool operator==(const RingEndo& other) const;
  bool operator!=(const RingEndo& other) const { return !(*this == other); }

  /// One "gen -> image" fragment per generator, comma-separated.
  std::string to_string() const;

private:
  std::shared_ptr<const PolyRing> ring_;
  std::vector<CoeffPoly> images_;
};

inline RingEndo compose(const RingEndo& e1, const RingEndo& e2) { return e1.compose_after(e2); }

}  // namespace skewpbw

#endif
