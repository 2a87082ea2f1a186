#include "skewpbw/gradedmap.hpp"

#include <sstream>

namespace skewpbw {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, const Scalar& fill)
    : field_(fill.field()), rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

Scalar ScalarMatrix::determinant() const {
  if (rows_ != cols_) throw std::logic_error("determinant of non-square matrix");
  const Field& field = field_;
  if (rows_ == 0) return Scalar::one(field);

  // Bareiss fraction-free elimination; every division is exact.
  ScalarMatrix m = *this;
  Scalar prev_pivot = Scalar::one(field);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < rows_; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < rows_ && m.at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == rows_) return Scalar::zero(field);
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < rows_; ++i) {
      for (std::size_t j = k + 1; j < cols_; ++j) {
        Scalar num = m.at(i, j).mul(m.at(k, k)).sub(m.at(i, k).mul(m.at(k, j)));
        m.at(i, j) = num.div(prev_pivot);
      }
      m.at(i, k) = Scalar::zero(field);
    }
    prev_pivot = m.at(k, k);
  }
  Scalar det = m.at(rows_ - 1, rows_ - 1);
  return negate ? det.neg() : det;
}

bool ScalarMatrix::operator==(const ScalarMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RingEndo::RingEndo(std::shared_ptr<const PolyRing> ring, std::vector<CoeffPoly> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_->gen_count())
    throw std::logic_error("one image per ring generator required");
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (!images_[k].ring()->same_ring(*ring_)) fail(Errc::ring_mismatch, "image in a different ring");
    if (images_[k].total_degree() > 1)
      fail(Errc::not_affine_linear,
           "image of " + ring_->gen_name(k) + " has degree > 1: " + images_[k].to_string());
  }
}

RingEndo RingEndo::identity(std::shared_ptr<const PolyRing> ring) {
  std::vector<CoeffPoly> images;
  images.reserve(ring->gen_count());
  for (std::size_t k = 0; k < ring->gen_count(); ++k) images.push_back(CoeffPoly::generator(ring, k));
  return RingEndo(std::move(ring), std::move(images));
}

CoeffPoly RingEndo::apply(const CoeffPoly& f) const {
  if (!f.ring()->same_ring(*ring_)) fail(Errc::ring_mismatch, "apply across different rings");
  CoeffPoly result = CoeffPoly::zero(ring_);
  for (const auto& [mono, coeff] : f.terms()) {
    CoeffPoly prod = CoeffPoly::constant(ring_, coeff);
    for (const auto& [idx, e] : mono.factors()) prod = prod.mul(images_[idx].pow(e));
    result = result.add(prod);
  }
  return result;
}

RingEndo RingEndo::compose_after(const RingEndo& inner) const {
  if (!ring_->same_ring(*inner.ring_)) fail(Errc::ring_mismatch, "compose across different rings");
  std::vector<CoeffPoly> images;
  images.reserve(ring_->gen_count());
  for (std::size_t k = 0; k < ring_->gen_count(); ++k) images.push_back(apply(inner.images_[k]));
  return RingEndo(ring_, std::move(images));
}

RingEndo RingEndo::power(unsigned long long exponent) const {
  RingEndo acc = identity(ring_);
  RingEndo base = *this;
  while (exponent != 0) {
    if (exponent & 1) acc = acc.compose_after(base);
    exponent >>= 1;
    if (exponent != 0) base = base.compose_after(base);
  }
  return acc;
}

ScalarMatrix RingEndo::full_linear_part() const {
  const std::size_t m = ring_->gen_count();
  ScalarMatrix lin(m, m, Scalar::zero(ring_->field()));
  for (std::size_t k = 0; k < m; ++k) {
    for (const auto& [mono, coeff] : images_[k].terms()) {
      if (mono.is_one()) continue;
      lin.at(k, mono.factors().front().first) = coeff;
    }
  }
  return lin;
}

std::vector<Scalar> RingEndo::constant_part() const {
  std::vector<Scalar> consts(ring_->gen_count(), Scalar::zero(ring_->field()));
  for (std::size_t k = 0; k < images_.size(); ++k) {
    for (const auto& [mono, coeff] : images_[k].terms())
      if (mono.is_one()) consts[k] = coeff;
  }
  return consts;
}

RingEndo RingEndo::inverse() const {
  const std::size_t m = ring_->gen_count();
  const Field field = ring_->field();
  // Gauss-Jordan on [L | I] over the exact field.
  ScalarMatrix lin = full_linear_part();
  ScalarMatrix inv(m, m, Scalar::zero(field));
  for (std::size_t i = 0; i < m; ++i) inv.at(i, i) = Scalar::one(field);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && lin.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m) fail(Errc::not_invertible, "singular linear part");
    if (pivot != col) {
      for (std::size_t j = 0; j < m; ++j) {
        std::swap(lin.at(pivot, j), lin.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Scalar scale = lin.at(col, col).inv();
    for (std::size_t j = 0; j < m; ++j) {
      lin.at(col, j) = lin.at(col, j).mul(scale);
      inv.at(col, j) = inv.at(col, j).mul(scale);
    }
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || lin.at(row, col).is_zero()) continue;
      const Scalar factor = lin.at(row, col);
      for (std::size_t j = 0; j < m; ++j) {
        lin.at(row, j) = lin.at(row, j).sub(factor.mul(lin.at(col, j)));
        inv.at(row, j) = inv.at(row, j).sub(factor.mul(inv.at(col, j)));
      }
    }
  }
  // Images of the inverse: t_k -> sum_l inv[k][l] * (t_l - c_l).
  const std::vector<Scalar> consts = constant_part();
  std::vector<CoeffPoly> images;
  images.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    CoeffPoly img = CoeffPoly::zero(ring_);
    Scalar shift = Scalar::zero(field);
    for (std::size_t l = 0; l < m; ++l) {
      if (inv.at(k, l).is_zero()) continue;
      img = img.add(CoeffPoly::generator(ring_, l).scale(inv.at(k, l)));
      shift = shift.add(inv.at(k, l).mul(consts[l]));
    }
    img = img.add(CoeffPoly::constant(ring_, shift.neg()));
    images.push_back(img);
  }
  return RingEndo(ring_, std::move(images));
}

bool RingEndo::is_graded() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k].is_zero()) continue;  // zero lies in every graded piece
    const auto w = images_[k].weight();
    if (!w || *w != ring_->weight(k)) return false;
  }
  return true;
}

bool RingEndo::is_injective() const { return !full_linear_part().determinant().is_zero(); }

bool RingEndo::is_identity() const { return *this == identity(ring_); }

bool RingEndo::commutes_with(const RingEndo& other) const {
  return compose_after(other) == other.compose_after(*this);
}

ScalarMatrix RingEndo::linear_part_matrix() const {
  std::vector<std::size_t> weight_one;
  std::vector<bool> in_span(ring_->gen_count(), false);
  for (std::size_t k = 0; k < ring_->gen_count(); ++k) {
    if (ring_->weight(k) == 1) {
      in_span[k] = true;
      weight_one.push_back(k);
    }
  }
  ScalarMatrix m(weight_one.size(), weight_one.size(), Scalar::zero(ring_->field()));
  for (std::size_t a = 0; a < weight_one.size(); ++a) {
    for (const auto& [mono, coeff] : images_[weight_one[a]].terms()) {
      if (mono.is_one() || !in_span[mono.factors().front().first]) {
        fail(Errc::not_graded_restrictable,
             "image of weight-1 generator " + ring_->gen_name(weight_one[a]) +
                 " leaves the weight-1 span: " + images_[weight_one[a]].to_string());
      }
      const unsigned target = mono.factors().front().first;
      for (std::size_t b = 0; b < weight_one.size(); ++b) {
        if (weight_one[b] == target) m.at(a, b) = coeff;
      }
    }
  }
  return m;
}

bool RingEndo::operator==(const RingEndo& other) const {
  return ring_->same_ring(*other.ring_) && images_ == other.images_;
}

std::string RingEndo::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k > 0) os << ", ";
    os << ring_->gen_name(k) << " -> " << images_[k].to_string();
  }
  return os.str();
}

}  // namespace skewpbw
