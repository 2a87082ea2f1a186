#include <doctest.h>

#include "support/helpers.hpp"

using namespace skewpbw;
using skewpbw::testing::Rng;

namespace {

const Field QQ = Field::rationals();

std::shared_ptr<const PolyRing> ring1(unsigned w = 1) {
  return PolyRing::make(QQ, {"t"}, {w});
}

Scalar q(long num, long den = 1) { return Scalar::of_rational(QQ, mpq_class(num, den)); }

/// t -> t - h over K[t].
RingEndo shift_endo(const std::shared_ptr<const PolyRing>& r, long h) {
  return RingEndo(r, {CoeffPoly::generator(r, 0).add(
                         CoeffPoly::constant(r, Scalar::of_int(r->field(), -h)))});
}

RingEndo scale_endo(const std::shared_ptr<const PolyRing>& r, const Scalar& c) {
  return RingEndo(r, {CoeffPoly::generator(r, 0).scale(c)});
}

}  // namespace

TEST_SUITE("gradedmap") {

TEST_CASE("apply: shift, identity, q-scaling") {
  auto r = ring1(0);
  const CoeffPoly t = CoeffPoly::generator(r, 0);
  const RingEndo shift = shift_endo(r, 3);
  // (t - 3)^2 = t^2 - 6 t + 9
  CHECK(shift.apply(t * t) ==
        t * t - CoeffPoly::constant(r, q(6)) * t + CoeffPoly::constant(r, q(9)));
  CHECK(RingEndo::identity(r).apply(t * t + t) == t * t + t);
  const RingEndo dil = scale_endo(r, q(2));
  CHECK(dil.apply(t * t) == (t * t).scale(q(4)));  // q^2 t^2
}

TEST_CASE("compose: shift twice equals shift by 2h") {
  auto r = ring1(0);
  const RingEndo shift = shift_endo(r, 1);
  // oracle by hand: substituting t - h into t - h gives t - 2h
  CHECK(compose(shift, shift) == shift_endo(r, 2));
  CHECK(compose(shift, RingEndo::identity(r)) == shift);
  CHECK(compose(scale_endo(r, q(2)), scale_endo(r, q(3))) == scale_endo(r, q(6)));
}

TEST_CASE("invert: affine shifts and scalings") {
  auto r = ring1(0);
  CHECK(shift_endo(r, 1).inverse() == shift_endo(r, -1));
  CHECK(scale_endo(r, q(2)).inverse() == scale_endo(r, q(1, 2)));
  CHECK(RingEndo::identity(r).inverse() == RingEndo::identity(r));

  auto r2 = PolyRing::make(QQ, {"t1", "t2"}, {1, 1});
  const CoeffPoly s = CoeffPoly::generator(r2, 0) + CoeffPoly::generator(r2, 1);
  try {
    RingEndo(r2, {s, s}).inverse();
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_invertible);
  }
}

TEST_CASE("affine-linear restriction is enforced at construction") {
  auto r = ring1();
  const CoeffPoly t = CoeffPoly::generator(r, 0);
  try {
    RingEndo bad(r, {t * t});
    FAIL("expected NotAffineLinear");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_affine_linear);
  }
}

TEST_CASE("linear_part_matrix on weight-1 generators") {
  auto r2 = PolyRing::make(QQ, {"t1", "t2"}, {1, 1});
  const RingEndo swap_scale(
      r2, {CoeffPoly::generator(r2, 1).scale(q(2)), CoeffPoly::generator(r2, 0).scale(q(3))});
  const ScalarMatrix m = swap_scale.linear_part_matrix();
  REQUIRE(m.rows() == 2);
  CHECK(m.at(0, 0) == q(0));
  CHECK(m.at(0, 1) == q(2));
  CHECK(m.at(1, 0) == q(3));
  CHECK(m.at(1, 1) == q(0));
  CHECK(m.determinant() == q(-6));

  const ScalarMatrix id = RingEndo::identity(r2).linear_part_matrix();
  CHECK(id.at(0, 0) == q(1));
  CHECK(id.at(0, 1) == q(0));
  CHECK(id.determinant() == q(1));

  // trivially graded ring: empty weight-1 span, 0x0 matrix, det = 1
  auto r0 = ring1(0);
  const ScalarMatrix empty = shift_endo(r0, 5).linear_part_matrix();
  CHECK(empty.rows() == 0);
  CHECK(empty.determinant() == q(1));

  // weight-1 generator shifted by a constant leaves the weight-1 span
  try {
    shift_endo(ring1(1), 1).linear_part_matrix();
    FAIL("expected NotGradedRestrictable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_graded_restrictable);
  }

  // weight-1 generator mapped onto a weight-2 generator
  auto rmix = PolyRing::make(QQ, {"a", "b"}, {1, 2});
  try {
    RingEndo(rmix, {CoeffPoly::generator(rmix, 1), CoeffPoly::generator(rmix, 1)})
        .linear_part_matrix();
    FAIL("expected NotGradedRestrictable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_graded_restrictable);
  }
}

TEST_CASE("determinant agrees with the closed 2x2 and 3x3 formulas") {
  Rng rng(4242);
  for (const Field& field : {Field::rationals(), Field::prime(101)}) {
    for (int iter = 0; iter < 200; ++iter) {
      ScalarMatrix m2(2, 2, Scalar::zero(field));
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m2.at(i, j) = testing::random_scalar(field, rng);
      const Scalar expect2 =
          m2.at(0, 0).mul(m2.at(1, 1)).sub(m2.at(0, 1).mul(m2.at(1, 0)));
      CHECK(m2.determinant() == expect2);

      ScalarMatrix m3(3, 3, Scalar::zero(field));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m3.at(i, j) = testing::random_scalar(field, rng);
      const Scalar expect3 = m3.at(0, 0).mul(m3.at(1, 1).mul(m3.at(2, 2)).sub(m3.at(1, 2).mul(m3.at(2, 1))))
                                 .sub(m3.at(0, 1).mul(m3.at(1, 0).mul(m3.at(2, 2)).sub(m3.at(1, 2).mul(m3.at(2, 0)))))
                                 .add(m3.at(0, 2).mul(m3.at(1, 0).mul(m3.at(2, 1)).sub(m3.at(1, 1).mul(m3.at(2, 0)))));
      CHECK(m3.determinant() == expect3);
    }
  }
}

TEST_CASE("apply is a ring homomorphism; compose and invert behave") {
  Rng rng(555);
  for (const Field& field : {Field::rationals(), Field::prime(101)}) {
    auto r = PolyRing::make(field, {"t1", "t2"}, {1, 1});
    auto random_linear_endo = [&]() {
      for (;;) {
        std::vector<CoeffPoly> images;
        for (std::size_t k = 0; k < 2; ++k) {
          CoeffPoly img = CoeffPoly::generator(r, 0).scale(testing::random_scalar(field, rng));
          img = img.add(CoeffPoly::generator(r, 1).scale(testing::random_scalar(field, rng)));
          images.push_back(img);
        }
        RingEndo e(r, std::move(images));
        if (e.is_injective()) return e;
      }
    };
    for (int iter = 0; iter < 100; ++iter) {
      const RingEndo e = random_linear_endo();
      const RingEndo e2 = random_linear_endo();
      const RingEndo e3 = random_linear_endo();
      const CoeffPoly f = testing::random_coeff_poly(r, rng, 3, 2);
      const CoeffPoly g = testing::random_coeff_poly(r, rng, 3, 2);
      CHECK(e.apply(f * g) == e.apply(f) * e.apply(g));
      CHECK(e.apply(f + g) == e.apply(f) + e.apply(g));
      CHECK(compose(compose(e, e2), e3) == compose(e, compose(e2, e3)));
      CHECK(compose(e, e.inverse()) == RingEndo::identity(r));
      CHECK(compose(e.inverse(), e) == RingEndo::identity(r));
      CHECK(compose(e, e2).apply(f) == e.apply(e2.apply(f)));

      // graded endos preserve the weight of homogeneous inputs
      if (!f.is_zero() && e.is_graded()) {
        const auto w = f.weight();
        if (w && !e.apply(f).is_zero()) CHECK(e.apply(f).weight() == *w);
      }
    }
  }
}

TEST_CASE("gradedness depends on the weighting") {
  // t -> t - h is graded for weight 0 but not for weight 1
  CHECK(shift_endo(ring1(0), 1).is_graded());
  CHECK_FALSE(shift_endo(ring1(1), 1).is_graded());
  // mixed weights: a weight-1 generator may not map to a weight-2 one
  auto rmix = PolyRing::make(QQ, {"a", "b"}, {1, 2});
  CHECK_FALSE(
      RingEndo(rmix, {CoeffPoly::generator(rmix, 1), CoeffPoly::generator(rmix, 1)}).is_graded());
  CHECK(RingEndo::identity(rmix).is_graded());
}

}  // TEST_SUITE
