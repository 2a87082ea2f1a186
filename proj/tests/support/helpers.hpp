#ifndef SKEWPBW_TEST_HELPERS_HPP
#define SKEWPBW_TEST_HELPERS_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewpbw/definition.hpp"
#include "skewpbw/nakayama.hpp"
#include "skewpbw/tower.hpp"

namespace skewpbw::testing {

using Rng = std::mt19937_64;

inline Scalar random_scalar(const Field& field, Rng& rng) {
  if (field.is_rationals()) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Scalar::of_rational(field, mpq_class(num(rng), den(rng)));
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, field.modulus() - 1);
  return Scalar::of_rational(field, mpq_class(static_cast<unsigned long>(pick(rng))));
}

inline Scalar random_nonzero_scalar(const Field& field, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(field, rng);
    if (!s.is_zero()) return s;
  }
}

inline CoeffPoly random_coeff_poly(const std::shared_ptr<const PolyRing>& ring, Rng& rng,
                                   unsigned max_terms, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  CoeffPoly f = CoeffPoly::zero(ring);
  const unsigned t = nterms(rng);
  for (unsigned k = 0; k < t; ++k) {
    std::vector<std::pair<unsigned, unsigned>> factors;
    unsigned budget = max_degree == 0 ? 0 : std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
    for (unsigned g = 0; g < ring->gen_count() && budget > 0; ++g) {
      const unsigned e = std::uniform_int_distribution<unsigned>(0, budget)(rng);
      if (e > 0) factors.push_back({g, e});
      budget -= e;
    }
    f = f.add(CoeffPoly::term(ring, random_scalar(ring->field(), rng), Monomial(factors)));
  }
  return f;
}

inline ExponentVec random_exponent(std::size_t n, Rng& rng, unsigned max_exp) {
  ExponentVec alpha(n, 0);
  std::uniform_int_distribution<unsigned> pick(0, max_exp);
  for (auto& a : alpha) a = pick(rng);
  return alpha;
}

/// Random element within the acceptance envelope: at most `max_terms` terms,
/// per-variable exponents <= max_exp, coefficient degrees <= max_coeff_deg.
inline PbwElement random_element(const AlgebraHandle& algebra, Rng& rng, unsigned max_terms = 4,
                                 unsigned max_exp = 3, unsigned max_coeff_deg = 2) {
  PbwElement f = PbwElement::zero(algebra);
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  const unsigned t = nterms(rng);
  for (unsigned k = 0; k < t; ++k) {
    CoeffPoly r = random_coeff_poly(algebra->ring(), rng, 2, max_coeff_deg);
    if (r.is_zero()) continue;
    f = f.add(PbwElement::monomial(algebra, r, random_exponent(algebra->var_count(), rng, max_exp)));
  }
  return f;
}

/// Nonzero homogeneous element of the given total degree (standard-graded rings).
inline PbwElement random_homogeneous_element(const AlgebraHandle& algebra, Rng& rng,
                                             unsigned degree, unsigned max_terms = 3) {
  const auto& ring = algebra->ring();
  PbwElement f = PbwElement::zero(algebra);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  const unsigned t = nterms(rng);
  for (unsigned k = 0; k < t; ++k) {
    // Split `degree` between the coefficient part and the variable part.
    const unsigned var_deg =
        ring->gen_count() == 0 ? degree : std::uniform_int_distribution<unsigned>(0, degree)(rng);
    const unsigned coeff_deg = degree - var_deg;
    ExponentVec alpha(algebra->var_count(), 0);
    for (unsigned d = 0; d < var_deg; ++d)
      alpha[std::uniform_int_distribution<std::size_t>(0, alpha.size() - 1)(rng)] += 1;
    std::vector<std::pair<unsigned, unsigned>> factors;
    {
      std::vector<unsigned> exps(ring->gen_count(), 0);
      for (unsigned d = 0; d < coeff_deg; ++d)
        exps[std::uniform_int_distribution<std::size_t>(0, exps.size() - 1)(rng)] += 1;
      for (unsigned g = 0; g < exps.size(); ++g)
        if (exps[g] > 0) factors.push_back({g, exps[g]});
    }
    const CoeffPoly r =
        CoeffPoly::term(ring, random_nonzero_scalar(ring->field(), rng), Monomial(factors));
    f = f.add(PbwElement::monomial(algebra, r, alpha));
  }
  if (f.is_zero())  // terms can cancel; retry
    return random_homogeneous_element(algebra, rng, degree, max_terms);
  return f;
}

// ---- fixture builders ----------------------------------------------------

/// q-matrix for quantum affine n-space: q_ii = 1, q_ij * q_ji = 1, all nonzero.
inline std::vector<std::vector<Scalar>> random_q_matrix(const Field& field, std::size_t n, Rng& rng) {
  std::vector<std::vector<Scalar>> q(n, std::vector<Scalar>(n, Scalar::one(field)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[i][j] = random_nonzero_scalar(field, rng);
      q[j][i] = q[i][j].inv();
    }
  }
  return q;
}

/// O_q(K^n) presented over R = K (m = 0): c_{i,j} = q_ij.
inline AlgebraHandle make_quantum_affine_over_k(const Field& field,
                                                const std::vector<std::vector<Scalar>>& q) {
  const std::size_t n = q.size();
  auto ring = PolyRing::make_trivial(field);
  std::vector<std::string> names;
  std::vector<RingEndo> sigmas;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i + 1));
    sigmas.push_back(RingEndo::identity(ring));
  }
  std::map<std::pair<unsigned, unsigned>, Scalar> c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      c.emplace(std::make_pair(static_cast<unsigned>(i), static_cast<unsigned>(j)), q[i][j]);
  return PbwAlgebra::create(ring, std::move(names), std::move(sigmas), std::move(c));
}

/// O_q(K^n) presented over R = K[x1]: variables x2..xn, sigma_xj(x1) = q_1j x1,
/// c between xi and xj equal to q_ij.
inline AlgebraHandle make_quantum_affine_over_kx1(const Field& field,
                                                  const std::vector<std::vector<Scalar>>& q) {
  const std::size_t n = q.size();
  auto ring = PolyRing::make(field, {"x1"}, {1u});
  std::vector<std::string> names;
  std::vector<RingEndo> sigmas;
  for (std::size_t j = 1; j < n; ++j) {
    names.push_back("x" + std::to_string(j + 1));
    sigmas.push_back(RingEndo(ring, {CoeffPoly::generator(ring, 0).scale(q[0][j])}));
  }
  std::map<std::pair<unsigned, unsigned>, Scalar> c;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      c.emplace(std::make_pair(static_cast<unsigned>(i - 1), static_cast<unsigned>(j - 1)), q[i][j]);
  return PbwAlgebra::create(ring, std::move(names), std::move(sigmas), std::move(c));
}

inline AlgebraHandle make_quantum_plane(const Field& field, const Scalar& q) {
  auto ring = PolyRing::make_trivial(field);
  std::map<std::pair<unsigned, unsigned>, Scalar> c;
  c.emplace(std::make_pair(0u, 1u), q);
  return PbwAlgebra::create(ring, {"x1", "x2"}, {RingEndo::identity(ring), RingEndo::identity(ring)},
                            std::move(c));
}

/// Shift algebra S_h over K[t]; weight 0 is the (graded) trivial grading,
/// weight 1 makes sigma non-graded.
inline AlgebraHandle make_shift_algebra(const Scalar& h, unsigned t_weight) {
  const Field field = h.field();
  auto ring = PolyRing::make(field, {"t"}, {t_weight});
  CoeffPoly image = CoeffPoly::generator(ring, 0).add(CoeffPoly::constant(ring, h.neg()));
  return PbwAlgebra::create(ring, {"xh"}, {RingEndo(ring, {image})}, {});
}

/// q-dilation algebra with n = m = 2 over K[t1,t2] (weights 1,1).
inline AlgebraHandle make_qdilation(const Field& field, const Scalar& q) {
  auto ring = PolyRing::make(field, {"t1", "t2"}, {1u, 1u});
  RingEndo s1(ring, {CoeffPoly::generator(ring, 0).scale(q), CoeffPoly::generator(ring, 1)});
  RingEndo s2(ring, {CoeffPoly::generator(ring, 0), CoeffPoly::generator(ring, 1).scale(q)});
  return PbwAlgebra::create(ring, {"H1", "H2"}, {s1, s2}, {});
}

/// Iterated skew polynomial fixture: diagonal sigmas diag(2,3) and diag(5,7),
/// commuting variables.
inline AlgebraHandle make_iterated_skew(const Field& field) {
  auto ring = PolyRing::make(field, {"t1", "t2"}, {1u, 1u});
  auto diag = [&](long a, long b) {
    return RingEndo(ring, {CoeffPoly::generator(ring, 0).scale(Scalar::of_int(field, a)),
                           CoeffPoly::generator(ring, 1).scale(Scalar::of_int(field, b))});
  };
  return PbwAlgebra::create(ring, {"x1", "x2"}, {diag(2, 3), diag(5, 7)}, {});
}

// ---- independent oracles ---------------------------------------------------

using Series = std::vector<mpz_class>;  // coefficients 0..D

inline Series series_one(std::size_t max_degree) {
  Series s(max_degree + 1, 0);
  s[0] = 1;
  return s;
}

inline Series series_mul(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Quotient of truncated series; den[0] must be a unit (+-1 here).
inline Series series_div(const Series& num, const Series& den) {
  Series q(num.size(), 0);
  for (std::size_t d = 0; d < num.size(); ++d) {
    mpz_class acc = num[d];
    for (std::size_t k = 1; k <= d; ++k) acc -= den[k] * q[d - k];
    q[d] = acc / den[0];
  }
  return q;
}

/// 1/(1 - t^w) truncated: 1 at every multiple of w.
inline Series series_geometric(unsigned w, std::size_t max_degree) {
  Series s(max_degree + 1, 0);
  for (std::size_t d = 0; d <= max_degree; d += w) s[d] = 1;
  return s;
}

/// (1 - t)^n truncated.
inline Series series_one_minus_t_pow(std::size_t n, std::size_t max_degree) {
  Series base(max_degree + 1, 0);
  base[0] = 1;
  if (max_degree >= 1) base[1] = -1;
  Series acc = series_one(max_degree);
  for (std::size_t k = 0; k < n; ++k) acc = series_mul(acc, base);
  return acc;
}

/// Hilbert series of R as a product of geometric series (independent of
/// the engine's enumeration route).
inline Series hilbert_series_oracle(const std::vector<unsigned>& weights, std::size_t max_degree) {
  Series acc = series_one(max_degree);
  for (unsigned w : weights) acc = series_mul(acc, series_geometric(w, max_degree));
  return acc;
}

/// Word-rewriting oracle for c_{alpha,beta}: write out the concatenated word
/// x^alpha x^beta and bubble-sort it, multiplying by the defining relation's
/// scalar at every swap of an out-of-order adjacent pair.
inline Scalar word_rewrite_commute_scalar(const PbwAlgebra& algebra, const ExponentVec& alpha,
                                          const ExponentVec& beta) {
  std::vector<std::size_t> word;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::uint32_t k = 0; k < alpha[i]; ++k) word.push_back(i);
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::uint32_t k = 0; k < beta[i]; ++k) word.push_back(i);
  Scalar acc = Scalar::one(algebra.field());
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        // x_j x_i -> c_{i,j} x_i x_j with i < j
        acc = acc.mul(algebra.commutation_scalar(word[k + 1], word[k]));
        std::swap(word[k], word[k + 1]);
        swapped = true;
      }
    }
  }
  return acc;
}

// ---- fixture files ---------------------------------------------------------

inline std::string fixture_path(const std::string& name) {
  return std::string(SKEWPBW_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in.good()) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline LoadedAlgebra load_fixture(const std::string& name) {
  return load_definition(read_fixture(name));
}

inline const std::vector<std::string>& bundled_fixture_names() {
  static const std::vector<std::string> names = {
      "quantum_affine_3.alg", "quantum_plane.alg",  "quantum_poly_3.alg",
      "sklyanin_particular.alg", "shift_algebra.alg", "qdilation_2_2.alg",
      "iterated_skew_2.alg"};
  return names;
}

}  // namespace skewpbw::testing

#endif
