#ifndef SKEWPBW_COEFFRING_HPP
#define SKEWPBW_COEFFRING_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/scalar.hpp"

namespace skewpbw {

/// The graded commutative coefficient ring R = K[t_1,...,t_m], with one
/// nonnegative weight per generator. All-zero weights give the trivial
/// grading (R = R_0); m = 0 gives R = K. Immutable; shared by value handles.
class PolyRing {
public:
  PolyRing(Field field, std::vector<std::string> gen_names, std::vector<unsigned> weights);

  static std::shared_ptr<const PolyRing> make(Field field, std::vector<std::string> gen_names,
                                              std::vector<unsigned> weights);
  /// R = K.
  static std::shared_ptr<const PolyRing> make_trivial(Field field);

  const Field& field() const { return field_; }
  std::size_t gen_count() const { return gen_names_.size(); }
  const std::string& gen_name(std::size_t k) const { return gen_names_[k]; }
  const std::vector<std::string>& gen_names() const { return gen_names_; }
  unsigned weight(std::size_t k) const { return weights_[k]; }
  const std::vector<unsigned>& weights() const { return weights_; }
  bool trivially_graded() const;
  /// R_0 = K, i.e. m = 0 or every weight >= 1.
  bool connected() const;
  std::optional<std::size_t> gen_index(const std::string& name) const;

  bool same_ring(const PolyRing& other) const;

private:
  Field field_;
  std::vector<std::string> gen_names_;
  std::vector<unsigned> weights_;
};

/// Sparse commutative monomial t^beta: sorted (generator index, exponent>0) pairs.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<unsigned, unsigned>> factors);

  static Monomial one() { return Monomial(); }
  static Monomial generator(unsigned k) { return Monomial({{k, 1}}); }

  bool is_one() const { return factors_.empty(); }
  unsigned exponent(unsigned k) const;
  const std::vector<std::pair<unsigned, unsigned>>& factors() const { return factors_; }

  Monomial times(const Monomial& other) const;
  unsigned long long total_degree() const;
  unsigned long long weighted_degree(std::span<const unsigned> weights) const;

  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  /// Graded lexicographic order (t_1 > t_2 > ...), used for canonical term order.
  static bool graded_lex_less(const Monomial& a, const Monomial& b);

private:
  std::vector<std::pair<unsigned, unsigned>> factors_;
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::graded_lex_less(a, b);
  }
};

/// Element of R in canonical sparse form: no zero coefficients are stored,
/// so equality is equality of the term maps.
class CoeffPoly {
public:
  explicit CoeffPoly(std::shared_ptr<const PolyRing> ring);

  static CoeffPoly zero(std::shared_ptr<const PolyRing> ring);
  static CoeffPoly one(std::shared_ptr<const PolyRing> ring);
  static CoeffPoly constant(std::shared_ptr<const PolyRing> ring, const Scalar& value);
  static CoeffPoly generator(std::shared_ptr<const PolyRing> ring, std::size_t k);
  static CoeffPoly term(std::shared_ptr<const PolyRing> ring, const Scalar& coeff, const Monomial& mono);

  const std::shared_ptr<const PolyRing>& ring() const { return ring_; }
  const std::map<Monomial, Scalar, MonomialLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The scalar value of a constant polynomial (zero included).
  Scalar constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  /// Max total degree of the stored monomials; -1 for the zero polynomial.
  long long total_degree() const;

  CoeffPoly add(const CoeffPoly& other) const;
  CoeffPoly sub(const CoeffPoly& other) const;
  CoeffPoly neg() const;
  CoeffPoly mul(const CoeffPoly& other) const;
  CoeffPoly scale(const Scalar& s) const;
  CoeffPoly pow(unsigned long long exponent) const;

  /// Common weighted degree if homogeneous, std::nullopt otherwise
  /// (NotHomogeneous is a value, not an error). ZeroInput on the zero polynomial.
  std::optional<unsigned long long> weight() const;
  /// Splits into homogeneous parts; the parts sum back to *this.
  std::map<unsigned long long, CoeffPoly> homogeneous_components() const;

  bool operator==(const CoeffPoly& other) const;
  bool operator!=(const CoeffPoly& other) const { return !(*this == other); }

  std::string to_string() const;

private:
  void add_term(const Monomial& mono, const Scalar& coeff);
  void check_same_ring(const CoeffPoly& other) const;

  std::shared_ptr<const PolyRing> ring_;
  std::map<Monomial, Scalar, MonomialLess> terms_;
};

inline CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) { return a.add(b); }
inline CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b) { return a.sub(b); }
inline CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) { return a.mul(b); }
inline CoeffPoly operator-(const CoeffPoly& a) { return a.neg(); }

/// Number of monomials t^beta with weighted degree d, counted exactly.
/// NotLocallyFinite unless every weight is >= 1 (m = 0 is allowed).
mpz_class hilbert_r(const PolyRing& ring, unsigned long long d);

/// Exact count of exponent vectors over the given weights with weighted degree d.
/// All weights must be >= 1.
mpz_class weighted_monomial_count(std::span<const unsigned> weights, unsigned long long d);

}  // namespace skewpbw

#endif
