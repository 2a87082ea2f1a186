#ifndef SKEWPBW_PBW_HPP
#define SKEWPBW_PBW_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/gradedmap.hpp"

namespace skewpbw {

/// Dense exponent vector alpha in N^n for the standard monomial
/// x_1^{a_1} ... x_n^{a_n}; every adjoined variable has weight 1.
using ExponentVec = std::vector<std::uint32_t>;

unsigned long long exp_total_degree(const ExponentVec& alpha);
ExponentVec exp_add(const ExponentVec& alpha, const ExponentVec& beta);
/// Graded lexicographic order with x_1 > x_2 > ... .
bool exp_graded_lex_less(const ExponentVec& a, const ExponentVec& b);

struct ExponentLess {
  bool operator()(const ExponentVec& a, const ExponentVec& b) const {
    return exp_graded_lex_less(a, b);
  }
};

enum class ValidationState { unvalidated, quasi_commutative, graded_quasi_commutative };

const char* validation_state_name(ValidationState s);

/// Per-axiom findings of PbwAlgebra::validate. Failures are entries here,
/// never thrown errors.
struct ValidationReport {
  ValidationState state = ValidationState::unvalidated;
  std::vector<bool> sigma_injective;  // == bijective for affine-linear maps
  std::vector<bool> sigma_graded;
  bool sigmas_commute = false;
  bool c_nonzero = false;
  std::vector<std::string> failures;

  bool ok() const { return state != ValidationState::unvalidated; }
  std::string to_string() const;
};

class PbwElement;

/// The extension A = sigma(R)<x_1,...,x_n>: coefficient ring, one sigma per
/// adjoined variable, and the upper-triangular commutation scalars c_{i,j}
/// (x_j x_i = c_{i,j} x_i x_j for i < j). c_{i,i} = 1 is implicit and
/// c_{j,i} = c_{i,j}^{-1} is derived, never stored. Immutable once validated.
class PbwAlgebra : public std::enable_shared_from_this<PbwAlgebra> {
public:
  static constexpr std::size_t max_variables = 64;

  PbwAlgebra(std::shared_ptr<const PolyRing> ring, std::vector<std::string> var_names,
             std::vector<RingEndo> sigmas,
             std::map<std::pair<unsigned, unsigned>, Scalar> c_upper);

  /// Constructs and (by default) validates, so the handle can be shared as const.
  static std::shared_ptr<const PbwAlgebra> create(
      std::shared_ptr<const PolyRing> ring, std::vector<std::string> var_names,
      std::vector<RingEndo> sigmas, std::map<std::pair<unsigned, unsigned>, Scalar> c_upper,
      bool run_validation = true);

  /// Checks the quasi-commutative axioms (sigmas bijective and pairwise
  /// commuting, c entries nonzero) and gradedness of each sigma; records the
  /// strongest state satisfied. Idempotent.
  const ValidationReport& validate();

  const std::shared_ptr<const PolyRing>& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  std::size_t var_count() const { return sigmas_.size(); }
  const std::string& var_name(std::size_t i) const { return var_names_[i]; }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const RingEndo& sigma(std::size_t i) const { return sigmas_[i]; }
  ValidationState state() const { return report_.state; }
  const ValidationReport& report() const { return report_; }
  std::optional<std::size_t> var_index(const std::string& name) const;

  /// c_{i,j} for any ordered pair of variable indices (0-based):
  /// stored value for i < j, 1 for i == j, the inverse for i > j.
  Scalar commutation_scalar(std::size_t i, std::size_t j) const;

  /// c_{alpha,beta} with x^alpha x^beta = c_{alpha,beta} x^{alpha+beta}:
  /// the product over i < j of c_{i,j}^{alpha_j * beta_i}.
  Scalar monomial_commute_scalar(const ExponentVec& alpha, const ExponentVec& beta) const;

  /// sigma^alpha = sigma_1^{a_1} o ... o sigma_n^{a_n} (order immaterial:
  /// validation guarantees the sigmas commute).
  RingEndo sigma_power(const ExponentVec& alpha) const;

  /// dim_K A_d via dim A_d = sum_k dim R_k * #{|alpha| = d-k}, exact.
  mpz_class hilbert(unsigned long long d) const;

  bool same_structure(const PbwAlgebra& other) const;

  void require_validated() const;
  void require_graded() const;
  void check_var_count(std::size_t n) const;

private:
  std::size_t upper_index(std::size_t i, std::size_t j) const;

  std::shared_ptr<const PolyRing> ring_;
  std::vector<std::string> var_names_;
  std::vector<RingEndo> sigmas_;
  std::vector<Scalar> c_upper_;  // packed (i,j), i < j
  ValidationReport report_;
  bool validated_once_ = false;
};

using AlgebraHandle = std::shared_ptr<const PbwAlgebra>;

/// Element of A in PBW normal form: exponent vector -> nonzero left
/// coefficient in R. Unique representation; immutable value semantics.
class PbwElement {
public:
  explicit PbwElement(AlgebraHandle algebra);

  static PbwElement zero(AlgebraHandle algebra);
  static PbwElement one(AlgebraHandle algebra);
  static PbwElement variable(AlgebraHandle algebra, std::size_t i);
  static PbwElement embed(AlgebraHandle algebra, const CoeffPoly& r);
  static PbwElement embed_scalar(AlgebraHandle algebra, const Scalar& s);
  static PbwElement monomial(AlgebraHandle algebra, const CoeffPoly& r, const ExponentVec& alpha);

  const AlgebraHandle& algebra() const { return algebra_; }
  const std::map<ExponentVec, CoeffPoly, ExponentLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  PbwElement add(const PbwElement& other) const;
  PbwElement sub(const PbwElement& other) const;
  PbwElement neg() const;
  /// r * f with r in the coefficient ring (left module action).
  PbwElement left_scale(const CoeffPoly& r) const;
  PbwElement scale(const Scalar& s) const;

  /// PBW normal-form product: (r x^alpha)(s x^beta) =
  /// r * sigma^alpha(s) * c_{alpha,beta} x^{alpha+beta}, summed over terms.
  PbwElement multiply(const PbwElement& other) const;

  /// Total degree p when every term r x^alpha has weight(r) + |alpha| = p;
  /// std::nullopt if inhomogeneous. Requires a graded algebra and f != 0.
  std::optional<unsigned long long> degree() const;

  bool operator==(const PbwElement& other) const;
  bool operator!=(const PbwElement& other) const { return !(*this == other); }

  std::string to_string() const;

private:
  void add_term(const ExponentVec& alpha, const CoeffPoly& coeff);
  void check_compatible(const PbwElement& other) const;

  AlgebraHandle algebra_;
  std::map<ExponentVec, CoeffPoly, ExponentLess> terms_;
};

inline PbwElement operator+(const PbwElement& a, const PbwElement& b) { return a.add(b); }
inline PbwElement operator-(const PbwElement& a, const PbwElement& b) { return a.sub(b); }
inline PbwElement operator*(const PbwElement& a, const PbwElement& b) { return a.multiply(b); }
inline PbwElement operator-(const PbwElement& a) { return a.neg(); }

}  // namespace skewpbw

#endif
