#ifndef SKEWPBW_NAKAYAMA_HPP
#define SKEWPBW_NAKAYAMA_HPP

#include <optional>

#include "skewpbw/pbw.hpp"

namespace skewpbw {

/// Graded algebra automorphism of A that fixes each variable line:
/// phi|_R = r_action and phi(x_i) = x_scalars[i] * x_i.
struct AlgebraAutomorphism {
  RingEndo r_action;
  std::vector<Scalar> x_scalars;

  bool is_identity() const;
  bool operator==(const AlgebraAutomorphism& other) const;
};

struct VerificationReport {
  struct Clause {
    std::string description;
    bool passed;
  };
  std::vector<Clause> clauses;

  bool all_passed() const;
  std::string to_string() const;
};

/// u_i for the i-th tower stage (0-based): the determinant of sigma_i's
/// action on the weight-1 generators times the product of the stored
/// commutation scalars c_{j,i} for j < i. The determinant factor is the
/// empty product (1) when R has no weight-1 generators, in particular for
/// trivially graded R and for R = K.
Scalar hdet_stage(const PbwAlgebra& algebra, std::size_t i);

/// The Nakayama automorphism mu of A:
///   mu|_R  = (sigma_1 ... sigma_n)^{-1} o nu,
///   mu(x_i) = u_i * prod_{j>i} c_{i,j}^{-1} * x_i  with u_i = hdet_stage(i).
/// nu is the Nakayama automorphism of R; it defaults to the identity, which
/// is correct for R = K[t_1..t_m]. A supplied nu must be a graded automorphism
/// commuting with every sigma_i (NuNotCompatible otherwise). The result is
/// checked by verify_automorphism before being returned.
AlgebraAutomorphism nakayama(const AlgebraHandle& algebra,
                             const std::optional<RingEndo>& nu = std::nullopt);

/// Checks, as PbwElement identities, that phi preserves every defining
/// relation: phi(x_i) phi(r) = phi(sigma_i(r)) phi(x_i) for each generator r
/// of R, and phi(x_j) phi(x_i) = c_{i,j} phi(x_i) phi(x_j) for i < j; plus
/// bijectivity of the data. Failures are report entries, not errors.
VerificationReport verify_automorphism(const AlgebraHandle& algebra, const AlgebraAutomorphism& phi);

/// True iff the Nakayama automorphism is the identity. Requires a connected
/// coefficient ring (m = 0 or all weights >= 1) so that the only inner
/// automorphism is the identity; NotConnected otherwise.
bool is_calabi_yau(const AlgebraHandle& algebra, const std::optional<RingEndo>& nu = std::nullopt);

/// The (n+1)-variable extension A[x_{n+1}] with sigma_{n+1} = phi|_R and
/// x_{n+1} x_i = phi(x_i) x_{n+1}, i.e. c_{i,n+1} = x_scalars[i].
/// phi is verified first (AutomorphismInvalid on failure).
AlgebraHandle extend_by(const AlgebraHandle& algebra, const AlgebraAutomorphism& phi,
                        const std::string& new_var_name = "");

std::string automorphism_to_string(const PbwAlgebra& algebra, const AlgebraAutomorphism& phi);

}  // namespace skewpbw

#endif
