#include "skewpbw/nakayama.hpp"

#include <sstream>

namespace skewpbw {

bool AlgebraAutomorphism::is_identity() const {
  if (!r_action.is_identity()) return false;
  for (const auto& lambda : x_scalars)
    if (!lambda.is_one()) return false;
  return true;
}

bool AlgebraAutomorphism::operator==(const AlgebraAutomorphism& other) const {
  return r_action == other.r_action && x_scalars == other.x_scalars;
}

bool VerificationReport::all_passed() const {
  for (const auto& clause : clauses)
    if (!clause.passed) return false;
  return true;
}

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  for (const auto& clause : clauses)
    os << (clause.passed ? "pass" : "FAIL") << ": " << clause.description << '\n';
  return os.str();
}

Scalar hdet_stage(const PbwAlgebra& algebra, std::size_t i) {
  algebra.require_graded();
  if (i >= algebra.var_count()) throw std::logic_error("stage index out of range");
  Scalar u = algebra.sigma(i).linear_part_matrix().determinant();
  for (std::size_t j = 0; j < i; ++j) u = u.mul(algebra.commutation_scalar(j, i));
  return u;
}

VerificationReport verify_automorphism(const AlgebraHandle& algebra, const AlgebraAutomorphism& phi) {
  algebra->require_validated();
  if (!phi.r_action.ring()->same_ring(*algebra->ring()))
    fail(Errc::ring_mismatch, "automorphism over a different coefficient ring");
  if (phi.x_scalars.size() != algebra->var_count())
    fail(Errc::algebra_mismatch, "one x-scalar per variable required");

  VerificationReport report;
  const std::size_t n = algebra->var_count();
  const std::size_t m = algebra->ring()->gen_count();

  bool invertible = true;
  try {
    (void)phi.r_action.inverse();
  } catch (const Error&) {
    invertible = false;
  }
  report.clauses.push_back({"r_action bijective", invertible});

  bool lambdas_ok = true;
  for (const auto& lambda : phi.x_scalars) {
    if (lambda.field() != algebra->field() || lambda.is_zero()) lambdas_ok = false;
  }
  report.clauses.push_back({"x scalars nonzero", lambdas_ok});
  if (!lambdas_ok) return report;

  // phi(x_i) phi(t_k) = phi(sigma_i(t_k)) phi(x_i) for each ring generator t_k.
  for (std::size_t i = 0; i < n; ++i) {
    const PbwElement phi_xi = PbwElement::variable(algebra, i).scale(phi.x_scalars[i]);
    for (std::size_t k = 0; k < m; ++k) {
      const CoeffPoly t_k = CoeffPoly::generator(algebra->ring(), k);
      const PbwElement lhs = phi_xi.multiply(PbwElement::embed(algebra, phi.r_action.apply(t_k)));
      const PbwElement rhs =
          PbwElement::embed(algebra, phi.r_action.apply(algebra->sigma(i).apply(t_k)))
              .multiply(phi_xi);
      report.clauses.push_back({"relation " + algebra->var_name(i) + "*" +
                                    algebra->ring()->gen_name(k) + " preserved",
                                lhs == rhs});
    }
  }

  // phi(x_j) phi(x_i) = c_{i,j} phi(x_i) phi(x_j) for i < j.
  for (std::size_t i = 0; i < n; ++i) {
    const PbwElement phi_xi = PbwElement::variable(algebra, i).scale(phi.x_scalars[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const PbwElement phi_xj = PbwElement::variable(algebra, j).scale(phi.x_scalars[j]);
      const PbwElement lhs = phi_xj.multiply(phi_xi);
      const PbwElement rhs = phi_xi.multiply(phi_xj).scale(algebra->commutation_scalar(i, j));
      report.clauses.push_back({"relation " + algebra->var_name(j) + "*" + algebra->var_name(i) +
                                    " preserved",
                                lhs == rhs});
    }
  }
  return report;
}

AlgebraAutomorphism nakayama(const AlgebraHandle& algebra, const std::optional<RingEndo>& nu) {
  algebra->require_graded();
  const std::size_t n = algebra->var_count();

  RingEndo nu_act = nu.value_or(RingEndo::identity(algebra->ring()));
  if (nu) {
    if (!nu_act.ring()->same_ring(*algebra->ring()))
      fail(Errc::ring_mismatch, "nu over a different coefficient ring");
    if (!nu_act.is_graded()) fail(Errc::nu_not_compatible, "nu is not graded");
    if (!nu_act.is_injective()) fail(Errc::nu_not_compatible, "nu is not bijective");
    for (std::size_t i = 0; i < n; ++i) {
      if (!nu_act.commutes_with(algebra->sigma(i)))
        fail(Errc::nu_not_compatible,
             "nu does not commute with sigma for " + algebra->var_name(i));
    }
  }

  RingEndo sigma_product = RingEndo::identity(algebra->ring());
  for (std::size_t i = 0; i < n; ++i) sigma_product = sigma_product.compose_after(algebra->sigma(i));
  const RingEndo r_action = sigma_product.inverse().compose_after(nu_act);

  std::vector<Scalar> lambdas;
  lambdas.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar lambda = hdet_stage(*algebra, i);
    for (std::size_t j = i + 1; j < n; ++j)
      lambda = lambda.mul(algebra->commutation_scalar(i, j).inv());
    lambdas.push_back(lambda);
  }

  AlgebraAutomorphism mu{r_action, std::move(lambdas)};
  const VerificationReport check = verify_automorphism(algebra, mu);
  if (!check.all_passed())
    fail(Errc::nakayama_inconsistent, "computed map fails verification:\n" + check.to_string());
  return mu;
}

bool is_calabi_yau(const AlgebraHandle& algebra, const std::optional<RingEndo>& nu) {
  algebra->require_graded();
  if (algebra->ring()->gen_count() > 0 && !algebra->ring()->connected())
    fail(Errc::not_connected,
         "coefficient ring is not connected (zero-weight generator); "
         "inner automorphisms are not pinned to the identity");
  return nakayama(algebra, nu).is_identity();
}

AlgebraHandle extend_by(const AlgebraHandle& algebra, const AlgebraAutomorphism& phi,
                        const std::string& new_var_name) {
  algebra->require_validated();
  const VerificationReport check = verify_automorphism(algebra, phi);
  if (!check.all_passed())
    fail(Errc::automorphism_invalid, "extension map fails verification:\n" + check.to_string());

  const std::size_t n = algebra->var_count();
  std::string name = new_var_name;
  if (name.empty()) {
    // First free x<k> not already used by a generator or variable.
    for (std::size_t k = n + 1;; ++k) {
      name = "x" + std::to_string(k);
      if (!algebra->var_index(name) && !algebra->ring()->gen_index(name)) break;
    }
  }

  std::vector<std::string> names = algebra->var_names();
  names.push_back(name);
  std::vector<RingEndo> sigmas;
  sigmas.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) sigmas.push_back(algebra->sigma(i));
  sigmas.push_back(phi.r_action);
  std::map<std::pair<unsigned, unsigned>, Scalar> c_upper;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      c_upper.emplace(std::make_pair(static_cast<unsigned>(i), static_cast<unsigned>(j)),
                      algebra->commutation_scalar(i, j));
  for (std::size_t i = 0; i < n; ++i)
    c_upper.emplace(std::make_pair(static_cast<unsigned>(i), static_cast<unsigned>(n)),
                    phi.x_scalars[i]);
  return PbwAlgebra::create(algebra->ring(), std::move(names), std::move(sigmas),
                            std::move(c_upper));
}

std::string automorphism_to_string(const PbwAlgebra& algebra, const AlgebraAutomorphism& phi) {
  std::ostringstream os;
  for (std::size_t k = 0; k < algebra.ring()->gen_count(); ++k) {
    os << algebra.ring()->gen_name(k) << " -> " << phi.r_action.image(k).to_string() << '\n';
  }
  for (std::size_t i = 0; i < algebra.var_count(); ++i) {
    std::string lambda = phi.x_scalars[i].to_plain_string();
    os << algebra.var_name(i) << " -> ";
    if (lambda == "1") {
      os << algebra.var_name(i);
    } else {
      if (lambda.find('/') != std::string::npos || lambda.front() == '-') lambda = "(" + lambda + ")";
      os << lambda << "*" << algebra.var_name(i);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace skewpbw
