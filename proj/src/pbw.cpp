#include "skewpbw/pbw.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skewpbw {

unsigned long long exp_total_degree(const ExponentVec& alpha) {
  unsigned long long d = 0;
  for (auto a : alpha) d += a;
  return d;
}

ExponentVec exp_add(const ExponentVec& alpha, const ExponentVec& beta) {
  ExponentVec sum(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) sum[i] = alpha[i] + beta[i];
  return sum;
}

bool exp_graded_lex_less(const ExponentVec& a, const ExponentVec& b) {
  const auto da = exp_total_degree(a);
  const auto db = exp_total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

const char* validation_state_name(ValidationState s) {
  switch (s) {
    case ValidationState::unvalidated: return "unvalidated";
    case ValidationState::quasi_commutative: return "quasi_commutative";
    case ValidationState::graded_quasi_commutative: return "graded_quasi_commutative";
  }
  return "?";
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  os << "state: " << validation_state_name(state) << '\n';
  for (std::size_t i = 0; i < sigma_injective.size(); ++i) {
    os << "sigma " << i + 1 << ": bijective=" << (sigma_injective[i] ? "yes" : "no")
       << " graded=" << (sigma_graded[i] ? "yes" : "no") << '\n';
  }
  os << "sigmas pairwise commute: " << (sigmas_commute ? "yes" : "no") << '\n';
  os << "c entries nonzero: " << (c_nonzero ? "yes" : "no") << '\n';
  for (const auto& line : failures) os << "failure: " << line << '\n';
  return os.str();
}

PbwAlgebra::PbwAlgebra(std::shared_ptr<const PolyRing> ring, std::vector<std::string> var_names,
                       std::vector<RingEndo> sigmas,
                       std::map<std::pair<unsigned, unsigned>, Scalar> c_upper)
    : ring_(std::move(ring)), var_names_(std::move(var_names)), sigmas_(std::move(sigmas)) {
  const std::size_t n = sigmas_.size();
  if (n == 0) throw std::logic_error("at least one adjoined variable required");
  if (n > max_variables) throw std::logic_error("variable count exceeds 64");
  if (var_names_.size() != n) throw std::logic_error("one name per variable required");
  std::set<std::string> seen(ring_->gen_names().begin(), ring_->gen_names().end());
  for (const auto& name : var_names_) {
    if (name.empty() || !seen.insert(name).second)
      fail(Errc::schema_error, "variable name '" + name + "' duplicate or clashes with a generator");
  }
  for (const auto& s : sigmas_) {
    if (!s.ring()->same_ring(*ring_)) fail(Errc::ring_mismatch, "sigma over a different ring");
  }
  c_upper_.assign(n * (n - 1) / 2, Scalar::one(ring_->field()));
  for (const auto& [key, value] : c_upper) {
    const auto [i, j] = key;
    if (i >= j || j >= n) throw std::logic_error("c index pair must satisfy i < j <= n");
    if (value.field() != ring_->field()) fail(Errc::field_mismatch, "c entry over a different field");
    c_upper_[upper_index(i, j)] = value;
  }
}

std::shared_ptr<const PbwAlgebra> PbwAlgebra::create(
    std::shared_ptr<const PolyRing> ring, std::vector<std::string> var_names,
    std::vector<RingEndo> sigmas, std::map<std::pair<unsigned, unsigned>, Scalar> c_upper,
    bool run_validation) {
  auto algebra = std::make_shared<PbwAlgebra>(std::move(ring), std::move(var_names),
                                              std::move(sigmas), std::move(c_upper));
  if (run_validation) algebra->validate();
  return algebra;
}

std::size_t PbwAlgebra::upper_index(std::size_t i, std::size_t j) const {
  const std::size_t n = sigmas_.size();
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

const ValidationReport& PbwAlgebra::validate() {
  if (validated_once_) return report_;
  const std::size_t n = sigmas_.size();
  ValidationReport rep;
  rep.sigma_injective.resize(n);
  rep.sigma_graded.resize(n);
  bool all_injective = true;
  bool all_graded = true;
  for (std::size_t i = 0; i < n; ++i) {
    rep.sigma_injective[i] = sigmas_[i].is_injective();
    rep.sigma_graded[i] = sigmas_[i].is_graded();
    if (!rep.sigma_injective[i]) {
      all_injective = false;
      rep.failures.push_back("sigma for " + var_names_[i] + " is not bijective");
    }
    if (!rep.sigma_graded[i]) {
      all_graded = false;
      rep.failures.push_back("sigma for " + var_names_[i] + " is not graded");
    }
  }
  rep.sigmas_commute = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!sigmas_[i].commutes_with(sigmas_[j])) {
        rep.sigmas_commute = false;
        rep.failures.push_back("sigma for " + var_names_[i] + " and sigma for " + var_names_[j] +
                               " do not commute");
      }
    }
  }
  rep.c_nonzero = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c_upper_[upper_index(i, j)].is_zero()) {
        rep.c_nonzero = false;
        rep.failures.push_back("c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") is zero");
      }
    }
  }
  if (all_injective && rep.sigmas_commute && rep.c_nonzero) {
    rep.state = all_graded ? ValidationState::graded_quasi_commutative
                           : ValidationState::quasi_commutative;
  } else {
    rep.state = ValidationState::unvalidated;
  }
  report_ = std::move(rep);
  validated_once_ = true;
  return report_;
}

std::optional<std::size_t> PbwAlgebra::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < var_names_.size(); ++i)
    if (var_names_[i] == name) return i;
  return std::nullopt;
}

void PbwAlgebra::require_validated() const {
  if (report_.state == ValidationState::unvalidated)
    fail(Errc::not_validated, "algebra is not validated quasi-commutative");
}

void PbwAlgebra::require_graded() const {
  require_validated();
  if (report_.state != ValidationState::graded_quasi_commutative)
    fail(Errc::not_graded, "algebra is not graded quasi-commutative");
}

void PbwAlgebra::check_var_count(std::size_t n) const {
  if (n != sigmas_.size()) fail(Errc::algebra_mismatch, "exponent vector length mismatch");
}

Scalar PbwAlgebra::commutation_scalar(std::size_t i, std::size_t j) const {
  if (i == j) return Scalar::one(ring_->field());
  if (i < j) return c_upper_[upper_index(i, j)];
  return c_upper_[upper_index(j, i)].inv();
}

Scalar PbwAlgebra::monomial_commute_scalar(const ExponentVec& alpha, const ExponentVec& beta) const {
  require_validated();
  check_var_count(alpha.size());
  check_var_count(beta.size());
  Scalar result = Scalar::one(ring_->field());
  const std::size_t n = sigmas_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (beta[i] == 0) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (alpha[j] == 0) continue;
      const auto e = static_cast<unsigned long long>(alpha[j]) * beta[i];
      result = result.mul(c_upper_[upper_index(i, j)].pow_u(e));
    }
  }
  return result;
}

RingEndo PbwAlgebra::sigma_power(const ExponentVec& alpha) const {
  require_validated();
  check_var_count(alpha.size());
  RingEndo acc = RingEndo::identity(ring_);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0) acc = acc.compose_after(sigmas_[i].power(alpha[i]));
  }
  return acc;
}

mpz_class PbwAlgebra::hilbert(unsigned long long d) const {
  require_graded();
  if (ring_->gen_count() > 0 && !ring_->connected())
    fail(Errc::not_locally_finite, "hilbert needs generator weights >= 1 (or m = 0)");
  const std::vector<unsigned> var_weights(sigmas_.size(), 1u);
  mpz_class total = 0;
  for (unsigned long long k = 0; k <= d; ++k) {
    mpz_class dim_rk = hilbert_r(*ring_, k);
    if (dim_rk == 0) continue;
    total += dim_rk * weighted_monomial_count(std::span<const unsigned>(var_weights), d - k);
  }
  return total;
}

bool PbwAlgebra::same_structure(const PbwAlgebra& other) const {
  return ring_->same_ring(*other.ring_) && var_names_ == other.var_names_ &&
         sigmas_ == other.sigmas_ && c_upper_ == other.c_upper_;
}

PbwElement::PbwElement(AlgebraHandle algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::logic_error("null algebra");
}

PbwElement PbwElement::zero(AlgebraHandle algebra) { return PbwElement(std::move(algebra)); }

PbwElement PbwElement::one(AlgebraHandle algebra) {
  return embed(algebra, CoeffPoly::one(algebra->ring()));
}

PbwElement PbwElement::variable(AlgebraHandle algebra, std::size_t i) {
  if (i >= algebra->var_count()) throw std::logic_error("variable index out of range");
  ExponentVec alpha(algebra->var_count(), 0);
  alpha[i] = 1;
  return monomial(algebra, CoeffPoly::one(algebra->ring()), alpha);
}

PbwElement PbwElement::embed(AlgebraHandle algebra, const CoeffPoly& r) {
  return monomial(algebra, r, ExponentVec(algebra->var_count(), 0));
}

PbwElement PbwElement::embed_scalar(AlgebraHandle algebra, const Scalar& s) {
  return embed(algebra, CoeffPoly::constant(algebra->ring(), s));
}

PbwElement PbwElement::monomial(AlgebraHandle algebra, const CoeffPoly& r, const ExponentVec& alpha) {
  if (!r.ring()->same_ring(*algebra->ring())) fail(Errc::ring_mismatch, "coefficient in wrong ring");
  algebra->check_var_count(alpha.size());
  PbwElement f(std::move(algebra));
  f.add_term(alpha, r);
  return f;
}

void PbwElement::add_term(const ExponentVec& alpha, const CoeffPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    terms_.emplace(alpha, coeff);
    return;
  }
  CoeffPoly sum = it->second.add(coeff);
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

void PbwElement::check_compatible(const PbwElement& other) const {
  if (algebra_ == other.algebra_) return;
  if (!algebra_->same_structure(*other.algebra_))
    fail(Errc::algebra_mismatch, "elements of different algebras");
}

PbwElement PbwElement::add(const PbwElement& other) const {
  check_compatible(other);
  PbwElement result = *this;
  for (const auto& [alpha, coeff] : other.terms_) result.add_term(alpha, coeff);
  return result;
}

PbwElement PbwElement::sub(const PbwElement& other) const { return add(other.neg()); }

PbwElement PbwElement::neg() const {
  PbwElement result(algebra_);
  for (const auto& [alpha, coeff] : terms_) result.terms_.emplace(alpha, coeff.neg());
  return result;
}

PbwElement PbwElement::left_scale(const CoeffPoly& r) const {
  if (!r.ring()->same_ring(*algebra_->ring())) fail(Errc::ring_mismatch, "scale by wrong-ring coefficient");
  PbwElement result(algebra_);
  for (const auto& [alpha, coeff] : terms_) result.add_term(alpha, r.mul(coeff));
  return result;
}

PbwElement PbwElement::scale(const Scalar& s) const {
  PbwElement result(algebra_);
  if (s.is_zero()) return result;
  for (const auto& [alpha, coeff] : terms_) result.terms_.emplace(alpha, coeff.scale(s));
  return result;
}

PbwElement PbwElement::multiply(const PbwElement& other) const {
  check_compatible(other);
  algebra_->require_validated();
  PbwElement result(algebra_);
  for (const auto& [alpha, r] : terms_) {
    const RingEndo sigma_alpha = algebra_->sigma_power(alpha);
    for (const auto& [beta, s] : other.terms_) {
      const Scalar c = algebra_->monomial_commute_scalar(alpha, beta);
      CoeffPoly coeff = r.mul(sigma_alpha.apply(s)).scale(c);
      result.add_term(exp_add(alpha, beta), coeff);
    }
  }
  return result;
}

std::optional<unsigned long long> PbwElement::degree() const {
  algebra_->require_graded();
  if (is_zero()) fail(Errc::zero_input, "degree of the zero element");
  std::optional<unsigned long long> deg;
  for (const auto& [alpha, r] : terms_) {
    const auto w = r.weight();
    if (!w) return std::nullopt;
    const auto d = *w + exp_total_degree(alpha);
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

bool PbwElement::operator==(const PbwElement& other) const {
  if (algebra_ != other.algebra_ && !algebra_->same_structure(*other.algebra_)) return false;
  return terms_ == other.terms_;
}

namespace {

std::string var_monomial_to_string(const ExponentVec& alpha, const PbwAlgebra& algebra) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << algebra.var_name(i);
    if (alpha[i] > 1) os << '^' << alpha[i];
  }
  return os.str();
}

}  // namespace

std::string PbwElement::to_string() const {
  if (terms_.empty()) return "0";
  const bool rational = algebra_->field().is_rationals();
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string xpart = var_monomial_to_string(it->first, *algebra_);
    CoeffPoly coeff = it->second;

    // Pull out a sign for single-term rational coefficients; multi-term
    // coefficients print inside parentheses unchanged.
    bool negative = false;
    std::string body;
    if (coeff.term_count() == 1) {
      const auto& [mono, s] = *coeff.terms().begin();
      Scalar sc = s;
      if (rational && sc.sign() < 0) {
        negative = true;
        sc = sc.neg();
      }
      std::string tpart;
      {
        CoeffPoly unit_mono = CoeffPoly::term(coeff.ring(), Scalar::one(coeff.ring()->field()), mono);
        tpart = mono.is_one() ? "" : unit_mono.to_string();
      }
      std::string mono_part = tpart;
      if (!xpart.empty()) mono_part = mono_part.empty() ? xpart : mono_part + "*" + xpart;
      std::string s_str = sc.to_plain_string();
      if (mono_part.empty()) {
        body = s_str;
      } else if (s_str == "1") {
        body = mono_part;
      } else {
        if (s_str.find('/') != std::string::npos) s_str = "(" + s_str + ")";
        body = s_str + "*" + mono_part;
      }
    } else {
      body = xpart.empty() ? coeff.to_string() : "(" + coeff.to_string() + ")*" + xpart;
    }

    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << body;
  }
  return os.str();
}

}  // namespace skewpbw
