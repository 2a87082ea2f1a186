#include "skewpbw/scalar.hpp"

#include <ostream>

namespace skewpbw {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, p);
    base = mulmod_u64(base, base, p);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the first twelve primes.
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) fail(Errc::schema_error, "field modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

std::string Field::to_string() const {
  return is_rationals() ? "rationals" : "prime " + std::to_string(p_);
}

Scalar Scalar::zero(const Field& field) { return of_int(field, 0); }

Scalar Scalar::one(const Field& field) { return of_int(field, 1); }

Scalar Scalar::of_int(const Field& field, long value) {
  Scalar s(field);
  if (field.is_rationals()) {
    s.rat_ = mpq_class(value);
  } else {
    const std::uint64_t p = field.modulus();
    long r = value % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    s.res_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::of_rational(const Field& field, const mpq_class& value) {
  // mpq-level functions require canonical operands (positive denominator, no
  // common factor); gmpxx's mpq_class(num, den) does not canonicalize. Copy
  // the legs at the mpz level, which has no such precondition, then fix up.
  mpq_class v;
  mpz_set(mpq_numref(v.get_mpq_t()), value.get_num().get_mpz_t());
  mpz_set(mpq_denref(v.get_mpq_t()), value.get_den().get_mpz_t());
  if (v.get_den() == 0) fail(Errc::division_by_zero, "zero denominator");
  v.canonicalize();

  Scalar s(field);
  if (field.is_rationals()) {
    s.rat_ = v;
  } else {
    const std::uint64_t p = field.modulus();
    std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
    std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
    if (den == 0) fail(Errc::division_by_zero, "denominator vanishes in F_" + std::to_string(p));
    s.res_ = mulmod_u64(num, powmod_u64(den, p - 2, p), p);
  }
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

int Scalar::sign() const {
  if (field_.is_rationals()) return sgn(rat_);
  return res_ == 0 ? 0 : 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    fail(Errc::field_mismatch, field_.to_string() + " vs " + other.field_.to_string());
}

Scalar Scalar::add(const Scalar& other) const {
  check_same_field(other);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.rat_ = rat_ + other.rat_;
  } else {
    const std::uint64_t p = field_.modulus();
    std::uint64_t r = res_ + other.res_;  // p < 2^63, no overflow
    s.res_ = r >= p ? r - p : r;
  }
  return s;
}

Scalar Scalar::sub(const Scalar& other) const { return add(other.neg()); }

Scalar Scalar::mul(const Scalar& other) const {
  check_same_field(other);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.rat_ = rat_ * other.rat_;
  } else {
    s.res_ = mulmod_u64(res_, other.res_, field_.modulus());
  }
  return s;
}

Scalar Scalar::div(const Scalar& other) const { return mul(other.inv()); }

Scalar Scalar::neg() const {
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.rat_ = -rat_;
  } else {
    s.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
  }
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.rat_ = 1 / rat_;
  } else {
    const std::uint64_t p = field_.modulus();
    s.res_ = powmod_u64(res_, p - 2, p);
  }
  return s;
}

Scalar Scalar::pow(long long exponent) const {
  if (exponent < 0) return inv().pow_u(static_cast<unsigned long long>(-exponent));
  return pow_u(static_cast<unsigned long long>(exponent));
}

Scalar Scalar::pow_u(unsigned long long exponent) const {
  Scalar s(field_);
  if (field_.is_rationals()) {
    if (exponent == 0) return one(field_);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), rat_.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), rat_.get_den().get_mpz_t(), exponent);
    s.rat_ = mpq_class(num) / mpq_class(den);  // already in lowest terms
    s.rat_.canonicalize();
  } else {
    s.res_ = powmod_u64(res_, exponent, field_.modulus());
  }
  return s;
}

bool Scalar::operator==(const Scalar& other) const {
  if (field_ != other.field_) return false;
  return field_.is_rationals() ? rat_ == other.rat_ : res_ == other.res_;
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return rat_.get_str();
  return std::to_string(res_) + " mod " + std::to_string(field_.modulus());
}

std::string Scalar::to_plain_string() const {
  return field_.is_rationals() ? rat_.get_str() : std::to_string(res_);
}

Scalar Scalar::parse(const std::string& text) {
  const auto mod_pos = text.find(" mod ");
  try {
    if (mod_pos != std::string::npos) {
      mpz_class k(text.substr(0, mod_pos));
      std::uint64_t p = std::stoull(text.substr(mod_pos + 5));
      Field f = Field::prime(p);
      return of_rational(f, mpq_class(k));
    }
    mpq_class q(text);
    if (q.get_den() == 0) fail(Errc::division_by_zero, "zero denominator in '" + text + "'");
    q.canonicalize();
    return of_rational(Field::rationals(), q);
  } catch (const std::invalid_argument&) {
    fail(Errc::syntax_error, "bad scalar literal '" + text + "'");
  } catch (const std::out_of_range&) {
    fail(Errc::syntax_error, "bad scalar literal '" + text + "'");
  }
}

const mpq_class& Scalar::rational_value() const {
  if (!field_.is_rationals()) throw std::logic_error("rational_value on prime-field scalar");
  return rat_;
}

std::uint64_t Scalar::residue_value() const {
  if (!field_.is_prime()) throw std::logic_error("residue_value on rational scalar");
  return res_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace skewpbw
