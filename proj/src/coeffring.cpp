#include "skewpbw/coeffring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skewpbw {

PolyRing::PolyRing(Field field, std::vector<std::string> gen_names, std::vector<unsigned> weights)
    : field_(field), gen_names_(std::move(gen_names)), weights_(std::move(weights)) {
  if (gen_names_.size() != weights_.size())
    throw std::logic_error("generator/weight count mismatch");
  std::set<std::string> seen;
  for (const auto& name : gen_names_) {
    if (name.empty() || !seen.insert(name).second)
      fail(Errc::schema_error, "duplicate or empty generator name '" + name + "'");
  }
}

std::shared_ptr<const PolyRing> PolyRing::make(Field field, std::vector<std::string> gen_names,
                                               std::vector<unsigned> weights) {
  return std::make_shared<const PolyRing>(field, std::move(gen_names), std::move(weights));
}

std::shared_ptr<const PolyRing> PolyRing::make_trivial(Field field) {
  return make(field, {}, {});
}

bool PolyRing::trivially_graded() const {
  return std::all_of(weights_.begin(), weights_.end(), [](unsigned w) { return w == 0; });
}

bool PolyRing::connected() const {
  return std::all_of(weights_.begin(), weights_.end(), [](unsigned w) { return w >= 1; });
}

std::optional<std::size_t> PolyRing::gen_index(const std::string& name) const {
  for (std::size_t k = 0; k < gen_names_.size(); ++k)
    if (gen_names_[k] == name) return k;
  return std::nullopt;
}

bool PolyRing::same_ring(const PolyRing& other) const {
  return field_ == other.field_ && gen_names_ == other.gen_names_ && weights_ == other.weights_;
}

Monomial::Monomial(std::vector<std::pair<unsigned, unsigned>> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].second == 0) throw std::logic_error("zero exponent in monomial");
    if (i > 0 && factors_[i - 1].first == factors_[i].first)
      throw std::logic_error("repeated generator in monomial");
  }
}

unsigned Monomial::exponent(unsigned k) const {
  for (const auto& [idx, e] : factors_)
    if (idx == k) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  std::vector<std::pair<unsigned, unsigned>> merged;
  merged.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  Monomial result;
  result.factors_ = std::move(merged);
  return result;
}

unsigned long long Monomial::total_degree() const {
  unsigned long long d = 0;
  for (const auto& [idx, e] : factors_) d += e;
  return d;
}

unsigned long long Monomial::weighted_degree(std::span<const unsigned> weights) const {
  unsigned long long d = 0;
  for (const auto& [idx, e] : factors_) d += static_cast<unsigned long long>(weights[idx]) * e;
  return d;
}

bool Monomial::graded_lex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  // Same total degree: lexicographic with t_1 > t_2 > ... . Walk the sparse
  // factor lists; a missing index means exponent 0 there.
  auto pa = a.factors_.begin();
  auto pb = b.factors_.begin();
  while (pa != a.factors_.end() || pb != b.factors_.end()) {
    unsigned ia = pa != a.factors_.end() ? pa->first : ~0u;
    unsigned ib = pb != b.factors_.end() ? pb->first : ~0u;
    if (ia == ib) {
      if (pa->second != pb->second) return pa->second < pb->second;
      ++pa;
      ++pb;
    } else if (ia < ib) {
      return false;  // a has a positive exponent on an earlier generator
    } else {
      return true;
    }
  }
  return false;
}

CoeffPoly::CoeffPoly(std::shared_ptr<const PolyRing> ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::logic_error("null ring");
}

CoeffPoly CoeffPoly::zero(std::shared_ptr<const PolyRing> ring) { return CoeffPoly(std::move(ring)); }

CoeffPoly CoeffPoly::one(std::shared_ptr<const PolyRing> ring) {
  auto f = Scalar::one(ring->field());
  return constant(std::move(ring), f);
}

CoeffPoly CoeffPoly::constant(std::shared_ptr<const PolyRing> ring, const Scalar& value) {
  CoeffPoly p(std::move(ring));
  p.add_term(Monomial::one(), value);
  return p;
}

CoeffPoly CoeffPoly::generator(std::shared_ptr<const PolyRing> ring, std::size_t k) {
  if (k >= ring->gen_count()) throw std::logic_error("generator index out of range");
  CoeffPoly p(ring);
  p.add_term(Monomial::generator(static_cast<unsigned>(k)), Scalar::one(ring->field()));
  return p;
}

CoeffPoly CoeffPoly::term(std::shared_ptr<const PolyRing> ring, const Scalar& coeff, const Monomial& mono) {
  CoeffPoly p(std::move(ring));
  p.add_term(mono, coeff);
  return p;
}

bool CoeffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar CoeffPoly::constant_value() const {
  if (is_zero()) return Scalar::zero(ring_->field());
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

long long CoeffPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Map is graded-lex ordered, so the last term has maximal total degree.
  return static_cast<long long>(terms_.rbegin()->first.total_degree());
}

void CoeffPoly::add_term(const Monomial& mono, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
    return;
  }
  Scalar sum = it->second.add(coeff);
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

void CoeffPoly::check_same_ring(const CoeffPoly& other) const {
  if (!ring_->same_ring(*other.ring_)) fail(Errc::ring_mismatch, "coefficient rings differ");
}

CoeffPoly CoeffPoly::add(const CoeffPoly& other) const {
  check_same_ring(other);
  CoeffPoly result = *this;
  for (const auto& [mono, coeff] : other.terms_) result.add_term(mono, coeff);
  return result;
}

CoeffPoly CoeffPoly::sub(const CoeffPoly& other) const { return add(other.neg()); }

CoeffPoly CoeffPoly::neg() const {
  CoeffPoly result(ring_);
  for (const auto& [mono, coeff] : terms_) result.terms_.emplace(mono, coeff.neg());
  return result;
}

CoeffPoly CoeffPoly::mul(const CoeffPoly& other) const {
  check_same_ring(other);
  CoeffPoly result(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) result.add_term(ma.times(mb), ca.mul(cb));
  return result;
}

CoeffPoly CoeffPoly::scale(const Scalar& s) const {
  if (s.is_zero()) return zero(ring_);
  CoeffPoly result(ring_);
  for (const auto& [mono, coeff] : terms_) result.terms_.emplace(mono, coeff.mul(s));
  return result;
}

CoeffPoly CoeffPoly::pow(unsigned long long exponent) const {
  CoeffPoly acc = one(ring_);
  CoeffPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1) acc = acc.mul(base);
    exponent >>= 1;
    if (exponent != 0) base = base.mul(base);
  }
  return acc;
}

std::optional<unsigned long long> CoeffPoly::weight() const {
  if (is_zero()) fail(Errc::zero_input, "weight of the zero polynomial");
  const auto weights = std::span<const unsigned>(ring_->weights());
  std::optional<unsigned long long> w;
  for (const auto& [mono, coeff] : terms_) {
    const auto d = mono.weighted_degree(weights);
    if (!w) {
      w = d;
    } else if (*w != d) {
      return std::nullopt;
    }
  }
  return w;
}

std::map<unsigned long long, CoeffPoly> CoeffPoly::homogeneous_components() const {
  const auto weights = std::span<const unsigned>(ring_->weights());
  std::map<unsigned long long, CoeffPoly> parts;
  for (const auto& [mono, coeff] : terms_) {
    const auto d = mono.weighted_degree(weights);
    auto it = parts.find(d);
    if (it == parts.end()) it = parts.emplace(d, CoeffPoly(ring_)).first;
    it->second.add_term(mono, coeff);
  }
  return parts;
}

bool CoeffPoly::operator==(const CoeffPoly& other) const {
  return ring_->same_ring(*other.ring_) && terms_ == other.terms_;
}

namespace {

std::string monomial_to_string(const Monomial& mono, const PolyRing& ring) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, e] : mono.factors()) {
    if (!first) os << '*';
    first = false;
    os << ring.gen_name(idx);
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

// Renders "<scalar>*<mono-part>", dropping a unit scalar and wrapping
// fractions in parentheses so the output reparses as a single term.
std::string term_body(const Scalar& coeff, const std::string& mono_part) {
  std::string s = coeff.to_plain_string();
  if (mono_part.empty()) return s;
  if (s == "1") return mono_part;
  if (s.find('/') != std::string::npos) s = "(" + s + ")";
  return s + "*" + mono_part;
}

}  // namespace

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  const bool rational = ring_->field().is_rationals();
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Scalar coeff = it->second;
    bool negative = rational && coeff.sign() < 0;
    if (negative) coeff = coeff.neg();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << term_body(coeff, monomial_to_string(it->first, *ring_));
  }
  return os.str();
}

mpz_class weighted_monomial_count(std::span<const unsigned> weights, unsigned long long d) {
  // Exact enumeration by recursion on the generators:
  // count(k, d) = sum over e >= 0 with e*w_k <= d of count(k+1, d - e*w_k).
  // Memoized on (k, d).
  struct Counter {
    std::span<const unsigned> weights;
    std::map<std::pair<std::size_t, unsigned long long>, mpz_class> memo;
    mpz_class run(std::size_t k, unsigned long long rem) {
      if (k == weights.size()) return rem == 0 ? 1 : 0;
      auto key = std::make_pair(k, rem);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      mpz_class total = 0;
      for (unsigned long long used = 0; used <= rem; used += weights[k]) {
        total += run(k + 1, rem - used);
      }
      memo.emplace(key, total);
      return total;
    }
  };
  for (unsigned w : weights)
    if (w == 0) fail(Errc::not_locally_finite, "zero weight in monomial count");
  Counter counter{weights, {}};
  return counter.run(0, d);
}

mpz_class hilbert_r(const PolyRing& ring, unsigned long long d) {
  if (ring.gen_count() > 0 && !ring.connected())
    fail(Errc::not_locally_finite, "hilbert_r needs all generator weights >= 1");
  return weighted_monomial_count(std::span<const unsigned>(ring.weights()), d);
}

}  // namespace skewpbw
