#include "skewpbw/tower.hpp"

#include <sstream>

namespace skewpbw {

OreTower OreTower::build(AlgebraHandle algebra) {
  algebra->require_graded();
  OreTower tower(algebra);
  const std::size_t n = algebra->var_count();
  tower.stages_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    OreStage stage{algebra->sigma(j), {}};
    stage.lower_scalars.reserve(j);
    for (std::size_t i = 0; i < j; ++i) stage.lower_scalars.push_back(algebra->commutation_scalar(i, j));
    tower.stages_.push_back(std::move(stage));
  }
  return tower;
}

PbwElement OreTower::theta_apply(std::size_t j, const PbwElement& f) const {
  return theta_power_apply(j, 1, f);
}

PbwElement OreTower::theta_power_apply(std::size_t j, unsigned long long e, const PbwElement& f) const {
  if (e == 0) return f;
  const OreStage& st = stages_[j];
  const RingEndo sigma_e = st.r_action.power(e);
  PbwElement result(algebra_);
  for (const auto& [gamma, r] : f.terms()) {
    Scalar factor = Scalar::one(algebra_->field());
    for (std::size_t i = 0; i < j; ++i) {
      if (gamma[i] == 0) continue;
      factor = factor.mul(st.lower_scalars[i].pow_u(e * gamma[i]));
    }
    for (std::size_t i = j; i < gamma.size(); ++i) {
      if (gamma[i] != 0) throw std::logic_error("theta applied above its stage");
    }
    result = result.add(PbwElement::monomial(algebra_, sigma_e.apply(r).scale(factor), gamma));
  }
  return result;
}

PbwElement OreTower::multiply_level(std::size_t level, const PbwElement& f, const PbwElement& g) const {
  if (level == 0) {
    // Base of the tower: plain commutative multiplication in R.
    CoeffPoly fr = CoeffPoly::zero(algebra_->ring());
    CoeffPoly gr = CoeffPoly::zero(algebra_->ring());
    for (const auto& [alpha, r] : f.terms()) fr = fr.add(r);
    for (const auto& [beta, s] : g.terms()) gr = gr.add(s);
    return PbwElement::embed(algebra_, fr.mul(gr));
  }
  const std::size_t top = level - 1;

  // Split by the exponent of the top variable z_top.
  auto split = [&](const PbwElement& h) {
    std::map<std::uint32_t, PbwElement> parts;
    for (const auto& [alpha, r] : h.terms()) {
      ExponentVec stripped = alpha;
      const std::uint32_t d = stripped[top];
      stripped[top] = 0;
      auto it = parts.find(d);
      if (it == parts.end()) it = parts.emplace(d, PbwElement::zero(algebra_)).first;
      it->second = it->second.add(PbwElement::monomial(algebra_, r, stripped));
    }
    return parts;
  };

  PbwElement acc = PbwElement::zero(algebra_);
  for (const auto& [d, fd] : split(f)) {
    for (const auto& [e, ge] : split(g)) {
      // fd z^d * ge z^e = fd * theta_top^d(ge) * z^{d+e}
      PbwElement moved = theta_power_apply(top, d, ge);
      PbwElement prod = multiply_level(top, fd, moved);
      ExponentVec shift(algebra_->var_count(), 0);
      shift[top] = d + e;
      PbwElement shifted(algebra_);
      for (const auto& [alpha, r] : prod.terms())
        shifted = shifted.add(PbwElement::monomial(algebra_, r, exp_add(alpha, shift)));
      acc = acc.add(shifted);
    }
  }
  return acc;
}

PbwElement OreTower::multiply(const PbwElement& f, const PbwElement& g) const {
  if (!f.algebra()->same_structure(*algebra_) || !g.algebra()->same_structure(*algebra_))
    fail(Errc::algebra_mismatch, "elements do not live in the tower's algebra");
  return multiply_level(algebra_->var_count(), f, g);
}

std::string OreTower::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < stages_.size(); ++j) {
    os << "stage " << j + 1 << " (" << algebra_->var_name(j) << "):";
    bool first = true;
    for (std::size_t k = 0; k < algebra_->ring()->gen_count(); ++k) {
      os << (first ? " " : ", ") << algebra_->ring()->gen_name(k) << " -> "
         << stages_[j].r_action.image(k).to_string();
      first = false;
    }
    for (std::size_t i = 0; i < j; ++i) {
      std::string c = stages_[j].lower_scalars[i].to_plain_string();
      if (c.find('/') != std::string::npos) c = "(" + c + ")";
      os << (first ? " " : ", ") << algebra_->var_name(i) << " -> ";
      if (c == "1")
        os << algebra_->var_name(i);
      else
        os << c << "*" << algebra_->var_name(i);
      first = false;
    }
    if (first) os << " (identity on R)";
    os << '\n';
  }
  return os.str();
}

}  // namespace skewpbw
