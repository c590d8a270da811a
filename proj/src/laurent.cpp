#include "spbranch/laurent.hpp"

#include <stdexcept>
#include <string>

#include "spbranch/error.hpp"

namespace spbranch {

namespace {

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
  return out;
}

LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int num_vars, Coeff c) {
  LaurentPoly p(num_vars);
  p.add_term(Exponent(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponent e, Coeff c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<std::pair<LaurentPoly::Exponent, LaurentPoly::Coeff>> LaurentPoly::leading_term() const {
  if (terms_.empty()) return std::nullopt;
  const auto& [e, c] = *terms_.rbegin();
  return std::make_pair(e, c);
}

LaurentPoly::Coeff LaurentPoly::evaluate_at_ones() const {
  Coeff sum = 0;
  for (const auto& [e, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

void LaurentPoly::add_term(const Exponent& e, Coeff c) {
  if (static_cast<int>(e.size()) != num_vars_) {
    throw ValidationError("exponent has " + std::to_string(e.size()) + " entries, expected " +
                          std::to_string(num_vars_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::add_scaled(const LaurentPoly& other, Coeff factor) {
  if (other.num_vars_ != num_vars_) throw ValidationError("Laurent polynomials in different variable counts");
  for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, factor));
}

}  // namespace spbranch
