#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace spbranch {

/// Exact integer Laurent polynomial in a fixed number of variables.
/// Terms are kept in a std::map keyed by exponent vector, so iteration is in
/// lexicographic order and the leading term is the last entry. Zero
/// coefficients are never stored. Arithmetic throws std::overflow_error
/// rather than wrapping.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;
  using Coeff = std::int64_t;

  explicit LaurentPoly(int num_vars = 0) : num_vars_(num_vars) {}

  static LaurentPoly constant(int num_vars, Coeff c);
  static LaurentPoly monomial(Exponent e, Coeff c = 1);

  int num_vars() const noexcept { return num_vars_; }
  const std::map<Exponent, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Coeff coefficient(const Exponent& e) const;

  /// Lexicographically largest exponent with its coefficient.
  std::optional<std::pair<Exponent, Coeff>> leading_term() const;

  /// Value at all variables = 1.
  Coeff evaluate_at_ones() const;

  void add_term(const Exponent& e, Coeff c);
  /// this += factor * other
  void add_scaled(const LaurentPoly& other, Coeff factor);

  LaurentPoly& operator+=(const LaurentPoly& other) {
    add_scaled(other, 1);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    add_scaled(other, -1);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  int num_vars_;
  std::map<Exponent, Coeff> terms_;
};

}  // namespace spbranch
