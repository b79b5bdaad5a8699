#pragma once

#include <string>
#include <vector>

#include "chilab/kernels.hpp"

namespace chilab {

// Polynomial with nonnegative integer coefficients, so it is
// nondecreasing on the naturals. Coefficients are constant-first.
class NonDecPoly {
public:
  NonDecPoly() = default;
  explicit NonDecPoly(std::vector<BigInt> coeffs);

  static NonDecPoly constant(const BigInt& c);
  static NonDecPoly identity();
  static NonDecPoly monomial(int degree, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt evaluate(const BigInt& x) const;

  NonDecPoly operator+(const NonDecPoly& other) const;
  NonDecPoly operator*(const NonDecPoly& other) const;
  NonDecPoly scaled(const BigInt& c) const;

  bool operator==(const NonDecPoly& other) const { return coeffs_ == other.coeffs_; }

  // Decimal strings, constant-first; the JSON form of psi.
  std::vector<std::string> to_strings() const;
  static NonDecPoly from_strings(const std::vector<std::string>& coeffs);

private:
  std::vector<BigInt> coeffs_; // trailing zeros trimmed
};

NonDecPoly poly_pow(const NonDecPoly& base, int exponent);

} // namespace chilab
