#include "chilab/poly.hpp"

#include "chilab/error.hpp"

namespace chilab {

namespace {

void trim(std::vector<BigInt>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

} // namespace

NonDecPoly::NonDecPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  for (const BigInt& c : coeffs_)
    if (c < 0)
      fail(ErrorKind::argument, "polynomial coefficients must be nonnegative");
  trim(coeffs_);
}

NonDecPoly NonDecPoly::constant(const BigInt& c) {
  return NonDecPoly{std::vector<BigInt>{c}};
}

NonDecPoly NonDecPoly::identity() { return monomial(1); }

NonDecPoly NonDecPoly::monomial(int degree, const BigInt& c) {
  if (degree < 0) fail(ErrorKind::argument, "monomial degree must be nonnegative");
  std::vector<BigInt> coeffs(degree + 1, BigInt{0});
  coeffs[degree] = c;
  return NonDecPoly{std::move(coeffs)};
}

BigInt NonDecPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

NonDecPoly NonDecPoly::operator+(const NonDecPoly& other) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt{0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return NonDecPoly{std::move(out)};
}

NonDecPoly NonDecPoly::operator*(const NonDecPoly& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return NonDecPoly{};
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt{0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return NonDecPoly{std::move(out)};
}

NonDecPoly NonDecPoly::scaled(const BigInt& c) const {
  if (c < 0) fail(ErrorKind::argument, "scale factor must be nonnegative");
  std::vector<BigInt> out = coeffs_;
  for (BigInt& v : out) v *= c;
  return NonDecPoly{std::move(out)};
}

std::vector<std::string> NonDecPoly::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const BigInt& c : coeffs_) out.push_back(c.str());
  return out;
}

NonDecPoly NonDecPoly::from_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigInt> parsed;
  parsed.reserve(coeffs.size());
  for (const std::string& s : coeffs) {
    if (s.empty()) fail(ErrorKind::parse, "empty polynomial coefficient");
    try {
      parsed.emplace_back(s);
    } catch (const std::exception&) {
      fail(ErrorKind::parse, "bad polynomial coefficient '" + s + "'");
    }
  }
  return NonDecPoly{std::move(parsed)};
}

NonDecPoly poly_pow(const NonDecPoly& base, int exponent) {
  if (exponent < 0) fail(ErrorKind::argument, "polynomial exponent must be nonnegative");
  NonDecPoly acc = NonDecPoly::constant(1);
  for (int i = 0; i < exponent; ++i) acc = acc * base;
  return acc;
}

} // namespace chilab
