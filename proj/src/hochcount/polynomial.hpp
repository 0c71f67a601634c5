#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hochcount {

// Univariate polynomial in q with arbitrary-precision integer coefficients.
// coefficients()[k] is the coefficient of q^k; the last stored coefficient is
// nonzero, and the zero polynomial stores nothing.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const mpz_class& c);
  // c * q^k
  static IntPolynomial monomial(const mpz_class& c, std::size_t k);

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  // Coefficient of q^k, zero beyond the degree.
  mpz_class coefficient(std::size_t k) const;

  bool is_zero() const { return coeffs_.empty(); }
  // nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;

  mpz_class evaluate(const mpz_class& x) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);

  // this += sign * q^shift * other, in place. sign is +1 or -1.
  void add_shifted(const IntPolynomial& other, std::size_t shift, int sign = 1);

  // q^k * this
  IntPolynomial shifted(std::size_t k) const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(IntPolynomial a);

  bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

  // "q^3 - q^2 + q"
  std::string to_string() const;

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial scale(const IntPolynomial& p, const mpz_class& c);
mpz_class evaluate(const IntPolynomial& p, const mpz_class& x);

// The unique polynomial of degree < points.size() through the given points,
// reconstructed in exact rational arithmetic. Throws InvalidInput on an empty
// list or repeated abscissa, and NotIntegral when a reconstructed coefficient
// is not an integer.
IntPolynomial lagrange_interpolate(std::span<const std::pair<mpz_class, mpz_class>> points);

}  // namespace hochcount
