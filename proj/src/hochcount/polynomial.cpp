#include "hochcount/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hochcount/error.hpp"

namespace hochcount {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> coeffs(k + 1);
  coeffs[k] = c;
  return IntPolynomial(std::move(coeffs));
}

mpz_class IntPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  add_shifted(other, 0, 1);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  add_shifted(other, 0, -1);
  return *this;
}

void IntPolynomial::add_shifted(const IntPolynomial& other, std::size_t shift, int sign) {
  if (other.coeffs_.empty()) return;
  const std::size_t needed = other.coeffs_.size() + shift;
  if (coeffs_.size() < needed) coeffs_.resize(needed);
  if (sign >= 0) {
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k + shift] += other.coeffs_[k];
  } else {
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k + shift] -= other.coeffs_[k];
  }
  normalize();
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (coeffs_.empty() || k == 0) return *this;
  IntPolynomial out;
  out.coeffs_.reserve(coeffs_.size() + k);
  out.coeffs_.resize(k);
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  *this = *this * other;
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << "q";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& r) { return p + r; }
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& r) { return p * r; }

IntPolynomial scale(const IntPolynomial& p, const mpz_class& c) {
  std::vector<mpz_class> coeffs = p.coefficients();
  for (auto& x : coeffs) x *= c;
  return IntPolynomial(std::move(coeffs));
}

mpz_class evaluate(const IntPolynomial& p, const mpz_class& x) { return p.evaluate(x); }

IntPolynomial lagrange_interpolate(std::span<const std::pair<mpz_class, mpz_class>> points) {
  if (points.empty()) throw InvalidInput("interpolation needs at least one point");
  {
    std::set<mpz_class> seen;
    for (const auto& [x, y] : points)
      if (!seen.insert(x).second) throw InvalidInput("repeated abscissa " + x.get_str() + " in interpolation data");
  }

  // Sum of y_i * prod_{j != i} (q - x_j) / (x_i - x_j), accumulated over Q.
  const std::size_t m = points.size();
  std::vector<mpq_class> result(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * points[j].first;
      }
      basis = std::move(next);
      denom *= mpq_class(points[i].first - points[j].first);
    }
    mpq_class factor = mpq_class(points[i].second) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * factor;
  }

  std::vector<mpz_class> coeffs;
  coeffs.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    result[k].canonicalize();
    if (result[k].get_den() != 1)
      throw NotIntegral("interpolated coefficient of q^" + std::to_string(k) + " is " + result[k].get_str() +
                        "; too few points for the true degree, or inconsistent data");
    coeffs.push_back(result[k].get_num());
  }
  IntPolynomial poly(std::move(coeffs));
  for (const auto& [x, y] : points)
    if (poly.evaluate(x) != y) throw Error("interpolant does not reproduce the data at " + x.get_str());
  return poly;
}

}  // namespace hochcount
