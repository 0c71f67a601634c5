#include "hochcount/hecke.hpp"

#include "hochcount/error.hpp"

namespace hochcount {

namespace {

// Applies T_{s} to the pair (x, x') where x' = x s (or s x) is the longer
// element. Old coefficients A at x and B at x' become
//   x  : q B
//   x' : A + (q - 1) B
// which is T_x T_s = T_{xs} together with T_{xs} T_s = (q-1) T_{xs} + q T_x.
void apply_pair(IntPolynomial& short_coeff, IntPolynomial& long_coeff) {
  if (short_coeff.is_zero() && long_coeff.is_zero()) return;
  IntPolynomial a = std::move(short_coeff);
  IntPolynomial b = std::move(long_coeff);
  short_coeff = b.shifted(1);
  long_coeff = std::move(a);
  long_coeff.add_shifted(b, 1, 1);
  long_coeff.add_shifted(b, 0, -1);
}

}  // namespace

HeckeElement::HeckeElement(int n) : group_(WeylGroup::get(n)), coeffs_(group_->order()) {}

HeckeElement HeckeElement::basis(const Permutation& w) {
  HeckeElement h(w.size());
  h.coeffs_[h.group_->index_of(w)] = IntPolynomial{1};
  return h;
}

void HeckeElement::add_term(const Permutation& w, const IntPolynomial& c) { coeffs_[group_->index_of(w)] += c; }

std::map<Permutation, IntPolynomial> HeckeElement::terms() const {
  std::map<Permutation, IntPolynomial> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) out.emplace(group_->element(k), coeffs_[k]);
  return out;
}

std::size_t HeckeElement::support_size() const {
  std::size_t count = 0;
  for (const auto& c : coeffs_)
    if (!c.is_zero()) ++count;
  return count;
}

void HeckeElement::check_same_rank(const HeckeElement& other) const {
  if (rank() != other.rank())
    throw InvalidInput("Hecke elements of S_" + std::to_string(rank()) + " and S_" + std::to_string(other.rank()) +
                       " cannot be combined");
}

void HeckeElement::check_generator(int i) const {
  if (i < 1 || i >= rank())
    throw InvalidInput("generator index " + std::to_string(i) + " out of range for S_" + std::to_string(rank()));
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  check_same_rank(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

bool HeckeElement::operator==(const HeckeElement& other) const {
  return rank() == other.rank() && coeffs_ == other.coeffs_;
}

void HeckeElement::multiply_generator_right(int i) {
  check_generator(i);
  const WeylGroup& g = *group_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::size_t j = g.right_multiply(k, i);
    if (g.length(j) > g.length(k)) apply_pair(coeffs_[k], coeffs_[j]);
  }
}

void HeckeElement::multiply_generator_left(int i) {
  check_generator(i);
  const WeylGroup& g = *group_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::size_t j = g.left_multiply(k, i);
    if (g.length(j) > g.length(k)) apply_pair(coeffs_[k], coeffs_[j]);
  }
}

HeckeElement mul_by_generator(const HeckeElement& h, int i) {
  HeckeElement out = h;
  out.multiply_generator_right(i);
  return out;
}

HeckeElement generator_mul(int i, const HeckeElement& h) {
  HeckeElement out = h;
  out.multiply_generator_left(i);
  return out;
}

HeckeElement mul(const HeckeElement& left, const HeckeElement& right) {
  if (left.rank() != right.rank())
    throw InvalidInput("Hecke elements of S_" + std::to_string(left.rank()) + " and S_" + std::to_string(right.rank()) +
                       " cannot be multiplied");
  const WeylGroup& g = right.group();
  HeckeElement result(left.rank());
  for (std::size_t v = 0; v < g.order(); ++v) {
    const IntPolynomial& coeff = right.coefficient_at(v);
    if (coeff.is_zero()) continue;
    HeckeElement partial = left;
    for (int i : reduced_word(g.element(v))) partial.multiply_generator_right(i);
    for (std::size_t k = 0; k < g.order(); ++k) {
      const IntPolynomial& c = partial.coefficient_at(k);
      if (!c.is_zero()) result.add_term_at(k, c * coeff);
    }
  }
  return result;
}

IntPolynomial structure_coefficient(const Permutation& u, const Permutation& v, const Permutation& w) {
  if (u.size() != v.size() || u.size() != w.size())
    throw InvalidInput("structure coefficient needs permutations of one size");
  return mul(HeckeElement::basis(u), HeckeElement::basis(v)).coefficient(w);
}

HeckeElement t_w0_squared(int n) {
  const Permutation w0 = longest_element(n);
  HeckeElement h = HeckeElement::basis(w0);
  for (int i : reduced_word(w0)) h.multiply_generator_right(i);
  return h;
}

std::map<Permutation, mpz_class> specialize(const HeckeElement& h, const mpz_class& q0) {
  std::map<Permutation, mpz_class> out;
  const WeylGroup& g = h.group();
  for (std::size_t k = 0; k < g.order(); ++k) {
    const IntPolynomial& c = h.coefficient_at(k);
    if (c.is_zero()) continue;
    out.emplace(g.element(k), c.evaluate(q0));
  }
  return out;
}

}  // namespace hochcount
