#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>

#include "hochcount/polynomial.hpp"
#include "hochcount/weyl.hpp"

namespace hochcount {

// Element of the Iwahori-Hecke algebra of S_n over Z[q], in the T-basis with
// T_s^2 = (q - 1) T_s + q T_e.
//
// With this normalization the structure constant c^w_{u,v}(q) of T_u T_v at
// T_w is the number of flags y over F_q with pos(x, y) = u and pos(y, z) = v,
// for any fixed pair (x, z) in relative position w. The flagfq tests check
// that identity against direct enumeration.
//
// Coefficients are stored densely, one slot per element of S_n.
class HeckeElement {
 public:
  // The zero element of H(S_n).
  explicit HeckeElement(int n);

  // T_w
  static HeckeElement basis(const Permutation& w);

  int rank() const { return group_->rank(); }
  const WeylGroup& group() const { return *group_; }

  const IntPolynomial& coefficient(const Permutation& w) const { return coeffs_[group_->index_of(w)]; }
  const IntPolynomial& coefficient_at(std::size_t index) const { return coeffs_[index]; }

  // this += c * T_w
  void add_term(const Permutation& w, const IntPolynomial& c);
  void add_term_at(std::size_t index, const IntPolynomial& c) { coeffs_[index] += c; }

  // Nonzero terms only.
  std::map<Permutation, IntPolynomial> terms() const;
  std::size_t support_size() const;
  bool is_zero() const { return support_size() == 0; }

  HeckeElement& operator+=(const HeckeElement& other);
  bool operator==(const HeckeElement& other) const;

  // In-place right / left multiplication by T_{s_i}.
  void multiply_generator_right(int i);
  void multiply_generator_left(int i);

 private:
  void check_same_rank(const HeckeElement& other) const;
  void check_generator(int i) const;

  std::shared_ptr<const WeylGroup> group_;
  std::vector<IntPolynomial> coeffs_;
};

// h * T_{s_i}. Throws InvalidInput unless 1 <= i <= n-1.
HeckeElement mul_by_generator(const HeckeElement& h, int i);

// T_{s_i} * h.
HeckeElement generator_mul(int i, const HeckeElement& h);

// Each T_v of the right factor is expanded along reduced_word(v).
HeckeElement mul(const HeckeElement& left, const HeckeElement& right);

// Coefficient of T_w in T_u T_v; the zero polynomial when absent.
IntPolynomial structure_coefficient(const Permutation& u, const Permutation& v, const Permutation& w);

// T_{w0} T_{w0}. Its coefficient at sigma is the number of flags opposite
// to both members of a pair of flags in relative position sigma.
HeckeElement t_w0_squared(int n);

// Every coefficient evaluated at q0, over the support of h (values may be 0).
std::map<Permutation, mpz_class> specialize(const HeckeElement& h, const mpz_class& q0);

}  // namespace hochcount
