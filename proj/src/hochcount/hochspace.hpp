#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hochcount/flagfq.hpp"
#include "hochcount/hecke.hpp"
#include "hochcount/polynomial.hpp"
#include "hochcount/weyl.hpp"

namespace hochcount {

// Largest n accepted by the symbolic counting routines.
inline constexpr int kMaxHochRank = 7;

// Point count of H_w = {(a, b, u) : a in X_w, pos(a, b) = w0, pos(b, u a) = w0}
// over F_q, as a polynomial in q:
//
//   |H_w| = q^{l(w0)} * sum_tau c^w_{w, tau^-1}(q) * N_tau(q),
//   N_tau = coefficient of T_tau in T_{w0}^2.
//
// Derivation. (i) U acts on H_w by v.(a, b, u) = (va, vb, v u v^-1), and
// transitively on X_w, so |H_w| = q^{l(w)} * |fiber over a_w|. (ii) u -> u a_w
// maps U onto the cell {y : pos(std, y) = w} with fibers of size
// q^{l(w0) - l(w)}, so #{u : pos(a_w, u a_w) = tau} =
// q^{l(w0) - l(w)} * #{y : pos(std, y) = w, pos(y, a_w) = tau^-1}.
// (iii) That count is c^w_{w, tau^-1}, and the number of b opposite both a_w
// and u a_w is N_tau.
//
// The sum over tau is the coefficient of T_w in T_w * M with
// M = sum_tau N_tau T_{tau^-1}; that is how it is evaluated here.
IntPolynomial stratum_polynomial(int n, const Permutation& w);

// stratum_polynomial for every w, indexed like WeylGroup::get(n)->elements().
// Walks S_n as a tree (each w reached from a shorter s_i w), so each node costs
// one generator multiplication.
std::vector<IntPolynomial> all_stratum_polynomials(int n, unsigned threads = 0);

// Sum of all stratum polynomials.
IntPolynomial hoch_polynomial(int n, unsigned threads = 0);

// hoch_polynomial(n) at q = 1.
mpz_class euler_characteristic(int n, unsigned threads = 0);

struct StratumReport {
  int n = 0;
  Permutation w;
  IntPolynomial polynomial;
  std::map<std::uint32_t, mpz_class> evaluations;
  std::optional<std::map<std::uint32_t, std::uint64_t>> brute_force;

  // brute_force, when present, equals evaluations pointwise.
  bool consistent() const;
};

struct Lemma42Report {
  int n = 0;
  // (sigma, N_sigma(1)) for every sigma in S_n, lexicographic order.
  std::vector<std::pair<Permutation, mpz_class>> values;
  std::vector<Permutation> failures;
  bool pass() const { return failures.empty(); }
};

// N_sigma(1) = [sigma = e] for every sigma. Failures are reported, not thrown.
Lemma42Report verify_lemma42(int n);

struct CrossValidationReport {
  int n = 0;
  std::vector<std::uint32_t> primes;
  std::vector<StratumReport> strata;
  bool pass() const;
};

// For every w and p: stratum_polynomial(n, w)(p) against the orbit-level brute
// force count. Throws ResourceLimit when a brute-force budget is exceeded.
CrossValidationReport cross_validate(int n, std::span<const std::uint32_t> primes, const BruteForceOptions& options = {});

}  // namespace hochcount
