#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hochcount/weyl.hpp"

namespace hochcount {

bool is_prime(std::uint64_t value);

// Arithmetic in Z/p for a prime p < 2^31, on residues in [0, p).
class PrimeField {
 public:
  // Throws InvalidInput unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // Throws InvalidInput for 0.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

// Square matrix over F_p, row-major.
class MatrixFp {
 public:
  MatrixFp(int n, PrimeField field);
  MatrixFp(int n, PrimeField field, std::vector<std::uint32_t> row_major);

  static MatrixFp identity(int n, PrimeField field);

  int size() const { return n_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t operator()(int row, int col) const { return entries_[row * n_ + col]; }
  std::uint32_t& operator()(int row, int col) { return entries_[row * n_ + col]; }
  std::span<const std::uint32_t> entries() const { return entries_; }

  int rank() const;

  friend MatrixFp operator*(const MatrixFp& a, const MatrixFp& b);
  bool operator==(const MatrixFp&) const = default;

 private:
  int n_;
  PrimeField field_;
  std::vector<std::uint32_t> entries_;
};

// A complete flag in F_p^n: subspace i is the span of the first i columns of
// basis(). Stored in column-echelon normal form, so two Flag values are equal
// exactly when they describe the same flag.
//
// Normal form: column j has a 1 in its pivot row r_j, zeros below r_j, and
// zeros in the pivot rows of columns 0..j-1.
class Flag {
 public:
  // Throws InvalidInput if the matrix is singular.
  explicit Flag(MatrixFp basis);

  // Columns e_1, ..., e_n.
  static Flag standard(int n, PrimeField field);

  int size() const { return basis_.size(); }
  const PrimeField& field() const { return basis_.field(); }
  const MatrixFp& basis() const { return basis_; }

  // g * F
  Flag transformed(const MatrixFp& g) const;

  bool operator==(const Flag&) const = default;

 private:
  struct Canonical {};
  Flag(MatrixFp basis, Canonical) : basis_(std::move(basis)) {}
  friend std::vector<Flag> enumerate_flags(int n, std::uint32_t p, std::uint64_t cap);

  MatrixFp basis_;
};

// Unit upper-triangular matrix over F_p.
class UnipotentMatrix {
 public:
  // Throws InvalidInput unless the matrix is unit upper triangular.
  explicit UnipotentMatrix(MatrixFp matrix);

  const MatrixFp& matrix() const { return matrix_; }

  Flag act(const Flag& flag) const { return flag.transformed(matrix_); }

 private:
  MatrixFp matrix_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// [n]_p! = prod_{k=1}^{n} (1 + p + ... + p^{k-1}), saturating at UINT64_MAX.
std::uint64_t flag_count(int n, std::uint64_t p);

// p^k, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t p, int k);

// All [n]_p! flags in a deterministic order. Throws ResourceLimit above cap.
std::vector<Flag> enumerate_flags(int n, std::uint32_t p, std::uint64_t cap = kDefaultEnumerationCap);

// All p^{n(n-1)/2} unipotent matrices; entries above the diagonal run as an
// odometer in row-major order. Throws ResourceLimit above cap.
std::vector<UnipotentMatrix> enumerate_unipotent(int n, std::uint32_t p, std::uint64_t cap = kDefaultEnumerationCap);

// The permutation w such that dim(F1_i meet F2_j) jumps in both i and j
// exactly at (w(j), j).
Permutation relative_position(const Flag& first, const Flag& second);

// Permutation-matrix flag with columns e_{w(1)}, ..., e_{w(n)}.
Flag canonical_cell_point(const Permutation& w, std::uint32_t p);

// #{y : pos(x1, y) = u and pos(y, x2) = v}.
std::uint64_t count_middle_flags(const Flag& x1, const Flag& x2, const Permutation& u, const Permutation& v,
                                 std::uint64_t cap = kDefaultEnumerationCap);
// Same, over a precomputed list of all flags.
std::uint64_t count_middle_flags(const Flag& x1, const Flag& x2, const Permutation& u, const Permutation& v,
                                 std::span<const Flag> all_flags);

enum class StratumLevel { kFull, kOrbit };

struct BruteForceOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint64_t cap = kDefaultEnumerationCap;
};

// Work units the orbit-level count of one stratum needs: p^{l(w0)} * [n]_p!.
std::uint64_t orbit_budget(int n, std::uint64_t p);
// Work units the full triple enumeration of one stratum needs:
// p^{l(w0)} * ([n]_p!)^2.
std::uint64_t full_budget(int n, std::uint64_t p);

// |H_w(F_p)| = #{(a, b, u) : pos(std, a) = w, pos(a, b) = w0, pos(b, u a) = w0}.
//
// kFull enumerates every triple and is accepted for n = 2 only. kOrbit fixes
// a = canonical_cell_point(w) and multiplies by |X_w(F_p)| = p^{l(w)}; U acts
// on H by v.(a, b, u) = (va, vb, v u v^-1), so every fiber over X_w has the
// same size. Throws ResourceLimit when the budget exceeds options.cap.
std::uint64_t count_hoch_stratum_bruteforce(int n, std::uint32_t p, const Permutation& w, StratumLevel level,
                                            const BruteForceOptions& options = {});

}  // namespace hochcount
