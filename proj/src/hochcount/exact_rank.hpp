#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace hochcount {

// Integer matrix stored by rows; each row maps column -> nonzero entry.
class SparseIntMatrix {
 public:
  SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  void add(std::size_t row, std::size_t col, const mpz_class& value);
  mpz_class at(std::size_t row, std::size_t col) const;
  const std::map<std::size_t, mpz_class>& row(std::size_t r) const { return rows_[r]; }

  bool is_zero() const;
  std::size_t nonzeros() const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);

 private:
  std::size_t cols_;
  std::vector<std::map<std::size_t, mpz_class>> rows_;
};

// Rank over Q by fraction-free row reduction: pivot rows are kept primitive
// (content divided out), and each incoming row is cleared column by column
// with integer combinations only.
std::size_t rank_over_rationals(const SparseIntMatrix& m);

// Rank over F_p, p prime below 2^31.
std::size_t rank_mod_prime(const SparseIntMatrix& m, std::uint32_t p);

// 2^30 - 35, the largest prime below 2^30.
inline constexpr std::uint32_t kCheckPrime = 1073741789u;

}  // namespace hochcount
