#include "hochcount/exact_rank.hpp"

#include <utility>

#include "hochcount/error.hpp"
#include "hochcount/flagfq.hpp"

namespace hochcount {

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;
using ModRow = std::vector<std::pair<std::size_t, std::uint32_t>>;

// a * x - b * y on sorted sparse rows.
IntRow combine(const mpz_class& a, const IntRow& x, const mpz_class& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  mpz_class v;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

void SparseIntMatrix::add(std::size_t row, std::size_t col, const mpz_class& value) {
  if (row >= rows_.size() || col >= cols_) throw Error("sparse matrix index out of range");
  if (value == 0) return;
  auto& r = rows_[row];
  auto [it, inserted] = r.try_emplace(col, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) r.erase(it);
  }
}

mpz_class SparseIntMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = rows_[row];
  auto it = r.find(col);
  return it == r.end() ? mpz_class(0) : it->second;
}

bool SparseIntMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t count = 0;
  for (const auto& r : rows_) count += r.size();
  return count;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("sparse matrix product of incompatible shapes");
  SparseIntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& [k, x] : a.row(i))
      for (const auto& [j, y] : b.row(k)) out.add(i, j, x * y);
  return out;
}

std::size_t rank_over_rationals(const SparseIntMatrix& m) {
  std::map<std::size_t, IntRow> pivots;  // leading column -> primitive row
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntRow row(m.row(r).begin(), m.row(r).end());
    make_primitive(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const IntRow& pivot = it->second;
      const mpz_class a = pivot.front().second;
      const mpz_class b = row.front().second;
      row = combine(a, row, b, pivot);
      make_primitive(row);
    }
  }
  return pivots.size();
}

std::size_t rank_mod_prime(const SparseIntMatrix& m, std::uint32_t p) {
  const PrimeField field(p);
  std::map<std::size_t, ModRow> pivots;  // leading column -> row with leading 1
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ModRow row;
    for (const auto& [c, v] : m.row(r)) {
      const mpz_class residue = v % p;  // sign follows v
      std::int64_t x = residue.get_si();
      const std::uint32_t red = field.reduce(x);
      if (red != 0) row.emplace_back(c, red);
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const std::uint32_t scale = field.inv(row.front().second);
        for (auto& [c, v] : row) v = field.mul(v, scale);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const ModRow& pivot = it->second;
      const std::uint32_t factor = row.front().second;
      ModRow next;
      next.reserve(row.size() + pivot.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
          next.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
          next.emplace_back(pivot[j].first, field.sub(0, field.mul(factor, pivot[j].second)));
          ++j;
        } else {
          const std::uint32_t v = field.sub(row[i].second, field.mul(factor, pivot[j].second));
          if (v != 0) next.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row = std::move(next);
    }
  }
  return pivots.size();
}

}  // namespace hochcount
