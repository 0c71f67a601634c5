#include "hochcount/flagfq.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "hochcount/error.hpp"

namespace hochcount {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return kSaturated;
  return out;
}

// Row echelon basis of a growing subspace of F_p^n.
class EchelonBasis {
 public:
  EchelonBasis(int n, const PrimeField& field) : n_(n), field_(field) {}

  // Adds v to the span; returns true if the dimension grew.
  bool insert(std::vector<std::uint32_t> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::uint32_t c = v[pivots_[k]];
      if (c == 0) continue;
      const auto& row = rows_[k];
      for (int i = 0; i < n_; ++i)
        if (row[i] != 0) v[i] = field_.sub(v[i], field_.mul(c, row[i]));
    }
    int pivot = -1;
    for (int i = 0; i < n_; ++i)
      if (v[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    const std::uint32_t scale = field_.inv(v[pivot]);
    for (auto& x : v) x = field_.mul(x, scale);
    // Keep existing rows reduced at the new pivot so later insertions need
    // only one pass.
    for (auto& row : rows_) {
      const std::uint32_t c = row[pivot];
      if (c == 0) continue;
      for (int i = 0; i < n_; ++i)
        if (v[i] != 0) row[i] = field_.sub(row[i], field_.mul(c, v[i]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  int dimension() const { return static_cast<int>(rows_.size()); }

 private:
  int n_;
  const PrimeField& field_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<int> pivots_;
};

std::vector<std::uint32_t> column(const MatrixFp& m, int j) {
  std::vector<std::uint32_t> c(m.size());
  for (int i = 0; i < m.size(); ++i) c[i] = m(i, j);
  return c;
}

// Reduces the matrix in place to column-echelon normal form. Returns false if
// the matrix is singular.
bool canonicalize(MatrixFp& m) {
  const int n = m.size();
  const PrimeField& f = m.field();
  std::vector<int> pivot_rows;
  pivot_rows.reserve(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      const std::uint32_t c = m(pivot_rows[k], j);
      if (c == 0) continue;
      for (int i = 0; i < n; ++i)
        if (m(i, k) != 0) m(i, j) = f.sub(m(i, j), f.mul(c, m(i, k)));
    }
    int pivot = -1;
    for (int i = n - 1; i >= 0; --i)
      if (m(i, j) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    const std::uint32_t scale = f.inv(m(pivot, j));
    for (int i = 0; i <= pivot; ++i) m(i, j) = f.mul(m(i, j), scale);
    pivot_rows.push_back(pivot);
  }
  return true;
}

void check_compatible(const Flag& a, const Flag& b) {
  if (a.size() != b.size() || a.field() != b.field())
    throw InvalidInput("flags live in different spaces (n=" + std::to_string(a.size()) + ", p=" +
                       std::to_string(a.field().modulus()) + " versus n=" + std::to_string(b.size()) +
                       ", p=" + std::to_string(b.field().modulus()) + ")");
}

unsigned worker_count(unsigned requested, std::size_t work_items) {
  unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work_items, 1)));
}

// Sums body(begin, end) over contiguous slices of [0, count).
template <typename Body>
std::uint64_t parallel_sum(std::size_t count, unsigned threads, Body body) {
  const unsigned workers = worker_count(threads, count);
  if (workers <= 1) return body(std::size_t{0}, count);
  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      const std::size_t begin = count * t / workers;
      const std::size_t end = count * (t + 1) / workers;
      pool.emplace_back([&, t, begin, end] { partial[t] = body(begin, end); });
    }
  }
  std::uint64_t total = 0;
  for (auto x : partial) total += x;
  return total;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) throw InvalidInput(std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InvalidInput("zero has no inverse mod " + std::to_string(p_));
  // Extended Euclid.
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a % p_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return reduce(t);
}

MatrixFp::MatrixFp(int n, PrimeField field) : n_(n), field_(field), entries_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw InvalidInput("matrix size must be positive");
}

MatrixFp::MatrixFp(int n, PrimeField field, std::vector<std::uint32_t> row_major)
    : n_(n), field_(field), entries_(std::move(row_major)) {
  if (n < 1) throw InvalidInput("matrix size must be positive");
  if (entries_.size() != static_cast<std::size_t>(n) * n)
    throw InvalidInput("expected " + std::to_string(n * n) + " matrix entries, got " + std::to_string(entries_.size()));
  for (auto& x : entries_) x %= field_.modulus();
}

MatrixFp MatrixFp::identity(int n, PrimeField field) {
  MatrixFp m(n, field);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

int MatrixFp::rank() const {
  EchelonBasis basis(n_, field_);
  for (int j = 0; j < n_; ++j) basis.insert(column(*this, j));
  return basis.dimension();
}

MatrixFp operator*(const MatrixFp& a, const MatrixFp& b) {
  if (a.n_ != b.n_ || a.field_ != b.field_) throw InvalidInput("matrix product of incompatible operands");
  MatrixFp out(a.n_, a.field_);
  const std::uint64_t p = a.field_.modulus();
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < a.n_; ++k) acc = (acc + static_cast<std::uint64_t>(a(i, k)) * b(k, j)) % p;
      out(i, j) = static_cast<std::uint32_t>(acc);
    }
  return out;
}

Flag::Flag(MatrixFp basis) : basis_(std::move(basis)) {
  if (!canonicalize(basis_)) throw InvalidInput("flag basis matrix is singular");
}

Flag Flag::standard(int n, PrimeField field) { return Flag(MatrixFp::identity(n, field)); }

Flag Flag::transformed(const MatrixFp& g) const { return Flag(g * basis_); }

UnipotentMatrix::UnipotentMatrix(MatrixFp matrix) : matrix_(std::move(matrix)) {
  for (int i = 0; i < matrix_.size(); ++i)
    for (int j = 0; j <= i; ++j)
      if (matrix_(i, j) != (i == j ? 1u : 0u)) throw InvalidInput("matrix is not unit upper triangular");
}

std::uint64_t saturating_power(std::uint64_t p, int k) {
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) out = saturating_mul(out, p);
  return out;
}

std::uint64_t flag_count(int n, std::uint64_t p) {
  std::uint64_t total = 1;
  std::uint64_t q_int = 0;  // [k]_p = 1 + p + ... + p^{k-1}
  for (int k = 1; k <= n; ++k) {
    q_int = saturating_mul(q_int, p);
    q_int = q_int == kSaturated ? kSaturated : q_int + 1;
    total = saturating_mul(total, q_int);
  }
  return total;
}

std::vector<Flag> enumerate_flags(int n, std::uint32_t p, std::uint64_t cap) {
  PrimeField field(p);
  if (n < 1) throw InvalidInput("rank must be positive");
  if (n > kMaxEnumerationRank) throw ResourceLimit("flag enumeration is limited to n <= " + std::to_string(kMaxEnumerationRank));
  const std::uint64_t total = flag_count(n, p);
  if (total > cap)
    throw ResourceLimit("enumerating flags for n=" + std::to_string(n) + ", p=" + std::to_string(p) + " needs " +
                        std::to_string(total) + " flags, cap is " + std::to_string(cap));

  std::vector<Flag> flags;
  flags.reserve(total);
  // One family per pivot permutation r (column j has its pivot in row r(j)).
  // Free entries sit above the pivot in rows that are not pivots of earlier
  // columns.
  for (const Permutation& r : enumerate_permutations(n)) {
    std::vector<std::pair<int, int>> free_slots;
    for (int j = 0; j < n; ++j) {
      const int pivot = r(j + 1) - 1;
      for (int i = 0; i < pivot; ++i) {
        bool earlier_pivot = false;
        for (int k = 0; k < j; ++k)
          if (r(k + 1) - 1 == i) earlier_pivot = true;
        if (!earlier_pivot) free_slots.emplace_back(i, j);
      }
    }
    MatrixFp m(n, field);
    for (int j = 0; j < n; ++j) m(r(j + 1) - 1, j) = 1;
    const std::uint64_t family_size = saturating_power(p, static_cast<int>(free_slots.size()));
    for (std::uint64_t index = 0; index < family_size; ++index) {
      std::uint64_t rest = index;
      for (std::size_t s = free_slots.size(); s-- > 0;) {
        m(free_slots[s].first, free_slots[s].second) = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      flags.push_back(Flag(m, Flag::Canonical{}));
    }
  }
  return flags;
}

std::vector<UnipotentMatrix> enumerate_unipotent(int n, std::uint32_t p, std::uint64_t cap) {
  PrimeField field(p);
  if (n < 1) throw InvalidInput("rank must be positive");
  const int free_entries = n * (n - 1) / 2;
  const std::uint64_t total = saturating_power(p, free_entries);
  if (total > cap)
    throw ResourceLimit("enumerating unipotent matrices for n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                        " needs " + std::to_string(total) + " matrices, cap is " + std::to_string(cap));
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::vector<UnipotentMatrix> out;
  out.reserve(total);
  MatrixFp m = MatrixFp::identity(n, field);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (std::size_t s = slots.size(); s-- > 0;) {
      m(slots[s].first, slots[s].second) = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    out.emplace_back(m);
  }
  return out;
}

Permutation relative_position(const Flag& first, const Flag& second) {
  check_compatible(first, second);
  const int n = first.size();
  const PrimeField& field = first.field();
  // dims[i][j] = dim(first_i meet second_j) = i + j - rank[first_1..i | second_1..j]
  std::vector<std::vector<int>> dims(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    EchelonBasis basis(n, field);
    for (int k = 0; k < i; ++k) basis.insert(column(first.basis(), k));
    for (int j = 1; j <= n; ++j) {
      basis.insert(column(second.basis(), j - 1));
      dims[i][j] = i + j - basis.dimension();
    }
  }
  std::vector<int> window(n, 0);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      if (dims[i][j] - dims[i - 1][j] - dims[i][j - 1] + dims[i - 1][j - 1] == 1) window[j - 1] = i;
  return Permutation(std::move(window));
}

Flag canonical_cell_point(const Permutation& w, std::uint32_t p) {
  PrimeField field(p);
  MatrixFp m(w.size(), field);
  for (int j = 1; j <= w.size(); ++j) m(w(j) - 1, j - 1) = 1;
  return Flag(std::move(m));
}

std::uint64_t count_middle_flags(const Flag& x1, const Flag& x2, const Permutation& u, const Permutation& v,
                                 std::span<const Flag> all_flags) {
  check_compatible(x1, x2);
  if (u.size() != x1.size() || v.size() != x1.size())
    throw InvalidInput("relative positions must be permutations of size " + std::to_string(x1.size()));
  std::uint64_t count = 0;
  for (const Flag& y : all_flags)
    if (relative_position(x1, y) == u && relative_position(y, x2) == v) ++count;
  return count;
}

std::uint64_t count_middle_flags(const Flag& x1, const Flag& x2, const Permutation& u, const Permutation& v,
                                 std::uint64_t cap) {
  check_compatible(x1, x2);
  const auto flags = enumerate_flags(x1.size(), x1.field().modulus(), cap);
  return count_middle_flags(x1, x2, u, v, flags);
}

std::uint64_t orbit_budget(int n, std::uint64_t p) {
  return saturating_mul(saturating_power(p, n * (n - 1) / 2), flag_count(n, p));
}

std::uint64_t full_budget(int n, std::uint64_t p) {
  return saturating_mul(orbit_budget(n, p), flag_count(n, p));
}

std::uint64_t count_hoch_stratum_bruteforce(int n, std::uint32_t p, const Permutation& w, StratumLevel level,
                                            const BruteForceOptions& options) {
  PrimeField field(p);
  if (n < 1) throw InvalidInput("rank must be positive");
  if (w.size() != n) throw InvalidInput("stratum label " + w.to_string() + " is not in S_" + std::to_string(n));
  const Permutation w0 = longest_element(n);

  if (level == StratumLevel::kFull) {
    if (n > 2) throw ResourceLimit("full triple enumeration is limited to n <= 2; use the orbit level");
    const std::uint64_t budget = full_budget(n, p);
    if (budget > options.cap)
      throw ResourceLimit("full enumeration for n=" + std::to_string(n) + ", p=" + std::to_string(p) + " needs " +
                          std::to_string(budget) + " work units, cap is " + std::to_string(options.cap));
    const auto flags = enumerate_flags(n, p, options.cap);
    const auto unipotents = enumerate_unipotent(n, p, options.cap);
    const Flag standard = Flag::standard(n, field);
    std::vector<const Flag*> cell;
    for (const Flag& a : flags)
      if (relative_position(standard, a) == w) cell.push_back(&a);
    return parallel_sum(cell.size(), options.threads, [&](std::size_t begin, std::size_t end) {
      std::uint64_t count = 0;
      for (std::size_t k = begin; k < end; ++k) {
        const Flag& a = *cell[k];
        for (const UnipotentMatrix& u : unipotents) {
          const Flag ua = u.act(a);
          for (const Flag& b : flags)
            if (relative_position(a, b) == w0 && relative_position(b, ua) == w0) ++count;
        }
      }
      return count;
    });
  }

  const std::uint64_t budget = orbit_budget(n, p);
  if (budget > options.cap)
    throw ResourceLimit("orbit enumeration for n=" + std::to_string(n) + ", p=" + std::to_string(p) + " needs " +
                        std::to_string(budget) + " work units, cap is " + std::to_string(options.cap));
  const auto flags = enumerate_flags(n, p, options.cap);
  const auto unipotents = enumerate_unipotent(n, p, options.cap);
  const Flag a = canonical_cell_point(w, p);
  // Flags opposite a; the second condition is checked per u.
  std::vector<Flag> opposite_a;
  for (const Flag& y : flags)
    if (relative_position(a, y) == w0) opposite_a.push_back(y);
  const std::uint64_t fiber = parallel_sum(unipotents.size(), options.threads, [&](std::size_t begin, std::size_t end) {
    std::uint64_t count = 0;
    for (std::size_t k = begin; k < end; ++k) {
      const Flag ua = unipotents[k].act(a);
      for (const Flag& b : opposite_a)
        if (relative_position(b, ua) == w0) ++count;
    }
    return count;
  });
  return fiber * saturating_power(p, length(w));
}

}  // namespace hochcount
