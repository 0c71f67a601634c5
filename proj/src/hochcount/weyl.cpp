#include "hochcount/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "hochcount/error.hpp"
#include "hochcount/polynomial.hpp"

namespace hochcount {

namespace {

void check_rank(int n) {
  if (n < 1) throw InvalidInput("rank must be positive, got " + std::to_string(n));
  if (n > kMaxEnumerationRank)
    throw ResourceLimit("refusing to enumerate S_" + std::to_string(n) + "; limit is n <= " +
                        std::to_string(kMaxEnumerationRank));
}

}  // namespace

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    if (v < 1 || v > n || seen[v]) throw InvalidInput("window " + to_string() + " is not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (window_[i] != i + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(window_[i]);
  }
  return s;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size())
    throw InvalidInput("cannot compose permutations of sizes " + std::to_string(u.size()) + " and " +
                       std::to_string(v.size()));
  std::vector<int> w(u.size());
  for (int i = 1; i <= u.size(); ++i) w[i - 1] = u(v(i));
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> inv(w.size());
  for (int i = 1; i <= w.size(); ++i) inv[w(i) - 1] = i;
  return Permutation(std::move(inv));
}

int length(const Permutation& w) {
  int inversions = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inversions;
  return inversions;
}

Permutation simple_reflection(int n, int i) {
  if (i < 1 || i >= n) throw InvalidInput("generator index " + std::to_string(i) + " out of range for S_" + std::to_string(n));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation longest_element(int n) {
  if (n < 1) throw InvalidInput("rank must be positive");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

std::vector<Permutation> enumerate_permutations(int n) {
  check_rank(n);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> window(w.window().begin(), w.window().end());
  std::vector<int> stripped;
  const int n = w.size();
  for (;;) {
    int descent = 0;
    for (int i = 1; i < n; ++i) {
      if (window[i - 1] > window[i]) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    std::swap(window[descent - 1], window[descent]);
    stripped.push_back(descent);
  }
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

Permutation from_word(int n, std::span<const int> word) {
  std::vector<int> window(n);
  std::iota(window.begin(), window.end(), 1);
  for (int i : word) {
    if (i < 1 || i >= n) throw InvalidInput("generator index " + std::to_string(i) + " out of range for S_" + std::to_string(n));
    std::swap(window[i - 1], window[i]);
  }
  return Permutation(std::move(window));
}

IntPolynomial length_generating_function(int n) {
  auto group = WeylGroup::get(n);
  std::vector<mpz_class> coeffs(n * (n - 1) / 2 + 1);
  for (std::size_t k = 0; k < group->order(); ++k) coeffs[group->length(k)] += 1;
  return IntPolynomial(std::move(coeffs));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::shared_ptr<const WeylGroup> WeylGroup::get(int n) {
  check_rank(n);
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const WeylGroup>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const WeylGroup>(n);
  return slot;
}

WeylGroup::WeylGroup(int n) : n_(n), elements_(enumerate_permutations(n)) {
  const std::size_t order = elements_.size();
  lengths_.resize(order);
  inverses_.resize(order);
  right_.resize((n - 1) * order);
  left_.resize((n - 1) * order);
  for (std::size_t k = 0; k < order; ++k) {
    const Permutation& w = elements_[k];
    lengths_[k] = hochcount::length(w);
    inverses_[k] = index_of(inverse(w));
    std::vector<int> window(w.window().begin(), w.window().end());
    for (int i = 1; i < n; ++i) {
      std::vector<int> r = window;
      std::swap(r[i - 1], r[i]);
      right_[(i - 1) * order + k] = index_of(Permutation(std::move(r)));
      std::vector<int> l = window;
      for (int& v : l) {
        if (v == i)
          v = i + 1;
        else if (v == i + 1)
          v = i;
      }
      left_[(i - 1) * order + k] = index_of(Permutation(std::move(l)));
    }
  }
}

std::size_t WeylGroup::index_of(const Permutation& w) const {
  if (w.size() != n_)
    throw InvalidInput("permutation of size " + std::to_string(w.size()) + " used in S_" + std::to_string(n_));
  // Lexicographic rank via the Lehmer code.
  std::size_t rank = 0;
  for (int i = 1; i <= n_; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n_; ++j)
      if (w(j) < w(i)) ++smaller_after;
    rank = rank * static_cast<std::size_t>(n_ - i + 1) + static_cast<std::size_t>(smaller_after);
  }
  return rank;
}

}  // namespace hochcount
