#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hochcount {

class IntPolynomial;

// Largest rank for which the symmetric group is enumerated (8! = 40320).
inline constexpr int kMaxEnumerationRank = 8;

// Element of S_n in one-line notation: window()[i-1] = w(i), values in 1..n.
class Permutation {
 public:
  Permutation() = default;

  // Throws InvalidInput unless the window is a bijection of {1..n}.
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(window_.size()); }
  int operator()(int i) const { return window_[i - 1]; }
  std::span<const int> window() const { return window_; }

  bool is_identity() const;

  // "2,3,1"
  std::string to_string() const;

  // Lexicographic on windows; permutations of different size compare by size
  // first.
  auto operator<=>(const Permutation& other) const {
    if (auto c = window_.size() <=> other.window_.size(); c != 0) return c;
    return window_ <=> other.window_;
  }
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> window_;
};

// (u after v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);

// Number of inversions.
int length(const Permutation& w);

// Adjacent transposition s_i, 1 <= i < n.
Permutation simple_reflection(int n, int i);
Permutation longest_element(int n);

// All n! permutations in lexicographic order. n must be at most
// kMaxEnumerationRank.
std::vector<Permutation> enumerate_permutations(int n);

// Word i_1..i_k with w = s_{i_1} ... s_{i_k}, k = length(w). Built by
// repeatedly stripping the smallest right descent.
std::vector<int> reduced_word(const Permutation& w);

// s_{i_1} ... s_{i_k} for an arbitrary (not necessarily reduced) word.
Permutation from_word(int n, std::span<const int> word);

// Sum over S_n of t^{length(w)}.
IntPolynomial length_generating_function(int n);

std::uint64_t factorial(int n);

// Lookup tables for S_n, shared by the Hecke algebra code. Elements are
// indexed by their lexicographic rank.
class WeylGroup {
 public:
  // Cached per n; thread safe.
  static std::shared_ptr<const WeylGroup> get(int n);

  int rank() const { return n_; }
  std::size_t order() const { return elements_.size(); }

  const Permutation& element(std::size_t index) const { return elements_[index]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t index_of(const Permutation& w) const;

  int length(std::size_t index) const { return lengths_[index]; }
  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return order() - 1; }
  std::size_t inverse_index(std::size_t index) const { return inverses_[index]; }

  // Index of w * s_i (swap positions i, i+1) and s_i * w (swap values i, i+1).
  std::size_t right_multiply(std::size_t index, int i) const {
    return right_[(i - 1) * order() + index];
  }
  std::size_t left_multiply(std::size_t index, int i) const {
    return left_[(i - 1) * order() + index];
  }

  explicit WeylGroup(int n);

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::vector<int> lengths_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> left_;
};

}  // namespace hochcount
