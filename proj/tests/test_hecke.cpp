#include <random>

#include "doctest.h"
#include "hochcount/error.hpp"
#include "hochcount/hecke.hpp"

using namespace hochcount;

namespace {

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

const IntPolynomial kQ{0, 1};
const IntPolynomial kQMinus1{-1, 1};

HeckeElement T(const Permutation& w) { return HeckeElement::basis(w); }

}  // namespace

TEST_CASE("multiplication by a generator") {
  const auto e = Permutation::identity(2);
  const auto s = P({2, 1});
  CHECK(mul_by_generator(T(e), 1) == T(s));

  HeckeElement s_squared(2);
  s_squared.add_term(s, kQMinus1);
  s_squared.add_term(e, kQ);
  CHECK(mul_by_generator(T(s), 1) == s_squared);

  // T_s^3 = (q^2 - q + 1) T_s + (q^2 - q) T_e
  const HeckeElement cube = mul_by_generator(s_squared, 1);
  CHECK(cube.coefficient(s) == IntPolynomial{1, -1, 1});
  CHECK(cube.coefficient(e) == IntPolynomial{0, -1, 1});

  CHECK_THROWS_AS(mul_by_generator(T(s), 0), InvalidInput);
  CHECK_THROWS_AS(mul_by_generator(T(s), 2), InvalidInput);
}

TEST_CASE("left generator multiplication matches mul") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : enumerate_permutations(n))
      for (int i = 1; i < n; ++i) {
        CHECK(generator_mul(i, T(w)) == mul(T(simple_reflection(n, i)), T(w)));
        CHECK(mul_by_generator(T(w), i) == mul(T(w), T(simple_reflection(n, i))));
      }
}

TEST_CASE("products") {
  const auto e = Permutation::identity(2);
  const auto s = P({2, 1});
  HeckeElement h(2);
  h.add_term(s, IntPolynomial{3, 0, 1});
  h.add_term(e, IntPolynomial{-5});
  CHECK(mul(T(e), h) == h);
  CHECK(mul(h, T(e)) == h);

  HeckeElement expected(2);
  expected.add_term(s, kQMinus1);
  expected.add_term(e, kQ);
  CHECK(mul(T(s), T(s)) == expected);
  CHECK(mul(T(longest_element(2)), T(longest_element(2))) == expected);
  CHECK_THROWS_AS(mul(T(e), T(Permutation::identity(3))), InvalidInput);
}

TEST_CASE("structure coefficients") {
  const auto e = Permutation::identity(2);
  const auto s = P({2, 1});
  CHECK(structure_coefficient(s, s, e) == kQ);
  CHECK(structure_coefficient(s, s, s) == kQMinus1);
  const auto w0 = longest_element(3);
  CHECK(structure_coefficient(w0, w0, Permutation::identity(3)) == IntPolynomial{0, 0, 0, 1});
  CHECK(structure_coefficient(e, e, s).is_zero());
}

TEST_CASE("square of T_w0") {
  const HeckeElement sq2 = t_w0_squared(2);
  CHECK(sq2.support_size() == 2);
  CHECK(sq2.coefficient(Permutation::identity(2)) == kQ);
  CHECK(sq2.coefficient(P({2, 1})) == kQMinus1);
  CHECK(t_w0_squared(3).coefficient(Permutation::identity(3)) == IntPolynomial{0, 0, 0, 1});
  for (int n = 1; n <= 6; ++n) {
    const HeckeElement sq = t_w0_squared(n);
    CHECK(sq.coefficient(Permutation::identity(n)) == IntPolynomial::monomial(1, n * (n - 1) / 2));
    for (const auto& [w, value] : specialize(sq, 1)) CHECK(value == (w.is_identity() ? 1 : 0));
  }
  CHECK_THROWS_AS(t_w0_squared(9), ResourceLimit);
}

TEST_CASE("specialize") {
  const HeckeElement sq2 = t_w0_squared(2);
  const auto at1 = specialize(sq2, 1);
  CHECK(at1.size() == 2);
  CHECK(at1.at(Permutation::identity(2)) == 1);
  CHECK(at1.at(P({2, 1})) == 0);
  const auto at2 = specialize(sq2, 2);
  CHECK(at2.at(Permutation::identity(2)) == 2);
  CHECK(at2.at(P({2, 1})) == 1);
  const auto unit = specialize(T(Permutation::identity(3)), 7);
  CHECK(unit.size() == 1);
  CHECK(unit.at(Permutation::identity(3)) == 1);
}

TEST_CASE("associativity on random basis triples") {
  std::mt19937 rng(12345);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);  // 2..5
    const auto& all = WeylGroup::get(n)->elements();
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    CHECK(mul(mul(T(a), T(b)), T(c)) == mul(T(a), mul(T(b), T(c))));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("q = 1 gives the group algebra") {
  std::mt19937 rng(54321);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto& all = WeylGroup::get(n)->elements();
    const auto& u = all[rng() % all.size()];
    const auto& v = all[rng() % all.size()];
    const auto values = specialize(mul(T(u), T(v)), 1);
    const Permutation uv = compose(u, v);
    for (const auto& [w, value] : values) CHECK(value == (w == uv ? 1 : 0));
    CHECK(values.count(uv) == 1);
  }
}

// As polynomials in q the coefficients can be negative (c^s_{s,s} = q - 1);
// in q - 1 they are not.
TEST_CASE("structure coefficients are nonnegative in q - 1") {
  const IntPolynomial shift{1, 1};  // q = t + 1
  for (int n = 1; n <= 4; ++n) {
    const auto& all = WeylGroup::get(n)->elements();
    for (const auto& u : all)
      for (const auto& v : all)
        for (const auto& [w, c] : mul(T(u), T(v)).terms()) {
          IntPolynomial in_t;
          for (auto it = c.coefficients().rbegin(); it != c.coefficients().rend(); ++it)
            in_t = in_t * shift + IntPolynomial(std::vector<mpz_class>{*it});
          for (const auto& x : in_t.coefficients()) CHECK(x >= 0);
          for (long q = 1; q <= 5; ++q) CHECK(c.evaluate(q) >= 0);
        }
  }
}
