#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "hochcount/error.hpp"
#include "hochcount/hhalgebra.hpp"

using namespace hochcount;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(HOCHCOUNT_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool mentions(const std::vector<std::string>& messages, const std::string& needle) {
  return std::any_of(messages.begin(), messages.end(),
                     [&](const std::string& m) { return m.find(needle) != std::string::npos; });
}

// k[x]/(x^2): one vertex, one loop squaring to zero.
AlgebraPresentation dual_numbers() {
  AlgebraPresentation a;
  a.basis = {"e", "x"};
  a.idempotents = {0};
  a.source = {{1, 0}};
  a.target = {{1, 0}};
  a.table = {{{{0, 1}}, {{1, 1}}}, {{{1, 1}}, {}}};
  return a;
}

// Path algebra of 1 -> 2 -> 3 with basis e1, e2, e3, x, y, yx.
AlgebraPresentation a3_path() {
  AlgebraPresentation a;
  a.basis = {"e1", "e2", "e3", "x", "y", "yx"};
  a.idempotents = {0, 1, 2};
  a.source = {{3, 0}, {4, 1}, {5, 0}};
  a.target = {{3, 1}, {4, 2}, {5, 2}};
  a.table.assign(6, std::vector<AlgebraPresentation::LinearCombination>(6));
  auto set = [&a](std::size_t i, std::size_t j, std::size_t k) { a.table[i][j] = {{k, 1}}; };
  for (std::size_t v = 0; v < 3; ++v) set(v, v, v);
  set(1, 3, 3);
  set(3, 0, 3);
  set(2, 4, 4);
  set(4, 1, 4);
  set(2, 5, 5);
  set(5, 0, 5);
  set(4, 3, 5);
  return a;
}

// 2x2 matrices: associative, but e12 e21 = e11 leaves the span of e12, e21.
AlgebraPresentation matrix_algebra() {
  AlgebraPresentation a;
  a.basis = {"e11", "e22", "e12", "e21"};
  a.idempotents = {0, 1};
  a.source = {{2, 1}, {3, 0}};
  a.target = {{2, 0}, {3, 1}};
  a.table.assign(4, std::vector<AlgebraPresentation::LinearCombination>(4));
  // e_ij e_kl = [j = k] e_il
  const std::size_t idx[2][2] = {{0, 2}, {3, 1}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) a.table[idx[i][j]][idx[k][l]] = {{idx[i][l], 1}};
  return a;
}

}  // namespace

TEST_CASE("builtin algebras validate") {
  for (const auto& name : builtin_algebra_names()) CHECK(validate(builtin_algebra(name)).empty());
  CHECK(validate(dual_numbers()).empty());
  CHECK(validate(a3_path()).empty());
  CHECK(builtin_algebra("ground-field").dim() == 1);
  CHECK(builtin_algebra("semisimple-2").source.empty());
  CHECK(builtin_algebra("sl2-catO").dim() == 5);
  CHECK_THROWS_AS(builtin_algebra("sl3-catO"), InvalidInput);
}

TEST_CASE("validate reports violations") {
  AlgebraPresentation bad = builtin_algebra("sl2-catO");
  bad.table[0][0] = {{1, 1}};
  const auto v = validate(bad);
  CHECK(mentions(v, "not orthogonal: e1*e1"));

  const auto m = validate(matrix_algebra());
  CHECK(m.size() >= 1);
  CHECK(mentions(m, "ideal closure: e12*e21"));
  CHECK_FALSE(mentions(m, "associativity"));

  // x y = x and every other product of x, y zero: (x y) y = x but x (y y) = 0.
  AlgebraPresentation nonassoc;
  nonassoc.basis = {"e", "x", "y"};
  nonassoc.idempotents = {0};
  nonassoc.source = {{1, 0}, {2, 0}};
  nonassoc.target = {{1, 0}, {2, 0}};
  nonassoc.table.assign(3, std::vector<AlgebraPresentation::LinearCombination>(3));
  for (std::size_t b = 0; b < 3; ++b) nonassoc.table[0][b] = nonassoc.table[b][0] = {{b, 1}};
  nonassoc.table[1][2] = {{1, 1}};
  CHECK(mentions(validate(nonassoc), "associativity"));

  AlgebraPresentation shape = dual_numbers();
  shape.table.pop_back();
  CHECK(mentions(validate(shape), "rows"));
  AlgebraPresentation missing = dual_numbers();
  missing.source.clear();
  CHECK(mentions(validate(missing), "lacks source"));

  CHECK_THROWS_AS(hh_dimensions(bad, 2), InvalidInput);
  CHECK_THROWS_AS(hh_dimensions(matrix_algebra(), 2), InvalidInput);
}

TEST_CASE("cochain dimensions") {
  const auto sl2 = builtin_algebra("sl2-catO");
  CHECK(cochain_dimension(sl2, 0) == 3);
  CHECK(cochain_dimension(sl2, 1) == 4);
  // Composable pairs (b2, b1): (b, a), (c, a), (a, b), (b, c), (c, c) with
  // hom-space dimensions 1, 1, 2, 1, 2.
  CHECK(cochain_dimension(sl2, 2) == 7);
  const auto ground = builtin_algebra("ground-field");
  for (int k = 1; k <= 4; ++k) CHECK(cochain_dimension(ground, k) == 0);
  CHECK(cochain_dimension(ground, 0) == 1);
  CHECK(cochain_dimension(dual_numbers(), 5) == 2);
  CHECK_THROWS_AS(cochain_dimension(sl2, -1), InvalidInput);
  CHECK_THROWS_AS(cochain_dimension(dual_numbers(), 3, 1), ResourceLimit);
}

TEST_CASE("differentials") {
  const auto sl2 = builtin_algebra("sl2-catO");
  const SparseIntMatrix d0 = differential_matrix(sl2, 0);
  CHECK(d0.cols() == 3);
  CHECK(d0.rows() == 4);
  CHECK(d0.cols() - rank_over_rationals(d0) == 2);  // kernel is the centre
  CHECK((differential_matrix(sl2, 1) * d0).is_zero());
  for (int k = 0; k < 3; ++k) CHECK(differential_matrix(builtin_algebra("semisimple-2"), k).is_zero());
}

TEST_CASE("centre") {
  CHECK(center_dimension(builtin_algebra("sl2-catO")) == 2);
  CHECK(center_dimension(builtin_algebra("ground-field")) == 1);
  CHECK(center_dimension(builtin_algebra("semisimple-2")) == 2);
  CHECK(center_dimension(dual_numbers()) == 2);
  CHECK(center_dimension(a3_path()) == 1);
}

TEST_CASE("Hochschild cohomology dimensions") {
  const auto sl2 = hh_dimensions(builtin_algebra("sl2-catO"), 6);
  CHECK(sl2.dims == std::vector<std::size_t>{2, 1, 1, 0, 0, 0, 0});
  CHECK(sl2.cochain_dims.size() == 8);
  CHECK(sl2.ranks.size() == 7);
  CHECK(sl2.dims[0] == center_dimension(builtin_algebra("sl2-catO")));
  CHECK(hh_dimensions(builtin_algebra("ground-field"), 4).dims == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(hh_dimensions(builtin_algebra("semisimple-2"), 4).dims == std::vector<std::size_t>{2, 0, 0, 0, 0});
  CHECK(hh_dimensions(dual_numbers(), 5).dims == std::vector<std::size_t>{2, 1, 1, 1, 1, 1});
  CHECK(hh_dimensions(a3_path(), 3).dims == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK_THROWS_AS(hh_dimensions(dual_numbers(), -1), InvalidInput);
}

TEST_CASE("report bookkeeping") {
  for (const auto& a : {builtin_algebra("sl2-catO"), dual_numbers(), a3_path()}) {
    const HHReport r = hh_dimensions(a, 5);
    for (int k = 0; k <= 5; ++k) {
      const std::size_t prev = k == 0 ? 0 : r.ranks[k - 1];
      CHECK(r.dims[k] == r.cochain_dims[k] - r.ranks[k] - prev);
    }
    CHECK(std::all_of(r.d_squared_zero.begin(), r.d_squared_zero.end(), [](bool b) { return b; }));
    CHECK(r.d_squared_zero.size() == 5);
  }
}

TEST_CASE("relative complex agrees with the full bar complex") {
  for (const auto& a : {builtin_algebra("sl2-catO"), builtin_algebra("semisimple-2"), dual_numbers(), a3_path()}) {
    const HHReport relative = hh_dimensions(a, 3);
    const HHReport bar = hh_dimensions_full_bar(a, 3);
    CHECK(relative.dims == bar.dims);
    CHECK(std::all_of(bar.d_squared_zero.begin(), bar.d_squared_zero.end(), [](bool b) { return b; }));
  }
  CHECK(hh_dimensions_full_bar(builtin_algebra("sl2-catO"), 1).cochain_dims[1] == 4 * 5);
}

TEST_CASE("invariance under reordering arrows") {
  for (const auto& a : {builtin_algebra("sl2-catO"), a3_path()}) {
    const auto expected = hh_dimensions(a, 4).dims;
    std::vector<std::size_t> order(a.dim() - a.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    do {
      const AlgebraPresentation b = permute_arrows(a, order);
      REQUIRE(validate(b).empty());
      CHECK(hh_dimensions(b, 4).dims == expected);
      CHECK(center_dimension(b) == center_dimension(a));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS_AS(permute_arrows(builtin_algebra("sl2-catO"), bad), InvalidInput);
}

TEST_CASE("json format") {
  const auto sl2 = builtin_algebra("sl2-catO");
  const auto round = algebra_from_json(algebra_to_json(sl2));
  CHECK(round.basis == sl2.basis);
  CHECK(round.idempotents == sl2.idempotents);
  CHECK(round.source == sl2.source);
  CHECK(round.target == sl2.target);
  CHECK(round.table == sl2.table);

  const auto fixture = algebra_from_json(read_fixture("sl2-catO.json"));
  CHECK(fixture.table == sl2.table);
  CHECK(hh_dimensions(fixture, 6).dims == std::vector<std::size_t>{2, 1, 1, 0, 0, 0, 0});

  const auto bad = algebra_from_json(read_fixture("bad.json"));
  CHECK_FALSE(validate(bad).empty());

  CHECK_THROWS_AS(algebra_from_json("{"), InvalidInput);
  CHECK_THROWS_AS(algebra_from_json("[]"), InvalidInput);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 2, "basis": ["e"], "idempotents": [0], "table": []})"), InvalidInput);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 1, "basis": ["e"], "idempotents": [0], "table": [[[[0]]]]})"),
                  InvalidInput);
}
