#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hochcount/exact_rank.hpp"

namespace hochcount {

// A finite-dimensional algebra by structure constants, with a complete set
// of orthogonal idempotents e_v (one per vertex v) and every other basis
// element b living in e_{target(b)} A e_{source(b)}.
struct AlgebraPresentation {
  using LinearCombination = std::vector<std::pair<std::size_t, std::int64_t>>;

  std::vector<std::string> basis;
  // idempotents[v] is the basis index of e_v.
  std::vector<std::size_t> idempotents;
  // Non-idempotent basis index -> vertex.
  std::map<std::size_t, std::size_t> source;
  std::map<std::size_t, std::size_t> target;
  // table[i][j] = basis[i] * basis[j]
  std::vector<std::vector<LinearCombination>> table;

  std::size_t dim() const { return basis.size(); }
  std::size_t vertex_count() const { return idempotents.size(); }
  bool is_idempotent(std::size_t index) const;
};

// Every violated axiom, one message per witness; empty when the
// presentation is usable. Checks shape, associativity on all triples,
// orthogonality and completeness of the idempotents, the vertex grading of
// the other basis elements, and closure of their span J under products.
std::vector<std::string> validate(const AlgebraPresentation& algebra);

// "ground-field", "semisimple-2", or "sl2-catO". Throws InvalidInput otherwise.
AlgebraPresentation builtin_algebra(std::string_view name);
std::vector<std::string> builtin_algebra_names();

// JSON presentation format:
//   {"dim": d, "basis": [labels], "idempotents": [indices],
//    "source": {"<index>": vertex, ...}, "target": {...},
//    "table": d x d array of [[index, coefficient], ...] lists}
// Vertices are positions in "idempotents". Throws InvalidInput on malformed
// input; axioms are left to validate().
AlgebraPresentation algebra_from_json(std::string_view text);
std::string algebra_to_json(const AlgebraPresentation& algebra);

// Reorders the non-idempotent basis elements: the element at the k-th
// non-idempotent position moves to the order[k]-th one.
AlgebraPresentation permute_arrows(const AlgebraPresentation& algebra, std::span<const std::size_t> order);

// Dimension of the centre, from the linear system x b = b x over all basis b.
std::size_t center_dimension(const AlgebraPresentation& algebra);

inline constexpr std::size_t kDefaultCochainCap = 100'000;

// Dimension of C^k = Hom_{E-E}(J^{(x)_E k}, A) for E the span of the
// idempotents: one copy of e_t A e_s per composable word of k elements of J.
std::size_t cochain_dimension(const AlgebraPresentation& algebra, int k, std::size_t cap = kDefaultCochainCap);

// d^k : C^k -> C^{k+1}; columns index C^k, rows C^{k+1}.
SparseIntMatrix differential_matrix(const AlgebraPresentation& algebra, int k, std::size_t cap = kDefaultCochainCap);

struct HHReport {
  int max_degree = 0;
  std::vector<std::size_t> dims;          // dim HH^k, k = 0..max_degree
  std::vector<std::size_t> cochain_dims;  // dim C^k, k = 0..max_degree+1
  std::vector<std::size_t> ranks;         // rank d^k, k = 0..max_degree
  std::vector<bool> d_squared_zero;       // d^{k+1} d^k == 0, k = 0..max_degree-1
};

// Throws InvalidInput when validate() reports violations, ResourceLimit when a
// cochain space exceeds cap, and Error if the rational rank and the rank mod
// kCheckPrime disagree.
HHReport hh_dimensions(const AlgebraPresentation& algebra, int max_degree, std::size_t cap = kDefaultCochainCap);

// Same numbers from the normalized bar complex over the ground field,
// Hom(Abar^{(x)k}, A) with Abar = A / k.1. Independent of the idempotents;
// sizes grow as (dim-1)^k * dim, so keep max_degree small.
HHReport hh_dimensions_full_bar(const AlgebraPresentation& algebra, int max_degree,
                                std::size_t cap = kDefaultCochainCap);

}  // namespace hochcount
