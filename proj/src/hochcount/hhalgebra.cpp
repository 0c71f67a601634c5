#include "hochcount/hhalgebra.hpp"

#include <algorithm>
#include <set>

#include "hochcount/error.hpp"
#include "json.hpp"

namespace hochcount {

namespace {

using Dense = std::vector<std::int64_t>;

Dense to_dense(const AlgebraPresentation::LinearCombination& combo, std::size_t d) {
  Dense v(d, 0);
  for (const auto& [index, coeff] : combo) v[index] += coeff;
  return v;
}

Dense product(const AlgebraPresentation& a, const Dense& x, const Dense& y) {
  Dense out(a.dim(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      for (const auto& [k, c] : a.table[i][j]) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

Dense unit_vector(std::size_t d, std::size_t i) {
  Dense v(d, 0);
  v[i] = 1;
  return v;
}

std::string describe(const AlgebraPresentation& a, const Dense& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != 1) s += std::to_string(v[i]) + "*";
    s += a.basis[i];
  }
  return s.empty() ? "0" : s;
}

std::vector<std::string> shape_violations(const AlgebraPresentation& a) {
  std::vector<std::string> out;
  const std::size_t d = a.dim();
  if (d == 0) out.push_back("algebra has empty basis");
  if (a.table.size() != d) out.push_back("product table has " + std::to_string(a.table.size()) + " rows, expected " + std::to_string(d));
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    if (a.table[i].size() != d) {
      out.push_back("product table row " + std::to_string(i) + " has " + std::to_string(a.table[i].size()) + " entries");
      continue;
    }
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : a.table[i][j])
        if (k >= d) out.push_back("product " + std::to_string(i) + "*" + std::to_string(j) + " names basis index " + std::to_string(k));
  }
  if (a.idempotents.empty()) out.push_back("no idempotents given");
  std::set<std::size_t> seen;
  for (std::size_t e : a.idempotents) {
    if (e >= d) out.push_back("idempotent index " + std::to_string(e) + " out of range");
    if (!seen.insert(e).second) out.push_back("idempotent index " + std::to_string(e) + " listed twice");
  }
  for (std::size_t b = 0; b < d; ++b) {
    if (a.is_idempotent(b)) {
      if (a.source.count(b) || a.target.count(b))
        out.push_back("idempotent " + a.basis[b] + " must not carry source/target");
      continue;
    }
    for (const auto* map : {&a.source, &a.target}) {
      auto it = map->find(b);
      if (it == map->end())
        out.push_back("basis element " + a.basis[b] + " lacks " + (map == &a.source ? "source" : "target"));
      else if (it->second >= a.vertex_count())
        out.push_back("basis element " + a.basis[b] + " has vertex " + std::to_string(it->second) + " out of range");
    }
  }
  for (const auto* map : {&a.source, &a.target})
    for (const auto& [b, v] : *map)
      if (b >= d) out.push_back("source/target given for basis index " + std::to_string(b) + " out of range");
  return out;
}

// Vertex bookkeeping shared by both cochain models.
struct Grading {
  std::vector<std::size_t> src, tgt;
  std::vector<std::size_t> position_in_hom;
  std::vector<std::vector<std::vector<std::size_t>>> hom;  // hom[t][s]

  explicit Grading(const AlgebraPresentation& a) : src(a.dim()), tgt(a.dim()), position_in_hom(a.dim()) {
    const std::size_t n = a.vertex_count();
    for (std::size_t v = 0; v < n; ++v) src[a.idempotents[v]] = tgt[a.idempotents[v]] = v;
    for (const auto& [b, v] : a.source) src[b] = v;
    for (const auto& [b, v] : a.target) tgt[b] = v;
    hom.assign(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t x = 0; x < a.dim(); ++x) {
      position_in_hom[x] = hom[tgt[x]][src[x]].size();
      hom[tgt[x]][src[x]].push_back(x);
    }
  }
};

// Words b_k ... b_1 in the non-idempotent basis with s(b_{m+1}) = t(b_m).
// letters[0] is b_1.
struct Word {
  std::vector<std::size_t> letters;
  std::size_t source;
  std::size_t target;
};

class RelativeComplex {
 public:
  RelativeComplex(const AlgebraPresentation& a, int max_length, std::size_t cap) : algebra_(a), grading_(a) {
    degrees_.resize(max_length + 1);
    for (std::size_t v = 0; v < a.vertex_count(); ++v) degrees_[0].words.push_back({{}, v, v});
    finish_degree(0, cap);
    std::vector<std::size_t> arrows;
    for (std::size_t b = 0; b < a.dim(); ++b)
      if (!a.is_idempotent(b)) arrows.push_back(b);
    for (int k = 1; k <= max_length; ++k) {
      auto& next = degrees_[k];
      if (k == 1) {
        for (std::size_t b : arrows) next.words.push_back({{b}, grading_.src[b], grading_.tgt[b]});
      } else {
        for (const Word& w : degrees_[k - 1].words)
          for (std::size_t b : arrows)
            if (grading_.src[b] == w.target) {
              Word extended = w;
              extended.letters.push_back(b);
              extended.target = grading_.tgt[b];
              next.words.push_back(std::move(extended));
            }
      }
      finish_degree(k, cap);
    }
  }

  std::size_t dimension(int k) const { return degrees_[k].dim; }

  SparseIntMatrix differential(int k) const {
    const Degree& lower = degrees_[k];
    const Degree& upper = degrees_[k + 1];
    SparseIntMatrix d(upper.dim, lower.dim);
    const auto& table = algebra_.table;
    for (std::size_t wi = 0; wi < upper.words.size(); ++wi) {
      const Word& word = upper.words[wi];
      const auto& letters = word.letters;
      const std::size_t first = letters.front();
      const std::size_t last = letters.back();

      // b_{k+1} . f(b_k ... b_1)
      {
        const std::size_t inner = k == 0 ? word.source : lookup(k, {letters.begin(), letters.end() - 1});
        const Word& w = lower.words[inner];
        for (std::size_t x : grading_.hom[w.target][w.source])
          for (const auto& [y, c] : table[last][x]) d.add(row(upper, wi, y), column(lower, inner, x), c);
      }
      // interior products b_{m+1} b_m
      for (int m = 1; m <= k; ++m) {
        const int sign = (k + 1 - m) % 2 == 0 ? 1 : -1;
        for (const auto& [z, c] : table[letters[m]][letters[m - 1]]) {
          if (algebra_.is_idempotent(z)) throw Error("product of two elements of J has an idempotent component");
          std::vector<std::size_t> merged(letters.begin(), letters.begin() + (m - 1));
          merged.push_back(z);
          merged.insert(merged.end(), letters.begin() + (m + 1), letters.end());
          const std::size_t inner = lookup(k, merged);
          for (std::size_t x : grading_.hom[word.target][word.source])
            d.add(row(upper, wi, x), column(lower, inner, x), sign * c);
        }
      }
      // f(b_{k+1} ... b_2) . b_1
      {
        const int sign = (k + 1) % 2 == 0 ? 1 : -1;
        const std::size_t inner = k == 0 ? word.target : lookup(k, {letters.begin() + 1, letters.end()});
        const Word& w = lower.words[inner];
        for (std::size_t x : grading_.hom[w.target][w.source])
          for (const auto& [y, c] : table[x][first]) d.add(row(upper, wi, y), column(lower, inner, x), sign * c);
      }
    }
    return d;
  }

 private:
  struct Degree {
    std::vector<Word> words;
    std::map<std::vector<std::size_t>, std::size_t> index;
    std::vector<std::size_t> offsets;
    std::size_t dim = 0;
  };

  void finish_degree(int k, std::size_t cap) {
    Degree& deg = degrees_[k];
    deg.offsets.reserve(deg.words.size());
    for (std::size_t i = 0; i < deg.words.size(); ++i) {
      const Word& w = deg.words[i];
      if (k > 0) deg.index.emplace(w.letters, i);
      deg.offsets.push_back(deg.dim);
      deg.dim += grading_.hom[w.target][w.source].size();
      if (deg.dim > cap)
        throw ResourceLimit("cochain space C^" + std::to_string(k) + " exceeds the cap of " + std::to_string(cap));
    }
  }

  std::size_t lookup(int k, const std::vector<std::size_t>& letters) const {
    auto it = degrees_[k].index.find(letters);
    if (it == degrees_[k].index.end()) throw Error("word produced by the differential is not composable");
    return it->second;
  }

  std::size_t row(const Degree& deg, std::size_t word, std::size_t y) const {
    const Word& w = deg.words[word];
    if (grading_.src[y] != w.source || grading_.tgt[y] != w.target)
      throw Error("product leaves the vertex grading");
    return deg.offsets[word] + grading_.position_in_hom[y];
  }
  std::size_t column(const Degree& deg, std::size_t word, std::size_t x) const {
    return deg.offsets[word] + grading_.position_in_hom[x];
  }

  const AlgebraPresentation& algebra_;
  Grading grading_;
  std::vector<Degree> degrees_;
};

void require_valid(const AlgebraPresentation& a) {
  const auto violations = validate(a);
  if (violations.empty()) return;
  std::string message = "invalid algebra presentation:";
  for (const auto& v : violations) message += "\n  " + v;
  throw InvalidInput(message);
}

template <typename Dimension, typename Differential>
HHReport assemble_report(int max_degree, Dimension dimension, Differential differential) {
  if (max_degree < 0) throw InvalidInput("max degree must be nonnegative");
  HHReport report;
  report.max_degree = max_degree;
  std::vector<SparseIntMatrix> ds;
  for (int k = 0; k <= max_degree + 1; ++k) report.cochain_dims.push_back(dimension(k));
  for (int k = 0; k <= max_degree; ++k) {
    ds.push_back(differential(k));
    const std::size_t rank = rank_over_rationals(ds.back());
    const std::size_t check = rank_mod_prime(ds.back(), kCheckPrime);
    if (rank != check)
      throw Error("rank of d^" + std::to_string(k) + " is " + std::to_string(rank) + " over Q but " +
                  std::to_string(check) + " mod " + std::to_string(kCheckPrime));
    report.ranks.push_back(rank);
  }
  for (int k = 0; k <= max_degree; ++k) {
    const std::size_t previous = k == 0 ? 0 : report.ranks[k - 1];
    report.dims.push_back(report.cochain_dims[k] - report.ranks[k] - previous);
  }
  for (int k = 0; k + 1 <= max_degree; ++k) report.d_squared_zero.push_back((ds[k + 1] * ds[k]).is_zero());
  return report;
}

}  // namespace

bool AlgebraPresentation::is_idempotent(std::size_t index) const {
  return std::find(idempotents.begin(), idempotents.end(), index) != idempotents.end();
}

std::vector<std::string> validate(const AlgebraPresentation& a) {
  std::vector<std::string> out = shape_violations(a);
  if (!out.empty()) return out;
  const std::size_t d = a.dim();

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Dense ij = to_dense(a.table[i][j], d);
        const Dense jk = to_dense(a.table[j][k], d);
        const Dense left = product(a, ij, unit_vector(d, k));
        const Dense right = product(a, unit_vector(d, i), jk);
        if (left != right)
          out.push_back("associativity fails on (" + a.basis[i] + ", " + a.basis[j] + ", " + a.basis[k] + "): (" +
                        describe(a, left) + ") vs (" + describe(a, right) + ")");
      }

  for (std::size_t u = 0; u < a.vertex_count(); ++u)
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      const std::size_t eu = a.idempotents[u], ev = a.idempotents[v];
      const Dense got = to_dense(a.table[eu][ev], d);
      const Dense want = u == v ? unit_vector(d, eu) : Dense(d, 0);
      if (got != want)
        out.push_back("idempotents not orthogonal: " + a.basis[eu] + "*" + a.basis[ev] + " = " + describe(a, got) +
                      ", expected " + describe(a, want));
    }

  Dense unit(d, 0);
  for (std::size_t e : a.idempotents) unit[e] = 1;
  for (std::size_t b = 0; b < d; ++b) {
    const Dense basis = unit_vector(d, b);
    if (product(a, unit, basis) != basis || product(a, basis, unit) != basis)
      out.push_back("idempotents do not sum to the unit: fails on " + a.basis[b]);
  }

  for (const auto& [b, s] : a.source) {
    const std::size_t t = a.target.at(b);
    const Dense basis = unit_vector(d, b);
    if (to_dense(a.table[a.idempotents[t]][b], d) != basis)
      out.push_back("grading: " + a.basis[a.idempotents[t]] + "*" + a.basis[b] + " != " + a.basis[b]);
    if (to_dense(a.table[b][a.idempotents[s]], d) != basis)
      out.push_back("grading: " + a.basis[b] + "*" + a.basis[a.idempotents[s]] + " != " + a.basis[b]);
  }

  for (const auto& [b1, s1] : a.source)
    for (const auto& [b2, s2] : a.source) {
      const Dense prod = to_dense(a.table[b1][b2], d);
      for (std::size_t e : a.idempotents)
        if (prod[e] != 0)
          out.push_back("ideal closure: " + a.basis[b1] + "*" + a.basis[b2] + " = " + describe(a, prod) +
                        " leaves the span of non-idempotent elements");
    }
  return out;
}

std::vector<std::string> builtin_algebra_names() { return {"ground-field", "semisimple-2", "sl2-catO"}; }

AlgebraPresentation builtin_algebra(std::string_view name) {
  AlgebraPresentation a;
  auto set = [&a](std::size_t i, std::size_t j, std::size_t k) { a.table[i][j] = {{k, 1}}; };
  auto resize = [&a] { a.table.assign(a.dim(), std::vector<AlgebraPresentation::LinearCombination>(a.dim())); };
  if (name == "ground-field") {
    a.basis = {"e1"};
    a.idempotents = {0};
    resize();
    set(0, 0, 0);
  } else if (name == "semisimple-2") {
    a.basis = {"e1", "e2"};
    a.idempotents = {0, 1};
    resize();
    set(0, 0, 0);
    set(1, 1, 1);
  } else if (name == "sl2-catO") {
    // Quiver 1 -a-> 2 -b-> 1; c = a b is a loop at 2 and b a = 0.
    enum : std::size_t { e1, e2, a_, b_, c_ };
    a.basis = {"e1", "e2", "a", "b", "c"};
    a.idempotents = {e1, e2};
    a.source = {{a_, 0}, {b_, 1}, {c_, 1}};
    a.target = {{a_, 1}, {b_, 0}, {c_, 1}};
    resize();
    set(e1, e1, e1);
    set(e2, e2, e2);
    set(e2, a_, a_);
    set(a_, e1, a_);
    set(e1, b_, b_);
    set(b_, e2, b_);
    set(e2, c_, c_);
    set(c_, e2, c_);
    set(a_, b_, c_);
  } else {
    throw InvalidInput("unknown builtin algebra '" + std::string(name) + "'");
  }
  return a;
}

AlgebraPresentation algebra_from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("algebra file is not valid JSON: ") + e.what());
  }
  AlgebraPresentation a;
  try {
    const std::size_t d = doc.at("dim").get<std::size_t>();
    a.basis = doc.at("basis").get<std::vector<std::string>>();
    if (a.basis.size() != d)
      throw InvalidInput("\"dim\" is " + std::to_string(d) + " but \"basis\" has " + std::to_string(a.basis.size()) + " labels");
    a.idempotents = doc.at("idempotents").get<std::vector<std::size_t>>();
    for (const char* key : {"source", "target"}) {
      auto& map = std::string_view(key) == "source" ? a.source : a.target;
      const json entries = doc.value(key, json::object());
      if (!entries.is_object()) throw InvalidInput(std::string("\"") + key + "\" must be an object");
      for (const auto& [k, v] : entries.items()) {
        std::size_t index;
        try {
          index = std::stoul(k);
        } catch (const std::exception&) {
          throw InvalidInput(std::string("\"") + key + "\" key '" + k + "' is not a basis index");
        }
        map[index] = v.get<std::size_t>();
      }
    }
    const json& table = doc.at("table");
    if (!table.is_array()) throw InvalidInput("\"table\" must be an array");
    for (const auto& row : table) {
      if (!row.is_array()) throw InvalidInput("\"table\" rows must be arrays");
      std::vector<AlgebraPresentation::LinearCombination> parsed;
      for (const auto& entry : row) {
        AlgebraPresentation::LinearCombination combo;
        for (const auto& term : entry) {
          if (!term.is_array() || term.size() != 2) throw InvalidInput("table terms must be [index, coefficient] pairs");
          combo.emplace_back(term[0].get<std::size_t>(), term[1].get<std::int64_t>());
        }
        parsed.push_back(std::move(combo));
      }
      a.table.push_back(std::move(parsed));
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed algebra presentation: ") + e.what());
  }
  return a;
}

std::string algebra_to_json(const AlgebraPresentation& a) {
  using nlohmann::json;
  json doc;
  doc["dim"] = a.dim();
  doc["basis"] = a.basis;
  doc["idempotents"] = a.idempotents;
  json source = json::object(), target = json::object();
  for (const auto& [b, v] : a.source) source[std::to_string(b)] = v;
  for (const auto& [b, v] : a.target) target[std::to_string(b)] = v;
  doc["source"] = source;
  doc["target"] = target;
  json table = json::array();
  for (const auto& row : a.table) {
    json r = json::array();
    for (const auto& combo : row) {
      json terms = json::array();
      for (const auto& [k, c] : combo) terms.push_back({k, c});
      r.push_back(terms);
    }
    table.push_back(r);
  }
  doc["table"] = table;
  return doc.dump(2);
}

AlgebraPresentation permute_arrows(const AlgebraPresentation& a, std::span<const std::size_t> order) {
  std::vector<std::size_t> arrows;
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (!a.is_idempotent(b)) arrows.push_back(b);
  if (order.size() != arrows.size()) throw InvalidInput("arrow permutation has the wrong size");
  std::vector<std::size_t> image(a.dim());
  for (std::size_t b = 0; b < a.dim(); ++b) image[b] = b;
  std::vector<bool> used(arrows.size(), false);
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (order[k] >= arrows.size() || used[order[k]]) throw InvalidInput("arrow order is not a permutation");
    used[order[k]] = true;
    image[arrows[k]] = arrows[order[k]];
  }
  AlgebraPresentation out;
  out.basis.resize(a.dim());
  for (std::size_t b = 0; b < a.dim(); ++b) out.basis[image[b]] = a.basis[b];
  out.idempotents = a.idempotents;
  for (const auto& [b, v] : a.source) out.source[image[b]] = v;
  for (const auto& [b, v] : a.target) out.target[image[b]] = v;
  out.table.assign(a.dim(), std::vector<AlgebraPresentation::LinearCombination>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.table[i][j]) out.table[image[i]][image[j]].emplace_back(image[k], c);
  return out;
}

std::size_t center_dimension(const AlgebraPresentation& a) {
  require_valid(a);
  const std::size_t d = a.dim();
  // Unknown x = sum_j x_j basis_j; one equation per (i, y): (x b_i - b_i x)_y = 0.
  SparseIntMatrix m(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [y, c] : a.table[j][i]) m.add(i * d + y, j, c);
      for (const auto& [y, c] : a.table[i][j]) m.add(i * d + y, j, -c);
    }
  return d - rank_over_rationals(m);
}

std::size_t cochain_dimension(const AlgebraPresentation& a, int k, std::size_t cap) {
  if (k < 0) throw InvalidInput("cochain degree must be nonnegative");
  require_valid(a);
  return RelativeComplex(a, k, cap).dimension(k);
}

SparseIntMatrix differential_matrix(const AlgebraPresentation& a, int k, std::size_t cap) {
  if (k < 0) throw InvalidInput("cochain degree must be nonnegative");
  require_valid(a);
  return RelativeComplex(a, k + 1, cap).differential(k);
}

HHReport hh_dimensions(const AlgebraPresentation& a, int max_degree, std::size_t cap) {
  if (max_degree < 0) throw InvalidInput("max degree must be nonnegative");
  require_valid(a);
  const RelativeComplex complex(a, max_degree + 1, cap);
  return assemble_report(
      max_degree, [&](int k) { return complex.dimension(k); }, [&](int k) { return complex.differential(k); });
}

HHReport hh_dimensions_full_bar(const AlgebraPresentation& a, int max_degree, std::size_t cap) {
  if (max_degree < 0) throw InvalidInput("max degree must be nonnegative");
  require_valid(a);
  const std::size_t d = a.dim();
  const std::size_t dropped = a.idempotents.back();  // 1 - (other idempotents)
  std::vector<std::size_t> quotient;                  // lifts of a basis of A / k.1
  for (std::size_t b = 0; b < d; ++b)
    if (b != dropped) quotient.push_back(b);
  const std::size_t qd = quotient.size();

  auto tuples = [&](int k) {
    std::size_t count = 1;
    for (int i = 0; i < k; ++i) {
      count *= qd;
      if (count * d > cap)
        throw ResourceLimit("bar cochain space C^" + std::to_string(k) + " exceeds the cap of " + std::to_string(cap));
    }
    return count;
  };
  auto dimension = [&](int k) { return tuples(k) * d; };

  // Coordinates of the class of v in A / k.1 with respect to `quotient`.
  auto project = [&](const Dense& v) {
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (std::size_t p = 0; p < qd; ++p) {
      const std::size_t b = quotient[p];
      const std::int64_t c = v[b] - (a.is_idempotent(b) ? v[dropped] : 0);
      if (c != 0) out.emplace_back(p, c);
    }
    return out;
  };

  auto differential = [&](int k) {
    const std::size_t lower_count = tuples(k);
    const std::size_t upper_count = tuples(k + 1);
    SparseIntMatrix m(upper_count * d, lower_count * d);
    std::vector<std::size_t> digits(k + 1);
    for (std::size_t t = 0; t < upper_count; ++t) {
      std::size_t rest = t;
      for (int i = k; i >= 0; --i) {
        digits[i] = rest % qd;
        rest /= qd;
      }
      // tuple index of digits[from..to)
      auto encode = [&](std::size_t from, std::size_t to) {
        std::size_t idx = 0;
        for (std::size_t i = from; i < to; ++i) idx = idx * qd + digits[i];
        return idx;
      };
      const std::size_t first = quotient[digits.front()];
      const std::size_t last = quotient[digits.back()];
      const std::size_t tail = encode(1, k + 1);
      const std::size_t head = encode(0, k);
      for (std::size_t x = 0; x < d; ++x) {
        for (const auto& [y, c] : a.table[first][x]) m.add(t * d + y, tail * d + x, c);
        const int sign = (k + 1) % 2 == 0 ? 1 : -1;
        for (const auto& [y, c] : a.table[x][last]) m.add(t * d + y, head * d + x, sign * c);
      }
      for (int i = 1; i <= k; ++i) {
        const int sign = i % 2 == 0 ? 1 : -1;
        const Dense prod = to_dense(a.table[quotient[digits[i - 1]]][quotient[digits[i]]], d);
        for (const auto& [p, c] : project(prod)) {
          std::size_t merged = 0;
          for (int j = 0; j <= k; ++j) {
            if (j == i) continue;
            merged = merged * qd + (j == i - 1 ? p : digits[j]);
          }
          for (std::size_t x = 0; x < d; ++x) m.add(t * d + x, merged * d + x, sign * c);
        }
      }
    }
    return m;
  };
  return assemble_report(max_degree, dimension, differential);
}

}  // namespace hochcount
