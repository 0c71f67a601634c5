#include "hochcount/hochcount.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "hochcount/error.hpp"
#include "hochcount/flagfq.hpp"
#include "hochcount/hecke.hpp"
#include "hochcount/hhalgebra.hpp"
#include "hochcount/hochspace.hpp"

struct hc_poly {
  hochcount::IntPolynomial value;
};

struct hc_hecke {
  hochcount::HeckeElement value;
};

struct hc_algebra {
  hochcount::AlgebraPresentation value;
};

namespace {

using namespace hochcount;

thread_local std::string last_error;

template <class F>
hc_status guard(F&& body) {
  try {
    body();
    return HC_OK;
  } catch (const InvalidInput& e) {
    last_error = e.what();
    return HC_ERR_INVALID_INPUT;
  } catch (const ResourceLimit& e) {
    last_error = e.what();
    return HC_ERR_RESOURCE_LIMIT;
  } catch (const NotIntegral& e) {
    last_error = e.what();
    return HC_ERR_NOT_INTEGRAL;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HC_ERR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidInput(std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Permutation perm(int n, const int* window) {
  require(window, "permutation window");
  if (n < 1) throw InvalidInput("rank must be positive");
  return Permutation(std::vector<int>(window, window + n));
}

MatrixFp matrix(int n, std::uint32_t p, const std::uint32_t* entries) {
  require(entries, "matrix");
  if (n < 1) throw InvalidInput("rank must be positive");
  const PrimeField field(p);
  std::vector<std::uint32_t> values(entries, entries + static_cast<std::size_t>(n) * n);
  for (auto& v : values)
    if (v >= p) throw InvalidInput("matrix entry " + std::to_string(v) + " is not reduced mod " + std::to_string(p));
  return MatrixFp(n, field, std::move(values));
}

hc_poly* wrap(IntPolynomial p) { return new hc_poly{std::move(p)}; }

}  // namespace

extern "C" {

const char* hc_version(void) { return HOCHCOUNT_VERSION_STRING; }

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK: return "ok";
    case HC_ERR_INVALID_INPUT: return "invalid input";
    case HC_ERR_RESOURCE_LIMIT: return "resource limit";
    case HC_ERR_NOT_INTEGRAL: return "not integral";
    case HC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hc_last_error(void) { return last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

hc_status hc_poly_from_strings(const char* const* coefficients, size_t count, hc_poly** out) {
  return guard([&] {
    require(out, "out");
    if (count > 0) require(coefficients, "coefficients");
    std::vector<mpz_class> c;
    c.reserve(count);
    for (size_t k = 0; k < count; ++k) {
      require(coefficients[k], "coefficient");
      mpz_class v;
      if (v.set_str(coefficients[k], 10) != 0)
        throw InvalidInput(std::string("not a decimal integer: '") + coefficients[k] + "'");
      c.push_back(std::move(v));
    }
    *out = wrap(IntPolynomial(std::move(c)));
  });
}

void hc_poly_free(hc_poly* p) { delete p; }

int64_t hc_poly_degree(const hc_poly* p) {
  if (p == nullptr) return -1;
  const auto d = p->value.degree();
  return d ? static_cast<int64_t>(*d) : -1;
}

hc_status hc_poly_coefficient(const hc_poly* p, size_t k, char** out) {
  return guard([&] {
    require(p, "polynomial");
    require(out, "out");
    *out = dup_string(p->value.coefficient(k).get_str());
  });
}

hc_status hc_poly_evaluate(const hc_poly* p, int64_t q, char** out) {
  return guard([&] {
    require(p, "polynomial");
    require(out, "out");
    mpz_class x;
    mpz_set_si(x.get_mpz_t(), static_cast<long>(q));
    *out = dup_string(p->value.evaluate(x).get_str());
  });
}

hc_status hc_poly_to_string(const hc_poly* p, char** out) {
  return guard([&] {
    require(p, "polynomial");
    require(out, "out");
    *out = dup_string(p->value.to_string());
  });
}

int hc_poly_equal(const hc_poly* a, const hc_poly* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->value == b->value;
}

hc_status hc_poly_sum(const hc_poly* const* terms, size_t count, hc_poly** out) {
  return guard([&] {
    require(out, "out");
    if (count > 0) require(terms, "terms");
    IntPolynomial total;
    for (size_t k = 0; k < count; ++k) {
      require(terms[k], "term");
      total += terms[k]->value;
    }
    *out = wrap(std::move(total));
  });
}

hc_status hc_interpolate(const int64_t* xs, const int64_t* ys, size_t count, hc_poly** out) {
  return guard([&] {
    require(out, "out");
    if (count > 0) {
      require(xs, "xs");
      require(ys, "ys");
    }
    std::vector<std::pair<mpz_class, mpz_class>> points;
    for (size_t k = 0; k < count; ++k) {
      mpz_class x, y;
      mpz_set_si(x.get_mpz_t(), static_cast<long>(xs[k]));
      mpz_set_si(y.get_mpz_t(), static_cast<long>(ys[k]));
      points.emplace_back(std::move(x), std::move(y));
    }
    *out = wrap(lagrange_interpolate(points));
  });
}

hc_status hc_permutation_count(int n, size_t* out) {
  return guard([&] {
    require(out, "out");
    *out = WeylGroup::get(n)->order();
  });
}

hc_status hc_permutation_at(int n, size_t index, int* window) {
  return guard([&] {
    require(window, "window");
    const auto group = WeylGroup::get(n);
    if (index >= group->order()) throw InvalidInput("permutation index " + std::to_string(index) + " out of range");
    const auto w = group->element(index).window();
    std::copy(w.begin(), w.end(), window);
  });
}

hc_status hc_permutation_length(int n, const int* window, int* out) {
  return guard([&] {
    require(out, "out");
    *out = length(perm(n, window));
  });
}

hc_status hc_hecke_square(int n, hc_hecke** out) {
  return guard([&] {
    require(out, "out");
    *out = new hc_hecke{t_w0_squared(n)};
  });
}

void hc_hecke_free(hc_hecke* h) { delete h; }

int hc_hecke_rank(const hc_hecke* h) { return h == nullptr ? 0 : h->value.rank(); }

hc_status hc_hecke_coefficient(const hc_hecke* h, const int* w, hc_poly** out) {
  return guard([&] {
    require(h, "hecke element");
    require(out, "out");
    const Permutation p = perm(h->value.rank(), w);
    *out = wrap(h->value.coefficient(p));
  });
}

hc_status hc_structure_coefficient(int n, const int* u, const int* v, const int* w, hc_poly** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(structure_coefficient(perm(n, u), perm(n, v), perm(n, w)));
  });
}

hc_status hc_stratum_polynomial(int n, const int* w, hc_poly** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(stratum_polynomial(n, perm(n, w)));
  });
}

hc_status hc_all_stratum_polynomials(int n, unsigned threads, hc_poly** out) {
  return guard([&] {
    require(out, "out");
    auto polys = all_stratum_polynomials(n, threads);
    for (std::size_t k = 0; k < polys.size(); ++k) out[k] = nullptr;
    try {
      for (std::size_t k = 0; k < polys.size(); ++k) out[k] = wrap(std::move(polys[k]));
    } catch (...) {
      for (std::size_t k = 0; k < polys.size(); ++k) {
        delete out[k];
        out[k] = nullptr;
      }
      throw;
    }
  });
}

hc_status hc_hoch_polynomial(int n, unsigned threads, hc_poly** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(hoch_polynomial(n, threads));
  });
}

hc_status hc_euler_characteristic(int n, unsigned threads, char** out) {
  return guard([&] {
    require(out, "out");
    *out = dup_string(euler_characteristic(n, threads).get_str());
  });
}

hc_status hc_verify_lemma42(int n, size_t* failures) {
  return guard([&] {
    require(failures, "failures");
    *failures = verify_lemma42(n).failures.size();
  });
}

hc_status hc_relative_position(int n, uint32_t p, const uint32_t* first, const uint32_t* second, int* window) {
  return guard([&] {
    require(window, "window");
    const Permutation w = relative_position(Flag(matrix(n, p, first)), Flag(matrix(n, p, second)));
    std::copy(w.window().begin(), w.window().end(), window);
  });
}

hc_status hc_count_middle_flags(int n, uint32_t p, const uint32_t* x1, const uint32_t* x2, const int* u, const int* v,
                                uint64_t cap, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = count_middle_flags(Flag(matrix(n, p, x1)), Flag(matrix(n, p, x2)), perm(n, u), perm(n, v), cap);
  });
}

hc_status hc_count_hoch_stratum(int n, uint32_t p, const int* w, hc_level level, unsigned threads, uint64_t cap,
                                uint64_t* out) {
  return guard([&] {
    require(out, "out");
    if (level != HC_LEVEL_FULL && level != HC_LEVEL_ORBIT) throw InvalidInput("unknown brute-force level");
    const StratumLevel l = level == HC_LEVEL_FULL ? StratumLevel::kFull : StratumLevel::kOrbit;
    *out = count_hoch_stratum_bruteforce(n, p, perm(n, w), l, BruteForceOptions{threads, cap});
  });
}

uint64_t hc_bruteforce_budget(int n, uint32_t p, hc_level level) {
  if (n < 1) return 0;
  return level == HC_LEVEL_FULL ? full_budget(n, p) : orbit_budget(n, p);
}

hc_status hc_algebra_builtin(const char* name, hc_algebra** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = new hc_algebra{builtin_algebra(name)};
  });
}

hc_status hc_algebra_from_json(const char* text, hc_algebra** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new hc_algebra{algebra_from_json(text)};
  });
}

void hc_algebra_free(hc_algebra* a) { delete a; }

size_t hc_algebra_dim(const hc_algebra* a) { return a == nullptr ? 0 : a->value.dim(); }

hc_status hc_algebra_validate(const hc_algebra* a, char** violations) {
  std::vector<std::string> found;
  const hc_status status = guard([&] {
    require(a, "algebra");
    found = validate(a->value);
  });
  if (status != HC_OK) return status;
  if (violations != nullptr) *violations = nullptr;
  if (found.empty()) return HC_OK;
  std::string joined;
  for (const auto& v : found) joined += v + "\n";
  last_error = std::to_string(found.size()) + " violation(s), first: " + found.front();
  if (violations != nullptr) {
    const hc_status copy = guard([&] { *violations = dup_string(joined); });
    if (copy != HC_OK) return copy;
  }
  return HC_ERR_INVALID_INPUT;
}

hc_status hc_algebra_to_json(const hc_algebra* a, char** out) {
  return guard([&] {
    require(a, "algebra");
    require(out, "out");
    *out = dup_string(algebra_to_json(a->value));
  });
}

hc_status hc_algebra_center_dimension(const hc_algebra* a, size_t* out) {
  return guard([&] {
    require(a, "algebra");
    require(out, "out");
    *out = center_dimension(a->value);
  });
}

hc_status hc_algebra_hh_dimensions(const hc_algebra* a, int max_degree, size_t cap, size_t* dims,
                                   size_t* cochain_dims, int* complex_ok) {
  return guard([&] {
    require(a, "algebra");
    require(dims, "dims");
    const HHReport report = hh_dimensions(a->value, max_degree, cap);
    for (int k = 0; k <= max_degree; ++k) {
      dims[k] = report.dims[k];
      if (cochain_dims != nullptr) cochain_dims[k] = report.cochain_dims[k];
    }
    if (complex_ok != nullptr) {
      *complex_ok = 1;
      for (bool ok : report.d_squared_zero)
        if (!ok) *complex_ok = 0;
    }
  });
}

}  // extern "C"
