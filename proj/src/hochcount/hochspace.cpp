#include "hochcount/hochspace.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hochcount/error.hpp"

namespace hochcount {

namespace {

void check_hoch_rank(int n) {
  if (n < 1) throw InvalidInput("rank must be positive, got " + std::to_string(n));
  if (n > kMaxHochRank)
    throw ResourceLimit("symbolic counting is limited to n <= " + std::to_string(kMaxHochRank) + ", got " +
                        std::to_string(n));
}

// M = sum_tau N_tau T_{tau^-1}
HeckeElement twisted_square(int n) {
  const HeckeElement square = t_w0_squared(n);
  const WeylGroup& g = square.group();
  HeckeElement m(n);
  for (std::size_t k = 0; k < g.order(); ++k) {
    const IntPolynomial& c = square.coefficient_at(k);
    if (!c.is_zero()) m.add_term_at(g.inverse_index(k), c);
  }
  return m;
}

int smallest_left_descent(const WeylGroup& g, std::size_t index) {
  for (int i = 1; i < g.rank(); ++i)
    if (g.length(g.left_multiply(index, i)) < g.length(index)) return i;
  return 0;
}

}  // namespace

IntPolynomial stratum_polynomial(int n, const Permutation& w) {
  check_hoch_rank(n);
  if (w.size() != n) throw InvalidInput("stratum label " + w.to_string() + " is not in S_" + std::to_string(n));
  HeckeElement h = twisted_square(n);
  const std::vector<int> word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) h.multiply_generator_left(*it);
  const int l_w0 = n * (n - 1) / 2;
  return h.coefficient(w).shifted(static_cast<std::size_t>(l_w0));
}

std::vector<IntPolynomial> all_stratum_polynomials(int n, unsigned threads) {
  check_hoch_rank(n);
  const auto group = WeylGroup::get(n);
  const WeylGroup& g = *group;
  const HeckeElement m = twisted_square(n);
  const std::size_t shift = static_cast<std::size_t>(n * (n - 1) / 2);

  // Tree on S_n: the parent of w is s_i w for the smallest left descent i.
  std::vector<std::vector<std::pair<int, std::size_t>>> children(g.order());
  for (std::size_t k = 0; k < g.order(); ++k) {
    const int i = smallest_left_descent(g, k);
    if (i != 0) children[g.left_multiply(k, i)].emplace_back(i, k);
  }

  // Subtree roots: every element of length split_length; shorter elements are
  // handled on their own.
  const int split_length = std::min(3, n * (n - 1) / 2);
  std::vector<std::size_t> roots, shallow;
  for (std::size_t k = 0; k < g.order(); ++k) {
    if (g.length(k) == split_length)
      roots.push_back(k);
    else if (g.length(k) < split_length)
      shallow.push_back(k);
  }
  std::vector<IntPolynomial> out(g.order());

  auto from_scratch = [&](std::size_t k) {
    HeckeElement h = m;
    const std::vector<int> word = reduced_word(g.element(k));
    for (auto it = word.rbegin(); it != word.rend(); ++it) h.multiply_generator_left(*it);
    return h;
  };
  auto walk = [&](std::size_t root) {
    std::vector<std::pair<std::size_t, HeckeElement>> stack;
    stack.emplace_back(root, from_scratch(root));
    while (!stack.empty()) {
      auto [k, h] = std::move(stack.back());
      stack.pop_back();
      out[k] = h.coefficient_at(k).shifted(shift);
      const auto& kids = children[k];
      for (std::size_t c = 0; c < kids.size(); ++c) {
        if (c + 1 == kids.size()) {
          h.multiply_generator_left(kids[c].first);
          stack.emplace_back(kids[c].second, std::move(h));
        } else {
          stack.emplace_back(kids[c].second, generator_mul(kids[c].first, h));
        }
      }
    }
  };

  for (std::size_t k : shallow) out[k] = from_scratch(k).coefficient_at(k).shifted(shift);

  const unsigned workers = std::max(1u, std::min<unsigned>(threads != 0 ? threads : std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(roots.size())));
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t r; (r = next.fetch_add(1)) < roots.size();) walk(roots[r]);
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(drain);
  }
  return out;
}

IntPolynomial hoch_polynomial(int n, unsigned threads) {
  IntPolynomial total;
  for (const auto& p : all_stratum_polynomials(n, threads)) total += p;
  const std::size_t bound = static_cast<std::size_t>(3 * n * (n - 1) / 2);
  if (total.degree().value_or(0) > bound)
    throw Error("counting polynomial of degree " + std::to_string(*total.degree()) + " exceeds dim(X x X x U) = " +
                std::to_string(bound));
  return total;
}

mpz_class euler_characteristic(int n, unsigned threads) { return hoch_polynomial(n, threads).evaluate(1); }

bool StratumReport::consistent() const {
  if (!brute_force) return true;
  for (const auto& [p, count] : *brute_force) {
    auto it = evaluations.find(p);
    if (it == evaluations.end() || it->second != mpz_class(static_cast<unsigned long>(count))) return false;
  }
  return true;
}

Lemma42Report verify_lemma42(int n) {
  if (n < 1) throw InvalidInput("rank must be positive, got " + std::to_string(n));
  const HeckeElement square = t_w0_squared(n);
  const WeylGroup& g = square.group();
  Lemma42Report report;
  report.n = n;
  report.values.reserve(g.order());
  for (std::size_t k = 0; k < g.order(); ++k) {
    mpz_class value = square.coefficient_at(k).evaluate(1);
    const mpz_class expected = k == g.identity_index() ? 1 : 0;
    if (value != expected) report.failures.push_back(g.element(k));
    report.values.emplace_back(g.element(k), std::move(value));
  }
  return report;
}

bool CrossValidationReport::pass() const {
  return std::all_of(strata.begin(), strata.end(), [](const StratumReport& s) { return s.consistent(); });
}

CrossValidationReport cross_validate(int n, std::span<const std::uint32_t> primes, const BruteForceOptions& options) {
  check_hoch_rank(n);
  for (std::uint32_t p : primes) {
    PrimeField field(p);
    const std::uint64_t budget = orbit_budget(n, p);
    if (budget > options.cap)
      throw ResourceLimit("cross validation for n=" + std::to_string(n) + ", p=" + std::to_string(p) + " needs " +
                          std::to_string(budget) + " work units per stratum, cap is " + std::to_string(options.cap));
  }
  const auto polys = all_stratum_polynomials(n, options.threads);
  const auto group = WeylGroup::get(n);
  CrossValidationReport report;
  report.n = n;
  report.primes.assign(primes.begin(), primes.end());
  for (std::size_t k = 0; k < group->order(); ++k) {
    StratumReport stratum;
    stratum.n = n;
    stratum.w = group->element(k);
    stratum.polynomial = polys[k];
    stratum.brute_force.emplace();
    for (std::uint32_t p : primes) {
      stratum.evaluations[p] = polys[k].evaluate(p);
      (*stratum.brute_force)[p] = count_hoch_stratum_bruteforce(n, p, stratum.w, StratumLevel::kOrbit, options);
    }
    report.strata.push_back(std::move(stratum));
  }
  return report;
}

}  // namespace hochcount
