// hochcount: command-line driver. Talks to the library through the C API only.
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hochcount/hochcount.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

struct CommandError : std::runtime_error {
  int code;
  CommandError(int exit_code, const std::string& message) : std::runtime_error(message), code(exit_code) {}
};

int exit_code_for(hc_status status) {
  switch (status) {
    case HC_OK: return kExitPass;
    case HC_ERR_INVALID_INPUT:
    case HC_ERR_RESOURCE_LIMIT: return kExitInvalid;
    default: return kExitFail;
  }
}

void check(hc_status status) {
  if (status != HC_OK) throw CommandError(exit_code_for(status), hc_last_error());
}

void invalid(const std::string& message) { throw CommandError(kExitInvalid, message); }

struct PolyFree {
  void operator()(hc_poly* p) const { hc_poly_free(p); }
};
using Poly = std::unique_ptr<hc_poly, PolyFree>;

struct AlgebraFree {
  void operator()(hc_algebra* a) const { hc_algebra_free(a); }
};
using Algebra = std::unique_ptr<hc_algebra, AlgebraFree>;

std::string take(char* s) {
  std::string out = s ? s : "";
  hc_string_free(s);
  return out;
}

// Decimal integer as a JSON number when it fits in 64 bits, else as a string.
Json integer(const std::string& decimal) {
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(decimal.data(), decimal.data() + decimal.size(), v);
  if (ec == std::errc() && end == decimal.data() + decimal.size()) return v;
  return decimal;
}

Json coefficients(const hc_poly* p) {
  Json out = Json::array();
  for (std::int64_t k = 0; k <= hc_poly_degree(p); ++k) {
    char* c = nullptr;
    check(hc_poly_coefficient(p, static_cast<std::size_t>(k), &c));
    out.push_back(integer(take(c)));
  }
  return out;
}

std::string value_at(const hc_poly* p, std::int64_t q) {
  char* s = nullptr;
  check(hc_poly_evaluate(p, q, &s));
  return take(s);
}

std::string pretty(const hc_poly* p) {
  char* s = nullptr;
  check(hc_poly_to_string(p, &s));
  return take(s);
}

std::vector<std::vector<int>> permutations(int n) {
  std::size_t count = 0;
  check(hc_permutation_count(n, &count));
  std::vector<std::vector<int>> out(count, std::vector<int>(n));
  for (std::size_t k = 0; k < count; ++k) check(hc_permutation_at(n, k, out[k].data()));
  return out;
}

std::string label(const std::vector<int>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string join(const Json& array) {
  std::string out = "[";
  for (std::size_t i = 0; i < array.size(); ++i) out += (i ? ", " : "") + array[i].dump();
  return out + "]";
}

struct Common {
  bool json = false;
  bool no_timing = false;
  unsigned threads = 0;
};

struct Report {
  std::string command;
  Json params = Json::object();
  Json n = nullptr;
  Json polynomial = nullptr;
  Json strata = nullptr;
  Json euler = nullptr;
  Json results = Json::object();
  bool pass = true;
  std::vector<std::string> lines;  // human-readable body
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_flag("--json", common.json, "Print a JSON report on stdout");
  cmd->add_flag("--no-timing", common.no_timing, "Report \"ms\" as null (byte-identical output)");
  cmd->add_option("--threads", common.threads, "Worker threads (0: hardware concurrency)");
}

Report cmd_euler(int n, const Common& common) {
  Report r;
  r.command = "euler";
  r.params["n"] = n;
  r.n = n;
  if (n < 1 || n > 7) invalid("--n must be between 1 and 7, got " + std::to_string(n));
  const auto perms = permutations(n);
  std::vector<hc_poly*> raw(perms.size(), nullptr);
  check(hc_all_stratum_polynomials(n, common.threads, raw.data()));
  std::vector<Poly> strata;
  for (hc_poly* p : raw) strata.emplace_back(p);
  hc_poly* total_raw = nullptr;
  check(hc_poly_sum(raw.data(), raw.size(), &total_raw));
  const Poly total(total_raw);

  r.strata = Json::object();
  for (std::size_t k = 0; k < perms.size(); ++k) r.strata[label(perms[k])] = coefficients(strata[k].get());
  r.polynomial = coefficients(total.get());
  const std::string euler = value_at(total.get(), 1);
  r.euler = integer(euler);
  const std::uint64_t expected = factorial(n);
  const std::int64_t bound = 3 * n * (n - 1) / 2;
  const std::int64_t degree = hc_poly_degree(total.get());
  r.results["expected"] = expected;
  r.results["degree"] = degree;
  r.results["degree_bound"] = bound;
  r.pass = euler == std::to_string(expected) && degree <= bound;

  if (perms.size() <= 24)
    for (std::size_t k = 0; k < perms.size(); ++k)
      r.lines.push_back("  w = " + label(perms[k]) + ": " + pretty(strata[k].get()));
  r.lines.push_back("hoch polynomial: " + pretty(total.get()));
  r.lines.push_back("coefficients: " + join(r.polynomial));
  r.lines.push_back("degree " + std::to_string(degree) + " (bound " + std::to_string(bound) + ")");
  r.lines.push_back("euler characteristic: " + euler + " (expected " + std::to_string(expected) + ")");
  return r;
}

Report cmd_lemma42(int n) {
  Report r;
  r.command = "lemma42";
  r.params["n"] = n;
  r.n = n;
  if (n < 1 || n > 8) invalid("--n must be between 1 and 8, got " + std::to_string(n));
  hc_hecke* square = nullptr;
  check(hc_hecke_square(n, &square));
  std::unique_ptr<hc_hecke, void (*)(hc_hecke*)> guard(square, hc_hecke_free);
  const auto perms = permutations(n);
  r.strata = Json::object();
  std::size_t failures = 0;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    hc_poly* c = nullptr;
    check(hc_hecke_coefficient(square, perms[k].data(), &c));
    const Poly coeff(c);
    const std::string value = value_at(coeff.get(), 1);
    const bool ok = value == (k == 0 ? "1" : "0");
    if (!ok) ++failures;
    r.strata[label(perms[k])] = integer(value);
    if (perms.size() <= 24 || !ok)
      r.lines.push_back("  N_{" + label(perms[k]) + "}(1) = " + value + (ok ? "" : "  MISMATCH"));
  }
  r.results["values"] = perms.size();
  r.results["failures"] = failures;
  r.pass = failures == 0;
  r.lines.push_back(std::to_string(perms.size()) + " values, " + std::to_string(failures) + " failures");
  return r;
}

Report cmd_bruteforce(int n, std::uint32_t p, const std::string& level, bool compare, std::uint64_t cap,
                      const Common& common) {
  Report r;
  r.command = "bruteforce";
  r.params["n"] = n;
  r.params["p"] = p;
  r.params["level"] = level;
  r.params["compare"] = compare;
  r.params["cap"] = cap;
  r.n = n;
  const hc_level lvl = level == "full" ? HC_LEVEL_FULL : HC_LEVEL_ORBIT;
  if (n < 1) invalid("--n must be positive");
  if (lvl == HC_LEVEL_FULL && n > 2) invalid("full triple enumeration is limited to n <= 2; use --level orbit");
  const std::uint64_t budget = hc_bruteforce_budget(n, p, lvl);
  if (budget > cap)
    invalid("brute-force budget for n=" + std::to_string(n) + ", p=" + std::to_string(p) + " at level " + level + " is " +
            std::to_string(budget) + " work units per stratum, cap is " + std::to_string(cap));
  const auto perms = permutations(n);

  std::vector<Poly> symbolic;
  if (compare) {
    std::vector<hc_poly*> raw(perms.size(), nullptr);
    check(hc_all_stratum_polynomials(n, common.threads, raw.data()));
    for (hc_poly* q : raw) symbolic.emplace_back(q);
    hc_poly* total = nullptr;
    check(hc_poly_sum(raw.data(), raw.size(), &total));
    const Poly t(total);
    r.polynomial = coefficients(t.get());
  }

  r.strata = Json::object();
  std::uint64_t total = 0;
  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    std::uint64_t count = 0;
    check(hc_count_hoch_stratum(n, p, perms[k].data(), lvl, common.threads, cap, &count));
    total += count;
    std::string line = "  w = " + label(perms[k]) + ": " + std::to_string(count);
    if (compare) {
      const std::string expected = value_at(symbolic[k].get(), p);
      const bool match = expected == std::to_string(count);
      if (!match) ++mismatches;
      r.strata[label(perms[k])] = Json{{"count", count}, {"symbolic", integer(expected)}, {"match", match}};
      line += "  symbolic " + expected + (match ? "" : "  MISMATCH");
    } else {
      r.strata[label(perms[k])] = count;
    }
    r.lines.push_back(line);
  }
  r.results["total"] = total;
  r.results["budget"] = budget;
  if (compare) r.results["mismatches"] = mismatches;
  r.pass = mismatches == 0;
  r.lines.push_back("total: " + std::to_string(total));
  return r;
}

Report cmd_hecke_square(int n, const std::optional<std::int64_t>& at) {
  Report r;
  r.command = "hecke-square";
  r.params["n"] = n;
  r.params["at"] = at ? Json(*at) : Json(nullptr);
  r.n = n;
  if (n < 1 || n > 8) invalid("--n must be between 1 and 8, got " + std::to_string(n));
  hc_hecke* square = nullptr;
  check(hc_hecke_square(n, &square));
  std::unique_ptr<hc_hecke, void (*)(hc_hecke*)> guard(square, hc_hecke_free);
  r.strata = Json::object();
  for (const auto& w : permutations(n)) {
    hc_poly* c = nullptr;
    check(hc_hecke_coefficient(square, w.data(), &c));
    const Poly coeff(c);
    if (hc_poly_degree(coeff.get()) < 0) continue;
    if (at) {
      const std::string v = value_at(coeff.get(), *at);
      r.strata[label(w)] = integer(v);
      r.lines.push_back("  T_{" + label(w) + "}: " + v);
    } else {
      r.strata[label(w)] = coefficients(coeff.get());
      r.lines.push_back("  T_{" + label(w) + "}: " + pretty(coeff.get()));
    }
  }
  r.results["support"] = r.strata.size();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot read algebra file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json expected_hh(const std::string& builtin, int max_degree) {
  std::vector<std::size_t> head;
  if (builtin == "ground-field")
    head = {1};
  else if (builtin == "semisimple-2")
    head = {2};
  else if (builtin == "sl2-catO")
    head = {2, 1, 1};
  else
    return nullptr;
  Json out = Json::array();
  for (int k = 0; k <= max_degree; ++k) out.push_back(k < static_cast<int>(head.size()) ? head[k] : 0);
  return out;
}

Report cmd_hh(const std::string& source, int max_degree, std::size_t cap, const std::vector<std::size_t>& expect) {
  Report r;
  r.command = "hh";
  r.params["algebra"] = source;
  r.params["max_degree"] = max_degree;
  r.params["cap"] = cap;
  if (!expect.empty()) r.params["expect"] = expect;
  if (max_degree < 0) invalid("--max-degree must be nonnegative");
  hc_algebra* raw = nullptr;
  std::string builtin;
  if (source.rfind("builtin:", 0) == 0) {
    builtin = source.substr(8);
    check(hc_algebra_builtin(builtin.c_str(), &raw));
  } else {
    check(hc_algebra_from_json(read_file(source).c_str(), &raw));
  }
  const Algebra algebra(raw);
  char* violations = nullptr;
  if (hc_algebra_validate(algebra.get(), &violations) != HC_OK) {
    std::string list = take(violations);
    while (!list.empty() && list.back() == '\n') list.pop_back();
    invalid("algebra presentation is invalid:\n" + (list.empty() ? std::string(hc_last_error()) : list));
  }
  std::vector<std::size_t> dims(max_degree + 1), cochains(max_degree + 1);
  int complex_ok = 0;
  check(hc_algebra_hh_dimensions(algebra.get(), max_degree, cap, dims.data(), cochains.data(), &complex_ok));
  std::size_t center = 0;
  check(hc_algebra_center_dimension(algebra.get(), &center));

  const Json hh = dims;
  Json expected = expected_hh(builtin, max_degree);
  if (!expect.empty()) {
    if (expect.size() != dims.size())
      invalid("--expect lists " + std::to_string(expect.size()) + " dimensions, need " + std::to_string(dims.size()));
    expected = expect;
  }
  r.results["hh"] = hh;
  r.results["cochain_dims"] = cochains;
  r.results["center_dim"] = center;
  r.results["d_squared_zero"] = complex_ok == 1;
  r.results["expected"] = expected;
  r.pass = complex_ok == 1 && dims[0] == center && (expected.is_null() || expected == hh);

  for (int k = 0; k <= max_degree; ++k)
    r.lines.push_back("  HH^" + std::to_string(k) + " = " + std::to_string(dims[k]) + "   (dim C^" + std::to_string(k) +
                      " = " + std::to_string(cochains[k]) + ")");
  r.lines.push_back("centre dimension " + std::to_string(center) + (complex_ok ? ", d^2 = 0" : ", d^2 != 0"));
  if (!expected.is_null()) r.lines.push_back("expected " + join(expected));
  return r;
}

Report cmd_interp(int n, const std::vector<std::uint32_t>& primes, const Common& common) {
  Report r;
  r.command = "interp";
  r.params["n"] = n;
  r.params["primes"] = primes;
  r.n = n;
  if (n != 2) invalid("the interpolation path is implemented for n = 2 only");
  const std::set<std::uint32_t> distinct(primes.begin(), primes.end());
  if (distinct.size() != primes.size()) invalid("--primes contains a repeated prime");
  if (primes.size() < 4)
    invalid("need at least 4 distinct primes to pin down a polynomial of degree <= 3, got " +
            std::to_string(primes.size()));

  const auto perms = permutations(n);
  std::vector<std::int64_t> xs, ys;
  r.results["counts"] = Json::object();
  for (std::uint32_t p : primes) {
    std::uint64_t total = 0;
    for (const auto& w : perms) {
      std::uint64_t count = 0;
      check(hc_count_hoch_stratum(n, p, w.data(), HC_LEVEL_FULL, common.threads, HC_DEFAULT_CAP, &count));
      total += count;
    }
    xs.push_back(p);
    ys.push_back(static_cast<std::int64_t>(total));
    r.results["counts"][std::to_string(p)] = total;
    r.lines.push_back("  p = " + std::to_string(p) + ": " + std::to_string(total) + " points");
  }
  hc_poly* raw = nullptr;
  const hc_status status = hc_interpolate(xs.data(), ys.data(), xs.size(), &raw);
  if (status == HC_ERR_NOT_INTEGRAL) throw CommandError(kExitFail, hc_last_error());
  check(status);
  const Poly interpolated(raw);
  hc_poly* sym = nullptr;
  check(hc_hoch_polynomial(n, common.threads, &sym));
  const Poly symbolic(sym);

  r.polynomial = coefficients(interpolated.get());
  r.results["expected"] = coefficients(symbolic.get());
  r.pass = hc_poly_equal(interpolated.get(), symbolic.get()) == 1;
  r.lines.push_back("interpolated: " + pretty(interpolated.get()));
  r.lines.push_back("symbolic:     " + pretty(symbolic.get()));
  return r;
}

Json report_document(const Report& r, const Json& ms) {
  Json doc;
  doc["command"] = r.command;
  doc["params"] = r.params;
  doc["n"] = r.n;
  doc["polynomial"] = r.polynomial;
  doc["strata"] = r.strata;
  doc["euler"] = r.euler;
  doc["results"] = r.results;
  doc["status"] = r.pass ? "pass" : "fail";
  doc["ms"] = ms;
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts of the Hochschild space and Hochschild cohomology checks"};
  app.set_version_flag("--version", std::string(hc_version()));
  app.require_subcommand(1);
  Common common;

  int n = 0;
  auto* euler = app.add_subcommand("euler", "Counting polynomial of the Hochschild space and its value at q = 1");
  euler->add_option("--n", n, "Rank of GL_n")->required();
  add_common(euler, common);

  auto* lemma = app.add_subcommand("lemma42", "Check that the coefficients of T_w0^2 vanish at q = 1 away from e");
  lemma->add_option("--n", n, "Rank of GL_n")->required();
  add_common(lemma, common);

  std::uint32_t p = 0;
  std::string level = "orbit";
  bool compare = false;
  std::uint64_t cap = HC_DEFAULT_CAP;
  auto* brute = app.add_subcommand("bruteforce", "Count F_p points of each stratum by enumeration");
  brute->add_option("--n", n, "Rank of GL_n")->required();
  brute->add_option("--p", p, "Prime")->required();
  brute->add_option("--level", level, "full or orbit")->check(CLI::IsMember({"full", "orbit"}));
  brute->add_flag("--compare", compare, "Compare with the symbolic stratum polynomials");
  brute->add_option("--cap", cap, "Work-unit cap per stratum");
  add_common(brute, common);

  std::optional<std::int64_t> at;
  auto* hecke = app.add_subcommand("hecke-square", "Coefficients of T_w0^2 in the Hecke algebra");
  hecke->add_option("--n", n, "Rank of GL_n")->required();
  hecke->add_option("--at", at, "Evaluate coefficients at q = Q");
  add_common(hecke, common);

  std::string algebra;
  int max_degree = 6;
  std::size_t cochain_cap = HC_DEFAULT_COCHAIN_CAP;
  auto* hh = app.add_subcommand("hh", "Hochschild cohomology dimensions of a finite-dimensional algebra");
  hh->add_option("--algebra", algebra, "builtin:NAME or a JSON presentation file")->required();
  hh->add_option("--max-degree", max_degree, "Highest degree computed");
  hh->add_option("--cap", cochain_cap, "Cochain dimension cap per degree");
  std::vector<std::size_t> expect;
  hh->add_option("--expect", expect, "Asserted dimensions of HH^0..HH^D (comma-separated)")->delimiter(',');
  add_common(hh, common);

  std::vector<std::uint32_t> primes;
  auto* interp = app.add_subcommand("interp", "Reconstruct the counting polynomial from brute-force totals");
  interp->add_option("--n", n, "Rank of GL_n")->required();
  interp->add_option("--primes", primes, "Comma-separated primes")->delimiter(',')->required();
  add_common(interp, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (command == "euler")
      report = cmd_euler(n, common);
    else if (command == "lemma42")
      report = cmd_lemma42(n);
    else if (command == "bruteforce")
      report = cmd_bruteforce(n, p, level, compare, cap, common);
    else if (command == "hecke-square")
      report = cmd_hecke_square(n, at);
    else if (command == "hh")
      report = cmd_hh(algebra, max_degree, cochain_cap, expect);
    else
      report = cmd_interp(n, primes, common);
  } catch (const CommandError& e) {
    std::cerr << "hochcount " << command << ": " << e.what() << "\n";
    if (common.json) {
      Json doc;
      doc["command"] = command;
      doc["status"] = "error";
      doc["error"] = e.what();
      std::cout << doc.dump(2) << "\n";
    }
    return e.code;
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const Json timing = common.no_timing ? Json(nullptr) : Json(ms);

  if (common.json) {
    std::cout << report_document(report, timing).dump(2) << "\n";
  } else {
    std::cout << report.command;
    for (const auto& [key, value] : report.params.items()) std::cout << " " << key << "=" << value.dump();
    std::cout << "\n";
    for (const auto& line : report.lines) std::cout << line << "\n";
    std::cout << "status: " << (report.pass ? "pass" : "fail");
    if (!common.no_timing) std::cout << " (" << ms << " ms)";
    std::cout << "\n";
  }
  return report.pass ? kExitPass : kExitFail;
}
