#pragma once

// The acceptance suite: ten numbered criteria, each a pass/fail verdict with
// a wall-clock budget. Shared by the CLI (verify-all) and the test binary.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rank2/cluster.hpp"
#include "rank2/dyck.hpp"
#include "rank2/greedy.hpp"
#include "rank2/roots.hpp"
#include "rank2/verify.hpp"

namespace rank2::acceptance {

struct Options {
  int cap = default_enumeration_cap;
  unsigned threads = default_thread_count();
  std::uint64_t seed = 20240601;
};

struct Result {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct PkCase {
  int b, c;
  std::int64_t k_max;
};

// (5,1) and (3,2) plus their mirrors, which cover the w(2;k) orbit.
inline const std::vector<PkCase>& pk_grid() {
  static const std::vector<PkCase> grid{{5, 1, 3}, {1, 5, 3}, {3, 2, 2}, {2, 3, 2}};
  return grid;
}

struct SupportCase {
  int b, c, a1, a2;
};

inline const std::vector<SupportCase>& support_grid() {
  static const std::vector<SupportCase> grid{{3, 2, 1, 1}, {3, 2, 2, 2}, {3, 2, 4, 3}, {3, 2, 4, 5},
                                             {5, 1, 2, 1}, {5, 1, 7, 3}, {5, 1, 7, 4}};
  return grid;
}

inline EnumerationOptions enumeration(const Options& o) { return {o.cap, o.threads}; }

inline nlohmann::json support_record(const SupportCase& s, const EnumerationOptions& opt) {
  return guarded_record("support", s.b, s.c, 0, [&] {
    bool equal = false;
    GreedyElement g;
    const double ms = detail::time_ms([&] {
      g = greedy_element(s.b, s.c, s.a1, s.a2, opt);
      equal = pointed_support(g) == region_lattice_points(RegionP(s.b, s.c, s.a1, s.a2));
    });
    nlohmann::json j = check_record("support", s.b, s.c, 0, equal, lp_min_coefficient(g.laurent), false, ms);
    j["index"] = nlohmann::json::array({s.a1, s.a2});
    j["support_size"] = pointed_support(g).size();
    j["pairs"] = g.grid.total().str();
    return j;
  });
}

inline nlohmann::json support_records(const Options& o) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : support_grid()) out.push_back(support_record(s, enumeration(o)));
  return out;
}

inline nlohmann::json pk_records(const Options& o) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& pc : pk_grid())
    for (std::int64_t k = 0; k <= pc.k_max; ++k) out.push_back(pk_record(pc.b, pc.c, k, enumeration(o)));
  return out;
}

namespace detail {

struct Collector {
  std::ostringstream failures;
  int checked = 0;
  int failed = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      if (failed <= 5) failures << (failed > 1 ? "; " : "") << what;
    }
  }

  std::string summary() const {
    std::ostringstream s;
    s << checked << " checks";
    if (failed) s << ", " << failed << " failed: " << failures.str();
    return s.str();
  }
};

inline std::string pair_str(int b, int c) { return "(" + std::to_string(b) + "," + std::to_string(c) + ")"; }

}  // namespace detail

inline Result criterion_1(const Options& o) {
  detail::Collector col;
  const auto opt = enumeration(o);
  for (auto [b, c] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{5, 1}}) {
    const LaurentPoly2 expected = LaurentPoly2::monomial({-1, -1}) *
                                  (LaurentPoly2::constant(1) + LaurentPoly2::x1(b) + LaurentPoly2::x2(c));
    col.expect(greedy_element(b, c, 1, 1, opt).laurent == expected, "x[1,1] " + detail::pair_str(b, c));
    ClusterVarTable table(b, c);
    col.expect(greedy_element(b, c, 1, 0, opt).laurent == table.get(3), "x[1,0] vs x3 " + detail::pair_str(b, c));
    col.expect(greedy_element(b, c, 0, 1, opt).laurent == table.get(0), "x[0,1] vs x0 " + detail::pair_str(b, c));
  }
  return {1, "greedy basics", col.failed == 0, col.summary(), 0, 1};
}

inline Result criterion_2(const Options& o) {
  detail::Collector col;
  for (const auto& r : support_records(o))
    col.expect(r["pass"].get<bool>() && !r["skipped"].get<bool>(),
               "support " + detail::pair_str(r["b"], r["c"]) + " at " + r["index"].dump());
  return {2, "support equals region for imaginary indices", col.failed == 0, col.summary(), 0, 60};
}

inline Result criterion_3(const Options& o) {
  detail::Collector col;
  for (auto [b, c] : {std::pair{3, 2}, std::pair{5, 1}})
    for (int a1 = 0; a1 <= 8; ++a1)
      for (int a2 = 0; a2 <= 8; ++a2) {
        const LatticeSet region = region_lattice_points(RegionP(b, c, a1, a2));
        bool inside = true;
        for (const auto& pt : pointed_support(greedy_element(b, c, a1, a2, enumeration(o))))
          inside = inside && region.contains(pt);
        col.expect(inside, "PS not in P for " + detail::pair_str(b, c) + " at " + detail::pair_str(a1, a2));
      }
  return {3, "support contained in region for a1,a2 <= 8", col.failed == 0, col.summary(), 0, 300};
}

inline Result criterion_4(const Options& o) {
  detail::Collector col;
  for (const auto& r : pk_records(o))
    col.expect(r["pass"].get<bool>() && !r["skipped"].get<bool>() && !r["min_coeff"].is_null(),
               "p_k " + detail::pair_str(r["b"], r["c"]) + " k=" + std::to_string(r["k"].get<int>()));
  return {4, "p_k has nonnegative coefficients and nonempty support", col.failed == 0, col.summary(), 0, 900};
}

inline Result criterion_5(const Options& o) {
  detail::Collector col;
  const auto opt = enumeration(o);
  for (const auto& pc : pk_grid())
    for (std::int64_t k = 0; k <= pc.k_max; ++k) {
      const std::string where = detail::pair_str(pc.b, pc.c) + " k=" + std::to_string(k);
      const bool eq2 = check_eq2(pc.b, pc.c, k, opt);
      const bool eq1 = check_eq1(pc.b, pc.c, k, opt);
      const bool pk = check_pk_positive(pc.b, pc.c, k, opt).pass;
      col.expect(eq2, "first summand " + where);
      col.expect(eq1, "second summand " + where);
      col.expect((eq1 && eq2) == pk, "decomposition verdict differs from p_k " + where);
    }
  return {5, "decomposition of p_k into two nonnegative summands", col.failed == 0, col.summary(), 0, 900};
}

inline Result criterion_6(const Options& o) {
  detail::Collector col;
  const auto opt = enumeration(o);
  for (auto [b, c, k0, k1] : {std::tuple{3, 2, 1, 3}, std::tuple{5, 1, 2, 4}})
    for (std::int64_t k = k0; k <= k1; ++k) {
      const MuReport r = mu_map(b, c, k, opt);
      std::ostringstream what;
      what << "mu " << detail::pair_str(b, c) << " k=" << k << " (failures " << r.image_failures << ", collisions "
           << r.collisions << ", size " << r.size_violations << ", excluded " << r.excluded_found << ")";
      col.expect(r.pass(), what.str());
    }
  return {6, "mu is well defined, injective and obeys the size laws", col.failed == 0, col.summary(), 0, 120};
}

inline Result criterion_7(const Options& o) {
  detail::Collector col;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
  for (auto [b, c] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{5, 1}, std::pair{1, 5}}) {
    const std::string where = detail::pair_str(b, c);
    col.expect(evaluate_identities(b, c, -3, 10).all_pass(), "sequence identities " + where);
    for (int n = 0; n < 1000; ++n) {
      const RootVector v{coord(rng), coord(rng)};
      const BigInt q = quadratic_form(b, c, v);
      col.expect(quadratic_form(b, c, reflect(b, c, 1, v)) == q && quadratic_form(b, c, reflect(b, c, 2, v)) == q,
                 "Q not invariant " + where);
    }
    col.expect(quadratic_form(b, c, {1, 1}) == b + c - b * c, "Q(1,1) " + where);
    if (c == 1) col.expect(quadratic_form(b, c, {2, 1}) == 4 - b, "Q(2,1) " + where);
    if (b == 1) col.expect(quadratic_form(b, c, {1, 2}) == 4 - c, "Q(1,2) " + where);
  }
  return {7, "Weyl layer: sequence identities and Q invariance", col.failed == 0, col.summary(), 0, 5};
}

inline Result criterion_8(const Options& o) {
  detail::Collector col;
  for (auto [b, c] : {std::pair{3, 2}, std::pair{2, 3}})
    for (int ell : {1, 2})
      col.expect(verify_sigma_on_greedy(b, c, {1, 1}, ell, enumeration(o)),
                 "sigma_" + std::to_string(ell) + " on x[1,1] " + detail::pair_str(b, c));
  return {8, "sigma action on x[1,1]", col.failed == 0, col.summary(), 0, 30};
}

// S1 of the size-(q;p) extremal pair lies entirely before its S2 on the path.
inline bool extremal_s1_before_s2(const DyckPath& path, int q, int p) {
  if (q == 0 || p == 0) return true;
  return path.horizontal_step(q) < path.vertical_step(path.a2() - p + 1);
}

inline Result criterion_9(const Options& o) {
  detail::Collector col;
  const std::vector<std::pair<int, int>> algebras{{3, 2}, {2, 3}, {5, 1}, {1, 5}};
  for (int a1 = 1; a1 <= 10; ++a1)
    for (int a2 = 1; a2 <= 10; ++a2) {
      const DyckPath path = max_dyck_path(a1, a2);
      for (int p = 1; p <= a2; ++p)
        for (int q = 1; q <= a1; ++q) {
          const std::string where = "D " + detail::pair_str(a1, a2) + " size " + detail::pair_str(q, p);
          col.expect(precedes(a1, a2, p, q) == extremal_s1_before_s2(path, q, p), "precedes " + where);
          if (!precedes(a1, a2, p, q)) continue;
          for (auto [b, c] : algebras)
            if (extremal_fast_check(b, c, a1, a2, p, q))
              col.expect(is_compatible(path, extremal_pair(path, q, p), b, c),
                         "fast check not sufficient " + where + " in " + detail::pair_str(b, c));
        }
    }
  for (auto [b, c] : algebras) {
    const std::int64_t first = same_shape_first_k(std::max(b, c), std::min(b, c));
    for (std::int64_t k = first; k <= first + 3; ++k)
      col.expect(check_same_shape(b, c, k), "same shape " + detail::pair_str(b, c) + " k=" + std::to_string(k));
    bool rejected = false;
    try {
      check_same_shape(b, c, first - 1);
    } catch (const range_violated&) {
      rejected = true;
    }
    col.expect(rejected, "same shape accepted below range " + detail::pair_str(b, c));
  }
  (void)o;
  return {9, "Dyck path geometry: precedence, fast check, same shape", col.failed == 0, col.summary(), 0, 60};
}

inline Result criterion_10(const Options& o) {
  detail::Collector col;
  Options base = o;
  base.threads = 1;
  const nlohmann::json support_ref = without_timings(support_records(base));
  const nlohmann::json pk_ref = without_timings(pk_records(base));
  for (unsigned t : {4u, 8u}) {
    Options run = o;
    run.threads = t;
    col.expect(without_timings(support_records(run)) == support_ref, "support JSON differs at " + std::to_string(t) + " threads");
    col.expect(without_timings(pk_records(run)) == pk_ref, "p_k JSON differs at " + std::to_string(t) + " threads");
  }
  return {10, "JSON output independent of thread count", col.failed == 0, col.summary(), 0, 1800};
}

inline const std::vector<std::function<Result(const Options&)>>& criteria() {
  static const std::vector<std::function<Result(const Options&)>> all{
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
  return all;
}

// Runs one criterion, timing it and failing it when it overruns its budget
// or throws.
inline Result run(int id, const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = criteria().at(static_cast<std::size_t>(id - 1))(o);
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
    r.pass = false;
    r.detail += " (over budget)";
  }
  return r;
}

inline std::vector<Result> run_all(const Options& o) {
  std::vector<Result> out;
  for (int id = 1; id <= static_cast<int>(criteria().size()); ++id) out.push_back(run(id, o));
  return out;
}

inline nlohmann::json to_json(const Result& r, bool timings = true) {
  nlohmann::json j{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
  if (timings) j["millis"] = static_cast<std::int64_t>(r.seconds * 1000);
  return j;
}

}  // namespace rank2::acceptance
