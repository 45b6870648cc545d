// rank2: command line front end for greedy elements of rank-2 cluster
// algebras and the positivity checks built on them.
//
// Exit codes: 0 ok, 1 a verification failed (or a cap was hit under
// --strict), 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rank2/rank2.hpp"

namespace {

using nlohmann::json;

struct Globals {
  std::string format = "text";
  unsigned threads = rank2::default_thread_count();
  int max_edges = rank2::default_enumeration_cap;
  std::uint64_t seed = rank2::acceptance::Options{}.seed;
  bool strict = false;
  bool no_timings = false;

  bool as_json() const { return format == "json"; }
  rank2::EnumerationOptions enumeration() const { return {max_edges, threads}; }
};

struct Outcome {
  bool failed = false;
  bool skipped = false;
};

void emit(const Globals& g, const json& j) {
  std::cout << (g.no_timings ? rank2::without_timings(j) : j).dump(2) << "\n";
}

// Folds one JSON check record into the outcome and prints it in text mode.
void account(const Globals& g, Outcome& out, const json& r) {
  if (r.value("skipped", false)) {
    out.skipped = true;
  } else if (!r.value("pass", false)) {
    out.failed = true;
  }
  if (g.as_json()) return;
  std::cout << r["check"].get<std::string>() << " (" << r["b"] << "," << r["c"] << ") k=" << r["k"] << ": ";
  if (r["skipped"].get<bool>()) {
    std::cout << "skipped (enumeration cap)\n";
    return;
  }
  std::cout << (r["pass"].get<bool>() ? "pass" : "FAIL");
  if (!r["min_coeff"].is_null()) std::cout << ", min coefficient " << r["min_coeff"].get<std::string>();
  if (r.contains("algebra")) std::cout << ", algebra " << r["algebra"].dump();
  if (r.contains("beta"))
    std::cout << ", x" << r["beta"].dump() << " + x" << r["gamma"].dump() << " - x" << r["alpha"].dump();
  if (r.contains("domain_size")) std::cout << ", domain " << r["domain"].dump() << " with " << r["domain_size"] << " pairs";
  if (!g.no_timings) std::cout << " [" << r["millis"] << " ms]";
  std::cout << "\n";
}

int greedy_cmd(const Globals& g, int b, int c, int a1, int a2) {
  const rank2::GreedyElement e = rank2::greedy_element(b, c, a1, a2, g.enumeration());
  if (g.as_json()) {
    emit(g, rank2::to_json(e));
    return 0;
  }
  std::cout << "x[" << a1 << "," << a2 << "] in A(" << b << "," << c << ") = " << e.laurent.to_string() << "\n";
  std::cout << "compatible pairs by (|S2|, |S1|):\n";
  for (int p = 0; p <= a2; ++p) {
    std::cout << "  p=" << p << ":";
    for (int q = 0; q <= a1; ++q) std::cout << " " << e.grid.at(p, q);
    std::cout << "\n";
  }
  return 0;
}

void write_svg(const rank2::DyckPath& path, const std::string& file) {
  const int unit = 24, pad = 12;
  const int w = path.a1() * unit + 2 * pad, h = path.a2() * unit + 2 * pad;
  std::ofstream out(file);
  if (!out) throw rank2::error("cannot open " + file);
  auto x = [&](int v) { return pad + v * unit; };
  auto y = [&](int v) { return h - pad - v * unit; };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  out << "<line x1=\"" << x(0) << "\" y1=\"" << y(0) << "\" x2=\"" << x(path.a1()) << "\" y2=\"" << y(path.a2())
      << "\" stroke=\"#999\" stroke-dasharray=\"4\"/>\n<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (int t = 0; t <= path.length(); ++t) out << x(path.point(t).x) << "," << y(path.point(t).y) << " ";
  out << "\"/>\n</svg>\n";
}

int dyck_cmd(const Globals& g, int a1, int a2, std::optional<int> b, std::optional<int> c, const std::string& svg) {
  const rank2::DyckPath path = rank2::max_dyck_path(a1, a2);
  std::optional<rank2::BigInt> pairs;
  if (b && c) pairs = rank2::enumerate_compatible_pairs(path, *b, *c, g.max_edges, g.threads).total();
  if (!svg.empty()) write_svg(path, svg);
  if (g.as_json()) {
    json pts = json::array();
    for (int t = 0; t <= path.length(); ++t) pts.push_back({path.point(t).x, path.point(t).y});
    json j{{"a1", a1}, {"a2", a2}, {"word", path.word()}, {"points", pts}};
    if (pairs) j["compatible_pairs"] = pairs->str();
    emit(g, j);
    return 0;
  }
  std::cout << "D^{" << a1 << "x" << a2 << "}: " << path.word() << "\n";
  if (pairs) std::cout << "compatible pairs in A(" << *b << "," << *c << "): " << *pairs << "\n";
  return 0;
}

int support_cmd(const Globals& g, int b, int c, int a1, int a2) {
  const rank2::GreedyElement e = rank2::greedy_element(b, c, a1, a2, g.enumeration());
  const rank2::LatticeSet support = rank2::pointed_support(e);
  const rank2::LatticeSet region = rank2::region_lattice_points(rank2::RegionP(b, c, a1, a2));
  const bool imaginary = rank2::is_imaginary(b, c, {a1, a2});
  bool contained = true;
  for (const auto& pt : support) contained = contained && region.contains(pt);
  const bool pass = imaginary ? support == region : contained;
  if (g.as_json()) {
    json j = rank2::check_record("support", b, c, 0, pass, rank2::lp_min_coefficient(e.laurent), false, 0);
    j.erase("millis");
    j["index"] = {a1, a2};
    j["imaginary"] = imaginary;
    j["support_size"] = support.size();
    j["region_size"] = region.size();
    emit(g, j);
  } else {
    std::cout << (imaginary ? "support = region: " : "support in region: ") << (pass ? "true" : "false") << "\n";
  }
  return pass ? 0 : 1;
}

std::int64_t default_k_max(int b, int c) { return std::min(b, c) == 1 ? 3 : 2; }

Outcome finish(const Globals& g, Outcome out, const json& records) {
  if (g.as_json()) emit(g, records);
  return out;
}

// Errors caused by the arguments rather than by a failed verification.
bool is_usage_error(const rank2::error& e) {
  return dynamic_cast<const rank2::not_wild*>(&e) || dynamic_cast<const rank2::negative_index*>(&e) ||
         dynamic_cast<const rank2::out_of_range*>(&e) || dynamic_cast<const rank2::range_violated*>(&e) ||
         dynamic_cast<const rank2::not_imaginary_root*>(&e) || dynamic_cast<const rank2::precedence_violated*>(&e);
}

int exit_code(const Globals& g, const Outcome& out) {
  if (out.failed) return 1;
  if (out.skipped && g.strict) return 1;
  return 0;
}

int p_check_cmd(const Globals& g, int b, int c, std::int64_t k_min, std::optional<std::int64_t> k_max, bool split) {
  Outcome out;
  json records = json::array();
  for (std::int64_t k = k_min; k <= k_max.value_or(default_k_max(b, c)); ++k) {
    records.push_back(rank2::pk_record(b, c, k, g.enumeration()));
    account(g, out, records.back());
    if (!split) continue;
    for (const char* name : {"eq2", "eq1"}) {
      records.push_back(rank2::split_record(name, b, c, k, g.enumeration()));
      account(g, out, records.back());
    }
  }
  return exit_code(g, finish(g, out, records));
}

int mu_check_cmd(const Globals& g, int b, int c, std::int64_t k_min, std::int64_t k_max) {
  Outcome out;
  json records = json::array();
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    records.push_back(rank2::mu_record(b, c, k, g.enumeration()));
    account(g, out, records.back());
  }
  return exit_code(g, finish(g, out, records));
}

int cluster_vars_cmd(const Globals& g, int b, int c, std::int64_t m_min, std::int64_t m_max) {
  rank2::ClusterVarTable table(b, c);
  json records = json::array();
  for (std::int64_t m = m_min; m <= m_max; ++m) {
    const rank2::LaurentPoly2& x = table.get(m);
    if (g.as_json())
      records.push_back({{"m", m}, {"laurent", rank2::to_json(x)}});
    else
      std::cout << "x_" << m << " = " << x.to_string() << "\n";
  }
  if (g.as_json()) emit(g, records);
  return 0;
}

int sigma_check_cmd(const Globals& g, int b, int c, int a1, int a2) {
  Outcome out;
  json records = json::array();
  for (int ell : {1, 2}) {
    const std::string name = "sigma-" + std::to_string(ell);
    records.push_back(rank2::guarded_record(name, b, c, 0, [&] {
      bool ok = false;
      const double ms = rank2::detail::time_ms([&] { ok = rank2::verify_sigma_on_greedy(b, c, {a1, a2}, ell, g.enumeration()); });
      json j = rank2::check_record(name, b, c, 0, ok, std::nullopt, false, ms);
      const rank2::RootVector image = rank2::sigma_image(b, c, ell, {a1, a2});
      j["index"] = {a1, a2};
      j["image"] = {image.a1, image.a2};
      return j;
    }));
    account(g, out, records.back());
  }
  return exit_code(g, finish(g, out, records));
}

int identities_cmd(const Globals& g, int b, int c, std::int64_t k_min, std::int64_t k_max) {
  const rank2::IdentityReport rep = rank2::evaluate_identities(b, c, k_min, k_max);
  if (g.as_json()) {
    json checks = json::array();
    for (const auto& ch : rep.checks) checks.push_back({{"k", ch.k}, {"identity", ch.name}, {"pass", ch.pass}});
    emit(g, {{"check", "identities"}, {"b", b}, {"c", c}, {"k_min", k_min}, {"k_max", k_max}, {"mirrored", rep.mirrored},
             {"delta", rep.delta}, {"pass", rep.all_pass()}, {"checks", checks}});
  } else {
    for (const auto& ch : rep.checks)
      if (!ch.pass) std::cout << "k=" << ch.k << " " << ch.name << ": FAIL\n";
    std::cout << rep.checks.size() << " identities on k in [" << k_min << "," << k_max << "], delta = " << rep.delta
              << ": " << (rep.all_pass() ? "all pass" : "FAILURES") << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int verify_all_cmd(const Globals& g, std::optional<int> only) {
  rank2::acceptance::Options opt;
  opt.cap = g.max_edges;
  opt.threads = g.threads;
  opt.seed = g.seed;
  json results = json::array();
  bool all_pass = true;
  const int n = static_cast<int>(rank2::acceptance::criteria().size());
  for (int id = 1; id <= n; ++id) {
    if (only && *only != id) continue;
    const rank2::acceptance::Result r = rank2::acceptance::run(id, opt);
    all_pass = all_pass && r.pass;
    if (g.as_json()) {
      results.push_back(rank2::acceptance::to_json(r, !g.no_timings));
    } else {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.title << " - " << r.detail;
      if (!g.no_timings) std::cout << " (" << r.seconds << " s)";
      std::cout << "\n";
    }
  }
  if (g.as_json()) emit(g, results);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy elements and positivity checks for rank-2 cluster algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", g.threads, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--max-edges", g.max_edges, "Largest Dyck path (a1+a2) that will be enumerated")
      ->check(CLI::Range(0, 64));
  app.add_option("--seed", g.seed, "Seed for randomized property checks");
  app.add_flag("--strict", g.strict, "Treat checks skipped at the enumeration cap as failures");
  app.add_flag("--no-timings", g.no_timings, "Omit timings so output is byte-for-byte reproducible");

  int b = 0, c = 0, a1 = 0, a2 = 0;
  std::int64_t k_min = 0, m_min = -2, m_max = 5;
  std::optional<std::int64_t> k_max;
  std::optional<int> ob, oc, criterion;
  std::string svg;
  bool split = false;

  auto algebra = [&](CLI::App* sub, bool required) {
    sub->add_option("--b", b, "Cartan parameter b")->required(required)->check(CLI::PositiveNumber);
    sub->add_option("--c", c, "Cartan parameter c")->required(required)->check(CLI::PositiveNumber);
  };
  auto index = [&](CLI::App* sub, bool required) {
    sub->add_option("--a1", a1, "First index")->required(required)->check(CLI::NonNegativeNumber);
    sub->add_option("--a2", a2, "Second index")->required(required)->check(CLI::NonNegativeNumber);
  };
  auto k_range = [&](CLI::App* sub) {
    sub->add_option("--k-min", k_min, "First k");
    sub->add_option("--k-max", k_max, "Last k");
  };

  auto* greedy = app.add_subcommand("greedy", "Expand x[a1,a2] as a Laurent polynomial");
  algebra(greedy, true);
  index(greedy, true);

  auto* dyck = app.add_subcommand("dyck", "Print the maximal Dyck path D^{a1 x a2}");
  index(dyck, true);
  dyck->add_option("--b", ob, "Also count compatible pairs in A(b,c)");
  dyck->add_option("--c", oc);
  dyck->add_option("--svg", svg, "Write the path as SVG");

  auto* support = app.add_subcommand("support", "Compare the pointed support of x[a1,a2] with the region P");
  algebra(support, true);
  index(support, true);

  auto* p_check = app.add_subcommand("p-check", "Check that p_k has nonnegative coefficients");
  algebra(p_check, true);
  k_range(p_check);
  p_check->add_flag("--split", split, "Also check the two summands of p_k separately");

  auto* mu_check = app.add_subcommand("mu-check", "Check the injection between compatible pairs");
  algebra(mu_check, true);
  k_range(mu_check);

  auto* cluster_vars = app.add_subcommand("cluster-vars", "Print cluster variables x_m in the initial cluster");
  algebra(cluster_vars, true);
  cluster_vars->add_option("--m-min", m_min, "First m");
  cluster_vars->add_option("--m-max", m_max, "Last m");

  auto* sigma_check = app.add_subcommand("sigma-check", "Check sigma_1, sigma_2 on x[a1,a2]");
  algebra(sigma_check, true);
  a1 = a2 = 1;
  index(sigma_check, false);

  auto* identities = app.add_subcommand("identities", "Check the sequence identities");
  algebra(identities, true);
  k_range(identities);

  auto* verify_all = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify_all->add_option("--criterion", criterion, "Run a single criterion")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*greedy) return greedy_cmd(g, b, c, a1, a2);
    if (*dyck) {
      if (ob.has_value() != oc.has_value()) throw CLI::ValidationError("--b and --c must be given together");
      return dyck_cmd(g, a1, a2, ob, oc, svg);
    }
    if (*support) return support_cmd(g, b, c, a1, a2);
    if (*p_check) return p_check_cmd(g, b, c, k_min, k_max, split);
    if (*mu_check) {
      const std::int64_t first = mu_check->count("--k-min") ? k_min : 1;
      return mu_check_cmd(g, b, c, first, k_max.value_or(first + 2));
    }
    if (*cluster_vars) return cluster_vars_cmd(g, b, c, m_min, m_max);
    if (*sigma_check) return sigma_check_cmd(g, b, c, a1, a2);
    if (*identities) {
      const std::int64_t first = identities->count("--k-min") ? k_min : -3;
      return identities_cmd(g, b, c, first, k_max.value_or(10));
    }
    if (*verify_all) return verify_all_cmd(g, criterion);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rank2::too_large& e) {
    std::cerr << "skipped: " << e.what() << "\n";
    return g.strict ? 1 : 0;
  } catch (const rank2::error& e) {
    if (is_usage_error(e)) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
