#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symk2/analysis.hpp"
#include "symk2/parse.hpp"
#include "symk2/probe.hpp"
#include "symk2/report.hpp"

using namespace symk2;

namespace {

std::string read_arg_or_stdin(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_check(const std::string& text, std::uint64_t seed, int trials, bool json) {
  RationalMap m = parse_rational_map(text);
  auto t0 = std::chrono::steady_clock::now();
  Report r = build_check_report(m, seed, trials);
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (json)
    emit(report_to_json(r));
  else
    std::cout << report_to_text(r);
  return r.agreement ? 0 : 2;
}

int cmd_tame(const std::string& text, std::uint64_t seed, bool json) {
  RationalMap m = parse_rational_map(text);
  Shear sh(seed);
  TameElement t = tame_symbol(principal_divisor(m.f()), principal_divisor(m.g()), sh);
  bool matches = equals(t, reference_symbol(sh));
  if (json) {
    ordered_json j;
    j["map"]["f"] = m.f().str();
    j["map"]["g"] = m.g().str();
    j["tame_components"] = tame_to_json(t);
    j["matches_reference"] = matches;
    j["seed"] = seed;
    emit(j);
  } else {
    std::cout << "tame symbol: " << t.str() << "\n";
    std::cout << "matches reference: " << (matches ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_divisor(const std::string& text, bool json) {
  RationalFunction f = parse_rational_function(read_arg_or_stdin(text));
  Divisor d = principal_divisor(f);
  if (json) {
    ordered_json j;
    j["function"] = f.str();
    j["divisor"] = divisor_to_json(d);
    emit(j);
  } else {
    std::string out = "{";
    bool first = true;
    for (const auto& [c, m] : d.components()) {
      if (!first) out += ", ";
      first = false;
      out += c.poly().str() + ": " + std::to_string(m);
    }
    std::cout << out << "}\n";
  }
  return 0;
}

int cmd_intersect(const std::string& t1, const std::string& t2, std::uint64_t seed, bool json) {
  Curve c1(parse_projective_poly(t1));
  Curve c2(parse_projective_poly(t2));
  IntersectionStats st;
  ZeroCycle z = intersection_cycle(c1, c2, Shear(seed), &st);
  if (json) {
    ordered_json j;
    j["curves"] = {c1.poly().str(), c2.poly().str()};
    j["cycle"] = cycle_to_json(z);
    j["degree"] = z.degree();
    j["seed"] = seed;
    emit(j);
  } else {
    std::cout << z.str() << "\n";
    std::cout << "total degree: " << z.degree() << "\n";
  }
  return 0;
}

int cmd_fibers(const std::string& text, std::uint64_t seed, int trials, bool json) {
  RationalMap m = parse_rational_map(read_arg_or_stdin(text));
  if (trials <= 0) trials = 5;
  Shear sh(seed);
  Rng rng(Rng::mix(seed, 0x46494252ull));
  std::vector<FiberSample> samples;
  for (int i = 0; i < trials; ++i) samples.push_back(sample_fiber(m, rng, sh));
  if (json) {
    ordered_json j;
    j["map"]["f"] = m.f().str();
    j["map"]["g"] = m.g().str();
    ordered_json arr = ordered_json::array();
    for (const FiberSample& s : samples) {
      ordered_json e;
      e["target"] = "(" + rat_str(s.a) + ", " + rat_str(s.b) + ")";
      e["count"] = s.count;
      e["redraws"] = s.redraws;
      arr.push_back(std::move(e));
    }
    j["fibers"] = std::move(arr);
    j["seed"] = seed;
    emit(j);
  } else {
    for (const FiberSample& s : samples)
      std::cout << "fiber (" << rat_str(s.a) << ", " << rat_str(s.b) << "): " << s.count
                << " point(s)\n";
  }
  return 0;
}

int cmd_corpus(std::uint64_t seed, int count, int max_degree, bool json) {
  auto corpus = gen_corpus(seed, count, max_degree);
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : corpus) {
      ordered_json j;
      j["f"] = e.map.f().str();
      j["g"] = e.map.g().str();
      j["expected_symplectic"] = e.expected_symplectic;
      arr.push_back(std::move(j));
    }
    ordered_json top;
    top["corpus"] = std::move(arr);
    top["seed"] = seed;
    emit(top);
  } else {
    for (const auto& e : corpus)
      std::cout << (e.expected_symplectic ? "true" : "false") << "\t" << e.map.str() << "\n";
  }
  return 0;
}

struct SelfCheck {
  int passed = 0, failed = 0;
  std::vector<std::pair<std::string, bool>> results;
  void record(const std::string& name, bool ok) {
    (ok ? passed : failed)++;
    results.emplace_back(name, ok);
  }
};

Poly random_affine_poly(Rng& rng, int maxdeg) {
  Poly p(affine_vars());
  for (int i = 0; i <= maxdeg; ++i)
    for (int j = 0; i + j <= maxdeg; ++j) p.add_term({i, j}, Rat(rng.range(-2, 2)));
  return p;
}

Curve random_curve(Rng& rng, int d) {
  while (true) {
    Poly p(projective_vars());
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) p.add_term({i, j, d - i - j}, Rat(rng.range(-3, 3)));
    if (p.is_zero() || p.total_degree() != d) continue;
    if (is_irreducible(p)) return Curve::trusted(p);
  }
}

int cmd_selfcheck(std::uint64_t seed, bool json) {
  SelfCheck sc;
  Shear sh(seed);
  Rng rng(Rng::mix(seed, 0x53454c46ull));
  IntersectionStats st;

  {  // the reference symbol has the expected two components
    TameElement ref = reference_symbol(sh, &st);
    ZeroCycle on_h, on_v;
    on_h.add(ClosedPoint::origin(), -1);
    on_h.add(ClosedPoint::inf_h(), 1);
    on_v.add(ClosedPoint::origin(), 1);
    on_v.add(ClosedPoint::inf_v(), -1);
    sc.record("reference-symbol", ref.components().size() == 2 &&
                                      ref.component(Curve::line_h()) == on_h &&
                                      ref.component(Curve::line_v()) == on_v);
  }
  for (int i = 0; i < 5; ++i) {  // f and 1-f annihilate
    Poly f = random_affine_poly(rng, 2);
    if (f.is_constant()) {
      --i;
      continue;
    }
    RationalFunction rf = RationalFunction::from_poly(f);
    RationalFunction om = RationalFunction::constant(Rat(1)) - rf;
    TameElement t = tame_symbol(principal_divisor(rf), principal_divisor(om), sh, &st);
    sc.record("steinberg-" + std::to_string(i), t.is_empty());
  }
  for (int i = 0; i < 5; ++i) {  // affine residues cancel and components balance
    Poly fn = random_affine_poly(rng, 2), gn = random_affine_poly(rng, 2);
    if (fn.is_constant() || gn.is_constant() || fn.is_zero() || gn.is_zero()) {
      --i;
      continue;
    }
    TameElement t = tame_symbol(principal_divisor(RationalFunction::from_poly(fn)),
                                principal_divisor(RationalFunction::from_poly(gn)), sh, &st);
    ZeroCycle total;
    bool deg_ok = true;
    for (const auto& [c, z] : t.components()) {
      total = total + z;
      if (z.degree() != 0) deg_ok = false;
    }
    sc.record("residue-sum-" + std::to_string(i),
              deg_ok && cycle_restrict_affine(total).is_zero());
  }
  for (int i = 0; i < 10; ++i) {  // intersection degrees are multiplicative
    Curve a = random_curve(rng, 1 + static_cast<int>(rng.range(0, 2)));
    Curve b = random_curve(rng, 1 + static_cast<int>(rng.range(0, 2)));
    if (a == b) {
      --i;
      continue;
    }
    ZeroCycle z = intersection_cycle(a, b, sh, &st);
    sc.record("bezout-" + std::to_string(i), z.degree() == a.degree() * b.degree());
  }
  {  // the two checkers agree on a small corpus
    bool ok = true;
    for (const auto& e : gen_corpus(Rng::mix(seed, 0xC0u), 12, 5)) {
      if (!theorem1_crosscheck(e.map, sh, &st)) ok = false;
      if (is_symplectic_form(e.map).preserves() != e.expected_symplectic) ok = false;
    }
    sc.record("corpus-crosscheck", ok);
  }
  {  // fiber oracles
    RationalFunction x = RationalFunction::x(), y = RationalFunction::y();
    bool ok = fiber_count(RationalMap(x * x, y), Rat(3), Rat(5), sh, &st).count == 2 &&
              fiber_count(RationalMap(x * y, y), Rat(7), Rat(2), sh, &st).count == 1 &&
              fiber_count(gen_monomial({{{2, 1}, {1, 1}}}), Rat(2), Rat(3), sh, &st).count == 1;
    sc.record("fiber-oracles", ok);
  }

  if (json) {
    ordered_json j;
    j["passed"] = sc.passed;
    j["failed"] = sc.failed;
    ordered_json arr = ordered_json::array();
    for (const auto& [name, ok] : sc.results) {
      ordered_json e;
      e["name"] = name;
      e["ok"] = ok;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["seed"] = seed;
    emit(j);
  } else {
    for (const auto& [name, ok] : sc.results)
      if (!ok) std::cout << "FAIL " << name << "\n";
    std::cout << "selfcheck: " << sc.passed << " passed, " << sc.failed << " failed\n";
  }
  return sc.failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for log-form preservation by plane rational maps"};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t seed = 0;
  int trials = 0, max_degree = 6, count = 100;
  app.add_flag("--json", json, "emit a structured report");
  app.add_option("--seed", seed, "seed for all randomized choices (default 0)");
  app.add_option("--trials", trials, "number of fiber targets to sample");
  app.add_option("--max-degree", max_degree, "corpus coordinate-degree cap");
  app.add_option("--count", count, "corpus size");

  std::string map_text, expr_text, p1_text, p2_text;
  auto* c_check = app.add_subcommand("check", "run both preservation checkers and compare");
  c_check->add_option("map", map_text, "map \"(f, g)\" or - for stdin")->required();
  c_check->fallthrough();
  auto* c_tame = app.add_subcommand("tame", "tame symbol of the coordinate pair of a map");
  c_tame->add_option("map", map_text, "map \"(f, g)\" or - for stdin")->required();
  c_tame->fallthrough();
  auto* c_div = app.add_subcommand("divisor", "principal divisor of a rational function");
  c_div->add_option("function", expr_text, "rational function in x, y")->required();
  c_div->fallthrough();
  auto* c_int = app.add_subcommand("intersect", "intersection cycle of two plane curves");
  c_int->add_option("first", p1_text, "homogeneous polynomial in X, Y, Z")->required();
  c_int->add_option("second", p2_text, "homogeneous polynomial in X, Y, Z")->required();
  c_int->fallthrough();
  auto* c_fib = app.add_subcommand("fibers", "count points over random targets");
  c_fib->add_option("map", map_text, "map \"(f, g)\" or - for stdin")->required();
  c_fib->fallthrough();
  auto* c_corp = app.add_subcommand("corpus", "emit a labeled corpus of maps");
  c_corp->fallthrough();
  auto* c_self = app.add_subcommand("selfcheck", "run the invariant battery");
  c_self->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*c_check) return cmd_check(read_arg_or_stdin(map_text), seed, trials, json);
    if (*c_tame) return cmd_tame(read_arg_or_stdin(map_text), seed, json);
    if (*c_div) return cmd_divisor(expr_text, json);
    if (*c_int) return cmd_intersect(p1_text, p2_text, seed, json);
    if (*c_fib) return cmd_fibers(map_text, seed, trials, json);
    if (*c_corp) return cmd_corpus(seed, count, max_degree, json);
    if (*c_self) return cmd_selfcheck(seed, json);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const value_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
