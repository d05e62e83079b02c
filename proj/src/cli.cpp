#include "ty/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ty/diagram.hpp"
#include "ty/parallel.hpp"
#include "ty/perm.hpp"
#include "ty/report.hpp"
#include "ty/skew.hpp"
#include "ty/tensor_op.hpp"

namespace ty {

namespace {

std::vector<long> parse_weight_csv(const std::string& csv) {
  std::vector<long> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size()) throw Error("cannot parse weight entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<long> partition_to_weight(std::vector<long> part) {
  // partition (a_1 >= ... >= a_n >= 0) -> (-a_n, ..., -a_1)
  std::vector<long> out;
  for (auto it = part.rbegin(); it != part.rend(); ++it) out.push_back(-*it);
  return out;
}

OrderedJson weight_json(const std::vector<long>& w) {
  OrderedJson a = OrderedJson::array();
  for (long v : w) a.push_back(v);
  return a;
}

OrderedJson poly_json(const std::vector<Rational>& roots) {
  OrderedJson j;
  j["monic"] = true;
  OrderedJson rs = OrderedJson::array();
  for (const auto& r : roots) rs.push_back(r.str());
  j["roots"] = std::move(rs);
  return j;
}

OrderedJson drinfeld_json(const DrinfeldData& dd) {
  OrderedJson a = OrderedJson::array();
  for (const auto& roots : dd.roots) a.push_back(poly_json(roots));
  return a;
}

OrderedJson pattern_json(const TrapPattern& p) {
  OrderedJson j;
  OrderedJson lam = OrderedJson::array(), lamp = OrderedJson::array();
  for (int k = p.n; k >= p.m; --k)
    lam.push_back(weight_json(p.lam_rows[static_cast<size_t>(k - p.m)]));
  for (int k = p.n; k >= p.m + 1; --k)
    lamp.push_back(weight_json(p.lamp_rows[static_cast<size_t>(k - p.m - 1)]));
  j["rows"] = std::move(lam);
  j["primed_rows"] = std::move(lamp);
  j["weight"] = weight_json(p.weight());
  return j;
}

HighestWeight hw_of_longs(const std::vector<long>& v) { return HighestWeight::of_longs(v); }

void emit(const RunReport& rep, bool text, std::ostream& out) {
  if (!text) {
    out << rep.to_json().dump(2) << "\n";
    return;
  }
  out << "command: " << rep.command << "\n";
  if (!rep.results.empty()) out << "results: " << rep.results.dump(2) << "\n";
  for (const auto& c : rep.checks)
    out << (c.pass ? "  pass  " : "  FAIL  ") << c.name << " (" << c.ref << ")"
        << (c.pass || c.witness.empty() ? "" : "  witness: " + c.witness) << "\n";
  if (rep.with_timing) out << "elapsed_ms: " << rep.elapsed_ms << "\n";
}

IndexScheme scheme_of(const std::string& cs, int n) {
  if (cs == "sp") return IndexScheme::sp(n);
  if (cs == "o") return IndexScheme::o_odd(n);
  if (cs == "oe") return IndexScheme::o_even(n);
  throw Error("unknown case '" + cs + "' (expected sp, o or oe)");
}

// --- drinfeld ---------------------------------------------------------------

int run_drinfeld(const std::vector<long>& lam, const std::vector<long>& mu,
                 const std::string& method, bool text, bool timing,
                 std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "drinfeld";
  rep.with_timing = timing;
  rep.params["lambda"] = weight_json(lam);
  rep.params["mu"] = weight_json(mu);
  rep.params["method"] = method;

  validate_sp_weight(lam);
  validate_sp_weight(mu);
  if (mu.size() >= lam.size()) throw InvalidWeight("need m < n");
  if (!skew_nonempty(lam, mu))
    throw EmptySkewSpace(
        "the skew space is zero: betweenness needs mu_i >= lambda_{i+n-m} and "
        "lambda_i >= mu_{i+n-m}");

  bool want_diagram = method == "diagram" || method == "all";
  bool want_closed = method == "closed-form" || method == "all";
  bool want_oracle = method == "oracle" || method == "all";

  std::vector<std::pair<std::string, DrinfeldData>> results;
  if (want_diagram) results.emplace_back("diagram", drinfeld_diagram(lam, mu));
  if (want_closed)
    results.emplace_back("closed-form", drinfeld_from_hw(hw_closed_form_all(lam, mu)));
  if (want_oracle) {
    IndexScheme sch = IndexScheme::sp(static_cast<int>(lam.size()));
    SkewModule sm(hw_of_longs(lam), hw_of_longs(mu), sch);
    QVec zeta = find_highest_vector(sm);
    results.emplace_back("oracle", drinfeld_from_hw(extract_hw(sm, zeta)));
  }

  for (const auto& [name, dd] : results) rep.results[name] = drinfeld_json(dd);
  bool match = true;
  for (size_t i = 1; i < results.size(); ++i)
    match = match && results[i].second == results[0].second;
  if (results.size() > 1) {
    rep.results["match"] = match;
    rep.add(CheckResult{"route-equality", "Drinfeld polynomial routes", match,
                        match ? "" : "routes disagree"});
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  emit(rep, text, out);
  if (!match) {
    err << "error: Drinfeld polynomial routes disagree\n";
    return 1;
  }
  return 0;
}

// --- verify -----------------------------------------------------------------

void suite_omega(int max_n, RunReport& rep) {
  for (int N = 2; N <= max_n; ++N) {
    bool ok = omega_quotient_bijective(N);
    rep.add(CheckResult{"omega-bijective:N=" + std::to_string(N),
                        "permutation quotient map", ok, ok ? "" : "collision found"});
  }
  for (const IndexScheme& sch :
       {IndexScheme::sp(1), IndexScheme::sp(2), IndexScheme::o_odd(1)}) {
    auto Q = build_Q<Rational>(sch);
    bool q_ok = Q * Q == Q * Rational(sch.N);
    rep.add(CheckResult{"Q-square:" + sch.str(), "Q^2 = N Q", q_ok, ""});
    auto P = build_P<Rational>(sch);
    bool p_ok = P * P == TensorOp<Rational>::identity(sch, 2);
    rep.add(CheckResult{"P-square:" + sch.str(), "flip involution", p_ok, ""});
    bool rt_ok = true;
    for (int t = 0; t < 3; ++t) {
      Rational x = sample_point(t);
      auto lhs = build_Rt<Rational>(sch, x) * build_Rt<Rational>(sch, Rational(sch.N) - x);
      rt_ok = rt_ok && lhs == TensorOp<Rational>::identity(sch, 2);
    }
    rep.add(CheckResult{"Rt-inverse:" + sch.str(), "transposed R-matrix inverse", rt_ok, ""});
    bool ak_ok = true;
    for (int k = 1; k <= std::min(4, sch.N); ++k) {
      auto A = antisymmetrizer<Rational>(sch, k);
      Rational kfact(1);
      for (int i = 2; i <= k; ++i) kfact *= Rational(i);
      ak_ok = ak_ok && (A * A == A * kfact);
    }
    rep.add(CheckResult{"antisym-projector:" + sch.str(), "antisymmetrizer scaling", ak_ok, ""});
  }
}

void suite_relations(bool quaternary, int samples, RunReport& rep) {
  std::vector<LieRep> reps;
  reps.push_back(vector_rep(IndexScheme::sp(1)));
  reps.push_back(vector_rep(IndexScheme::sp(2)));
  reps.push_back(vector_rep(IndexScheme::o_odd(1)));
  reps.push_back(extract_irrep(HighestWeight::of_longs({-1, -1}), IndexScheme::sp(2)));
  for (const auto& rep_mod : reps) {
    rep.add(quaternary ? check_quaternary(rep_mod, samples)
                       : check_symmetry(rep_mod, samples));
  }
}

void suite_minors(RunReport& rep) {
  LieRep sp2 = vector_rep(IndexScheme::sp(1));
  LieRep sp4 = vector_rep(IndexScheme::sp(2));
  LieRep o3 = vector_rep(IndexScheme::o_odd(1));
  rep.add(check_minor_routes(sp2, 2));
  rep.add(check_minor_routes(o3, 3));
  rep.add(check_minor_routes(sp4, 4, /*stride=*/7));
  rep.add(check_aux_identities(sp4));
  rep.add(check_aux_identities(o3));
  rep.add(check_centrality(sp4));
}

void suite_sylvester(const IndexScheme& sch, int m, int samples, RunReport& rep) {
  LieRep mod = vector_rep(sch);
  rep.add(check_sylvester_sdet(mod, m));
  rep.add(check_nnentry(mod, m));
  rep.add(check_sharp_relations(mod, m, samples));
  rep.add(check_dual_relations(mod, m, samples));
  if (m == sch.n - 1 && sch.symplectic()) rep.add(check_homcoin(mod, samples));
}

void suite_skew(const std::vector<long>& lam, const std::vector<long>& mu, RunReport& rep) {
  IndexScheme sch = IndexScheme::sp(static_cast<int>(lam.size()));
  SkewModule sm(hw_of_longs(lam), hw_of_longs(mu), sch);
  long npat = static_cast<long>(enumerate_patterns(lam, mu).size());
  bool dim_ok = npat == sm.dim();
  rep.add(CheckResult{"dim-concordance", "pattern count vs skew dimension", dim_ok,
                      dim_ok ? "" : "patterns " + std::to_string(npat) + " vs dim " +
                                        std::to_string(sm.dim())});
  QVec zeta = find_highest_vector(sm);
  auto hw = extract_hw(sm, zeta);
  auto closed = hw_closed_form_all(lam, mu);
  bool hw_ok = hw == closed;
  rep.add(CheckResult{"hw-closed-form", "highest weight formula", hw_ok,
                      hw_ok ? "" : "operator eigenvalues differ from the formula"});
  DrinfeldData via_hw = drinfeld_from_hw(hw);
  DrinfeldData via_diag = drinfeld_diagram(lam, mu);
  bool dd_ok = via_hw == via_diag;
  rep.add(CheckResult{"drinfeld-routes", "Drinfeld polynomial routes", dd_ok,
                      dd_ok ? "" : via_hw.str() + " vs " + via_diag.str()});
  rep.add(check_restriction(sm));
  rep.add(check_skew_sdetav(sm, hw));
  rep.add(check_skew_sklmu(sm, hw, zeta));
}

void suite_irreducible(const std::vector<long>& lam, const std::vector<long>& mu,
                       RunReport& rep) {
  IndexScheme sch = IndexScheme::sp(static_cast<int>(lam.size()));
  SkewModule sm(hw_of_longs(lam), hw_of_longs(mu), sch);
  bool irr = check_irreducible(sm);
  rep.add(CheckResult{"irreducible", "trivial commutant", irr,
                      irr ? "" : "commutant has dimension > 1"});
}

int run_verify(const std::string& suite, const std::string& cs, int n, int m, int max_n,
               int samples, long seed, const std::vector<long>& lam,
               const std::vector<long>& mu, bool text, bool timing, std::ostream& out,
               std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "verify";
  rep.with_timing = timing;
  rep.params["suite"] = suite;
  rep.params["seed"] = seed;
  if (suite == "omega") {
    rep.params["max_n"] = max_n;
    suite_omega(max_n, rep);
  } else if (suite == "quaternary" || suite == "symmetry") {
    if (n > 0) {
      LieRep mod = vector_rep(scheme_of(cs, n));
      rep.add(suite == "quaternary" ? check_quaternary(mod, samples)
                                    : check_symmetry(mod, samples));
    } else {
      suite_relations(suite == "quaternary", samples, rep);
    }
  } else if (suite == "minors") {
    suite_minors(rep);
  } else if (suite == "sylvester") {
    if (n <= 0 || m < 0) throw Error("sylvester suite needs --n and --m");
    rep.params["n"] = n;
    rep.params["m"] = m;
    suite_sylvester(scheme_of(cs, n), m, samples, rep);
  } else if (suite == "skew") {
    if (lam.empty()) throw Error("skew suite needs --lambda and --mu");
    rep.params["lambda"] = weight_json(lam);
    rep.params["mu"] = weight_json(mu);
    suite_skew(lam, mu, rep);
  } else if (suite == "irreducible") {
    if (lam.empty()) throw Error("irreducible suite needs --lambda and --mu");
    rep.params["lambda"] = weight_json(lam);
    rep.params["mu"] = weight_json(mu);
    suite_irreducible(lam, mu, rep);
  } else {
    throw Error("unknown suite '" + suite + "'");
  }
  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  emit(rep, text, out);
  if (!rep.all_pass()) {
    for (const auto& c : rep.checks)
      if (!c.pass) {
        err << "error: " << c.name << " failed: " << c.witness << "\n";
        break;
      }
    return 1;
  }
  return 0;
}

// --- patterns / diagram -----------------------------------------------------

int run_patterns(const std::vector<long>& lam, const std::vector<long>& mu,
                 const std::string& mode, bool text, bool timing, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "patterns";
  rep.with_timing = timing;
  rep.params["lambda"] = weight_json(lam);
  rep.params["mu"] = weight_json(mu);
  rep.params["mode"] = mode;
  if (mode == "count") {
    rep.results["count"] = enumerate_patterns(lam, mu).size();
  } else if (mode == "enumerate") {
    OrderedJson arr = OrderedJson::array();
    for (const auto& p : enumerate_patterns(lam, mu)) arr.push_back(pattern_json(p));
    rep.results["patterns"] = std::move(arr);
  } else if (mode == "lambda0") {
    rep.results["lambda0"] = pattern_json(lambda0(lam, mu));
  } else {
    throw Error("unknown mode '" + mode + "'");
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  emit(rep, text, out);
  return 0;
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with twisted Yangian minors and skew modules"};
  app.require_subcommand(1);

  std::string lambda_csv, mu_csv, method = "all", suite, cs = "sp", mode = "count";
  bool partition = false, text = false, no_timing = false;
  int n = 0, m = -1, max_n = 6, samples = 5, shift = 0, threads = 0;
  long seed = 0;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--text", text, "human-readable output instead of JSON");
    c->add_flag("--no-timing", no_timing, "suppress wall-clock timing in reports");
    c->add_option("--threads", threads, "worker thread limit (0 = all)");
  };

  CLI::App* dr = app.add_subcommand("drinfeld", "Drinfeld polynomials of a skew module");
  dr->add_option("--lambda", lambda_csv, "top weight, comma-separated")->required();
  dr->add_option("--mu", mu_csv, "bottom weight, comma-separated (may be empty)");
  dr->add_option("--method", method, "diagram | closed-form | oracle | all");
  dr->add_flag("--partition", partition, "weights given as positive partitions");
  add_common(dr);

  CLI::App* vf = app.add_subcommand("verify", "run an identity suite");
  vf->add_option("--suite", suite,
                 "omega | quaternary | symmetry | minors | sylvester | skew | irreducible")
      ->required();
  vf->add_option("--case", cs, "sp | o | oe");
  vf->add_option("--n", n, "half-rank of the ambient algebra");
  vf->add_option("--m", m, "half-rank of the subalgebra");
  vf->add_option("--max-n", max_n, "largest symmetric group size");
  vf->add_option("--samples", samples, "sample count for per-point relation checks");
  vf->add_option("--seed", seed, "echoed into the report");
  vf->add_option("--lambda", lambda_csv, "top weight");
  vf->add_option("--mu", mu_csv, "bottom weight");
  vf->add_flag("--partition", partition, "weights given as positive partitions");
  add_common(vf);

  CLI::App* pt = app.add_subcommand("patterns", "trapezium patterns between two weights");
  pt->add_option("--lambda", lambda_csv)->required();
  pt->add_option("--mu", mu_csv);
  pt->add_option("--mode", mode, "count | enumerate | lambda0");
  pt->add_flag("--partition", partition, "weights given as positive partitions");
  add_common(pt);

  CLI::App* dg = app.add_subcommand("diagram", "ASCII picture of a weight diagram");
  dg->add_option("--lambda", lambda_csv)->required();
  dg->add_option("--shift", shift, "lift the diagram this many rows up");
  dg->add_flag("--partition", partition, "weight given as a positive partition");

  std::vector<const char*> argv;
  argv.push_back("ty");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::stringstream ss;
    int code = app.exit(e, ss, ss);
    (code == 0 ? out : err) << ss.str();
    return code;
  }

  if (threads > 0) thread_limit() = threads;

  try {
    std::vector<long> lam = parse_weight_csv(lambda_csv);
    std::vector<long> mu = parse_weight_csv(mu_csv);
    if (partition) {
      lam = partition_to_weight(lam);
      mu = partition_to_weight(mu);
    }
    if (dr->parsed())
      return run_drinfeld(lam, mu, method, text, !no_timing, out, err);
    if (vf->parsed())
      return run_verify(suite, cs, n, m, max_n, samples, seed, lam, mu, text, !no_timing,
                        out, err);
    if (pt->parsed()) return run_patterns(lam, mu, mode, text, !no_timing, out);
    if (dg->parsed()) {
      out << render_diagram(lam, shift);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace ty
