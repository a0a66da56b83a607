// SPDX-License-Identifier: Apache-2.0

#include "repairlab/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <omp.h>

#include "repairlab/bounds.hpp"
#include "repairlab/compose.hpp"
#include "repairlab/generic_repair.hpp"
#include "repairlab/matrix_io.hpp"
#include "repairlab/repair_verify.hpp"
#include "repairlab/smallsub.hpp"
#include "repairlab/yebarg.hpp"

namespace repairlab::cli {

namespace {

using nlohmann::json;

Rational parse_rational(const std::string& s) {
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const std::int64_t whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
      const std::int64_t part = frac.empty() ? 0 : std::stoll(frac);
      return Rational(whole) + Rational(s[0] == '-' ? -part : part, den);
    }
    return Rational(std::stoll(s));
  } catch (const std::exception&) {
    throw Error(ErrorCode::kSpecParseError, "not a rational number: '" + s + "'");
  }
}

std::string fmt(double x, int prec) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(prec) << x;
  return o.str();
}

double as_double(const Rational& q) { return boost::rational_cast<double>(q); }

// Everything the generic verification loop needs to know about one code.
template <class F>
struct Instance {
  F field;
  BlockParityCheck<F> pcm;
  std::function<Matrix<F>(std::size_t)> repair_matrix;
  std::optional<ProceduralRepair<F>> procedural;
  json parameters;
  // Construction-specific checks on measured counts; appends to `checks`.
  std::function<void(const std::vector<std::vector<std::size_t>>&, const std::vector<std::map<int, std::size_t>>&,
                     const Classification&, json& checks)>
      annotate;
};

struct Check {
  static void add(json& checks, const std::string& name, bool ok, json detail = nullptr) {
    json c = {{"name", name}, {"ok", ok}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
  }
};

Instance<ExtField> make_smallsub(const CodeSpec& spec) {
  auto code = std::make_shared<SmallSubCode>(build_smallsub(spec.n, spec.k, spec.tau));
  Instance<ExtField> inst{code->field(), code->pcm, {}, {}, {}, {}};
  inst.repair_matrix = [code](std::size_t i) { return smallsub_repair_matrix(*code, i); };
  inst.procedural = [code](const ArrayCodeword<ExtField>& cw, std::size_t i) { return repair_smallsub(*code, cw, i); };
  const std::int64_t ell = static_cast<std::int64_t>(code->ell);
  inst.parameters = {{"n", code->n}, {"k", code->k}, {"r", code->r}, {"s", code->s}, {"tau", code->tau}, {"ell", code->ell},
                     {"l_field", code->tower.l_field.characteristic()}, {"extension_degree", code->field().degree()}};
  inst.annotate = [code, ell](const auto& counts, const auto& stages, const Classification& cls, json& checks) {
    const int n = code->n, k = code->k, r = code->r, tau = code->tau;
    const Rational cs = cut_set(n, k, n - 1, ell);
    const Rational bound = (Rational(1) + Rational(1, tau)) * cs;
    const auto rt1 = static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(r), static_cast<unsigned>(tau - 1)));
    const std::int64_t stage1 = (n - 1) * rt1;
    const std::int64_t stage2_cap = (r - 1) * rt1 * (code->s / tau);
    bool totals_ok = true, s1_ok = true, s2_ok = true;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      std::int64_t total = 0;
      for (auto b : counts[i]) total += static_cast<std::int64_t>(b);
      totals_ok = totals_ok && Rational(total) <= bound && Rational(total) >= cs;
      auto get = [&](int st) {
        auto it = stages[i].find(st);
        return it == stages[i].end() ? std::int64_t{0} : static_cast<std::int64_t>(it->second);
      };
      s1_ok = s1_ok && get(1) == stage1;
      s2_ok = s2_ok && get(2) <= stage2_cap;
    }
    Check::add(checks, "total within (1 + 1/tau) * cut-set", totals_ok, {{"bound", to_json(bound)}, {"cut_set", to_json(cs)}});
    Check::add(checks, "stage-1 count", s1_ok, {{"expected", stage1}});
    Check::add(checks, "stage-2 count cap", s2_ok, {{"cap", stage2_cap}});
    Check::add(checks, "a_measured in [1, 1 + 1/tau]", cls.a_measured >= 1 && cls.a_measured <= Rational(1) + Rational(1, tau),
               {{"a_measured", to_json(cls.a_measured)}});
  };
  return inst;
}

Instance<PrimeField> make_yebarg(const CodeSpec& spec) {
  const int r = spec.n - spec.k;
  std::uint32_t p = 0;
  if (spec.field) {
    p = *spec.field;
  } else {
    p = static_cast<std::uint32_t>(next_prime(static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(spec.n) + 1));
  }
  PrimeField f = make_prime_field(p);
  auto code = std::make_shared<YeBargCode<PrimeField>>(build_yb(spec.n, spec.k, f));
  Instance<PrimeField> inst{f, code->pcm, {}, {}, {}, {}};
  inst.repair_matrix = [code](std::size_t i) { return yb_repair_matrix(*code, static_cast<int>(i) + 1); };
  inst.procedural = [code](const ArrayCodeword<PrimeField>& cw, std::size_t i) { return repair_yb(*code, cw, i); };
  inst.parameters = {{"n", code->n}, {"k", code->k}, {"r", code->r}, {"ell", code->ell}, {"field", p}};
  const std::int64_t ell = static_cast<std::int64_t>(code->ell);
  inst.annotate = [code, ell](const auto& counts, const auto&, const Classification& cls, json& checks) {
    const int n = code->n, k = code->k;
    const std::size_t per = code->ell / static_cast<std::size_t>(code->r);
    bool uniform = true;
    for (std::size_t i = 0; i < counts.size(); ++i)
      for (std::size_t j = 0; j < counts[i].size(); ++j) uniform = uniform && counts[i][j] == (i == j ? 0 : per);
    Check::add(checks, "every helper sends ell / r", uniform, {{"ell_over_r", per}});
    Check::add(checks, "total equals cut-set", Rational(static_cast<std::int64_t>(cls.max_total)) == cut_set(n, k, n - 1, ell));
    Check::add(checks, "intersection property", yb_intersection_property(*code));
  };
  return inst;
}

Instance<PrimeField> make_composed(const CodeSpec& spec) {
  OuterCode outer = spec.outer.family == "repetition" ? repetition_code(spec.outer.q, spec.outer.N)
                                                      : reed_solomon_outer(spec.outer.q, spec.outer.N, spec.outer.K);
  auto code = std::make_shared<ComposedCode<PrimeField>>(compose_yb(spec.n, spec.k, outer, {spec.field_search_limit}));
  Instance<PrimeField> inst{code->field, code->pcm, {}, {}, {}, {}};
  inst.repair_matrix = [code](std::size_t c) { return code->repair_matrix(c); };
  inst.parameters = {{"inner", {{"n", spec.n}, {"k", spec.k}, {"ell", code->inner.ell}}},
                     {"outer", {{"family", outer.family}, {"q", outer.q}, {"N", outer.N}, {"K", outer.K}, {"M", outer.M}, {"D", outer.D}}},
                     {"field", code->field.characteristic()},
                     {"blocks", code->pcm.n},
                     {"l", code->width()},
                     {"r", code->inner.r},
                     {"epsilon", to_json(code->epsilon)},
                     {"excess", to_json(code->excess)}};
  inst.annotate = [code](const auto& counts, const auto&, const Classification& cls, json& checks) {
    const auto r = static_cast<std::int64_t>(code->inner.r);
    const auto ell = static_cast<std::int64_t>(code->inner.ell);
    const auto N = static_cast<std::int64_t>(code->outer.N);
    const auto l = N * ell;
    bool formula = true;
    std::int64_t sum = 0, pairs = 0;
    for (std::size_t c = 0; c < counts.size(); ++c) {
      for (std::size_t d = 0; d < counts[c].size(); ++d) {
        if (c == d) continue;
        const auto dist = hamming(code->outer.codewords[c], code->outer.codewords[d]);
        const std::int64_t expect = l - dist * (r - 1) * ell / r;
        formula = formula && static_cast<std::int64_t>(counts[c][d]) == expect;
        sum += static_cast<std::int64_t>(counts[c][d]);
        ++pairs;
      }
    }
    Check::add(checks, "per-helper count = N ell - d (r - 1) ell / r", formula);
    const Rational max_bound = (Rational(1) + code->epsilon) * Rational(l, r);
    Check::add(checks, "max per-helper within (1 + eps) l / r",
               Rational(static_cast<std::int64_t>(cls.max_per_helper)) <= max_bound, {{"bound", to_json(max_bound)}});
    Check::add(checks, "epsilon_measured within (r - 1)(1 - delta)", cls.epsilon_measured <= code->epsilon,
               {{"epsilon", to_json(code->epsilon)}});
    Check::add(checks, "max per-helper / l - 1/r within (r - 1)(1 - delta) / r",
               Rational(static_cast<std::int64_t>(cls.max_per_helper), l) - Rational(1, r) <= code->excess,
               {{"excess", to_json(code->excess)}});
    if (code->outer.is_linear && pairs > 0) {
      const Rational mean(sum, pairs);
      const Rational closed = Rational(l) - average_distance(code->outer) * Rational((r - 1) * ell, r);
      Check::add(checks, "mean per-helper equals closed form", mean == closed,
                 {{"mean", to_json(mean)}, {"closed_form", to_json(closed)}});
    }
    const auto thm5 = thm5_max_nodes(static_cast<int>(r), l, cls.epsilon_measured);
    Check::add(checks, "block count within node bound",
               static_cast<double>(code->pcm.n) <= thm5.value * (1 + kBoundSlack), {{"bound", to_json(thm5)}});
  };
  return inst;
}

template <class F>
void apply_pcm_dump(Instance<F>& inst, const CodeSpec& spec) {
  if (!spec.pcm_dump) return;
  std::ifstream in(*spec.pcm_dump);
  if (!in) throw Error(ErrorCode::kSpecParseError, "cannot read pcm dump '" + *spec.pcm_dump + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Matrix<F> m = load_matrix(inst.field, buf.str());
  if (m.rows() != inst.pcm.matrix.rows() || m.cols() != inst.pcm.matrix.cols()) {
    throw Error(ErrorCode::kMalformedDump, "dump shape differs from the built code");
  }
  inst.pcm.matrix = std::move(m);
}

template <class F>
json run_verify(Instance<F>& inst, const CodeSpec& spec, int trials, std::uint64_t seed, std::ostream& text) {
  const auto t0 = std::chrono::steady_clock::now();
  const F& f = inst.field;
  const auto& pcm = inst.pcm;
  json report;
  report["schema"] = kReportSchema;
  report["spec"] = spec.raw;
  report["construction"] = construction_name(spec.construction);
  report["parameters"] = inst.parameters;
  report["field"] = f.descriptor();
  report["trials"] = trials;
  report["seed"] = seed;
  report["tampered_pcm"] = spec.pcm_dump.has_value();

  const MdsVerdict mds = check_mds(f, pcm);
  json mj = {{"verdict", mds.mds}, {"subsets", mds.subsets}};
  if (mds.failing) {
    json fs = json::array();
    for (auto i : *mds.failing) fs.push_back(i + 1);
    mj["failing_subset"] = fs;
  }
  report["mds"] = mj;
  text << "construction " << construction_name(spec.construction) << "  n=" << pcm.n << " k=" << pcm.k() << " ell=" << pcm.ell
       << "  field " << f.descriptor().dump() << "\n";
  text << "mds: " << (mds.mds ? "yes" : "NO") << " (" << mds.subsets << " subsets)\n";

  if (!mds.mds) {
    report["verdict"] = "FAIL";
    text << "verdict: FAIL\n";
    return report;
  }

  std::vector<ArrayCodeword<F>> words;
  {
    Encoder<F> enc(f, pcm);
    for (int t = 0; t < trials; ++t) {
      SplitMix64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
      words.push_back(enc.encode_random(rng));
    }
  }
  const bool oracle = decode_all_erasure_patterns(f, pcm, words[0]);
  report["erasure_decode_all_patterns"] = oracle;

  const std::size_t n = pcm.n;
  std::vector<json> nodes(n);
  std::vector<std::vector<std::size_t>> counts(n);
  std::vector<std::map<int, std::size_t>> stages(n);
  std::vector<char> node_ok(n, 0);
  std::vector<char> node_rbt(n, 0);
  const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t ii = 0; ii < nn; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const Matrix<F> s = inst.repair_matrix(i);
    const RepairPlan<F> plan = plan_repair(f, pcm, s, i);
    bool exact = true, agree = true, stable = true;
    RepairTranscript first;
    for (int t = 0; t < trials; ++t) {
      ArrayCodeword<F> damaged = words[static_cast<std::size_t>(t)];
      damaged.erase(i);
      const auto expect = words[static_cast<std::size_t>(t)].block_vec(i);
      RepairResult<F> mres = execute_repair(f, plan, damaged);
      RepairResult<F> res = inst.procedural ? (*inst.procedural)(damaged, i) : mres;
      exact = exact && res.block == expect;
      agree = agree && mres.block == res.block;
      if (t == 0) {
        first = res.transcript;
        agree = agree && mres.transcript.per_helper_counts() == res.transcript.per_helper_counts();
      } else {
        stable = stable && res.transcript.per_helper_counts() == first.per_helper_counts();
      }
    }
    const auto rbt = is_repair_by_transfer(f, pcm, s, i);
    counts[i] = first.per_helper_counts();
    stages[i] = first.stage_counts();
    json nj = {{"node", i + 1},
               {"exact", exact},
               {"total_downloaded", first.total()},
               {"per_helper_max", first.max_per_helper()},
               {"per_helper", counts[i]},
               {"counts_stable_across_trials", stable},
               {"repair_by_transfer", rbt.overall},
               {"raw_symbols_only", first.all_raw()}};
    if (inst.procedural) nj["matrix_path_agrees"] = agree;
    if (stages[i].size() > 1 || stages[i].count(1) != 0) {
      json sj = json::object();
      for (auto [st, c] : stages[i]) sj["stage" + std::to_string(st)] = c;
      nj["stages"] = sj;
    }
    nodes[i] = std::move(nj);
    node_ok[i] = exact && agree && stable;
    node_rbt[i] = rbt.overall;
  }

  bool all_ok = oracle;
  bool all_rbt = true;
  for (std::size_t i = 0; i < n; ++i) {
    all_ok = all_ok && node_ok[i];
    all_rbt = all_rbt && node_rbt[i];
  }
  report["nodes"] = nodes;
  report["repair_by_transfer"] = all_rbt;

  const Classification cls = classify_counts(static_cast<int>(n), static_cast<int>(pcm.k()), pcm.ell, counts);
  report["classification"] = {{"a_measured", to_json(cls.a_measured)},
                              {"epsilon_measured", to_json(cls.epsilon_measured)},
                              {"is_msr", cls.is_msr},
                              {"max_total", cls.max_total},
                              {"max_per_helper", cls.max_per_helper}};
  json checks = json::array();
  Check::add(checks, "a_measured >= 1", cls.a_measured >= 1);
  inst.annotate(counts, stages, cls, checks);
  for (const auto& c : checks) all_ok = all_ok && c["ok"].get<bool>();
  report["checks"] = checks;
  const auto cs = cut_set(static_cast<int>(n), static_cast<int>(pcm.k()), static_cast<int>(n) - 1,
                          static_cast<std::int64_t>(pcm.ell));
  report["bounds"] = {{"cut_set_total", to_json(cs)},
                      {"cut_set_per_helper", to_json(Rational(static_cast<std::int64_t>(pcm.ell), static_cast<std::int64_t>(pcm.r)))}};
  report["verdict"] = all_ok ? "PASS" : "FAIL";

  text << "erasure decoding on every " << pcm.r << "-subset: " << (oracle ? "ok" : "FAILED") << "\n";
  text << std::left << std::setw(6) << "node" << std::setw(7) << "exact" << std::setw(8) << "total" << std::setw(12)
       << "max/helper" << "transfer\n";
  for (std::size_t i = 0; i < n; ++i) {
    text << std::left << std::setw(6) << (i + 1) << std::setw(7) << (node_ok[i] ? "yes" : "NO") << std::setw(8)
         << nodes[i]["total_downloaded"].get<std::size_t>() << std::setw(12) << nodes[i]["per_helper_max"].get<std::size_t>()
         << (node_rbt[i] ? "yes" : "no") << "\n";
  }
  text << "a_measured " << cls.a_measured << "  epsilon_measured " << cls.epsilon_measured << "  msr "
       << (cls.is_msr ? "yes" : "no") << "\n";
  for (const auto& c : checks) text << "  [" << (c["ok"].get<bool>() ? "ok" : "FAIL") << "] " << c["name"].get<std::string>() << "\n";
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  text << "verdict: " << report["verdict"].get<std::string>() << "  (" << fmt(secs, 2) << " s, " << omp_get_max_threads()
       << " threads)\n";
  return report;
}

template <class F>
json verify_instance(Instance<F> inst, const CodeSpec& spec, int trials, std::uint64_t seed, std::ostream& text) {
  apply_pcm_dump(inst, spec);
  try {
    return run_verify(inst, spec, trials, seed, text);
  } catch (const Error& e) {
    // The code built fine; anything failing now is a property violation.
    json report = {{"schema", kReportSchema}, {"spec", spec.raw}, {"verdict", "FAIL"}, {"error", e.what()}};
    text << "verification error: " << e.what() << "\nverdict: FAIL\n";
    return report;
  }
}

template <class F>
json write_build(const Instance<F>& inst, const CodeSpec& spec, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto pcm_path = std::filesystem::path(out_dir) / "pcm.txt";
  {
    std::ofstream out(pcm_path);
    out << dump_matrix(inst.field, inst.pcm.matrix);
  }
  json manifest = {{"schema", kManifestSchema},
                   {"report_schema", kReportSchema},
                   {"construction", construction_name(spec.construction)},
                   {"parameters", inst.parameters},
                   {"field", inst.field.descriptor()},
                   {"n", inst.pcm.n},
                   {"k", inst.pcm.k()},
                   {"r", inst.pcm.r},
                   {"ell", inst.pcm.ell},
                   {"pcm_shape", {inst.pcm.matrix.rows(), inst.pcm.matrix.cols()}},
                   {"pcm_file", "pcm.txt"},
                   {"spec", spec.raw}};
  std::ofstream(std::filesystem::path(out_dir) / "manifest.json") << manifest.dump(2) << "\n";
  return manifest;
}

}  // namespace

void configure_threads() {
  if (const char* env = std::getenv("REPAIRLAB_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) omp_set_num_threads(t);
  }
}

json verify_spec(const CodeSpec& spec, const VerifyOptions& opts, std::ostream& text) {
  const int trials = opts.trials.value_or(spec.trials);
  const std::uint64_t seed = opts.seed.value_or(spec.seed);
  if (trials < 1) throw Error(ErrorCode::kSpecParseError, "trials must be >= 1");
  switch (spec.construction) {
    case Construction::kSmallSub: return verify_instance(make_smallsub(spec), spec, trials, seed, text);
    case Construction::kYeBarg: return verify_instance(make_yebarg(spec), spec, trials, seed, text);
    case Construction::kComposed: return verify_instance(make_composed(spec), spec, trials, seed, text);
  }
  throw Error(ErrorCode::kSpecParseError, "unknown construction");
}

json build_spec(const CodeSpec& spec, const std::string& out_dir) {
  switch (spec.construction) {
    case Construction::kSmallSub: return write_build(make_smallsub(spec), spec, out_dir);
    case Construction::kYeBarg: return write_build(make_yebarg(spec), spec, out_dir);
    case Construction::kComposed: return write_build(make_composed(spec), spec, out_dir);
  }
  throw Error(ErrorCode::kSpecParseError, "unknown construction");
}

json bounds_report(const BoundsArgs& a) {
  json out = {{"inputs", {{"n", a.n}, {"k", a.k}, {"t", a.t}, {"ell", a.ell}}}};
  const Rational cs = cut_set(a.n, a.k, a.t, a.ell);
  out["cut_set_total"] = to_json(cs);
  out["cut_set_per_helper"] = to_json(cs / a.t);
  if (a.tau) {
    out["inputs"]["tau"] = *a.tau;
    out["construction_bound"] = to_json((Rational(1) + Rational(1, *a.tau)) * cs);
  }
  try {
    out["gtc_feasible"] = gtc_feasible(a.n, a.k, a.ell);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRIsOne) throw;
    out["gtc_feasible"] = "RIsOne";
  }
  out["twb_min_ell"] = to_json(twb_min_ell(a.n, a.k));
  if (a.b) {
    const Rational b = parse_rational(*a.b);
    out["inputs"]["b"] = to_json(b);
    out["appendixA_min_ell"] = to_json(min_ell_appendix_a(a.n, a.k, b));
  }
  const Rational eps = a.eps ? parse_rational(*a.eps) : Rational(0);
  out["inputs"]["eps"] = to_json(eps);
  out["thm5_max_nodes"] = to_json(thm5_max_nodes(a.n - a.k, a.ell, eps));
  return out;
}

namespace {

json table1(std::ostream& text) {
  json rows = json::array();
  text << std::left << std::setw(30) << "construction" << std::setw(26) << "sub-packetization" << std::setw(34)
       << "repair bandwidth" << std::setw(10) << "transfer" << "rate\n";
  text << std::setw(30) << "product-matrix MSR" << std::setw(26) << "n - k" << std::setw(34) << "((n-1)/(n-k)) ell"
       << std::setw(10) << "no" << "k/n <= 1/2 + 1/n\n";
  text << std::setw(30) << "Ye-Barg (ceil variant)" << std::setw(26) << "(n-k)^ceil(n/(n-k))" << std::setw(34)
       << "((n-1)/(n-k)) ell" << std::setw(10) << "yes" << "0 < k/n < 1\n";
  text << std::setw(30) << "small sub-packetization" << std::setw(26) << "(n-k)^tau" << std::setw(34)
       << "<= (1 + 1/tau)((n-1)/(n-k)) ell" << std::setw(10) << "yes" << "0 < k/n < 1\n";
  text << "live builds of the last row:\n";
  text << std::setw(14) << "(n,k,tau)" << std::setw(8) << "ell" << std::setw(12) << "(n-k)^tau" << std::setw(10)
       << "bound" << std::setw(16) << "max measured" << std::setw(10) << "transfer" << "rate\n";
  for (auto [n, k, tau] : {std::tuple{6, 3, 1}, std::tuple{9, 6, 2}}) {
    CodeSpec spec;
    spec.construction = Construction::kSmallSub;
    spec.n = n;
    spec.k = k;
    spec.tau = tau;
    spec.trials = 1;
    spec.raw = {{"construction", "smallsub"}, {"n", n}, {"k", k}, {"tau", tau}};
    std::ostringstream sink;
    json rep = verify_spec(spec, {}, sink);
    const auto r = n - k;
    const auto ell = static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(r), static_cast<unsigned>(tau)));
    const Rational bound = (Rational(1) + Rational(1, tau)) * Rational(n - 1, r) * ell;
    const auto built_ell = rep["parameters"]["ell"].get<std::int64_t>();
    const auto measured = rep["classification"]["max_total"].get<std::int64_t>();
    const bool rbt = rep["repair_by_transfer"].get<bool>();
    std::ostringstream key;
    key << "(" << n << "," << k << "," << tau << ")";
    text << std::setw(14) << key.str() << std::setw(8) << built_ell << std::setw(12) << ell << std::setw(10)
         << as_double(bound) << std::setw(16) << measured << std::setw(10) << (rbt ? "yes" : "no") << Rational(k, n) << "\n";
    rows.push_back({{"n", n},
                    {"k", k},
                    {"tau", tau},
                    {"ell_built", built_ell},
                    {"ell_formula", ell},
                    {"bandwidth_bound", to_json(bound)},
                    {"max_measured_total", measured},
                    {"repair_by_transfer", rbt},
                    {"rate", to_json(Rational(k, n))},
                    {"verdict", rep["verdict"]}});
  }
  return {{"table", 1}, {"rows", rows}};
}

struct Table2Row {
  int n, k, ell;  // inner MSR code
  int N, K, D, q; // outer code
};

json table2(std::ostream& text) {
  const Table2Row data[] = {{3, 1, 2, 20, 3, 13, 3}, {9, 7, 8, 10, 2, 9, 9}, {9, 7, 8, 15, 3, 12, 9}, {8, 5, 9, 20, 3, 16, 8}};
  json rows = json::array();
  text << std::left << std::setw(16) << "inner" << std::setw(16) << "outer" << std::setw(8) << "blocks" << std::setw(4)
       << "r" << std::setw(16) << "beta/l (msr)" << std::setw(10) << "avg" << "l\n";
  for (const auto& d : data) {
    const int r = d.n - d.k;
    const auto M = static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(d.q), static_cast<unsigned>(d.K)));
    const Rational beta = epsilon_bound(r, Rational(d.D, d.N));
    const Rational avg = avg_epsilon_bound(r, d.q, d.N, M);
    const int l = d.N * d.ell;
    std::ostringstream inner, outer;
    inner << "(" << d.n << "," << d.k << "," << d.n - 1 << "," << d.ell << ")";
    outer << "[" << d.N << "," << d.K << "," << d.D << "]_" << d.q;
    text << std::setw(16) << inner.str() << std::setw(16) << outer.str() << std::setw(8) << M << std::setw(4) << r
         << std::setw(16) << (fmt(as_double(beta), 3) + " (" + fmt(1.0 / r, 2) + ")") << std::setw(10)
         << fmt(as_double(avg), 3) << l << "\n";
    rows.push_back({{"inner", {{"n", d.n}, {"k", d.k}, {"ell", d.ell}}},
                    {"outer", {{"N", d.N}, {"K", d.K}, {"D", d.D}, {"q", d.q}}},
                    {"blocks", M},
                    {"r", r},
                    {"beta_over_l", as_double(beta)},
                    {"beta_over_l_exact", to_json(beta)},
                    {"avg_beta_over_l", as_double(avg)},
                    {"avg_beta_over_l_exact", to_json(avg)},
                    {"l", l}});
  }
  text << "note: inner MSR codes are not rebuilt; the columns come from the bound calculators.\n";
  return {{"table", 2}, {"rows", rows}};
}

}  // namespace

json table(int which, std::ostream& text) {
  if (which == 1) return table1(text);
  if (which == 2) return table2(text);
  throw Error(ErrorCode::kInvalidParameters, "table must be 1 or 2");
}

}  // namespace repairlab::cli
