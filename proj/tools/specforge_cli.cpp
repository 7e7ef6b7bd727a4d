// specforge command line tool.
//
// Every subcommand prints one JSON report object on stdout:
//   {"command": ..., "inputs": {...}, "results": [...], "outputs": {...},
//    "exit_code": 0|1|2}
// Human-readable per-check lines go to stderr (suppressed by --json-only).
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 bad input
// or an error while computing.

#include "specforge/factorizer.hpp"
#include "specforge/fourier.hpp"
#include "specforge/json_io.hpp"
#include "specforge/ladder.hpp"
#include "specforge/measure.hpp"
#include "specforge/spectrum.hpp"
#include "specforge/tiling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using nlohmann::ordered_json;
using namespace specforge;

namespace {

// ---------------------------------------------------------------------------
// Small helpers

std::int64_t max_n_cap() {
  const char* env = std::getenv("SPECFORGE_MAX_N");
  if (env == nullptr || *env == '\0') return 1048576;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0)
    throw std::invalid_argument("SPECFORGE_MAX_N must be a positive integer");
  return static_cast<std::int64_t>(v);
}

void guard_order(const BigInt& n) {
  if (n > max_n_cap())
    throw std::invalid_argument("order " + bigint_string(n) +
                                " exceeds SPECFORGE_MAX_N");
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = std::stoll(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size())
      throw std::invalid_argument("bad integer list entry '" + item + "'");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

Ladder parse_ladder(const std::string& s) {
  Ladder l = parse_int_list(s);
  for (std::int64_t n : l) {
    if (n < 2) throw std::invalid_argument("ladder entries must be >= 2");
    if (n > (std::int64_t{1} << 32))
      throw std::invalid_argument("ladder entry too large");
  }
  return l;
}

Side parse_side_name(const std::string& s) {
  if (s == "odd") return Side::odd;
  if (s == "even") return Side::even;
  throw std::invalid_argument("side must be 'odd' or 'even'");
}

const char* side_name(Side s) { return s == Side::odd ? "odd" : "even"; }

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Index-sliced parallel loop; every index writes only its own slot, so the
// output is identical for any thread count.
template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  unsigned t = threads;
  if (static_cast<std::size_t>(t) > n) t = static_cast<unsigned>(n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned i = 0; i < t; ++i)
    pool.emplace_back([&] {
      for (std::size_t j = next.fetch_add(1); j < n; j = next.fetch_add(1)) f(j);
    });
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Report assembly

class Report {
 public:
  Report(std::string command, bool json_only)
      : command_(std::move(command)), json_only_(json_only) {
    inputs_ = ordered_json::object();
    results_ = ordered_json::array();
    outputs_ = ordered_json::object();
  }

  ordered_json& inputs() { return inputs_; }
  ordered_json& outputs() { return outputs_; }

  void check(const std::string& name, bool pass, const std::string& detail = "",
             std::optional<double> value = std::nullopt,
             std::optional<double> bound = std::nullopt) {
    ordered_json r;
    r["check"] = name;
    r["status"] = pass ? "pass" : "fail";
    if (value) r["value"] = *value;
    if (bound) r["bound"] = *bound;
    if (!detail.empty()) r["detail"] = detail;
    results_.push_back(std::move(r));
    if (!pass) failed_ = true;
    if (!json_only_)
      std::fprintf(stderr, "[%s] %s%s%s\n", pass ? "pass" : "FAIL",
                   name.c_str(), detail.empty() ? "" : ": ", detail.c_str());
  }

  void note(const std::string& msg) {
    if (!json_only_) std::fprintf(stderr, "%s\n", msg.c_str());
  }

  int finish() {
    int code = failed_ ? 1 : 0;
    ordered_json j;
    j["command"] = command_;
    j["inputs"] = inputs_;
    j["results"] = results_;
    if (!outputs_.empty()) j["outputs"] = outputs_;
    j["exit_code"] = code;
    std::cout << j.dump(2) << "\n";
    return code;
  }

 private:
  std::string command_;
  ordered_json inputs_;
  ordered_json results_;
  ordered_json outputs_;
  bool json_only_ = false;
  bool failed_ = false;
};

ordered_json embed(const std::string& json_text) {
  return ordered_json::parse(json_text);
}

// ---------------------------------------------------------------------------
// Shared options and spec construction

struct CommonOpts {
  std::string ladder_str;
  std::string type_str = "II";
  std::string tail_str;
  std::string side_str = "odd";
  std::int64_t level = 0;    // 0 = full side
  std::int64_t window = -1;  // -1 = per-command default
  std::int64_t trunc = 24;
  std::int64_t grid = 0;     // 0 = per-command default
  double tol = 1e-10;
  double eps = 1e-8;
  unsigned threads = 1;
  bool json_only = false;
};

void add_ladder_opts(CLI::App* cmd, CommonOpts& o, bool tail_relevant = true) {
  cmd->add_option("--ladder", o.ladder_str, "comma separated entries, each >= 2")
      ->required();
  cmd->add_option("--type", o.type_str, "decomposition type: I or II")
      ->check(CLI::IsMember({"I", "II"}));
  if (tail_relevant)
    cmd->add_option("--tail", o.tail_str,
                    "side carrying the interval component (type I): odd|even");
}

struct PairSpecs {
  FactorSpec odd;
  FactorSpec even;
  DecompositionType type;
  std::optional<Side> tail;
};

PairSpecs build_specs(const CommonOpts& o, const Ladder& l) {
  PairSpecs p;
  p.type = o.type_str == "I" ? DecompositionType::type1 : DecompositionType::type2;
  if (p.type == DecompositionType::type1) {
    if (o.tail_str.empty())
      throw std::invalid_argument("type I requires --tail odd|even");
    p.tail = parse_side_name(o.tail_str);
  } else if (!o.tail_str.empty()) {
    throw std::invalid_argument("--tail only applies to type I");
  }
  for (Side s : {Side::odd, Side::even}) {
    FactorSpec spec;
    spec.ladder = l;
    spec.type = p.type;
    spec.side = s;
    spec.tail_on = p.tail;
    std::size_t full = spec.side_count();
    if (o.level < 0 || (o.level > 0 && static_cast<std::size_t>(o.level) > full))
      throw std::invalid_argument("--level out of range for this side");
    spec.level = o.level == 0 ? full : static_cast<std::size_t>(o.level);
    if (p.type == DecompositionType::type1) spec.level = full;
    spec.validate();
    (s == Side::odd ? p.odd : p.even) = spec;
  }
  return p;
}

void echo_common(Report& rep, const CommonOpts& o, const Ladder& l) {
  rep.inputs()["ladder"] = l;
  rep.inputs()["type"] = o.type_str;
  if (!o.tail_str.empty()) rep.inputs()["tail"] = o.tail_str;
}

// Spectrum of one side at its spec level; periodic for a type1 tail side.
Spectrum side_spectrum(const FactorSpec& spec) {
  if (spec.type == DecompositionType::type1 && spec.has_tail())
    return type1_spectrum_tail_side(spec);
  return lambda_k(spec, spec.level);
}

// ---------------------------------------------------------------------------
// decompose

int run_decompose(const CommonOpts& o) {
  Report rep("decompose", o.json_only);
  Ladder l = parse_ladder(o.ladder_str);
  guard_order(ladder_product(l, l.size()));
  PairSpecs p = build_specs(o, l);
  std::int64_t W = o.window < 0 ? 64 : o.window;

  echo_common(rep, o, l);
  rep.inputs()["level"] = ordered_json{{"odd", p.odd.level}, {"even", p.even.level}};
  rep.inputs()["window"] = W;
  rep.inputs()["tol"] = o.tol;

  rep.check("pair_factorizes", verify_pair(l));

  Spectrum sOdd = side_spectrum(p.odd);
  Spectrum sEven = side_spectrum(p.even);
  rep.outputs()["specs"] = ordered_json{
      {"odd", embed(factor_spec_to_json(p.odd))},
      {"even", embed(factor_spec_to_json(p.even))}};
  rep.outputs()["spectra"] = ordered_json{
      {"odd", embed(spectrum_to_json(sOdd))},
      {"even", embed(spectrum_to_json(sEven))}};

  for (Side s : {Side::odd, Side::even}) {
    const FactorSpec& spec = s == Side::odd ? p.odd : p.even;
    const Spectrum& spc = s == Side::odd ? sOdd : sEven;
    std::string tag = side_name(s);
    if (spec.type == DecompositionType::type1 && spec.has_tail()) {
      rep.note(std::string("side ") + tag +
               " carries the interval component; gram check applies to the "
               "finite side only");
      continue;
    }
    bool st = gram_check_structural(spec, spec.level, spc);
    rep.check("gram_structural_" + tag, st);
    bool nm = gram_check_numeric(approximant(spec, spec.level), spc, o.tol);
    rep.check("gram_numeric_" + tag, nm, "eps " + fmt_g(o.tol));
  }

  if (p.type == DecompositionType::type2) {
    bool tiles = tiling_check(sOdd, sEven, W, true);
    auto hull = tiling_hull(sOdd, sEven, true);
    rep.outputs()["difference_hull"] =
        ordered_json{{"lo", hull.first}, {"hi", hull.second}};
    rep.check("spectra_tile", tiles,
              "differences cover window [-" + std::to_string(W) + ", " +
                  std::to_string(W) + "]");
  } else {
    const Spectrum& fin = p.tail == Side::odd ? sEven : sOdd;
    const Spectrum& per = p.tail == Side::odd ? sOdd : sEven;
    bool tiles = tiling_check(fin, per, W, false);
    rep.check("spectra_tile", tiles, "exact residue cover mod period");
  }
  return rep.finish();
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const CommonOpts& o, const std::string& spectrum_file) {
  Report rep("verify", o.json_only);
  Ladder l = parse_ladder(o.ladder_str);
  guard_order(ladder_product(l, l.size()));
  PairSpecs p = build_specs(o, l);
  Side side = parse_side_name(o.side_str);
  const FactorSpec& spec = side == Side::odd ? p.odd : p.even;
  std::int64_t W = o.window < 0 ? 0 : o.window;
  std::size_t G = o.grid <= 0 ? 101 : static_cast<std::size_t>(o.grid);
  std::size_t K = o.trunc <= 0 ? 24 : static_cast<std::size_t>(o.trunc);

  echo_common(rep, o, l);
  rep.inputs()["side"] = o.side_str;
  rep.inputs()["level"] = spec.level;
  rep.inputs()["window"] = W;
  rep.inputs()["trunc"] = K;
  rep.inputs()["grid"] = G;
  rep.inputs()["tol"] = o.tol;
  rep.inputs()["eps"] = o.eps;
  if (!spectrum_file.empty()) rep.inputs()["spectrum_file"] = spectrum_file;

  rep.check("pair_factorizes", verify_pair(l));

  if (W == 0) {
    rep.note("warning: --window 0, zero partition check is vacuous");
    rep.check("zero_partition", true, "window 0 (vacuous)");
  } else {
    rep.check("zero_partition", check_zero_partition(p.odd, p.even, W, o.eps),
              "1 <= |m| <= " + std::to_string(W));
  }

  {
    std::vector<SincResidual> rs(G);
    parallel_for(G, o.threads, [&](std::size_t i) {
      double xi = -10.0 + 20.0 * (static_cast<double>(i) + 0.5) /
                              static_cast<double>(G);
      rs[i] = sinc_identity_residual(p.odd, p.even, K, xi);
    });
    double max_res = 0.0, max_bound = 0.0;
    bool ok = true;
    for (const auto& r : rs) {
      if (r.residual > r.bound) ok = false;
      if (r.residual > max_res) max_res = r.residual;
      if (r.bound > max_bound) max_bound = r.bound;
    }
    rep.check("sinc_identity", ok, std::to_string(G) + " points on [-10, 10]",
              max_res, max_bound);
  }

  if (p.type == DecompositionType::type2) {
    std::size_t Lmax = spec.side_count();
    if (o.level > 0) Lmax = spec.level;
    if (Lmax > 6 && o.level == 0) Lmax = 6;
    if (Lmax == 0) {
      rep.check("q_monotone", true, "no side factors (vacuous)");
    } else {
      std::vector<Spectrum> lam;
      lam.reserve(Lmax);
      for (std::size_t k = 1; k <= Lmax; ++k) lam.push_back(lambda_k(spec, k));
      std::vector<QValue> q(Lmax * G);
      parallel_for(Lmax * G, o.threads, [&](std::size_t idx) {
        std::size_t k = idx / G, i = idx % G;
        double xi = -0.5 + (static_cast<double>(i) + 1.0) /
                               (static_cast<double>(G) + 1.0);
        q[idx] = q_function(spec, lam[k], K, xi);
      });
      bool ok = true;
      double min_q = 1.0;
      double max_bound = 0.0;
      for (std::size_t k = 0; k < Lmax; ++k)
        for (std::size_t i = 0; i < G; ++i) {
          const QValue& v = q[k * G + i];
          if (v.value > 1.0 + v.bound + 1e-12) ok = false;
          if (k + 1 < Lmax) {
            const QValue& w = q[(k + 1) * G + i];
            if (v.value > w.value + v.bound + w.bound + 1e-12) ok = false;
          }
          if (k + 1 == Lmax && v.value < min_q) min_q = v.value;
          if (v.bound > max_bound) max_bound = v.bound;
        }
      QValue at0 = q_function(spec, lam[Lmax - 1], K, 0.0);
      if (std::abs(at0.value - 1.0) > at0.bound + 1e-12) ok = false;
      rep.check("q_monotone", ok,
                "levels 1.." + std::to_string(Lmax) + " nondecreasing, <= 1",
                min_q, max_bound);
    }
  } else {
    const FactorSpec& tail_spec = *p.tail == Side::odd ? p.odd : p.even;
    Spectrum per = type1_spectrum_tail_side(tail_spec);
    std::vector<QValue> q(G);
    parallel_for(G, o.threads, [&](std::size_t i) {
      double xi = -0.5 + (static_cast<double>(i) + 1.0) /
                             (static_cast<double>(G) + 1.0);
      q[i] = q_function_periodic(tail_spec, per, xi);
    });
    bool ok = true;
    double worst = 0.0;
    for (const auto& v : q) {
      double d = std::abs(v.value - 1.0);
      if (d > v.bound + 1e-10) ok = false;
      if (d > worst) worst = d;
    }
    rep.check("q_periodic_one", ok, "tail side Q identically 1", worst);
  }

  if (spectrum_file.empty()) {
    for (Side s : {Side::odd, Side::even}) {
      const FactorSpec& sp = s == Side::odd ? p.odd : p.even;
      if (sp.type == DecompositionType::type1 && sp.has_tail()) continue;
      Spectrum spc = lambda_k(sp, sp.level);
      bool ok = gram_check_structural(sp, sp.level, spc) &&
                gram_check_numeric(approximant(sp, sp.level), spc, o.tol);
      rep.check(std::string("gram_") + side_name(s), ok,
                "canonical spectrum, eps " + fmt_g(o.tol));
    }
  } else {
    Spectrum user = spectrum_from_json(read_text(spectrum_file));
    if (user.finite()) {
      if (spec.type == DecompositionType::type1 && spec.has_tail())
        throw std::invalid_argument(
            "finite spectrum given for the interval-carrying side");
      bool ok = gram_check_numeric(approximant(spec, spec.level), user, o.tol);
      rep.check("gram_spectrum", ok,
                std::string("user spectrum vs ") + side_name(side) +
                    " side, eps " + fmt_g(o.tol));
    } else {
      if (!(spec.type == DecompositionType::type1 && spec.has_tail()))
        throw std::invalid_argument(
            "periodic spectrum requires the type I interval side");
      bool ok = user == type1_spectrum_tail_side(spec);
      rep.check("gram_spectrum", ok, "periodic spectrum matches canonical");
    }
  }
  return rep.finish();
}

// ---------------------------------------------------------------------------
// qplot

int run_qplot(const CommonOpts& o, const std::string& out_path) {
  Report rep("qplot", o.json_only);
  Ladder l = parse_ladder(o.ladder_str);
  guard_order(ladder_product(l, l.size()));
  PairSpecs p = build_specs(o, l);
  Side side = parse_side_name(o.side_str);
  const FactorSpec& spec = side == Side::odd ? p.odd : p.even;
  std::size_t G = o.grid <= 0 ? 201 : static_cast<std::size_t>(o.grid);
  std::size_t K = o.trunc <= 0 ? 24 : static_cast<std::size_t>(o.trunc);

  echo_common(rep, o, l);
  rep.inputs()["side"] = o.side_str;
  rep.inputs()["trunc"] = K;
  rep.inputs()["grid"] = G;
  rep.inputs()["out"] = out_path;

  auto grid_xi = [&](std::size_t i) {
    return -0.5 + (static_cast<double>(i) + 1.0) / (static_cast<double>(G) + 1.0);
  };

  std::vector<std::size_t> levels;
  std::vector<QValue> rows;
  bool periodic_side =
      spec.type == DecompositionType::type1 && spec.has_tail();
  if (periodic_side) {
    levels.push_back(spec.side_count());
    Spectrum per = type1_spectrum_tail_side(spec);
    rows.resize(G);
    parallel_for(G, o.threads, [&](std::size_t i) {
      rows[i] = q_function_periodic(spec, per, grid_xi(i));
    });
  } else {
    std::size_t Lmax = spec.side_count();
    if (o.level > 0) Lmax = spec.level;
    if (Lmax > 6 && o.level == 0) Lmax = 6;
    if (Lmax == 0)
      throw std::invalid_argument("side has no factors to plot");
    std::vector<Spectrum> lam;
    for (std::size_t k = 1; k <= Lmax; ++k) {
      levels.push_back(k);
      lam.push_back(lambda_k(spec, k));
    }
    rows.resize(Lmax * G);
    parallel_for(Lmax * G, o.threads, [&](std::size_t idx) {
      rows[idx] = q_function(spec, lam[idx / G], K, grid_xi(idx % G));
    });
  }

  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open '" + out_path + "'");
  out << "xi,level,q,bound\n";
  char buf[128];
  bool le_one = true;
  for (std::size_t r = 0; r < levels.size(); ++r)
    for (std::size_t i = 0; i < G; ++i) {
      const QValue& v = rows[r * G + i];
      if (v.value > 1.0 + v.bound + 1e-12) le_one = false;
      std::snprintf(buf, sizeof buf, "%.17g,%zu,%.17g,%.17g\n", grid_xi(i),
                    levels[r], v.value, v.bound);
      out << buf;
    }
  out.close();
  rep.outputs()["rows"] = levels.size() * G;
  rep.outputs()["levels"] = levels;
  rep.check("q_le_one", le_one, "every value <= 1 within its bound");
  rep.note("wrote " + out_path + " (" +
           std::to_string(levels.size() * G) + " rows)");
  return rep.finish();
}

// ---------------------------------------------------------------------------
// factor-sets

ordered_json set_pair_json(const SetPair& sp) {
  return ordered_json{{"a", sp.A}, {"b", sp.B}, {"n", sp.n}};
}

int run_factor_sets(const std::string& a_str, const std::string& b_str,
                    std::int64_t n, bool json_only) {
  Report rep("factor-sets", json_only);
  SetPair sp;
  sp.A = parse_int_list(a_str);
  sp.B = parse_int_list(b_str);
  sp.n = n > 0 ? n
               : static_cast<std::int64_t>(sp.A.size()) *
                     static_cast<std::int64_t>(sp.B.size());
  guard_order(BigInt(sp.n));
  rep.inputs()["a"] = sp.A;
  rep.inputs()["b"] = sp.B;
  rep.inputs()["n"] = sp.n;

  LadderWithSides lws = factor_sets(sp);
  rep.outputs()["ladder"] = lws.ladder;
  rep.outputs()["first_side"] = lws.first_side == PairSide::A ? "A" : "B";

  SetPair back = expand_to_sets(lws);
  bool rt = back.A == sp.A && back.B == sp.B && back.n == sp.n;
  rep.check("round_trip", rt, "expanding the ladder reproduces the sets");
  return rep.finish();
}

// ---------------------------------------------------------------------------
// factor-measures

int run_factor_measures(const std::string& input, bool json_only) {
  Report rep("factor-measures", json_only);
  rep.inputs()["input"] = input;
  auto [pm, qm] = measure_pair_from_json(read_text(input));
  guard_order(BigInt(pm.size()) * BigInt(qm.size()));

  LadderWithSides lws = factor_uniform_pair(pm, qm);
  rep.outputs()["ladder"] = lws.ladder;
  rep.outputs()["first_side"] = lws.first_side == PairSide::A ? "A" : "B";

  BigInt n = ladder_product(lws.ladder, lws.ladder.size());
  SetPair back = expand_to_sets(lws);
  auto support_scaled = [&](const DiscreteMeasure& m) {
    std::vector<std::int64_t> out;
    out.reserve(m.size());
    for (const Atom& a : m.atoms()) {
      Rational scaled = a.pos[0] * Rational(n);
      out.push_back(to_int64(numerator(scaled)));
    }
    return out;
  };
  bool rt = back.A == support_scaled(pm) && back.B == support_scaled(qm);
  rep.check("round_trip", rt, "ladder expansion matches the input supports");
  rep.check("pair_complementary", verify_convolves_to_uniform({pm, qm}, n),
            "p * q uniform on {j/" + bigint_string(n) + "}");
  return rep.finish();
}

// ---------------------------------------------------------------------------
// tile-extract

int run_tile_extract(std::int64_t m, const std::string& omega_str,
                     const std::string& q_str, bool json_only) {
  Report rep("tile-extract", json_only);
  auto parse_mask = [&](const std::string& s) {
    GridMask g;
    g.m = m;
    g.cells.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("mask strings use only 0 and 1");
      g.cells.push_back(c == '1');
    }
    g.validate();
    return g;
  };
  GridMask omega = parse_mask(omega_str);
  GridMask q = parse_mask(q_str);
  guard_order(BigInt(q.cells.size()));
  rep.inputs()["m"] = m;
  rep.inputs()["omega"] = omega_str;
  rep.inputs()["q"] = q_str;

  try {
    TranslateSystem ts = extract_translates(omega, q);
    std::vector<std::string> offs;
    offs.reserve(ts.offsets.size());
    for (const Rational& r : ts.offsets) offs.push_back(rational_string(r));
    rep.outputs()["offsets"] = offs;
    rep.outputs()["count"] = ts.count;
    rep.check("tiles", true,
              std::to_string(ts.count) + " translates cover the target");
  } catch (const std::runtime_error& e) {
    rep.check("tiles", false, e.what());
  }
  return rep.finish();
}

// ---------------------------------------------------------------------------
// enumerate-pairs

int run_enumerate(std::int64_t n, bool json_only) {
  Report rep("enumerate-pairs", json_only);
  rep.inputs()["n"] = n;
  std::vector<SetPair> pairs = enumerate_complementary_pairs(n);
  ordered_json arr = ordered_json::array();
  bool rt = true;
  for (const SetPair& sp : pairs) {
    arr.push_back(set_pair_json(sp));
    SetPair back = expand_to_sets(factor_sets(sp));
    if (!(back.A == sp.A && back.B == sp.B && back.n == sp.n)) rt = false;
  }
  rep.outputs()["count"] = pairs.size();
  rep.outputs()["pairs"] = std::move(arr);
  rep.check("round_trip", rt, "every pair factors and expands back");
  return rep.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "specforge: exact complementary-pair factorizations of Lebesgue "
      "measure, their spectra, and tiling certificates"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string spectrum_file, qplot_out = "qplot.csv", measures_input = "-";
  std::string set_a, set_b, mask_omega, mask_q;
  std::int64_t set_n = 0, mask_m = 1, enum_n = 1;
  int code = 0;
  std::string active = "specforge";

  auto add_json_only = [&](CLI::App* cmd) {
    cmd->add_flag("--json-only", o.json_only, "suppress stderr chatter");
  };

  CLI::App* dec = app.add_subcommand(
      "decompose", "canonical pair, spectra, gram and tiling checks");
  add_ladder_opts(dec, o);
  dec->add_option("--level", o.level, "truncation level (default: full side)");
  dec->add_option("--window", o.window, "tiling window [-W, W] (default 64)");
  dec->add_option("--tol", o.tol, "gram tolerance (default 1e-10)");
  add_json_only(dec);
  dec->callback([&] { active = "decompose"; code = run_decompose(o); });

  CLI::App* ver = app.add_subcommand(
      "verify", "full certificate: factorization, zeros, sinc, Q, gram");
  add_ladder_opts(ver, o);
  ver->add_option("--side", o.side_str, "side under test (default odd)");
  ver->add_option("--level", o.level, "truncation level (default: full side)");
  ver->add_option("--window", o.window,
                  "zero partition window (default 0 = skip)");
  ver->add_option("--trunc", o.trunc, "transform truncation K (default 24)");
  ver->add_option("--grid", o.grid, "sample count per check (default 101)");
  ver->add_option("--tol", o.tol, "gram tolerance (default 1e-10)");
  ver->add_option("--eps", o.eps, "zero partition threshold (default 1e-8)");
  ver->add_option("--threads", o.threads, "worker threads (default 1)");
  ver->add_option("--spectrum-file", spectrum_file,
                  "JSON spectrum to check instead of the canonical one");
  add_json_only(ver);
  ver->callback([&] { active = "verify"; code = run_verify(o, spectrum_file); });

  CLI::App* qp = app.add_subcommand("qplot", "sample Q over (-1/2, 1/2) to CSV");
  add_ladder_opts(qp, o);
  qp->add_option("--side", o.side_str, "side to plot (default odd)");
  qp->add_option("--level", o.level, "deepest level (default min(6, side))");
  qp->add_option("--trunc", o.trunc, "transform truncation K (default 24)");
  qp->add_option("--grid", o.grid, "samples per level (default 201)");
  qp->add_option("--threads", o.threads, "worker threads (default 1)");
  qp->add_option("--out", qplot_out, "output CSV path (default qplot.csv)");
  add_json_only(qp);
  qp->callback([&] { active = "qplot"; code = run_qplot(o, qplot_out); });

  CLI::App* fs = app.add_subcommand(
      "factor-sets", "recover the ladder of a complementary set pair");
  fs->add_option("--a", set_a, "set A, comma separated")->required();
  fs->add_option("--b", set_b, "set B, comma separated")->required();
  fs->add_option("--n", set_n, "order (default |A| * |B|)");
  add_json_only(fs);
  fs->callback([&] {
    active = "factor-sets";
    code = run_factor_sets(set_a, set_b, set_n, o.json_only);
  });

  CLI::App* fm = app.add_subcommand(
      "factor-measures", "recover the ladder of a measure pair from JSON");
  fm->add_option("--input", measures_input,
                 "path to {\"p\": ..., \"q\": ...} JSON, or - for stdin");
  add_json_only(fm);
  fm->callback([&] {
    active = "factor-measures";
    code = run_factor_measures(measures_input, o.json_only);
  });

  CLI::App* te = app.add_subcommand(
      "tile-extract", "translates tiling a grid region by a mask");
  te->add_option("--m", mask_m, "grid resolution (cells of width 1/m)")
      ->required();
  te->add_option("--omega", mask_omega, "tile mask as a 0/1 string")->required();
  te->add_option("--q", mask_q, "target mask as a 0/1 string")->required();
  add_json_only(te);
  te->callback([&] {
    active = "tile-extract";
    code = run_tile_extract(mask_m, mask_omega, mask_q, o.json_only);
  });

  CLI::App* en = app.add_subcommand(
      "enumerate-pairs", "all complementary pairs of {0..n-1}");
  en->add_option("--n", enum_n, "order, 1 <= n <= 64")->required();
  add_json_only(en);
  en->callback([&] {
    active = "enumerate-pairs";
    code = run_enumerate(enum_n, o.json_only);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    ordered_json j;
    j["command"] = active;
    j["error"] = e.what();
    j["exit_code"] = 2;
    std::cout << j.dump(2) << "\n";
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return code;
}
