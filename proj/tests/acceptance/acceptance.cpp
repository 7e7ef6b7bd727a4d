// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Runs the full certification workload end to end against the library.

#include "specforge/factorizer.hpp"
#include "specforge/fourier.hpp"
#include "specforge/ladder.hpp"
#include "specforge/measure.hpp"
#include "specforge/spectrum.hpp"
#include "specforge/tiling.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "../support.hpp"

using namespace specforge;
using test_support::ladder_family;
using test_support::side_spec;
using test_support::type1_spec;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %-34s %s\n", ok ? "PASS" : "FAIL", idx, name,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

Ladder all2(std::size_t len) { return Ladder(len, 2); }

// ---------------------------------------------------------------------------
// 1. Every ladder with entries in {2..5} and product <= 4096 factors exactly.

void crit1() {
  auto fam = ladder_family(4096, 2, 5, /*with_empty=*/true);
  bool ok = fam.size() == 22503;
  std::size_t bad = 0;
  for (const Ladder& l : fam)
    if (!verify_pair(l)) {
      ok = false;
      ++bad;
    }
  report(1, "exact pair factorization", ok,
         std::to_string(fam.size()) + " ladders, " + std::to_string(bad) +
             " failures");
}

// ---------------------------------------------------------------------------
// 2. Gram certificates at every truncation level, both sides, same family.

void crit2() {
  auto fam = ladder_family(4096, 2, 5);
  std::size_t checked = 0, bad = 0;
  for (const Ladder& l : fam)
    for (Side s : {Side::odd, Side::even}) {
      FactorSpec spec = side_spec(l, s);
      for (std::size_t k = 1; k <= spec.side_count(); ++k) {
        Spectrum lam = lambda_k(spec, k);
        ++checked;
        if (!gram_check_structural(spec, k, lam) ||
            !gram_check_numeric(approximant(spec, k), lam, 1e-10))
          ++bad;
      }
    }
  report(2, "gram orthonormality", bad == 0,
         std::to_string(checked) + " (ladder, side, level) triples, " +
             std::to_string(bad) + " failures");
}

// ---------------------------------------------------------------------------
// 3. Spectra tile: interval-pair residue covers and the certified
//    exhaustion intervals of the dyadic weak-limit pair.

void crit3() {
  bool ok = true;
  std::string detail;

  std::size_t covers = 0;
  for (const Ladder& l : ladder_family(256)) {
    if (l.size() % 2 != 0) continue;
    for (Side tail : {Side::odd, Side::even}) {
      FactorSpec fin = type1_spec(l, other_side(tail), tail);
      FactorSpec per = type1_spec(l, tail, tail);
      if (!tiling_check(lambda_k(fin, fin.side_count()),
                        type1_spectrum_tail_side(per), 16, false)) {
        ok = false;
      }
      ++covers;
    }
  }

  std::int64_t prev_hi = -1;
  for (std::size_t k = 1; k <= 6; ++k) {
    FactorSpec odd = side_spec(all2(2 * k), Side::odd);
    FactorSpec even = side_spec(all2(2 * k), Side::even);
    Spectrum so = lambda_k(odd, k);
    Spectrum se = lambda_k(even, k);
    std::int64_t hi = (std::int64_t(1) << (2 * k)) / 3;  // (4^k - 1) / 3
    auto hull = tiling_hull(so, se, true);
    if (hull.first[0] != -2 * hi || hull.second[0] != hi) ok = false;
    if (hi <= prev_hi) ok = false;
    prev_hi = hi;
    if (!tiling_check(so, se, 2 * hi + 3, true)) ok = false;
  }

  report(3, "spectra tile", ok,
         std::to_string(covers) +
             " residue covers, exhaustion intervals k=1..6");
}

// ---------------------------------------------------------------------------
// 4. Sinc identity along a long dyadic ladder at high truncation.

void crit4() {
  FactorSpec odd = side_spec(all2(80), Side::odd);
  FactorSpec even = side_spec(all2(80), Side::even);
  bool ok = true;
  double max_res = 0.0, max_bound = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double xi = -10.0 + 20.0 * (i + 0.5) / 1000.0;
    SincResidual r = sinc_identity_residual(odd, even, 40, xi);
    if (r.residual > r.bound || r.bound >= 1e-9) ok = false;
    if (r.residual > max_res) max_res = r.residual;
    if (r.bound > max_bound) max_bound = r.bound;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max residual %.3e, max bound %.3e", max_res,
                max_bound);
  report(4, "sinc identity", ok, buf);
}

// ---------------------------------------------------------------------------
// 5. Zero-set partition of the integers with a certified gap.

void crit5() {
  Ladder l = all2(48);
  FactorSpec odd = side_spec(l, Side::odd);
  FactorSpec even = side_spec(l, Side::even);
  bool ok = check_zero_partition(odd, even, 4096, 1e-8);

  double min_alive = 1.0;
  for (std::int64_t m = -4096; m <= 4096; ++m) {
    if (m == 0) continue;
    std::size_t n = 1;  // 1 + max{ j : 2^j | m }
    while (m % (std::int64_t(1) << n) == 0) ++n;
    const FactorSpec& dead = n % 2 == 1 ? odd : even;
    const FactorSpec& alive = n % 2 == 1 ? even : odd;
    TruncatedFt d = ft_truncated_product(dead, 24, double(m));
    TruncatedFt a = ft_truncated_product(alive, 24, double(m));
    double lo = std::abs(a.value) * (1.0 - a.tail_bound);
    if (std::abs(d.value) != 0.0) ok = false;
    if (lo <= 1e-6) ok = false;
    if (lo < min_alive) min_alive = lo;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf,
                "|m| <= 4096, vanishing side exact, gap %.3e", min_alive);
  report(5, "zero partition", ok, buf);
}

// ---------------------------------------------------------------------------
// 6. Q approaches 1 monotonically in the level on a fixed interior grid.

void crit6() {
  FactorSpec spec = side_spec(all2(48), Side::odd);
  const std::size_t K = 24, G = 101, L = 6;
  std::vector<Spectrum> lam;
  for (std::size_t k = 1; k <= L; ++k) lam.push_back(lambda_k(spec, k));

  bool ok = true;
  for (std::size_t k = 0; k < L; ++k) {
    QValue at0 = q_function(spec, lam[k], K, 0.0);
    if (std::abs(at0.value - 1.0) > at0.bound + 1e-12) ok = false;
  }
  for (std::size_t i = 0; i < G; ++i) {
    double xi = -0.5 + (double(i) + 1.0) / 103.0;
    double prev = -1.0, prev_bound = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
      QValue q = q_function(spec, lam[k], K, xi);
      if (q.value > 1.0 + q.bound + 1e-12) ok = false;
      if (k > 0 && prev > q.value + prev_bound + q.bound + 1e-12) ok = false;
      prev = q.value;
      prev_bound = q.bound;
    }
  }
  QValue q1 = q_function(spec, lam[0], K, 0.25);
  QValue q6 = q_function(spec, lam[5], K, 0.25);
  if (!(q6.value - q1.value > 0.04)) ok = false;
  char buf[96];
  std::snprintf(buf, sizeof buf, "1 - Q6(1/4) = %.3e < 1 - Q1(1/4) = %.3e",
                1.0 - q6.value, 1.0 - q1.value);
  report(6, "Q monotone in level", ok, buf);
}

// ---------------------------------------------------------------------------
// 7. The explicit lower-bound constant.

void crit7() {
  FactorSpec spec = side_spec(all2(12), Side::odd);
  double first = compute_c(spec, 1e-3);
  double full = compute_c(spec, 1e-15);
  bool ok = full > 0.0 && full < 1.0 && first > full;
  if (std::abs(first - 0.0055837639617823049919) > 1e-14) ok = false;
  if (std::abs(full - 0.0049184863007829922193) > 1e-12) ok = false;
  char buf[96];
  std::snprintf(buf, sizeof buf, "c = %.16f", full);
  report(7, "lower-bound constant", ok, buf);
}

// ---------------------------------------------------------------------------
// 8. Complete enumeration matches the ordered-factorization count.

void crit8() {
  bool ok = true;
  std::int64_t total = 0;
  for (std::int64_t n = 1; n <= 48; ++n) {
    auto pairs = enumerate_complementary_pairs(n);
    std::int64_t expect =
        n == 1 ? 1 : 2 * test_support::ordered_factorizations(n);
    if (std::int64_t(pairs.size()) != expect) ok = false;
    total += std::int64_t(pairs.size());
    for (const SetPair& sp : pairs) {
      SetPair back = expand_to_sets(factor_sets(sp));
      if (!(back.A == sp.A && back.B == sp.B && back.n == sp.n)) ok = false;
    }
  }
  report(8, "pair enumeration", ok,
         "n = 1..48, " + std::to_string(total) + " pairs, all round trip");
}

// ---------------------------------------------------------------------------
// 9. Measure-level factorization round trips under both alternations.

void crit9() {
  bool ok = true;
  std::size_t done = 0;
  for (const Ladder& l : ladder_family(256)) {
    BigInt n = ladder_product(l, l.size());
    for (Side start : {Side::odd, Side::even}) {
      Assignment a;
      for (std::size_t k = 0; k < l.size(); ++k)
        a.labels.push_back(k % 2 == 0 ? start : other_side(start));
      auto [p, q] = expand_pair(l, a);
      LadderWithSides lws = factor_uniform_pair(p, q);
      if (lws.ladder != l) ok = false;
      PairSide expect_first =
          a.labels.back() == Side::odd ? PairSide::A : PairSide::B;
      if (lws.first_side != expect_first) ok = false;
      SetPair back = expand_to_sets(lws);
      auto scaled = [&](const DiscreteMeasure& m) {
        std::vector<std::int64_t> out;
        for (const Atom& at : m.atoms())
          out.push_back(to_int64(numerator(at.pos[0] * Rational(n))));
        return out;
      };
      if (back.A != scaled(p) || back.B != scaled(q)) ok = false;
      ++done;
    }
  }
  report(9, "measure round trips", ok,
         std::to_string(done) + " (ladder, alternation) cases");
}

// ---------------------------------------------------------------------------
// 10. Translate extraction: worked examples plus randomized packings.

void crit10() {
  bool ok = true;

  auto mask = [](std::int64_t m, const std::string& bits) {
    GridMask g;
    g.m = m;
    for (char c : bits) g.cells.push_back(c == '1');
    return g;
  };
  {
    TranslateSystem t = extract_translates(mask(1, "101"), mask(1, "1111"));
    if (t.offsets != std::vector<Rational>{Rational(0), Rational(1)}) ok = false;
  }
  {
    TranslateSystem t = extract_translates(mask(2, "11"), mask(2, "110011"));
    if (t.offsets != std::vector<Rational>{Rational(0), Rational(2)}) ok = false;
  }
  {
    bool threw = false;
    try {
      extract_translates(mask(1, "11"), mask(1, "1010"));
    } catch (const std::runtime_error&) {
      threw = true;
    }
    if (!threw) ok = false;
  }

  std::mt19937 rng(977201u);
  std::uniform_int_distribution<std::int64_t> m_dist(1, 8);
  std::uniform_int_distribution<int> len_dist(1, 16);
  std::uniform_int_distribution<int> bit_dist(0, 1);
  std::uniform_int_distribution<int> gap_dist(0, 8);
  std::uniform_int_distribution<int> copies_dist(1, 4);
  for (int rep = 0; rep < 100; ++rep) {
    std::int64_t m = m_dist(rng);
    int len = len_dist(rng);
    std::vector<bool> ob(std::size_t(len), false);
    for (auto&& b : ob) b = bit_dist(rng) == 1;
    ob.front() = true;
    std::vector<std::int64_t> shifts;
    std::int64_t cursor = 0;
    for (int c = copies_dist(rng); c > 0; --c) {
      shifts.push_back(cursor);
      cursor += len + gap_dist(rng);
    }
    if (shifts.back() + len > 64) shifts.resize(1);
    std::vector<bool> qb(std::size_t(shifts.back() + len), false);
    for (std::int64_t s : shifts)
      for (int j = 0; j < len; ++j)
        if (ob[std::size_t(j)]) qb[std::size_t(s + j)] = true;
    TranslateSystem t = extract_translates(GridMask{m, ob}, GridMask{m, qb});
    if (t.count != std::int64_t(shifts.size())) ok = false;
    for (std::size_t i = 0; i < shifts.size() && ok; ++i)
      if (t.offsets[i] != Rational(shifts[i], m)) ok = false;
  }
  report(10, "translate extraction", ok, "3 worked examples, 100 packings");
}

// ---------------------------------------------------------------------------
// 11. Two-dimensional product pairs and their product spectra.

void crit11() {
  FactorSpec sigma = side_spec(all2(4), Side::odd);
  FactorSpec tau = side_spec(all2(4), Side::even);
  auto [mu, nu] = product_pair({sigma, sigma}, {tau, tau}, 2);
  DiscreteMeasure expect =
      product(uniform_on_grid(BigInt(16)), uniform_on_grid(BigInt(16)));
  bool ok = convolve(mu, nu) == expect;

  Spectrum so = product_spectrum({lambda_k(sigma, 2), lambda_k(sigma, 2)});
  Spectrum se = product_spectrum({lambda_k(tau, 2), lambda_k(tau, 2)});
  if (!tiling_check(so, se, 20, true)) ok = false;
  auto hull = tiling_hull(so, se, true);
  if (hull.first != std::vector<std::int64_t>{-10, -10} ||
      hull.second != std::vector<std::int64_t>{5, 5})
    ok = false;
  report(11, "product pairs in dimension 2", ok,
         "quarter-grid axes, hull [-10, 5]^2");
}

}  // namespace

int main() {
  crit1();
  crit2();
  crit3();
  crit4();
  crit5();
  crit6();
  crit7();
  crit8();
  crit9();
  crit10();
  crit11();
  if (g_failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
