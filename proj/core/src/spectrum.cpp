#include "specforge/spectrum.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace specforge {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr std::size_t kPairGuard = 10'000'000;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  BigInt r = BigInt(a) * b;
  return to_int64(r);
}

std::int64_t positive_mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void Spectrum::validate() const {
  if (dim == 0) throw std::invalid_argument("spectrum: dim must be positive");
  if (base.empty()) throw std::invalid_argument("spectrum: empty base");
  for (const auto& v : base) {
    if (v.size() != dim) throw std::invalid_argument("spectrum: ragged base");
  }
  if (!std::is_sorted(base.begin(), base.end())) {
    throw std::invalid_argument("spectrum: base must be sorted");
  }
  if (std::adjacent_find(base.begin(), base.end()) != base.end()) {
    throw std::invalid_argument("spectrum: duplicate base element");
  }
  if (period) {
    if (*period <= 0) throw std::invalid_argument("spectrum: period must be positive");
    std::set<std::vector<std::int64_t>> residues;
    for (const auto& v : base) {
      std::vector<std::int64_t> r(dim);
      for (std::size_t i = 0; i < dim; ++i) r[i] = positive_mod(v[i], *period);
      if (!residues.insert(std::move(r)).second) {
        throw std::invalid_argument("spectrum: base elements collide mod period");
      }
    }
  }
}

Spectrum Spectrum::finite1d(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  Spectrum s;
  s.dim = 1;
  s.base.reserve(values.size());
  for (std::int64_t v : values) s.base.push_back({v});
  s.validate();
  return s;
}

Spectrum Spectrum::periodic1d(std::vector<std::int64_t> values, std::int64_t M) {
  Spectrum s = finite1d(std::move(values));
  s.period = M;
  s.validate();
  return s;
}

bool Spectrum::operator==(const Spectrum& other) const {
  return dim == other.dim && period == other.period && base == other.base;
}

DigitSet digit_set(const Ladder& l, std::size_t n) {
  if (n < 1 || n > l.size()) throw std::out_of_range("digit_set: n out of range");
  const std::int64_t scale = to_int64(ladder_product(l, n - 1));
  DigitSet ds;
  ds.n = n;
  ds.values.reserve(static_cast<std::size_t>(l[n - 1]));
  for (std::int64_t j = 0; j < l[n - 1]; ++j) {
    ds.values.push_back(checked_mul(scale, j));
  }
  return ds;
}

Spectrum lambda_k(const FactorSpec& spec, std::size_t k) {
  spec.validate();
  const auto idx = spec.side_indices();
  if (k > idx.size()) {
    throw std::invalid_argument("lambda_k: side has fewer than k factors");
  }
  std::vector<std::int64_t> values{0};
  for (std::size_t i = 0; i < k; ++i) {
    const DigitSet ds = digit_set(spec.ladder, idx[i]);
    std::vector<std::int64_t> next;
    next.reserve(values.size() * ds.values.size());
    for (std::int64_t a : ds.values) {
      for (std::int64_t v : values) next.push_back(v + a);
    }
    std::sort(next.begin(), next.end());
    if (std::adjacent_find(next.begin(), next.end()) != next.end()) {
      throw std::logic_error("lambda_k: direct-sum collision");
    }
    values.swap(next);
  }
  return Spectrum::finite1d(std::move(values));
}

Spectrum type1_spectrum_tail_side(const FactorSpec& spec) {
  spec.validate();
  if (spec.type != DecompositionType::type1 || !spec.has_tail()) {
    throw std::invalid_argument("type1_spectrum_tail_side: spec has no tail");
  }
  Spectrum base = lambda_k(spec, spec.side_count());
  base.period = spec.ladder.empty()
                    ? 1
                    : to_int64(ladder_product(spec.ladder, spec.ladder.size()));
  base.validate();
  return base;
}

bool gram_check_structural(const FactorSpec& spec, std::size_t k, const Spectrum& s) {
  spec.validate();
  s.validate();
  if (!s.finite() || s.dim != 1) {
    throw std::invalid_argument("gram_check_structural: finite 1-dim spectrum only");
  }
  const auto idx = spec.side_indices();
  if (k > idx.size()) {
    throw std::invalid_argument("gram_check_structural: level out of range");
  }

  // Completeness by dimension count: the approximant's L^2 space has dimension
  // equal to its atom count, the product of the side's first k entries.
  BigInt atom_count(1);
  for (std::size_t i = 0; i < k; ++i) atom_count *= spec.ladder[idx[i] - 1];
  if (BigInt(s.size()) != atom_count) return false;

  // Orthogonality: every nonzero difference must be an integer zero of one of
  // the side's first k factors, i.e. its vanishing index n* (the unique n with
  // P_{n-1} | d, P_n not| d) must be one of those ladder positions.
  const std::size_t max_index = (k == 0) ? 0 : idx[k - 1];
  std::vector<BigInt> P(max_index + 1);
  P[0] = 1;
  for (std::size_t i = 1; i <= max_index; ++i) P[i] = P[i - 1] * spec.ladder[i - 1];

  std::unordered_set<std::int64_t> seen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const std::int64_t d = s.base[j][0] - s.base[i][0];
      if (d == 0) return false;
      if (!seen.insert(d).second) continue;
      std::size_t nstar = 0;
      while (nstar < max_index && BigInt(d) % P[nstar + 1] == 0) ++nstar;
      ++nstar;  // first non-dividing level is the vanishing factor
      if (nstar > max_index) return false;
      const bool on_side = (spec.side == Side::odd) ? (nstar % 2 == 1)
                                                    : (nstar % 2 == 0);
      if (!on_side) return false;
    }
  }
  return true;
}

namespace {

constexpr std::int64_t kTableCap = std::int64_t(1) << 20;

// Roots-of-unity table for e^{2 pi i r / P}, refreshed from exact sincos every
// 64 steps so the accumulated error stays far below the check tolerances.
std::vector<Complex> unity_table(std::int64_t P) {
  std::vector<Complex> t(static_cast<std::size_t>(P));
  const Complex step = Complex(std::cos(2.0 * kPi / static_cast<double>(P)),
                               std::sin(2.0 * kPi / static_cast<double>(P)));
  for (std::int64_t r = 0; r < P; ++r) {
    if (r % 64 == 0) {
      const double a = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(P);
      t[static_cast<std::size_t>(r)] = Complex(std::cos(a), std::sin(a));
    } else {
      t[static_cast<std::size_t>(r)] = t[static_cast<std::size_t>(r - 1)] * step;
    }
  }
  return t;
}

bool gram_numeric_fast(const DiscreteMeasure& m,
                       const std::vector<std::int64_t>& values,
                       std::int64_t P, double eps) {
  const std::size_t A = m.size();
  std::vector<std::int64_t> idx(A);
  std::vector<double> w(A);
  for (std::size_t i = 0; i < A; ++i) {
    const Rational scaled = m.atom(i).pos[0] * P;
    idx[i] = positive_mod(to_int64(numerator(scaled)), P);
    w[i] = to_double(m.atom(i).weight);
  }
  const std::vector<Complex> table = unity_table(P);

  // Diagonal: mass sums to 1 exactly in rational form; the double round-off
  // still has to clear eps.
  double mass = 0.0;
  for (double x : w) mass += x;
  if (std::fabs(mass - 1.0) > eps) return false;

  // The Gram entry <e_a, e_b> equals f(a - b) with
  // f(d) = sum w_i e^{2 pi i d x_i}; conjugate symmetry halves the work and
  // distinct differences collapse repeated entries.
  std::unordered_set<std::int64_t> diffs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      diffs.insert(values[j] - values[i]);
    }
  }
  for (std::int64_t d : diffs) {
    const std::int64_t dr = positive_mod(d, P);
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < A; ++i) {
      const Complex& z = table[static_cast<std::size_t>((dr * idx[i]) % P)];
      re += w[i] * z.real();
      im += w[i] * z.imag();
    }
    if (re * re + im * im > eps * eps) return false;
  }
  return true;
}

bool gram_numeric_direct(const DiscreteMeasure& m, const Spectrum& s, double eps) {
  const std::size_t A = m.size();
  const std::size_t dim = m.dim();
  std::vector<std::vector<double>> pos(A, std::vector<double>(dim));
  std::vector<double> w(A);
  for (std::size_t i = 0; i < A; ++i) {
    for (std::size_t c = 0; c < dim; ++c) pos[i][c] = to_double(m.atom(i).pos[c]);
    w[i] = to_double(m.atom(i).weight);
  }
  double mass = 0.0;
  for (double x : w) mass += x;
  if (std::fabs(mass - 1.0) > eps) return false;

  std::set<std::vector<std::int64_t>> diffs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      std::vector<std::int64_t> d(dim);
      for (std::size_t c = 0; c < dim; ++c) d[c] = s.base[j][c] - s.base[i][c];
      diffs.insert(std::move(d));
    }
  }
  for (const auto& d : diffs) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < A; ++i) {
      double phase = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        phase += 2.0 * kPi * static_cast<double>(d[c]) * pos[i][c];
      }
      re += w[i] * std::cos(phase);
      im += w[i] * std::sin(phase);
    }
    if (re * re + im * im > eps * eps) return false;
  }
  return true;
}

}  // namespace

bool gram_check_numeric(const DiscreteMeasure& m, const Spectrum& s, double eps) {
  s.validate();
  if (!s.finite()) {
    throw std::invalid_argument("gram_check_numeric: finite spectrum only");
  }
  if (s.dim != m.dim()) {
    throw std::invalid_argument("gram_check_numeric: dimension mismatch");
  }
  if (eps <= 0) throw std::invalid_argument("gram_check_numeric: eps <= 0");

  if (m.dim() == 1) {
    BigInt den(1);
    for (const Atom& a : m.atoms()) den = lcm(den, denominator(a.pos[0]));
    if (den <= kTableCap) {
      std::vector<std::int64_t> values(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) values[i] = s.base[i][0];
      return gram_numeric_fast(m, values, to_int64(den), eps);
    }
  }
  return gram_numeric_direct(m, s, eps);
}

QValue q_function(const FactorSpec& spec, const Spectrum& s, std::size_t K,
                  double xi) {
  spec.validate();
  s.validate();
  if (!s.finite() || s.dim != 1) {
    throw std::invalid_argument("q_function: finite 1-dim spectrum only");
  }
  double q = 0.0;
  double bound = 0.0;
  for (const auto& lambda : s.base) {
    const TruncatedFt ft =
        ft_truncated_product(spec, K, xi + static_cast<double>(lambda[0]));
    const double mod2 = std::norm(ft.value);
    q += mod2;
    // |true|^2 lies in |v|^2 [(1-B)^2, (1+B)^2].
    bound += mod2 * (2.0 * ft.tail_bound + ft.tail_bound * ft.tail_bound);
  }
  bound += static_cast<double>(8 * s.size() + 32) * DBL_EPSILON * (1.0 + q);
  return QValue{q, bound};
}

QValue q_function_periodic(const FactorSpec& spec, const Spectrum& s, double xi) {
  spec.validate();
  s.validate();
  if (s.finite() || s.dim != 1) {
    throw std::invalid_argument("q_function_periodic: periodic 1-dim spectrum only");
  }
  if (spec.type != DecompositionType::type1 || !spec.has_tail()) {
    throw std::invalid_argument("q_function_periodic: type I tail side only");
  }
  // alpha lives on {t/P}, so alpha^ has period P and
  // sum_m sinc^2((xi+b)/P + m) = 1 collapses the lattice part exactly.
  const DiscreteMeasure alpha = approximant(spec, spec.side_count());
  double q = 0.0;
  for (const auto& b : s.base) {
    q += std::norm(ft_discrete(alpha, xi + static_cast<double>(b[0])));
  }
  const double bound = static_cast<double>(8 * s.size() * alpha.size() + 32) *
                       DBL_EPSILON * (1.0 + q);
  return QValue{q, bound};
}

namespace {

bool tiling_check_periodic(const Spectrum& fin, const Spectrum& per, bool negate_per,
                           bool negate_fin) {
  const std::int64_t M = *per.period;
  const std::size_t dim = fin.dim;
  // Unique representation of every integer point is equivalent to the sums
  // covering each residue tuple mod M exactly once.
  BigInt needed(1);
  for (std::size_t c = 0; c < dim; ++c) needed *= M;
  if (BigInt(fin.size()) * BigInt(per.size()) != needed) return false;

  std::set<std::vector<std::int64_t>> residues;
  for (const auto& a : fin.base) {
    for (const auto& b : per.base) {
      std::vector<std::int64_t> r(dim);
      for (std::size_t c = 0; c < dim; ++c) {
        const std::int64_t va = negate_fin ? -a[c] : a[c];
        const std::int64_t vb = negate_per ? -b[c] : b[c];
        r[c] = positive_mod(va + vb, M);
      }
      if (!residues.insert(std::move(r)).second) return false;
    }
  }
  return true;
}

}  // namespace

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> tiling_hull(
    const Spectrum& sA, const Spectrum& sB, bool negateB) {
  sA.validate();
  sB.validate();
  if (!sA.finite() || !sB.finite() || sA.dim != sB.dim) {
    throw std::invalid_argument("tiling_hull: finite spectra of equal dim only");
  }
  const std::size_t dim = sA.dim;
  std::vector<std::int64_t> lo(dim), hi(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::int64_t minA = sA.base.front()[c], maxA = minA;
    for (const auto& a : sA.base) {
      minA = std::min(minA, a[c]);
      maxA = std::max(maxA, a[c]);
    }
    std::int64_t minB = sB.base.front()[c], maxB = minB;
    for (const auto& b : sB.base) {
      minB = std::min(minB, b[c]);
      maxB = std::max(maxB, b[c]);
    }
    if (negateB) {
      const std::int64_t new_min = -maxB;
      maxB = -minB;
      minB = new_min;
    }
    lo[c] = minA + minB;
    hi[c] = maxA + maxB;
  }
  return {lo, hi};
}

bool tiling_check(const Spectrum& sA, const Spectrum& sB, std::int64_t W,
                  bool negateB) {
  sA.validate();
  sB.validate();
  if (sA.dim != sB.dim) throw std::invalid_argument("tiling_check: dim mismatch");
  if (W < 0) throw std::invalid_argument("tiling_check: negative window");

  if (!sA.finite() && !sB.finite()) return false;  // two free lattice params
  if (!sA.finite()) {
    return tiling_check_periodic(sB, sA, /*negate_per=*/false,
                                 /*negate_fin=*/negateB);
  }
  if (!sB.finite()) {
    return tiling_check_periodic(sA, sB, /*negate_per=*/negateB,
                                 /*negate_fin=*/false);
  }

  const std::size_t dim = sA.dim;
  if (sA.size() * sB.size() > kPairGuard) {
    throw std::length_error("tiling_check: pair count over guard");
  }
  std::map<std::vector<std::int64_t>, std::uint32_t> counts;
  for (const auto& a : sA.base) {
    for (const auto& b : sB.base) {
      std::vector<std::int64_t> s(dim);
      for (std::size_t c = 0; c < dim; ++c) {
        s[c] = a[c] + (negateB ? -b[c] : b[c]);
      }
      counts[std::move(s)]++;
    }
  }

  const auto [lo, hi] = tiling_hull(sA, sB, negateB);
  std::vector<std::int64_t> from(dim), to(dim);
  BigInt cells(1);
  for (std::size_t c = 0; c < dim; ++c) {
    from[c] = std::max(lo[c], -W);
    to[c] = std::min(hi[c], W);
    if (from[c] > to[c]) return true;  // window misses the hull: vacuous
    cells *= (to[c] - from[c] + 1);
  }
  if (cells > kPairGuard) {
    throw std::length_error("tiling_check: window over guard");
  }

  std::vector<std::int64_t> p = from;
  for (;;) {
    const auto it = counts.find(p);
    if (it == counts.end() || it->second != 1) return false;
    std::size_t c = 0;
    while (c < dim && ++p[c] > to[c]) {
      p[c] = from[c];
      ++c;
    }
    if (c == dim) break;
  }
  return true;
}

Spectrum product_spectrum(const std::vector<Spectrum>& parts) {
  if (parts.empty()) throw std::invalid_argument("product_spectrum: empty list");
  bool any_periodic = false;
  for (const Spectrum& p : parts) {
    p.validate();
    if (p.dim != 1) throw std::invalid_argument("product_spectrum: 1-dim parts only");
    if (!p.finite()) any_periodic = true;
  }

  std::int64_t M = 1;
  if (any_periodic) {
    for (const Spectrum& p : parts) {
      if (p.finite()) {
        throw std::invalid_argument(
            "product_spectrum: cannot mix finite and periodic parts");
      }
      M = to_int64(lcm(BigInt(M), BigInt(*p.period)));
    }
  }

  std::vector<std::vector<std::int64_t>> values;
  for (const Spectrum& p : parts) {
    std::vector<std::int64_t> axis;
    for (const auto& v : p.base) {
      if (any_periodic) {
        for (std::int64_t t = 0; t < M / *p.period; ++t) {
          axis.push_back(v[0] + t * *p.period);
        }
      } else {
        axis.push_back(v[0]);
      }
    }
    std::sort(axis.begin(), axis.end());
    values.push_back(std::move(axis));
  }

  std::size_t total = 1;
  for (const auto& axis : values) {
    total *= axis.size();
    if (total > kPairGuard) {
      throw std::length_error("product_spectrum: size over guard");
    }
  }

  Spectrum out;
  out.dim = parts.size();
  if (any_periodic) out.period = M;
  out.base.reserve(total);
  std::vector<std::size_t> at(values.size(), 0);
  for (;;) {
    std::vector<std::int64_t> tuple(values.size());
    for (std::size_t c = 0; c < values.size(); ++c) tuple[c] = values[c][at[c]];
    out.base.push_back(std::move(tuple));
    std::size_t c = values.size();
    while (c > 0 && ++at[c - 1] == values[c - 1].size()) {
      at[c - 1] = 0;
      --c;
    }
    if (c == 0) break;
  }
  std::sort(out.base.begin(), out.base.end());
  out.validate();
  return out;
}

}  // namespace specforge
