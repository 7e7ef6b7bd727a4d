#include "specforge/ladder.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace specforge {

void FactorSpec::validate() const {
  for (std::int64_t e : ladder) {
    if (e < 2) throw std::invalid_argument("ladder entries must be >= 2");
  }
  if (type == DecompositionType::type1) {
    if (ladder.size() % 2 != 0) {
      throw std::invalid_argument("type I requires an even ladder length");
    }
    if (!tail_on) {
      throw std::invalid_argument("type I requires a tail side");
    }
  }
  if (level > side_count()) {
    throw std::invalid_argument("level exceeds the side's factor count");
  }
}

std::vector<std::size_t> FactorSpec::side_indices() const {
  std::vector<std::size_t> idx;
  for (std::size_t j = (side == Side::odd) ? 1 : 2; j <= ladder.size(); j += 2) {
    idx.push_back(j);
  }
  return idx;
}

BigInt ladder_product(const Ladder& l, std::size_t k) {
  if (k > l.size()) throw std::out_of_range("ladder_product: k out of range");
  BigInt p(1);
  for (std::size_t i = 0; i < k; ++i) p *= l[i];
  return p;
}

DiscreteMeasure nu_factor(const Ladder& l, std::size_t k) {
  if (k < 1 || k > l.size()) throw std::out_of_range("nu_factor: k out of range");
  const std::int64_t N = l[k - 1];
  if (N < 2) throw std::invalid_argument("ladder entries must be >= 2");
  const BigInt P = ladder_product(l, k);
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(N));
  const Rational w(1, N);
  for (std::int64_t j = 0; j < N; ++j) {
    atoms.push_back(Atom{{Rational(BigInt(j), P)}, w});
  }
  return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure approximant(const FactorSpec& spec, std::size_t k) {
  spec.validate();
  const auto idx = spec.side_indices();
  if (k > idx.size()) {
    throw std::invalid_argument("approximant: insufficient ladder length");
  }
  DiscreteMeasure acc = DiscreteMeasure::point_mass_zero();
  for (std::size_t i = 0; i < k; ++i) {
    acc = convolve(acc, nu_factor(spec.ladder, idx[i]));
  }
  return acc;
}

CanonicalizeResult canonicalize(const Ladder& l, const Assignment& a) {
  if (a.labels.size() != l.size()) {
    throw std::invalid_argument("canonicalize: labels length must match ladder");
  }
  for (std::int64_t e : l) {
    if (e < 2) throw std::invalid_argument("ladder entries must be >= 2");
  }
  Ladder merged;
  std::vector<Side> labels;
  std::size_t i = 0;
  while (i < l.size()) {
    const Side s = a.labels[i];
    BigInt entry(1);
    while (i < l.size() && a.labels[i] == s) {
      entry *= l[i];
      ++i;
    }
    if (entry > std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("canonicalize: merged entry too large");
    }
    merged.push_back(to_int64(entry));
    labels.push_back(s);
  }

  CanonicalizeResult res;
  res.ladder = merged;
  res.assignment = Assignment{labels};
  // In the merged ladder the first entry has parity "odd"; the FactorSpec pair is
  // reported in assignment order (the side owning nu_1 first).
  res.first = FactorSpec{merged, DecompositionType::type2, Side::odd,
                         (merged.size() + 1) / 2, std::nullopt};
  res.second = FactorSpec{merged, DecompositionType::type2, Side::even,
                          merged.size() / 2, std::nullopt};
  return res;
}

namespace {

constexpr std::int64_t kMaxDenseGrid = std::int64_t(1) << 26;

// Exact dense-index convolution check; falls back to generic rational
// convolution when the inputs do not sit cleanly on the target grid.
bool convolution_is_uniform_generic(const std::vector<DiscreteMeasure>& factors,
                                    const BigInt& n) {
  DiscreteMeasure acc = DiscreteMeasure::point_mass_zero();
  for (const DiscreteMeasure& f : factors) acc = convolve(acc, f);
  return acc.is_uniform_on_grid(n);
}

}  // namespace

bool verify_convolves_to_uniform(const std::vector<DiscreteMeasure>& factors,
                                 const BigInt& n) {
  if (n <= 0) return false;
  if (n > kMaxDenseGrid) {
    throw std::length_error("verify: grid order exceeds the dense-check cap");
  }
  const std::int64_t grid = to_int64(n);

  // Dense path preconditions: 1-dim, uniform weights, positions exactly of
  // the form t/n with 0 <= t < n. Weight bookkeeping stays exactly rational.
  bool dense_ok = true;
  Rational weight_product(1);
  std::vector<std::vector<std::int64_t>> indices(factors.size());
  for (std::size_t f = 0; f < factors.size() && dense_ok; ++f) {
    const DiscreteMeasure& m = factors[f];
    if (m.dim() != 1 || !m.uniform_weights()) {
      dense_ok = false;
      break;
    }
    weight_product *= m.atoms().front().weight;
    auto& idx = indices[f];
    idx.reserve(m.size());
    for (const Atom& a : m.atoms()) {
      const Rational scaled = a.pos[0] * n;
      if (denominator(scaled) != 1) {
        dense_ok = false;
        break;
      }
      const BigInt t = numerator(scaled);
      if (t < 0 || t >= n) {
        dense_ok = false;
        break;
      }
      idx.push_back(to_int64(t));
    }
  }

  if (!dense_ok) return convolution_is_uniform_generic(factors, n);

  std::vector<std::uint32_t> counts{1};
  for (const auto& idx : indices) {
    std::vector<std::uint32_t> next(
        std::min<std::int64_t>(grid, (counts.size() - 1) + idx.back() + 1), 0);
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j] == 0) continue;
      for (std::int64_t t : idx) {
        const std::size_t target = j + static_cast<std::size_t>(t);
        if (target >= next.size()) return false;  // mass escapes [0, 1)
        next[target] += counts[j];
        if (next[target] > 1) return false;       // collision: not uniform
      }
    }
    counts.swap(next);
  }
  if (static_cast<std::int64_t>(counts.size()) != grid) return false;
  for (std::uint32_t c : counts) {
    if (c != 1) return false;
  }
  return weight_product == Rational(BigInt(1), n);
}

bool verify_pair(const Ladder& l) {
  for (std::int64_t e : l) {
    if (e < 2) return false;
  }
  const BigInt P = ladder_product(l, l.size());
  std::vector<DiscreteMeasure> factors;
  factors.reserve(l.size());
  for (std::size_t k = 1; k <= l.size(); ++k) factors.push_back(nu_factor(l, k));
  return verify_convolves_to_uniform(factors, P);
}

}  // namespace specforge
