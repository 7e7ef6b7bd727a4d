#include "specforge/measure.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace specforge {

namespace {

bool point_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw std::invalid_argument("measure needs at least one atom");
  }
  dim_ = atoms_.front().pos.size();
  if (dim_ == 0) {
    throw std::invalid_argument("atoms need at least one coordinate");
  }
  Rational mass = 0;
  for (const Atom& a : atoms_) {
    if (a.pos.size() != dim_) {
      throw std::invalid_argument("inconsistent atom dimensions");
    }
    if (a.weight <= 0) {
      throw std::invalid_argument("atom weights must be positive");
    }
    mass += a.weight;
  }
  if (mass != 1) {
    throw std::invalid_argument("atom weights must sum to exactly 1");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& x, const Atom& y) { return point_less(x.pos, y.pos); });
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (atoms_[i - 1].pos == atoms_[i].pos) {
      throw std::invalid_argument("atom positions must be distinct");
    }
  }
}

DiscreteMeasure DiscreteMeasure::dirac(Point p) {
  return DiscreteMeasure({Atom{std::move(p), Rational(1)}});
}

DiscreteMeasure DiscreteMeasure::point_mass_zero(std::size_t dim) {
  return dirac(Point(dim, Rational(0)));
}

bool DiscreteMeasure::operator==(const DiscreteMeasure& other) const {
  if (dim_ != other.dim_ || atoms_.size() != other.atoms_.size()) return false;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].pos != other.atoms_[i].pos) return false;
    if (atoms_[i].weight != other.atoms_[i].weight) return false;
  }
  return true;
}

bool DiscreteMeasure::uniform_weights() const {
  for (const Atom& a : atoms_) {
    if (a.weight != atoms_.front().weight) return false;
  }
  return true;
}

bool DiscreteMeasure::is_uniform_on_grid(const BigInt& n) const {
  if (dim_ != 1 || n <= 0) return false;
  if (BigInt(atoms_.size()) != n) return false;
  const Rational w(BigInt(1), n);
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    if (atoms_[j].weight != w) return false;
    if (atoms_[j].pos[0] != Rational(BigInt(j), n)) return false;
  }
  return true;
}

namespace {

// Dense integer-index path for the common case: 1-dim, both factors uniform
// on their supports, positions resolvable on a shared grid of moderate size.
std::optional<DiscreteMeasure> convolve_dense(const DiscreteMeasure& a,
                                              const DiscreteMeasure& b) {
  constexpr std::int64_t kMaxSpan = std::int64_t(1) << 25;
  if (a.dim() != 1 || b.dim() != 1) return std::nullopt;
  if (!a.uniform_weights() || !b.uniform_weights()) return std::nullopt;
  BigInt den(1);
  for (const Atom& t : a.atoms()) den = lcm(den, denominator(t.pos[0]));
  for (const Atom& t : b.atoms()) den = lcm(den, denominator(t.pos[0]));
  if (den > kMaxSpan) return std::nullopt;

  auto indices = [&den](const DiscreteMeasure& m) {
    std::vector<std::int64_t> idx;
    idx.reserve(m.size());
    for (const Atom& t : m.atoms()) {
      const BigInt v = numerator(t.pos[0]) * (den / denominator(t.pos[0]));
      idx.push_back(to_int64(v));
    }
    return idx;
  };
  std::vector<std::int64_t> ia = indices(a);
  std::vector<std::int64_t> ib = indices(b);
  const std::int64_t lo = ia.front() + ib.front();
  const std::int64_t hi = ia.back() + ib.back();
  const std::int64_t span = hi - lo + 1;
  if (span > kMaxSpan) return std::nullopt;

  std::vector<std::uint32_t> counts(static_cast<std::size_t>(span), 0);
  for (std::int64_t x : ia) {
    for (std::int64_t y : ib) counts[static_cast<std::size_t>(x + y - lo)]++;
  }
  const Rational unit =
      a.atoms().front().weight * b.atoms().front().weight;
  std::vector<Atom> out;
  for (std::int64_t i = 0; i < span; ++i) {
    const std::uint32_t c = counts[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    out.push_back(Atom{{Rational(BigInt(lo + i), den)}, unit * c});
  }
  return DiscreteMeasure(std::move(out));
}

}  // namespace

DiscreteMeasure convolve(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("convolve: dimension mismatch");
  }
  if (auto fast = convolve_dense(a, b)) return *std::move(fast);

  std::map<Point, Rational> acc;
  for (const Atom& x : a.atoms()) {
    for (const Atom& y : b.atoms()) {
      Point p(a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) p[i] = x.pos[i] + y.pos[i];
      acc[std::move(p)] += x.weight * y.weight;
    }
  }
  std::vector<Atom> out;
  out.reserve(acc.size());
  for (auto& [pos, w] : acc) out.push_back(Atom{pos, w});
  return DiscreteMeasure(std::move(out));
}

DiscreteMeasure product(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  std::vector<Atom> out;
  out.reserve(a.size() * b.size());
  for (const Atom& x : a.atoms()) {
    for (const Atom& y : b.atoms()) {
      Point p;
      p.reserve(a.dim() + b.dim());
      p.insert(p.end(), x.pos.begin(), x.pos.end());
      p.insert(p.end(), y.pos.begin(), y.pos.end());
      out.push_back(Atom{std::move(p), x.weight * y.weight});
    }
  }
  return DiscreteMeasure(std::move(out));
}

DiscreteMeasure marginal(const DiscreteMeasure& m, std::size_t axis) {
  if (axis >= m.dim()) {
    throw std::invalid_argument("marginal: axis out of range");
  }
  std::map<Rational, Rational> acc;
  for (const Atom& a : m.atoms()) acc[a.pos[axis]] += a.weight;
  std::vector<Atom> out;
  out.reserve(acc.size());
  for (auto& [x, w] : acc) out.push_back(Atom{{x}, w});
  return DiscreteMeasure(std::move(out));
}

DiscreteMeasure translate(const DiscreteMeasure& m, const Point& shift) {
  if (shift.size() != m.dim()) {
    throw std::invalid_argument("translate: dimension mismatch");
  }
  std::vector<Atom> out = m.atoms();
  for (Atom& a : out) {
    for (std::size_t i = 0; i < shift.size(); ++i) a.pos[i] += shift[i];
  }
  return DiscreteMeasure(std::move(out));
}

DiscreteMeasure reflect(const DiscreteMeasure& m) {
  std::vector<Atom> out = m.atoms();
  for (Atom& a : out) {
    for (Rational& x : a.pos) x = -x;
  }
  return DiscreteMeasure(std::move(out));
}

DiscreteMeasure uniform_on_grid(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("uniform_on_grid: n must be positive");
  const std::int64_t count = to_int64(n);
  std::vector<Atom> out;
  out.reserve(static_cast<std::size_t>(count));
  const Rational w(BigInt(1), n);
  for (std::int64_t j = 0; j < count; ++j) {
    out.push_back(Atom{{Rational(BigInt(j), n)}, w});
  }
  return DiscreteMeasure(std::move(out));
}

}  // namespace specforge
