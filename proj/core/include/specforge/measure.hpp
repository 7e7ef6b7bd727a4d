#pragma once

// Finitely supported rational probability measures on Q^d and the exact
// operations on them: convolution, products, marginals, affine images.

#include "specforge/rational.hpp"

#include <cstddef>
#include <vector>

namespace specforge {

using Point = std::vector<Rational>;

struct Atom {
  Point pos;
  Rational weight;
};

// Immutable after construction. Atoms are stored sorted lexicographically by
// position; positions are distinct, weights positive, total mass exactly 1.
class DiscreteMeasure {
 public:
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  static DiscreteMeasure dirac(Point p);
  // delta_0 in the given dimension.
  static DiscreteMeasure point_mass_zero(std::size_t dim = 1);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }

  bool operator==(const DiscreteMeasure& other) const;

  // True iff all weights are equal (uniform on the support).
  bool uniform_weights() const;

  // True iff the measure is exactly (1/n) sum_{j<n} delta_{j/n}; requires
  // 1-dim. is_uniform_on_grid(m, n) tests an arbitrary measure against that.
  bool is_uniform_on_grid(const BigInt& n) const;

 private:
  std::vector<Atom> atoms_;
  std::size_t dim_ = 1;
};

DiscreteMeasure convolve(const DiscreteMeasure& a, const DiscreteMeasure& b);
DiscreteMeasure product(const DiscreteMeasure& a, const DiscreteMeasure& b);

// Pushforward along coordinate `axis` (1-dim result).
DiscreteMeasure marginal(const DiscreteMeasure& m, std::size_t axis);

DiscreteMeasure translate(const DiscreteMeasure& m, const Point& shift);
// x -> -x.
DiscreteMeasure reflect(const DiscreteMeasure& m);

// (1/n) sum_{j<n} delta_{j/n}.
DiscreteMeasure uniform_on_grid(const BigInt& n);

}  // namespace specforge
