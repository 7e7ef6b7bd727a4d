#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <specforge/ladder.hpp>
#include <specforge/measure.hpp>

namespace test_support {

// All ladders (entries >= lo) whose product is <= cap, in lexicographic
// order. Includes the empty ladder when with_empty is set.
inline std::vector<specforge::Ladder> ladder_family(std::int64_t cap,
                                                    std::int64_t lo = 2,
                                                    std::int64_t hi = 0,
                                                    bool with_empty = false) {
  std::vector<specforge::Ladder> out;
  if (with_empty) out.push_back({});
  specforge::Ladder cur;
  auto rec = [&](auto&& self, std::int64_t prod) -> void {
    std::int64_t top = hi > 0 ? hi : cap;
    for (std::int64_t n = lo; n <= top && prod * n <= cap; ++n) {
      cur.push_back(n);
      out.push_back(cur);
      self(self, prod * n);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Map-based reference convolution, deliberately naive.
inline specforge::DiscreteMeasure ref_convolve(
    const specforge::DiscreteMeasure& a, const specforge::DiscreteMeasure& b) {
  std::map<specforge::Point, specforge::Rational> acc;
  for (const auto& x : a.atoms())
    for (const auto& y : b.atoms()) {
      specforge::Point p = x.pos;
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += y.pos[i];
      acc[p] += x.weight * y.weight;
    }
  std::vector<specforge::Atom> atoms;
  for (auto& [p, w] : acc) atoms.push_back({p, w});
  return specforge::DiscreteMeasure(std::move(atoms));
}

// Ordered factorizations of n into parts >= 2 (the number of ladders with
// product exactly n).
inline std::int64_t ordered_factorizations(std::int64_t n) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n) + 1, 0);
  d[1] = 1;
  for (std::int64_t m = 2; m <= n; ++m)
    for (std::int64_t q = 2; q <= m; ++q)
      if (m % q == 0) d[static_cast<std::size_t>(m)] += d[static_cast<std::size_t>(m / q)];
  return d[static_cast<std::size_t>(n)];
}

inline specforge::FactorSpec side_spec(const specforge::Ladder& l,
                                       specforge::Side s,
                                       std::size_t level = SIZE_MAX) {
  specforge::FactorSpec spec;
  spec.ladder = l;
  spec.type = specforge::DecompositionType::type2;
  spec.side = s;
  spec.level = level == SIZE_MAX ? spec.side_count() : level;
  return spec;
}

inline specforge::FactorSpec type1_spec(const specforge::Ladder& l,
                                        specforge::Side s,
                                        specforge::Side tail,
                                        std::size_t level = SIZE_MAX) {
  specforge::FactorSpec spec;
  spec.ladder = l;
  spec.type = specforge::DecompositionType::type1;
  spec.side = s;
  spec.level = level == SIZE_MAX ? spec.side_count() : level;
  spec.tail_on = tail;
  return spec;
}

}  // namespace test_support
