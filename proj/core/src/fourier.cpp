#include "specforge/fourier.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace specforge {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// e^{i pi t}, reducing t mod 2 first so the trig arguments stay in [-pi, pi].
Complex unit_phase_pi(double t) {
  const double k = 2.0 * std::nearbyint(t / 2.0);
  const double r = t - k;
  return Complex(std::cos(kPi * r), std::sin(kPi * r));
}

// sin(pi xi / D) for integer-valued D >= 1 with full relative accuracy near
// the roots: k = nearbyint(xi / D) makes xi - k D exact (Sterbenz, since the
// product k D is an exact integer below 2^53 whenever k != 0), so the reduced
// argument carries no cancellation error.
double sin_pi_scaled(double xi, double D) {
  double k = std::nearbyint(xi / D);
  double diff;
  if (k != 0.0 && std::fabs(k * D) <= 9007199254740992.0) {
    diff = xi - k * D;
  } else {
    k = 0.0;
    diff = xi;
  }
  double s = std::sin(kPi * (diff / D));
  if (std::fmod(std::fabs(k), 2.0) == 1.0) s = -s;
  return s;
}

std::vector<double> ladder_products_double(const Ladder& l) {
  std::vector<double> P(l.size() + 1);
  BigInt p(1);
  P[0] = 1.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    p *= l[i];
    P[i + 1] = to_double(p);
  }
  return P;
}

void require_complementary(const FactorSpec& a, const FactorSpec& b) {
  a.validate();
  b.validate();
  if (a.ladder != b.ladder || a.type != b.type || a.side == b.side ||
      a.tail_on != b.tail_on) {
    throw std::invalid_argument("specs do not form a complementary pair");
  }
}

}  // namespace

Complex ft_discrete(const DiscreteMeasure& m, double xi) {
  if (m.dim() != 1) throw std::invalid_argument("ft_discrete: 1-dim only");
  Complex acc(0.0, 0.0);
  for (const Atom& a : m.atoms()) {
    acc += to_double(a.weight) * unit_phase_pi(-2.0 * xi * to_double(a.pos[0]));
  }
  return acc;
}

std::vector<Complex> ft_discrete_grid(const DiscreteMeasure& m,
                                      const std::vector<double>& xis) {
  if (m.dim() != 1) throw std::invalid_argument("ft_discrete_grid: 1-dim only");
  std::vector<double> pos(m.size()), w(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    pos[i] = to_double(m.atom(i).pos[0]);
    w[i] = to_double(m.atom(i).weight);
  }
  std::vector<Complex> out(xis.size());
  for (std::size_t p = 0; p < xis.size(); ++p) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < pos.size(); ++i) {
      acc += w[i] * unit_phase_pi(-2.0 * xis[p] * pos[i]);
    }
    out[p] = acc;
  }
  return out;
}

Complex ft_factor(const Ladder& l, std::size_t j, double xi) {
  if (j < 1 || j > l.size()) throw std::out_of_range("ft_factor: j out of range");
  const double N = static_cast<double>(l[j - 1]);
  const std::vector<double> P = ladder_products_double(l);
  const double sin_den = sin_pi_scaled(xi, P[j]);
  if (sin_den == 0.0) {
    // xi is an exact multiple of P_j: every atom phase is a multiple of 2 pi.
    return Complex(1.0, 0.0);
  }
  const double ratio = sin_pi_scaled(xi, P[j - 1]) / (N * sin_den);
  return unit_phase_pi(-(N - 1.0) * (xi / P[j])) * ratio;
}

Complex ft_lebesgue_tail(double xi, double scale) {
  const double x = xi / scale;
  if (x == 0.0) return Complex(1.0, 0.0);
  const double s = sin_pi_scaled(x, 1.0);
  return unit_phase_pi(-x) * (s / (kPi * x));
}

TruncatedFt ft_truncated_product(const FactorSpec& spec, std::size_t K, double xi) {
  spec.validate();
  const auto idx = spec.side_indices();
  const std::size_t K_eff = std::min(K, idx.size());
  const std::vector<double> P = ladder_products_double(spec.ladder);

  Complex value(1.0, 0.0);
  for (std::size_t i = 0; i < K_eff; ++i) {
    value *= ft_factor(spec.ladder, idx[i], xi);
  }

  double tail_sum = 0.0;
  if (spec.type == DecompositionType::type1) {
    if (spec.has_tail()) {
      value *= ft_lebesgue_tail(xi, P[spec.ladder.size()]);
    }
    // Skipped in-ladder side factors (K below the side count) still count.
    for (std::size_t i = K_eff; i < idx.size(); ++i) {
      tail_sum += kPi * std::fabs(xi) / P[idx[i] - 1];
    }
  } else {
    for (std::size_t i = K_eff; i < idx.size(); ++i) {
      tail_sum += kPi * std::fabs(xi) / P[idx[i] - 1];
    }
    // Any continuation has entries >= 2, so successive side factors shrink the
    // per-factor bound pi|xi|/P_{j-1} by at least 4: close with the geometric
    // factor 4/3 from the end of the stored ladder.
    tail_sum += kPi * std::fabs(xi) / P[spec.ladder.size()] * (4.0 / 3.0);
  }

  const double fp_slop =
      static_cast<double>(8 * K_eff + 64) * DBL_EPSILON * (1.0 + std::abs(value));
  return TruncatedFt{value, std::expm1(tail_sum) + fp_slop};
}

ZeroSetWindow zero_set_factor(const Ladder& l, std::size_t n, std::int64_t W) {
  if (n < 1 || n > l.size()) {
    throw std::out_of_range("zero_set_factor: n out of range");
  }
  if (W < 0) throw std::invalid_argument("zero_set_factor: negative window");
  ZeroSetWindow zs;
  zs.window = W;
  const BigInt Pn1 = ladder_product(l, n - 1);
  if (Pn1 > W) return zs;
  const std::int64_t p = to_int64(Pn1);
  const std::int64_t Nn = l[n - 1];
  for (std::int64_t t = -(W / p); t * p <= W; ++t) {
    if (t % Nn == 0) continue;  // multiples of P_n excluded
    zs.members.push_back(t * p);
  }
  return zs;
}

namespace {

// 1 + max{n : P_n | m}; returns ladder.size() + 1 when the full product
// divides m (the vanishing factor lies beyond the stored prefix).
std::size_t vanishing_index(const Ladder& l, const BigInt& m) {
  BigInt p(1);
  std::size_t n = 0;
  while (n < l.size()) {
    p *= l[n];
    if (m % p != 0) break;
    ++n;
  }
  return n + 1;
}

}  // namespace

bool check_zero_partition(const FactorSpec& specA, const FactorSpec& specB,
                          std::int64_t W, double eps) {
  require_complementary(specA, specB);
  if (eps <= 0) throw std::invalid_argument("check_zero_partition: eps <= 0");
  const Ladder& l = specA.ladder;
  const std::size_t L = l.size();

  for (std::int64_t mm = 1; mm <= W; ++mm) {
    for (const std::int64_t m : {mm, -mm}) {
      const std::size_t nstar = vanishing_index(l, BigInt(m));
      Side vanishing;
      if (nstar <= L) {
        vanishing = (nstar % 2 == 1) ? Side::odd : Side::even;
      } else if (specA.type == DecompositionType::type1) {
        // P_{2k} | m: the Lebesgue tail transform sinc(m / P_{2k}) vanishes.
        vanishing = *specA.tail_on;
      } else {
        throw std::runtime_error(
            "check_zero_partition: ambiguous classification at m=" +
            std::to_string(m) + " (stored prefix too short)");
      }

      bool below[2];
      const FactorSpec* specs[2] = {&specA, &specB};
      for (int s = 0; s < 2; ++s) {
        const TruncatedFt ft =
            ft_truncated_product(*specs[s], specs[s]->side_count(),
                                 static_cast<double>(m));
        const double mod = std::abs(ft.value);
        if (mod * (1.0 + ft.tail_bound) < eps) {
          below[s] = true;
        } else if (mod * (1.0 - ft.tail_bound) > eps) {
          below[s] = false;
        } else {
          throw std::runtime_error(
              "check_zero_partition: tail bound overlaps eps at m=" +
              std::to_string(m) + " (K too small)");
        }
      }
      if (below[0] == below[1]) return false;
      const Side numeric_vanishing = below[0] ? specA.side : specB.side;
      if (numeric_vanishing != vanishing) return false;
    }
  }
  return true;
}

double compute_c(const FactorSpec& spec, double tol) {
  spec.validate();
  if (tol <= 0) throw std::invalid_argument("compute_c: tol must be positive");
  double prod = 1.0;
  double x = 3.0 * kPi * kPi / 32.0;  // x_j = (3 pi^2 / 32) * 16^{-(j-1)}
  for (;;) {
    prod *= (1.0 - x) * (1.0 - x);
    const double tail_sum = (x / 16.0) * (16.0 / 15.0);
    if (2.0 * tail_sum * prod < tol) break;
    x /= 16.0;
  }
  return prod;
}

SincResidual sinc_identity_residual(const FactorSpec& specA,
                                    const FactorSpec& specB, std::size_t K,
                                    double xi) {
  require_complementary(specA, specB);
  const Ladder& l = specA.ladder;
  std::size_t KA = K;
  std::size_t KB = K;
  std::size_t M = std::min(2 * K, l.size());
  if (specA.type == DecompositionType::type1) {
    // The interval component belongs to one side of the pair, so the
    // telescoping identity only closes with both sides taken in full.
    KA = specA.side_indices().size();
    KB = specB.side_indices().size();
    M = l.size();
  }

  Complex value = ft_truncated_product(specA, KA, xi).value *
                  ft_truncated_product(specB, KB, xi).value;
  if (specA.type == DecompositionType::type2) {
    // nu_1 * ... * nu_M is uniform on {j/P_M}, and convolving with
    // L_[0,1/P_M] recovers L_[0,1]; the identity is exact per factor.
    value *= ft_lebesgue_tail(xi, to_double(ladder_product(l, M)));
  }
  const Complex target = ft_lebesgue_tail(xi, 1.0);

  const double residual = std::abs(value - target);
  const double bound = static_cast<double>(16 * M + 128) * DBL_EPSILON *
                       (1.0 + std::abs(value) + std::abs(target));
  return SincResidual{residual, bound};
}

}  // namespace specforge
