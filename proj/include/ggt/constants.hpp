#pragma once

#include <cstdint>
#include <optional>

#include "ggt/rational.hpp"

namespace ggt {

// Outward-rounded enclosure for values that pass through sinh/log/pi.
// Verdicts comparing such values use the enclosure, never the midpoint, so
// no inequality depends on rounding direction.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval exact(double v) { return {v, v}; }
  static Interval of(double v);  // v widened by a few ulps each way

  double mid() const { return 0.5 * (lo + hi); }
  bool definitely_less(const Interval& other) const { return hi < other.lo; }
  bool definitely_leq(const Interval& other) const { return hi <= other.lo; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  static Interval max(const Interval& a, const Interval& b);
};

Interval interval_log(const Interval& x);
Interval interval_sinh(const Interval& x);
Interval interval_pi();

struct ConstantsInputs {
  Rational delta{1, 100};
  Rational delta0{1, 100};
  Rational Delta0{1};
  Rational rho0{1};
  Rational kappa{1, 100};
  std::int64_t N = 1;
  Rational L0{1};
  Rational epsilon{1, 2};
  Rational xi{1};

  // Optional context; defaults follow the pipeline's own worst-case chain.
  std::optional<Rational> Delta_Q;      // fellow-travelling of the family (default Delta0)
  std::optional<Rational> energy;       // L(U, p) (default L0)
  std::optional<Rational> stable_tlen;  // |g|_inf (default C^2 L0)
  std::optional<Rational> Delta_g;      // Delta(g) (default C^3 L0)
  std::int64_t U_size = 2;              // |U| for the counting constants
};

struct ConstantsRecord {
  ConstantsInputs in;
  Rational alpha;          // 200 delta
  std::int64_t C;          // 10^6 (N + 1)
  Rational tau0;           // Delta0 + 2 L0 + 223 delta
  std::int64_t b;          // ceil(tau0 / (200 delta) + 2) + 1
  std::int64_t M;          // floor((tau0 - 50 delta) / L0)
  Interval d1;             // b log 4 - log(eps / (1 - eps))
  Interval d2;             // log 4 + log(1 - eps)
  Interval M0;             // d1 / d2
  Interval tau1;           // max{tau0, L0 (M0 + 1) + 50 delta0}
  Interval rho;            // max{rho0, log(2 [2 tau1 + 23 delta0] + 1)}
  Interval tau2;           // tau1 + 8 L0 + 8 delta
  Interval lambda0;        // Delta0 / (100 pi sinh rho)
  Interval mu0;            // (100 pi sinh rho / delta0) (kappa / delta)
  Rational sigma_rescale;  // min{delta0 / kappa, Delta0 / Delta_Q}
  Rational nu;             // (1 - eps) 2 |U|
  Interval xi_counting;    // 2 (2 |U|)^b
  Interval sigma_counting; // eps / (2 (1 - eps) xi_counting)
  double xi_out;           // min{xi / 10^8, 10^-5 log 2}
  Rational a0;             // 2 N (8 energy / stable_tlen + 1)
  Rational b0;             // (2 / stable_tlen)(Delta_g + 5 energy + 104 delta + alpha)
  bool M_ge_b = true;      // counting-lemma consistency flag
};

// Every derived field is re-evaluated from the inputs on each call; there is
// no cached state to go stale.
ConstantsRecord constants_pipeline(const ConstantsInputs& in);

// min{xi / 10^8, 10^-5 log 2}.
double growth_transfer(double xi);

struct PingpongConstants {
  std::int64_t C;          // 10^6 (N + 1)
  std::int64_t n1;         // 4 C^2
  std::int64_t n2;         // 3304 n1
  double energy_n1;        // L(U^{n1}) <= 4 C^2 L
  double energy_n2;        // L(U^{n2}) <= 13216 C^2 L
  double energy_pingpong;  // L(S, p) <= 10^12 C^3 L
  double min_n;            // the witness exponent exceeds C^3
  double power_coeff;      // S sits inside U^{10^7 n}
};

PingpongConstants pingpong_constants(std::int64_t N, const Rational& L,
                                     const Rational& kappa);

}  // namespace ggt
