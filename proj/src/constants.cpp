#include "ggt/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ggt {

namespace {

double up(double v) {
  return std::nextafter(std::nextafter(v, std::numeric_limits<double>::infinity()),
                        std::numeric_limits<double>::infinity());
}
double down(double v) {
  return std::nextafter(std::nextafter(v, -std::numeric_limits<double>::infinity()),
                        -std::numeric_limits<double>::infinity());
}

Interval from_rational(const Rational& r) {
  double v = r.to_double();
  if (static_cast<double>(r.num()) ==
      v * static_cast<double>(r.den()))  // exactly representable
    return Interval::exact(v);
  return {down(v), up(v)};
}

}  // namespace

Interval Interval::of(double v) { return {down(v), up(v)}; }

Interval operator+(const Interval& a, const Interval& b) {
  return {down(a.lo + b.lo), up(a.hi + b.hi)};
}
Interval operator-(const Interval& a, const Interval& b) {
  return {down(a.lo - b.hi), up(a.hi - b.lo)};
}
Interval operator*(const Interval& a, const Interval& b) {
  double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4))};
}
Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0.0 && b.hi >= 0.0)
    fail("DivisionByZero", "interval division through zero");
  double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return {down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4))};
}
Interval Interval::max(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval interval_log(const Interval& x) {
  if (x.lo <= 0.0) fail("InputOutOfRange", "log of a nonpositive interval");
  return {down(std::log(x.lo)), up(std::log(x.hi))};
}
Interval interval_sinh(const Interval& x) {
  return {down(std::sinh(x.lo)), up(std::sinh(x.hi))};
}
Interval interval_pi() {
  return {down(3.14159265358979323846), up(3.14159265358979323846)};
}

ConstantsRecord constants_pipeline(const ConstantsInputs& in) {
  if (in.delta <= Rational(0) || in.delta0 <= Rational(0))
    fail("InputOutOfRange", "delta and delta0 must be positive");
  if (in.delta > in.delta0) fail("InputOutOfRange", "delta must not exceed delta0");
  if (in.epsilon <= Rational(0) || in.epsilon >= Rational(3, 4))
    fail("InputOutOfRange", "epsilon must lie in (0, 3/4)");
  if (in.N < 1) fail("InputOutOfRange", "N must be >= 1");
  if (in.L0 <= Rational(0) || in.Delta0 <= Rational(0) || in.kappa <= Rational(0) ||
      in.rho0 <= Rational(0))
    fail("InputOutOfRange", "L0, Delta0, kappa, rho0 must be positive");
  if (in.xi <= Rational(0)) fail("NonPositiveXi", "xi must be positive");
  if (in.U_size < 2) fail("InputOutOfRange", "U_size must be >= 2");

  ConstantsRecord rec;
  rec.in = in;
  rec.alpha = Rational(200) * in.delta;
  if (in.N > (INT64_MAX / 1'000'000) - 1) fail("Overflow", "N too large");
  rec.C = 1'000'000 * (in.N + 1);

  rec.tau0 = in.Delta0 + Rational(2) * in.L0 + Rational(223) * in.delta;
  rec.b = (rec.tau0 / (Rational(200) * in.delta) + Rational(2)).ceil() + 1;
  rec.M = ((rec.tau0 - Rational(50) * in.delta) / in.L0).floor();
  rec.M_ge_b = rec.M >= rec.b;

  Interval log4 = interval_log(Interval::exact(4.0));
  Interval eps = from_rational(in.epsilon);
  Interval one_minus_eps = from_rational(Rational(1) - in.epsilon);
  rec.d1 = Interval::exact(static_cast<double>(rec.b)) * log4 -
           interval_log(eps / one_minus_eps);
  rec.d2 = log4 + interval_log(one_minus_eps);
  rec.M0 = rec.d1 / rec.d2;

  Interval L0v = from_rational(in.L0);
  Interval delta0v = from_rational(in.delta0);
  rec.tau1 = Interval::max(from_rational(rec.tau0),
                           L0v * (rec.M0 + Interval::exact(1.0)) +
                               Interval::exact(50.0) * delta0v);
  rec.rho = Interval::max(
      from_rational(in.rho0),
      interval_log(Interval::exact(2.0) *
                       (Interval::exact(2.0) * rec.tau1 +
                        Interval::exact(23.0) * delta0v) +
                   Interval::exact(1.0)));
  rec.tau2 = rec.tau1 + Interval::exact(8.0) * L0v +
             Interval::exact(8.0) * from_rational(in.delta);

  Interval hundred_pi_sinh_rho =
      Interval::exact(100.0) * interval_pi() * interval_sinh(rec.rho);
  rec.lambda0 = from_rational(in.Delta0) / hundred_pi_sinh_rho;
  rec.mu0 = hundred_pi_sinh_rho / delta0v * from_rational(in.kappa / in.delta);

  Rational Delta_Q = in.Delta_Q.value_or(in.Delta0);
  if (Delta_Q <= Rational(0)) fail("InputOutOfRange", "Delta_Q must be positive");
  rec.sigma_rescale = Rational::min(in.delta0 / in.kappa, in.Delta0 / Delta_Q);

  rec.nu = (Rational(1) - in.epsilon) * Rational(2) * Rational(in.U_size);
  double twoU = static_cast<double>(2 * in.U_size);
  rec.xi_counting =
      Interval::exact(2.0) *
      Interval{down(std::pow(twoU, static_cast<double>(rec.b))),
               up(std::pow(twoU, static_cast<double>(rec.b)))};
  rec.sigma_counting = eps / (Interval::exact(2.0) * one_minus_eps * rec.xi_counting);

  rec.xi_out = growth_transfer(in.xi.to_double());

  Rational energy = in.energy.value_or(in.L0);
  Rational stable_tlen =
      in.stable_tlen.value_or(Rational(rec.C) * Rational(rec.C) * in.L0);
  Rational Delta_g = in.Delta_g.value_or(Rational(rec.C) * Rational(rec.C) *
                                         Rational(rec.C) * in.L0);
  if (stable_tlen <= Rational(0))
    fail("NonPositiveTranslation", "stable_tlen must be positive");
  rec.a0 = Rational(2 * in.N) *
           (Rational(8) * energy / stable_tlen + Rational(1));
  rec.b0 = Rational(2) / stable_tlen *
           (Delta_g + Rational(5) * energy + Rational(104) * in.delta + rec.alpha);
  return rec;
}

double growth_transfer(double xi) {
  if (!(xi > 0.0)) fail("NonPositiveXi", "xi must be positive");
  return std::min(xi / 1e8, 1e-5 * std::log(2.0));
}

PingpongConstants pingpong_constants(std::int64_t N, const Rational& L,
                                     const Rational& kappa) {
  if (N < 1) fail("InputOutOfRange", "N must be >= 1");
  if (L <= Rational(0)) fail("InputOutOfRange", "L must be positive");
  if (kappa <= Rational(0)) fail("InputOutOfRange", "kappa must be positive");

  PingpongConstants pc;
  if (N > (INT64_MAX / 1'000'000) - 1) fail("Overflow", "N too large");
  pc.C = 1'000'000 * (N + 1);
  __int128 c2 = static_cast<__int128>(pc.C) * pc.C;
  if (4 * c2 > INT64_MAX || 3304 * 4 * c2 > INT64_MAX)
    fail("Overflow", "pipeline exponents exceed int64");
  pc.n1 = static_cast<std::int64_t>(4 * c2);
  pc.n2 = 3304 * pc.n1;

  double Cd = static_cast<double>(pc.C);
  double Ld = L.to_double();
  pc.energy_n1 = 4.0 * Cd * Cd * Ld;
  pc.energy_n2 = 13216.0 * Cd * Cd * Ld;
  pc.energy_pingpong = 1e12 * Cd * Cd * Cd * Ld;
  pc.min_n = Cd * Cd * Cd;
  pc.power_coeff = 1e7;
  return pc;
}

}  // namespace ggt
