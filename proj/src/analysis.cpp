#include "gb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gb {

PowerSeries expand_ratio(unsigned s, unsigned i, unsigned delta, unsigned D) {
  // 1/(1-z)^i first: coefficients C(i-1+d, d); the empty product for i = 0
  std::vector<BigInt> base(D + 1);
  for (unsigned d = 0; d <= D; ++d)
    base[d] = (i == 0) ? BigInt(d == 0 ? 1 : 0) : binomial(i - 1 + d, d);
  // multiply by (1-z^delta)^s = sum_k (-1)^k C(s,k) z^(k delta)
  PowerSeries out;
  out.c.assign(D + 1, BigInt(0));
  for (unsigned k = 0; k <= s && k * delta <= D; ++k) {
    BigInt coef = binomial(s, k);
    if (k % 2 == 1) coef = -coef;
    for (unsigned d = k * delta; d <= D; ++d) out.c[d] += coef * base[d - k * delta];
  }
  return out;
}

PowerSeries plus_truncate(PowerSeries S) {
  bool cut = false;
  for (auto& c : S.c) {
    if (!cut && c <= 0) cut = true;
    if (cut) c = 0;
  }
  return S;
}

BigInt binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r /= BigInt(i);
  }
  return r;
}

double log2_big(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  size_t bits = boost::multiprecision::msb(x);  // index of the top bit
  if (bits <= 52) return std::log2(x.convert_to<double>());
  BigInt top = x >> (bits - 52);
  return std::log2(top.convert_to<double>()) + double(bits - 52);
}

PowerSeries beta_last(size_t n, uint32_t delta, unsigned D) {
  return plus_truncate(expand_ratio(unsigned(n), unsigned(n) - 1, delta, D));
}

PowerSeries beta_trunc(size_t n, uint32_t delta, unsigned i, unsigned D) {
  return plus_truncate(expand_ratio(unsigned(n), i, delta, D));
}

PowerSeries b_coeffs(unsigned i, uint32_t delta, unsigned D) {
  PowerSeries prod = expand_ratio(i - 1, i - 1, delta, D);
  PowerSeries out;
  out.c.assign(D + 1, BigInt(0));
  for (unsigned d = delta; d <= D; ++d) out.c[d] = prod.c[d - delta];
  return out;
}

Bounds bounds(size_t n, uint32_t delta) {
  Bounds b;
  b.D = uint32_t(n) * (delta - 1) + 1;
  b.dprime = (b.D - 1) / 2 + 1;
  return b;
}

StaircaseData measure_staircase(const std::vector<Monomial>& lms,
                                const MonomialSet& stairs, size_t n, uint32_t D) {
  StaircaseData sd;
  sd.n = n;
  sd.D = D;
  sd.gamma.assign(D + 1, std::vector<uint64_t>(n + 1, 0));
  sd.B.assign(D + 1, std::vector<uint64_t>(n + 1, 0));
  for (auto& m : lms)
    if (m.deg <= D) ++sd.gamma[m.deg][ind(m)];
  for (auto& m : stairs)
    if (m.deg <= D)
      for (size_t i = ind(m); i <= n; ++i) ++sd.B[m.deg][i];
  // B_{0,0} = {1}; higher degrees have nothing in zero variables
  return sd;
}

namespace {

constexpr long double kZero = 0.0L;

// r*S/min(r,S)^(3-w) + S^(w-1), with vanishing-numerator conventions
long double n1_inner(long double r, long double S, double omega) {
  long double t = 0;
  if (r > 0 && S > 0) t += r * S / std::pow(std::min(r, S), (long double)(3.0 - omega));
  if (S > 0) t += std::pow(S, (long double)(omega - 1.0));
  return t;
}

Cost finish(long double N1, long double N2) {
  Cost c;
  if (N1 > 0) c.log2_N1 = double(std::log2(N1));
  if (N2 > 0) c.log2_N2 = double(std::log2(N2));
  if (N1 + N2 > 0) c.log2_total = double(std::log2(N1 + N2));
  return c;
}

}  // namespace

Cost cost_f4t_bar(const CostParams& p) {
  auto [D, dp] = bounds(p.n, p.delta);
  unsigned n = unsigned(p.n);
  // beta[i] is the truncated series for i variables kept; beta[0] is the
  // degenerate column: only the constant survives
  std::vector<PowerSeries> beta(n + 1);
  for (unsigned i = 1; i <= n; ++i) beta[i] = beta_trunc(p.n, p.delta, i, D + 1);
  beta[0].c.assign(D + 2, BigInt(0));
  beta[0].c[0] = 1;

  std::vector<long double> S_of_d(D + 2, kZero);
  for (unsigned j = 1; j <= n; ++j) {
    PowerSeries b = b_coeffs(j, p.delta, D + 1);
    for (unsigned d = 0; d <= D + 1; ++d) S_of_d[d] += b.c[d].convert_to<long double>();
  }

  long double N1 = 0;
  for (unsigned d = p.delta; d <= dp + 1; ++d) {
    long double cols = binomial(n + d, d).convert_to<long double>();
    for (unsigned i = 1; i <= n; ++i) {
      BigInt rbar = binomial(i - 1 + d, d) - binomial(uint64_t(i) - 2 + d, d) -
                    (beta[i].at(d) - beta[i - 1].at(d));
      long double r = rbar > 0 ? rbar.convert_to<long double>() : kZero;
      N1 += cols * n1_inner(r, S_of_d[d], p.omega);
    }
  }

  PowerSeries bl = beta_last(p.n, p.delta, D);
  long double N2 = 0;
  for (unsigned d = dp + 2; d <= D; ++d) {
    long double g = bl.at(D - d).convert_to<long double>();
    if (g <= 0) continue;  // 0^(w-2) := 0
    long double red = 0;
    for (unsigned k = 0; k <= 2; ++k)
      red += binomial(n - 2 + (D - d) + k, (D - d) + k).convert_to<long double>();
    N2 += std::pow(g, (long double)(p.omega - 2.0)) *
          binomial(n + d, d).convert_to<long double>() * red;
  }
  return finish(N1, N2);
}

Cost cost_f4t_measured(const CostParams& p, const StaircaseData& sd) {
  auto [D, dp] = bounds(p.n, p.delta);
  unsigned n = unsigned(p.n);
  long double N1 = 0;
  for (unsigned d = p.delta; d <= dp + 1 && d <= sd.D; ++d) {
    long double cols = binomial(n + d, d).convert_to<long double>();
    for (unsigned i = 1; i <= n; ++i) {
      long double S = 0;
      for (unsigned j = i; j <= n; ++j) S += (long double)sd.gamma[d][j];
      BigInt rb = binomial(i - 1 + d, d) - binomial(uint64_t(i) - 2 + d, d) -
                  (BigInt(sd.B[d][i]) - BigInt(sd.B[d][i - 1]));
      long double r = rb > 0 ? rb.convert_to<long double>() : kZero;
      N1 += cols * n1_inner(r, S, p.omega);
    }
  }
  long double N2 = 0;
  for (unsigned d = dp + 2; d <= D && d <= sd.D; ++d) {
    long double g = (long double)sd.gamma[d][n];
    if (g <= 0) continue;
    long double red = 0;
    for (unsigned k = 0; k <= 2; ++k)
      red += binomial(n - 2 + (D - d) + k, (D - d) + k).convert_to<long double>();
    N2 += std::pow(g, (long double)(p.omega - 2.0)) *
          binomial(n + d, d).convert_to<long double>() * red;
  }
  return finish(N1, N2);
}

CompetitorCost cost_competitors(const CostParams& p) {
  auto [D, dp] = bounds(p.n, p.delta);
  (void)dp;
  unsigned n = unsigned(p.n);
  CompetitorCost out;
  out.log2_lazard = std::log2(double(n)) + p.omega * log2_big(binomial(n + D, D));
  long double f5 = 0;
  for (unsigned i = 1; i <= n; ++i) {
    PowerSeries b = b_coeffs(i, p.delta, D);
    for (unsigned d = p.delta; d <= D; ++d) {
      long double bd = b.at(d).convert_to<long double>();
      if (bd <= 0) continue;
      f5 += bd * binomial(i - 1 + d, d).convert_to<long double>() *
            binomial(n + d, d).convert_to<long double>();
    }
  }
  out.log2_f5 = f5 > 0 ? double(std::log2(f5)) : -std::numeric_limits<double>::infinity();
  return out;
}

double E_const(double p, uint32_t delta) {
  if (p <= 0 || p > 1) throw DomainError("E_p requires p in (0,1]");
  double q = p * (delta - 1);
  return std::log((1 + q) / delta) + q * std::log((1 + q) / q);
}

double L_const(double omega, uint32_t delta) {
  if (omega == 2.0) return 1.0;  // L_2 := 1 by convention
  double t = omega - 2.0;
  return delta / (1 - std::exp(-1.0 / t)) - 1.0 / (1 - std::exp(-1.0 / (delta * t)));
}

double ell_const(double omega) { return L_const(omega, 2); }

double ell_closed_form(double omega) {
  if (omega == 2.0) return 1.0;
  return 1.0 / (1.0 + std::exp(-1.0 / (2.0 * (omega - 2.0))));
}

double c_const(double epsilon, uint32_t delta, double omega) {
  return E_const(0.5, delta) + E_const(ell_const(omega) + epsilon, delta);
}

double gain_const(double omega, uint32_t delta) {
  return 2.81 * std::pow(double(delta), 3.0 - omega) /
         std::exp(E_const(0.5, delta) + E_const(ell_const(omega), delta));
}

BigInt gb_cardinality(size_t n, uint32_t delta) {
  unsigned order = unsigned(n) * delta + 1;
  BigInt total = 1;
  for (unsigned i = 1; i + 1 <= n; ++i) {
    PowerSeries s = beta_trunc(n, delta, i, order);
    for (auto& c : s.c) total += c;
  }
  return total;
}

std::string emit_tables(const std::vector<std::pair<uint32_t, size_t>>& grid,
                        const std::vector<double>& omegas, int precision) {
  std::ostringstream os;
  os << "delta,n,omega,a_f4t_bar,a_lazard,a_f5,b_card,"
        "a_f4t_bar_full,a_lazard_full,a_f5_full,b_card_full\n";
  for (auto [delta, n] : grid) {
    double scale = double(n) * std::log2(double(delta));
    double b_card = log2_big(gb_cardinality(n, delta)) / scale;
    for (double omega : omegas) {
      CostParams p{n, delta, omega, 0.0};
      Cost c = cost_f4t_bar(p);
      CompetitorCost comp = cost_competitors(p);
      double a_f4t = c.log2_total / scale;
      double a_laz = comp.log2_lazard / scale;
      double a_f5 = comp.log2_f5 / scale;
      char buf[256];
      snprintf(buf, sizeof buf, "%u,%zu,%g,%.*f,%.*f,%.*f,%.*f,%.17g,%.17g,%.17g,%.17g\n",
               delta, n, omega, precision, a_f4t, precision, a_laz, precision, a_f5,
               precision, b_card, a_f4t, a_laz, a_f5, b_card);
      os << buf;
    }
  }
  return os.str();
}

}  // namespace gb
