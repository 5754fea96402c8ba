#pragma once

// Hilbert-series machinery and the cost model: truncated integer power
// series with exact big-integer coefficients, the positive-part truncation,
// the staircase coefficient families beta_d / beta_{d,i} / b_d^{(i)}, the
// Macaulay bound, the blocked-reduction cost formulas (measured and
// generating-series form), competitor costs, asymptotic constants, the
// predicted Groebner-basis cardinality, and CSV table generation.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gb/monomial.hpp"

namespace gb {

using BigInt = boost::multiprecision::cpp_int;

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& w) : std::domain_error(w) {}
};

struct PowerSeries {
  std::vector<BigInt> c;  // coefficients 0..order

  size_t order() const { return c.empty() ? 0 : c.size() - 1; }
  BigInt at(size_t d) const { return d < c.size() ? c[d] : BigInt(0); }
};

// (1 - z^delta)^s / (1 - z)^i, exactly, to order D
PowerSeries expand_ratio(unsigned s, unsigned i, unsigned delta, unsigned D);

// zero every coefficient from the first index with c_d <= 0 onward
PowerSeries plus_truncate(PowerSeries S);

BigInt binomial(uint64_t n, uint64_t k);
double log2_big(const BigInt& x);  // -inf for x <= 0

// coefficient families (all positive-part truncated where the definitions
// require it); computed to order D
PowerSeries beta_last(size_t n, uint32_t delta, unsigned D);              // [(1-z^d)^n/(1-z)^(n-1)]+
PowerSeries beta_trunc(size_t n, uint32_t delta, unsigned i, unsigned D); // [(1-z^d)^n/(1-z)^i]+
PowerSeries b_coeffs(unsigned i, uint32_t delta, unsigned D);             // z^d prod_{j<i} (1-z^d)/(1-z)

struct Bounds {
  uint32_t D = 0;       // n(delta-1)+1
  uint32_t dprime = 0;  // floor((D-1)/2)+1
};
Bounds bounds(size_t n, uint32_t delta);

struct CostParams {
  size_t n = 0;
  uint32_t delta = 2;
  double omega = 3.0;
  double epsilon = 0.0;
};

struct Cost {
  double log2_N1 = -std::numeric_limits<double>::infinity();
  double log2_N2 = -std::numeric_limits<double>::infinity();
  double log2_total = -std::numeric_limits<double>::infinity();
};

// Staircase data taken from an actual Groebner basis: gamma[d][j] counts
// minimal-basis leading monomials of degree d with variable index j, and
// B[d][i] counts staircase monomials of degree d lying in the first i
// variables; both indexed d in 0..D, j/i in 0..n.
struct StaircaseData {
  size_t n = 0;
  uint32_t D = 0;
  std::vector<std::vector<uint64_t>> gamma;
  std::vector<std::vector<uint64_t>> B;
};
StaircaseData measure_staircase(const std::vector<Monomial>& lms,
                                const MonomialSet& stairs, size_t n, uint32_t D);

Cost cost_f4t_bar(const CostParams& p);
Cost cost_f4t_measured(const CostParams& p, const StaircaseData& sd);

struct CompetitorCost {
  double log2_lazard = 0;
  double log2_f5 = 0;
};
CompetitorCost cost_competitors(const CostParams& p);

// asymptotic constants
double E_const(double p, uint32_t delta);           // E_p(delta), p in (0,1]
double L_const(double omega, uint32_t delta);       // L_omega(delta); L_2 := 1
double ell_const(double omega);                     // L_omega(2)
double ell_closed_form(double omega);               // 1/(1+e^(-1/(2(omega-2))))
double c_const(double epsilon, uint32_t delta, double omega);
double gain_const(double omega, uint32_t delta);    // 2.81 delta^(3-w) e^-(...)

BigInt gb_cardinality(size_t n, uint32_t delta);

// CSV: delta,n,omega,a_f4t_bar,a_lazard,a_f5,b_card plus full precision
std::string emit_tables(const std::vector<std::pair<uint32_t, size_t>>& grid,
                        const std::vector<double>& omegas, int precision = 2);

}  // namespace gb
