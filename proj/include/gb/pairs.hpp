#pragma once

// Critical pairs and S-polynomials, the basis ordering by leading monomial
// (degree ascending, grlex-descending ties), the syzygy ordering, the
// Gebauer-Moller elimination set
// B(G), and the type-1 predicate (second cofactor a single variable below
// the variable index of the second generator).

#include <vector>

#include "gb/poly.hpp"

namespace gb {

struct DuplicateLeadingMonomial : std::invalid_argument {
  DuplicateLeadingMonomial() : std::invalid_argument("leading monomials are not pairwise distinct") {}
};

struct CriticalPair {
  Monomial t;        // lcm of the two leading monomials
  Monomial ti, tj;   // cofactors: ti*lm(gi) = t = tj*lm(gj)
  size_t gi = 0, gj = 0;  // positions in the ap-ordered basis, gi < gj
  uint32_t degree = 0;    // deg(t)
};

struct SyzygyId {
  size_t i = 0, j = 0;  // i < j
  bool operator==(const SyzygyId& o) const { return i == o.i && j == o.j; }
};

// permutation sorting G by leading monomial: degree ascending, then
// grlex-descending among equal degrees
std::vector<size_t> ap_order(const std::vector<Poly>& G);

CriticalPair make_pair(const std::vector<Poly>& G, size_t i, size_t j);
Poly spoly(const std::vector<Poly>& G, const CriticalPair& p, const PrimeField& F);

// a <_syz b iff lcm(a) >_grlex lcm(b), ties broken by (j, then i) ascending
int syz_compare(const SyzygyId& a, const SyzygyId& b, const std::vector<Monomial>& lms);

// survivors of the Gebauer-Moller criterion among `pairs`; `lms` is the full
// ap-ordered list of leading monomials of the current basis
std::vector<SyzygyId> gm_filter(const std::vector<SyzygyId>& pairs,
                                const std::vector<Monomial>& lms);

bool is_type1(const CriticalPair& p, const std::vector<Poly>& G);

// canonical enumeration order used to match pairs with matrix rows:
// lcm grevlex-descending, then (i,j) lexicographic
bool canonical_pair_less(const CriticalPair& a, const CriticalPair& b);

}  // namespace gb
