#include "gb/pairs.hpp"

#include <algorithm>
#include <numeric>

namespace gb {

std::vector<size_t> ap_order(const std::vector<Poly>& G) {
  std::vector<size_t> perm(G.size());
  std::iota(perm.begin(), perm.end(), 0);
  // degree ascending, grlex-descending within a degree: low-degree elements
  // come first, so for any pair the later generator is the one whose degree
  // (and variable index, on stable staircases) is largest
  std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    const Monomial& ma = G[a].lm();
    const Monomial& mb = G[b].lm();
    if (ma.deg != mb.deg) return ma.deg < mb.deg;
    return cmp(ma, mb, Ord::grlex) > 0;
  });
  for (size_t k = 1; k < perm.size(); ++k)
    if (G[perm[k - 1]].lm() == G[perm[k]].lm()) throw DuplicateLeadingMonomial();
  return perm;
}

CriticalPair make_pair(const std::vector<Poly>& G, size_t i, size_t j) {
  CriticalPair p;
  p.gi = i;
  p.gj = j;
  p.t = lcm(G[i].lm(), G[j].lm());
  p.ti = quotient(p.t, G[i].lm());
  p.tj = quotient(p.t, G[j].lm());
  p.degree = p.t.deg;
  return p;
}

Poly spoly(const std::vector<Poly>& G, const CriticalPair& p, const PrimeField& F) {
  if (G[p.gi].is_zero() || G[p.gj].is_zero()) throw ZeroPolynomial();
  Poly a = mul_term(G[p.gi], p.ti, F.inv(G[p.gi].lc()), F);
  Poly b = mul_term(G[p.gj], p.tj, F.inv(G[p.gj].lc()), F);
  return sub(a, b, F);
}

int syz_compare(const SyzygyId& a, const SyzygyId& b, const std::vector<Monomial>& lms) {
  if (a == b) return 0;
  Monomial ta = lcm(lms[a.i], lms[a.j]);
  Monomial tb = lcm(lms[b.i], lms[b.j]);
  int c = cmp(ta, tb, Ord::grlex);
  if (c != 0) return c;  // larger lcm means syz-larger (the eliminated pair
                         // of the Gebauer-Moller triple is the strict max)
  if (a.j != b.j) return a.j < b.j ? -1 : 1;
  return a.i < b.i ? -1 : 1;
}

std::vector<SyzygyId> gm_filter(const std::vector<SyzygyId>& pairs,
                                const std::vector<Monomial>& lms) {
  std::vector<SyzygyId> out;
  for (const SyzygyId& s : pairs) {
    Monomial tij = lcm(lms[s.i], lms[s.j]);
    bool eliminated = false;
    for (size_t k = 0; k < lms.size() && !eliminated; ++k) {
      if (k == s.i || k == s.j) continue;
      // (T1): lcm(lm_i, lm_j, lm_k) = lcm(lm_i, lm_j), i.e. lm_k | T_ij
      if (!divides(lms[k], tij)) continue;
      // (T2): S_ij is the strict syz-maximum of the three sub-syzygies
      SyzygyId sik{std::min(s.i, k), std::max(s.i, k)};
      SyzygyId sjk{std::min(s.j, k), std::max(s.j, k)};
      if (syz_compare(s, sik, lms) > 0 && syz_compare(s, sjk, lms) > 0)
        eliminated = true;
    }
    if (!eliminated) out.push_back(s);
  }
  return out;
}

bool is_type1(const CriticalPair& p, const std::vector<Poly>& G) {
  if (p.tj.deg != 1) return false;
  return ind(p.tj) < G[p.gj].lm_ind();
}

bool canonical_pair_less(const CriticalPair& a, const CriticalPair& b) {
  int c = cmp(a.t, b.t, Ord::grevlex);
  if (c != 0) return c > 0;  // lcm grevlex-descending first
  if (a.gi != b.gi) return a.gi < b.gi;
  return a.gj < b.gj;
}

}  // namespace gb
