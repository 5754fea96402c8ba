#include "gb/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "gb/analysis.hpp"

namespace gb {

namespace {

const std::pair<Property, const char*> kNames[] = {
    {Property::bezout, "bezout"},
    {Property::hilbert_regular, "hilbert_regular"},
    {Property::semi_regular, "semi_regular"},
    {Property::stable, "stable"},
    {Property::psi_bijection, "psi_bijection"},
    {Property::type1_pairs, "type1_pairs"},
    {Property::degree_monotone, "degree_monotone"},
    {Property::truncation_gb, "truncation_gb"},
    {Property::half_staircase, "half_staircase"},
    {Property::lm_affine_homog, "lm_affine_homog"},
    {Property::nonempty_degrees, "nonempty_degrees"},
    {Property::rref_contains_gb, "rref_contains_gb"},
    {Property::noether_position, "noether_position"},
    {Property::reductor_band, "reductor_band"},
};

}  // namespace

const char* property_name(Property p) {
  for (auto& [k, v] : kNames)
    if (k == p) return v;
  return "?";
}

std::optional<Property> property_from_name(const std::string& name) {
  for (auto& [k, v] : kNames)
    if (name == v) return k;
  return std::nullopt;
}

std::vector<Property> all_properties() {
  std::vector<Property> out;
  for (auto& [k, v] : kNames) out.push_back(k);
  return out;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["property"] = property_name(property);
  j["n"] = inst.n;
  j["delta"] = inst.delta;
  j["p"] = inst.p;
  j["seed"] = inst.seed;
  j["shape"] = inst.shape == Shape::homogeneous ? "homogeneous" : "affine";
  j["verdict"] = pass ? "pass" : "fail";
  if (!pass && precondition_failed) j["precondition_failed"] = true;
  if (!pass && genericity_candidate) j["genericity_violation_candidate"] = true;
  if (!witness.empty()) j["witness"] = witness;
  if (!stats.empty()) j["stats"] = stats;
  return j.dump();
}

bool stable_check(const std::vector<Monomial>& lms, size_t n, uint32_t maxdeg,
                  std::string* witness) {
  auto in_ideal = [&](const Monomial& m) {
    for (auto& l : lms)
      if (divides(l, m)) return true;
    return false;
  };
  for (uint32_t d = 1; d <= maxdeg; ++d)
    for (auto& m : enumerate_monomials(d, n, n, EnumKind::exact)) {
      if (!in_ideal(m)) continue;
      for (size_t i = ind(m); i >= 1; --i) {
        if (m.e[i - 1] == 0) continue;
        for (size_t j = 1; j < i; ++j) {
          Monomial swapped = product(quotient(m, Monomial::var(n, i)), Monomial::var(n, j));
          if (!in_ideal(swapped)) {
            if (witness)
              *witness = "m=" + to_text(m) + " x" + std::to_string(j) + "*m/x" +
                         std::to_string(i) + " escapes the ideal";
            return false;
          }
        }
      }
    }
  return true;
}

namespace {

// everything a single instance might need, computed lazily
struct Ctx {
  Instance inst;
  PrimeField F;
  std::vector<Poly> sys;
  GBResult gb;
  Trace trace;
  std::vector<Monomial> lms;
  std::optional<MonomialSet> stairs;

  explicit Ctx(const Instance& i, Shape shape) : inst(i), F(i.p) {
    sys = gen_random_system(i.n, i.delta, F, shape, i.seed);
    auto [res, tr] = f4_build(sys, F, i.delta);
    gb = std::move(res);
    trace = std::move(tr);
    lms = leading_monomials(gb.basis);
    stairs = staircase(lms, i.n);
  }

};

uint64_t ipow(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Report check_bezout(Ctx& c, Report r) {
  if (!c.stairs) {
    r.witness = "ideal is not zero-dimensional";
    return r;
  }
  uint64_t want = ipow(c.inst.delta, c.inst.n);
  r.pass = c.stairs->size() == want;
  r.stats = "dimension=" + std::to_string(c.stairs->size());
  if (!r.pass)
    r.witness = "quotient dimension " + std::to_string(c.stairs->size()) +
                " != " + std::to_string(want);
  return r;
}

Report check_hilbert(Ctx& c, Report r, bool semi) {
  std::vector<Poly> sys = c.sys;
  std::optional<MonomialSet> stairs = c.stairs;
  size_t s = c.inst.n;
  if (semi) {
    // overdetermined: one extra generic form on top of the square system
    std::vector<Poly> extra = gen_random_system(c.inst.n, c.inst.delta, c.F,
                                                Shape::homogeneous, c.inst.seed + 1);
    sys.push_back(extra.front());
    s = sys.size();
    GBResult g = f4(sys, c.F);
    stairs = staircase(leading_monomials(g.basis), c.inst.n);
  }
  if (!stairs) {
    r.witness = "ideal is not zero-dimensional";
    return r;
  }
  uint32_t D = uint32_t(c.inst.n) * (c.inst.delta - 1) + 1;
  std::vector<uint64_t> hist(D + 2, 0);
  for (auto& m : *stairs)
    if (m.deg <= D + 1) ++hist[m.deg];
  PowerSeries hs = plus_truncate(expand_ratio(unsigned(s), unsigned(c.inst.n),
                                              c.inst.delta, D + 1));
  for (uint32_t d = 0; d <= D + 1; ++d) {
    if (BigInt(hist[d]) != hs.at(d)) {
      r.witness = "HS coefficient at degree " + std::to_string(d) + ": found " +
                  std::to_string(hist[d]) + ", series gives " + hs.at(d).str();
      return r;
    }
  }
  r.pass = true;
  return r;
}

Report check_stable(Ctx& c, Report r) {
  uint32_t maxdeg = 0;
  for (auto& m : c.lms) maxdeg = std::max(maxdeg, m.deg);
  std::string w;
  r.pass = stable_check(c.lms, c.inst.n, maxdeg + 1, &w);
  if (!r.pass) {
    r.witness = w;
    r.genericity_candidate = true;
  }
  return r;
}

Report check_psi(Ctx& c, Report r) {
  if (!c.stairs) {
    r.precondition_failed = true;
    r.witness = "precondition: zero-dimensional leading ideal";
    return r;
  }
  if (!stable_check(c.lms, c.inst.n, uint32_t(c.inst.n) * (c.inst.delta - 1) + 2)) {
    r.precondition_failed = true;
    r.witness = "precondition: stable leading ideal";
    return r;
  }
  size_t n = c.inst.n;
  auto in_ideal = [&](const Monomial& m) {
    for (auto& l : c.lms)
      if (divides(l, m)) return true;
    return false;
  };
  uint32_t kmax = 2 * (uint32_t(n) * (c.inst.delta - 1) + 1) + 2;
  for (size_t l = 1; l <= n; ++l) {
    std::set<Monomial, MonoGreater> image;
    for (auto& m : *c.stairs) {
      if (ind(m) > l - 1) continue;  // m must lie in the first l-1 variables
      bool found = false;
      for (uint32_t k = 1; k <= kmax; ++k) {
        Monomial cand = product(m, Monomial::var(n, l, uint16_t(k)));
        if (in_ideal(cand)) {
          if (image.count(cand)) {
            r.witness = "psi_" + std::to_string(l) + " not injective at " + to_text(cand);
            return r;
          }
          image.insert(cand);
          found = true;
          break;
        }
      }
      if (!found) {
        r.witness = "alpha exponent missing for " + to_text(m) + " at level " +
                    std::to_string(l);
        return r;
      }
    }
    std::set<Monomial, MonoGreater> target;
    for (auto& m : c.lms)
      if (ind(m) == l) target.insert(m);
    if (image != target) {
      r.witness = "psi_" + std::to_string(l) + " image does not match the index-" +
                  std::to_string(l) + " leading monomials";
      return r;
    }
  }
  r.pass = true;
  return r;
}

Report check_type1(Ctx& c, Report r) {
  for (size_t k = 0; k < c.gb.rounds.size(); ++k)
    for (size_t q = 0; q < c.gb.rounds[k].type1.size(); ++q)
      if (!c.gb.rounds[k].type1[q]) {
        r.witness = "round " + std::to_string(k + 1) + ", pair " + std::to_string(q + 1) +
                    " is not type-1";
        r.genericity_candidate = true;
        return r;
      }
  r.pass = true;
  return r;
}

Report check_degree_monotone(Ctx& c, Report r) {
  uint32_t prev = 0;
  for (size_t k = 0; k < c.gb.rounds.size(); ++k) {
    const auto& st = c.gb.rounds[k];
    if (k > 0 && st.degree <= prev) {
      r.witness = "round degree fell: " + std::to_string(prev) + " then " +
                  std::to_string(st.degree);
      return r;
    }
    for (uint32_t ad : st.adopted_degrees)
      if (ad != st.degree) {
        r.witness = "round of degree " + std::to_string(st.degree) +
                    " adopted a polynomial of degree " + std::to_string(ad);
        return r;
      }
    prev = st.degree;
  }
  r.pass = true;
  return r;
}

Report check_truncation(Ctx& c, Report r) {
  std::vector<Poly> red = interreduce(c.gb.basis, c.F);
  for (size_t j = 1; j < c.inst.n; ++j) {
    std::vector<Poly> Fj;
    for (auto& f : c.sys) Fj.push_back(phi(f, j));
    std::vector<Poly> got = interreduce(f4(Fj, c.F).basis, c.F);
    std::vector<Poly> want;
    for (auto& g : red)
      if (g.lm_ind() <= j) {
        Poly t = phi(g, j);
        if (!t.is_zero()) want.push_back(t);
      }
    std::sort(want.begin(), want.end(),
              [](const Poly& a, const Poly& b) { return cmp(a.lm(), b.lm()) > 0; });
    bool same = got.size() == want.size();
    for (size_t k = 0; same && k < got.size(); ++k) same = got[k] == want[k];
    if (!same) {
      r.witness = "reduced bases differ after truncation to " + std::to_string(j) +
                  " variables";
      return r;
    }
  }
  r.pass = true;
  return r;
}

Report check_half_staircase(Ctx& c, Report r) {
  if (!c.stairs) {
    r.precondition_failed = true;
    r.witness = "precondition: zero-dimensional leading ideal";
    return r;
  }
  size_t n = c.inst.n;
  auto [D, dp] = bounds(n, c.inst.delta);
  PowerSeries beta = beta_last(n, c.inst.delta, D);
  for (uint32_t d = dp + 1; d <= D; ++d) {
    std::set<Monomial, MonoGreater> got;
    for (auto& m : c.lms)
      if (m.deg == d) got.insert(m);
    std::set<Monomial, MonoGreater> want;
    for (auto& m : *c.stairs)
      if (m.deg == D - d && ind(m) <= n - 1)
        want.insert(product(m, Monomial::var(n, n, uint16_t(2 * d - D))));
    if (got != want) {
      r.witness = "degree-" + std::to_string(d) +
                  " leading monomials are not x_n^(2d-D) times the staircase";
      r.genericity_candidate = true;
      return r;
    }
    if (BigInt(uint64_t(got.size())) != beta.at(D - d)) {
      r.witness = "degree-" + std::to_string(d) + " count " + std::to_string(got.size()) +
                  " != beta_" + std::to_string(D - d) + " = " + beta.at(D - d).str();
      r.genericity_candidate = true;
      return r;
    }
  }
  r.pass = true;
  return r;
}

Report check_lm_affine_homog(Ctx& c, Report r) {
  std::vector<Poly> H;
  for (auto& f : c.sys) H.push_back(hd(f));
  GBResult hb = f4(H, c.F);
  MonomialSet a = leading_monomials(c.gb.basis), b = leading_monomials(hb.basis);
  std::sort(a.begin(), a.end(), MonoGreater{});
  std::sort(b.begin(), b.end(), MonoGreater{});
  r.pass = a == b;
  if (!r.pass) r.witness = "lm<F> differs from lm<hd F>";
  return r;
}

Report check_nonempty_degrees(Ctx& c, Report r) {
  auto [D, dp] = bounds(c.inst.n, c.inst.delta);
  (void)dp;
  std::set<uint32_t> degs;
  for (auto& m : c.lms) degs.insert(m.deg);
  for (uint32_t d = c.inst.delta; d <= D; ++d)
    if (!degs.count(d)) {
      r.witness = "no basis element of degree " + std::to_string(d);
      r.genericity_candidate = true;
      return r;
    }
  for (uint32_t d : degs)
    if (d < c.inst.delta || d > D) {
      r.witness = "basis element of unexpected degree " + std::to_string(d);
      return r;
    }
  r.pass = true;
  return r;
}

Report check_rref_contains_gb(Ctx& c, Report r) {
  std::vector<Poly> red = interreduce(c.gb.basis, c.F);
  auto [D, dp] = bounds(c.inst.n, c.inst.delta);
  (void)dp;
  for (uint32_t e = c.inst.delta; e <= D; ++e) {
    std::vector<Poly> rows;
    for (auto& f : c.sys) {
      if (f.degree() > e) continue;
      for (auto& m : enumerate_monomials(e - f.degree(), c.inst.n, c.inst.n, EnumKind::exact))
        rows.push_back(mul_term(f, m, 1, c.F));
    }
    MacaulayMatrix M = build_macaulay(rows, c.F);
    echelon(M, true);
    std::vector<Poly> rref;
    for (size_t k = 0; k < M.nrows(); ++k) {
      Poly f = M.row_poly(k);
      if (!f.is_zero()) rref.push_back(make_monic(f, c.F));
    }
    for (auto& g : red) {
      if (g.degree() != e) continue;
      bool found = false;
      for (auto& f : rref)
        if (f == g) { found = true; break; }
      if (!found) {
        r.witness = "degree-" + std::to_string(e) +
                    " reduced-basis element missing from the RREF rows";
        return r;
      }
    }
  }
  r.pass = true;
  return r;
}

Report check_noether(Ctx& c, Report r) {
  // drop the trailing zero exponents so the truncation lives in i variables;
  // grevlex on the small ring is the restriction of grevlex on the big one
  auto shrink = [](const Poly& f, size_t i) {
    Poly out;
    for (auto& t : f.t)
      out.t.push_back({Monomial(std::vector<uint16_t>(t.m.e.begin(), t.m.e.begin() + i)), t.c});
    return out;
  };
  for (size_t i = 1; i <= c.inst.n; ++i) {
    std::vector<Poly> Fi;
    for (size_t k = 0; k < i; ++k) Fi.push_back(shrink(phi(hd(c.sys[k]), i), i));
    GBResult g = f4(Fi, c.F);
    auto st = staircase(leading_monomials(g.basis), i);
    uint64_t want = ipow(c.inst.delta, i);
    // a regular length-i intersection in i variables has quotient dimension
    // delta^i and Hilbert function ((1-z^d)/(1-z))^i
    if (!st || st->size() != want) {
      r.witness = "truncation to " + std::to_string(i) + " variables is not regular";
      r.genericity_candidate = true;
      return r;
    }
    uint32_t Di = uint32_t(i) * (c.inst.delta - 1) + 1;
    std::vector<uint64_t> hist(Di + 2, 0);
    for (auto& m : *st)
      if (m.deg <= Di + 1) ++hist[m.deg];
    PowerSeries hs = expand_ratio(unsigned(i), unsigned(i), c.inst.delta, Di + 1);
    for (uint32_t d = 0; d <= Di + 1; ++d)
      if (BigInt(hist[d]) != hs.at(d)) {
        r.witness = "truncation to " + std::to_string(i) +
                    " variables has a non-regular Hilbert function at degree " +
                    std::to_string(d);
        r.genericity_candidate = true;
        return r;
      }
  }
  r.pass = true;
  return r;
}

Report check_reductor_band(Ctx& c, Report r) {
  GBResult replay = f4_trace(c.sys, c.trace, c.F);
  if (replay.status != Status::ok) {
    r.precondition_failed = true;
    r.witness = "self-replay failed";
    return r;
  }
  size_t n = c.inst.n;
  auto [D, dp] = bounds(n, c.inst.delta);
  for (auto& st : replay.rounds) {
    if (st.degree < dp + 2) continue;
    uint32_t d = st.degree;
    int lo = int(2 * d) - int(D) - 2, hi = int(2 * d) - int(D);
    BigInt cap = 0;
    for (unsigned k = 0; k <= 2; ++k) cap += binomial(n - 2 + (D - d) + k, (D - d) + k);
    if (BigInt(uint64_t(st.reductor_desc.size())) > cap) {
      r.witness = "round of degree " + std::to_string(d) + " used " +
                  std::to_string(st.reductor_desc.size()) + " reductors, bound " + cap.str();
      r.genericity_candidate = true;
      return r;
    }
    for (auto& [m1, m2] : st.reductor_desc) {
      Monomial mu = product(m1, m2);
      int xn = mu.e[n - 1];
      if (ind(mu) != n || xn < lo || xn > hi) {
        r.witness = "reductor " + to_text(mu) + " outside the x_n band [" +
                    std::to_string(lo) + "," + std::to_string(hi) + "] in degree " +
                    std::to_string(d);
        r.genericity_candidate = true;
        return r;
      }
    }
  }
  r.pass = true;
  return r;
}

}  // namespace

Report verify(Property prop, const Instance& inst) {
  Report r;
  r.property = prop;
  r.inst = inst;
  Shape shape = inst.shape;
  switch (prop) {
    case Property::hilbert_regular:
    case Property::semi_regular:
    case Property::half_staircase:
    case Property::nonempty_degrees:
    case Property::rref_contains_gb:
    case Property::truncation_gb:
    case Property::psi_bijection:
    case Property::stable:
    case Property::noether_position:
    case Property::reductor_band:
      shape = Shape::homogeneous;
      break;
    case Property::lm_affine_homog:
    case Property::degree_monotone:
      shape = Shape::affine;
      break;
    default:
      break;
  }
  r.inst.shape = shape;
  Ctx c(inst, shape);
  switch (prop) {
    case Property::bezout: return check_bezout(c, r);
    case Property::hilbert_regular: return check_hilbert(c, r, false);
    case Property::semi_regular: return check_hilbert(c, r, true);
    case Property::stable: return check_stable(c, r);
    case Property::psi_bijection: return check_psi(c, r);
    case Property::type1_pairs: return check_type1(c, r);
    case Property::degree_monotone: return check_degree_monotone(c, r);
    case Property::truncation_gb: return check_truncation(c, r);
    case Property::half_staircase: return check_half_staircase(c, r);
    case Property::lm_affine_homog: return check_lm_affine_homog(c, r);
    case Property::nonempty_degrees: return check_nonempty_degrees(c, r);
    case Property::rref_contains_gb: return check_rref_contains_gb(c, r);
    case Property::noether_position: return check_noether(c, r);
    case Property::reductor_band: return check_reductor_band(c, r);
  }
  return r;
}

}  // namespace gb
