#include "gb/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gb {

// ---------------------------------------------------------------- helpers

std::vector<Monomial> leading_monomials(const std::vector<Poly>& G) {
  std::vector<Monomial> lms;
  lms.reserve(G.size());
  for (auto& g : G) lms.push_back(g.lm());
  return lms;
}

Poly normal_form_poly(const Poly& f, const std::vector<Poly>& G, const PrimeField& F) {
  Poly h = f, r;
  while (!h.is_zero()) {
    bool reduced = false;
    for (auto& g : G) {
      if (g.is_zero()) continue;
      if (divides(g.lm(), h.lm())) {
        Monomial q = quotient(h.lm(), g.lm());
        h = sub(h, mul_term(g, q, F.div(h.lc(), g.lc()), F), F);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r.t.push_back(h.t.front());
      h.t.erase(h.t.begin());
    }
  }
  return r;
}

std::vector<Poly> minimalize(std::vector<Poly> G, const PrimeField& F) {
  std::erase_if(G, [](const Poly& g) { return g.is_zero(); });
  std::vector<Poly> out;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j)
      if (j != i && divides(G[j].lm(), G[i].lm()) && G[j].lm() != G[i].lm())
        redundant = true;
    // equal lms: keep the first occurrence only
    for (size_t j = 0; j < i && !redundant; ++j)
      if (G[j].lm() == G[i].lm()) redundant = true;
    if (!redundant) out.push_back(make_monic(G[i], F));
  }
  std::sort(out.begin(), out.end(),
            [](const Poly& a, const Poly& b) { return cmp(a.lm(), b.lm()) > 0; });
  return out;
}

std::vector<Poly> interreduce(std::vector<Poly> G, const PrimeField& F) {
  G = minimalize(std::move(G), F);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < G.size(); ++i) {
      std::vector<Poly> others;
      for (size_t j = 0; j < G.size(); ++j)
        if (j != i) others.push_back(G[j]);
      Poly r = normal_form_poly(G[i], others, F);
      if (!(r == G[i])) {
        G[i] = make_monic(r, F);
        changed = true;
      }
    }
  }
  std::sort(G.begin(), G.end(),
            [](const Poly& a, const Poly& b) { return cmp(a.lm(), b.lm()) > 0; });
  return G;
}

std::optional<MonomialSet> staircase(const std::vector<Monomial>& lms, size_t n) {
  // zero-dimensionality: a pure power of every variable must lead the ideal
  for (size_t v = 1; v <= n; ++v) {
    bool found = false;
    for (auto& m : lms) {
      bool pure = m.deg > 0;
      for (size_t k = 0; k < n && pure; ++k)
        if (m.e[k] > 0 && k + 1 != v) pure = false;
      if (pure) { found = true; break; }
    }
    if (!found) return std::nullopt;
  }
  auto in_ideal = [&](const Monomial& m) {
    for (auto& l : lms)
      if (divides(l, m)) return true;
    return false;
  };
  std::set<Monomial, MonoGreater> seen;
  std::queue<Monomial> work;
  Monomial one = Monomial::one(n);
  if (!in_ideal(one)) {
    seen.insert(one);
    work.push(one);
  }
  while (!work.empty()) {
    Monomial m = work.front();
    work.pop();
    for (size_t v = 1; v <= n; ++v) {
      Monomial c = product(m, Monomial::var(n, v));
      if (!seen.count(c) && !in_ideal(c)) {
        seen.insert(c);
        work.push(c);
      }
    }
  }
  return MonomialSet(seen.begin(), seen.end());
}

// ------------------------------------------------------------- selection

std::vector<CriticalPair> select(const std::vector<CriticalPair>& P) {
  if (P.empty()) throw EmptyPairSet();
  uint32_t d = P.front().degree;
  for (auto& p : P) d = std::min(d, p.degree);
  std::vector<CriticalPair> out;
  for (auto& p : P)
    if (p.degree == d) out.push_back(p);
  return out;
}

// ------------------------------------------------- symbolic preprocessing

std::pair<std::vector<Poly>, std::vector<std::pair<Monomial, Monomial>>>
symbolic_preprocessing(const std::vector<Poly>& S, const std::vector<Poly>& G,
                       const PrimeField& F) {
  std::vector<Monomial> lms = leading_monomials(G);
  std::set<Monomial, MonoGreater> todo;   // unprocessed, largest first
  std::unordered_set<Monomial, MonomialHash> done;
  for (auto& f : S)
    for (auto& tm : f.t) todo.insert(tm.m);
  std::vector<Poly> R;
  std::vector<std::pair<Monomial, Monomial>> theta;
  while (!todo.empty()) {
    Monomial m = *todo.begin();
    todo.erase(todo.begin());
    if (done.count(m)) continue;
    done.insert(m);
    for (size_t k = 0; k < G.size(); ++k) {
      if (divides(lms[k], m)) {
        Monomial m1 = quotient(m, lms[k]);
        Poly red = mul_term(G[k], m1, 1, F);
        theta.emplace_back(m1, lms[k]);
        for (auto& tm : red.t)
          if (!done.count(tm.m)) todo.insert(tm.m);
        R.push_back(std::move(red));
        break;  // one reductor per monomial
      }
    }
  }
  std::sort(R.begin(), R.end(),
            [](const Poly& a, const Poly& b) { return cmp(a.lm(), b.lm()) > 0; });
  return {std::move(R), std::move(theta)};
}

// ------------------------------------------------------------- the driver

namespace {

enum class Mode { plain, build, replay };

struct PairRec {
  size_t a, b;  // generator ids (positions in the growing basis)
  Monomial t;
  uint32_t degree;
};

struct Driver {
  const PrimeField& F;
  Mode mode;
  const Trace* trace = nullptr;
  Trace built;
  GBResult res;
  std::vector<Poly> G;
  std::vector<PairRec> P;

  explicit Driver(const PrimeField& f, Mode m) : F(f), mode(m) {}

  void add_pairs_for(size_t id) {
    for (size_t k = 0; k < id; ++k) {
      Monomial t = lcm(G[k].lm(), G[id].lm());
      P.push_back({k, id, t, t.deg});
    }
  }

  void init(const std::vector<Poly>& input) {
    std::vector<Poly> nz;
    for (auto& f : input)
      if (!f.is_zero()) nz.push_back(f);
    if (nz.empty()) return;
    MacaulayMatrix M = build_macaulay(nz, F);
    echelon(M, false);
    for (size_t r = 0; r < M.nrows(); ++r) {
      Poly f = M.row_poly(r);
      if (f.is_zero()) continue;
      G.push_back(make_monic(f, F));
      add_pairs_for(G.size() - 1);
    }
  }

  // one F4 round; returns false when (in replay) the trace is violated
  bool round(size_t iota) {
    RoundStats st;
    uint64_t ops0 = F.ops();
    uint32_t d = P.front().degree;
    for (auto& p : P) d = std::min(d, p.degree);
    st.degree = d;
    std::vector<PairRec> sel;
    std::erase_if(P, [&](const PairRec& p) {
      if (p.degree != d) return false;
      sel.push_back(p);
      return true;
    });
    st.selected = sel.size();

    // Gebauer-Moller filtering happens in the ap-ordered index space
    std::vector<size_t> perm = ap_order(G);  // rank -> id
    std::vector<size_t> rank(G.size());
    for (size_t r = 0; r < perm.size(); ++r) rank[perm[r]] = r;
    std::vector<Poly> Gap;
    Gap.reserve(G.size());
    for (size_t r = 0; r < perm.size(); ++r) Gap.push_back(G[perm[r]]);
    std::vector<Monomial> lms_ap = leading_monomials(Gap);

    std::vector<SyzygyId> ids;
    for (auto& p : sel) {
      size_t i = std::min(rank[p.a], rank[p.b]);
      size_t j = std::max(rank[p.a], rank[p.b]);
      ids.push_back({i, j});
    }
    std::vector<SyzygyId> surv = gm_filter(ids, lms_ap);

    std::vector<CriticalPair> pairs;
    for (auto& s : surv) pairs.push_back(make_pair(Gap, s.i, s.j));
    std::sort(pairs.begin(), pairs.end(), canonical_pair_less);

    const Trace::Round* tr = nullptr;
    if (mode == Mode::replay) {
      tr = &trace->rounds[iota - 1];
      if (tr->degree != d) return false;
      std::vector<CriticalPair> kept;
      for (size_t pos : tr->sigma) {
        if (pos < 1 || pos > pairs.size()) return false;
        kept.push_back(pairs[pos - 1]);
      }
      pairs = std::move(kept);
    }
    st.after_gm = pairs.size();
    for (auto& p : pairs) st.type1.push_back(is_type1(p, Gap));

    std::vector<Poly> S;
    for (auto& p : pairs) S.push_back(spoly(Gap, p, F));

    std::vector<Poly> R;
    std::vector<std::pair<Monomial, Monomial>> theta;
    if (mode == Mode::replay) {
      // ConstructReductors: drop traced reductors that cannot top-reduce
      // anything above the smallest new leading monomial of this round
      std::unordered_map<Monomial, size_t, MonomialHash> by_lm;
      for (size_t k = 0; k < G.size(); ++k) by_lm.emplace(G[k].lm(), k);
      const Monomial* gmin = nullptr;
      for (auto& m : tr->gamma)
        if (!gmin || cmp(m, *gmin) < 0) gmin = &m;
      for (auto& [m1, m2] : tr->theta) {
        if (gmin && cmp(product(m1, m2), *gmin) <= 0) continue;
        auto it = by_lm.find(m2);
        if (it == by_lm.end()) continue;
        R.push_back(mul_term(G[it->second], m1, 1, F));
        theta.emplace_back(m1, m2);
      }
      std::sort(R.begin(), R.end(),
                [](const Poly& a, const Poly& b) { return cmp(a.lm(), b.lm()) > 0; });
    } else {
      std::tie(R, theta) = symbolic_preprocessing(S, G, F);
    }
    st.reductors = R.size();
    st.reductor_desc = theta;

    // assemble the Macaulay matrices over the union support
    std::set<Monomial, MonoGreater> support;
    for (auto& f : S)
      for (auto& tm : f.t) support.insert(tm.m);
    for (auto& f : R)
      for (auto& tm : f.t) support.insert(tm.m);
    MacaulayMatrix Smat, Rmat;
    Smat.cols.assign(support.begin(), support.end());
    Smat.F = &F;
    Rmat.cols = Smat.cols;
    Rmat.F = &F;
    auto idx = column_index(Smat.cols);
    for (size_t k = 0; k < S.size(); ++k) {
      RowLabel lab;
      lab.kind = RowLabel::spair;
      lab.pair_id = int(k);
      Smat.append_poly(S[k], lab, idx);
    }
    for (size_t k = 0; k < R.size(); ++k) {
      RowLabel lab;
      lab.kind = RowLabel::reductor;
      Rmat.append_poly(R[k], lab, idx);
    }
    st.mat_rows = Smat.nrows() + Rmat.nrows();
    st.mat_cols = Smat.ncols();

    MacaulayMatrix N = Smat.nrows() ? reduction(Smat, Rmat) : Smat;

    std::vector<size_t> sigma;
    MonomialSet new_lms;
    std::vector<Poly> adopted;
    for (size_t r = 0; r < N.nrows(); ++r) {
      Poly f = N.row_poly(r);
      if (f.is_zero()) {
        ++st.zero_rows;
        continue;
      }
      sigma.push_back(r + 1);
      new_lms.push_back(f.lm());
      adopted.push_back(make_monic(f, F));
    }

    if (mode == Mode::replay) {
      if (st.zero_rows > 0) return false;
      MonomialSet want = tr->gamma, got = new_lms;
      std::sort(want.begin(), want.end(), MonoGreater{});
      std::sort(got.begin(), got.end(), MonoGreater{});
      if (want != got) return false;
    }

    std::vector<Monomial> cur = leading_monomials(G);
    MonomialSet gamma;
    for (auto& f : adopted) {
      bool dominated = false;
      for (auto& l : cur)
        if (divides(l, f.lm())) { dominated = true; break; }
      if (dominated) continue;  // cannot happen after full preprocessing
      gamma.push_back(f.lm());
      st.adopted_degrees.push_back(f.degree());
      G.push_back(f);
      cur.push_back(f.lm());
      add_pairs_for(G.size() - 1);
    }

    if (mode == Mode::build) {
      Trace::Round out;
      out.degree = d;
      out.sigma = sigma;
      out.theta = theta;
      out.gamma = gamma;
      std::sort(out.gamma.begin(), out.gamma.end(), MonoGreater{});
      built.rounds.push_back(std::move(out));
    }
    st.ops = F.ops() - ops0;
    res.rounds.push_back(std::move(st));
    return true;
  }

  void run(const std::vector<Poly>& input, const F4Options& opt) {
    uint64_t ops0 = F.ops();
    init(input);
    if (mode == Mode::build) built.gamma0 = leading_monomials(G);
    if (mode == Mode::replay) {
      size_t imax = 0;
      for (size_t k = 0; k < trace->rounds.size(); ++k)
        if (!trace->rounds[k].sigma.empty()) imax = k + 1;
      for (size_t iota = 1; iota <= imax; ++iota) {
        if (trace->rounds[iota - 1].sigma.empty()) continue;
        if (P.empty() || !round(iota)) {
          res.status = Status::trace_mismatch;
          break;
        }
      }
    } else {
      while (!P.empty()) round(res.rounds.size() + 1);
    }
    res.basis = opt.minimalize ? minimalize(G, F) : G;
    for (auto& g : res.basis) g = make_monic(g, F);
    std::sort(res.basis.begin(), res.basis.end(),
              [](const Poly& a, const Poly& b) { return cmp(a.lm(), b.lm()) > 0; });
    res.ops = F.ops() - ops0;
  }
};

}  // namespace

GBResult f4(const std::vector<Poly>& Fin, const PrimeField& Fp, F4Options opt) {
  Driver drv(Fp, Mode::plain);
  drv.run(Fin, opt);
  return std::move(drv.res);
}

std::pair<GBResult, Trace> f4_build(const std::vector<Poly>& Fin, const PrimeField& Fp,
                                    uint32_t delta_hint, F4Options opt) {
  Driver drv(Fp, Mode::build);
  drv.run(Fin, opt);
  drv.built.p = Fp.p();
  drv.built.n = Fin.empty() ? 0 : Fin.front().nvars();
  uint32_t delta = delta_hint;
  if (delta == 0)
    for (auto& f : Fin)
      if (!f.is_zero()) delta = std::max(delta, f.degree());
  drv.built.delta = delta;
  return {std::move(drv.res), std::move(drv.built)};
}

GBResult f4_trace(const std::vector<Poly>& F2, const Trace& T, const PrimeField& Fp,
                  F4Options opt) {
  if (Fp.p() != T.p) throw HeaderMismatch("trace was recorded modulo a different prime");
  for (auto& f : F2)
    if (!f.is_zero() && f.nvars() != T.n)
      throw HeaderMismatch("trace was recorded for a different variable count");
  Driver drv(Fp, Mode::replay);
  drv.trace = &T;
  drv.run(F2, opt);
  return std::move(drv.res);
}

// ------------------------------------------------------------ generation

std::vector<Poly> gen_random_system(size_t n, uint32_t delta, const PrimeField& F,
                                    Shape shape, uint64_t seed) {
  if (n < 2 || delta < 2) throw std::invalid_argument("need n >= 2 and delta >= 2");
  std::seed_seq sq{seed, uint64_t(n), uint64_t(delta), uint64_t(F.p()),
                   uint64_t(shape == Shape::homogeneous ? 1 : 2)};
  std::mt19937_64 rng(sq);
  const uint64_t p = F.p();
  auto draw = [&]() -> uint32_t {
    // rejection sampling keeps the coefficient distribution exactly uniform
    uint64_t lim = std::numeric_limits<uint64_t>::max() / p * p;
    uint64_t r;
    do { r = rng(); } while (r >= lim);
    return uint32_t(r % p);
  };
  MonomialSet monos = enumerate_monomials(
      delta, n, n, shape == Shape::homogeneous ? EnumKind::exact : EnumKind::upto);
  std::vector<Poly> out;
  for (size_t k = 0; k < n; ++k) {
    std::vector<Term> terms;
    for (auto& m : monos) terms.push_back({m, draw()});
    out.push_back(make_poly(std::move(terms), F));
  }
  return out;
}

// --------------------------------------------------------------- oracles

namespace {

GBResult buchberger(const std::vector<Poly>& Fin, const PrimeField& F) {
  GBResult res;
  std::vector<Poly> G;
  for (auto& f : Fin)
    if (!f.is_zero()) G.push_back(make_monic(f, F));
  std::vector<std::pair<size_t, size_t>> queue;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) queue.emplace_back(i, j);
  while (!queue.empty()) {
    // normal strategy: smallest lcm first
    size_t best = 0;
    Monomial bl = lcm(G[queue[0].first].lm(), G[queue[0].second].lm());
    for (size_t k = 1; k < queue.size(); ++k) {
      Monomial l = lcm(G[queue[k].first].lm(), G[queue[k].second].lm());
      if (cmp(l, bl) < 0) { best = k; bl = l; }
    }
    auto [i, j] = queue[best];
    queue.erase(queue.begin() + best);
    if (bl == product(G[i].lm(), G[j].lm())) continue;  // coprime criterion
    CriticalPair p = make_pair(G, i, j);
    Poly r = normal_form_poly(spoly(G, p, F), G, F);
    if (!r.is_zero()) {
      G.push_back(make_monic(r, F));
      for (size_t k = 0; k + 1 < G.size(); ++k) queue.emplace_back(k, G.size() - 1);
    }
  }
  res.basis = minimalize(G, F);
  return res;
}

GBResult lazard(const std::vector<Poly>& Fin, const PrimeField& F, uint32_t bound) {
  std::vector<Poly> nz;
  for (auto& f : Fin)
    if (!f.is_zero()) nz.push_back(f);
  if (nz.empty()) return {};
  size_t n = nz.front().nvars();
  uint32_t delta = 0;
  for (auto& f : nz) delta = std::max(delta, f.degree());
  uint32_t D = bound ? bound : uint32_t(n) * (delta - 1) + 1;

  // rows m*f_i ordered by m grevlex-descending, then i descending
  std::vector<Poly> rows;
  for (auto& f : nz) {
    if (f.degree() > D)
      throw DegreeBoundTooSmall("degree bound " + std::to_string(D) +
                                " below an input degree " + std::to_string(f.degree()));
    MonomialSet ms = enumerate_monomials(D - f.degree(), n, n, EnumKind::upto);
    for (auto& m : ms) rows.push_back(mul_term(f, m, 1, F));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Poly& a, const Poly& b) { return cmp(a.lm(), b.lm()) > 0; });
  MacaulayMatrix M = build_macaulay(rows, F);
  echelon(M, false);
  std::vector<Poly> G;
  for (size_t r = 0; r < M.nrows(); ++r) {
    Poly f = M.row_poly(r);
    if (!f.is_zero()) G.push_back(make_monic(f, F));
  }
  GBResult res;
  res.basis = minimalize(G, F);
  // Buchberger's S-polynomial test certifies the degree bound was enough
  for (size_t i = 0; i < res.basis.size(); ++i)
    for (size_t j = i + 1; j < res.basis.size(); ++j) {
      CriticalPair p = make_pair(res.basis, i, j);
      if (!normal_form_poly(spoly(res.basis, p, F), res.basis, F).is_zero())
        throw DegreeBoundTooSmall("S-polynomial test failed at degree bound " +
                                  std::to_string(D));
    }
  return res;
}

}  // namespace

GBResult oracle_gb(const std::vector<Poly>& Fin, const PrimeField& Fp, OracleMethod method,
                   uint32_t degree_bound) {
  return method == OracleMethod::buchberger ? buchberger(Fin, Fp)
                                            : lazard(Fin, Fp, degree_bound);
}

// --------------------------------------------------------------- trace IO

std::string trace_to_text(const Trace& T) {
  std::ostringstream os;
  os << "F4TRACE v1 n=" << T.n << " p=" << T.p << " delta=" << T.delta
     << " ord=grevlex\n";
  os << "GAMMA0:";
  for (size_t k = 0; k < T.gamma0.size(); ++k)
    os << (k ? ";" : " ") << to_text(T.gamma0[k]);
  os << "\n";
  for (size_t r = 0; r < T.rounds.size(); ++r) {
    const auto& rd = T.rounds[r];
    os << "ROUND " << (r + 1) << " deg=" << rd.degree << "\n";
    os << "SIGMA:";
    for (size_t k = 0; k < rd.sigma.size(); ++k) os << (k ? "," : " ") << rd.sigma[k];
    os << "\n";
    os << "THETA:";
    for (size_t k = 0; k < rd.theta.size(); ++k)
      os << (k ? ";" : " ") << to_text(rd.theta[k].first) << "|"
         << to_text(rd.theta[k].second);
    os << "\n";
    os << "GAMMA:";
    for (size_t k = 0; k < rd.gamma.size(); ++k) os << (k ? ";" : " ") << to_text(rd.gamma[k]);
    os << "\n";
  }
  return os.str();
}

namespace {

std::string expect_prefix(const std::string& line, const std::string& prefix, size_t lineno) {
  if (line.rfind(prefix, 0) != 0)
    throw ParseError("trace line " + std::to_string(lineno) + ": expected \"" + prefix + "\"");
  std::string rest = line.substr(prefix.size());
  size_t a = rest.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = rest.find_last_not_of(" \t\r");
  return rest.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

Trace trace_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  auto next_line = [&](bool required) {
    while (std::getline(is, line)) {
      ++lineno;
      size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;
      size_t b = line.find_last_not_of(" \t\r");
      line = line.substr(a, b - a + 1);
      return true;
    }
    if (required) throw ParseError("trace line " + std::to_string(lineno + 1) + ": unexpected end of file");
    return false;
  };

  Trace T;
  next_line(true);
  {
    unsigned long n = 0, p = 0, d = 0;
    char ordbuf[32] = {0};
    if (sscanf(line.c_str(), "F4TRACE v1 n=%lu p=%lu delta=%lu ord=%31s", &n, &p, &d, ordbuf) != 4)
      throw ParseError("trace line 1: bad or unsupported header (want \"F4TRACE v1 ...\")");
    if (std::string(ordbuf) != "grevlex")
      throw ParseError("trace line 1: unsupported ordering tag");
    T.n = n;
    T.p = uint32_t(p);
    T.delta = uint32_t(d);
  }
  next_line(true);
  for (auto& ms : split(expect_prefix(line, "GAMMA0:", lineno), ';'))
    T.gamma0.push_back(monomial_from_text(ms));
  while (next_line(false)) {
    Trace::Round rd;
    unsigned long idx = 0, deg = 0;
    if (sscanf(line.c_str(), "ROUND %lu deg=%lu", &idx, &deg) != 2)
      throw ParseError("trace line " + std::to_string(lineno) + ": expected \"ROUND <i> deg=<d>\"");
    rd.degree = uint32_t(deg);
    next_line(true);
    for (auto& tok : split(expect_prefix(line, "SIGMA:", lineno), ','))
      rd.sigma.push_back(std::stoul(tok));
    next_line(true);
    for (auto& tok : split(expect_prefix(line, "THETA:", lineno), ';')) {
      auto bar = tok.find('|');
      if (bar == std::string::npos)
        throw ParseError("trace line " + std::to_string(lineno) + ": malformed reductor descriptor");
      rd.theta.emplace_back(monomial_from_text(tok.substr(0, bar)),
                            monomial_from_text(tok.substr(bar + 1)));
    }
    next_line(true);
    for (auto& ms : split(expect_prefix(line, "GAMMA:", lineno), ';'))
      rd.gamma.push_back(monomial_from_text(ms));
    T.rounds.push_back(std::move(rd));
  }
  return T;
}

}  // namespace gb
