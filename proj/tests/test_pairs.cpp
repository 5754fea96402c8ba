#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gb/engine.hpp"
#include "gb/pairs.hpp"

using namespace gb;

namespace {

const PrimeField F(65521);

Poly P(const std::string& s, size_t n = 2) { return poly_from_text(s, n, F); }

std::vector<Poly> ordered(std::vector<Poly> G) {
  auto perm = ap_order(G);
  std::vector<Poly> out;
  for (size_t k : perm) out.push_back(G[k]);
  return out;
}

std::set<std::string> lm_set(const std::vector<Poly>& G) {
  std::set<std::string> s;
  for (auto& g : G) s.insert(to_text(g.lm()));
  return s;
}

}  // namespace

TEST_CASE("ap_order sorts by degree, then grlex-descending") {
  std::vector<Poly> G = {P("x2^3"), P("x1^2"), P("x1*x2")};
  auto o = ordered(G);
  CHECK(o[0].lm() == Monomial({2, 0}));
  CHECK(o[1].lm() == Monomial({1, 1}));
  CHECK(o[2].lm() == Monomial({0, 3}));

  auto single = ap_order({P("x1")});
  CHECK(single == std::vector<size_t>{0});

  auto tie = ordered({P("x2^2"), P("x1*x2")});
  CHECK(tie[0].lm() == Monomial({1, 1}));
  CHECK(tie[1].lm() == Monomial({0, 2}));

  CHECK_THROWS_AS(ap_order({P("x1^2"), P("x1^2 + x2")}), DuplicateLeadingMonomial);
}

TEST_CASE("make_pair and spoly on a hand example") {
  std::vector<Poly> G = {P("x1^2 + x2^2"), P("x1*x2 + x2^2")};
  auto pr = make_pair(G, 0, 1);
  CHECK(pr.t == Monomial({2, 1}));
  CHECK(pr.ti == Monomial({0, 1}));
  CHECK(pr.tj == Monomial({1, 0}));
  CHECK(pr.degree == 3);
  Poly S = spoly(G, pr, F);
  CHECK(S == P("x2^3 - x1*x2^2"));
  CHECK(cmp(S.lm(), pr.t) < 0);

  // identical generators: the S-polynomial vanishes
  std::vector<Poly> H = {P("x1^2 + x2^2"), P("x1^2 + x2^2")};
  CHECK(spoly(H, make_pair(H, 0, 1), F).is_zero());

  // coprime leading monomials
  std::vector<Poly> C = {P("x1^2"), P("x2^2")};
  auto cp = make_pair(C, 0, 1);
  CHECK(cp.t == Monomial({2, 2}));
  CHECK(cp.degree == 4);
}

TEST_CASE("syz_compare follows the lcm order with (j, i) tie-break") {
  // lms x1^2, x1*x2, x2^2 in 2 vars is enough to exercise both branches
  std::vector<Monomial> lms = {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})};
  // T_{1,2} = x1^2 x2 (deg 3), T_{1,3} = x1^2 x2^2 (deg 4)
  CHECK(syz_compare({0, 1}, {0, 2}, lms) < 0);
  CHECK(syz_compare({0, 2}, {0, 1}, lms) > 0);
  CHECK(syz_compare({0, 1}, {0, 1}, lms) == 0);

  // equal lcms: x1^2 x2^2 for both S_{1,3} and one with identical lcm
  std::vector<Monomial> lms2 = {Monomial({2, 0}), Monomial({2, 2}), Monomial({0, 2})};
  // T_{1,3} = T_{2,3} = x1^2 x2^2; j equal, smaller i first
  CHECK(syz_compare({0, 2}, {1, 2}, lms2) < 0);
}

TEST_CASE("gm_filter drops the dominated coprime-style pair") {
  std::vector<Monomial> lms = {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})};
  std::vector<SyzygyId> all = {{0, 1}, {0, 2}, {1, 2}};
  auto surv = gm_filter(all, lms);
  REQUIRE(surv.size() == 2);
  auto has = [&](size_t i, size_t j) {
    return std::find(surv.begin(), surv.end(), SyzygyId{i, j}) != surv.end();
  };
  CHECK(has(0, 1));
  CHECK(has(1, 2));
  CHECK(!has(0, 2));

  // a lone pair always survives
  std::vector<Monomial> two = {Monomial({2, 0}), Monomial({0, 2})};
  CHECK(gm_filter({{0, 1}}, two).size() == 1);
}

TEST_CASE("gm_filter is sound: a naive no-filter Buchberger agrees with f4") {
  for (uint64_t seed : {1, 2, 3}) {
    auto Fs = gen_random_system(3, 2, F, Shape::homogeneous, seed);
    auto gb = f4(Fs, F);

    // naive completion: every pair, no elimination criteria at all
    std::vector<Poly> G = Fs;
    std::vector<std::pair<size_t, size_t>> todo;
    for (size_t i = 0; i < G.size(); ++i)
      for (size_t j = i + 1; j < G.size(); ++j) todo.push_back({i, j});
    while (!todo.empty()) {
      auto [i, j] = todo.back();
      todo.pop_back();
      auto pr = make_pair(G, i, j);
      Poly r = normal_form_poly(spoly(G, pr, F), G, F);
      if (r.is_zero()) continue;
      for (size_t k = 0; k < G.size(); ++k) todo.push_back({k, G.size()});
      G.push_back(r);
    }
    CHECK(lm_set(minimalize(G, F)) == lm_set(gb.basis));
  }
}

TEST_CASE("is_type1 on hand-built pairs") {
  // lms x1^2 and x1*x2: tj = x1, ind(g_j) = ind(x1*x2) = 2
  std::vector<Poly> G = ordered({P("x1^2"), P("x1*x2")});
  auto good = make_pair(G, 0, 1);
  CHECK(good.tj == Monomial({1, 0}));
  CHECK(is_type1(good, G));

  // coprime lms x1^2, x2^2: tj = x1^2, not a single variable
  std::vector<Poly> C = ordered({P("x1^2"), P("x2^2")});
  CHECK(!is_type1(make_pair(C, 0, 1), C));

  // single variable but not below ind(g_j): tj = x2 against lm(g_j) = x1*x2
  std::vector<Poly> two = {P("x1^2"), P("x1*x2")};
  CriticalPair fake = make_pair(two, 0, 1);
  fake.tj = Monomial({0, 1});
  CHECK(!is_type1(fake, two));
}

TEST_CASE("canonical pair order is lcm-descending then lexicographic ids") {
  std::vector<Poly> G = ordered({P("x1^2"), P("x1*x2"), P("x2^2")});
  auto p01 = make_pair(G, 0, 1);  // lcm x1^2 x2
  auto p12 = make_pair(G, 1, 2);  // lcm x1 x2^2
  auto p02 = make_pair(G, 0, 2);  // lcm x1^2 x2^2
  CHECK(canonical_pair_less(p02, p01));
  CHECK(canonical_pair_less(p01, p12));
  CHECK(!canonical_pair_less(p12, p01));
  CHECK(!canonical_pair_less(p01, p01));
}
