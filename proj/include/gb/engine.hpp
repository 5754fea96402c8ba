#pragma once

// The F4 driver and its two trace-aware variants: f4_build records a
// Groebner trace (new leading monomials, surviving S-row positions and
// reductor descriptors per round) while f4_trace replays such a trace on
// another input system, building full-rank matrices only and failing with
// trace_mismatch when the staircases disagree.
//
// Also: symbolic preprocessing, trace (de)serialization, dense random
// instance generation, and the Buchberger / Lazard reference engines.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gb/linalg.hpp"
#include "gb/pairs.hpp"
#include "gb/poly.hpp"

namespace gb {

struct EmptyPairSet : std::invalid_argument {
  EmptyPairSet() : std::invalid_argument("selection from an empty pair set") {}
};
struct HeaderMismatch : std::invalid_argument {
  explicit HeaderMismatch(const std::string& w) : std::invalid_argument(w) {}
};
struct DegreeBoundTooSmall : std::runtime_error {
  explicit DegreeBoundTooSmall(const std::string& w) : std::runtime_error(w) {}
};

struct Trace {
  size_t n = 0;
  uint32_t p = 0;
  uint32_t delta = 0;
  MonomialSet gamma0;
  struct Round {
    uint32_t degree = 0;
    std::vector<size_t> sigma;  // 1-based positions in the canonical pair order
    std::vector<std::pair<Monomial, Monomial>> theta;  // (m1, lm(g))
    MonomialSet gamma;
  };
  std::vector<Round> rounds;
};

std::string trace_to_text(const Trace& T);
Trace trace_from_text(const std::string& text);  // throws ParseError

enum class Status { ok, trace_mismatch };

struct RoundStats {
  uint32_t degree = 0;
  size_t selected = 0;       // pairs of minimal degree
  size_t after_gm = 0;       // after the Gebauer-Moller filter (and, in
                             // replay, after dropping traced-useless pairs)
  size_t reductors = 0;
  size_t mat_rows = 0, mat_cols = 0;
  size_t zero_rows = 0;      // S-rows that reduced to zero
  uint64_t ops = 0;          // field operations spent in this round
  std::vector<bool> type1;   // per pair fed to the matrix
  std::vector<std::pair<Monomial, Monomial>> reductor_desc;  // (m1, lm(g))
  std::vector<uint32_t> adopted_degrees;
};

struct GBResult {
  std::vector<Poly> basis;  // monic, lm-descending
  std::vector<RoundStats> rounds;
  Status status = Status::ok;
  uint64_t ops = 0;  // total field operations, initial echelon included
};

struct F4Options {
  bool minimalize = true;
};

// all pairs of minimal degree
std::vector<CriticalPair> select(const std::vector<CriticalPair>& P);

// Worklist closure: for every monomial of supp(S) (and of reductors added
// along the way) divisible by some lm(g), emit the reductor (m/lm(g))*g.
// Output is lm-descending so its Macaulay matrix is in echelon form; the
// second component lists the (m/lm(g), lm(g)) choices in insertion order.
std::pair<std::vector<Poly>, std::vector<std::pair<Monomial, Monomial>>>
symbolic_preprocessing(const std::vector<Poly>& S, const std::vector<Poly>& G,
                       const PrimeField& F);

GBResult f4(const std::vector<Poly>& F, const PrimeField& Fp, F4Options opt = {});
std::pair<GBResult, Trace> f4_build(const std::vector<Poly>& F, const PrimeField& Fp,
                                    uint32_t delta_hint = 0, F4Options opt = {});
GBResult f4_trace(const std::vector<Poly>& F2, const Trace& T, const PrimeField& Fp,
                  F4Options opt = {});

enum class Shape { homogeneous, affine };
std::vector<Poly> gen_random_system(size_t n, uint32_t delta, const PrimeField& F,
                                    Shape shape, uint64_t seed);

enum class OracleMethod { buchberger, lazard };
GBResult oracle_gb(const std::vector<Poly>& F, const PrimeField& Fp, OracleMethod method,
                   uint32_t degree_bound = 0);

// ---- shared polynomial-level helpers ----

// full multivariate division remainder of f by G
Poly normal_form_poly(const Poly& f, const std::vector<Poly>& G, const PrimeField& F);

// minimal basis: drop elements whose lm is divisible by another's
std::vector<Poly> minimalize(std::vector<Poly> G, const PrimeField& F);

// reduced Groebner basis: minimal + tail-reduced + monic, lm-descending
std::vector<Poly> interreduce(std::vector<Poly> G, const PrimeField& F);

std::vector<Monomial> leading_monomials(const std::vector<Poly>& G);

// monomials outside <lms>; nullopt when the ideal is not zero-dimensional
std::optional<MonomialSet> staircase(const std::vector<Monomial>& lms, size_t n);

}  // namespace gb
