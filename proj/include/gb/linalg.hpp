#pragma once

// Macaulay matrices over Z/p and the linear algebra the engine relies on:
// row echelon / reduced echelon forms, the Schur-complement normal form
// NF(S|R) computed by back-substitution against the triangular pivot block,
// row selection by pivot position, and the blocked reduction sweep that
// echelonizes [R; S] one column group at a time.
//
// Pivots are always the leftmost nonzero entries; columns are never
// permuted, and pivot rows are scaled monic. The in-place eliminations are
// row-stable: a row keeps its index for its whole lifetime, which is what
// ties matrix rows to critical pairs during trace recording and replay.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gb/field.hpp"
#include "gb/monomial.hpp"
#include "gb/poly.hpp"

namespace gb {

struct MalformedReducer : std::invalid_argument {
  explicit MalformedReducer(const std::string& what) : std::invalid_argument(what) {}
};

struct RowLabel {
  enum Kind { spair, reductor, plain } kind = plain;
  int pair_id = -1;    // spair
  Monomial m;          // reductor: the cofactor m1
  int gen_id = -1;     // reductor: index of g in the basis
};

struct MacaulayMatrix {
  MonomialSet cols;  // grevlex-descending
  std::vector<std::vector<uint32_t>> rows;
  std::vector<RowLabel> labels;
  const PrimeField* F = nullptr;

  size_t ncols() const { return cols.size(); }
  size_t nrows() const { return rows.size(); }

  // leftmost nonzero column of a row, or nullopt for a zero row
  std::optional<size_t> pivot_of(size_t r) const {
    for (size_t j = 0; j < cols.size(); ++j)
      if (rows[r][j] != 0) return j;
    return std::nullopt;
  }

  Poly row_poly(size_t r) const {
    Poly f;
    for (size_t j = 0; j < cols.size(); ++j)
      if (rows[r][j] != 0) f.t.push_back({cols[j], rows[r][j]});
    return f;
  }

  void append_poly(const Poly& f, RowLabel label,
                   const std::unordered_map<Monomial, size_t, MonomialHash>& colpos);

  std::string dump() const;  // one row per line, "label : c@monomial ..."
};

// columns = union of supports, descending
MacaulayMatrix build_macaulay(const std::vector<Poly>& polys, const PrimeField& F);

std::unordered_map<Monomial, size_t, MonomialHash> column_index(const MonomialSet& cols);

struct EchelonReport {
  std::vector<std::pair<size_t, Monomial>> pivots;  // (row, column monomial)
  size_t rank = 0;
  uint64_t ops = 0;
};

// Row echelon form (reduced on request): rows sorted by pivot column, zero
// rows at the bottom, pivots monic. Acts in place and reports pivots.
EchelonReport echelon(MacaulayMatrix& M, bool reduced = false);

// Same elimination but rows never move; pivot list is in discovery order.
// Used inside the blocked reduction where row positions carry meaning.
EchelonReport echelon_stable(MacaulayMatrix& M, std::vector<size_t> row_subset);

// NF(S|R): unique N with S = Q R + N and N zero on R's pivot columns.
// R must be in row echelon form with no zero rows.
std::pair<MacaulayMatrix, uint64_t> normal_form(const MacaulayMatrix& S,
                                                const MacaulayMatrix& R);

// rows of M whose pivot monomial belongs to T1
MacaulayMatrix select_rows(const MacaulayMatrix& M, const MonomialSet& T1);

// The blocked reduction: returns S' such that [R; S'] is a row echelon form
// of [R; S] up to row permutation. S' keeps S's row count and row order
// (zero rows stay in place).
MacaulayMatrix reduction(const MacaulayMatrix& S, const MacaulayMatrix& R);

}  // namespace gb
