#pragma once

// Sparse multivariate polynomials over Z/p. Terms are kept strictly
// grevlex-descending with no zero coefficients; the empty term list is the
// zero polynomial. Also provides the top-degree homogeneous component hd(f)
// and the truncation phi(f, j) obtained by setting x_{j+1} = ... = x_n = 0.

#include <string>
#include <utility>
#include <vector>

#include "gb/field.hpp"
#include "gb/monomial.hpp"

namespace gb {

struct ZeroPolynomial : std::domain_error {
  ZeroPolynomial() : std::domain_error("operation undefined on the zero polynomial") {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct Term {
  Monomial m;
  uint32_t c = 0;
};

struct Poly {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  size_t nvars() const { return t.empty() ? 0 : t.front().m.nvars(); }

  const Monomial& lm() const {
    if (t.empty()) throw ZeroPolynomial();
    return t.front().m;
  }
  uint32_t lc() const {
    if (t.empty()) throw ZeroPolynomial();
    return t.front().c;
  }
  uint32_t degree() const {  // total degree; terms are graded-sorted
    if (t.empty()) throw ZeroPolynomial();
    return t.front().m.deg;
  }
  size_t lm_ind() const { return ind(lm()); }

  bool operator==(const Poly& o) const;
};

// terms need not be sorted or combined; builds the canonical form
Poly make_poly(std::vector<Term> terms, const PrimeField& F);

Poly add(const Poly& f, const Poly& g, const PrimeField& F);
Poly sub(const Poly& f, const Poly& g, const PrimeField& F);
Poly scale(const Poly& f, uint32_t c, const PrimeField& F);
// f * c*m
Poly mul_term(const Poly& f, const Monomial& m, uint32_t c, const PrimeField& F);
Poly make_monic(const Poly& f, const PrimeField& F);

Poly hd(const Poly& f);                               // top-degree part
Poly phi(const Poly& f, size_t j);                    // x_{j+1..n} := 0
bool is_homogeneous(const Poly& f);

// term grammar: "c*x1^a1*...*xn^an" joined by "+"/"-"; coefficient or
// exponent 1 may be omitted when reading
Poly poly_from_text(const std::string& line, size_t n, const PrimeField& F);
std::string to_text(const Poly& f);

struct PolySystem {
  uint32_t p = 0;
  size_t n = 0;
  std::vector<Poly> polys;
};

// header "p=<prime> n=<vars>", one polynomial per line, '#' comments
PolySystem system_from_text(const std::string& text);
std::string to_text(const PolySystem& sys);

}  // namespace gb
