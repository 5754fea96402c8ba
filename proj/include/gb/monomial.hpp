#pragma once

// Exponent-vector monomials with the grevlex and grlex orderings
// (convention x1 > x2 > ... > xn), divisibility/lcm/quotient/product,
// the projections pi_i, the variable index ind, and enumeration of the
// monomial sets M_{d,i}, M_{<=d,i} and the column groups
// M_{d,i} \ M_{d,i-1} used by the blocked reduction.

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gb {

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("ambient variable counts differ") {}
};
struct NotDivisible : std::invalid_argument {
  NotDivisible() : std::invalid_argument("monomial quotient is not integral") {}
};

struct Monomial {
  std::vector<uint16_t> e;
  uint32_t deg = 0;

  Monomial() = default;
  explicit Monomial(std::vector<uint16_t> exps) : e(std::move(exps)) {
    deg = std::accumulate(e.begin(), e.end(), 0u);
  }
  static Monomial one(size_t n) { return Monomial(std::vector<uint16_t>(n, 0)); }
  // variable index v is 1-based: x_v
  static Monomial var(size_t n, size_t v, uint16_t a = 1) {
    std::vector<uint16_t> ex(n, 0);
    ex.at(v - 1) = a;
    return Monomial(std::move(ex));
  }

  size_t nvars() const { return e.size(); }
  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

enum class Ord { grevlex, grlex };

// returns <0, 0, >0 for a < b, a == b, a > b
inline int cmp(const Monomial& a, const Monomial& b, Ord ord = Ord::grevlex) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch();
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  if (ord == Ord::grevlex) {
    for (size_t k = a.nvars(); k-- > 0;) {
      if (a.e[k] != b.e[k]) return a.e[k] > b.e[k] ? -1 : 1;
    }
    return 0;
  }
  for (size_t k = 0; k < a.nvars(); ++k) {
    if (a.e[k] != b.e[k]) return a.e[k] > b.e[k] ? 1 : -1;
  }
  return 0;
}

struct MonoLess {  // ascending
  Ord ord = Ord::grevlex;
  bool operator()(const Monomial& a, const Monomial& b) const { return cmp(a, b, ord) < 0; }
};
struct MonoGreater {  // descending, the canonical column order
  Ord ord = Ord::grevlex;
  bool operator()(const Monomial& a, const Monomial& b) const { return cmp(a, b, ord) > 0; }
};

inline bool divides(const Monomial& d, const Monomial& m) {
  if (d.nvars() != m.nvars()) throw DimensionMismatch();
  for (size_t k = 0; k < d.nvars(); ++k)
    if (d.e[k] > m.e[k]) return false;
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch();
  std::vector<uint16_t> ex(a.nvars());
  for (size_t k = 0; k < ex.size(); ++k) ex[k] = std::max(a.e[k], b.e[k]);
  return Monomial(std::move(ex));
}

inline Monomial quotient(const Monomial& m, const Monomial& d) {
  if (!divides(d, m)) throw NotDivisible();
  std::vector<uint16_t> ex(m.nvars());
  for (size_t k = 0; k < ex.size(); ++k) ex[k] = uint16_t(m.e[k] - d.e[k]);
  return Monomial(std::move(ex));
}

inline Monomial product(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch();
  std::vector<uint16_t> ex(a.nvars());
  for (size_t k = 0; k < ex.size(); ++k) ex[k] = uint16_t(a.e[k] + b.e[k]);
  return Monomial(std::move(ex));
}

// pi_i: keep exponents of x1..xi, zero the rest
inline Monomial project(const Monomial& m, size_t i) {
  std::vector<uint16_t> ex(m.e.begin(), m.e.end());
  for (size_t k = i; k < ex.size(); ++k) ex[k] = 0;
  return Monomial(std::move(ex));
}

// largest k with e_k > 0; ind(1) = 0 by convention
inline size_t ind(const Monomial& m) {
  for (size_t k = m.nvars(); k-- > 0;)
    if (m.e[k] > 0) return k + 1;
  return 0;
}

// Sorted-descending list of distinct monomials.
using MonomialSet = std::vector<Monomial>;

enum class EnumKind { exact, upto, band };

// M_{d,i} (exact), M_{<=d,i} (upto) or M_{d,i} \ M_{d,i-1} (band),
// in the ambient ring of n variables, grevlex-descending.
MonomialSet enumerate_monomials(uint32_t d, size_t i, size_t n, EnumKind kind);

std::string to_text(const Monomial& m);                  // "a1,a2,...,an"
Monomial monomial_from_text(const std::string& s);

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t v : m.e) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace gb
