#pragma once

// Structural property checks run against concrete random instances. Each
// check reports pass/fail with a concrete witness on failure, as one
// JSON-lines record. Genericity-dependent properties report failures as
// genericity-violation candidates (with the seed) rather than theorem
// refutations.

#include <optional>
#include <string>
#include <vector>

#include "gb/engine.hpp"

namespace gb {

enum class Property {
  bezout,            // quotient dimension = delta^n
  hilbert_regular,   // HS of <hd F> = ((1-z^d)/(1-z))^n
  semi_regular,      // HS = [(1-z^d)^s/(1-z)^n]+
  stable,            // lm(I) closed under x_j * m / x_i for j < i
  psi_bijection,     // staircase of the first l-1 variables maps onto the
                     // index-l leading monomials via minimal x_l powers
  type1_pairs,       // every pair fed to a matrix has cofactor x_c, c < ind
  degree_monotone,   // round degrees strictly increase; adoptions match
  truncation_gb,     // reduced GB commutes with x_{j+1..n} := 0
  half_staircase,    // top half of the basis is x_n^(2d-D) * lower staircase
  lm_affine_homog,   // lm<F> = lm<hd F>
  nonempty_degrees,  // basis degrees are exactly {delta..D}
  rref_contains_gb,  // degree-e RREF rows contain the degree-e GB elements
  noether_position,  // truncated top-degree subsequences are all regular
  reductor_band,     // late-round reductors sit in a narrow x_n-degree band
};

const char* property_name(Property p);
std::optional<Property> property_from_name(const std::string& name);
std::vector<Property> all_properties();

struct Instance {
  size_t n = 2;
  uint32_t delta = 2;
  uint32_t p = 2147483647;
  uint64_t seed = 0;
  Shape shape = Shape::homogeneous;
};

struct Report {
  Property property;
  Instance inst;
  bool pass = false;
  bool precondition_failed = false;
  bool genericity_candidate = false;  // failure may just mean a non-generic draw
  std::string witness;                // empty on pass
  std::string stats;

  std::string to_json() const;
};

// generates the instance system from (n, delta, p, seed, shape); some
// properties override the shape their theorem requires
Report verify(Property prop, const Instance& inst);

// building blocks reused by tests
bool stable_check(const std::vector<Monomial>& lms, size_t n, uint32_t maxdeg,
                  std::string* witness = nullptr);

}  // namespace gb
