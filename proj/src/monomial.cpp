#include "gb/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace gb {

namespace {

void gen_exact(uint32_t d, size_t i, size_t n, std::vector<uint16_t>& cur,
               size_t pos, MonomialSet& out) {
  if (pos + 1 == i) {
    cur[pos] = uint16_t(d);
    out.emplace_back(cur);
    cur[pos] = 0;
    return;
  }
  for (uint32_t a = 0; a <= d; ++a) {
    cur[pos] = uint16_t(a);
    gen_exact(d - a, i, n, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

MonomialSet enumerate_monomials(uint32_t d, size_t i, size_t n, EnumKind kind) {
  if (i < 1 || i > n) throw std::invalid_argument("variable count out of range");
  MonomialSet out;
  std::vector<uint16_t> cur(n, 0);
  switch (kind) {
    case EnumKind::exact:
      gen_exact(d, i, n, cur, 0, out);
      break;
    case EnumKind::upto:
      for (uint32_t e = 0; e <= d; ++e) gen_exact(e, i, n, cur, 0, out);
      break;
    case EnumKind::band:
      // members of M_{d,i} actually involving x_i; for d = 0 the band is
      // empty since 1 lies in M_{0,i-1} as well (ind(1) = 0)
      gen_exact(d, i, n, cur, 0, out);
      std::erase_if(out, [i](const Monomial& m) { return ind(m) != i; });
      break;
  }
  std::sort(out.begin(), out.end(), MonoGreater{});
  return out;
}

std::string to_text(const Monomial& m) {
  std::ostringstream os;
  for (size_t k = 0; k < m.nvars(); ++k) {
    if (k) os << ',';
    os << m.e[k];
  }
  return os.str();
}

Monomial monomial_from_text(const std::string& s) {
  std::vector<uint16_t> ex;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (v < 0 || v > 0xFFFF) throw std::invalid_argument("exponent out of range: " + item);
    ex.push_back(uint16_t(v));
  }
  if (ex.empty()) throw std::invalid_argument("empty monomial text");
  return Monomial(std::move(ex));
}

}  // namespace gb
