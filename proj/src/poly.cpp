#include "gb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <memory>
#include <sstream>

namespace gb {

bool Poly::operator==(const Poly& o) const {
  if (t.size() != o.t.size()) return false;
  for (size_t k = 0; k < t.size(); ++k)
    if (t[k].c != o.t[k].c || t[k].m != o.t[k].m) return false;
  return true;
}

Poly make_poly(std::vector<Term> terms, const PrimeField& F) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return cmp(a.m, b.m) > 0; });
  Poly out;
  for (auto& tm : terms) {
    uint32_t c = tm.c % F.p();
    if (c == 0) continue;
    if (!out.t.empty() && out.t.back().m == tm.m) {
      out.t.back().c = F.add(out.t.back().c, c);
      if (out.t.back().c == 0) out.t.pop_back();
    } else {
      out.t.push_back({tm.m, c});
    }
  }
  return out;
}

// merge f + c*m*g ; the workhorse behind add/sub/mul_term
static Poly merge_fma(const Poly& f, const Poly& g, const Monomial* m, uint32_t c,
                      const PrimeField& F) {
  Poly out;
  out.t.reserve(f.t.size() + g.t.size());
  size_t i = 0, j = 0;
  while (i < f.t.size() || j < g.t.size()) {
    Monomial gm;
    uint32_t gc = 0;
    if (j < g.t.size()) {
      gm = m ? product(*m, g.t[j].m) : g.t[j].m;
      gc = F.mul(c, g.t[j].c);
    }
    if (j == g.t.size() || (i < f.t.size() && cmp(f.t[i].m, gm) > 0)) {
      out.t.push_back(f.t[i++]);
    } else if (i == f.t.size() || cmp(f.t[i].m, gm) < 0) {
      if (gc != 0) out.t.push_back({gm, gc});
      ++j;
    } else {
      uint32_t s = F.add(f.t[i].c, gc);
      if (s != 0) out.t.push_back({f.t[i].m, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly add(const Poly& f, const Poly& g, const PrimeField& F) {
  return merge_fma(f, g, nullptr, 1, F);
}
Poly sub(const Poly& f, const Poly& g, const PrimeField& F) {
  return merge_fma(f, g, nullptr, F.p() - 1, F);
}
Poly scale(const Poly& f, uint32_t c, const PrimeField& F) {
  Poly out;
  c %= F.p();
  if (c == 0) return out;
  for (auto& tm : f.t) out.t.push_back({tm.m, F.mul(tm.c, c)});
  return out;
}
Poly mul_term(const Poly& f, const Monomial& m, uint32_t c, const PrimeField& F) {
  Poly out;
  c %= F.p();
  if (c == 0) return out;
  for (auto& tm : f.t) out.t.push_back({product(m, tm.m), F.mul(tm.c, c)});
  return out;
}
Poly make_monic(const Poly& f, const PrimeField& F) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.lc() == 1) return f;
  return scale(f, F.inv(f.lc()), F);
}

Poly hd(const Poly& f) {
  Poly out;
  if (f.is_zero()) return out;
  uint32_t d = f.degree();
  for (auto& tm : f.t)
    if (tm.m.deg == d) out.t.push_back(tm);
  return out;
}

Poly phi(const Poly& f, size_t j) {
  Poly out;
  for (auto& tm : f.t)
    if (ind(tm.m) <= j) out.t.push_back(tm);
  return out;
}

bool is_homogeneous(const Poly& f) {
  if (f.is_zero()) return true;
  uint32_t d = f.degree();
  for (auto& tm : f.t)
    if (tm.m.deg != d) return false;
  return true;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!done() && std::isspace((unsigned char)peek())) ++pos;
  }
  uint64_t number() {
    size_t start = pos;
    while (!done() && std::isdigit((unsigned char)peek())) ++pos;
    if (pos == start) throw ParseError("expected a number at position " + std::to_string(pos));
    return std::stoull(s.substr(start, pos - start));
  }
};

}  // namespace

Poly poly_from_text(const std::string& line, size_t n, const PrimeField& F) {
  Cursor cur{line};
  std::vector<Term> terms;
  bool first = true;
  cur.skip_ws();
  while (!cur.done()) {
    uint32_t sign = 1;
    cur.skip_ws();
    if (cur.peek() == '+' || cur.peek() == '-') {
      if (cur.peek() == '-') sign = F.p() - 1;
      ++cur.pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(cur.pos));
    }
    first = false;
    cur.skip_ws();
    uint64_t coef = 1;
    bool saw_factor = false;
    if (!cur.done() && std::isdigit((unsigned char)cur.peek())) {
      coef = cur.number() % F.p();
      saw_factor = true;
    }
    std::vector<uint16_t> ex(n, 0);
    for (;;) {
      cur.skip_ws();
      if (!cur.done() && cur.peek() == '*') {
        ++cur.pos;
        cur.skip_ws();
      } else if (saw_factor) {
        break;
      }
      if (cur.done() || cur.peek() != 'x')
        throw ParseError("expected a variable at position " + std::to_string(cur.pos));
      ++cur.pos;
      uint64_t vi = cur.number();
      if (vi < 1 || vi > n) throw ParseError("variable x" + std::to_string(vi) + " out of range");
      uint64_t a = 1;
      if (!cur.done() && cur.peek() == '^') {
        ++cur.pos;
        a = cur.number();
      }
      if (ex[vi - 1] + a > 0xFFFF) throw ParseError("exponent overflow");
      ex[vi - 1] = uint16_t(ex[vi - 1] + a);
      saw_factor = true;
    }
    terms.push_back({Monomial(std::move(ex)), F.mul(uint32_t(coef), sign)});
    cur.skip_ws();
  }
  return make_poly(std::move(terms), F);
}

std::string to_text(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& tm : f.t) {
    if (!first) os << "+";
    first = false;
    os << tm.c;
    for (size_t k = 0; k < tm.m.nvars(); ++k)
      if (tm.m.e[k] > 0) {
        os << "*x" << (k + 1);
        if (tm.m.e[k] > 1) os << "^" << tm.m.e[k];
      }
  }
  return os.str();
}

PolySystem system_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  PolySystem sys;
  bool have_header = false;
  size_t lineno = 0;
  std::unique_ptr<PrimeField> F;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (!have_header) {
      unsigned long p = 0, n = 0;
      if (sscanf(line.c_str(), "p=%lu n=%lu", &p, &n) != 2)
        throw ParseError("line " + std::to_string(lineno) + ": expected header \"p=<prime> n=<vars>\"");
      sys.p = uint32_t(p);
      sys.n = n;
      F = std::make_unique<PrimeField>(sys.p);
      have_header = true;
      continue;
    }
    try {
      sys.polys.push_back(poly_from_text(line, sys.n, *F));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw ParseError("missing system header");
  return sys;
}

std::string to_text(const PolySystem& sys) {
  std::ostringstream os;
  os << "p=" << sys.p << " n=" << sys.n << "\n";
  for (auto& f : sys.polys) os << to_text(f) << "\n";
  return os.str();
}

}  // namespace gb
