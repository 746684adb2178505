#include "gforms/fqpoly.hpp"

#include <algorithm>

#include "gforms/errors.hpp"

namespace gforms {

int poly_deg(const FqPoly& f) { return static_cast<int>(f.size()) - 1; }

FqPoly poly_trim(FqPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

FqPoly poly_x(const FqPtr& F) { return {F->zero(), F->one()}; }

FqPoly poly_const(FqElem c) {
  if (c == 0) return {};
  return {c};
}

FqPoly poly_add(const FqPtr& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    FqElem x = i < a.size() ? a[i] : 0;
    FqElem y = i < b.size() ? b[i] : 0;
    r[i] = F->add(x, y);
  }
  return poly_trim(std::move(r));
}

FqPoly poly_sub(const FqPtr& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    FqElem x = i < a.size() ? a[i] : 0;
    FqElem y = i < b.size() ? b[i] : 0;
    r[i] = F->sub(x, y);
  }
  return poly_trim(std::move(r));
}

FqPoly poly_mul(const FqPtr& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F->add(r[i + j], F->mul(a[i], b[j]));
  }
  return poly_trim(std::move(r));
}

FqPoly poly_scale(const FqPtr& F, FqElem c, const FqPoly& a) {
  if (c == 0) return {};
  FqPoly r = a;
  for (auto& x : r) x = F->mul(c, x);
  return r;
}

std::pair<FqPoly, FqPoly> poly_divmod(const FqPtr& F, const FqPoly& a, const FqPoly& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  FqPoly rem = a, quot;
  int db = poly_deg(b);
  FqElem lead_inv = F->inv(b.back());
  if (poly_deg(rem) >= db) quot.assign(rem.size() - b.size() + 1, 0);
  while (poly_deg(rem) >= db) {
    int k = poly_deg(rem) - db;
    FqElem c = F->mul(rem.back(), lead_inv);
    quot[k] = c;
    for (int i = 0; i <= db; ++i)
      rem[k + i] = F->sub(rem[k + i], F->mul(c, b[i]));
    rem = poly_trim(std::move(rem));
  }
  return {poly_trim(std::move(quot)), rem};
}

FqPoly poly_mod(const FqPtr& F, const FqPoly& a, const FqPoly& b) {
  return poly_divmod(F, a, b).second;
}

FqPoly poly_monic(const FqPtr& F, FqPoly a) {
  if (a.empty()) return a;
  return poly_scale(F, F->inv(a.back()), a);
}

FqPoly poly_gcd(const FqPtr& F, FqPoly a, FqPoly b) {
  while (!b.empty()) {
    FqPoly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, std::move(a));
}

FqPoly poly_derivative(const FqPtr& F, const FqPoly& a) {
  if (a.size() <= 1) return {};
  FqPoly r(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = F->mul(a[i], F->from_int(static_cast<long>(i % F->p())));
  return poly_trim(std::move(r));
}

FqElem poly_eval(const FqPtr& F, const FqPoly& a, FqElem x) {
  FqElem acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = F->add(F->mul(acc, x), *it);
  return acc;
}

FqPoly poly_powmod(const FqPtr& F, FqPoly base, std::uint64_t e, const FqPoly& mod) {
  FqPoly r = {F->one()};
  base = poly_mod(F, base, mod);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

bool poly_is_irreducible(const FqPtr& F, const FqPoly& f) {
  int n = poly_deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  FqPoly fm = poly_monic(F, f);
  FqPoly x = poly_x(F);
  // x^(q^k) mod f via iterated q-power
  FqPoly t = x;
  std::vector<FqPoly> powers(n + 1);
  powers[0] = x;
  for (int k = 1; k <= n; ++k) {
    t = poly_powmod(F, t, F->q(), fm);
    powers[k] = t;
  }
  if (poly_trim(poly_sub(F, powers[n], x)) != FqPoly{}) return false;
  for (int l = 2; l <= n; ++l) {
    if (n % l != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) prime = false;
    if (!prime) continue;
    if (poly_deg(poly_gcd(F, poly_sub(F, powers[n / l], x), fm)) != 0) return false;
  }
  return true;
}

namespace {

// lexicographic-by-packed-coefficients order used to canonicalize output
bool poly_less(const FqPoly& a, const FqPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// coefficientwise p-th root: f = g(x^p) -> g
FqPoly pth_root(const FqPtr& F, const FqPoly& f) {
  long p = F->p();
  FqPoly g(f.size() / p + 1, 0);
  std::uint64_t root_exp = F->q() / static_cast<std::uint64_t>(p);  // inverse Frobenius exponent
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    if (i % static_cast<std::size_t>(p) != 0)
      throw InternalError("derivative-zero polynomial is not in x^p");
    g[i / p] = F->pow(f[i], root_exp);
  }
  return poly_trim(std::move(g));
}

// deterministic equal-degree splitting of a squarefree product of degree-d
// irreducibles
void edf(const FqPtr& F, FqPoly f, int d, std::vector<FqPoly>& out) {
  int n = poly_deg(f);
  if (n == d) {
    out.push_back(poly_monic(F, std::move(f)));
    return;
  }
  // (q^d - 1) / 2 as the splitting exponent
  std::uint64_t qd = 1;
  for (int i = 0; i < d; ++i) {
    if (qd > (1ULL << 62) / F->q()) throw BudgetError("equal-degree exponent overflows");
    qd *= F->q();
  }
  std::uint64_t e = (qd - 1) / 2;
  // scan candidate polynomials a in packed order and degree ladder
  for (int deg_a = 1; deg_a <= 2 * d; ++deg_a) {
    // iterate coefficient tuples of a = x^deg_a * top + lower, top nonzero
    std::uint64_t count = 1;
    for (int i = 0; i < deg_a; ++i) {
      if (count > 1ULL << 24) throw BudgetError("equal-degree scan budget exceeded");
      count *= F->q();
    }
    for (std::uint64_t top = 1; top < F->q(); ++top)
      for (std::uint64_t low = 0; low < count; ++low) {
        FqPoly a(deg_a + 1, 0);
        std::uint64_t v = low;
        for (int i = 0; i < deg_a; ++i) {
          a[i] = static_cast<FqElem>(v % F->q());
          v /= F->q();
        }
        a[deg_a] = static_cast<FqElem>(top);
        FqPoly b = poly_powmod(F, a, e, f);
        b = poly_sub(F, b, {F->one()});
        FqPoly g = poly_gcd(F, b, f);
        if (poly_deg(g) > 0 && poly_deg(g) < n) {
          edf(F, g, d, out);
          edf(F, poly_divmod(F, f, g).first, d, out);
          return;
        }
      }
  }
  throw InternalError("equal-degree splitting scan exhausted without a separator");
}

// all distinct monic irreducible factors of f (any multiplicities)
void distinct_factors(const FqPtr& F, FqPoly f, std::vector<FqPoly>& out) {
  f = poly_monic(F, poly_trim(std::move(f)));
  if (poly_deg(f) <= 0) return;
  FqPoly der = poly_derivative(F, f);
  if (der.empty()) {
    distinct_factors(F, pth_root(F, f), out);
    return;
  }
  FqPoly g = poly_gcd(F, f, der);
  FqPoly rest = poly_divmod(F, f, g).first;  // squarefree
  FqPoly x = poly_x(F), h = x;
  for (int d = 1; 2 * d <= poly_deg(rest); ++d) {
    h = poly_powmod(F, h, F->q(), rest);
    FqPoly gg = poly_gcd(F, poly_sub(F, h, x), rest);
    if (poly_deg(gg) > 0) {
      edf(F, gg, d, out);
      rest = poly_divmod(F, rest, gg).first;
      h = poly_mod(F, h, rest);
    }
  }
  if (poly_deg(rest) > 0) out.push_back(poly_monic(F, std::move(rest)));
  // g holds the factors of higher multiplicity; recursion terminates since
  // deg g < deg f whenever the derivative is nonzero
  if (poly_deg(g) > 0) distinct_factors(F, std::move(g), out);
}

}  // namespace

PolyFactorization factor_poly(const FqPtr& F, const FqPoly& f_in) {
  FqPoly f = poly_trim(f_in);
  if (f.empty()) throw Error("cannot factor the zero polynomial");
  PolyFactorization out;
  out.unit = f.back();
  FqPoly fm = poly_monic(F, f);
  std::vector<FqPoly> irr;
  distinct_factors(F, fm, irr);
  std::sort(irr.begin(), irr.end(), poly_less);
  irr.erase(std::unique(irr.begin(), irr.end()), irr.end());
  for (auto& fac : irr) {
    int mult = 0;
    FqPoly probe = fm;
    while (true) {
      auto [quo, rem] = poly_divmod(F, probe, fac);
      if (!rem.empty()) break;
      probe = std::move(quo);
      ++mult;
    }
    out.factors.emplace_back(fac, mult);
  }
  FqPoly check = {out.unit};
  for (auto& [fac, mult] : out.factors)
    for (int i = 0; i < mult; ++i) check = poly_mul(F, check, fac);
  if (poly_trim(check) != f) throw InternalError("factorization does not reproduce the input");
  return out;
}

std::string poly_to_string(const FqPtr& F, const FqPoly& f, const std::string& var) {
  if (f.empty()) return "0";
  std::string s;
  bool first = true;
  for (int i = 0; i <= poly_deg(f); ++i) {
    if (f[i] == 0) continue;
    std::string term;
    if (i == 0)
      term = F->to_string(f[i]);
    else {
      if (f[i] != F->one()) term = F->to_string(f[i]) + " ";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!first) s += " + ";
    s += term;
    first = false;
  }
  return s;
}

}  // namespace gforms
