#include "gforms/fq.hpp"

#include <algorithm>

#include "gforms/errors.hpp"

namespace gforms {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using raw = std::vector<long>;  // coefficients mod p, fixed length m

raw raw_mul_mod(const raw& a, const raw& b, const std::vector<long>& modulus, long p) {
  int m = static_cast<int>(a.size());
  std::vector<long> prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  // reduce: t^m = -(c_0 + ... + c_{m-1} t^{m-1})
  for (int k = 2 * m - 2; k >= m; --k) {
    long c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < m; ++i)
      prod[k - m + i] = (prod[k - m + i] + c * (p - modulus[i])) % p;
  }
  prod.resize(m);
  return prod;
}

std::uint64_t pack(const raw& c, long p) {
  std::uint64_t v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
  return v;
}

raw unpack(std::uint64_t v, long p, int m) {
  raw c(m, 0);
  for (int i = 0; i < m; ++i) {
    c[i] = static_cast<long>(v % p);
    v /= p;
  }
  return c;
}

// irreducibility over F_p by the distinct-degree criterion, raw arithmetic
bool modulus_irreducible(const std::vector<long>& f, long p) {
  int m = static_cast<int>(f.size()) - 1;  // monic degree m, f[m] = 1
  if (m == 1) return true;
  std::vector<long> mod(f.begin(), f.end() - 1);
  auto mul = [&](const raw& a, const raw& b) { return raw_mul_mod(a, b, mod, p); };
  auto pow_p = [&](raw a) {
    // a^p by square and multiply
    raw r(m, 0);
    r[0] = 1;
    long e = p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };
  raw x(m, 0);
  if (m == 1)
    x[0] = (p - mod[0]) % p;
  else
    x[1] = 1;
  // x^(p^k) for k = 1..m; need x^(p^m) == x and x^(p^k) != x for proper
  // divisor exponents m/l
  raw t = x;
  std::vector<raw> powers(m + 1);
  powers[0] = x;
  for (int k = 1; k <= m; ++k) {
    t = pow_p(t);
    powers[k] = t;
  }
  if (powers[m] != x) return false;
  for (int l = 2; l <= m; ++l) {
    if (m % l != 0) continue;
    if (!is_prime(l)) continue;
    if (powers[m / l] == x) return false;
  }
  return true;
}

}  // namespace

FqPtr Fq::make(long p, int m, std::uint64_t size_bound) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw Error("field characteristic must be an odd prime");
  if (m < 1) throw Error("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > size_bound) throw BudgetError("field size bound exceeded");
  }
  auto F = std::shared_ptr<Fq>(new Fq());
  F->p_ = p;
  F->m_ = m;
  F->q_ = q;

  // first monic irreducible of degree m in packed coefficient order
  F->modulus_.assign(m + 1, 0);
  F->modulus_[m] = 1;
  if (m == 1) {
    // t itself
  } else {
    bool found = false;
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t v = 0; v < count; ++v) {
      raw c = unpack(v, p, m);
      std::vector<long> f(c.begin(), c.end());
      f.push_back(1);
      if (modulus_irreducible(f, p)) {
        F->modulus_ = f;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("no irreducible modulus found");
  }

  std::vector<long> mod(F->modulus_.begin(), F->modulus_.end() - 1);
  auto mulraw = [&](const raw& a, const raw& b) { return raw_mul_mod(a, b, mod, p); };

  // factor q-1 for the order test
  std::vector<std::uint64_t> prime_divisors;
  {
    std::uint64_t n = q - 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime_divisors.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) prime_divisors.push_back(n);
  }
  auto powraw = [&](raw a, std::uint64_t e) {
    raw r(m, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mulraw(r, a);
      a = mulraw(a, a);
      e >>= 1;
    }
    return r;
  };
  raw one(m, 0);
  one[0] = 1;
  FqElem gen = 0;
  for (std::uint64_t v = 2; v < q; ++v) {
    raw a = unpack(v, p, m);
    bool primitive = true;
    for (auto l : prime_divisors)
      if (powraw(a, (q - 1) / l) == one) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = static_cast<FqElem>(v);
      break;
    }
  }
  if (gen == 0) throw InternalError("no primitive element found");
  F->gen_ = gen;

  F->exp_.resize(q - 1);
  F->log_.assign(q, 0);
  raw g = unpack(gen, p, m), acc = one;
  for (std::uint64_t k = 0; k < q - 1; ++k) {
    FqElem e = static_cast<FqElem>(pack(acc, p));
    F->exp_[k] = e;
    F->log_[e] = static_cast<std::uint32_t>(k);
    acc = mulraw(acc, g);
  }
  if (acc != one) throw InternalError("generator order mismatch");

  if (q <= 1024) {
    F->add_table_.resize(q * q);
    for (std::uint64_t a = 0; a < q; ++a) {
      raw ra = unpack(a, p, m);
      for (std::uint64_t b = 0; b < q; ++b) {
        raw rb = unpack(b, p, m);
        raw s(m);
        for (int i = 0; i < m; ++i) s[i] = (ra[i] + rb[i]) % p;
        F->add_table_[a * q + b] = static_cast<FqElem>(pack(s, p));
      }
    }
  }
  return F;
}

FqElem Fq::add(FqElem a, FqElem b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::uint64_t>(a) * q_ + b];
  std::uint64_t r = 0, mul = 1;
  for (int i = 0; i < m_; ++i) {
    long da = static_cast<long>(a % p_), db = static_cast<long>(b % p_);
    a /= static_cast<FqElem>(p_);
    b /= static_cast<FqElem>(p_);
    r += static_cast<std::uint64_t>((da + db) % p_) * mul;
    mul *= static_cast<std::uint64_t>(p_);
  }
  return static_cast<FqElem>(r);
}

FqElem Fq::neg(FqElem a) const {
  std::uint64_t r = 0, mul = 1;
  for (int i = 0; i < m_; ++i) {
    long d = static_cast<long>(a % p_);
    a /= static_cast<FqElem>(p_);
    r += static_cast<std::uint64_t>((p_ - d) % p_) * mul;
    mul *= static_cast<std::uint64_t>(p_);
  }
  return static_cast<FqElem>(r);
}

FqElem Fq::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Fq::inv(FqElem a) const {
  if (a == 0) throw Error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FqElem Fq::pow(FqElem a, std::uint64_t e) const {
  if (a == 0) {
    if (e == 0) throw Error("0^0 in field power");
    return 0;
  }
  std::uint64_t k = (static_cast<std::uint64_t>(log_[a]) % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1);
  return exp_[k];
}

FqElem Fq::from_int(long v) const {
  long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<FqElem>(r);
}

long Fq::to_int(FqElem a) const {
  if (a >= static_cast<FqElem>(p_)) throw Error("element is not in the prime subfield");
  return static_cast<long>(a);
}

bool Fq::is_square(FqElem a) const {
  if (a == 0) throw Error("square test requires a nonzero element");
  return log_[a] % 2 == 0;
}

FqElem Fq::least_nonsquare() const {
  for (std::uint64_t v = 2; v < q_; ++v)
    if (!is_square(static_cast<FqElem>(v))) return static_cast<FqElem>(v);
  throw InternalError("no non-square in a field of odd order > 1");
}

FqElem Fq::trace_to_base(FqElem a) const {
  FqElem s = 0, x = a;
  for (int i = 0; i < m_; ++i) {
    s = add(s, x);
    x = frobenius(x);
  }
  if (s >= static_cast<FqElem>(p_)) throw InternalError("trace left the prime subfield");
  return s;
}

std::vector<long> Fq::coords(FqElem a) const {
  std::vector<long> c(m_);
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<long>(a % p_);
    a /= static_cast<FqElem>(p_);
  }
  return c;
}

FqElem Fq::from_coords(const std::vector<long>& c) const {
  if (static_cast<int>(c.size()) != m_) throw Error("coordinate length mismatch");
  std::uint64_t v = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    long d = c[i] % p_;
    if (d < 0) d += p_;
    v = v * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(d);
  }
  return static_cast<FqElem>(v);
}

std::uint32_t Fq::log(FqElem a) const {
  if (a == 0) throw Error("log of zero");
  return log_[a];
}

std::string Fq::to_string(FqElem a) const {
  if (m_ == 1) return std::to_string(a);
  auto c = coords(a);
  std::string s = "[";
  for (int i = 0; i < m_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

FqElem FieldExt::project(FqElem b) const {
  auto it = section.find(b);
  if (it == section.end()) throw Error("element is not in the embedded subfield");
  return it->second;
}

FqElem FieldExt::rel_trace(FqElem x) const {
  FqElem s = 0, t = x;
  for (int i = 0; i < degree; ++i) {
    s = big->add(s, t);
    t = big->pow(t, small->q());
  }
  return project(s);
}

std::vector<FqElem> FieldExt::power_basis() const {
  // the residue class of the variable generates `big` over any subfield, so
  // its first `degree` powers are a basis over `small`
  std::vector<FqElem> basis(degree);
  FqElem t = degree == 1 ? big->one() : static_cast<FqElem>(big->p());
  FqElem acc = big->one();
  for (int i = 0; i < degree; ++i) {
    basis[i] = acc;
    acc = big->mul(acc, t);
  }
  return basis;
}

FieldExt make_extension(const FqPtr& small, int degree, std::uint64_t size_bound) {
  if (degree < 1) throw Error("extension degree must be >= 1");
  FieldExt ext;
  ext.small = small;
  ext.degree = degree;
  ext.big = (degree == 1) ? small : Fq::make(small->p(), small->degree() * degree, size_bound);
  ext.embed_table.resize(small->q());
  if (degree == 1) {
    for (std::uint64_t v = 0; v < small->q(); ++v)
      ext.embed_table[v] = static_cast<FqElem>(v);
  } else if (small->degree() == 1) {
    // prime subfield embeds canonically
    for (std::uint64_t v = 0; v < small->q(); ++v)
      ext.embed_table[v] = ext.big->from_int(static_cast<long>(v));
  } else {
    // least root of the small modulus inside the big field
    const auto& mod = small->modulus();
    FqElem root = 0;
    bool found = false;
    for (std::uint64_t z = 0; z < ext.big->q() && !found; ++z) {
      FqElem acc = 0;
      for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i)
        acc = ext.big->add(ext.big->mul(acc, static_cast<FqElem>(z)),
                           ext.big->from_int(mod[i]));
      if (acc == 0) {
        root = static_cast<FqElem>(z);
        found = true;
      }
    }
    if (!found) throw InternalError("small modulus has no root in the big field");
    for (std::uint64_t v = 0; v < small->q(); ++v) {
      auto c = small->coords(static_cast<FqElem>(v));
      FqElem acc = 0;
      for (int i = small->degree() - 1; i >= 0; --i)
        acc = ext.big->add(ext.big->mul(acc, root), ext.big->from_int(c[i]));
      ext.embed_table[v] = acc;
    }
  }
  for (std::uint64_t v = 0; v < small->q(); ++v) ext.section[ext.embed_table[v]] = static_cast<FqElem>(v);
  // consistency: embedding is a field homomorphism on a spanning sample
  for (std::uint64_t a = 1; a < std::min<std::uint64_t>(small->q(), 16); ++a)
    for (std::uint64_t b = 1; b < std::min<std::uint64_t>(small->q(), 16); ++b) {
      if (ext.embed_table[small->mul(static_cast<FqElem>(a), static_cast<FqElem>(b))] !=
          ext.big->mul(ext.embed_table[a], ext.embed_table[b]))
        throw InternalError("subfield embedding is not multiplicative");
      if (ext.embed_table[small->add(static_cast<FqElem>(a), static_cast<FqElem>(b))] !=
          ext.big->add(ext.embed_table[a], ext.embed_table[b]))
        throw InternalError("subfield embedding is not additive");
    }
  return ext;
}

}  // namespace gforms
