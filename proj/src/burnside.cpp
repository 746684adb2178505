#include "gforms/burnside.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "gforms/errors.hpp"

namespace gforms {

mpz_class zpoly_eval(const ZPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::string zvec_str(const ZVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace

BurnsideRingPtr BurnsideRing::create(GroupPtr G, std::size_t subgroup_bound) {
  auto ring = std::make_shared<BurnsideRing>();
  ring->G_ = G;
  ring->classes_ = subgroup_classes(G, subgroup_bound);
  int h = ring->classes_.class_count();
  ring->marks_.assign(h, ZVec(h, 0));
  for (int j = 0; j < h; ++j) {
    GSet Xj = coset_action(G, SubgroupRef{G, ring->classes_.representative(j)});
    for (int i = 0; i < h; ++i)
      ring->marks_[i][j] = Xj.fixed_points(ring->classes_.representative(i));
  }
  // structural sanity of the table of marks
  for (int j = 0; j < h; ++j) {
    if (ring->marks_[0][j] != G->order() / ring->classes_.rep_order(j))
      throw InternalError("mark of the trivial subgroup must be the index");
    if (ring->marks_[j][j] == 0) throw InternalError("mark matrix diagonal vanishes");
    for (int i = j + 1; i < h; ++i)
      if (ring->marks_[i][j] != 0) throw InternalError("mark matrix is not triangular");
  }
  return ring;
}

BurnsideElement BurnsideRing::zero() const {
  return BurnsideElement{shared_from_this(), ZVec(rank(), 0)};
}

BurnsideElement BurnsideRing::one() const { return basis(rank() - 1); }

BurnsideElement BurnsideRing::basis(int cls) const {
  ZVec c(rank(), 0);
  c[cls] = 1;
  return BurnsideElement{shared_from_this(), std::move(c)};
}

BurnsideElement BurnsideRing::from_coeffs(ZVec c) const {
  if (static_cast<int>(c.size()) != rank()) throw Error("coefficient length mismatch");
  return BurnsideElement{shared_from_this(), std::move(c)};
}

BurnsideElement BurnsideRing::add(const BurnsideElement& x, const BurnsideElement& y) const {
  ZVec c = x.coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs[i];
  return BurnsideElement{shared_from_this(), std::move(c)};
}

BurnsideElement BurnsideRing::sub(const BurnsideElement& x, const BurnsideElement& y) const {
  ZVec c = x.coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= y.coeffs[i];
  return BurnsideElement{shared_from_this(), std::move(c)};
}

BurnsideElement BurnsideRing::scale(const mpz_class& k, const BurnsideElement& x) const {
  ZVec c = x.coeffs;
  for (auto& v : c) v *= k;
  return BurnsideElement{shared_from_this(), std::move(c)};
}

ZVec BurnsideRing::marks_of(const BurnsideElement& x) const {
  return mat_apply(marks_, x.coeffs);
}

std::optional<ZVec> BurnsideRing::coeffs_from_marks(const ZVec& ghost) const {
  // the mark matrix is upper triangular with nonzero diagonal in the
  // (order, lex) class ordering; back-substitute exactly
  int h = rank();
  std::vector<mpq_class> c(h, 0);
  for (int i = h - 1; i >= 0; --i) {
    mpq_class acc = ghost[i];
    for (int j = i + 1; j < h; ++j) acc -= mpq_class(marks_[i][j]) * c[j];
    c[i] = acc / mpq_class(marks_[i][i]);
    c[i].canonicalize();
  }
  ZVec out(h);
  for (int i = 0; i < h; ++i) {
    if (c[i].get_den() != 1) return std::nullopt;
    out[i] = c[i].get_num();
  }
  return out;
}

BurnsideElement BurnsideRing::mul(const BurnsideElement& x, const BurnsideElement& y) const {
  ZVec gx = marks_of(x), gy = marks_of(y);
  for (std::size_t i = 0; i < gx.size(); ++i) gx[i] *= gy[i];
  auto c = coeffs_from_marks(gx);
  if (!c)
    throw InternalError("non-integral product pullback; mark table is inconsistent");
  return BurnsideElement{shared_from_this(), std::move(*c)};
}

BurnsideElement BurnsideRing::decompose(const GSet& X) const {
  if (X.group != G_) throw Error("G-set belongs to a different group");
  ZVec coeffs(rank(), 0);
  std::vector<bool> seen(X.size, false);
  for (int x = 0; x < X.size; ++x) {
    if (seen[x]) continue;
    for (int g = 0; g < G_->order(); ++g) seen[X.apply(g, x)] = true;
    coeffs[classes_.class_of_elements(X.stabilizer(x))] += 1;
  }
  return BurnsideElement{shared_from_this(), std::move(coeffs)};
}

SpectralData BurnsideRing::spectral(const BurnsideElement& x) const {
  SpectralData s;
  s.element = x;
  s.ghost = marks_of(x);
  s.char_poly = {1};
  for (const auto& g : s.ghost) {
    // multiply by (t - g)
    ZPoly next(s.char_poly.size() + 1, 0);
    for (std::size_t i = 0; i < s.char_poly.size(); ++i) {
      next[i + 1] += s.char_poly[i];
      next[i] -= g * s.char_poly[i];
    }
    s.char_poly = std::move(next);
  }
  s.norm = 1;
  for (const auto& g : s.ghost) s.norm *= g;
  // Cayley-Hamilton: the characteristic polynomial kills x in the ring
  BurnsideElement acc = zero();
  for (auto it = s.char_poly.rbegin(); it != s.char_poly.rend(); ++it)
    acc = add(mul(acc, x), scale(*it, one()));
  for (const auto& c : acc.coeffs)
    if (c != 0) throw InternalError("characteristic polynomial does not annihilate element");
  return s;
}

DivisionData BurnsideRing::division_polynomial(const BurnsideElement& x,
                                               long assert_prime_to) const {
  SpectralData s = spectral(x);
  int h = rank();
  // t.F(t) = N - (-1)^h P(t)
  ZPoly g(s.char_poly.size(), 0);
  int sign = (h % 2 == 0) ? 1 : -1;
  for (std::size_t i = 0; i < s.char_poly.size(); ++i) g[i] = -sign * s.char_poly[i];
  g[0] += s.norm;
  if (g[0] != 0) throw InternalError("division polynomial has nonzero constant term");
  DivisionData d;
  d.N = s.norm;
  d.F.assign(g.begin() + 1, g.end());
  while (d.F.size() > 1 && d.F.back() == 0) d.F.pop_back();
  // verify x.F(x) = N exactly
  BurnsideElement acc = zero();
  for (auto it = d.F.rbegin(); it != d.F.rend(); ++it)
    acc = add(mul(acc, x), scale(*it, one()));
  BurnsideElement lhs = mul(x, acc);
  BurnsideElement rhs = scale(d.N, one());
  if (!(lhs == rhs)) throw InternalError("division identity x.F(x) = N failed");
  if (assert_prime_to > 0 && d.N % assert_prime_to == 0)
    throw InternalError("norm is divisible by " + std::to_string(assert_prime_to) +
                        " despite the p-group hypothesis");
  return d;
}

// ---------------------------------------------------------------------------
// induction and restriction

BurnsideElement induce(const BurnsideRingPtr& big, const SubgroupContext& S,
                       const BurnsideElement& x) {
  const auto& small = *x.ring;
  BurnsideElement out = big->zero();
  for (int cls = 0; cls < small.rank(); ++cls) {
    if (x.coeffs[cls] == 0) continue;
    GSet base = coset_action(small.group(),
                             SubgroupRef{small.group(), small.classes().representative(cls)});
    BurnsideElement ind = big->decompose(induce_gset(S, base));
    out = big->add(out, big->scale(x.coeffs[cls], ind));
  }
  return out;
}

BurnsideElement restrict_to(const BurnsideRingPtr& small, const SubgroupContext& S,
                            const BurnsideElement& y) {
  const auto& big = *y.ring;
  BurnsideElement out = small->zero();
  for (int cls = 0; cls < big.rank(); ++cls) {
    if (y.coeffs[cls] == 0) continue;
    GSet base = coset_action(big.group(),
                             SubgroupRef{big.group(), big.classes().representative(cls)});
    BurnsideElement res = small->decompose(restrict_gset(base, S));
    out = small->add(out, small->scale(y.coeffs[cls], res));
  }
  return out;
}

// ---------------------------------------------------------------------------
// connectivity

ConnectivityResult spec_connected(const BurnsideRingPtr& ring, int class_bound) {
  int h = ring->rank();
  if (h > class_bound) throw BudgetError("idempotent enumeration bound exceeded");
  ConnectivityResult res;
  for (std::uint64_t mask = 1; mask + 1 < (1ULL << h); ++mask) {
    ZVec ghost(h);
    for (int i = 0; i < h; ++i) ghost[i] = (mask >> i) & 1;
    auto c = ring->coeffs_from_marks(ghost);
    if (!c) continue;
    BurnsideElement e = ring->from_coeffs(*c);
    if (!(ring->mul(e, e) == e)) throw InternalError("0/1 ghost pullback is not idempotent");
    res.connected = false;
    res.idempotent = std::move(e);
    return res;
  }
  return res;
}

// ---------------------------------------------------------------------------
// projection-formula suite

namespace {

ZMat transpose(const ZMat& A) {
  if (A.empty()) return {};
  ZMat T(A[0].size(), ZVec(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
  return T;
}

BurnsideElement eval_in_ring(const ZPoly& f, const BurnsideElement& x) {
  const auto& R = *x.ring;
  BurnsideElement acc = R.zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    acc = R.add(R.mul(acc, x), R.scale(*it, R.one()));
  return acc;
}

}  // namespace

ProjectionResult projection_suite(const BurnsideRingPtr& big, const BurnsideRingPtr& small,
                                  const SubgroupContext& S) {
  CheckReport rep;
  rep.check_id = "projection_suite";
  rep.params["group_order"] = big->group()->order();
  rep.params["subgroup_order"] = small->group()->order();
  auto t0 = std::chrono::steady_clock::now();

  const int hS = small->rank(), hG = big->rank();
  auto fail = [&](const std::string& what, const std::string& witness) {
    json f;
    f["identity"] = what;
    f["witness"] = witness;
    rep.failures.push_back(f);
    throw InternalError("projection identity failed: " + what + " at " + witness);
  };
  auto check = [&](bool ok, const std::string& what, const std::string& witness) {
    ++rep.attempted;
    ++rep.nonvacuous;
    if (ok)
      ++rep.passes;
    else
      fail(what, witness);
  };

  // matrices of i and r on the chosen bases
  ZMat imat(hG, ZVec(hS, 0)), rmat(hS, ZVec(hG, 0));
  std::vector<BurnsideElement> ibasis, rbasis;
  for (int a = 0; a < hS; ++a) {
    BurnsideElement ia = induce(big, S, small->basis(a));
    for (int k = 0; k < hG; ++k) imat[k][a] = ia.coeffs[k];
    ibasis.push_back(std::move(ia));
  }
  for (int b = 0; b < hG; ++b) {
    BurnsideElement rb = restrict_to(small, S, big->basis(b));
    for (int k = 0; k < hS; ++k) rmat[k][b] = rb.coeffs[k];
    rbasis.push_back(std::move(rb));
  }
  ZMat Rmat = mat_mul(rmat, imat);

  // the projection formula on all basis pairs
  for (int b = 0; b < hG; ++b)
    for (int a = 0; a < hS; ++a) {
      BurnsideElement lhs = induce(big, S, small->mul(rbasis[b], small->basis(a)));
      BurnsideElement rhs = big->mul(big->basis(b), ibasis[a]);
      check(lhs == rhs, "i(r(y)x) = y.i(x)",
            "y=" + big->classes().class_label(b) + " x=" + small->classes().class_label(a));
    }

  ProjectionResult out{std::move(rep), {}, 0, big->zero(), small->zero()};
  out.Q = induce(big, S, small->one());
  out.q = restrict_to(small, S, out.Q);

  bool sylow_case = false;
  {
    int so = small->group()->order();
    sylow_case = (so & (so - 1)) == 0 && (big->group()->order() / so) % 2 == 1;
  }
  DivisionData dd = small->division_polynomial(out.q, sylow_case ? 2 : 0);
  out.F = dd.F;
  out.n = dd.N;
  out.report.details["n"] = dd.N.get_str();
  {
    ++out.report.attempted;
    ++out.report.nonvacuous;
    ++out.report.passes;  // q.F(q) = n was verified inside division_polynomial
  }

  auto check2 = [&](bool ok, const std::string& what, const std::string& witness) {
    ++out.report.attempted;
    ++out.report.nonvacuous;
    if (ok)
      ++out.report.passes;
    else {
      json f;
      f["identity"] = what;
      f["witness"] = witness;
      out.report.failures.push_back(f);
      throw InternalError("projection identity failed: " + what + " at " + witness);
    }
  };

  // i(r(y)) = Q.y on the basis of Burn(G)
  for (int b = 0; b < hG; ++b) {
    BurnsideElement lhs = induce(big, S, rbasis[b]);
    BurnsideElement rhs = big->mul(out.Q, big->basis(b));
    check2(lhs == rhs, "i(r(y)) = Q.y", "y=" + big->classes().class_label(b));
  }
  // n.i(a) = i(F(q).R(a)) on the basis of Burn(S)
  for (int a = 0; a < hS; ++a) {
    BurnsideElement Ra = restrict_to(small, S, ibasis[a]);
    BurnsideElement lhs = big->scale(out.n, ibasis[a]);
    BurnsideElement rhs = induce(big, S, small->mul(eval_in_ring(out.F, out.q), Ra));
    check2(lhs == rhs, "n.i(a) = i(F(q).R(a))", "a=" + small->classes().class_label(a));
  }
  // R^2(a) = q.R(a)
  for (int a = 0; a < hS; ++a) {
    BurnsideElement Ra = restrict_to(small, S, ibasis[a]);
    BurnsideElement RRa = restrict_to(small, S, induce(big, S, Ra));
    check2(RRa == small->mul(out.q, Ra), "R^2(a) = q.R(a)",
           "a=" + small->classes().class_label(a));
  }

  // kernel equality as integer lattices
  ZMat ker_i = kernel_basis(imat);
  ZMat ker_R = kernel_basis(Rmat);
  check2(lattice_equal(ker_i, ker_R), "Ker(i) = Ker(R)", "lattice comparison");
  out.report.details["ker_rank"] = static_cast<int>(hnf_rows(ker_i).size());

  // Ker(R) + Im(R) has trivial gluing and index killed by n; same for
  // Ker(r) + Im(i)
  ZMat im_R = hnf_rows(transpose(Rmat));
  ZMat ker_r = kernel_basis(rmat);
  ZMat im_i = hnf_rows(transpose(imat));
  check2(lattice_intersection_trivial(ker_R, im_R), "Ker(R) meets Im(R) trivially", "lattice");
  check2(lattice_intersection_trivial(ker_r, im_i), "Ker(r) meets Im(i) trivially", "lattice");
  {
    ZMat sumA = ker_R;
    sumA.insert(sumA.end(), im_R.begin(), im_R.end());
    bool ok = true;
    for (int k = 0; k < hS && ok; ++k) {
      ZVec v(hS, 0);
      v[k] = out.n;
      ok = lattice_contains(sumA, v);
    }
    check2(ok, "n.A inside Ker(R) + Im(R)", "cokernel");
    ZMat sumB = ker_r;
    sumB.insert(sumB.end(), im_i.begin(), im_i.end());
    ok = true;
    for (int k = 0; k < hG && ok; ++k) {
      ZVec v(hG, 0);
      v[k] = out.n;
      ok = lattice_contains(sumB, v);
    }
    check2(ok, "n.B inside Ker(r) + Im(i)", "cokernel");
  }

  if (sylow_case) {
    check2(out.n % 2 != 0, "n odd for a 2-Sylow pair", "n=" + out.n.get_str());
    out.report.details["q_ghost"] = zvec_str(small->marks_of(out.q));
  }

  out.report.runtime_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count());
  return out;
}

}  // namespace gforms
