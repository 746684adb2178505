#include "gforms/equiform.hpp"

#include <algorithm>

#include "gforms/errors.hpp"

namespace gforms {

void ModuleRep::validate() const {
  int n = group->order();
  if (static_cast<int>(rep.size()) != n) throw Error("module needs one matrix per element");
  if (!rep[FiniteGroup::identity].is_identity())
    throw Error("identity element must act as the identity matrix");
  for (int a = 0; a < n; ++a) {
    if (rep[a].rows() != dim || rep[a].cols() != dim) throw Error("module matrix shape");
    if (rep[a].det() == 0) throw Error("module matrix is singular");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(rep[a].mul(rep[b]) == rep[group->mul(a, b)]))
        throw Error("module matrices do not form a homomorphism");
}

ModuleRep ModuleRep::dual() const {
  ModuleRep d;
  d.field = field;
  d.group = group;
  d.dim = dim;
  d.rep.reserve(rep.size());
  for (const auto& m : rep) {
    auto inv = m.inverse();
    if (!inv) throw InternalError("module matrix not invertible");
    d.rep.push_back(inv->transpose());
  }
  return d;
}

bool ModuleRep::same_matrices(const ModuleRep& o) const {
  if (dim != o.dim || group != o.group || field != o.field) return false;
  for (std::size_t i = 0; i < rep.size(); ++i)
    if (!(rep[i] == o.rep[i])) return false;
  return true;
}

ModuleRep trivial_module(FqPtr F, GroupPtr G, int dim) {
  ModuleRep m;
  m.field = F;
  m.group = G;
  m.dim = dim;
  m.rep.assign(G->order(), FqMat::identity(F, dim));
  return m;
}

ModuleRep permutation_module(const GSet& X, FqPtr F) {
  ModuleRep m;
  m.field = F;
  m.group = X.group;
  m.dim = X.size;
  for (int g = 0; g < X.group->order(); ++g) {
    FqMat P(F, X.size, X.size);
    for (int x = 0; x < X.size; ++x) P.at(X.apply(g, x), x) = F->one();
    m.rep.push_back(std::move(P));
  }
  return m;
}

ModuleRep module_sum(const ModuleRep& a, const ModuleRep& b) {
  if (a.field != b.field || a.group != b.group) throw Error("module sum mismatch");
  ModuleRep m;
  m.field = a.field;
  m.group = a.group;
  m.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.rep.size(); ++i)
    m.rep.push_back(a.rep[i].block_diag(b.rep[i]));
  return m;
}

ModuleRep EquivariantSpace::module() const {
  ModuleRep m;
  m.field = field;
  m.group = group;
  m.dim = dim;
  m.rep = rep;
  return m;
}

void EquivariantSpace::validate() const {
  if (epsilon != 1 && epsilon != -1) throw Error("epsilon must be +1 or -1");
  if (gram.rows() != dim || gram.cols() != dim) throw Error("gram shape mismatch");
  FqElem eps = epsilon == 1 ? field->one() : field->neg(field->one());
  if (!(gram.transpose() == gram.scale(eps))) throw Error("gram symmetry violates epsilon");
  if (gram.det() == 0) throw Error("gram matrix is singular");
  module().validate();
  for (int g = 0; g < group->order(); ++g)
    if (!(rep[g].transpose().mul(gram).mul(rep[g]) == gram))
      throw Error("group action does not preserve the form");
}

EquivariantSpace make_space(FqPtr F, GroupPtr G, int epsilon, FqMat gram,
                            std::vector<FqMat> rep) {
  EquivariantSpace X;
  X.field = std::move(F);
  X.group = std::move(G);
  X.epsilon = epsilon;
  X.dim = gram.rows();
  X.gram = std::move(gram);
  X.rep = std::move(rep);
  X.validate();
  return X;
}

EquivariantSpace scale_form(const EquivariantSpace& X, FqElem c) {
  if (c == 0) throw Error("cannot scale a form by zero");
  return make_space(X.field, X.group, X.epsilon, X.gram.scale(c), X.rep);
}

EquivariantSpace orthogonal_sum(const EquivariantSpace& X, const EquivariantSpace& Y) {
  if (X.field != Y.field || X.group != Y.group || X.epsilon != Y.epsilon)
    throw Error("orthogonal sum needs matching field, group and epsilon");
  std::vector<FqMat> rep;
  for (std::size_t i = 0; i < X.rep.size(); ++i) rep.push_back(X.rep[i].block_diag(Y.rep[i]));
  return make_space(X.field, X.group, X.epsilon, X.gram.block_diag(Y.gram), std::move(rep));
}

EquivariantSpace repeat_form(const EquivariantSpace& X, int n) {
  if (n < 1) throw Error("repeat count must be >= 1");
  EquivariantSpace acc = X;
  for (int i = 1; i < n; ++i) acc = orthogonal_sum(acc, X);
  return acc;
}

EquivariantSpace tensor_scalar_form(const FqMat& plain_gram, const EquivariantSpace& X) {
  if (plain_gram.field() != X.field) throw Error("tensor factor lives over another field");
  if (!(plain_gram.transpose() == plain_gram)) throw Error("tensor factor must be symmetric");
  if (plain_gram.det() == 0) throw Error("tensor factor is singular");
  FqMat id = FqMat::identity(X.field, plain_gram.rows());
  std::vector<FqMat> rep;
  for (const auto& r : X.rep) rep.push_back(id.kron(r));
  return make_space(X.field, X.group, X.epsilon, plain_gram.kron(X.gram), std::move(rep));
}

EquivariantSpace hyperbolic(const ModuleRep& N, int epsilon) {
  N.validate();
  ModuleRep D = N.dual();
  const FqPtr& F = N.field;
  int n = N.dim;
  FqMat gram(F, 2 * n, 2 * n);
  FqElem eps = epsilon == 1 ? F->one() : F->neg(F->one());
  for (int i = 0; i < n; ++i) {
    gram.at(i, n + i) = F->one();
    gram.at(n + i, i) = eps;
  }
  std::vector<FqMat> rep;
  for (std::size_t g = 0; g < N.rep.size(); ++g) rep.push_back(N.rep[g].block_diag(D.rep[g]));
  return make_space(F, N.group, epsilon, std::move(gram), std::move(rep));
}

EquivariantSpace induce_form(const SubgroupContext& S, const EquivariantSpace& X) {
  if (X.group != S.sub) throw Error("induce_form expects a form over the subgroup");
  GroupPtr G = S.ref.parent;
  const FiniteGroup& g = *G;
  std::vector<int> coset_of(g.order(), -1), reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int s : S.ref.elements) coset_of[g.mul(a, s)] = idx;
  }
  int nc = static_cast<int>(reps.size()), d = X.dim;
  const FqPtr& F = X.field;
  FqMat gram(F, nc * d, nc * d);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) gram.at(c * d + i, c * d + j) = X.gram.at(i, j);
  std::vector<FqMat> rep;
  for (int e = 0; e < g.order(); ++e) {
    FqMat R(F, nc * d, nc * d);
    for (int c = 0; c < nc; ++c) {
      int t = g.mul(e, reps[c]);
      int c2 = coset_of[t];
      int s = S.from_parent[g.mul(g.inv(reps[c2]), t)];
      if (s < 0) throw InternalError("coset factorization failed in induce_form");
      const FqMat& B = X.rep[s];
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) R.at(c2 * d + i, c * d + j) = B.at(i, j);
    }
    rep.push_back(std::move(R));
  }
  return make_space(F, G, X.epsilon, std::move(gram), std::move(rep));
}

EquivariantSpace restrict_form(const SubgroupContext& S, const EquivariantSpace& X) {
  if (X.group != S.ref.parent) throw Error("restrict_form expects a form over the parent");
  std::vector<FqMat> rep;
  for (int s = 0; s < S.sub->order(); ++s) rep.push_back(X.rep[S.to_parent[s]]);
  return make_space(X.field, S.sub, X.epsilon, X.gram, std::move(rep));
}

EquivariantSpace permutation_form(const GSet& X, FqPtr F) {
  ModuleRep m = permutation_module(X, F);
  return make_space(F, X.group, 1, FqMat::identity(F, X.size), std::move(m.rep));
}

EquivariantSpace extend_scalars(const EquivariantSpace& X, const FieldExt& ext) {
  if (ext.small != X.field) throw Error("extension base field mismatch");
  const FqPtr& K = ext.big;
  FqMat gram(K, X.dim, X.dim);
  for (int i = 0; i < X.dim; ++i)
    for (int j = 0; j < X.dim; ++j) gram.at(i, j) = ext.embed(X.gram.at(i, j));
  std::vector<FqMat> rep;
  for (const auto& r : X.rep) {
    FqMat R(K, X.dim, X.dim);
    for (int i = 0; i < X.dim; ++i)
      for (int j = 0; j < X.dim; ++j) R.at(i, j) = ext.embed(r.at(i, j));
    rep.push_back(std::move(R));
  }
  return make_space(K, X.group, X.epsilon, std::move(gram), std::move(rep));
}

FqMat transfer_unit_gram(const FieldExt& ext, FqElem twist) {
  const FqPtr& K = ext.big;
  int m = ext.degree;
  auto basis = ext.power_basis();
  FqMat T(ext.small, m, m);
  for (int r = 0; r < m; ++r)
    for (int t = 0; t < m; ++t)
      T.at(r, t) = ext.rel_trace(K->mul(twist, K->mul(basis[r], basis[t])));
  return T;
}

EquivariantSpace scharlau_transfer(const EquivariantSpace& X, const FieldExt& ext,
                                   FqElem twist) {
  if (X.field != ext.big) throw Error("transfer expects a form over the extension field");
  if (twist == 0) throw Error("transfer functional must be nonzero");
  const FqPtr& K = ext.big;
  const FqPtr& k = ext.small;
  int m = ext.degree, d = X.dim, m0 = k->degree(), mbig = K->degree();
  auto basis = ext.power_basis();

  // Decompose big-field elements into small coefficients over the power
  // basis: the F_p-coordinate change is linear, so one SpanSolver inversion
  // serves every entry.
  FqPtr Fp = (m0 == 1) ? k : Fq::make(k->p(), 1);
  SpanSolver solver(Fp, mbig);
  for (int r = 0; r < m; ++r)
    for (int l = 0; l < m0; ++l) {
      std::vector<long> unit(m0, 0);
      unit[l] = 1;
      FqElem v = K->mul(ext.embed(k->from_coords(unit)), basis[r]);
      auto co = K->coords(v);
      FqVec vv(co.begin(), co.end());
      if (!solver.insert(vv)) throw InternalError("power basis is linearly dependent");
    }
  auto decompose = [&](FqElem z) {
    auto co = K->coords(z);
    FqVec vv(co.begin(), co.end());
    auto coeff = solver.express(vv);
    if (!coeff) throw InternalError("power-basis decomposition failed");
    std::vector<FqElem> cr(m);
    for (int r = 0; r < m; ++r) {
      std::vector<long> cl(m0);
      for (int l = 0; l < m0; ++l) cl[l] = static_cast<long>((*coeff)[r * m0 + l]);
      cr[r] = k->from_coords(cl);
    }
    return cr;
  };
  auto s = [&](FqElem z) { return ext.rel_trace(K->mul(twist, z)); };

  // basis of the transferred space: (power-basis index r, X basis index i),
  // indexed r*d + i so that extend-then-transfer aligns with Kron(T, gram)
  FqMat gram(k, m * d, m * d);
  for (int r = 0; r < m; ++r)
    for (int t = 0; t < m; ++t) {
      FqElem bb = K->mul(basis[r], basis[t]);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          gram.at(r * d + i, t * d + j) = s(K->mul(bb, X.gram.at(i, j)));
    }
  std::vector<FqMat> rep;
  for (const auto& R : X.rep) {
    FqMat Rk(k, m * d, m * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        FqElem entry = R.at(i, j);
        if (entry == 0) continue;
        for (int t = 0; t < m; ++t) {
          auto cr = decompose(K->mul(entry, basis[t]));
          for (int r = 0; r < m; ++r)
            if (cr[r] != 0) Rk.at(r * d + i, t * d + j) = cr[r];
        }
      }
    rep.push_back(std::move(Rk));
  }
  // nonsingularity of the transferred form is part of make_space validation
  return make_space(k, X.group, X.epsilon, std::move(gram), std::move(rep));
}

WittClassPlain witt_class_plain(const FqPtr& F, const FqMat& gram) {
  if (!(gram.transpose() == gram)) throw Error("witt_class_plain needs a symmetric form");
  int d = gram.rows();
  FqElem det = gram.det();
  if (det == 0) throw Error("witt_class_plain needs a nonsingular form");
  // signed determinant (-1)^{d(d-1)/2} det
  FqElem signed_det = det;
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) signed_det = F->neg(signed_det);
  WittClassPlain w;
  w.rank_mod2 = d % 2;
  w.disc_square = F->is_square(signed_det);
  return w;
}

FqElem scharlau_section(const FieldExt& ext) {
  if (ext.degree % 2 == 0) throw Error("section search requires odd degree");
  WittClassPlain unit;
  unit.rank_mod2 = 1;
  unit.disc_square = true;
  for (std::uint64_t a = 1; a < ext.big->q(); ++a) {
    FqMat T = transfer_unit_gram(ext, static_cast<FqElem>(a));
    if (T.det() == 0) continue;
    if (witt_class_plain(ext.small, T) == unit) return static_cast<FqElem>(a);
  }
  throw InternalError("no Scharlau section found in an odd-degree extension");
}

// ---------------------------------------------------------------------------

std::vector<FqMat> hom_space(const ModuleRep& X, const ModuleRep& Y) {
  if (X.field != Y.field || X.group != Y.group) throw Error("hom space mismatch");
  const FqPtr& F = X.field;
  auto gens = X.group->generating_set();
  if (gens.empty()) gens.push_back(FiniteGroup::identity);
  int dx = X.dim, dy = Y.dim;
  int vars = dx * dy;  // phi is dy x dx, phi rho_X(g) = rho_Y(g) phi
  FqMat A(F, static_cast<int>(gens.size()) * vars, vars);
  int row = 0;
  for (int g : gens) {
    const FqMat& RX = X.rep[g];
    const FqMat& RY = Y.rep[g];
    // equation for entry (i, j): sum_k phi[i][k] RX[k][j] - RY[i][k] phi[k][j] = 0
    for (int i = 0; i < dy; ++i)
      for (int j = 0; j < dx; ++j) {
        for (int kk = 0; kk < dx; ++kk)
          A.at(row, i * dx + kk) = F->add(A.at(row, i * dx + kk), RX.at(kk, j));
        for (int kk = 0; kk < dy; ++kk)
          A.at(row, kk * dx + j) = F->sub(A.at(row, kk * dx + j), RY.at(i, kk));
        ++row;
      }
  }
  auto basis = nullspace(A);
  std::vector<FqMat> out;
  for (const auto& v : basis) {
    FqMat phi(F, dy, dx);
    for (int i = 0; i < dy; ++i)
      for (int j = 0; j < dx; ++j) phi.at(i, j) = v[i * dx + j];
    out.push_back(std::move(phi));
  }
  return out;
}

std::optional<FqMat> find_module_isomorphism(const ModuleRep& X, const ModuleRep& Y,
                                             std::uint64_t budget) {
  if (X.dim != Y.dim) return std::nullopt;
  if (X.same_matrices(Y)) return FqMat::identity(X.field, X.dim);
  auto basis = hom_space(X, Y);
  const FqPtr& F = X.field;
  std::size_t t = basis.size();
  if (t == 0) return std::nullopt;
  for (const auto& b : basis)
    if (b.det() != 0) return b;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      FqMat s = basis[i].add(basis[j]);
      if (s.det() != 0) return s;
    }
  // full odometer over coefficient tuples, with suffix partial sums so an
  // increment at digit k only rebuilds sums below k
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < t; ++i) {
    if (total > budget) throw BudgetError("module isomorphism scan budget exceeded");
    total *= F->q();
  }
  if (total > budget) throw BudgetError("module isomorphism scan budget exceeded");
  std::vector<FqElem> c(t, 0);
  std::vector<FqMat> suffix(t + 1, FqMat(F, X.dim, X.dim));  // suffix[k] = sum_{j>=k} c_j basis_j
  for (std::uint64_t it = 1; it < total; ++it) {
    std::size_t k = 0;
    while (k < t && c[k] == F->q() - 1) {
      c[k] = 0;
      ++k;
    }
    if (k == t) break;
    ++c[k];
    suffix[k] = suffix[k + 1].add(basis[k].scale(c[k]));
    for (std::size_t j = k; j-- > 0;) suffix[j] = suffix[j + 1];
    if (suffix[0].det() != 0) return suffix[0];
  }
  return std::nullopt;
}

}  // namespace gforms
