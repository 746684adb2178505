#include "gforms/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "gforms/errors.hpp"

namespace gforms {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> labels,
                         bool check_associativity) {
  n_ = static_cast<int>(table.size());
  if (n_ == 0) throw ParseError("group table is empty");
  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a) {
    if (static_cast<int>(table[a].size()) != n_)
      throw ParseError("group table is not square");
    for (int b = 0; b < n_; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n_) throw ParseError("group table entry out of range");
      table_[static_cast<std::size_t>(a) * n_ + b] = v;
    }
  }
  for (int a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw ParseError("element 0 is not an identity");
  }
  // latin square: rows and columns are permutations
  for (int a = 0; a < n_; ++a) {
    std::vector<bool> row(n_, false), col(n_, false);
    for (int b = 0; b < n_; ++b) {
      if (row[mul(a, b)]) throw ParseError("group table row is not a permutation");
      row[mul(a, b)] = true;
      if (col[mul(b, a)]) throw ParseError("group table column is not a permutation");
      col[mul(b, a)] = true;
    }
  }
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) throw ParseError("one-sided inverse in group table");
        inverse_[a] = b;
      }
  if (check_associativity) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw ParseError("group table is not associative");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw ParseError("label count does not match group order");
  labels_ = std::move(labels);
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != identity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::string FiniteGroup::label(int a) const {
  if (!labels_.empty()) return labels_[a];
  return "g" + std::to_string(a);
}

std::vector<int> FiniteGroup::generating_set() const {
  std::vector<int> gens;
  std::vector<int> closed = {identity};
  while (static_cast<int>(closed.size()) < n_) {
    int next = -1;
    std::vector<bool> in(n_, false);
    for (int x : closed) in[x] = true;
    for (int g = 0; g < n_; ++g)
      if (!in[g]) {
        next = g;
        break;
      }
    gens.push_back(next);
    closed = subgroup_closure(*this, gens);
  }
  return gens;
}

std::vector<int> FiniteGroup::element_class_reps() const {
  std::vector<bool> seen(n_, false);
  std::vector<int> reps;
  for (int a = 0; a < n_; ++a) {
    if (seen[a]) continue;
    reps.push_back(a);
    for (int g = 0; g < n_; ++g) seen[conj(g, a)] = true;
  }
  return reps;
}

// ---------------------------------------------------------------------------
// construction

namespace {

std::vector<int> perm_mul(const std::vector<int>& a, const std::vector<int>& b) {
  // composition "apply b first, then a"
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

GroupPtr close_permutations(std::vector<std::vector<int>> gens, std::size_t order_bound) {
  if (gens.empty()) gens.push_back({0});
  std::size_t n = 0;
  for (const auto& g : gens) n = std::max(n, g.size());
  for (auto& g : gens) {
    std::size_t old = g.size();
    g.resize(n);
    for (std::size_t i = old; i < n; ++i) g[i] = static_cast<int>(i);
    std::vector<bool> seen(n, false);
    for (int v : g) {
      if (v < 0 || v >= static_cast<int>(n) || seen[v])
        throw ParseError("generator is not a permutation");
      seen[v] = true;
    }
  }
  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);

  std::vector<std::vector<int>> elements = {id};
  std::map<std::vector<int>, int> index = {{id, 0}};
  // breadth-first closure: new words get the next index, generators applied
  // on the right in their given order
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      auto w = perm_mul(elements[head], g);
      if (index.emplace(w, static_cast<int>(elements.size())).second) {
        elements.push_back(w);
        if (elements.size() > order_bound)
          throw BudgetError("group order bound exceeded during closure");
      }
    }
  }
  int m = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a][b] = index.at(perm_mul(elements[a], elements[b]));
  return std::make_shared<FiniteGroup>(std::move(table), std::vector<std::string>{}, false);
}

GroupPtr make_cyclic(int n) {
  if (n < 1) throw ParseError("cyclic group order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return std::make_shared<FiniteGroup>(std::move(t), std::vector<std::string>{}, false);
}

GroupPtr make_dihedral(int n) {
  // order 2n, as permutations of n points (rotation, reflection)
  if (n < 1) throw ParseError("dihedral parameter must be >= 1");
  if (n == 1) return make_cyclic(2);
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return close_permutations({rot, refl}, static_cast<std::size_t>(2) * n + 1);
}

GroupPtr make_symmetric(int n) {
  if (n < 1) throw ParseError("symmetric group parameter must be >= 1");
  if (n == 1) return make_cyclic(1);
  std::vector<int> tr(n), cyc(n);
  for (int i = 0; i < n; ++i) {
    tr[i] = i;
    cyc[i] = (i + 1) % n;
  }
  std::swap(tr[0], tr[1]);
  if (n == 2) return close_permutations({tr}, 3);
  return close_permutations({tr, cyc}, 50000);
}

GroupPtr make_alternating(int n) {
  if (n < 1) throw ParseError("alternating group parameter must be >= 1");
  if (n <= 2) return make_cyclic(1);
  if (n == 3) return close_permutations({{1, 2, 0}}, 4);
  std::vector<int> three(n), cyc(n);
  for (int i = 0; i < n; ++i) {
    three[i] = i;
    cyc[i] = i;
  }
  three[0] = 1; three[1] = 2; three[2] = 0;
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  } else {
    for (int i = 1; i < n; ++i) cyc[i] = 1 + (i % (n - 1));
  }
  return close_permutations({three, cyc}, 200000);
}

GroupPtr make_quaternion8() {
  // order: 1, i, j, k, -1, -i, -j, -k
  auto enc = [](int sign, int axis) { return (sign < 0 ? 4 : 0) + axis; };
  // axis multiplication: axes 0=1, 1=i, 2=j, 3=k
  static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  std::vector<std::string> labels = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = a < 4 ? 1 : -1, sb = b < 4 ? 1 : -1;
      int aa = a % 4, ab = b % 4;
      table[a][b] = enc(sa * sb * sg[aa][ab], ax[aa][ab]);
    }
  return std::make_shared<FiniteGroup>(std::move(table), std::move(labels), true);
}

GroupPtr make_klein4() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return std::make_shared<FiniteGroup>(std::move(t), std::vector<std::string>{}, false);
}

}  // namespace

GroupPtr group_named(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q8") return make_quaternion8();
  if (s == "V4") return make_klein4();
  if (s.size() < 2) throw ParseError("unknown group name: " + name);
  char fam = s[0];
  int n = 0;
  try {
    n = std::stoi(s.substr(1));
  } catch (...) {
    throw ParseError("unknown group name: " + name);
  }
  switch (fam) {
    case 'C': return make_cyclic(n);
    case 'D': return make_dihedral(n);
    case 'S': return make_symmetric(n);
    case 'A': return make_alternating(n);
    default: throw ParseError("unknown group family: " + name);
  }
}

GroupPtr group_from_permutations(const std::vector<std::vector<int>>& generators,
                                 std::size_t order_bound) {
  return close_permutations(generators, order_bound);
}

GroupPtr group_from_table(std::vector<std::vector<int>> table) {
  return std::make_shared<FiniteGroup>(std::move(table));
}

GroupPtr build_group(const GroupSpec& spec, std::size_t order_bound) {
  switch (spec.kind) {
    case GroupSpec::Kind::Named: {
      auto g = group_named(spec.name);
      if (static_cast<std::size_t>(g->order()) > order_bound)
        throw BudgetError("group order bound exceeded");
      return g;
    }
    case GroupSpec::Kind::Permutations:
      return group_from_permutations(spec.generators, order_bound);
    case GroupSpec::Kind::Table: {
      auto g = group_from_table(spec.table);
      if (static_cast<std::size_t>(g->order()) > order_bound)
        throw BudgetError("group order bound exceeded");
      return g;
    }
  }
  throw ParseError("bad group spec");
}

// ---------------------------------------------------------------------------
// subgroups

std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> seed) {
  std::vector<bool> in(G.order(), false);
  std::vector<int> list;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  };
  push(FiniteGroup::identity);
  for (int x : seed) push(x);
  for (std::size_t head = 0; head < list.size(); ++head) {
    int a = list[head];
    push(G.inv(a));
    for (std::size_t j = 0; j <= head; ++j) {
      push(G.mul(a, list[j]));
      push(G.mul(list[j], a));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

bool SubgroupRef::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

SubgroupRef subgroup_generated(GroupPtr G, const std::vector<int>& gens) {
  return SubgroupRef{G, subgroup_closure(*G, gens)};
}

SubgroupRef trivial_subgroup(GroupPtr G) {
  return SubgroupRef{G, {FiniteGroup::identity}};
}

SubgroupRef full_subgroup(GroupPtr G) {
  std::vector<int> all(G->order());
  for (int i = 0; i < G->order(); ++i) all[i] = i;
  return SubgroupRef{std::move(G), std::move(all)};
}

namespace {

std::vector<int> conjugate_subgroup(const FiniteGroup& G, const std::vector<int>& H, int g) {
  std::vector<int> r;
  r.reserve(H.size());
  for (int h : H) r.push_back(G.conj(g, h));
  std::sort(r.begin(), r.end());
  return r;
}

struct BySizeThenLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace

SubgroupClassTable subgroup_classes(GroupPtr G, std::size_t order_bound) {
  if (static_cast<std::size_t>(G->order()) > order_bound)
    throw BudgetError("subgroup enumeration bound exceeded (order " +
                      std::to_string(G->order()) + " > " + std::to_string(order_bound) + ")");
  const FiniteGroup& g = *G;

  // exhaustive enumeration by repeated one-generator extension
  std::set<std::vector<int>, BySizeThenLex> found;
  std::vector<std::vector<int>> work;
  std::vector<int> triv = {FiniteGroup::identity};
  found.insert(triv);
  work.push_back(triv);
  while (!work.empty()) {
    auto H = std::move(work.back());
    work.pop_back();
    std::vector<bool> in(g.order(), false);
    for (int x : H) in[x] = true;
    for (int e = 0; e < g.order(); ++e) {
      if (in[e]) continue;
      auto J = H;
      J.push_back(e);
      auto K = subgroup_closure(g, std::move(J));
      if (found.insert(K).second) work.push_back(K);
    }
  }

  SubgroupClassTable t;
  t.group = G;
  t.subgroups.assign(found.begin(), found.end());
  for (int i = 0; i < t.subgroup_count(); ++i) t.index_of[t.subgroups[i]] = i;

  t.class_of.assign(t.subgroup_count(), -1);
  for (int i = 0; i < t.subgroup_count(); ++i) {
    if (t.class_of[i] >= 0) continue;
    int cls = static_cast<int>(t.class_rep.size());
    // conjugacy orbit; representative is the least member, which is the
    // first one met in the (order, lex)-sorted subgroup list
    t.class_rep.push_back(i);
    for (int e = 0; e < g.order(); ++e) {
      auto C = conjugate_subgroup(g, t.subgroups[i], e);
      int j = t.index_of.at(C);
      if (t.class_of[j] >= 0 && t.class_of[j] != cls)
        throw InternalError("subgroup conjugation produced inconsistent classes");
      t.class_of[j] = cls;
    }
  }
  return t;
}

int SubgroupClassTable::class_of_elements(const std::vector<int>& sorted_elements) const {
  auto it = index_of.find(sorted_elements);
  if (it == index_of.end()) throw InternalError("not a subgroup of this table");
  return class_of[it->second];
}

std::string SubgroupClassTable::class_label(int cls) const {
  int ord = rep_order(cls);
  int k = 0;
  for (int c = 0; c < cls; ++c)
    if (rep_order(c) == ord) ++k;
  std::string s = std::to_string(ord);
  s += static_cast<char>('a' + k);
  return s;
}

SubgroupRef sylow2(GroupPtr G) {
  int n = G->order();
  int pow2 = 1;
  {
    int m = n;
    while (m % 2 == 0) {
      pow2 *= 2;
      m /= 2;
    }
  }
  if (pow2 == 1) return trivial_subgroup(G);
  if (n <= 120) {
    auto classes = subgroup_classes(G);
    for (const auto& H : classes.subgroups)
      if (static_cast<int>(H.size()) == pow2) return SubgroupRef{G, H};
    throw InternalError("no 2-Sylow subgroup found by enumeration");
  }
  // greedy growth: repeatedly adjoin the least element keeping a 2-group
  std::vector<int> P = {FiniteGroup::identity};
  while (static_cast<int>(P.size()) < pow2) {
    bool grown = false;
    for (int e = 0; e < n && !grown; ++e) {
      if (std::binary_search(P.begin(), P.end(), e)) continue;
      auto J = P;
      J.push_back(e);
      auto K = subgroup_closure(*G, std::move(J));
      int k = static_cast<int>(K.size());
      if ((k & (k - 1)) == 0 && k <= pow2) {
        P = std::move(K);
        grown = true;
      }
    }
    if (!grown) throw InternalError("2-Sylow growth stalled");
  }
  return SubgroupRef{G, P};
}

bool is_solvable(const FiniteGroup& G) {
  std::vector<int> D(G.order());
  for (int i = 0; i < G.order(); ++i) D[i] = i;
  while (D.size() > 1) {
    std::set<int> comms;
    for (int a : D)
      for (int b : D) comms.insert(G.commutator(a, b));
    auto next = subgroup_closure(G, std::vector<int>(comms.begin(), comms.end()));
    if (next == D) return false;  // series stalled above the trivial group
    D = std::move(next);
  }
  return true;
}

// ---------------------------------------------------------------------------
// G-sets

void GSet::validate() const {
  const FiniteGroup& G = *group;
  for (int x = 0; x < size; ++x)
    if (apply(FiniteGroup::identity, x) != x)
      throw InternalError("identity does not act trivially");
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      for (int x = 0; x < size; ++x)
        if (apply(G.mul(a, b), x) != apply(a, apply(b, x)))
          throw InternalError("action is not a homomorphism");
}

std::vector<int> GSet::stabilizer(int x) const {
  std::vector<int> s;
  for (int g = 0; g < group->order(); ++g)
    if (apply(g, x) == x) s.push_back(g);
  return s;
}

int GSet::fixed_points(const std::vector<int>& subgroup_elements) const {
  int count = 0;
  for (int x = 0; x < size; ++x) {
    bool fixed = true;
    for (int h : subgroup_elements)
      if (apply(h, x) != x) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

GSet disjoint_union(const GSet& X, const GSet& Y) {
  if (X.group != Y.group) throw Error("disjoint union needs a common group");
  GSet Z;
  Z.group = X.group;
  Z.size = X.size + Y.size;
  Z.act.resize(static_cast<std::size_t>(Z.group->order()) * Z.size);
  for (int g = 0; g < Z.group->order(); ++g) {
    for (int x = 0; x < X.size; ++x) Z.act[static_cast<std::size_t>(g) * Z.size + x] = X.apply(g, x);
    for (int y = 0; y < Y.size; ++y)
      Z.act[static_cast<std::size_t>(g) * Z.size + X.size + y] = X.size + Y.apply(g, y);
  }
  return Z;
}

GSet product(const GSet& X, const GSet& Y) {
  if (X.group != Y.group) throw Error("product needs a common group");
  GSet Z;
  Z.group = X.group;
  Z.size = X.size * Y.size;
  Z.act.resize(static_cast<std::size_t>(Z.group->order()) * Z.size);
  for (int g = 0; g < Z.group->order(); ++g)
    for (int x = 0; x < X.size; ++x)
      for (int y = 0; y < Y.size; ++y)
        Z.act[static_cast<std::size_t>(g) * Z.size + (x * Y.size + y)] =
            X.apply(g, x) * Y.size + Y.apply(g, y);
  return Z;
}

GSet coset_action(GroupPtr G, const SubgroupRef& H) {
  if (H.parent != G) throw Error("subgroup belongs to a different group");
  if (subgroup_closure(*G, H.elements) != H.elements)
    throw Error("element list is not a subgroup");
  const FiniteGroup& g = *G;
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int h : H.elements) coset_of[g.mul(a, h)] = idx;
  }
  GSet X;
  X.group = G;
  X.size = static_cast<int>(reps.size());
  X.act.resize(static_cast<std::size_t>(g.order()) * X.size);
  for (int e = 0; e < g.order(); ++e)
    for (int c = 0; c < X.size; ++c)
      X.act[static_cast<std::size_t>(e) * X.size + c] = coset_of[g.mul(e, reps[c])];
  for (int c = 0; c < X.size; ++c) X.point_labels.push_back("g" + std::to_string(reps[c]) + "H");
  return X;
}

GSet regular_gset(GroupPtr G) { return coset_action(G, trivial_subgroup(G)); }

GSet one_point_gset(GroupPtr G) { return coset_action(G, full_subgroup(G)); }

SubgroupContext subgroup_context(const SubgroupRef& H) {
  const FiniteGroup& G = *H.parent;
  int m = H.order();
  std::vector<int> from_parent(G.order(), -1);
  for (int i = 0; i < m; ++i) from_parent[H.elements[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int p = G.mul(H.elements[a], H.elements[b]);
      if (from_parent[p] < 0) throw Error("element list is not closed under multiplication");
      table[a][b] = from_parent[p];
    }
  SubgroupContext ctx;
  ctx.ref = H;
  ctx.sub = std::make_shared<FiniteGroup>(std::move(table), std::vector<std::string>{}, false);
  ctx.to_parent = H.elements;
  ctx.from_parent = std::move(from_parent);
  return ctx;
}

GSet restrict_gset(const GSet& X, const SubgroupContext& S) {
  GSet Y;
  Y.group = S.sub;
  Y.size = X.size;
  Y.act.resize(static_cast<std::size_t>(S.sub->order()) * X.size);
  for (int s = 0; s < S.sub->order(); ++s)
    for (int x = 0; x < X.size; ++x)
      Y.act[static_cast<std::size_t>(s) * X.size + x] = X.apply(S.to_parent[s], x);
  Y.point_labels = X.point_labels;
  return Y;
}

GSet induce_gset(const SubgroupContext& S, const GSet& X) {
  if (X.group != S.sub) throw Error("induce_gset expects an S-set over the subgroup");
  GroupPtr G = S.ref.parent;
  const FiniteGroup& g = *G;
  // left cosets of S in G; the balanced product G x_S X has canonical point
  // representatives (coset representative, x)
  std::vector<int> coset_of(g.order(), -1), reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int s : S.ref.elements) coset_of[g.mul(a, s)] = idx;
  }
  int nc = static_cast<int>(reps.size());
  GSet Z;
  Z.group = G;
  Z.size = nc * X.size;
  Z.act.resize(static_cast<std::size_t>(g.order()) * Z.size);
  for (int e = 0; e < g.order(); ++e)
    for (int c = 0; c < nc; ++c) {
      int t = g.mul(e, reps[c]);
      int c2 = coset_of[t];
      int s = S.from_parent[g.mul(g.inv(reps[c2]), t)];  // reps[c2] * s == e*reps[c]
      if (s < 0) throw InternalError("coset factorization failed");
      for (int x = 0; x < X.size; ++x)
        Z.act[static_cast<std::size_t>(e) * Z.size + (c * X.size + x)] =
            c2 * X.size + X.apply(s, x);
    }
  return Z;
}

}  // namespace gforms
