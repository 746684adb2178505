#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gforms {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group given by an explicit multiplication table.
///
/// Elements are indices 0..order-1 and element 0 is always the identity.
/// Values are immutable after construction, so sharing via GroupPtr is safe
/// across threads.
class FiniteGroup {
 public:
  /// Validates the identity law, the latin-square property and inverses.
  /// Associativity is checked exhaustively when check_associativity is set
  /// (tables built by closure from permutations are associative by
  /// construction and skip the cubic scan).
  explicit FiniteGroup(std::vector<std::vector<int>> table,
                       std::vector<std::string> labels = {},
                       bool check_associativity = true);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  static constexpr int identity = 0;

  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const;
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int a) const;

  /// Small deterministic generating set (greedy closure over ascending indices).
  std::vector<int> generating_set() const;

  /// Representatives of the conjugacy classes of elements, ascending.
  std::vector<int> element_class_reps() const;

 private:
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

/// Group description accepted by build_group.
struct GroupSpec {
  enum class Kind { Named, Permutations, Table } kind = Kind::Named;
  std::string name;                          // Named: "C 4", "S 3", "Q8", ...
  std::vector<std::vector<int>> generators;  // Permutations: images on 0..n-1
  std::vector<std::vector<int>> table;       // Table: explicit
};

/// Build a group from a description. Deterministic: permutation input is
/// closed breadth-first from the generators in the given order and the
/// closure order is the canonical element order.
GroupPtr build_group(const GroupSpec& spec, std::size_t order_bound = 10000);

GroupPtr group_from_permutations(const std::vector<std::vector<int>>& generators,
                                 std::size_t order_bound = 10000);
GroupPtr group_named(const std::string& name);
GroupPtr group_from_table(std::vector<std::vector<int>> table);

/// A subgroup of a parent group, stored as the sorted list of its elements.
struct SubgroupRef {
  GroupPtr parent;
  std::vector<int> elements;  // sorted, contains 0, closed under mul/inv

  bool contains(int g) const;
  int order() const { return static_cast<int>(elements.size()); }
};

/// Closure of a subset under multiplication and inverses.
std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> seed);

SubgroupRef subgroup_generated(GroupPtr G, const std::vector<int>& gens);
SubgroupRef trivial_subgroup(GroupPtr G);
SubgroupRef full_subgroup(GroupPtr G);

/// Conjugacy classes of subgroups, exhaustively enumerated.
///
/// Subgroups are stored sorted by (order, element list); each class keeps the
/// lexicographically least member as its representative, and classes are
/// ordered by (representative order, representative element list). This
/// ordering makes the table of marks triangular.
struct SubgroupClassTable {
  GroupPtr group;
  std::vector<std::vector<int>> subgroups;  // all subgroups, canonical order
  std::vector<int> class_of;                // subgroup id -> class id
  std::vector<int> class_rep;               // class id -> subgroup id of representative
  std::map<std::vector<int>, int> index_of; // element list -> subgroup id

  int class_count() const { return static_cast<int>(class_rep.size()); }
  int subgroup_count() const { return static_cast<int>(subgroups.size()); }
  const std::vector<int>& representative(int cls) const { return subgroups[class_rep[cls]]; }
  int rep_order(int cls) const { return static_cast<int>(representative(cls).size()); }
  int class_of_elements(const std::vector<int>& sorted_elements) const;

  /// GAP-style label "1a", "2a", "2b", ... by (order, position).
  std::string class_label(int cls) const;
};

SubgroupClassTable subgroup_classes(GroupPtr G, std::size_t order_bound = 120);

/// A 2-Sylow subgroup, deterministically chosen (least element list among all
/// subgroups of maximal 2-power order when exhaustive enumeration is within
/// bounds; greedy normalizer growth otherwise).
SubgroupRef sylow2(GroupPtr G);

/// Derived series reaches the trivial group.
bool is_solvable(const FiniteGroup& G);

/// Finite set with a left group action, stored as an action table.
struct GSet {
  GroupPtr group;
  int size = 0;
  std::vector<int> act;  // act[g*size + x]
  std::vector<std::string> point_labels;

  int apply(int g, int x) const { return act[static_cast<std::size_t>(g) * size + x]; }
  void validate() const;  // identity acts trivially; action is a homomorphism

  std::vector<int> stabilizer(int x) const;  // sorted element list
  int fixed_points(const std::vector<int>& subgroup_elements) const;
};

GSet disjoint_union(const GSet& X, const GSet& Y);
GSet product(const GSet& X, const GSet& Y);

/// Left cosets gH with G acting by left translation. Coset representatives
/// are the least element of each coset, listed in ascending order.
GSet coset_action(GroupPtr G, const SubgroupRef& H);
GSet regular_gset(GroupPtr G);
GSet one_point_gset(GroupPtr G);

/// A subgroup re-packaged as an abstract group, with index translation.
struct SubgroupContext {
  SubgroupRef ref;
  GroupPtr sub;                 // abstract group of the subgroup
  std::vector<int> to_parent;   // sub element -> parent element
  std::vector<int> from_parent; // parent element -> sub element, -1 outside

  int parent_of(int s) const { return to_parent[s]; }
  int sub_of(int g) const { return from_parent[g]; }
};

SubgroupContext subgroup_context(const SubgroupRef& H);

/// Restrict the action of X to a subgroup, as a GSet over the abstract group.
GSet restrict_gset(const GSet& X, const SubgroupContext& S);

/// Balanced product G x_S X for an S-set X, as a G-set.
GSet induce_gset(const SubgroupContext& S, const GSet& X);

}  // namespace gforms
