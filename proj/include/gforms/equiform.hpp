#pragma once

#include <optional>
#include <vector>

#include "gforms/fqmatrix.hpp"
#include "gforms/group.hpp"

namespace gforms {

/// A k[G]-module in matrix form: one invertible matrix per group element.
struct ModuleRep {
  FqPtr field;
  GroupPtr group;
  int dim = 0;
  std::vector<FqMat> rep;  // indexed by group element

  void validate() const;  // homomorphism with invertible values
  ModuleRep dual() const; // contragredient action (inverse transpose)
  bool same_matrices(const ModuleRep& o) const;
};

ModuleRep trivial_module(FqPtr F, GroupPtr G, int dim);
ModuleRep permutation_module(const GSet& X, FqPtr F);
ModuleRep module_sum(const ModuleRep& a, const ModuleRep& b);

/// G-equivariant eps-symmetric bilinear space over F_q: Gram matrix plus the
/// module action preserving it. All invariants are checked on construction.
struct EquivariantSpace {
  FqPtr field;
  GroupPtr group;
  int epsilon = 1;  // +1 or -1
  int dim = 0;
  FqMat gram;
  std::vector<FqMat> rep;

  ModuleRep module() const;
  void validate() const;
};

EquivariantSpace make_space(FqPtr F, GroupPtr G, int epsilon, FqMat gram,
                            std::vector<FqMat> rep);

/// The form with the same module and Gram scaled by a nonzero constant.
EquivariantSpace scale_form(const EquivariantSpace& X, FqElem c);
inline EquivariantSpace negate_form(const EquivariantSpace& X) {
  return scale_form(X, X.field->neg(X.field->one()));
}

EquivariantSpace orthogonal_sum(const EquivariantSpace& X, const EquivariantSpace& Y);
EquivariantSpace repeat_form(const EquivariantSpace& X, int n);  // n-fold sum

/// (V, q) tensor X for a plain nonsingular symmetric V with no group action.
EquivariantSpace tensor_scalar_form(const FqMat& plain_gram, const EquivariantSpace& X);

/// Hyperbolic space on N + N^*: Gram [[0, I], [eps I, 0]] with the dual
/// action on the second summand.
EquivariantSpace hyperbolic(const ModuleRep& N, int epsilon);

/// Induced form: block-orthogonal sum over cosets with the subgroup twist.
EquivariantSpace induce_form(const SubgroupContext& S, const EquivariantSpace& X);

/// Same Gram, action restricted to the subgroup.
EquivariantSpace restrict_form(const SubgroupContext& S, const EquivariantSpace& X);

/// Orthonormal permutation form of a G-set.
EquivariantSpace permutation_form(const GSet& X, FqPtr F);

/// Same matrices read in the extension field of the given relative degree.
EquivariantSpace extend_scalars(const EquivariantSpace& X, const FieldExt& ext);

/// Scharlau transfer along s(z) = Tr_{K/k}(a z) for a nonzero twist a in K.
/// X must live over ext.big with the group acting; the result lives over
/// ext.small on the same underlying set of vectors.
EquivariantSpace scharlau_transfer(const EquivariantSpace& X, const FieldExt& ext,
                                   FqElem twist);

/// Gram of the rank-m form z -> Tr(a z^2) on the power basis of the extension.
FqMat transfer_unit_gram(const FieldExt& ext, FqElem twist);

/// Witt invariants of a plain nonsingular symmetric form: (rank mod 2, square
/// class of the signed determinant). Two plain forms over the same F_q are
/// Witt-equivalent iff these agree.
struct WittClassPlain {
  int rank_mod2 = 0;
  bool disc_square = true;

  bool operator==(const WittClassPlain& o) const {
    return rank_mod2 == o.rank_mod2 && disc_square == o.disc_square;
  }
};

WittClassPlain witt_class_plain(const FqPtr& F, const FqMat& gram);

/// First twist a (packed order) whose transfer form is Witt-equivalent to the
/// unit form; exists whenever the extension degree is odd.
FqElem scharlau_section(const FieldExt& ext);

/// Intertwiner space Hom_{k[G]}(M_X, M_Y) as matrices, deterministic basis.
std::vector<FqMat> hom_space(const ModuleRep& X, const ModuleRep& Y);

/// Deterministic search for an invertible intertwiner. Scans single basis
/// elements and pair sums first, then the full coefficient odometer under
/// the budget.
std::optional<FqMat> find_module_isomorphism(const ModuleRep& X, const ModuleRep& Y,
                                             std::uint64_t budget = 1ull << 24);

}  // namespace gforms
