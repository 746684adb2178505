#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "gforms/group.hpp"
#include "gforms/report.hpp"
#include "gforms/zlattice.hpp"

namespace gforms {

/// Integer polynomial, coefficients ascending by degree.
using ZPoly = std::vector<mpz_class>;

mpz_class zpoly_eval(const ZPoly& f, const mpz_class& x);

class BurnsideRing;
using BurnsideRingPtr = std::shared_ptr<const BurnsideRing>;

/// Element of Burn(G) on the basis {b_{G/H}} indexed by subgroup classes.
struct BurnsideElement {
  BurnsideRingPtr ring;
  ZVec coeffs;  // length = class count, exact integers

  bool operator==(const BurnsideElement& o) const { return coeffs == o.coeffs; }
};

struct SpectralData {
  BurnsideElement element;
  ZVec ghost;        // f_H(x) per subgroup class
  ZPoly char_poly;   // monic of degree h, product of (t - f_H(x))
  mpz_class norm;    // product of all f_H(x)
};

struct DivisionData {
  ZPoly F;       // degree h-1, with x.F(x) = N
  mpz_class N;
};

/// The Burnside ring of a finite group: subgroup classes, table of marks,
/// ghost coordinates, multiplication through the mark matrix.
///
/// Immutable once created; share freely.
class BurnsideRing : public std::enable_shared_from_this<BurnsideRing> {
 public:
  static BurnsideRingPtr create(GroupPtr G, std::size_t subgroup_bound = 120);

  const GroupPtr& group() const { return G_; }
  const SubgroupClassTable& classes() const { return classes_; }
  int rank() const { return classes_.class_count(); }

  /// marks[i][j] = size of (G/K_j)^{H_i}; triangular for the class order used.
  const ZMat& mark_matrix() const { return marks_; }

  BurnsideElement zero() const;
  BurnsideElement one() const;  // b_{G/G}
  BurnsideElement basis(int cls) const;
  BurnsideElement from_coeffs(ZVec c) const;

  BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y) const;
  BurnsideElement sub(const BurnsideElement& x, const BurnsideElement& y) const;
  BurnsideElement scale(const mpz_class& c, const BurnsideElement& x) const;
  BurnsideElement mul(const BurnsideElement& x, const BurnsideElement& y) const;

  /// Orbit decomposition of a finite G-set into basis elements.
  BurnsideElement decompose(const GSet& X) const;

  /// Ghost vector (f_H(x)) for H over the subgroup classes.
  ZVec marks_of(const BurnsideElement& x) const;

  /// Solve marks * c = ghost; nullopt when the solution is not integral.
  std::optional<ZVec> coeffs_from_marks(const ZVec& ghost) const;

  SpectralData spectral(const BurnsideElement& x) const;

  /// Division polynomial: F with x.F(x) = N(x), verified before returning.
  /// When assert_prime_to > 0, additionally requires gcd(N, p) = 1 (the
  /// p-group fixed-point congruence argument).
  DivisionData division_polynomial(const BurnsideElement& x, long assert_prime_to = 0) const;

 private:
  GroupPtr G_;
  SubgroupClassTable classes_;
  ZMat marks_;
};

/// Additive induction Burn(S) -> Burn(G) via the balanced product.
BurnsideElement induce(const BurnsideRingPtr& big, const SubgroupContext& S,
                       const BurnsideElement& x);

/// Restriction Burn(G) -> Burn(S): re-decompose each basis G-set as an S-set.
BurnsideElement restrict_to(const BurnsideRingPtr& small, const SubgroupContext& S,
                            const BurnsideElement& y);

struct ConnectivityResult {
  bool connected = true;
  std::optional<BurnsideElement> idempotent;  // nontrivial witness when disconnected
};

/// All idempotents of Burn(G) from 0/1 ghost vectors; connected iff only the
/// trivial ones pull back integrally.
ConnectivityResult spec_connected(const BurnsideRingPtr& ring, int class_bound = 20);

/// Runs the projection-formula identity suite for the pair (Burn(S), Burn(G)).
/// Identities checked on all basis pairs; kernel comparison is exact lattice
/// equality. Throws InternalError with a witness on any failed identity.
struct ProjectionResult {
  CheckReport report;
  ZPoly F;
  mpz_class n;
  BurnsideElement Q;  // induced unit, in Burn(G)
  BurnsideElement q;  // restricted back, in Burn(S)
};

ProjectionResult projection_suite(const BurnsideRingPtr& big, const BurnsideRingPtr& small,
                                  const SubgroupContext& S);

}  // namespace gforms
