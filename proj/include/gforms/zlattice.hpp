#pragma once

#include <gmpxx.h>

#include <vector>

namespace gforms {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // rows

/// Canonical row Hermite normal form: zero rows dropped, pivots positive,
/// entries above each pivot reduced into [0, pivot). Two row sets generate
/// the same lattice iff their HNFs are identical.
ZMat hnf_rows(ZMat A);

/// Basis (as rows) of the integer kernel {x : A x = 0} of an m x n matrix.
/// The returned lattice is the full kernel, hence saturated.
ZMat kernel_basis(const ZMat& A);

/// Rank over the rationals.
int rank_rational(ZMat A);

/// Lattice generated by the rows of A equals the one generated by rows of B.
bool lattice_equal(const ZMat& A, const ZMat& B);

/// v lies in the lattice generated by the rows of B.
bool lattice_contains(const ZMat& B, const ZVec& v);

/// The lattices generated by the rows of A and B intersect trivially.
bool lattice_intersection_trivial(const ZMat& A, const ZMat& B);

ZVec mat_apply(const ZMat& A, const ZVec& x);   // A x
ZMat mat_mul(const ZMat& A, const ZMat& B);

}  // namespace gforms
