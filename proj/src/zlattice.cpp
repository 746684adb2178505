#include "gforms/zlattice.hpp"

#include <algorithm>

#include "gforms/errors.hpp"

namespace gforms {

namespace {

bool is_zero_row(const ZVec& r) {
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace

ZMat hnf_rows(ZMat A) {
  if (A.empty()) return A;
  std::size_t n = A[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < A.size(); ++col) {
    // Euclidean elimination in this column below `row`
    while (true) {
      std::size_t piv = row;
      bool any = false;
      for (std::size_t i = row; i < A.size(); ++i)
        if (A[i][col] != 0) {
          if (!any || cmp(abs(A[i][col]), abs(A[piv][col])) < 0) piv = i;
          any = true;
        }
      if (!any) break;
      std::swap(A[row], A[piv]);
      bool done = true;
      for (std::size_t i = row + 1; i < A.size(); ++i) {
        if (A[i][col] == 0) continue;
        mpz_class q = A[i][col] / A[row][col];  // truncated division is fine here
        if (q != 0)
          for (std::size_t j = 0; j < n; ++j) A[i][j] -= q * A[row][j];
        if (A[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (A[row][col] == 0) continue;
    if (A[row][col] < 0)
      for (std::size_t j = 0; j < n; ++j) A[row][j] = -A[row][j];
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), A[i][col].get_mpz_t(), A[row][col].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) A[i][j] -= q * A[row][j];
    }
    ++row;
  }
  A.resize(row);
  return A;
}

ZMat kernel_basis(const ZMat& A) {
  if (A.empty()) return {};
  std::size_t m = A.size(), n = A[0].size();
  // Row-reduce [A^T | I_n] with unimodular row operations; rows whose A^T part
  // vanished carry a kernel basis vector in the I_n part.
  ZMat W(n, ZVec(m + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) W[i][j] = A[j][i];
    W[i][m + i] = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    while (true) {
      std::size_t piv = row;
      bool any = false;
      for (std::size_t i = row; i < n; ++i)
        if (W[i][col] != 0) {
          if (!any || cmp(abs(W[i][col]), abs(W[piv][col])) < 0) piv = i;
          any = true;
        }
      if (!any) break;
      std::swap(W[row], W[piv]);
      bool done = true;
      for (std::size_t i = row + 1; i < n; ++i) {
        if (W[i][col] == 0) continue;
        mpz_class q = W[i][col] / W[row][col];
        if (q != 0)
          for (std::size_t j = 0; j < m + n; ++j) W[i][j] -= q * W[row][j];
        if (W[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (W[row][col] != 0) ++row;
  }
  ZMat K;
  for (std::size_t i = row; i < n; ++i) {
    ZVec v(W[i].begin() + m, W[i].end());
    ZVec chk(m, 0);
    for (std::size_t j = 0; j < m; ++j) chk[j] = W[i][j];
    if (!is_zero_row(chk)) throw InternalError("kernel extraction failed");
    K.push_back(std::move(v));
  }
  return hnf_rows(std::move(K));
}

int rank_rational(ZMat A) {
  A = hnf_rows(std::move(A));
  return static_cast<int>(A.size());
}

bool lattice_equal(const ZMat& A, const ZMat& B) {
  return hnf_rows(A) == hnf_rows(B);
}

bool lattice_contains(const ZMat& B, const ZVec& v) {
  ZMat ext = B;
  ext.push_back(v);
  return lattice_equal(B, ext);
}

bool lattice_intersection_trivial(const ZMat& A, const ZMat& B) {
  // rank(A) + rank(B) == rank(A stacked on B) iff the rational spans meet
  // trivially, which implies the lattices do.
  ZMat S = A;
  S.insert(S.end(), B.begin(), B.end());
  return rank_rational(A) + rank_rational(B) == rank_rational(S);
}

ZVec mat_apply(const ZMat& A, const ZVec& x) {
  ZVec r(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += A[i][j] * x[j];
  return r;
}

ZMat mat_mul(const ZMat& A, const ZMat& B) {
  if (A.empty() || B.empty()) return {};
  ZMat C(A.size(), ZVec(B[0].size(), 0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < B.size(); ++k) {
      if (A[i][k] == 0) continue;
      for (std::size_t j = 0; j < B[0].size(); ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

}  // namespace gforms
