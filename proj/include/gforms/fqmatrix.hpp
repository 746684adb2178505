#pragma once

#include <optional>
#include <vector>

#include "gforms/fq.hpp"

namespace gforms {

using FqVec = std::vector<FqElem>;

/// Dense matrix over a finite field.
class FqMat {
 public:
  FqMat() = default;
  FqMat(FqPtr F, int rows, int cols)
      : F_(std::move(F)), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static FqMat identity(FqPtr F, int n);
  static FqMat from_rows(FqPtr F, const std::vector<FqVec>& rows);

  const FqPtr& field() const { return F_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FqElem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  FqElem at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const FqVec& data() const { return a_; }

  FqMat mul(const FqMat& o) const;
  FqMat add(const FqMat& o) const;
  FqMat sub(const FqMat& o) const;
  FqMat scale(FqElem c) const;
  FqMat transpose() const;
  FqMat kron(const FqMat& o) const;

  FqVec apply(const FqVec& v) const;        // M v
  FqVec apply_left(const FqVec& v) const;   // v^T M

  FqElem det() const;
  int rank() const;
  std::optional<FqMat> inverse() const;
  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const FqMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  /// Block-diagonal stack of this and o.
  FqMat block_diag(const FqMat& o) const;

 private:
  FqPtr F_;
  int rows_ = 0, cols_ = 0;
  FqVec a_;
};

/// Basis (as rows) of {x : A x = 0}; reduced-echelon construction, so the
/// result is deterministic for a given input.
std::vector<FqVec> nullspace(const FqMat& A);

/// Row-space membership oracle: fix a list of row vectors once, then express
/// arbitrary vectors in their span.
class SpanSolver {
 public:
  SpanSolver(FqPtr F, int width);

  /// Returns true when v enlarged the span.
  bool insert(const FqVec& v);
  bool contains(const FqVec& v) const;
  /// Coefficients over the *inserted* vectors when v is in the span.
  std::optional<FqVec> express(const FqVec& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  FqPtr F_;
  int width_;
  // echelon rows plus the bookkeeping that maps them back to inserts
  std::vector<FqVec> rows_;     // reduced rows
  std::vector<FqVec> combo_;    // combo_[k] = coefficients of rows_[k] over inserted vectors
  std::vector<int> pivot_;      // pivot column of rows_[k]
  int inserted_ = 0;
};

FqVec vec_add(const FqPtr& F, const FqVec& a, const FqVec& b);
FqVec vec_sub(const FqPtr& F, const FqVec& a, const FqVec& b);
FqVec vec_scale(const FqPtr& F, FqElem c, const FqVec& a);
bool vec_is_zero(const FqVec& a);

}  // namespace gforms
