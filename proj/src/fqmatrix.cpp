#include "gforms/fqmatrix.hpp"

#include <algorithm>

#include "gforms/errors.hpp"

namespace gforms {

FqMat FqMat::identity(FqPtr F, int n) {
  FqMat m(std::move(F), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = m.F_->one();
  return m;
}

FqMat FqMat::from_rows(FqPtr F, const std::vector<FqVec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  FqMat m(std::move(F), r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

FqMat FqMat::mul(const FqMat& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch in mul");
  FqMat r(F_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      FqElem aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = F_->add(r.at(i, j), F_->mul(aik, o.at(k, j)));
    }
  return r;
}

FqMat FqMat::add(const FqMat& o) const {
  FqMat r(F_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
  return r;
}

FqMat FqMat::sub(const FqMat& o) const {
  FqMat r(F_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], o.a_[i]);
  return r;
}

FqMat FqMat::scale(FqElem c) const {
  FqMat r(F_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(c, a_[i]);
  return r;
}

FqMat FqMat::transpose() const {
  FqMat r(F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

FqMat FqMat::kron(const FqMat& o) const {
  FqMat r(F_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      FqElem c = at(i, j);
      if (c == 0) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = F_->mul(c, o.at(k, l));
    }
  return r;
}

FqVec FqMat::apply(const FqVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("vector length mismatch");
  FqVec r(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    FqElem acc = 0;
    for (int j = 0; j < cols_; ++j) acc = F_->add(acc, F_->mul(at(i, j), v[j]));
    r[i] = acc;
  }
  return r;
}

FqVec FqMat::apply_left(const FqVec& v) const {
  if (static_cast<int>(v.size()) != rows_) throw Error("vector length mismatch");
  FqVec r(cols_, 0);
  for (int j = 0; j < cols_; ++j) {
    FqElem acc = 0;
    for (int i = 0; i < rows_; ++i) acc = F_->add(acc, F_->mul(v[i], at(i, j)));
    r[j] = acc;
  }
  return r;
}

FqElem FqMat::det() const {
  if (rows_ != cols_) throw Error("determinant of a non-square matrix");
  FqMat w = *this;
  FqElem d = F_->one();
  for (int col = 0; col < cols_; ++col) {
    int piv = -1;
    for (int i = col; i < rows_; ++i)
      if (w.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(col, j));
      d = F_->neg(d);
    }
    d = F_->mul(d, w.at(col, col));
    FqElem inv = F_->inv(w.at(col, col));
    for (int i = col + 1; i < rows_; ++i) {
      FqElem f = F_->mul(w.at(i, col), inv);
      if (f == 0) continue;
      for (int j = col; j < cols_; ++j)
        w.at(i, j) = F_->sub(w.at(i, j), F_->mul(f, w.at(col, j)));
    }
  }
  return d;
}

int FqMat::rank() const {
  FqMat w = *this;
  int r = 0;
  for (int col = 0; col < cols_ && r < rows_; ++col) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (w.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(r, j));
    FqElem inv = F_->inv(w.at(r, col));
    for (int i = r + 1; i < rows_; ++i) {
      FqElem f = F_->mul(w.at(i, col), inv);
      if (f == 0) continue;
      for (int j = col; j < cols_; ++j)
        w.at(i, j) = F_->sub(w.at(i, j), F_->mul(f, w.at(r, j)));
    }
    ++r;
  }
  return r;
}

std::optional<FqMat> FqMat::inverse() const {
  if (rows_ != cols_) throw Error("inverse of a non-square matrix");
  FqMat w = *this;
  FqMat inv = identity(F_, rows_);
  for (int col = 0; col < cols_; ++col) {
    int piv = -1;
    for (int i = col; i < rows_; ++i)
      if (w.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < cols_; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    FqElem f = F_->inv(w.at(col, col));
    for (int j = 0; j < cols_; ++j) {
      w.at(col, j) = F_->mul(f, w.at(col, j));
      inv.at(col, j) = F_->mul(f, inv.at(col, j));
    }
    for (int i = 0; i < rows_; ++i) {
      if (i == col) continue;
      FqElem g = w.at(i, col);
      if (g == 0) continue;
      for (int j = 0; j < cols_; ++j) {
        w.at(i, j) = F_->sub(w.at(i, j), F_->mul(g, w.at(col, j)));
        inv.at(i, j) = F_->sub(inv.at(i, j), F_->mul(g, inv.at(col, j)));
      }
    }
  }
  return inv;
}

bool FqMat::is_zero() const {
  for (auto v : a_)
    if (v != 0) return false;
  return true;
}

bool FqMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? F_->one() : F_->zero())) return false;
  return true;
}

FqMat FqMat::block_diag(const FqMat& o) const {
  FqMat r(F_, rows_ + o.rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
  return r;
}

std::vector<FqVec> nullspace(const FqMat& A) {
  const FqPtr& F = A.field();
  int m = A.rows(), n = A.cols();
  FqMat w = A;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (w.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(r, j));
    FqElem f = F->inv(w.at(r, col));
    for (int j = 0; j < n; ++j) w.at(r, j) = F->mul(f, w.at(r, j));
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      FqElem g = w.at(i, col);
      if (g == 0) continue;
      for (int j = 0; j < n; ++j) w.at(i, j) = F->sub(w.at(i, j), F->mul(g, w.at(r, j)));
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<FqVec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FqVec v(n, 0);
    v[free] = F->one();
    for (int k = 0; k < r; ++k) v[pivot_col[k]] = F->neg(w.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

SpanSolver::SpanSolver(FqPtr F, int width) : F_(std::move(F)), width_(width) {}

bool SpanSolver::insert(const FqVec& v) {
  if (static_cast<int>(v.size()) != width_) throw Error("span width mismatch");
  FqVec w = v;
  FqVec combo(inserted_ + 1, 0);
  combo[inserted_] = F_->one();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    FqElem c = w[pivot_[k]];
    if (c == 0) continue;
    for (int j = 0; j < width_; ++j) w[j] = F_->sub(w[j], F_->mul(c, rows_[k][j]));
    for (std::size_t j = 0; j < combo_[k].size(); ++j)
      combo[j] = F_->sub(combo[j], F_->mul(c, combo_[k][j]));
  }
  ++inserted_;
  int piv = -1;
  for (int j = 0; j < width_; ++j)
    if (w[j] != 0) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  FqElem inv = F_->inv(w[piv]);
  for (int j = 0; j < width_; ++j) w[j] = F_->mul(inv, w[j]);
  for (auto& c : combo) c = F_->mul(inv, c);
  // keep earlier rows reduced against the new pivot
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    FqElem c = rows_[k][piv];
    if (c == 0) continue;
    for (int j = 0; j < width_; ++j)
      rows_[k][j] = F_->sub(rows_[k][j], F_->mul(c, w[j]));
    combo_[k].resize(combo.size(), 0);
    for (std::size_t j = 0; j < combo.size(); ++j)
      combo_[k][j] = F_->sub(combo_[k][j], F_->mul(c, combo[j]));
  }
  rows_.push_back(std::move(w));
  combo_.push_back(std::move(combo));
  pivot_.push_back(piv);
  return true;
}

bool SpanSolver::contains(const FqVec& v) const {
  FqVec w = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    FqElem c = w[pivot_[k]];
    if (c == 0) continue;
    for (int j = 0; j < width_; ++j) w[j] = F_->sub(w[j], F_->mul(c, rows_[k][j]));
  }
  return vec_is_zero(w);
}

std::optional<FqVec> SpanSolver::express(const FqVec& v) const {
  FqVec w = v;
  FqVec coeff(inserted_, 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    FqElem c = w[pivot_[k]];
    if (c == 0) continue;
    for (int j = 0; j < width_; ++j) w[j] = F_->sub(w[j], F_->mul(c, rows_[k][j]));
    for (std::size_t j = 0; j < combo_[k].size(); ++j)
      coeff[j] = F_->add(coeff[j], F_->mul(c, combo_[k][j]));
  }
  if (!vec_is_zero(w)) return std::nullopt;
  return coeff;
}

FqVec vec_add(const FqPtr& F, const FqVec& a, const FqVec& b) {
  FqVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F->add(a[i], b[i]);
  return r;
}

FqVec vec_sub(const FqPtr& F, const FqVec& a, const FqVec& b) {
  FqVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F->sub(a[i], b[i]);
  return r;
}

FqVec vec_scale(const FqPtr& F, FqElem c, const FqVec& a) {
  FqVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F->mul(c, a[i]);
  return r;
}

bool vec_is_zero(const FqVec& a) {
  for (auto v : a)
    if (v != 0) return false;
  return true;
}

}  // namespace gforms
