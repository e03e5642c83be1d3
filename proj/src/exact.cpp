#include "detrep/exact.hpp"

#include <stdexcept>

namespace detrep {

MatrixQ identity_q(int n) {
  MatrixQ m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

MatrixQ multiply(const MatrixQ& a, const MatrixQ& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  MatrixQ r(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("shape mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (sgn(a[i][t]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

Rational det(MatrixQ a) {
  int n = static_cast<int>(a.size());
  Rational d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(a[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (int c = col + 1; c < n; ++c)
        if (sgn(a[col][c]) != 0) a[r][c] -= f * a[col][c];
    }
  }
  return d;
}

int rank(MatrixQ a) {
  int rows = static_cast<int>(a.size());
  if (!rows) return 0;
  int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[i][col]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      Rational f = a[i][col] / a[r][col];
      for (int c = col; c < cols; ++c) a[i][c] -= f * a[r][c];
    }
    ++r;
  }
  return r;
}

MatrixQ inverse(const MatrixQ& in) {
  int n = static_cast<int>(in.size());
  MatrixQ a = in, inv = identity_q(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(a[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (int c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

void RowSpace::reduce(std::vector<Rational>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    int p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    Rational f = v[p];
    for (int c = p; c < dim_; ++c)
      if (sgn(rows_[k][c]) != 0) v[c] -= f * rows_[k][c];
  }
}

bool RowSpace::insert(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  int p = -1;
  for (int c = 0; c < dim_; ++c)
    if (sgn(v[c]) != 0) {
      p = c;
      break;
    }
  if (p < 0) return false;
  Rational s = v[p];
  for (int c = p; c < dim_; ++c) v[c] /= s;
  // keep earlier rows reduced against the new pivot
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Rational f = row[p];
    for (int c = p; c < dim_; ++c) row[c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(std::vector<Rational> v) const {
  reduce(v);
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace detrep
