#include "lf/rational.hpp"

#include <utility>

namespace lf {

std::string to_string(const Q& q) { return q.get_str(); }

Q parse_q(const std::string& text) {
  Q q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("not a rational: " + text);
  q.canonicalize();
  return q;
}

Q qpow(const Q& base, long e) {
  if (e == 0) return Q(1);
  if (e < 0) {
    if (base == 0) throw SingularError("zero to a negative power");
    return qpow(Q(1) / base, -e);
  }
  Q r(1), b(base);
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Matrix::column(int c) const {
  Vec v(n_);
  for (int r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  int n = a.size();
  Matrix m(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      if (a(r, k) == 0) continue;
      for (int c = 0; c < n; ++c) m(r, c) += a(r, k) * b(k, c);
    }
  return m;
}

Q det(Matrix m) {
  int n = m.size();
  Q d(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Q(0);
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(m(c, k), m(p, k));
      d = -d;
    }
    d *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Q f = m(r, c) / m(c, c);
      for (int k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return d;
}

Q minor(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  int k = static_cast<int>(rows.size());
  Matrix s(k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) s(r, c) = m(rows[r], cols[c]);
  return det(std::move(s));
}

Q leading_minor(const Matrix& m, int i) {
  if (i == 0) return Q(1);
  Matrix s(i);
  for (int r = 0; r < i; ++r)
    for (int c = 0; c < i; ++c) s(r, c) = m(r, c);
  return det(std::move(s));
}

Vec solve_columns(const std::vector<Vec>& cols, const Vec& v) {
  int n = static_cast<int>(v.size());
  int m = static_cast<int>(cols.size());
  std::vector<Vec> a(n, Vec(m + 1));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < m; ++k) a[r][k] = cols[k][r];
    a[r][m] = v[r];
  }
  int row = 0;
  for (int c = 0; c < m; ++c) {
    int p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw SingularError("dependent columns");
    std::swap(a[row], a[p]);
    Q pv = a[row][c];
    for (int k = c; k <= m; ++k) a[row][k] /= pv;
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Q f = a[r][c];
      for (int k = c; k <= m; ++k) a[r][k] -= f * a[row][k];
    }
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (a[r][m] != 0) throw SingularError("vector outside the column span");
  Vec x(m);
  for (int k = 0; k < m; ++k) x[k] = a[k][m];
  return x;
}

int rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  int cols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[r], rows[p]);
    for (size_t q = r + 1; q < rows.size(); ++q) {
      if (rows[q][c] == 0) continue;
      Q f = rows[q][c] / rows[r][c];
      for (int k = c; k < cols; ++k) rows[q][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace lf
