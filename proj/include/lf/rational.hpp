#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lf {

using Q = mpq_class;
using Vec = std::vector<Q>;

struct SingularError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p" or "p/q" in lowest terms.
std::string to_string(const Q& q);
Q parse_q(const std::string& text);

Q qpow(const Q& base, long e);

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static Matrix identity(int n);

  int size() const { return n_; }
  Q& operator()(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  const Q& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }
  Vec column(int c) const;
  bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<Q> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

Q det(Matrix m);
// Determinant of the leading i x i block; 1 for i = 0.
Q leading_minor(const Matrix& m, int i);
// Determinant of rows `rows` and columns `cols`.
Q minor(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

// Coefficients x with sum_k x_k cols[k] = v. Throws SingularError when the
// columns are dependent or v is outside their span.
Vec solve_columns(const std::vector<Vec>& cols, const Vec& v);

int rank(std::vector<Vec> rows);

}  // namespace lf
