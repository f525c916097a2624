#ifndef BCUBE_EXACT_SOLVE_HPP
#define BCUBE_EXACT_SOLVE_HPP

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace bcube {

/// Solves A x = b over an exact field by Gauss-Jordan elimination with
/// first-nonzero pivoting. Returns nullopt if the system is inconsistent;
/// free variables are set to zero.
template <class S, int Rows, int Cols>
std::optional<Eigen::Matrix<S, Cols, 1>> solve_exact(Eigen::Matrix<S, Rows, Cols> A, Eigen::Matrix<S, Rows, 1> b) {
  const int rows = static_cast<int>(A.rows()), cols = static_cast<int>(A.cols());
  const S zero = S(0);
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && A(p, c) == zero) ++p;
    if (p == rows) continue;
    A.row(p).swap(A.row(r));
    std::swap(b(p), b(r));
    const S inv = S(1) / A(r, c);
    A.row(r) *= inv;
    b(r) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A(i, c) == zero) continue;
      const S m = A(i, c);
      A.row(i) -= A.row(r) * m;
      b(i) -= m * b(r);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!(b(i) == zero)) return std::nullopt;
  Eigen::Matrix<S, Cols, 1> x(cols);
  for (int j = 0; j < cols; ++j) x(j) = zero;
  for (int i = 0; i < r; ++i) x(pivot_col[i]) = b(i);
  return x;
}

}  // namespace bcube

#endif  // BCUBE_EXACT_SOLVE_HPP
