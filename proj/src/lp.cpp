#include "simplexhull/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace simplexhull::lp {
namespace {

constexpr double kPivotTol = 1e-12;

// Tableau rows 0..m-1 hold constraints, row m the reduced costs; the last
// column is the right-hand side.
class Tableau {
 public:
  Tableau(Matrixd t, std::vector<int> basis) : t_(std::move(t)), basis_(std::move(basis)) {}

  int rows() const { return static_cast<int>(t_.rows()) - 1; }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  Matrixd& data() { return t_; }
  std::vector<int>& basis() { return basis_; }

  void pivot(int r, int c) {
    t_.row(r) /= t_(r, c);
    for (int i = 0; i < t_.rows(); ++i)
      if (i != r && t_(i, c) != 0.0) t_.row(i) -= t_(i, c) * t_.row(r);
    basis_[static_cast<std::size_t>(r)] = c;
  }

  /// Runs Bland's rule over columns [0, active_cols). Returns false if unbounded.
  bool optimize(int active_cols) {
    const int m = rows();
    const int rhs = cols();
    for (int iter = 0; iter < 10000; ++iter) {
      int enter = -1;
      for (int j = 0; j < active_cols; ++j)
        if (t_(m, j) < -1e-12) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        if (t_(i, enter) <= kPivotTol) continue;
        const double ratio = t_(i, rhs) / t_(i, enter);
        if (ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && basis_[static_cast<std::size_t>(i)] <
                                                   basis_[static_cast<std::size_t>(leave)])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    return true;
  }

 private:
  Matrixd t_;
  std::vector<int> basis_;
};

}  // namespace

Solution minimize(const Matrixd& a, const Vectord& b, const Vectord& c, double feasibility_tol) {
  const int m = static_cast<int>(a.rows());
  const int nv = static_cast<int>(a.cols());
  if (b.size() != m || c.size() != nv) throw InputError("lp::minimize: dimension mismatch");

  // Phase one: artificials in columns nv..nv+m-1.
  Matrixd t = Matrixd::Zero(m + 1, nv + m + 1);
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double sign = b(i) < 0 ? -1.0 : 1.0;
    t.row(i).head(nv) = sign * a.row(i);
    t(i, nv + i) = 1.0;
    t(i, nv + m) = sign * b(i);
    basis[static_cast<std::size_t>(i)] = nv + i;
  }
  for (int i = 0; i < m; ++i) t.row(m) -= t.row(i);
  for (int i = 0; i < m; ++i) t(m, nv + i) = 0.0;

  Tableau tab(std::move(t), std::move(basis));
  tab.optimize(nv + m);

  Solution out;
  out.infeasibility = -tab.data()(m, nv + m);
  if (out.infeasibility > feasibility_tol) {
    out.status = Status::kInfeasible;
    return out;
  }

  // Drive remaining artificials out of the basis; rows where that is
  // impossible are redundant and get zeroed.
  for (int i = 0; i < m; ++i) {
    if (tab.basis()[static_cast<std::size_t>(i)] < nv) continue;
    int col = -1;
    for (int j = 0; j < nv; ++j)
      if (std::abs(tab.data()(i, j)) > 1e-9) {
        col = j;
        break;
      }
    if (col >= 0) {
      tab.pivot(i, col);
    } else {
      tab.data().row(i).setZero();
    }
  }

  // Phase two on the original columns.
  auto& data = tab.data();
  data.row(m).setZero();
  data.row(m).head(nv) = c.transpose();
  for (int i = 0; i < m; ++i) {
    const int bi = tab.basis()[static_cast<std::size_t>(i)];
    if (bi < nv && data(m, bi) != 0.0) data.row(m) -= data(m, bi) * data.row(i);
  }
  if (!tab.optimize(nv)) {
    out.status = Status::kUnbounded;
    return out;
  }

  out.status = Status::kOptimal;
  out.x = Vectord::Zero(nv);
  for (int i = 0; i < m; ++i) {
    const int bi = tab.basis()[static_cast<std::size_t>(i)];
    if (bi < nv) out.x(bi) = std::max(0.0, data(i, nv + m));
  }
  out.objective = c.dot(out.x);
  return out;
}

}  // namespace simplexhull::lp
