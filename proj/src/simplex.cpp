#include "simplex.hpp"

#include <algorithm>
#include <cmath>

#include "lsa/error.hpp"

namespace lsa::detail {

namespace {
constexpr int kRefactorInterval = 64;
// Consecutive degenerate pivots before switching to Bland's rule.
constexpr int kDegenerateLimit = 50;
constexpr double kPivotTolerance = 1e-9;
}  // namespace

RestrictedMaster::RestrictedMaster(int num_agents, int num_cells, double tolerance)
    : num_agents_(num_agents), num_cells_(num_cells), tol_(tolerance) {
  const int m = rows();
  basis_.resize(m);
  basis_row_.assign(num_cells_, -1);
  inverse_.assign(static_cast<std::size_t>(m) * m, 0.0);
  x_basic_.assign(m, 1.0);
  for (int r = 0; r < m; ++r) inverse_[static_cast<std::size_t>(r) * m + r] = 1.0;
  for (int c = 0; c < num_cells_; ++c) {
    basis_[num_agents_ + c] = c;
    basis_row_[c] = num_agents_ + c;
  }
  for (int i = 0; i < num_agents_; ++i) {
    const int col = add_column(i, {}, 0.0);
    basis_[i] = num_cells_ + col;
    basis_row_[num_cells_ + col] = i;
  }
}

int RestrictedMaster::add_column(int agent, std::vector<int> cells, double cost) {
  columns_.push_back({agent, std::move(cells), cost});
  basis_row_.push_back(-1);
  return num_columns() - 1;
}

double RestrictedMaster::variable_cost(int var) const {
  return var < num_cells_ ? 0.0 : columns_[var - num_cells_].cost;
}

void RestrictedMaster::column_rows(int var, std::vector<int>& out) const {
  out.clear();
  if (var < num_cells_) {
    out.push_back(num_agents_ + var);
    return;
  }
  const Column& col = columns_[var - num_cells_];
  out.push_back(col.agent);
  for (const int cell : col.cells) out.push_back(num_agents_ + cell);
}

void RestrictedMaster::refactor() {
  const int m = rows();
  const auto at = [m](std::vector<double>& mat, int r, int c) -> double& {
    return mat[static_cast<std::size_t>(r) * m + c];
  };
  std::vector<double> basis_matrix(static_cast<std::size_t>(m) * m, 0.0);
  std::vector<int> idx;
  for (int c = 0; c < m; ++c) {
    column_rows(basis_[c], idx);
    for (const int r : idx) at(basis_matrix, r, c) = 1.0;
  }
  // Gauss-Jordan with partial pivoting on [B | I].
  std::vector<double> inv(static_cast<std::size_t>(m) * m, 0.0);
  for (int r = 0; r < m; ++r) at(inv, r, r) = 1.0;
  for (int c = 0; c < m; ++c) {
    int best = c;
    for (int r = c + 1; r < m; ++r) {
      if (std::abs(at(basis_matrix, r, c)) > std::abs(at(basis_matrix, best, c))) best = r;
    }
    if (std::abs(at(basis_matrix, best, c)) < 1e-12) {
      throw InternalError("restricted master basis became singular");
    }
    if (best != c) {
      for (int k = 0; k < m; ++k) {
        std::swap(at(basis_matrix, best, k), at(basis_matrix, c, k));
        std::swap(at(inv, best, k), at(inv, c, k));
      }
    }
    const double p = at(basis_matrix, c, c);
    for (int k = 0; k < m; ++k) {
      at(basis_matrix, c, k) /= p;
      at(inv, c, k) /= p;
    }
    for (int r = 0; r < m; ++r) {
      if (r == c) continue;
      const double f = at(basis_matrix, r, c);
      if (f == 0.0) continue;
      for (int k = 0; k < m; ++k) {
        at(basis_matrix, r, k) -= f * at(basis_matrix, c, k);
        at(inv, r, k) -= f * at(inv, c, k);
      }
    }
  }
  inverse_ = std::move(inv);
  // b is the all-ones vector.
  for (int r = 0; r < m; ++r) {
    double s = 0.0;
    for (int k = 0; k < m; ++k) s += inverse_[static_cast<std::size_t>(r) * m + k];
    x_basic_[r] = s;
  }
  since_refactor_ = 0;
}

void RestrictedMaster::pivot(int row, int var, const std::vector<double>& direction) {
  const int m = rows();
  double* prow = &inverse_[static_cast<std::size_t>(row) * m];
  const double p = direction[row];
  for (int k = 0; k < m; ++k) prow[k] /= p;
  x_basic_[row] /= p;
  for (int r = 0; r < m; ++r) {
    if (r == row || direction[r] == 0.0) continue;
    const double f = direction[r];
    double* rr = &inverse_[static_cast<std::size_t>(r) * m];
    for (int k = 0; k < m; ++k) rr[k] -= f * prow[k];
    x_basic_[r] -= f * x_basic_[row];
  }
  basis_row_[basis_[row]] = -1;
  basis_[row] = var;
  basis_row_[var] = row;
  ++pivots_;
  ++since_refactor_;
}

void RestrictedMaster::solve() {
  const int m = rows();
  std::vector<double> pi(m), direction(m);
  std::vector<int> idx;
  int degenerate_run = 0;
  for (;;) {
    if (since_refactor_ >= kRefactorInterval) refactor();

    std::fill(pi.begin(), pi.end(), 0.0);
    for (int r = 0; r < m; ++r) {
      const double cb = variable_cost(basis_[r]);
      if (cb == 0.0) continue;
      const double* row = &inverse_[static_cast<std::size_t>(r) * m];
      for (int k = 0; k < m; ++k) pi[k] += cb * row[k];
    }

    // Dantzig pricing with smallest-index ties; Bland's rule after a run of
    // degenerate pivots.
    const bool bland = degenerate_run >= kDegenerateLimit;
    int entering = -1;
    double best = tol_;
    for (int var = 0; var < num_variables(); ++var) {
      if (basis_row_[var] != -1) continue;
      column_rows(var, idx);
      double d = variable_cost(var);
      for (const int r : idx) d -= pi[r];
      if (d > best) {
        entering = var;
        best = d;
        if (bland) break;
      }
    }
    if (entering == -1) return;

    column_rows(entering, idx);
    for (int r = 0; r < m; ++r) {
      const double* row = &inverse_[static_cast<std::size_t>(r) * m];
      double s = 0.0;
      for (const int k : idx) s += row[k];
      direction[r] = s;
    }

    int leaving = -1;
    double ratio = 0.0;
    for (int r = 0; r < m; ++r) {
      if (direction[r] <= kPivotTolerance) continue;
      const double q = std::max(x_basic_[r], 0.0) / direction[r];
      if (leaving == -1 || q < ratio - 1e-12 ||
          (std::abs(q - ratio) <= 1e-12 && basis_[r] < basis_[leaving])) {
        leaving = r;
        ratio = q;
      }
    }
    if (leaving == -1) throw InternalError("restricted master reported unbounded");
    degenerate_run = ratio <= 1e-12 ? degenerate_run + 1 : 0;
    pivot(leaving, entering, direction);
  }
}

double RestrictedMaster::objective() const {
  double obj = 0.0;
  for (int r = 0; r < rows(); ++r) obj += variable_cost(basis_[r]) * x_basic_[r];
  return obj;
}

std::vector<double> RestrictedMaster::duals() const {
  const int m = rows();
  std::vector<double> pi(m, 0.0);
  for (int r = 0; r < m; ++r) {
    const double cb = variable_cost(basis_[r]);
    if (cb == 0.0) continue;
    const double* row = &inverse_[static_cast<std::size_t>(r) * m];
    for (int k = 0; k < m; ++k) pi[k] += cb * row[k];
  }
  return pi;
}

std::vector<double> RestrictedMaster::primal() const {
  std::vector<double> y(columns_.size(), 0.0);
  for (int r = 0; r < rows(); ++r) {
    const int var = basis_[r];
    if (var >= num_cells_) y[var - num_cells_] = std::max(x_basic_[r], 0.0);
  }
  return y;
}

}  // namespace lsa::detail
