#pragma once

// Dense revised simplex for the restricted master of the configuration LP:
//   max  sum_c cost_c y_c
//   s.t. sum_{c of agent i} y_c = 1          (one row per agent)
//        sum_{c covering cell} y_c <= 1      (one row per cell, with slack)
//        y >= 0
// The empty-bundle column of each agent together with the cell slacks forms
// the initial (identity) basis, so the master is feasible from the start.

#include <vector>

namespace lsa::detail {

class RestrictedMaster {
 public:
  RestrictedMaster(int num_agents, int num_cells, double tolerance);

  // Returns the column index (0-based over structural columns).
  int add_column(int agent, std::vector<int> cells, double cost);

  void solve();

  double objective() const;
  // Row duals: agents first, then cells.
  std::vector<double> duals() const;
  // Value of every structural column.
  std::vector<double> primal() const;

  int num_columns() const { return static_cast<int>(columns_.size()); }
  int column_agent(int c) const { return columns_[c].agent; }
  const std::vector<int>& column_cells(int c) const { return columns_[c].cells; }
  long pivots() const { return pivots_; }

 private:
  struct Column {
    int agent;
    std::vector<int> cells;
    double cost;
  };

  int rows() const { return num_agents_ + num_cells_; }
  int num_variables() const { return num_cells_ + num_columns(); }
  double variable_cost(int var) const;
  // Sparse column of a variable: row indices (all coefficients are 1).
  void column_rows(int var, std::vector<int>& out) const;

  void refactor();
  void pivot(int row, int var, const std::vector<double>& direction);

  int num_agents_;
  int num_cells_;
  double tol_;
  std::vector<Column> columns_;
  std::vector<int> basis_;        // row -> variable
  std::vector<int> basis_row_;    // variable -> row or -1
  std::vector<double> inverse_;   // dense rows() x rows(), row-major
  std::vector<double> x_basic_;
  long pivots_ = 0;
  int since_refactor_ = 0;
};

}  // namespace lsa::detail
