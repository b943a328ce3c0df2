#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qhilb/hilbert_function.hpp"

namespace qhilb {

/// Cell (i, j): column i (exponent of x), row j (exponent of y).
struct Cell {
  int i = 0;
  int j = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Young diagram stored as its row lengths r_0 >= r_1 >= ... > 0. Row j holds
/// the cells (0, j) ... (r_j - 1, j); "above" means larger j.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Rows must be weakly decreasing and positive; trailing zeros are rejected.
  explicit YoungDiagram(std::vector<int> rows);

  /// The diagram whose column i has height heights[i] (zero heights dropped).
  static YoungDiagram from_column_heights(std::span<const int> heights);

  const std::vector<int>& rows() const { return rows_; }
  int size() const { return size_; }
  bool empty() const { return rows_.empty(); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  /// r_j; zero beyond the top row.
  int row(int j) const;
  /// c_i = #{j : r_j > i}.
  int column(int i) const;
  bool contains(Cell s) const;
  /// True when `other` is a subset of this diagram.
  bool contains(const YoungDiagram& other) const;

  YoungDiagram conjugate() const;
  /// D(a, b) = {(i, j) : (i + a, j + b) in D}.
  YoungDiagram shifted(int a, int b) const;
  /// Adds a new bottom row of the given length beneath the existing rows.
  YoungDiagram with_bottom_row(int length) const;

  void for_each_cell(const std::function<void(Cell)>& fn) const;

  /// Comma-separated row lengths; empty string for the empty diagram.
  std::string to_string() const;

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

struct ArmLeg {
  int arm = 0;  ///< cells strictly above in the same column
  int leg = 0;  ///< cells strictly right in the same row
};

ArmLeg arm_leg(const YoungDiagram& d, Cell s);

/// (diag_0, diag_1, ...) with diag_l = #{(i, j) in D : a*i + b*j = l}.
HilbertFunction diag_profile(const YoungDiagram& d, int a, int b);

struct SpecialCounts {
  int exact = 0;     ///< l(s) = k(a(s) + 1)
  int halfopen = 0;  ///< k a(s) <= l(s) < k(a(s) + 1)
  int closed = 0;    ///< k a(s) <= l(s) <= k(a(s) + 1)
};

SpecialCounts special_counts(const YoungDiagram& d, int k);

/// #{s : a * l(s) = b * (a(s) + 1)}; the exact count for weights (a, b).
int special_count_ab(const YoungDiagram& d, int a, int b);

/// Partitions of n in reverse-lexicographic order of their row lists.
void for_each_partition(int n, const std::function<void(const YoungDiagram&)>& fn);
std::vector<YoungDiagram> partitions(int n);

/// Diagrams D with diag^{a,b}(D) = H, built row by row with pruning.
std::vector<YoungDiagram> enumerate_with_diag(const HilbertFunction& h, int a, int b);
/// Same set, by filtering every partition of sum(H). Kept as a baseline.
std::vector<YoungDiagram> enumerate_with_diag_filtered(const HilbertFunction& h, int a, int b);

YoungDiagram remove_bottom_row(const YoungDiagram& d);

}  // namespace qhilb
