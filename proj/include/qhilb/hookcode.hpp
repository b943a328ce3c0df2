#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qhilb/components.hpp"
#include "qhilb/diagram.hpp"

namespace qhilb {

/// A value of the hook code: diagrams P_0, P_1, ... with P_i inside the
/// rectangle R(f_i, w_i) (at most f_i columns, at most w_i rows). Parts past
/// the stored ones are empty; trailing empty parts are trimmed.
class DiagramSequence {
 public:
  /// Throws PreconditionError when a part leaves its rectangle.
  DiagramSequence(HilbertFunction h, int k, std::vector<YoungDiagram> parts);

  const std::vector<YoungDiagram>& parts() const { return parts_; }
  const YoungDiagram& part(int i) const;
  const DerivedIndices& indices() const { return indices_; }
  const HilbertFunction& hilbert() const { return indices_.h; }
  int k() const { return indices_.k; }
  /// Sum of |P_i|.
  int weight() const;
  /// r_0(P_i) == f_i.
  bool saturated(int i) const;

  friend bool operator==(const DiagramSequence& a, const DiagramSequence& b) {
    return a.indices_.k == b.indices_.k && a.indices_.h == b.indices_.h && a.parts_ == b.parts_;
  }
  friend bool operator<(const DiagramSequence& a, const DiagramSequence& b) { return a.parts_ < b.parts_; }

 private:
  DerivedIndices indices_;
  std::vector<YoungDiagram> parts_;
};

/// Row statistics feeding the hook code.
struct HookStats {
  /// m -> rows j (ascending) whose last cell has label k*j + r_j - 1 = m.
  std::map<int, std::vector<int>> rows_ending_at;
  /// h_j: cells in row j with l(s) = k(a(s) + 1).
  std::vector<int> special_per_row;
  /// m -> (h_{j1}, h_{j2}, ...) over rows_ending_at[m], zero parts dropped.
  std::map<int, std::vector<int>> lambda;
};

/// Throws ContractViolation if h fails to be non-increasing along some B_m.
HookStats hook_stats(const YoungDiagram& d, int k);

/// F(D): P_i is the diagram with column heights lambda(D, i + theta).
DiagramSequence encode(const YoungDiagram& d, int k);

/// Largest i with c_0(P_i) = w_i.
int nu(const DiagramSequence& p);

/// Minimal j > i with r_0(P_j) < f_j, or nullopt if none exists.
std::optional<int> capital_phi(const DiagramSequence& p, int i);

/// True iff capital_phi(i) - i <= k for every i >= 0.
bool in_image(const DiagramSequence& p);

/// Inverse of encode. Throws PreconditionError if `p` is outside the image.
YoungDiagram decode(const DiagramSequence& p);

/// Every admissible sequence for H, on indices 0..horizon. The default
/// horizon is sigma(H) + k, past which every admissible part is empty.
std::vector<DiagramSequence> enumerate_SH(const HilbertFunction& h, int k, std::optional<int> horizon = std::nullopt);

/// sigma(H): minimal i >= 0 with d_j = 0 for all j > theta + i.
int sigma(const HilbertFunction& h, int k);

/// Diagrams inside R(columns, rows), in reverse-lex order.
std::vector<YoungDiagram> diagrams_in_rectangle(int columns, int rows);

}  // namespace qhilb
