#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "qhilb/hilbert_function.hpp"

namespace qhilb {

/// Tuple (H_1, ..., H_k) of (1,1)-Hilbert functions with totals
/// n_1 >= n_2 >= ... >= n_k.
class NestedHilbertFunctions {
 public:
  explicit NestedHilbertFunctions(std::vector<HilbertFunction> parts);

  const std::vector<HilbertFunction>& parts() const { return parts_; }
  int k() const { return static_cast<int>(parts_.size()); }
  std::vector<int> totals() const;

  friend bool operator==(const NestedHilbertFunctions& a, const NestedHilbertFunctions& b) {
    return a.parts_ == b.parts_;
  }
  friend auto operator<=>(const NestedHilbertFunctions& a, const NestedHilbertFunctions& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<HilbertFunction> parts_;
};

/// Indices where the parts disagree: the finite complement of E(bH).
std::vector<int> e_set_complement(const NestedHilbertFunctions& bh);

/// No two indices outside E(bH) are adjacent.
bool hypothesis(const NestedHilbertFunctions& bh);

/// H with d_{i + kj} = (H_{i+1})_j.
HilbertFunction interleave(const NestedHilbertFunctions& bh);

/// Splits H into its k residue classes; inverse of interleave.
NestedHilbertFunctions decimate(const HilbertFunction& h, int k);

/// Chains D_1 >= D_2 >= ... >= D_k of diagrams with diag^{1,1}(D_m) = H_m.
std::int64_t count_nested_fixed_points(const NestedHilbertFunctions& bh);

/// Profile tuples of every chain of diagrams with the given sizes.
std::set<NestedHilbertFunctions> realized_nested_profiles(const std::vector<int>& totals);

struct NestedReport {
  bool hypothesis = false;
  bool equal = false;
  std::int64_t nested_count = 0;
  std::int64_t interleaved_count = 0;
  HilbertFunction interleaved;
};

/// Compares the chain count with the number of diagrams of (1,k)-profile
/// interleave(bH). Refuses when the hypothesis fails unless `exploratory`.
NestedReport verify_nested_consistency(const NestedHilbertFunctions& bh, bool exploratory = false);

}  // namespace qhilb
