#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qhilb {

/// Sequence H = (d_0, d_1, ...) of non-negative integers with finite support.
/// Stored without trailing zeros, so equality is value equality.
class HilbertFunction {
 public:
  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }

  /// d_i for i >= 0; zero past the stored support.
  int operator[](int i) const;

  /// d_i with the negative-index conventions for slope k:
  /// d_i = 0 for -k <= i <= -1 and d_{-k-1} = -1. Lower indices throw.
  int extended(int i, int k) const;

  int total() const { return total_; }
  bool is_zero() const { return values_.empty(); }
  /// One past the last non-zero index (0 for the zero sequence).
  int support_end() const { return static_cast<int>(values_.size()); }

  std::string to_string() const;

  friend bool operator==(const HilbertFunction& a, const HilbertFunction& b) { return a.values_ == b.values_; }
  friend auto operator<=>(const HilbertFunction& a, const HilbertFunction& b) { return a.values_ <=> b.values_; }

 private:
  std::vector<int> values_;
  int total_ = 0;
};

}  // namespace qhilb
