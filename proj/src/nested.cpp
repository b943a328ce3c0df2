#include "qhilb/nested.hpp"

#include <algorithm>
#include <functional>

#include "qhilb/diagram.hpp"
#include "qhilb/error.hpp"

namespace qhilb {

NestedHilbertFunctions::NestedHilbertFunctions(std::vector<HilbertFunction> parts) : parts_(std::move(parts)) {
  require(!parts_.empty(), "NestedHilbertFunctions: need at least one part");
  for (std::size_t m = 1; m < parts_.size(); ++m) {
    require(parts_[m].total() <= parts_[m - 1].total(), "NestedHilbertFunctions: totals must be non-increasing");
  }
}

std::vector<int> NestedHilbertFunctions::totals() const {
  std::vector<int> out;
  for (const auto& h : parts_) out.push_back(h.total());
  return out;
}

std::vector<int> e_set_complement(const NestedHilbertFunctions& bh) {
  int end = 0;
  for (const auto& h : bh.parts()) end = std::max(end, h.support_end());
  std::vector<int> out;
  for (int i = 0; i < end; ++i) {
    const int first = bh.parts().front()[i];
    for (const auto& h : bh.parts()) {
      if (h[i] != first) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

bool hypothesis(const NestedHilbertFunctions& bh) {
  const auto gaps = e_set_complement(bh);
  for (std::size_t i = 1; i < gaps.size(); ++i) {
    if (gaps[i] - gaps[i - 1] < 2) return false;
  }
  return true;
}

HilbertFunction interleave(const NestedHilbertFunctions& bh) {
  const int k = bh.k();
  int end = 0;
  for (const auto& h : bh.parts()) end = std::max(end, h.support_end());
  std::vector<int> d(static_cast<std::size_t>(k * end), 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < end; ++j) d[static_cast<std::size_t>(i + k * j)] = bh.parts()[static_cast<std::size_t>(i)][j];
  }
  return HilbertFunction(std::move(d));
}

NestedHilbertFunctions decimate(const HilbertFunction& h, int k) {
  require(k >= 1, "decimate: k must be positive");
  std::vector<HilbertFunction> parts;
  for (int i = 0; i < k; ++i) {
    std::vector<int> d;
    for (int idx = i; idx < h.support_end(); idx += k) d.push_back(h[idx]);
    parts.emplace_back(std::move(d));
  }
  return NestedHilbertFunctions(std::move(parts));
}

std::int64_t count_nested_fixed_points(const NestedHilbertFunctions& bh) {
  std::vector<std::vector<YoungDiagram>> levels;
  for (const auto& h : bh.parts()) levels.push_back(enumerate_with_diag(h, 1, 1));
  // ways[x] = number of chains ending at levels[m][x].
  std::vector<std::int64_t> ways(levels.front().size(), 1);
  for (std::size_t m = 1; m < levels.size(); ++m) {
    std::vector<std::int64_t> next(levels[m].size(), 0);
    for (std::size_t y = 0; y < levels[m].size(); ++y) {
      for (std::size_t x = 0; x < levels[m - 1].size(); ++x) {
        if (levels[m - 1][x].contains(levels[m][y])) next[y] += ways[x];
      }
    }
    ways = std::move(next);
  }
  std::int64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

std::set<NestedHilbertFunctions> realized_nested_profiles(const std::vector<int>& totals) {
  require(!totals.empty(), "realized_nested_profiles: need at least one size");
  for (std::size_t m = 1; m < totals.size(); ++m) {
    require(totals[m] <= totals[m - 1], "realized_nested_profiles: sizes must be non-increasing");
  }
  std::vector<std::vector<YoungDiagram>> levels;
  for (int n : totals) levels.push_back(partitions(n));

  std::set<NestedHilbertFunctions> out;
  std::vector<HilbertFunction> chain;
  std::function<void(std::size_t, const YoungDiagram*)> extend = [&](std::size_t m, const YoungDiagram* outer) {
    if (m == levels.size()) {
      out.insert(NestedHilbertFunctions(chain));
      return;
    }
    for (const auto& d : levels[m]) {
      if (outer && !outer->contains(d)) continue;
      chain.push_back(diag_profile(d, 1, 1));
      extend(m + 1, &d);
      chain.pop_back();
    }
  };
  extend(0, nullptr);
  return out;
}

NestedReport verify_nested_consistency(const NestedHilbertFunctions& bh, bool exploratory) {
  NestedReport r;
  r.hypothesis = hypothesis(bh);
  require(r.hypothesis || exploratory, "verify_nested_consistency: two adjacent indices lie outside E(bH)");
  r.interleaved = interleave(bh);
  r.nested_count = count_nested_fixed_points(bh);
  r.interleaved_count = static_cast<std::int64_t>(enumerate_with_diag(r.interleaved, 1, bh.k()).size());
  r.equal = r.nested_count == r.interleaved_count;
  return r;
}

}  // namespace qhilb
