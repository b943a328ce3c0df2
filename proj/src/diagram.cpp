#include "qhilb/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "qhilb/error.hpp"

namespace qhilb {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    require(rows_[j] > 0, "YoungDiagram: row lengths must be positive");
    require(j == 0 || rows_[j] <= rows_[j - 1], "YoungDiagram: row lengths must be weakly decreasing");
  }
  size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

YoungDiagram YoungDiagram::from_column_heights(std::span<const int> heights) {
  std::vector<int> h(heights.begin(), heights.end());
  std::erase(h, 0);
  std::sort(h.begin(), h.end(), std::greater<>());
  return YoungDiagram(std::move(h)).conjugate();
}

int YoungDiagram::row(int j) const {
  return (j >= 0 && j < num_rows()) ? rows_[static_cast<std::size_t>(j)] : 0;
}

int YoungDiagram::column(int i) const {
  int c = 0;
  while (c < num_rows() && rows_[static_cast<std::size_t>(c)] > i) ++c;
  return c;
}

bool YoungDiagram::contains(Cell s) const {
  return s.i >= 0 && s.j >= 0 && s.i < row(s.j);
}

bool YoungDiagram::contains(const YoungDiagram& other) const {
  if (other.num_rows() > num_rows()) return false;
  for (int j = 0; j < other.num_rows(); ++j) {
    if (other.row(j) > row(j)) return false;
  }
  return true;
}

YoungDiagram YoungDiagram::conjugate() const {
  std::vector<int> cols;
  for (int i = 0; i < row(0); ++i) cols.push_back(column(i));
  return YoungDiagram(std::move(cols));
}

YoungDiagram YoungDiagram::shifted(int a, int b) const {
  require(a >= 0 && b >= 0, "YoungDiagram::shifted: offsets must be non-negative");
  std::vector<int> rows;
  for (int j = b; j < num_rows(); ++j) {
    const int len = row(j) - a;
    if (len <= 0) break;
    rows.push_back(len);
  }
  return YoungDiagram(std::move(rows));
}

YoungDiagram YoungDiagram::with_bottom_row(int length) const {
  require(length >= row(0), "YoungDiagram::with_bottom_row: new row shorter than the current bottom row");
  if (length == 0) return *this;
  std::vector<int> rows{length};
  rows.insert(rows.end(), rows_.begin(), rows_.end());
  return YoungDiagram(std::move(rows));
}

void YoungDiagram::for_each_cell(const std::function<void(Cell)>& fn) const {
  for (int j = 0; j < num_rows(); ++j) {
    for (int i = 0; i < row(j); ++i) fn(Cell{i, j});
  }
}

std::string YoungDiagram::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(rows_[j]);
  }
  return s;
}

ArmLeg arm_leg(const YoungDiagram& d, Cell s) {
  require(d.contains(s), "arm_leg: cell not in diagram");
  return ArmLeg{d.column(s.i) - 1 - s.j, d.row(s.j) - 1 - s.i};
}

HilbertFunction diag_profile(const YoungDiagram& d, int a, int b) {
  require(a >= 1 && b >= 1, "diag_profile: weights must be positive");
  std::vector<int> counts;
  d.for_each_cell([&](Cell s) {
    const auto label = static_cast<std::size_t>(a * s.i + b * s.j);
    if (counts.size() <= label) counts.resize(label + 1, 0);
    ++counts[label];
  });
  return HilbertFunction(std::move(counts));
}

SpecialCounts special_counts(const YoungDiagram& d, int k) {
  require(k >= 1, "special_counts: slope must be positive");
  SpecialCounts out;
  d.for_each_cell([&](Cell s) {
    const auto [arm, leg] = arm_leg(d, s);
    const bool exact = leg == k * (arm + 1);
    const bool halfopen = k * arm <= leg && leg < k * (arm + 1);
    out.exact += exact;
    out.halfopen += halfopen;
    out.closed += exact || halfopen;
  });
  return out;
}

int special_count_ab(const YoungDiagram& d, int a, int b) {
  require(a >= 1 && b >= 1 && std::gcd(a, b) == 1, "special_count_ab: weights must be coprime and positive");
  int count = 0;
  d.for_each_cell([&](Cell s) {
    const auto [arm, leg] = arm_leg(d, s);
    count += a * leg == b * (arm + 1);
  });
  return count;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& rows,
                    const std::function<void(const YoungDiagram&)>& fn) {
  if (remaining == 0) {
    fn(YoungDiagram(rows));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    rows.push_back(part);
    partitions_rec(remaining - part, part, rows, fn);
    rows.pop_back();
  }
}

// Builds rows bottom-up. After row j is placed, every label below b*(j+1)
// can no longer change, so it must already match H.
class ProfileGenerator {
 public:
  ProfileGenerator(const HilbertFunction& h, int a, int b)
      : target_(h), a_(a), b_(b), counts_(static_cast<std::size_t>(h.support_end()), 0) {}

  std::vector<YoungDiagram> run() {
    if (target_.total() == 0) return {YoungDiagram{}};
    extend(0, target_.total(), target_.total());
    return std::move(out_);
  }

 private:
  void extend(int j, int max_len, int remaining) {
    if (remaining == 0) {
      if (settled_below(target_.support_end())) out_.emplace_back(rows_);
      return;
    }
    // Longest admissible row first, matching the reverse-lex partition order.
    int len = 0;
    while (len < std::min(max_len, remaining) && try_add(Cell{len, j})) ++len;
    for (; len >= 1; --len) {
      rows_.push_back(len);
      if (settled_below(b_ * (j + 1))) extend(j + 1, len, remaining - len);
      rows_.pop_back();
      remove(Cell{len - 1, j});
    }
  }

  bool try_add(Cell s) {
    const int label = a_ * s.i + b_ * s.j;
    if (label >= target_.support_end()) return false;
    auto& c = counts_[static_cast<std::size_t>(label)];
    if (c >= target_[label]) return false;
    ++c;
    return true;
  }

  void remove(Cell s) { --counts_[static_cast<std::size_t>(a_ * s.i + b_ * s.j)]; }

  bool settled_below(int bound) const {
    const int end = std::min(bound, target_.support_end());
    for (int l = 0; l < end; ++l) {
      if (counts_[static_cast<std::size_t>(l)] != target_[l]) return false;
    }
    return true;
  }

  const HilbertFunction& target_;
  int a_;
  int b_;
  std::vector<int> counts_;
  std::vector<int> rows_;
  std::vector<YoungDiagram> out_;
};

}  // namespace

void for_each_partition(int n, const std::function<void(const YoungDiagram&)>& fn) {
  require(n >= 0, "for_each_partition: negative size");
  std::vector<int> rows;
  partitions_rec(n, n, rows, fn);
}

std::vector<YoungDiagram> partitions(int n) {
  std::vector<YoungDiagram> out;
  for_each_partition(n, [&](const YoungDiagram& d) { out.push_back(d); });
  return out;
}

std::vector<YoungDiagram> enumerate_with_diag(const HilbertFunction& h, int a, int b) {
  require(a >= 1 && b >= 1, "enumerate_with_diag: weights must be positive");
  return ProfileGenerator(h, a, b).run();
}

std::vector<YoungDiagram> enumerate_with_diag_filtered(const HilbertFunction& h, int a, int b) {
  std::vector<YoungDiagram> out;
  for_each_partition(h.total(), [&](const YoungDiagram& d) {
    if (diag_profile(d, a, b) == h) out.push_back(d);
  });
  return out;
}

YoungDiagram remove_bottom_row(const YoungDiagram& d) {
  require(!d.empty(), "remove_bottom_row: empty diagram");
  return d.shifted(0, 1);
}

}  // namespace qhilb
