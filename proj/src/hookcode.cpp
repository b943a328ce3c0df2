#include "qhilb/hookcode.hpp"

#include <algorithm>
#include <string>

#include "qhilb/error.hpp"

namespace qhilb {

namespace {

// Index past which every part is empty, f_i = [k | i] and w_i = 1 for any
// sequence over these indices.
int quiet_index(const DerivedIndices& idx, std::size_t stored_parts) {
  return std::max(static_cast<int>(stored_parts), idx.h.support_end() + idx.k - idx.theta + 1);
}

}  // namespace

DiagramSequence::DiagramSequence(HilbertFunction h, int k, std::vector<YoungDiagram> parts)
    : indices_(derive(h, k)), parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back().empty()) parts_.pop_back();
  for (int i = 0; i < static_cast<int>(parts_.size()); ++i) {
    const YoungDiagram& p = parts_[static_cast<std::size_t>(i)];
    if (p.empty()) continue;
    require(p.row(0) <= indices_.f(i) && p.num_rows() <= indices_.w(i),
            "DiagramSequence: part " + std::to_string(i) + " = (" + p.to_string() + ") leaves R(" +
                std::to_string(indices_.f(i)) + ", " + std::to_string(indices_.w(i)) + ")");
  }
}

const YoungDiagram& DiagramSequence::part(int i) const {
  static const YoungDiagram empty;
  return (i >= 0 && i < static_cast<int>(parts_.size())) ? parts_[static_cast<std::size_t>(i)] : empty;
}

int DiagramSequence::weight() const {
  int total = 0;
  for (const auto& p : parts_) total += p.size();
  return total;
}

bool DiagramSequence::saturated(int i) const {
  return part(i).row(0) == indices_.f(i);
}

HookStats hook_stats(const YoungDiagram& d, int k) {
  require(k >= 1, "hook_stats: slope must be positive");
  HookStats stats;
  stats.special_per_row.assign(static_cast<std::size_t>(d.num_rows()), 0);
  d.for_each_cell([&](Cell s) {
    const auto [arm, leg] = arm_leg(d, s);
    if (leg == k * (arm + 1)) ++stats.special_per_row[static_cast<std::size_t>(s.j)];
  });
  for (int j = 0; j < d.num_rows(); ++j) {
    stats.rows_ending_at[k * j + d.row(j) - 1].push_back(j);
  }
  for (const auto& [m, rows] : stats.rows_ending_at) {
    std::vector<int> lambda;
    for (int j : rows) {
      const int h = stats.special_per_row[static_cast<std::size_t>(j)];
      ensure(lambda.empty() || h <= lambda.back(), "hook_stats: h is not monotone along B_" + std::to_string(m));
      if (h > 0) lambda.push_back(h);
    }
    if (!lambda.empty()) stats.lambda.emplace(m, std::move(lambda));
  }
  return stats;
}

DiagramSequence encode(const YoungDiagram& d, int k) {
  const HilbertFunction h = diag_profile(d, 1, k);
  const DerivedIndices idx = derive(h, k);
  const HookStats stats = hook_stats(d, k);
  std::vector<YoungDiagram> parts;
  for (const auto& [m, lambda] : stats.lambda) {
    const int i = m - idx.theta;
    ensure(i >= 0, "encode: special cells in a row ending below theta");
    if (parts.size() <= static_cast<std::size_t>(i)) parts.resize(static_cast<std::size_t>(i) + 1);
    parts[static_cast<std::size_t>(i)] = YoungDiagram::from_column_heights(lambda);
  }
  try {
    return DiagramSequence(h, k, std::move(parts));
  } catch (const PreconditionError& e) {
    throw ContractViolation(std::string("encode: ") + e.what());
  }
}

int nu(const DiagramSequence& p) {
  const DerivedIndices& idx = p.indices();
  for (int i = quiet_index(idx, p.parts().size()); i >= 0; --i) {
    if (p.part(i).num_rows() == idx.w(i)) return i;
  }
  throw ContractViolation("nu: no index with c_0(P_i) = w_i");
}

std::optional<int> capital_phi(const DiagramSequence& p, int i) {
  require(i >= 0, "capital_phi: negative index");
  const int bound = std::max(i, quiet_index(p.indices(), p.parts().size())) + p.k() + 1;
  for (int j = i + 1; j <= bound; ++j) {
    if (!p.saturated(j)) return j;
  }
  return std::nullopt;
}

bool in_image(const DiagramSequence& p) {
  const int last = quiet_index(p.indices(), p.parts().size());
  for (int i = 0; i <= last; ++i) {
    const auto phi = capital_phi(p, i);
    if (!phi || *phi - i > p.k()) return false;
  }
  return true;
}

namespace {

YoungDiagram decode_unchecked(const DiagramSequence& p) {
  const DerivedIndices& idx = p.indices();
  const int k = idx.k;
  if (idx.h.total() == 0) {
    ensure(p.weight() == 0, "decode: non-empty parts over the zero Hilbert function");
    return YoungDiagram{};
  }

  const int v = nu(p);
  const int bottom = idx.theta + v + 1;
  ensure(bottom >= 1, "decode: bottom row length must be positive");

  // Profile of D with its bottom row removed.
  std::vector<int> reduced(static_cast<std::size_t>(idx.h.support_end()), 0);
  for (int i = 0; i < static_cast<int>(reduced.size()); ++i) {
    const int value = idx.d(i + k) - (i + k <= v + idx.theta ? 1 : 0);
    ensure(value >= 0, "decode: negative entry in reduced Hilbert function");
    reduced[static_cast<std::size_t>(i)] = value;
  }
  const HilbertFunction h_next(std::move(reduced));

  std::vector<YoungDiagram> parts;
  int theta_next = idx.theta;
  if (v >= k || idx.w(k) >= 2) {
    // The bottom row owns the largest part of P_nu; theta drops by k.
    theta_next = idx.theta - k;
    parts = p.parts();
    if (v < static_cast<int>(parts.size())) {
      parts[static_cast<std::size_t>(v)] = parts[static_cast<std::size_t>(v)].shifted(1, 0);
    }
  } else {
    // theta is unchanged and every index moves down by k.
    const auto& all = p.parts();
    if (all.size() > static_cast<std::size_t>(k)) parts.assign(all.begin() + k, all.end());
  }

  ensure(derive(h_next, k).theta == theta_next, "decode: theta of the reduced profile disagrees with the case split");
  ensure(is_realizable(h_next, k), "decode: reduced profile (" + h_next.to_string() + ") is not realizable");

  std::optional<DiagramSequence> next;
  try {
    next.emplace(h_next, k, std::move(parts));
  } catch (const PreconditionError& e) {
    throw ContractViolation(std::string("decode: ") + e.what());
  }
  const YoungDiagram rest = decode_unchecked(*next);
  ensure(rest.row(0) <= bottom, "decode: reconstructed rows are not weakly decreasing");
  return rest.with_bottom_row(bottom);
}

}  // namespace

YoungDiagram decode(const DiagramSequence& p) {
  require(is_realizable(p.hilbert(), p.k()), "decode: H = (" + p.hilbert().to_string() + ") is not realizable");
  require(in_image(p), "decode: sequence violates the Phi window condition");
  YoungDiagram d = decode_unchecked(p);
  ensure(diag_profile(d, 1, p.k()) == p.hilbert(), "decode: result has the wrong profile");
  return d;
}

int sigma(const HilbertFunction& h, int k) {
  if (h.is_zero()) return 0;
  return std::max(0, h.support_end() - 1 - derive(h, k).theta);
}

std::vector<YoungDiagram> diagrams_in_rectangle(int columns, int rows) {
  std::vector<YoungDiagram> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int max_len) -> void {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) >= rows) return;
    for (int len = max_len; len >= 1; --len) {
      current.push_back(len);
      self(self, len);
      current.pop_back();
    }
  };
  if (columns <= 0 || rows <= 0) return {YoungDiagram{}};
  rec(rec, columns);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

class SequenceEnumerator {
 public:
  SequenceEnumerator(const HilbertFunction& h, int k, int horizon)
      : idx_(derive(h, k)), horizon_(horizon), parts_(static_cast<std::size_t>(horizon) + 1) {
    for (int i = 0; i <= horizon; ++i) {
      ensure(idx_.f(i) >= 0 && idx_.w(i) >= 0, "enumerate_SH: negative rectangle for a realizable H");
      choices_.push_back(diagrams_in_rectangle(idx_.f(i), idx_.w(i)));
    }
  }

  std::vector<DiagramSequence> run() {
    visit(0, 0);
    return std::move(out_);
  }

 private:
  // `run` counts consecutive saturated indices >= 1 ending at i - 1; k of
  // them in a row break the window condition for the index just before.
  void visit(int i, int run) {
    const int k = idx_.k;
    if (i > horizon_) {
      for (int j = horizon_ + 1; j <= horizon_ + k && run < k; ++j) run = idx_.f(j) == 0 ? run + 1 : 0;
      if (run >= k) return;
      DiagramSequence seq(idx_.h, k, parts_);
      ensure(in_image(seq), "enumerate_SH: pruned search produced a sequence outside the image");
      out_.push_back(std::move(seq));
      return;
    }
    for (const auto& candidate : choices_[static_cast<std::size_t>(i)]) {
      const bool sat = candidate.row(0) == idx_.f(i);
      const int next_run = i == 0 ? 0 : (sat ? run + 1 : 0);
      if (next_run >= k) continue;
      parts_[static_cast<std::size_t>(i)] = candidate;
      visit(i + 1, next_run);
    }
    parts_[static_cast<std::size_t>(i)] = YoungDiagram{};
  }

  DerivedIndices idx_;
  int horizon_;
  std::vector<YoungDiagram> parts_;
  std::vector<std::vector<YoungDiagram>> choices_;
  std::vector<DiagramSequence> out_;
};

}  // namespace

std::vector<DiagramSequence> enumerate_SH(const HilbertFunction& h, int k, std::optional<int> horizon) {
  require(is_realizable(h, k), "enumerate_SH: H = (" + h.to_string() + ") is not realizable");
  const int last = horizon.value_or(sigma(h, k) + k);
  require(last >= 0, "enumerate_SH: negative horizon");
  return SequenceEnumerator(h, k, last).run();
}

}  // namespace qhilb
