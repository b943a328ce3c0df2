#include "qhilb/catalan.hpp"

#include <algorithm>

#include "qhilb/components.hpp"
#include "qhilb/error.hpp"

namespace qhilb {

namespace {

void kdyck_rec(int i, int n, int k, std::vector<int>& ups, std::vector<KDyckPath>& out) {
  if (i > n) {
    out.push_back(KDyckPath{n, k, ups});
    return;
  }
  const int lo = ups.empty() ? 0 : ups.back();
  for (int u = lo; u <= k * (i - 1); ++u) {
    ups.push_back(u);
    kdyck_rec(i + 1, n, k, ups, out);
    ups.pop_back();
  }
}

int max_area(int n, int k) { return k * n * (n - 1) / 2; }

}  // namespace

std::vector<KDyckPath> enumerate_kdyck(int n, int k) {
  require(n >= 0 && k >= 1, "enumerate_kdyck: need n >= 0 and k >= 1");
  std::vector<KDyckPath> out;
  std::vector<int> ups;
  kdyck_rec(1, n, k, ups, out);
  return out;
}

YoungDiagram path_diagram(const KDyckPath& path) {
  std::vector<int> rows;
  for (auto it = path.up_positions.rbegin(); it != path.up_positions.rend(); ++it) {
    if (*it > 0) rows.push_back(*it);
  }
  return YoungDiagram(std::move(rows));
}

int area(const KDyckPath& path) {
  int count = 0;
  for (int i = 1; i <= path.n; ++i) {
    const int up = path.up_positions[static_cast<std::size_t>(i - 1)];
    for (int c = 0; c < path.k * path.n; ++c) {
      // Square [c, c+1] x [i-1, i]: right of the path's vertical step, and
      // its lower-right corner still on or left of the line x = ky.
      if (c >= up && c + 1 <= path.k * (i - 1)) ++count;
    }
  }
  return count;
}

int bk(const KDyckPath& path) {
  const YoungDiagram d = path_diagram(path);
  int count = 0;
  d.for_each_cell([&](Cell s) {
    const auto [arm, leg] = arm_leg(d, s);
    if (path.k * arm <= leg && leg <= path.k * (arm + 1)) ++count;
  });
  return count;
}

MPoly qt_catalan(int n, int k) {
  MPoly sum;
  for (const auto& path : enumerate_kdyck(n, k)) {
    sum.add_term(Exponent{static_cast<std::uint32_t>(bk(path)), static_cast<std::uint32_t>(area(path))}, Integer(1));
  }
  return sum;
}

Integer fuss_catalan(int n, int k) {
  require(n >= 0 && k >= 1, "fuss_catalan: need n >= 0 and k >= 1");
  // binomial((k+1)n, n) by the multiplicative formula.
  Integer binom = 1;
  const int top = (k + 1) * n;
  for (int i = 1; i <= n; ++i) binom = binom * (top - n + i) / i;
  return binom / (k * n + 1);
}

MPoly open_stratum_class(int big_n, int k, int n) {
  require(big_n >= 0 && n >= 0 && k >= 1, "open_stratum_class: need N, n >= 0 and k >= 1");
  const int bound = std::max(0, k * n - k);
  MPoly sum;
  for (const auto& h : components_for(big_n, k)) {
    if (h.support_end() > bound) continue;
    sum += class_closed_form(h, k).shifted(static_cast<std::uint32_t>(dplus_formula(h, k)), 0);
  }
  return sum;
}

Theorem2Report verify_theorem2(int k, int n) {
  require(n >= 0 && k >= 1, "verify_theorem2: need n >= 0 and k >= 1");
  Theorem2Report report{k, n, false, {}, {}};
  const int top = max_area(n, k);
  for (int big_n = 0; big_n <= top; ++big_n) {
    report.lhs += open_stratum_class(big_n, k, n).shifted(0, static_cast<std::uint32_t>(big_n));
  }
  report.rhs = substitute_theorem2(qt_catalan(n, k), static_cast<std::uint32_t>(top));
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace qhilb
