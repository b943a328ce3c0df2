#include "qhilb/components.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "qhilb/error.hpp"

namespace qhilb {

namespace {

// Past this index every product factor or e_i term is trivial.
int tail_bound(const HilbertFunction& h, int k) { return h.support_end() + 2 * k + 1; }

}  // namespace

int DerivedIndices::tau(int i) const {
  const int m = i + 1;
  return ((m % k) + k) % k == 0 ? 1 : 0;
}

int DerivedIndices::f(int i) const {
  return d(i + theta) - d(i + 1 + theta) + (i % k == 0 ? 1 : 0);
}

int DerivedIndices::w(int i) const {
  return d(i - k + theta) - d(i + theta) + 1;
}

DerivedIndices derive(const HilbertFunction& h, int k) {
  require(k >= 1, "derive: slope must be positive");
  DerivedIndices out{h, k, -1, -1};
  for (int i = h.support_end() - 1; i >= 0; --i) {
    if (h[i] == i / k + 1) {
      out.eta = i;
      break;
    }
  }
  // Largest i <= eta with i = k-1 mod k; -1 always qualifies.
  out.theta = out.eta < 0 ? -1 : ((out.eta + 1) / k) * k - 1;
  return out;
}

bool is_realizable(const HilbertFunction& h, int k) {
  const DerivedIndices idx = derive(h, k);
  // eta only means something when every diagonal up to it is full.
  for (int i = 0; i <= idx.eta; ++i) {
    if (h[i] != i / k + 1) return false;
  }
  if (idx.w(0) != 0) return false;
  const int last = tail_bound(h, k) - idx.theta;
  for (int i = idx.eta - idx.theta + 1; i <= last; ++i) {
    if (idx.f(i) < 0 || idx.w(i) < 1) return false;
  }
  return true;
}

MPoly gaussian_product(const HilbertFunction& h, int k) {
  const DerivedIndices idx = derive(h, k);
  MPoly result = MPoly::one();
  for (int i = idx.eta; i <= tail_bound(h, k); ++i) {
    const int m = idx.d(i) - idx.d(i + 1) + idx.tau(i);
    const int n = idx.d(i + 1) - idx.d(i + 1 + k);
    require(m >= 0 && n >= 0, "gaussian_product: negative Gaussian binomial argument at i = " + std::to_string(i));
    result *= gaussian_binomial(m, n);
  }
  return result;
}

MPoly class_closed_form(const HilbertFunction& h, int k) {
  require(is_realizable(h, k), "class_closed_form: H = (" + h.to_string() + ") is not realizable for k = " +
                                   std::to_string(k));
  return gaussian_product(h, k);
}

MPoly class_bruteforce(const HilbertFunction& h, int k) {
  MPoly sum;
  for (const auto& d : enumerate_with_diag(h, 1, k)) {
    sum.add_term(Exponent{static_cast<std::uint32_t>(special_counts(d, k).exact), 0}, Integer(1));
  }
  return sum;
}

MPoly class_bruteforce_ab(const HilbertFunction& h, int a, int b) {
  require(std::gcd(a, b) == 1, "class_bruteforce_ab: weights must be coprime");
  MPoly sum;
  for (const auto& d : enumerate_with_diag(h, a, b)) {
    sum.add_term(Exponent{static_cast<std::uint32_t>(special_count_ab(d, a, b)), 0}, Integer(1));
  }
  return sum;
}

int e_statistic(const HilbertFunction& h, int k) {
  const DerivedIndices idx = derive(h, k);
  auto e = [&](int i) { return idx.d(i) - idx.d(i + 1) + idx.tau(i); };
  // Twice the sum, so the k/2 factor stays integral.
  long twice = 0;
  for (int i = idx.eta; i <= tail_bound(h, k); ++i) {
    const long ei = e(i);
    long inner = static_cast<long>(k) * (ei - 1);
    for (int j = 1; j <= k - 1; ++j) inner += 2L * (k - j) * e(i + j);
    twice += ei * inner;
  }
  ensure(twice % 2 == 0, "e_statistic: odd doubled sum");
  return static_cast<int>(twice / 2);
}

int dplus_formula(const HilbertFunction& h, int k) {
  require(is_realizable(h, k), "dplus_formula: H = (" + h.to_string() + ") is not realizable for k = " +
                                   std::to_string(k));
  return h.total() + e_statistic(h, k);
}

int dplus_statistic(const YoungDiagram& d, int k) {
  return d.size() + special_counts(d, k).halfopen;
}

std::vector<HilbertFunction> components_for(int n, int k) {
  require(n >= 0 && k >= 1, "components_for: need n >= 0 and k >= 1");
  std::set<HilbertFunction> seen;
  for_each_partition(n, [&](const YoungDiagram& d) { seen.insert(diag_profile(d, 1, k)); });
  return {seen.begin(), seen.end()};
}

}  // namespace qhilb
