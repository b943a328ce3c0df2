#include "qhilb/identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qhilb/components.hpp"
#include "qhilb/diagram.hpp"
#include "qhilb/error.hpp"
#include "qhilb/parallel.hpp"

namespace qhilb {

namespace {

VerificationReport compare(std::string identity, int order, MPoly lhs, MPoly rhs) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.order = order;
  r.first_diff = first_difference(lhs, rhs);
  r.equal = !r.first_diff.has_value();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

struct Instance {
  HilbertFunction h;
  int p = -1;
};

// Runs `check` on every instance and folds the results into one report that
// keeps the sides of the first failure.
template <class Check>
VerificationReport sweep(std::string identity, int order, const std::vector<Instance>& instances, unsigned threads,
                         Check check) {
  auto results = parallel_map<VerificationReport>(instances.size(), threads,
                                                  [&](std::size_t i) { return check(instances[i]); });
  VerificationReport out;
  out.identity = std::move(identity);
  out.order = order;
  out.equal = true;
  out.instances = static_cast<int>(instances.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].equal) continue;
    out.equal = false;
    out.lhs = results[i].lhs;
    out.rhs = results[i].rhs;
    out.first_diff = results[i].first_diff;
    out.main_var = results[i].main_var;
    out.failing_instance = "H=" + instances[i].h.to_string();
    if (instances[i].p >= 0) out.failing_instance += " p=" + std::to_string(instances[i].p);
    break;
  }
  return out;
}

std::vector<Instance> realizable_instances(int k, int max_n) {
  std::vector<Instance> out;
  for (int n = 0; n <= max_n; ++n) {
    for (auto& h : components_for(n, k)) out.push_back(Instance{std::move(h)});
  }
  return out;
}

MPoly q_power(int e) {
  return MPoly::monomial(Integer(1), static_cast<std::uint32_t>(e));
}

MPoly subset_sum(const std::vector<DiagramSequence>& seqs, const std::function<bool(const DiagramSequence&)>& keep) {
  MPoly sum;
  for (const auto& p : seqs) {
    if (keep(p)) sum.add_term(Exponent{static_cast<std::uint32_t>(p.weight()), 0}, Integer(1));
  }
  return sum;
}

void good_rec(int pos, int remaining, bool in_prefix, int k, std::vector<int>& d, std::vector<HilbertFunction>& out) {
  if (remaining == 0) {
    HilbertFunction h(d);
    ensure(is_good(h, k), "good_sequences: search produced a sequence that is not good");
    out.push_back(std::move(h));
    return;
  }
  auto at = [&](int i) { return i < 0 ? 0 : d[static_cast<std::size_t>(i)]; };
  if (!in_prefix) {
    bool zero_window = true;
    for (int i = pos - k; i < pos; ++i) zero_window = zero_window && at(i) == 0;
    if (zero_window) return;
  }
  const int full = pos / k + 1;
  for (int v = std::min(remaining, full); v >= 0; --v) {
    if (v == full) {
      if (!in_prefix) continue;
      d.push_back(v);
      good_rec(pos + 1, remaining - v, true, k, d, out);
      d.pop_back();
      continue;
    }
    if (v > at(pos - k) || v > at(pos - 1) + (pos % k == 0 ? 1 : 0)) continue;
    d.push_back(v);
    good_rec(pos + 1, remaining - v, false, k, d, out);
    d.pop_back();
  }
}

}  // namespace

bool is_good(const HilbertFunction& h, int k) {
  const DerivedIndices idx = derive(h, k);
  for (int i = 0; i <= idx.eta; ++i) {
    if (h[i] != i / k + 1) return false;
  }
  for (int i = idx.eta; i <= h.support_end() + k; ++i) {
    if (idx.d(i) - idx.d(i + 1) + idx.tau(i) < 0) return false;
    if (idx.d(i + 1) > idx.d(i + 1 - k)) return false;
  }
  return true;
}

std::vector<HilbertFunction> good_sequences(int n, int k) {
  require(n >= 0 && k >= 1, "good_sequences: need n >= 0 and k >= 1");
  std::vector<HilbertFunction> out;
  std::vector<int> d;
  good_rec(0, n, true, k, d, out);
  std::sort(out.begin(), out.end());
  return out;
}

int chi(const HilbertFunction& h, int k) {
  require(is_good(h, k), "chi: H = (" + h.to_string() + ") is not good");
  return e_statistic(h, k);
}

AuxIndices aux_indices(const HilbertFunction& h, int k) {
  AuxIndices aux;
  aux.sigma = sigma(h, k);
  aux.psi = (aux.sigma / k) * k;
  return aux;
}

std::optional<int> phi_below(const DiagramSequence& p, int i) {
  for (int j = i - 1; j >= 0; --j) {
    if (!p.saturated(j)) return j;
  }
  return std::nullopt;
}

MPoly combinatorial_form(const HilbertFunction& h, int k) {
  require(is_realizable(h, k), "combinatorial_form: H = (" + h.to_string() + ") is not realizable");
  const DerivedIndices idx = derive(h, k);
  const int w = idx.d(idx.eta - k + 1) + 1 - idx.d(idx.eta + 1);
  ensure(w >= 1, "combinatorial_form: non-positive exponent in the prefactor");
  MPoly product = one_minus_power(1);
  for (int i = idx.eta + 1; i <= h.support_end() + 2 * k + 1; ++i) {
    const int m = idx.d(i) - idx.d(i + 1) + idx.tau(i);
    const int n = idx.d(i - k) - idx.d(i);
    ensure(m >= 0 && n >= 0, "combinatorial_form: negative Gaussian binomial argument");
    product *= gaussian_binomial(m, n);
  }
  return divide_exact(product, one_minus_power(static_cast<std::uint32_t>(w)));
}

VerificationReport verify_theorem1(const HilbertFunction& h, int k) {
  const MPoly brute = class_bruteforce(h, k);
  VerificationReport r = compare("thm1", h.total(), brute, class_closed_form(h, k));
  if (r.equal) {
    VerificationReport alt = compare("thm1", h.total(), brute, combinatorial_form(h, k));
    if (!alt.equal) return alt;
  }
  return r;
}

VerificationReport verify_theorem1_sweep(int k, int max_n, unsigned threads) {
  return sweep("thm1", max_n, realizable_instances(k, max_n), threads,
               [k](const Instance& in) { return verify_theorem1(in.h, k); });
}

VerificationReport verify_theorem3(int k, int order, unsigned threads) {
  require(k >= 1 && order >= 0, "verify_theorem3: need k >= 1 and order >= 0");
  auto slices = parallel_map<MPoly>(static_cast<std::size_t>(order) + 1, threads, [k](std::size_t n) {
    MPoly slice;
    for (const auto& h : good_sequences(static_cast<int>(n), k)) {
      slice += gaussian_product(h, k).shifted(static_cast<std::uint32_t>(chi(h, k)), static_cast<std::uint32_t>(n));
    }
    return slice;
  });
  MPoly lhs;
  for (const auto& s : slices) lhs += s;

  std::vector<MPoly> factors;
  for (int i = 1; i <= order; ++i) factors.push_back(MPoly::monomial(Integer(1), 1, static_cast<std::uint32_t>(i)));
  MPoly rhs = inv_one_minus_product(factors, static_cast<std::uint32_t>(order)).poly();

  VerificationReport r = compare("thm3", order, std::move(lhs), std::move(rhs));
  r.main_var = "q";
  return r;
}

VerificationReport verify_main_identity(const HilbertFunction& h, int k) {
  require(is_realizable(h, k), "verify_main_identity: H = (" + h.to_string() + ") is not realizable");
  const DerivedIndices idx = derive(h, k);
  const MPoly lhs = subset_sum(enumerate_SH(h, k), [](const DiagramSequence&) { return true; });

  const int start = idx.eta - idx.theta + 1;
  const int w = idx.w(start);
  ensure(w >= 1, "verify_main_identity: w_{eta-theta+1} must be positive");
  MPoly numerator = one_minus_power(1);
  const int last = sigma(h, k) + 2 * k + 1;
  for (int i = start; i <= last; ++i) {
    ensure(idx.f(i) >= 0 && idx.w(i) >= 1, "verify_main_identity: rectangle out of range");
    numerator *= gaussian_binomial(idx.f(i), idx.w(i) - 1);
  }
  VerificationReport r = compare("main-id", h.total(), lhs,
                                 divide_exact(numerator, one_minus_power(static_cast<std::uint32_t>(w))));
  r.main_var = "q";
  return r;
}

VerificationReport verify_main_identity_sweep(int k, int max_n, unsigned threads) {
  return sweep("main-id", max_n, realizable_instances(k, max_n), threads,
               [k](const Instance& in) { return verify_main_identity(in.h, k); });
}

VerificationReport verify_extra_identity(const HilbertFunction& h, int k, int p) {
  require(is_realizable(h, k), "verify_extra_identity: H = (" + h.to_string() + ") is not realizable");
  const DerivedIndices idx = derive(h, k);
  const AuxIndices aux = aux_indices(h, k);
  const int top = aux.psi + k;
  require(aux.psi <= p && p < top, "verify_extra_identity: p must lie in [psi, psi + k) = [" +
                                       std::to_string(aux.psi) + ", " + std::to_string(top) + ")");

  const auto all = enumerate_SH(h, k);
  const MPoly lhs = subset_sum(all, [&](const DiagramSequence& seq) { return phi_below(seq, top) == p; });
  const MPoly total = subset_sum(all, [](const DiagramSequence&) { return true; });

  int shift = 0;
  for (int i = p + 1; i <= top - 1; ++i) shift += idx.f(i);
  ensure(shift >= 0 && idx.f(p) >= 0, "verify_extra_identity: negative f");
  const int w = idx.w(top);
  ensure(w >= 1, "verify_extra_identity: w_{psi+k} must be positive");
  MPoly numerator = one_minus_power(static_cast<std::uint32_t>(idx.f(p))) * total * q_power(shift);
  MPoly rhs = divide_exact(numerator, one_minus_power(static_cast<std::uint32_t>(w)));

  VerificationReport r = compare("extra-id", h.total(), lhs, std::move(rhs));
  r.main_var = "q";
  return r;
}

VerificationReport verify_extra_identity_sweep(int k, int max_n, unsigned threads) {
  std::vector<Instance> instances;
  for (const auto& in : realizable_instances(k, max_n)) {
    const AuxIndices aux = aux_indices(in.h, k);
    for (int p = aux.psi; p < aux.psi + k; ++p) instances.push_back(Instance{in.h, p});
  }
  return sweep("extra-id", max_n, instances, threads,
               [k](const Instance& in) { return verify_extra_identity(in.h, k, in.p); });
}

VerificationReport verify_hilbert_series(int k, int order, unsigned threads) {
  require(k >= 1 && order >= 0, "verify_hilbert_series: need k >= 1 and order >= 0");
  auto slices = parallel_map<MPoly>(static_cast<std::size_t>(order) + 1, threads, [k](std::size_t n) {
    MPoly slice;
    for (const auto& h : components_for(static_cast<int>(n), k)) {
      slice += class_closed_form(h, k).shifted(static_cast<std::uint32_t>(dplus_formula(h, k)),
                                               static_cast<std::uint32_t>(n));
    }
    return slice;
  });
  MPoly lhs;
  for (const auto& s : slices) lhs += s;

  std::vector<MPoly> factors;
  for (int i = 1; i <= order; ++i) {
    factors.push_back(MPoly::monomial(Integer(1), static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(i)));
  }
  return compare("hilbert-series", order, std::move(lhs), inv_one_minus_product(factors, order).poly());
}

VerificationReport verify_conjecture(int a, int b, int order, unsigned threads) {
  require(a >= 1 && b >= 1 && std::gcd(a, b) == 1, "verify_conjecture: weights must be positive and coprime");
  require(order >= 0, "verify_conjecture: negative order");
  auto slices = parallel_map<MPoly>(static_cast<std::size_t>(order) + 1, threads, [a, b](std::size_t n) {
    MPoly slice;
    for_each_partition(static_cast<int>(n), [&](const YoungDiagram& d) {
      slice.add_term(Exponent{static_cast<std::uint32_t>(special_count_ab(d, a, b)), static_cast<std::uint32_t>(n)},
                     Integer(1));
    });
    return slice;
  });
  MPoly lhs;
  for (const auto& s : slices) lhs += s;

  const int period = a + b;
  std::vector<MPoly> factors;
  for (int i = 1; i <= order; ++i) {
    if (i % period != 0) factors.push_back(MPoly::monomial(Integer(1), 0, static_cast<std::uint32_t>(i)));
  }
  for (int i = 1; period * i <= order; ++i) {
    factors.push_back(MPoly::monomial(Integer(1), 1, static_cast<std::uint32_t>(period * i)));
  }
  return compare("conjecture", order, std::move(lhs), inv_one_minus_product(factors, order).poly());
}

}  // namespace qhilb
