#include <functional>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "printers.hpp"
#include "qhilb/components.hpp"
#include "qhilb/error.hpp"
#include "qhilb/hookcode.hpp"
#include "qhilb/identities.hpp"

using namespace qhilb;

namespace {

HilbertFunction H(std::vector<int> d) { return HilbertFunction(std::move(d)); }
MPoly L(std::uint32_t e = 1) { return MPoly::monomial(Integer(1), e, 0); }
MPoly T(std::uint32_t e = 1) { return MPoly::monomial(Integer(1), 0, e); }

// Every sequence of total n: compositions with zeros, bounded length.
std::vector<std::vector<int>> sequences_of_total(int n, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int left) {
    if (static_cast<int>(cur.size()) == length) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.push_back(v);
      go(left - v);
      cur.pop_back();
    }
  };
  go(n);
  return out;
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("good sequence examples") {
    CHECK(is_good(H({1, 1, 1}), 2));
    CHECK_FALSE(is_good(H({2}), 1));
    CHECK(is_good(H({}), 3));
    CHECK_FALSE(is_good(H({0, 2}), 1));
  }

  TEST_CASE("good iff realizable iff non-empty fiber, with +-1 perturbations, n <= 12") {
    for (int k = 1; k <= 3; ++k) {
      std::set<HilbertFunction> candidates;
      for (int n = 0; n <= 12; ++n) {
        for (const auto& h : components_for(n, k)) {
          candidates.insert(h);
          auto v = h.values();
          v.resize(v.size() + static_cast<std::size_t>(k) + 1, 0);
          for (std::size_t i = 0; i < v.size(); ++i) {
            for (int delta : {-1, 1}) {
              auto w = v;
              w[i] += delta;
              if (w[i] >= 0) candidates.insert(HilbertFunction(w));
            }
          }
        }
      }
      for (const auto& h : candidates) {
        if (h.total() > 13) continue;
        const bool nonempty = !oracle::fiber(h.values(), 1, k).empty();
        CHECK_MESSAGE(is_good(h, k) == nonempty, "H=" << h.to_string() << " k=" << k);
        CHECK(is_realizable(h, k) == nonempty);
      }
    }
  }

  TEST_CASE("good_sequences lists exactly the good sequences of total n") {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 7; ++n) {
        const auto listed = good_sequences(n, k);
        std::set<HilbertFunction> got(listed.begin(), listed.end());
        CHECK(got.size() == listed.size());
        std::set<HilbertFunction> ref;
        // Labels of a partition of n stay below k(n-1) + n.
        for (const auto& v : sequences_of_total(n, k * n + 1)) {
          const HilbertFunction h(v);
          if (is_good(h, k)) ref.insert(h);
        }
        CHECK(got == ref);
        const auto comps = components_for(n, k);
        CHECK(got == std::set<HilbertFunction>(comps.begin(), comps.end()));
      }
    }
  }

  TEST_CASE("chi examples") {
    CHECK(chi(H({1}), 1) == 1);
    CHECK(chi(H({}), 2) == 0);
    CHECK(chi(H({}), 1) == 0);
    CHECK_THROWS_AS(chi(H({2}), 1), PreconditionError);
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 10; ++n) {
        for (const auto& h : components_for(n, k)) CHECK(chi(h, k) >= 0);
      }
    }
  }

  TEST_CASE("closed and combinatorial forms against the oracle") {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 11; ++n) {
        for (const auto& h : components_for(n, k)) {
          const auto r = verify_theorem1(h, k);
          CHECK(r.equal);
          CHECK(combinatorial_form(h, k) == oracle::to_mpoly(oracle::fiber_class(h.values(), 1, k)));
        }
      }
    }
    CHECK(verify_theorem1_sweep(2, 10, 2).equal);
  }

  TEST_CASE("good-sequence generating series") {
    const auto trivial = verify_theorem3(2, 0);
    CHECK(trivial.equal);
    REQUIRE(trivial.lhs.has_value());
    CHECK(*trivial.lhs == MPoly::one());

    const auto first = verify_theorem3(1, 1);
    CHECK(first.equal);
    CHECK(first.lhs->coefficient(Exponent{1, 1}) == 1);

    for (int k = 1; k <= 3; ++k) {
      const auto r = verify_theorem3(k, 12, 2);
      CHECK(r.equal);
      // Right side: one q per part of a partition.
      const auto ref = oracle::partition_series(12, [](const oracle::Rows& lam) { return static_cast<int>(lam.size()); });
      CHECK(*r.rhs == oracle::to_mpoly(ref));
      CHECK(*r.lhs == *r.rhs);
    }
  }

  TEST_CASE("good-sequence series is sensitive to chi") {
    // Dropping chi must break the identity: guards against a vacuous check.
    MPoly without_chi;
    for (int n = 0; n <= 6; ++n) {
      for (const auto& h : good_sequences(n, 2)) without_chi += class_closed_form(h, 2) * T(static_cast<std::uint32_t>(n));
    }
    CHECK(without_chi != verify_theorem3(2, 6).rhs->truncated(6));
  }

  TEST_CASE("main identity") {
    const auto r = verify_main_identity(H({1, 1, 1}), 2);
    CHECK(r.equal);
    CHECK(*r.lhs == MPoly::one() + L());
    CHECK(verify_main_identity(H({}), 3).equal);
    CHECK(*verify_main_identity(H({}), 3).lhs == MPoly::one());
    CHECK_THROWS_AS(verify_main_identity(H({2}), 1), PreconditionError);
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 10; ++n) {
        for (const auto& h : components_for(n, k)) {
          const auto m = verify_main_identity(h, k);
          CHECK_MESSAGE(m.equal, "H=" << h.to_string() << " k=" << k);
          // The bijection carries the weight to the cell statistic.
          CHECK(*m.lhs == oracle::to_mpoly(oracle::fiber_class(h.values(), 1, k)));
        }
      }
    }
  }

  TEST_CASE("extra identity") {
    const HilbertFunction h = H({1, 1, 1});
    const auto aux = aux_indices(h, 2);
    CHECK(aux.psi % 2 == 0);
    CHECK(aux.psi <= aux.sigma);
    for (int p = aux.psi; p < aux.psi + 2; ++p) CHECK(verify_extra_identity(h, 2, p).equal);
    CHECK_THROWS_AS(verify_extra_identity(h, 2, aux.psi + 2), PreconditionError);
    CHECK_THROWS_AS(verify_extra_identity(h, 2, aux.psi - 1), PreconditionError);
    for (int k = 1; k <= 3; ++k) CHECK(verify_extra_identity_sweep(k, 8).equal);
  }

  TEST_CASE("extra identity partitions S(H) by phi") {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 8; ++n) {
        for (const auto& h : components_for(n, k)) {
          const auto aux = aux_indices(h, k);
          MPoly total;
          for (int p = aux.psi; p < aux.psi + k; ++p) total += *verify_extra_identity(h, k, p).lhs;
          CHECK(total == *verify_main_identity(h, k).lhs);
        }
      }
    }
  }

  TEST_CASE("auxiliary indices") {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 8; ++n) {
        for (const auto& h : components_for(n, k)) {
          const auto idx = derive(h, k);
          const auto aux = aux_indices(h, k);
          CHECK(aux.psi % k == 0);
          CHECK(aux.psi <= aux.sigma);
          CHECK(aux.sigma - aux.psi < k);
          for (int j = std::max(0, idx.theta + aux.sigma + 1); j <= h.support_end() + k; ++j) CHECK(h[j] == 0);
          if (aux.sigma > 0) CHECK(h[idx.theta + aux.sigma] > 0);
        }
      }
    }
  }

  TEST_CASE("Hilbert series") {
    const auto one = verify_hilbert_series(2, 1);
    CHECK(one.equal);
    CHECK(*one.lhs == MPoly::one() + L(2) * T());
    CHECK(*verify_hilbert_series(1, 0).lhs == MPoly::one());
    for (int k = 1; k <= 3; ++k) {
      const auto r = verify_hilbert_series(k, 12, 2);
      CHECK(r.equal);
      const auto ref = oracle::partition_series(12, [](const oracle::Rows& lam) {
        int s = 0;
        for (int part : lam) s += part + 1;
        return s;
      });
      CHECK(*r.rhs == oracle::to_mpoly(ref));
    }
  }

  TEST_CASE("conjecture reports") {
    const auto small = verify_conjecture(1, 1, 2);
    CHECK(small.equal);
    CHECK(*small.lhs == MPoly::one() + T() + (MPoly::one() + L()) * T(2));
    CHECK(*verify_conjecture(2, 3, 0).lhs == MPoly::one());
    CHECK_THROWS_AS(verify_conjecture(2, 4, 3), PreconditionError);
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}, {3, 4}}) {
      const auto r = verify_conjecture(a, b, 12, 2);
      // Right side: one L per part divisible by a+b.
      const int period = a + b;
      const auto rhs = oracle::partition_series(12, [period](const oracle::Rows& lam) {
        int s = 0;
        for (int part : lam) s += part % period == 0 ? 1 : 0;
        return s;
      });
      CHECK(*r.rhs == oracle::to_mpoly(rhs));
      oracle::Poly lhs;
      for (int n = 0; n <= 12; ++n) {
        for (const auto& rows : oracle::partitions(n)) lhs[{oracle::stat_ab(rows, a, b), n}] += 1;
      }
      CHECK(*r.lhs == oracle::to_mpoly(lhs));
      // A mismatch would be a finding; the report must carry its location.
      CHECK(r.equal == !r.first_diff.has_value());
      MESSAGE("conjecture (" << a << "," << b << ") mod t^13: " << (r.equal ? "match" : "mismatch"));
    }
  }

  TEST_CASE("sweeps are independent of the thread count") {
    const auto one = verify_theorem3(3, 10, 1);
    const auto four = verify_theorem3(3, 10, 4);
    CHECK(*one.lhs == *four.lhs);
    CHECK(one.equal == four.equal);
    CHECK(verify_main_identity_sweep(2, 8, 1).instances == verify_main_identity_sweep(2, 8, 3).instances);
  }
}
