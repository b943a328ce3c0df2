// Acceptance gate: criteria 1-10 at exact equality, one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "qhilb/catalan.hpp"
#include "qhilb/components.hpp"
#include "qhilb/hookcode.hpp"
#include "qhilb/identities.hpp"
#include "qhilb/nested.hpp"

using namespace qhilb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Recorder {
 public:
  explicit Recorder(Outcome& o) : o_(o) {}
  void check(bool cond, const std::string& what) {
    if (!cond && o_.pass) {
      o_.pass = false;
      o_.detail = what;
    }
  }

 private:
  Outcome& o_;
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome criterion1() {
  Outcome o;
  Recorder r(o);
  const HilbertFunction h({1, 0, 1, 1, 1, 1, 2, 1, 1, 1, 1, 0, 1});
  const MPoly got = class_bruteforce_ab(h, 2, 3);
  const MPoly want = MPoly::one() + MPoly::monomial(Integer(3), 1, 0) + MPoly::monomial(Integer(1), 2, 0);
  r.check(got == want, "class-ab returned " + got.to_string());
  o.detail = o.pass ? got.to_string() : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  Recorder r(o);
  int instances = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 14; ++n) {
      for (const auto& h : components_for(n, k)) {
        ++instances;
        r.check(class_closed_form(h, k) == class_bruteforce(h, k), "H=" + h.to_string() + " k=" + std::to_string(k));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(instances) + " components";
  return o;
}

Outcome criterion3() {
  Outcome o;
  Recorder r(o);
  int roundtrips = 0;
  int fibers = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 12; ++n) {
      for (const auto& d : partitions(n)) {
        const DiagramSequence p = encode(d, k);
        ++roundtrips;
        r.check(decode(p) == d, "decode(encode(" + d.to_string() + ")) k=" + std::to_string(k));
        r.check(p.weight() == special_counts(d, k).exact, "weight of " + d.to_string());
      }
    }
    for (int n = 0; n <= 10; ++n) {
      for (const auto& h : components_for(n, k)) {
        ++fibers;
        std::set<DiagramSequence> image;
        for (const auto& d : enumerate_with_diag(h, 1, k)) image.insert(encode(d, k));
        const auto sh = enumerate_SH(h, k);
        r.check(image == std::set<DiagramSequence>(sh.begin(), sh.end()) && image.size() == sh.size(),
                "image != S(H) for H=" + h.to_string() + " k=" + std::to_string(k));
        for (const auto& p : sh) r.check(special_counts(decode(p), k).exact == p.weight(), "weight on S(H)");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(roundtrips) + " roundtrips, " + std::to_string(fibers) + " fibers";
  return o;
}

Outcome criterion4() {
  Outcome o;
  Recorder r(o);
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 4; ++n) {
      const auto t = verify_theorem2(k, n);
      r.check(t.equal && t.lhs == t.rhs, "k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "15 (k,n) pairs";
  return o;
}

Outcome criterion5() {
  Outcome o;
  Recorder r(o);
  for (int k = 1; k <= 3; ++k) {
    const auto rep = verify_theorem3(k, 12, worker_count());
    r.check(rep.equal && rep.lhs && rep.rhs && *rep.lhs == *rep.rhs, "k=" + std::to_string(k));
  }
  if (o.pass) o.detail = "k=1,2,3 mod t^13";
  return o;
}

Outcome criterion6() {
  Outcome o;
  Recorder r(o);
  int main_count = 0;
  int extra_count = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 8; ++n) {
      for (const auto& h : components_for(n, k)) {
        ++main_count;
        r.check(verify_main_identity(h, k).equal, "main H=" + h.to_string() + " k=" + std::to_string(k));
        const auto aux = aux_indices(h, k);
        for (int p = aux.psi; p < aux.psi + k; ++p) {
          ++extra_count;
          r.check(verify_extra_identity(h, k, p).equal,
                  "extra H=" + h.to_string() + " k=" + std::to_string(k) + " p=" + std::to_string(p));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(main_count) + " main, " + std::to_string(extra_count) + " extra";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Recorder r(o);
  int fibers = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 14; ++n) {
      for (const auto& h : components_for(n, k)) {
        ++fibers;
        const int formula = dplus_formula(h, k);
        for (const auto& d : enumerate_with_diag(h, 1, k)) {
          r.check(dplus_statistic(d, k) == formula, "d+ of " + d.to_string() + " k=" + std::to_string(k));
        }
      }
    }
    const auto series = verify_hilbert_series(k, 12, worker_count());
    r.check(series.equal, "Hilbert series k=" + std::to_string(k));
  }
  if (o.pass) o.detail = std::to_string(fibers) + " fibers, series k=1,2,3 mod t^13";
  return o;
}

Outcome criterion8() {
  // A mismatch is a finding, reported with its first differing coefficient.
  Outcome o;
  Recorder r(o);
  std::ostringstream findings;
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}, {3, 4}}) {
    const auto rep = verify_conjecture(a, b, 12, worker_count());
    r.check(rep.lhs.has_value() && rep.rhs.has_value(), "report without both sides");
    r.check(rep.equal == !rep.first_diff.has_value(), "verdict and first difference disagree");
    findings << "(" << a << "," << b << "):";
    if (rep.equal) {
      findings << "match ";
    } else {
      const Exponent e = *rep.first_diff;
      findings << "mismatch@L^" << e.main << "t^" << e.t << " ";
    }
  }
  if (o.pass) o.detail = findings.str();
  return o;
}

Outcome criterion9() {
  Outcome o;
  Recorder r(o);
  int tuples = 0;
  for (int n = 0; n <= 8; ++n) {
    for (const auto& bh : realized_nested_profiles({n + 1, n})) {
      ++tuples;
      r.check(hypothesis(bh), "hypothesis fails at n=" + std::to_string(n));
      const auto rep = verify_nested_consistency(bh, true);
      r.check(rep.equal, "counts " + std::to_string(rep.nested_count) + " vs " + std::to_string(rep.interleaved_count));
    }
  }
  if (o.pass) o.detail = std::to_string(tuples) + " nested tuples";
  return o;
}

Outcome criterion10() {
  Outcome o;
  Recorder r(o);
  for (int n = 0; n <= 20; ++n) {
    r.check(static_cast<std::int64_t>(partitions(n).size()) == oracle::partition_count(n), "p(" + std::to_string(n) + ")");
  }
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 6; ++n) {
      const Integer want(oracle::binomial((k + 1) * n, n) / (k * n + 1));
      r.check(fuss_catalan(n, k) == want, "Fuss-Catalan formula");
      r.check(Integer(enumerate_kdyck(n, k).size()) == want, "k-Dyck count");
      r.check(qt_catalan(n, k).evaluate(1, 1) == want, "C(1,1)");
    }
  }
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const MPoly g = gaussian_binomial(m, n);
      r.check(g == gaussian_binomial(n, m), "symmetry");
      r.check(g.evaluate(1, 1) == Integer(oracle::binomial(m + n, m)), "specialisation");
      if (m >= 1 && n >= 1) {
        r.check(g == gaussian_binomial(m - 1, n) +
                         MPoly::monomial(Integer(1), static_cast<std::uint32_t>(m), 0) * gaussian_binomial(m, n - 1),
                "Pascal");
      }
    }
  }
  if (o.pass) o.detail = "p(n) n<=20, Fuss-Catalan n<=6 k<=3, G(M,N) M,N<=8";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "(2,3) class anchor", 5, criterion1},
      {2, "closed form vs enumeration", 60, criterion2},
      {3, "hook-code bijection", 60, criterion3},
      {4, "open stratum vs q,t-Catalan", 60, criterion4},
      {5, "good-sequence generating series", 120, criterion5},
      {6, "main and extra identities", 1e9, criterion6},
      {7, "d+ constancy and Hilbert series", 1e9, criterion7},
      {8, "conjecture report", 1e9, criterion8},
      {9, "nested consistency", 60, criterion9},
      {10, "combinatorial baselines", 1e9, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_seconds) {
      o.pass = false;
      o.detail = "over runtime budget";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %2d  %-34s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
