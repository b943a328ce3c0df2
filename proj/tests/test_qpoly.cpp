#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "printers.hpp"
#include "qhilb/error.hpp"
#include "qhilb/qpoly.hpp"

using namespace qhilb;

namespace {

MPoly L(std::uint32_t e = 1) { return MPoly::monomial(Integer(1), e, 0); }
MPoly T(std::uint32_t e = 1) { return MPoly::monomial(Integer(1), 0, e); }
MPoly C(int c) { return MPoly::monomial(Integer(c), 0, 0); }

MPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(0, 4);
  MPoly p;
  for (int n = 0; n < 5; ++n) {
    p.add_term(Exponent{static_cast<std::uint32_t>(deg(rng)), static_cast<std::uint32_t>(deg(rng))},
               Integer(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_SUITE("qpoly") {
  TEST_CASE("zero coefficients are never stored") {
    MPoly p = L() + C(1);
    p -= L();
    CHECK(p == MPoly::one());
    CHECK(p.term_count() == 1);
    p.add_term(Exponent{0, 0}, Integer(-1));
    CHECK(p.is_zero());
    CHECK(p.to_string() == "0");
  }

  TEST_CASE("text form") {
    CHECK((C(1) + C(3) * L() + L(2)).to_string() == "1 + 3*L + L^2");
    CHECK((L(2) * T()).to_string() == "L^2*t");
    CHECK((C(1) - L()).to_string() == "1 - L");
    CHECK((C(-2) * T(3)).to_string() == "-2*t^3");
    CHECK((L() + T()).to_string("q", "t") == "q + t");
  }

  TEST_CASE("canonical order sorts by t-degree then main degree") {
    const MPoly p = T() + L(3) + C(1) + L() * T();
    std::vector<Exponent> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    REQUIRE(order.size() == 4);
    CHECK(order[0] == Exponent{0, 0});
    CHECK(order[1] == Exponent{3, 0});
    CHECK(order[2] == Exponent{0, 1});
    CHECK(order[3] == Exponent{1, 1});
  }

  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
      const MPoly a = random_poly(rng);
      const MPoly b = random_poly(rng);
      const MPoly c = random_poly(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == MPoly());
      CHECK(a * MPoly::one() == a);
      CHECK((a * b).evaluate(2, 3) == a.evaluate(2, 3) * b.evaluate(2, 3));
    }
  }

  TEST_CASE("big coefficients stay exact") {
    MPoly p = C(1) + L();
    MPoly power = MPoly::one();
    for (int i = 0; i < 100; ++i) power *= p;
    CHECK(power.evaluate(1, 1) == (Integer(1) << 100));
    CHECK(power.coefficient(Exponent{50, 0}) == Integer("100891344545564193334812497256"));
  }

  TEST_CASE("gaussian binomial examples") {
    CHECK(gaussian_binomial(0, 5) == MPoly::one());
    CHECK(gaussian_binomial(1, 1) == C(1) + L());
    CHECK(gaussian_binomial(2, 2) == C(1) + L() + C(2) * L(2) + L(3) + L(4));
    CHECK_THROWS_AS(gaussian_binomial(-1, 2), PreconditionError);
  }

  TEST_CASE("gaussian binomial: box-partition oracle, symmetry, Pascal, specialisation") {
    for (int m = 0; m <= 8; ++m) {
      for (int n = 0; n <= 8; ++n) {
        const MPoly g = gaussian_binomial(m, n);
        CHECK(g == oracle::to_mpoly(oracle::gaussian_box(m, n)));
        CHECK(g == gaussian_binomial(n, m));
        CHECK(g.evaluate(1, 1) == Integer(oracle::binomial(m + n, m)));
        CHECK(g.max_main_degree() == m * n);
        if (m >= 1 && n >= 1) {
          CHECK(g == gaussian_binomial(m - 1, n) + L(static_cast<std::uint32_t>(m)) * gaussian_binomial(m, n - 1));
        }
      }
    }
  }

  TEST_CASE("gaussian binomial satisfies the product definition") {
    // G(M,N) * prod_{i<=M}(1-q^i) * prod_{i<=N}(1-q^i) = prod_{i<=M+N}(1-q^i)
    auto prod = [](int upto) {
      MPoly p = MPoly::one();
      for (int i = 1; i <= upto; ++i) p *= one_minus_power(static_cast<std::uint32_t>(i));
      return p;
    };
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= 6; ++n) {
        CHECK(gaussian_binomial(m, n) * prod(m) * prod(n) == prod(m + n));
        CHECK(divide_exact(prod(m + n), prod(m) * prod(n)) == gaussian_binomial(m, n));
      }
    }
  }

  TEST_CASE("exact division refuses a remainder") {
    CHECK(divide_exact(C(1) - L(4), C(1) - L()) == C(1) + L() + L(2) + L(3));
    CHECK_THROWS_AS(divide_exact(C(1) + L(2), C(1) - L()), ContractViolation);
  }

  TEST_CASE("inverse products") {
    const std::vector<MPoly> t_only = {T()};
    CHECK(inv_one_minus_product(t_only, 3).poly() == C(1) + T() + T(2) + T(3));
    // Parts of size at most 2: 1, 1, 2, 2.
    const std::vector<MPoly> t12 = {T(), T(2)};
    CHECK(inv_one_minus_product(t12, 3).poly() == C(1) + T() + C(2) * T(2) + C(2) * T(3));
    const std::vector<MPoly> lt2 = {L() * T(2)};
    CHECK(inv_one_minus_product(lt2, 4).poly() == C(1) + L() * T(2) + L(2) * T(4));
    const std::vector<MPoly> bad = {L()};
    CHECK_THROWS_AS(inv_one_minus_product(bad, 4), PreconditionError);
  }

  TEST_CASE("series inversion: (1 - m) / (1 - m) = 1 mod t^{N+1}") {
    for (const MPoly& m : {T(), L() * T(), L(3) * T(2), C(2) * L() * T(3)}) {
      for (std::uint32_t order = 0; order <= 10; ++order) {
        const std::vector<MPoly> factors = {m};
        const MPoly inv = inv_one_minus_product(factors, order).poly();
        CHECK((inv * (MPoly::one() - m)).truncated(order) == MPoly::one());
      }
    }
  }

  TEST_CASE("partition generating function against the pentagonal recurrence") {
    std::vector<MPoly> factors;
    for (std::uint32_t i = 1; i <= 20; ++i) factors.push_back(T(i));
    const MPoly p = inv_one_minus_product(factors, 20).poly();
    for (std::uint32_t n = 0; n <= 20; ++n) {
      CHECK(p.coefficient(Exponent{0, n}) == Integer(oracle::partition_count(static_cast<int>(n))));
    }
  }

  TEST_CASE("truncated series arithmetic re-truncates") {
    TruncatedSeries s(2);
    s *= C(1) + T();
    s *= C(1) + T();
    s *= C(1) + T();
    CHECK(s.poly() == C(1) + C(3) * T() + C(3) * T(2));
    s += T(5);
    CHECK(s.poly().max_t_degree() == 2);
  }

  TEST_CASE("(Lt)^s C(L, 1/(Lt)) substitution") {
    const MPoly q = L();  // main variable plays q
    CHECK(substitute_theorem2(MPoly::one(), 0) == MPoly::one());
    CHECK(substitute_theorem2(q + T(), 1) == L(2) * T() + C(1));
    CHECK(substitute_theorem2(T(2), 2) == MPoly::one());
    CHECK_THROWS(substitute_theorem2(T(3), 2));
  }

  TEST_CASE("first difference") {
    CHECK_FALSE(first_difference(L() + C(1), C(1) + L()).has_value());
    const auto d = first_difference(C(1) + L() * T(), C(1) + L(2) * T());
    REQUIRE(d.has_value());
    CHECK(*d == Exponent{1, 1});
  }
}
