#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qhilb {

using Integer = boost::multiprecision::cpp_int;

/// Exponent pair of a bivariate monomial. `main` is the exponent of L (or q),
/// `t` the exponent of t. Ordered by (t, main): the canonical term order.
struct Exponent {
  std::uint32_t main = 0;
  std::uint32_t t = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.main <=> b.main;
  }
};

/// Exact polynomial in two variables with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so structural equality
/// is polynomial equality.
class MPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  MPoly() = default;
  explicit MPoly(Integer constant);

  static MPoly monomial(Integer coefficient, std::uint32_t main_exp, std::uint32_t t_exp = 0);
  static MPoly one() { return MPoly(Integer(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(Exponent e) const;

  /// Adds `c * main^e.main * t^e.t`, dropping the term if it cancels.
  void add_term(Exponent e, const Integer& c);

  std::uint32_t max_main_degree() const;
  std::uint32_t max_t_degree() const;
  bool is_univariate_main() const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly operator-() const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Multiplies by main^main_exp * t^t_exp.
  MPoly shifted(std::uint32_t main_exp, std::uint32_t t_exp) const;
  /// Drops every term with t-exponent above `t_order`.
  MPoly truncated(std::uint32_t t_order) const;
  /// Coefficient of t^e as a polynomial in the main variable.
  MPoly t_slice(std::uint32_t t_exp) const;

  Integer evaluate(const Integer& main_value, const Integer& t_value) const;

  /// Text form such as `1 + 3*L + L^2`, terms in canonical order.
  std::string to_string(const std::string& main_name = "L", const std::string& t_name = "t") const;

 private:
  Terms terms_;
};

/// First exponent (in canonical order) where the two polynomials differ.
std::optional<Exponent> first_difference(const MPoly& a, const MPoly& b);

/// Gaussian binomial G(M,N) in the main variable: generating polynomial of
/// partitions fitting in an M x N box, by size. Memoised; thread-safe.
MPoly gaussian_binomial(int m, int n);

/// 1 - main^power.
MPoly one_minus_power(std::uint32_t power);

/// Exact quotient of two polynomials in the main variable only. Throws
/// ContractViolation when the division leaves a remainder.
MPoly divide_exact(const MPoly& numerator, const MPoly& denominator);

/// (L t)^shift * C(L, (L t)^{-1}) for C given in (q, t).
MPoly substitute_theorem2(const MPoly& c, std::uint32_t shift);

/// Polynomial reduced modulo t^{order+1}; arithmetic keeps that bound.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::uint32_t t_order, MPoly poly = MPoly::one());

  const MPoly& poly() const { return poly_; }
  std::uint32_t t_order() const { return t_order_; }

  TruncatedSeries& operator+=(const MPoly& other);
  TruncatedSeries& operator*=(const MPoly& other);
  /// Multiplies by 1 / (1 - m) for a monomial m with positive t-degree.
  TruncatedSeries& divide_by_one_minus(const MPoly& monomial);

 private:
  std::uint32_t t_order_;
  MPoly poly_;
};

/// prod 1/(1 - m) over the given monomials, expanded modulo t^{t_order+1}.
/// Every factor must be a single term with t-exponent >= 1.
TruncatedSeries inv_one_minus_product(std::span<const MPoly> factors, std::uint32_t t_order);

}  // namespace qhilb
