#include "qhilb/qpoly.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <utility>
#include <vector>

#include "qhilb/error.hpp"

namespace qhilb {

MPoly::MPoly(Integer constant) {
  if (constant != 0) terms_.emplace(Exponent{}, std::move(constant));
}

MPoly MPoly::monomial(Integer coefficient, std::uint32_t main_exp, std::uint32_t t_exp) {
  MPoly p;
  p.add_term(Exponent{main_exp, t_exp}, coefficient);
  return p;
}

Integer MPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MPoly::add_term(Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t MPoly::max_main_degree() const {
  std::uint32_t deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.main);
  return deg;
}

std::uint32_t MPoly::max_t_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.t;
}

bool MPoly::is_univariate_main() const {
  return max_t_degree() == 0;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term(Exponent{ea.main + eb.main, ea.t + eb.t}, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::shifted(std::uint32_t main_exp, std::uint32_t t_exp) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    r.terms_.emplace_hint(r.terms_.end(), Exponent{e.main + main_exp, e.t + t_exp}, c);
  }
  return r;
}

MPoly MPoly::truncated(std::uint32_t t_order) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.t > t_order) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

MPoly MPoly::t_slice(std::uint32_t t_exp) const {
  MPoly r;
  auto it = terms_.lower_bound(Exponent{0, t_exp});
  for (; it != terms_.end() && it->first.t == t_exp; ++it) {
    r.terms_.emplace_hint(r.terms_.end(), Exponent{it->first.main, 0}, it->second);
  }
  return r;
}

Integer MPoly::evaluate(const Integer& main_value, const Integer& t_value) const {
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    total += c * boost::multiprecision::pow(main_value, e.main) * boost::multiprecision::pow(t_value, e.t);
  }
  return total;
}

namespace {

void append_power(std::ostringstream& out, const std::string& name, std::uint32_t exp, bool& wrote) {
  if (exp == 0) return;
  if (wrote) out << '*';
  out << name;
  if (exp > 1) out << '^' << exp;
  wrote = true;
}

}  // namespace

std::string MPoly::to_string(const std::string& main_name, const std::string& t_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    bool constant = e.main == 0 && e.t == 0;
    if (magnitude != 1 || constant) {
      out << magnitude;
      wrote = true;
    }
    append_power(out, main_name, e.main, wrote);
    append_power(out, t_name, e.t, wrote);
  }
  return out.str();
}

std::optional<Exponent> first_difference(const MPoly& a, const MPoly& b) {
  MPoly diff = a - b;
  if (diff.is_zero()) return std::nullopt;
  return diff.terms().begin()->first;
}

MPoly one_minus_power(std::uint32_t power) {
  MPoly r = MPoly::one();
  r.add_term(Exponent{power, 0}, Integer(-1));
  return r;
}

namespace {

class GaussianMemo {
 public:
  MPoly get(int m, int n) {
    if (m == 0 || n == 0) return MPoly::one();
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find({m, n});
      if (it != table_.end()) return it->second;
    }
    MPoly value = get(m - 1, n) + get(m, n - 1).shifted(static_cast<std::uint32_t>(m), 0);
    std::unique_lock lock(mutex_);
    return table_.try_emplace({m, n}, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, MPoly> table_;
};

}  // namespace

MPoly gaussian_binomial(int m, int n) {
  require(m >= 0 && n >= 0, "gaussian_binomial: negative argument");
  static GaussianMemo memo;
  return memo.get(m, n);
}

MPoly divide_exact(const MPoly& numerator, const MPoly& denominator) {
  require(!denominator.is_zero(), "divide_exact: zero denominator");
  require(numerator.is_univariate_main() && denominator.is_univariate_main(),
          "divide_exact: only polynomials in the main variable are supported");
  if (numerator.is_zero()) return MPoly{};

  auto dense = [](const MPoly& p) {
    std::vector<Integer> v(p.max_main_degree() + 1);
    for (const auto& [e, c] : p.terms()) v[e.main] = c;
    return v;
  };
  std::vector<Integer> rem = dense(numerator);
  const std::vector<Integer> den = dense(denominator);
  const std::size_t dd = den.size() - 1;
  ensure(rem.size() >= den.size(), "divide_exact: denominator degree exceeds numerator degree");

  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Integer& lead = rem[i + dd];
    if (lead == 0) continue;
    ensure(lead % den[dd] == 0, "divide_exact: coefficient not divisible");
    Integer q = lead / den[dd];
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * den[j];
    quot[i] = std::move(q);
  }
  for (const auto& c : rem) ensure(c == 0, "divide_exact: non-zero remainder");

  MPoly result;
  for (std::size_t i = 0; i < quot.size(); ++i) {
    result.add_term(Exponent{static_cast<std::uint32_t>(i), 0}, quot[i]);
  }
  return result;
}

MPoly substitute_theorem2(const MPoly& c, std::uint32_t shift) {
  MPoly r;
  for (const auto& [e, coeff] : c.terms()) {
    ensure(e.t <= shift, "substitute_theorem2: shift smaller than t-degree gives a negative exponent");
    const std::uint32_t rest = shift - e.t;
    r.add_term(Exponent{e.main + rest, rest}, coeff);
  }
  return r;
}

TruncatedSeries::TruncatedSeries(std::uint32_t t_order, MPoly poly)
    : t_order_(t_order), poly_(poly.truncated(t_order)) {}

TruncatedSeries& TruncatedSeries::operator+=(const MPoly& other) {
  poly_ += other.truncated(t_order_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const MPoly& other) {
  MPoly r;
  for (const auto& [ea, ca] : poly_.terms()) {
    for (const auto& [eb, cb] : other.terms()) {
      if (ea.t + eb.t > t_order_) break;
      r.add_term(Exponent{ea.main + eb.main, ea.t + eb.t}, ca * cb);
    }
  }
  poly_ = std::move(r);
  return *this;
}

TruncatedSeries& TruncatedSeries::divide_by_one_minus(const MPoly& monomial) {
  require(monomial.term_count() == 1, "inv_one_minus_product: factor must be a monomial");
  const auto& [e, c] = *monomial.terms().begin();
  require(e.t >= 1, "inv_one_minus_product: factor has t-exponent 0");
  if (e.t > t_order_) return *this;

  // S / (1 - m) = S + m * S + m^2 * S + ..., one t-slice at a time.
  MPoly result;
  for (std::uint32_t deg = 0; deg <= t_order_; ++deg) {
    MPoly slice = poly_.t_slice(deg);
    if (deg >= e.t) {
      MPoly carried = result.t_slice(deg - e.t);
      for (const auto& [ec, cc] : carried.terms()) slice.add_term(Exponent{ec.main + e.main, 0}, cc * c);
    }
    for (const auto& [es, cs] : slice.terms()) result.add_term(Exponent{es.main, deg}, cs);
  }
  poly_ = std::move(result);
  return *this;
}

TruncatedSeries inv_one_minus_product(std::span<const MPoly> factors, std::uint32_t t_order) {
  for (const auto& f : factors) {
    require(f.term_count() == 1, "inv_one_minus_product: factor must be a monomial");
    require(f.terms().begin()->first.t >= 1, "inv_one_minus_product: factor has t-exponent 0");
  }
  TruncatedSeries series(t_order);
  for (const auto& f : factors) series.divide_by_one_minus(f);
  return series;
}

}  // namespace qhilb
