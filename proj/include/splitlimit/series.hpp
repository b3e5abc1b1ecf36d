#pragma once

#include <optional>
#include <string>
#include <vector>

#include <splitlimit/bignum.hpp>

namespace splitlimit {

// Truncated power series with exact rational coefficients, univariate in z or
// bivariate in (z,u).  EGF convention: the labeled count of size n is
// n! * [z^n].  Truncation is by z-degree only; the u-degree of each z-slice
// is whatever the arithmetic produces.  Values are immutable in spirit: all
// operations return fresh series.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;

  static TruncatedSeries zero(int order, int vars = 1);
  static TruncatedSeries constant(const Rat& c, int order, int vars = 1);
  static TruncatedSeries z(int order, int vars = 1);
  static TruncatedSeries u(int order);

  int order() const { return order_; }
  int vars() const { return vars_; }

  const Rat& coeff(int n, int j = 0) const;  // [z^n u^j]
  void set_coeff(int n, int j, const Rat& v);
  int u_degree(int n) const;  // -1 when the slice is zero
  int max_u_degree() const;

  Int labeled_count(int n) const;  // n! * [z^n]; requires a u-free slice

  TruncatedSeries truncated(int new_order) const;
  TruncatedSeries derivative() const;               // d/dz
  TruncatedSeries u_slice(int j) const;             // [u^j], univariate result
  TruncatedSeries at_u(const Rat& u0) const;        // substitute u = u0
  TruncatedSeries promoted_bivariate() const;

  bool is_zero() const;
  bool nonnegative() const;

  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  // first monomial where the two series differ, e.g. "z^4*u^2: 1/3 vs 1/2";
  // empty when equal (compared up to the smaller order)
  std::string first_difference(const TruncatedSeries& o) const;

  TruncatedSeries operator-() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a);
  friend TruncatedSeries operator+(const TruncatedSeries& a, const Rat& c);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const Rat& c);

  std::string to_string(int max_terms = 12) const;

 private:
  void trim(int n);  // drop trailing zero u-coefficients of slice n

  int order_ = 0;
  int vars_ = 1;
  std::vector<std::vector<Rat>> c_;
};

// sum_{l >= r} s^l / l!   (requires a zero constant slice)
TruncatedSeries exp_ge(const TruncatedSeries& s, int r);

// 1/s for s with nonzero u-free constant term
TruncatedSeries inverse(const TruncatedSeries& s);
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries pow(const TruncatedSeries& s, int e);

// Partial-sum evaluation with an explicit geometric tail bound.  The bound
// assumes |[z^n]s| * rho_est^n is bounded by its maximum over the computed
// range (true for the combinatorial series handled here, whose coefficients
// grow like rho^-n times a polynomial correction).  Throws, reporting the
// bound, when it exceeds `tol`.
struct SeriesValue {
  BigFloat value;
  BigFloat tail_bound;
};
SeriesValue evaluate(const TruncatedSeries& s, const BigFloat& z0,
                     const BigFloat& rho_est, const BigFloat& tol,
                     const std::optional<BigFloat>& u0 = std::nullopt);

}  // namespace splitlimit
