#include <splitlimit/series.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace splitlimit {

namespace {

const Rat kZero = 0;

// u-polynomial helpers on std::vector<Rat> (empty vector = zero)

void padd_into(std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (b.size() > a.size()) a.resize(b.size(), kZero);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

void psub_into(std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (b.size() > a.size()) a.resize(b.size(), kZero);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
}

// a += c * b
void paddmul_into(std::vector<Rat>& a, const Rat& c, const std::vector<Rat>& b) {
  if (c == 0) return;
  if (b.size() > a.size()) a.resize(b.size(), kZero);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += c * b[i];
}

// a += b * c (polynomial product)
void pmuladd_into(std::vector<Rat>& a, const std::vector<Rat>& b,
                  const std::vector<Rat>& c) {
  if (b.empty() || c.empty()) return;
  if (a.size() < b.size() + c.size() - 1) a.resize(b.size() + c.size() - 1, kZero);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) a[i + j] += b[i] * c[j];
  }
}

void ptrim(std::vector<Rat>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

TruncatedSeries TruncatedSeries::zero(int order, int vars) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  if (vars != 1 && vars != 2) throw std::invalid_argument("series has 1 or 2 variables");
  TruncatedSeries s;
  s.order_ = order;
  s.vars_ = vars;
  s.c_.assign(order + 1, {});
  return s;
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, int order, int vars) {
  TruncatedSeries s = zero(order, vars);
  if (c != 0) s.c_[0] = {c};
  return s;
}

TruncatedSeries TruncatedSeries::z(int order, int vars) {
  TruncatedSeries s = zero(order, vars);
  if (order >= 1) s.c_[1] = {Rat(1)};
  return s;
}

TruncatedSeries TruncatedSeries::u(int order) {
  TruncatedSeries s = zero(order, 2);
  s.c_[0] = {Rat(0), Rat(1)};
  return s;
}

const Rat& TruncatedSeries::coeff(int n, int j) const {
  if (n < 0 || n > order_ || j < 0) throw std::out_of_range("coeff(n,j)");
  if (static_cast<std::size_t>(j) >= c_[n].size()) return kZero;
  return c_[n][j];
}

void TruncatedSeries::set_coeff(int n, int j, const Rat& v) {
  if (n < 0 || n > order_ || j < 0) throw std::out_of_range("set_coeff(n,j)");
  if (j > 0 && vars_ == 1) throw std::invalid_argument("u-coefficient in univariate series");
  if (static_cast<std::size_t>(j) >= c_[n].size()) c_[n].resize(j + 1, kZero);
  c_[n][j] = v;
  trim(n);
}

int TruncatedSeries::u_degree(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("u_degree(n)");
  return static_cast<int>(c_[n].size()) - 1;
}

int TruncatedSeries::max_u_degree() const {
  int d = -1;
  for (int n = 0; n <= order_; ++n) d = std::max(d, u_degree(n));
  return d;
}

Int TruncatedSeries::labeled_count(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("labeled_count beyond solved order");
  if (c_[n].size() > 1) throw std::invalid_argument("labeled_count on a u-dependent slice");
  Rat v = coeff(n, 0) * Rat(factorial(n));
  if (denominator(v) != 1) throw std::logic_error("labeled count is not an integer");
  return numerator(v);
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("cannot extend a truncated series");
  TruncatedSeries s = zero(new_order, vars_);
  for (int n = 0; n <= s.order_; ++n) s.c_[n] = c_[n];
  return s;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries s = zero(std::max(order_ - 1, 0), vars_);
  for (int n = 0; n + 1 <= order_; ++n) {
    s.c_[n] = c_[n + 1];
    for (auto& v : s.c_[n]) v *= (n + 1);
  }
  return s;
}

TruncatedSeries TruncatedSeries::u_slice(int j) const {
  TruncatedSeries s = zero(order_, 1);
  for (int n = 0; n <= order_; ++n) {
    const Rat& v = coeff(n, j);
    if (v != 0) s.c_[n] = {v};
  }
  return s;
}

TruncatedSeries TruncatedSeries::at_u(const Rat& u0) const {
  TruncatedSeries s = zero(order_, 1);
  for (int n = 0; n <= order_; ++n) {
    Rat acc = 0, p = 1;
    for (const Rat& v : c_[n]) {
      acc += v * p;
      p *= u0;
    }
    if (acc != 0) s.c_[n] = {acc};
  }
  return s;
}

TruncatedSeries TruncatedSeries::promoted_bivariate() const {
  TruncatedSeries s = *this;
  s.vars_ = 2;
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& slice : c_)
    if (!slice.empty()) return false;
  return true;
}

bool TruncatedSeries::nonnegative() const {
  for (const auto& slice : c_)
    for (const Rat& v : slice)
      if (v < 0) return false;
  return true;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  // compared on the common order range
  int common = std::min(order_, o.order_);
  for (int n = 0; n <= common; ++n) {
    std::size_t m = std::max(c_[n].size(), o.c_[n].size());
    for (std::size_t j = 0; j < m; ++j)
      if (coeff(n, static_cast<int>(j)) != o.coeff(n, static_cast<int>(j))) return false;
  }
  return true;
}

std::string TruncatedSeries::first_difference(const TruncatedSeries& o) const {
  int common = std::min(order_, o.order_);
  for (int n = 0; n <= common; ++n) {
    std::size_t m = std::max(c_[n].size(), o.c_[n].size());
    for (std::size_t j = 0; j < m; ++j) {
      const Rat& a = coeff(n, static_cast<int>(j));
      const Rat& b = o.coeff(n, static_cast<int>(j));
      if (a != b) {
        std::ostringstream ss;
        ss << "z^" << n;
        if (j > 0) ss << "*u^" << j;
        ss << ": " << a << " vs " << b;
        return ss.str();
      }
    }
  }
  return {};
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& slice : s.c_)
    for (auto& v : slice) v = -v;
  return s;
}

void TruncatedSeries::trim(int n) { ptrim(c_[n]); }

static void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("mixed univariate/bivariate arithmetic; promote first");
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_compatible(a, b);
  TruncatedSeries s = TruncatedSeries::zero(std::min(a.order(), b.order()), a.vars());
  for (int n = 0; n <= s.order_; ++n) {
    s.c_[n] = a.c_[n];
    padd_into(s.c_[n], b.c_[n]);
    s.trim(n);
  }
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_compatible(a, b);
  TruncatedSeries s = TruncatedSeries::zero(std::min(a.order(), b.order()), a.vars());
  for (int n = 0; n <= s.order_; ++n) {
    s.c_[n] = a.c_[n];
    psub_into(s.c_[n], b.c_[n]);
    s.trim(n);
  }
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_compatible(a, b);
  TruncatedSeries s = TruncatedSeries::zero(std::min(a.order(), b.order()), a.vars());
  for (int i = 0; i <= s.order_; ++i) {
    if (a.c_[i].empty()) continue;
    for (int j = 0; i + j <= s.order_; ++j) {
      if (b.c_[j].empty()) continue;
      pmuladd_into(s.c_[i + j], a.c_[i], b.c_[j]);
    }
  }
  for (int n = 0; n <= s.order_; ++n) s.trim(n);
  return s;
}

TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a) {
  TruncatedSeries s = a;
  if (c == 0) return TruncatedSeries::zero(a.order(), a.vars());
  for (auto& slice : s.c_)
    for (auto& v : slice) v *= c;
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const Rat& c) {
  TruncatedSeries s = a;
  if (s.c_[0].empty()) s.c_[0] = {c};
  else s.c_[0][0] += c;
  s.trim(0);
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const Rat& c) { return a + (-c); }

std::string TruncatedSeries::to_string(int max_terms) const {
  std::ostringstream ss;
  int emitted = 0;
  for (int n = 0; n <= order_ && emitted < max_terms; ++n) {
    for (std::size_t j = 0; j < c_[n].size() && emitted < max_terms; ++j) {
      if (c_[n][j] == 0) continue;
      if (emitted) ss << " + ";
      ss << c_[n][j];
      if (n) ss << "*z^" << n;
      if (j) ss << "*u^" << j;
      ++emitted;
    }
  }
  if (!emitted) ss << "0";
  ss << " + O(z^" << order_ + 1 << ")";
  return ss.str();
}

TruncatedSeries exp_ge(const TruncatedSeries& s, int r) {
  if (r < 0) throw std::invalid_argument("exp_ge: r must be >= 0");
  if (!s.coeff(0, 0).is_zero() || s.u_degree(0) > 0)
    throw std::invalid_argument("exp of unit series");
  const int N = s.order();
  // E = exp(s) via E' = s'E, slicewise in z with u-polynomial coefficients
  std::vector<std::vector<Rat>> szm(N + 1);  // m * s_m
  for (int m = 1; m <= N; ++m)
    for (int j = 0; j <= s.u_degree(m); ++j) szm[m].push_back(Rat(m) * s.coeff(m, j));
  std::vector<std::vector<Rat>> work(N + 1);
  work[0] = {Rat(1)};
  for (int n = 1; n <= N; ++n) {
    std::vector<Rat> acc;
    for (int m = 1; m <= n; ++m) pmuladd_into(acc, szm[m], work[n - m]);
    for (auto& v : acc) v /= n;
    ptrim(acc);
    work[n] = std::move(acc);
  }
  TruncatedSeries e = TruncatedSeries::zero(N, s.vars());
  for (int n = 0; n <= N; ++n)
    for (std::size_t j = 0; j < work[n].size(); ++j)
      e.set_coeff(n, static_cast<int>(j), work[n][j]);
  // subtract the l < r head: sum_{l<r} s^l / l!
  if (r > 0) {
    TruncatedSeries head = TruncatedSeries::constant(1, N, s.vars());
    TruncatedSeries p = TruncatedSeries::constant(1, N, s.vars());
    Rat inv_fact = 1;
    for (int l = 1; l < r; ++l) {
      p = p * s;
      inv_fact /= l;
      head = head + inv_fact * p;
    }
    e = e - head;
  } else {
    // r == 0: full exponential, nothing to subtract
  }
  return e;
}

TruncatedSeries inverse(const TruncatedSeries& s) {
  if (s.u_degree(0) > 0)
    throw std::invalid_argument("inverse: constant slice must be u-free");
  const Rat a0 = s.coeff(0, 0);
  if (a0 == 0) throw std::invalid_argument("inverse of a series with zero constant term");
  const int N = s.order();
  const Rat inv_a0 = Rat(1) / a0;
  std::vector<std::vector<Rat>> am(N + 1);
  for (int m = 1; m <= N; ++m)
    for (int j = 0; j <= s.u_degree(m); ++j) am[m].push_back(s.coeff(m, j));
  std::vector<std::vector<Rat>> b(N + 1);
  b[0] = {inv_a0};
  for (int n = 1; n <= N; ++n) {
    std::vector<Rat> acc;
    for (int m = 1; m <= n; ++m) pmuladd_into(acc, am[m], b[n - m]);
    for (auto& v : acc) v *= -inv_a0;
    ptrim(acc);
    b[n] = std::move(acc);
  }
  TruncatedSeries out = TruncatedSeries::zero(N, s.vars());
  for (int n = 0; n <= N; ++n)
    for (std::size_t j = 0; j < b[n].size(); ++j)
      out.set_coeff(n, static_cast<int>(j), b[n][j]);
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * inverse(b);
}

TruncatedSeries pow(const TruncatedSeries& s, int e) {
  if (e < 0) return inverse(pow(s, -e));
  TruncatedSeries acc = TruncatedSeries::constant(1, s.order(), s.vars());
  TruncatedSeries base = s;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

SeriesValue evaluate(const TruncatedSeries& s, const BigFloat& z0,
                     const BigFloat& rho_est, const BigFloat& tol,
                     const std::optional<BigFloat>& u0) {
  if (z0 < 0) throw std::invalid_argument("evaluate: z0 must be >= 0");
  if (s.vars() == 2 && !u0)
    throw std::invalid_argument("evaluate: bivariate series needs u0");
  const int N = s.order();
  BigFloat value = 0, zpow = 1, coeff_scale_max = 0, rpow = 1;
  for (int n = 0; n <= N; ++n) {
    BigFloat cn = 0;
    if (s.vars() == 1) {
      cn = BigFloat(s.coeff(n, 0));
    } else {
      BigFloat up = 1;
      for (int j = 0; j <= s.u_degree(n); ++j) {
        cn += BigFloat(s.coeff(n, j)) * up;
        up *= *u0;
      }
    }
    value += cn * zpow;
    coeff_scale_max = (std::max)(coeff_scale_max, abs(cn) * rpow);
    zpow *= z0;
    rpow *= rho_est;
  }
  BigFloat tail;
  if (z0 == 0) {
    tail = 0;
  } else {
    BigFloat q = z0 / rho_est;
    if (q >= 1)
      throw std::invalid_argument("evaluate: z0 is not strictly below the singularity estimate");
    tail = coeff_scale_max * pow(q, N + 1) / (1 - q);
  }
  if (tail > tol) {
    std::ostringstream ss;
    ss << "evaluate: tail bound " << tail << " exceeds tolerance " << tol;
    throw std::runtime_error(ss.str());
  }
  return {value, tail};
}

}  // namespace splitlimit
