#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "lehmer/error.hpp"
#include "lehmer/poly.hpp"

namespace lehmer {

/// Homogeneous form sum_k c[k] X^(d-k) Y^k with integer coefficients.
/// The zero form has no coefficients; every other form keeps exactly d+1.
class BivarForm {
 public:
  BivarForm() = default;

  explicit BivarForm(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    bool all_zero = true;
    for (const auto& v : c_) all_zero = all_zero && v == 0;
    if (all_zero) c_.clear();
  }

  static BivarForm zero() { return {}; }
  static BivarForm constant(const mpz_class& v) { return BivarForm({v}); }

  /// X^i Y^j scaled by c.
  static BivarForm monomial(const mpz_class& c, std::size_t i, std::size_t j) {
    std::vector<mpz_class> cs(i + j + 1, 0);
    cs[j] = c;
    return BivarForm(std::move(cs));
  }

  /// -1 for the zero form.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  /// Coefficient of X^(d-k) Y^k.
  const mpz_class& operator[](std::size_t k) const { return c_.at(k); }

  bool is_symmetric() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != c_[c_.size() - 1 - k]) return false;
    return true;
  }

  friend bool operator==(const BivarForm&, const BivarForm&) = default;

 private:
  std::vector<mpz_class> c_;
};

inline BivarForm form_add(const BivarForm& a, const BivarForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() != b.degree())
    throw Error(Errc::DegreeMismatch, "cannot add forms of degree " + std::to_string(a.degree()) +
                                          " and " + std::to_string(b.degree()));
  std::vector<mpz_class> out(a.coeffs());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return BivarForm(std::move(out));
}

inline BivarForm form_neg(const BivarForm& a) {
  std::vector<mpz_class> out(a.coeffs());
  for (auto& v : out) v = -v;
  return BivarForm(std::move(out));
}

inline BivarForm form_sub(const BivarForm& a, const BivarForm& b) { return form_add(a, form_neg(b)); }

inline BivarForm form_mul(const BivarForm& a, const BivarForm& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a[i] * b[j];
  }
  return BivarForm(std::move(out));
}

inline BivarForm form_pow(const BivarForm& a, unsigned e) {
  BivarForm r = BivarForm::constant(1);
  for (unsigned i = 0; i < e; ++i) r = form_mul(r, a);
  return r;
}

/// Exact quotient in Z[X,Y]; NotDivisible if b does not divide a there.
inline BivarForm form_exact_div(const BivarForm& a, const BivarForm& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero form");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(Errc::NotDivisible, "divisor has larger degree");
  const auto& bc = b.coeffs();
  const auto& ac = a.coeffs();
  std::size_t low = 0;
  while (bc[low] == 0) ++low;  // b = Y^low * b'
  for (std::size_t k = 0; k < low; ++k)
    if (ac[k] != 0) throw Error(Errc::NotDivisible, "power of Y does not divide");
  const std::size_t qlen = ac.size() - bc.size() + 1;
  std::vector<mpz_class> q(qlen, 0);
  for (std::size_t i = 0; i < qlen; ++i) {
    mpz_class acc = ac[i + low];
    for (std::size_t l = 0; l < i; ++l)
      if (i + low - l < bc.size()) acc -= q[l] * bc[i + low - l];
    if (!mpz_divisible_p(acc.get_mpz_t(), bc[low].get_mpz_t()))
      throw Error(Errc::NotDivisible, "non-integral quotient coefficient");
    mpz_divexact(q[i].get_mpz_t(), acc.get_mpz_t(), bc[low].get_mpz_t());
  }
  BivarForm quotient(std::move(q));
  if (form_mul(quotient, b) != a) throw Error(Errc::NotDivisible, "nonzero remainder");
  return quotient;
}

/// X^n - Y^n.
inline BivarForm xn_minus_yn(unsigned n) {
  std::vector<mpz_class> cs(n + 1, 0);
  cs[0] = 1;
  cs[n] = -1;
  return BivarForm(std::move(cs));
}

/// P_n(X,Y) = sum_{k<n} X^(n-1-k) Y^k.
inline BivarForm pn_form(unsigned n) {
  if (n == 0) throw Error(Errc::PreconditionViolated, "P_n needs n >= 1");
  return BivarForm(std::vector<mpz_class>(n, 1));
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> small, large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline int mobius(unsigned n) {
  if (n == 0) throw Error(Errc::PreconditionViolated, "mobius needs n >= 1");
  int mu = 1;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

namespace detail {

class CyclotomicCache {
 public:
  static CyclotomicCache& instance() {
    static CyclotomicCache cache;
    return cache;
  }

  BivarForm get(unsigned n) {
    {
      std::shared_lock lock(mu_);
      if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    }
    // computed outside the lock; concurrent writers store identical values
    BivarForm denom = BivarForm::constant(1);
    for (unsigned d : divisors(n))
      if (d < n) denom = form_mul(denom, get(d));
    BivarForm phi = form_exact_div(xn_minus_yn(n), denom);
    std::unique_lock lock(mu_);
    return memo_.emplace(n, std::move(phi)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<unsigned, BivarForm> memo_;
};

}  // namespace detail

/// Phi_n(X,Y), obtained by dividing X^n - Y^n by the lower cyclotomic forms.
/// Memoized process-wide; safe to call from several threads.
inline BivarForm cyclotomic_form(unsigned n) {
  if (n == 0) throw Error(Errc::PreconditionViolated, "Phi_n needs n >= 1");
  return detail::CyclotomicCache::instance().get(n);
}

/// Sylvester determinant via Bareiss fraction-free elimination.
inline mpz_class resultant(const BivarForm& a, const BivarForm& b) {
  if (a.degree() < 1 || b.degree() < 1) throw Error(Errc::ConstantForm, "resultant needs non-constant forms");
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  const std::size_t N = m + n;
  std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) M[r][r + k] = a[k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) M[n + r][r + k] = b[k];

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < N && M[piv][k] == 0) ++piv;
      if (piv == N) return 0;
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) {
        mpz_class t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign * M[N - 1][N - 1];
}

struct ResultantCheck {
  bool holds;
  mpz_class value;
};

/// |Res(P_m, P_n)| = 1 when gcd(m, n) = 1, and Res = 0 otherwise.
inline ResultantCheck check_res_pm_pn(unsigned m, unsigned n) {
  if (m < 2 || n < 2) throw Error(Errc::PreconditionViolated, "P_m, P_n need m, n >= 2");
  mpz_class r = resultant(pn_form(m), pn_form(n));
  unsigned g = std::gcd(m, n);
  bool ok = g == 1 ? abs(r) == 1 : r == 0;
  return {ok, r};
}

/// True iff (X+Y)^2 divides a: the dehomogenization at Y = 1 must have a
/// double root at X = -1 (value and derivative both vanish there).
inline bool divisible_by_xy_squared(const BivarForm& a) {
  if (a.is_zero()) return true;
  const long d = a.degree();
  mpz_class value = 0, slope = 0;
  for (long k = 0; k <= d; ++k) {
    const long e = d - k;  // power of X
    const int s = (e % 2 == 0) ? 1 : -1;
    value += s * a[static_cast<std::size_t>(k)];
    if (e > 0) slope += -s * e * a[static_cast<std::size_t>(k)];
  }
  return value == 0 && slope == 0;
}

/// a - (X+Y)^2 q with deg_Y-graded q chosen so that the remainder only has
/// X^d and X^(d-1) Y terms. Zero exactly when (X+Y)^2 | a.
inline BivarForm rem_mod_xy_squared(const BivarForm& a) {
  if (a.is_zero()) return a;
  const std::size_t d = static_cast<std::size_t>(a.degree());
  if (d < 2) return a;
  // coefficients in Y (with X = 1), divided by the monic 1 + 2y + y^2 from the top
  std::vector<mpz_class> r(a.coeffs());
  for (std::size_t k = d; k >= 2; --k) {
    mpz_class q = r[k];
    if (q == 0) continue;
    r[k] = 0;
    r[k - 1] -= 2 * q;
    r[k - 2] -= q;
  }
  return BivarForm(std::move(r));
}

/// C_n with P_n = (X+Y)^2 C_n + (-1)^((n-1)/2) (XY)^((n-1)/2), n odd >= 3.
inline BivarForm cn_form(unsigned n) {
  if (n < 3 || n % 2 == 0) throw Error(Errc::PreconditionViolated, "C_n needs odd n >= 3");
  const unsigned h = (n - 1) / 2;
  const mpz_class sign = (h % 2 == 0) ? 1 : -1;
  BivarForm diff = form_sub(pn_form(n), BivarForm::monomial(sign, h, h));
  BivarForm xy2({1, 2, 1});
  return form_exact_div(diff, xy2);
}

/// Substitutes X <- u, Y <- v in K[x]; integer coefficients map into K.
template <class Field>
Poly<Field> eval_form(const BivarForm& a, const Poly<Field>& u, const Poly<Field>& v) {
  u.same_field(v);
  const Field& f = u.field();
  Poly<Field> acc(f);
  if (a.is_zero()) return acc;
  const std::size_t d = static_cast<std::size_t>(a.degree());
  std::vector<Poly<Field>> upow{Poly<Field>::one(f)}, vpow{Poly<Field>::one(f)};
  for (std::size_t i = 0; i < d; ++i) {
    upow.push_back(upow.back() * u);
    vpow.push_back(vpow.back() * v);
  }
  for (std::size_t k = 0; k <= d; ++k) {
    auto c = f.from_integer(a[k]);
    if (f.is_zero(c)) continue;
    acc += (upow[d - k] * vpow[k]).scaled(c);
  }
  return acc;
}

/// Text form in X and Y, descending powers of X, e.g. X^2-X*Y+Y^2.
inline std::string to_string(const BivarForm& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const std::size_t d = static_cast<std::size_t>(a.degree());
  auto var = [](char v, std::size_t e) {
    std::string s(1, v);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
  };
  for (std::size_t k = 0; k <= d; ++k) {
    const mpz_class& c = a[k];
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    mpz_class mag = abs(c);
    std::string mono;
    if (d - k > 0) mono += var('X', d - k);
    if (k > 0) mono += (mono.empty() ? "" : "*") + var('Y', k);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace lehmer
