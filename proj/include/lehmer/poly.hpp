#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lehmer/coeff.hpp"
#include "lehmer/error.hpp"

namespace lehmer {

/// Dense univariate polynomial over K, an element of R = K[x].
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial is the empty sequence and equality is structural.
template <CoefficientField Field>
class Poly {
 public:
  using field_type = Field;
  using value_type = typename Field::value_type;

  explicit Poly(Field field) : field_(std::move(field)) {}

  Poly(Field field, std::vector<value_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& v : c_) v = field_.canonical(std::move(v));
    trim();
  }

  static Poly constant(Field field, value_type c) { return Poly(std::move(field), {std::move(c)}); }
  static Poly one(Field field) {
    auto v = field.one();
    return constant(std::move(field), std::move(v));
  }
  static Poly monomial(Field field, value_type c, std::size_t deg) {
    std::vector<value_type> cs(deg + 1, field.zero());
    cs[deg] = std::move(c);
    return Poly(std::move(field), std::move(cs));
  }
  static Poly x(Field field) {
    auto v = field.one();
    return monomial(std::move(field), std::move(v), 1);
  }

  const Field& field() const noexcept { return field_; }
  FieldDesc desc() const { return field_.desc(); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::size_t size() const noexcept { return c_.size(); }

  std::span<const value_type> coeffs() const noexcept { return c_; }
  value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  const value_type& lead() const {
    if (c_.empty()) throw Error(Errc::ZeroArgument, "leading coefficient of 0");
    return c_.back();
  }
  FieldElem<Field> lead_elem() const { return {field_, lead()}; }

  Poly& operator+=(const Poly& o) {
    same_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    same_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = a.field_.neg(v);
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.same_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& f = a.field_;
    std::vector<value_type> out(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    Poly r(f);
    r.c_ = std::move(out);
    r.trim();
    return r;
  }

  Poly scaled(const value_type& s) const {
    Poly r(field_);
    if (field_.is_zero(s)) return r;
    r.c_.reserve(c_.size());
    for (const auto& v : c_) r.c_.push_back(field_.mul(v, s));
    return r;
  }

  /// Multiply by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    Poly r(field_);
    r.c_.assign(k, field_.zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  value_type eval(const value_type& at) const {
    value_type acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, at), *it);
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  void same_field(const Poly& o) const { detail::require_same_field(field_, o.field_); }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  Field field_;
  std::vector<value_type> c_;
};

template <class Field>
struct DivRem {
  Poly<Field> quotient;
  Poly<Field> remainder;
};

template <class Field>
DivRem<Field> divrem(const Poly<Field>& a, const Poly<Field>& b) {
  a.same_field(b);
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by 0");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly<Field>(f), a};

  std::vector<typename Field::value_type> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const auto inv_lead = f.inv(bc.back());
  std::vector<typename Field::value_type> quo(rem.size() - db, f.zero());
  for (std::size_t k = quo.size(); k-- > 0;) {
    auto q = f.mul(rem[k + db], inv_lead);
    if (f.is_zero(q)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = f.sub(rem[k + j], f.mul(q, bc[j]));
    quo[k] = std::move(q);
  }
  rem.resize(db);
  return {Poly<Field>(f, std::move(quo)), Poly<Field>(f, std::move(rem))};
}

template <class Field>
Poly<Field> rem(const Poly<Field>& a, const Poly<Field>& b) {
  return divrem(a, b).remainder;
}

/// a / b when b | a; NotDivisible otherwise.
template <class Field>
Poly<Field> exact_div(const Poly<Field>& a, const Poly<Field>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(Errc::NotDivisible, "remainder is nonzero");
  return q;
}

template <class Field>
bool divides(const Poly<Field>& d, const Poly<Field>& a) {
  if (d.is_zero()) return a.is_zero();
  return divrem(a, d).remainder.is_zero();
}

/// Unit-normalized representative; the zero polynomial stays zero.
template <class Field>
Poly<Field> monic(const Poly<Field>& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.field().inv(a.lead()));
}

template <class Field>
Poly<Field> poly_gcd(Poly<Field> a, Poly<Field> b) {
  a.same_field(b);
  while (!b.is_zero()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b = monic(b);
  }
  return monic(a);
}

/// Units of K[x] are exactly the nonzero constants.
template <class Field>
bool is_unit(const Poly<Field>& a) {
  return a.degree() == 0;
}

template <class Field>
bool is_associated(const Poly<Field>& a, const Poly<Field>& b) {
  return monic(a) == monic(b);
}

/// In the PID K[x], <a> + <b> = R exactly when gcd(a, b) is a unit.
template <class Field>
bool ideals_coprime(const Poly<Field>& a, const Poly<Field>& b) {
  return is_unit(poly_gcd(a, b));
}

/// Largest k with q^k | h.
template <class Field>
unsigned valuation(const Poly<Field>& q, Poly<Field> h) {
  if (h.is_zero()) throw Error(Errc::ZeroArgument, "valuation of 0 is infinite");
  if (q.is_constant()) throw Error(Errc::PreconditionViolated, "valuation needs a non-constant divisor");
  unsigned k = 0;
  for (;;) {
    auto [quo, r] = divrem(h, q);
    if (!r.is_zero()) return k;
    h = std::move(quo);
    ++k;
  }
}

template <class Field>
Poly<Field> derivative(const Poly<Field>& a) {
  const Field& f = a.field();
  if (a.size() <= 1) return Poly<Field>(f);
  std::vector<typename Field::value_type> out;
  out.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    out.push_back(f.mul(a.coeffs()[i], f.from_int(static_cast<long>(i))));
  return Poly<Field>(f, std::move(out));
}

template <class Field>
Poly<Field> pow(Poly<Field> base, std::uint64_t e) {
  auto result = Poly<Field>::one(base.field());
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

template <class Field>
Poly<Field> powmod(Poly<Field> base, std::uint64_t e, const Poly<Field>& m) {
  auto result = rem(Poly<Field>::one(base.field()), m);
  base = rem(base, m);
  while (e > 0) {
    if (e & 1) result = rem(result * base, m);
    e >>= 1;
    if (e > 0) base = rem(base * base, m);
  }
  return result;
}

/// An ideal of K[x] held by its unique monic generator (or 0).
template <class Field>
class MonicIdeal {
 public:
  explicit MonicIdeal(const Poly<Field>& a) : gen_(monic(a)) {}

  const Poly<Field>& generator() const noexcept { return gen_; }
  bool is_whole_ring() const { return is_unit(gen_); }
  bool contains(const Poly<Field>& b) const { return divides(gen_, b); }

  friend MonicIdeal operator+(const MonicIdeal& a, const MonicIdeal& b) {
    return MonicIdeal(poly_gcd(a.gen_, b.gen_));
  }
  friend bool operator==(const MonicIdeal&, const MonicIdeal&) = default;

 private:
  Poly<Field> gen_;
};

}  // namespace lehmer
