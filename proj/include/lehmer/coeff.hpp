#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>

#include "lehmer/error.hpp"

namespace lehmer {

/// Deterministic trial division; moduli here are desk scale (< 2^32).
constexpr bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

enum class FieldKind { Rationals, PrimeField };

/// Runtime description of a coefficient field K: either Q or F_p.
struct FieldDesc {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;  // 0 for Q

  static FieldDesc rationals() { return {}; }
  static FieldDesc prime(std::uint64_t p);

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

inline std::uint64_t characteristic(const FieldDesc& fd) noexcept {
  return fd.kind == FieldKind::Rationals ? 0 : fd.p;
}

/// The field Q. Elements are GMP rationals kept in lowest terms.
class Rationals {
 public:
  using value_type = mpq_class;
  static constexpr bool is_prime_field = false;

  FieldDesc desc() const { return FieldDesc::rationals(); }
  std::uint64_t characteristic() const noexcept { return 0; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long v) const { return value_type(v); }
  value_type from_integer(const mpz_class& v) const { return value_type(v); }
  value_type from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    value_type q(num, den);
    q.canonicalize();
    return q;
  }
  value_type canonical(value_type v) const {
    v.canonicalize();
    return v;
  }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool is_negative(const value_type& a) const { return sgn(a) < 0; }

  std::string to_string(const value_type& a) const { return a.get_str(); }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// The prime field F_p for a prime p < 2^32, so products fit in 64 bits.
class PrimeField {
 public:
  using value_type = std::uint64_t;
  static constexpr bool is_prime_field = true;
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= kMaxModulus)
      throw Error(Errc::InvalidModulus, "modulus " + std::to_string(p) + " exceeds 2^32");
    if (!is_prime_u64(p))
      throw Error(Errc::InvalidModulus, std::to_string(p) + " is not prime");
  }

  FieldDesc desc() const { return {FieldKind::PrimeField, p_}; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::uint64_t modulus() const noexcept { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const {
    auto m = static_cast<long long>(p_);
    long long r = static_cast<long long>(v) % m;
    return static_cast<value_type>(r < 0 ? r + m : r);
  }
  value_type from_integer(const mpz_class& v) const {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
  }
  value_type from_fraction(const mpz_class& num, const mpz_class& den) const {
    value_type d = from_integer(den);
    if (d == 0) throw Error(Errc::DivisionByZero, "denominator vanishes mod " + std::to_string(p_));
    return mul(from_integer(num), inv(d));
  }
  value_type canonical(value_type v) const { return v % p_; }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
    // extended Euclid on signed 64-bit; p < 2^32 keeps everything in range
    std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
      std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    if (t0 < 0) t0 += static_cast<std::int64_t>(p_);
    return static_cast<value_type>(t0);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool is_negative(value_type) const { return false; }

  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

inline FieldDesc FieldDesc::prime(std::uint64_t p) { return PrimeField(p).desc(); }

template <class Field>
concept CoefficientField = requires(const Field& f, const typename Field::value_type& a) {
  { f.add(a, a) } -> std::convertible_to<typename Field::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename Field::value_type>;
  { f.inv(a) } -> std::convertible_to<typename Field::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.desc() } -> std::same_as<FieldDesc>;
};

/// A single coefficient bound to its field. Mixing fields raises FieldMismatch.
template <CoefficientField Field>
class FieldElem {
 public:
  using value_type = typename Field::value_type;

  FieldElem(Field field, value_type v) : field_(std::move(field)), value_(field_.canonical(std::move(v))) {}

  const Field& field() const noexcept { return field_; }
  const value_type& value() const noexcept { return value_; }
  bool is_zero() const { return field_.is_zero(value_); }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Field field_;
  value_type value_;
};

namespace detail {
template <class Field>
void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(Errc::FieldMismatch, "operands belong to different fields");
}
}  // namespace detail

template <class Field>
FieldElem<Field> field_add(const FieldElem<Field>& a, const FieldElem<Field>& b) {
  detail::require_same_field(a.field(), b.field());
  return {a.field(), a.field().add(a.value(), b.value())};
}

template <class Field>
FieldElem<Field> field_mul(const FieldElem<Field>& a, const FieldElem<Field>& b) {
  detail::require_same_field(a.field(), b.field());
  return {a.field(), a.field().mul(a.value(), b.value())};
}

template <class Field>
FieldElem<Field> field_neg(const FieldElem<Field>& a) {
  return {a.field(), a.field().neg(a.value())};
}

template <class Field>
FieldElem<Field> field_inv(const FieldElem<Field>& a) {
  return {a.field(), a.field().inv(a.value())};
}

}  // namespace lehmer
