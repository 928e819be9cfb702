#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "lehmer/poly.hpp"

namespace lehmer {

/// c0 + c1 s + c2 t + c3 st in T = R[s,t]/(s^2 - S, t^2 - s t + Q).
///
/// With lambda := t and eta := s - t we get lambda + eta = s, (lambda + eta)^2 = S
/// and lambda * eta = Q, so T is a concrete home for a Lehmer pair over R.
/// T is free over R with basis 1, s, t, st.
template <class Field>
struct TowerElem {
  Poly<Field> c0, c1, c2, c3;

  friend bool operator==(const TowerElem&, const TowerElem&) = default;
};

template <class Field>
class TowerRing {
 public:
  using Elem = TowerElem<Field>;

  TowerRing(Poly<Field> s_squared, Poly<Field> q) : S_(std::move(s_squared)), Q_(std::move(q)) {
    S_.same_field(Q_);
  }

  const Field& field() const { return S_.field(); }
  const Poly<Field>& s_squared() const { return S_; }
  const Poly<Field>& q() const { return Q_; }

  Elem from_base(Poly<Field> r) const { return {std::move(r), zero_(), zero_(), zero_()}; }
  Elem zero() const { return from_base(zero_()); }
  Elem one() const { return from_base(Poly<Field>::one(field())); }
  Elem s() const { return {zero_(), one_(), zero_(), zero_()}; }
  Elem t() const { return {zero_(), zero_(), one_(), zero_()}; }

  Elem lambda() const { return t(); }
  Elem eta() const { return sub(s(), t()); }

  Elem add(const Elem& a, const Elem& b) const { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3}; }
  Elem sub(const Elem& a, const Elem& b) const { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3}; }

  Elem mul(const Elem& a, const Elem& b) const {
    // view each element as u + v t with u, v in R[s]/(s^2 - S):
    // (u + v t)(w + z t) = (uw - vz Q) + (uz + vw + vz s) t
    const Inner u{a.c0, a.c1}, v{a.c2, a.c3}, w{b.c0, b.c1}, z{b.c2, b.c3};
    const Inner vz = inner_mul(v, z);
    const Inner lo = inner_sub(inner_mul(u, w), inner_scale(vz, Q_));
    const Inner hi = inner_add(inner_add(inner_mul(u, z), inner_mul(v, w)), inner_times_s(vz));
    return {lo.a, lo.b, hi.a, hi.b};
  }

  Elem pow(Elem base, std::uint64_t e) const {
    Elem result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      e >>= 1;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }

  Elem scale(const Elem& a, const Poly<Field>& r) const { return {a.c0 * r, a.c1 * r, a.c2 * r, a.c3 * r}; }

  /// Ring map s |-> P, valid when P^2 = S: lands in the subalgebra R[t].
  Elem specialize_s(const Elem& a, const Poly<Field>& P) const {
    return {a.c0 + a.c1 * P, zero_(), a.c2 + a.c3 * P, zero_()};
  }

 private:
  struct Inner {
    Poly<Field> a, b;  // a + b s
  };

  Poly<Field> zero_() const { return Poly<Field>(field()); }
  Poly<Field> one_() const { return Poly<Field>::one(field()); }

  Inner inner_mul(const Inner& x, const Inner& y) const {
    return {x.a * y.a + x.b * y.b * S_, x.a * y.b + x.b * y.a};
  }
  Inner inner_add(const Inner& x, const Inner& y) const { return {x.a + y.a, x.b + y.b}; }
  Inner inner_sub(const Inner& x, const Inner& y) const { return {x.a - y.a, x.b - y.b}; }
  Inner inner_scale(const Inner& x, const Poly<Field>& r) const { return {x.a * r, x.b * r}; }
  Inner inner_times_s(const Inner& x) const { return {x.b * S_, x.a}; }

  Poly<Field> S_, Q_;
};

}  // namespace lehmer
