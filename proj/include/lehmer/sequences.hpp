#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lehmer/cyclo.hpp"
#include "lehmer/error.hpp"
#include "lehmer/poly.hpp"
#include "lehmer/tower.hpp"

namespace lehmer {

enum class SeqKind { PowerDiff, Lucas, Lehmer };

constexpr std::string_view kind_name(SeqKind k) noexcept {
  switch (k) {
    case SeqKind::PowerDiff: return "power";
    case SeqKind::Lucas: return "lucas";
    case SeqKind::Lehmer: return "lehmer";
  }
  return "?";
}

inline std::optional<SeqKind> parse_kind(std::string_view s) {
  if (s == "power" || s == "PowerDiff") return SeqKind::PowerDiff;
  if (s == "lucas" || s == "Lucas") return SeqKind::Lucas;
  if (s == "lehmer" || s == "Lehmer") return SeqKind::Lehmer;
  return std::nullopt;
}

/// Validated parameters. `a`, `b` are (f, g) for PowerDiff, (P, Q) = (a+b, ab)
/// of the Lucas pair, or (Rp, Q) = ((lambda+eta)^2, lambda*eta) for Lehmer.
/// Only validate() constructs these.
template <class Field>
class SeqParams {
 public:
  SeqKind kind() const noexcept { return kind_; }
  const Field& field() const noexcept { return a_.field(); }
  const Poly<Field>& a() const noexcept { return a_; }
  const Poly<Field>& b() const noexcept { return b_; }

  friend bool operator==(const SeqParams&, const SeqParams&) = default;

 private:
  template <class F>
  friend SeqParams<F> validate(SeqKind, Poly<F>, Poly<F>);

  SeqParams(SeqKind kind, Poly<Field> a, Poly<Field> b) : kind_(kind), a_(std::move(a)), b_(std::move(b)) {}

  SeqKind kind_;
  Poly<Field> a_, b_;
};

/// Checks the standing assumptions on the parameters.
///
/// For PowerDiff the ratio f/g is a root of unity exactly when f = c g with c
/// a root of unity in K (c = +-1 over Q, any c != 0 over F_p).
///
/// For Lucas and Lehmer no separate ratio test is needed: if alpha/beta were a
/// root of unity then P^2 = c Q (resp. Rp = c Q) for a constant c. With c != 0
/// coprimality forces Q, and then P (resp. Rp), to be units; c = 0 forces
/// P = 0 (resp. Rp = 0). Both cases are rejected below.
template <class Field>
SeqParams<Field> validate(SeqKind kind, Poly<Field> a, Poly<Field> b) {
  a.same_field(b);
  if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroParameter, "sequence parameters must be nonzero");
  if (kind == SeqKind::PowerDiff) {
    bool proportional = false;
    if (a.degree() == b.degree()) {
      if constexpr (Field::is_prime_field)
        proportional = monic(a) == monic(b);
      else
        proportional = a == b || a == -b;
    }
    if (proportional) throw Error(Errc::RatioRootOfUnity, "f/g is a root of unity");
  }
  if (!ideals_coprime(a, b)) throw Error(Errc::NotCoprime, "parameters generate non-coprime ideals");
  if (is_unit(a) && is_unit(b)) throw Error(Errc::BothUnits, "both parameters are units");
  return SeqParams<Field>(kind, std::move(a), std::move(b));
}

/// Term cache for one parameter set. References returned by term() stay valid
/// while the cache grows. Extending the cache is not thread-safe; reads of an
/// already-filled prefix are.
template <class Field>
class SeqTermCache {
 public:
  explicit SeqTermCache(SeqParams<Field> params) : params_(std::move(params)) {}

  const SeqParams<Field>& params() const noexcept { return params_; }
  const Field& field() const noexcept { return params_.field(); }
  std::uint64_t characteristic() const { return field().characteristic(); }

  /// Term with 1-based index n. PowerDiff uses f^n - g^n directly; Lucas and
  /// Lehmer use their three-term recurrences.
  const Poly<Field>& term(unsigned n) {
    if (n == 0) throw Error(Errc::PreconditionViolated, "sequence indices start at 1");
    fill(n);
    return terms_[n - 1];
  }

  void fill(unsigned n) {
    const auto& a = params_.a();
    const auto& b = params_.b();
    const auto one = Poly<Field>::one(field());
    while (terms_.size() < n) {
      const unsigned k = static_cast<unsigned>(terms_.size()) + 1;
      switch (params_.kind()) {
        case SeqKind::PowerDiff:
          if (k == 1) {
            apow_ = a;
            bpow_ = b;
          } else {
            *apow_ *= a;
            *bpow_ *= b;
          }
          terms_.push_back(*apow_ - *bpow_);
          break;
        case SeqKind::Lucas:
          if (k == 1)
            terms_.push_back(one);
          else if (k == 2)
            terms_.push_back(a);
          else
            terms_.push_back(a * terms_[k - 2] - b * terms_[k - 3]);
          break;
        case SeqKind::Lehmer:
          if (k <= 2)
            terms_.push_back(one);
          else if (k % 2 == 1)
            terms_.push_back(a * terms_[k - 2] - b * terms_[k - 3]);
          else
            terms_.push_back(terms_[k - 2] - b * terms_[k - 3]);
          break;
      }
    }
  }

 private:
  SeqParams<Field> params_;
  std::deque<Poly<Field>> terms_;
  std::optional<Poly<Field>> apow_, bpow_;
};

template <class Field>
Poly<Field> term(const SeqParams<Field>& params, unsigned n) {
  SeqTermCache<Field> cache(params);
  return cache.term(n);
}

namespace detail {

/// q in R with q * den = num in T, or OracleMismatch.
template <class Field>
Poly<Field> tower_quotient_in_base(const TowerRing<Field>& T, const TowerElem<Field>& num,
                                   const TowerElem<Field>& den) {
  const Poly<Field>* dc[] = {&den.c0, &den.c1, &den.c2, &den.c3};
  const Poly<Field>* nc[] = {&num.c0, &num.c1, &num.c2, &num.c3};
  for (int i = 0; i < 4; ++i) {
    if (dc[i]->is_zero()) continue;
    auto [q, r] = divrem(*nc[i], *dc[i]);
    if (!r.is_zero() || !(T.scale(den, q) == num))
      throw Error(Errc::OracleMismatch, "quotient does not lie in R");
    return q;
  }
  throw Error(Errc::OracleMismatch, "zero denominator in the tower");
}

}  // namespace detail

/// The defining quotient (lambda^n - eta^n) / (lambda - eta) (or / (lambda^2 -
/// eta^2) for even Lehmer n), evaluated by exact powering in the tower T.
/// Independent of the recurrence used by SeqTermCache.
template <class Field>
Poly<Field> oracle_term(const SeqParams<Field>& params, unsigned n) {
  if (n == 0) throw Error(Errc::PreconditionViolated, "sequence indices start at 1");
  if (params.kind() == SeqKind::PowerDiff)
    throw Error(Errc::PreconditionViolated, "oracle_term covers Lucas and Lehmer sequences");

  const bool lucas = params.kind() == SeqKind::Lucas;
  const auto& P = params.a();
  // for Lucas the tower has s^2 = P^2 and s is then specialized to P
  TowerRing<Field> T(lucas ? P * P : params.a(), params.b());
  auto lam = T.lambda();
  auto eta = T.eta();
  auto num = T.sub(T.pow(lam, n), T.pow(eta, n));
  auto den = T.sub(lam, eta);
  if (!lucas && n % 2 == 0) den = T.mul(den, T.add(lam, eta));
  if (lucas) {
    num = T.specialize_s(num, P);
    den = T.specialize_s(den, P);
  }
  return detail::tower_quotient_in_base(T, num, den);
}

/// Ward's Q_n(lambda, eta) = prod_{d|n} U_d^mu(n/d) for Lehmer sequences, with
/// Q_1 = Q_2 = 1.
template <class Field>
Poly<Field> ward_qn(SeqTermCache<Field>& cache, unsigned n) {
  if (cache.params().kind() != SeqKind::Lehmer)
    throw Error(Errc::PreconditionViolated, "ward_qn is defined for Lehmer sequences");
  if (n == 0) throw Error(Errc::PreconditionViolated, "sequence indices start at 1");
  const auto one = Poly<Field>::one(cache.field());
  if (n <= 2) return one;
  auto numer = one;
  auto denom = one;
  for (unsigned d : divisors(n)) {
    int mu = mobius(n / d);
    if (mu == 1) numer *= cache.term(d);
    if (mu == -1) denom *= cache.term(d);
  }
  return exact_div(numer, denom);
}

/// Phi_n evaluated at the underlying pair, as an element of R (n >= 3).
template <class Field>
Poly<Field> phi_eval(SeqTermCache<Field>& cache, unsigned n) {
  if (n < 3) throw Error(Errc::PreconditionViolated, "phi_eval needs n >= 3");
  const auto& params = cache.params();
  switch (params.kind()) {
    case SeqKind::PowerDiff:
      return eval_form(cyclotomic_form(n), params.a(), params.b());
    case SeqKind::Lucas: {
      // L_n = prod_{d|n, d>=2} Phi_d(alpha, beta) and L_1 = 1
      const auto one = Poly<Field>::one(cache.field());
      auto numer = one;
      auto denom = one;
      for (unsigned d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 1) numer *= cache.term(d);
        if (mu == -1) denom *= cache.term(d);
      }
      return exact_div(numer, denom);
    }
    case SeqKind::Lehmer:
      return ward_qn(cache, n);
  }
  throw Error(Errc::PreconditionViolated, "unknown sequence kind");
}

}  // namespace lehmer
