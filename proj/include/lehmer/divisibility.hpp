#pragma once

#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "lehmer/factor.hpp"
#include "lehmer/poly.hpp"
#include "lehmer/sequences.hpp"

namespace lehmer {

template <class Field>
struct PrimitiveReport {
  unsigned n = 0;
  /// Index within the subsequence with p | n deleted; empty when excluded.
  std::optional<unsigned> position;
  Poly<Field> term;
  Poly<Field> primitive_part;  // monic
  bool has_primitive = false;
  bool matches_phi = false;
  bool excluded = false;
  /// Filled over F_p only.
  std::optional<std::vector<std::pair<Poly<Field>, unsigned>>> primitive_primes;
};

/// gcd(a_m, a_n) ~ a_gcd(m,n).
template <class Field>
bool strong_div_check(SeqTermCache<Field>& cache, unsigned m, unsigned n) {
  const unsigned d = std::gcd(m, n);
  auto g = poly_gcd(cache.term(m), cache.term(n));
  return is_associated(g, cache.term(d));
}

/// p | n with p the characteristic (never true over Q).
inline bool is_excluded_index(std::uint64_t p, unsigned n) { return p != 0 && n % p == 0; }

/// Position of n in the subsequence with p | n deleted.
inline std::optional<unsigned> pruned_position(std::uint64_t p, unsigned n) {
  if (p == 0) return n;
  if (n % p == 0) return std::nullopt;
  return static_cast<unsigned>(n - n / p);
}

struct PrimitiveOptions {
  bool factor_primes = true;  // fill primitive_primes over F_p
};

/// Product of the primitive prime powers of term(n), obtained by stripping
/// every prime shared with an earlier term. A prime that divides some a_m,
/// m < n, is removed with its full multiplicity; primitive primes are never
/// touched because no gcd contains them.
template <class Field>
PrimitiveReport<Field> primitive_part(SeqTermCache<Field>& cache, unsigned n, std::mt19937_64& rng,
                                      PrimitiveOptions opts = {}) {
  if (n == 0) throw Error(Errc::PreconditionViolated, "sequence indices start at 1");
  const auto p = cache.characteristic();
  PrimitiveReport<Field> rep{n, pruned_position(p, n), cache.term(n), Poly<Field>(cache.field()), false,
                             false, is_excluded_index(p, n), std::nullopt};
  auto B = rep.term;
  if (B.is_zero()) throw Error(Errc::ZeroArgument, "zero term");
  for (unsigned m = 1; m < n && !is_unit(B); ++m) {
    auto g = poly_gcd(B, cache.term(m));
    while (!is_unit(g)) {
      B = exact_div(B, g);
      g = poly_gcd(B, g);
    }
  }
  rep.primitive_part = monic(B);
  rep.has_primitive = !is_unit(B);
  if (n >= 3 && !rep.excluded) rep.matches_phi = rep.primitive_part == monic(phi_eval(cache, n));
  if constexpr (Field::is_prime_field) {
    if (opts.factor_primes) rep.primitive_primes = factor_fp(rep.primitive_part, rng).factors;
  }
  return rep;
}

template <class Field>
PrimitiveReport<Field> primitive_part(SeqTermCache<Field>& cache, unsigned n) {
  std::mt19937_64 rng(kDefaultFactorSeed);
  return primitive_part(cache, n, rng);
}

/// Reports for 1 <= n <= n_max.
template <class Field>
std::vector<PrimitiveReport<Field>> zsigmondy_check(SeqTermCache<Field>& cache, unsigned n_max,
                                                    std::mt19937_64& rng, PrimitiveOptions opts = {}) {
  if (n_max < 3) throw Error(Errc::PreconditionViolated, "n_max must be at least 3");
  std::vector<PrimitiveReport<Field>> out;
  out.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) out.push_back(primitive_part(cache, n, rng, opts));
  return out;
}

template <class Field>
std::vector<PrimitiveReport<Field>> zsigmondy_check(SeqTermCache<Field>& cache, unsigned n_max) {
  std::mt19937_64 rng(kDefaultFactorSeed);
  return zsigmondy_check(cache, n_max, rng);
}

/// Indices at which the primitive divisor statement fails. Normally every
/// non-excluded n >= 3 counts; this is slightly stronger than asking only for
/// pruned positions beyond the second (the two differ at p = 2, n = 3). With
/// include_excluded every n >= 3 counts, which is false in positive
/// characteristic.
template <class Field>
std::vector<unsigned> zsigmondy_failures(const std::vector<PrimitiveReport<Field>>& reports,
                                         bool include_excluded = false) {
  std::vector<unsigned> bad;
  for (const auto& r : reports) {
    bool counts = r.n >= 3 && (include_excluded || !r.excluded);
    if (counts && !r.has_primitive) bad.push_back(r.n);
  }
  return bad;
}

template <class Field>
bool zsigmondy_holds(const std::vector<PrimitiveReport<Field>>& reports, bool include_excluded = false) {
  return zsigmondy_failures(reports, include_excluded).empty();
}

/// v_q(U_{mn}) = v_q(U_n) for q | U_n, n >= 3, p not dividing m.
template <class Field>
bool lemma_vu_check(SeqTermCache<Field>& cache, const Poly<Field>& q, unsigned n, unsigned m) {
  if (cache.params().kind() != SeqKind::Lehmer)
    throw Error(Errc::PreconditionViolated, "valuation stability is stated for Lehmer sequences");
  if (n < 3 || m == 0) throw Error(Errc::PreconditionViolated, "needs n >= 3 and m >= 1");
  if (is_excluded_index(cache.characteristic(), m))
    throw Error(Errc::PreconditionViolated, "the characteristic divides m");
  const auto& un = cache.term(n);
  if (q.is_constant() || !divides(q, un)) throw Error(Errc::PreconditionViolated, "q does not divide U_n");
  return valuation(q, cache.term(m * n)) == valuation(q, un);
}

/// <U_n> and <Rp> are coprime for odd n.
template <class Field>
bool lemma_abn_check(SeqTermCache<Field>& cache, unsigned n) {
  if (cache.params().kind() != SeqKind::Lehmer)
    throw Error(Errc::PreconditionViolated, "stated for Lehmer sequences");
  if (n % 2 == 0) throw Error(Errc::PreconditionViolated, "n must be odd");
  return ideals_coprime(cache.term(n), cache.params().a());
}

/// P_m(lambda^n, eta^n) = U_mn / U_n and (lambda^n + eta^n)/(lambda + eta) =
/// U_2n / U_n are coprime for odd m, n.
template <class Field>
bool lemma_pmn_check(SeqTermCache<Field>& cache, unsigned m, unsigned n) {
  if (cache.params().kind() != SeqKind::Lehmer)
    throw Error(Errc::PreconditionViolated, "stated for Lehmer sequences");
  if (m % 2 == 0 || n % 2 == 0) throw Error(Errc::PreconditionViolated, "m and n must be odd");
  const auto& un = cache.term(n);
  auto left = exact_div(cache.term(m * n), un);
  auto right = exact_div(cache.term(2 * n), un);
  return is_unit(poly_gcd(left, right));
}

/// Coprime-index pairs give coprime terms: L_m, L_n for Lucas; U_m, U_n for
/// Lehmer (both odd, or one odd and one even); F_m/F_1, F_n/F_1 for PowerDiff.
template <class Field>
bool lemma_coprime_pair_check(SeqTermCache<Field>& cache, unsigned m, unsigned n) {
  if (m == 0 || n == 0 || std::gcd(m, n) != 1)
    throw Error(Errc::PreconditionViolated, "indices must be positive and coprime");
  if (cache.params().kind() == SeqKind::PowerDiff) {
    const auto& f1 = cache.term(1);
    return is_unit(poly_gcd(exact_div(cache.term(m), f1), exact_div(cache.term(n), f1)));
  }
  return is_unit(poly_gcd(cache.term(m), cache.term(n)));
}

}  // namespace lehmer
