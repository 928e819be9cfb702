#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lehmer/poly.hpp"

namespace lehmer {

/// unit * prod(factor^exp). Factors are monic and sorted by degree, then by
/// coefficient sequence (lowest degree first).
template <class Field>
struct Factorization {
  FieldElem<Field> unit;
  std::vector<std::pair<Poly<Field>, unsigned>> factors;

  Poly<Field> expand() const {
    auto acc = Poly<Field>::constant(unit.field(), unit.value());
    for (const auto& [f, e] : factors) acc *= pow(f, e);
    return acc;
  }
};

/// Seed used whenever a caller does not thread its own generator through.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'1a5c'0ffe'e001ULL;

namespace detail {

template <class Field>
bool poly_less(const Poly<Field>& a, const Poly<Field>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i)
    if (ac[i] != bc[i]) return ac[i] < bc[i];
  return false;
}

template <class Field>
void sort_factors(std::vector<std::pair<Poly<Field>, unsigned>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& l, const auto& r) {
    if (l.first == r.first) return l.second < r.second;
    return poly_less(l.first, r.first);
  });
}

/// For h = g(x^p) over F_p, returns g (Frobenius is the identity on F_p).
inline Poly<PrimeField> pth_root(const Poly<PrimeField>& h) {
  const auto p = h.field().modulus();
  std::vector<std::uint64_t> out;
  const auto cs = h.coeffs();
  for (std::size_t i = 0; i < cs.size(); i += p) out.push_back(cs[i]);
  return Poly<PrimeField>(h.field(), std::move(out));
}

// Yun's algorithm; valid whenever the characteristic exceeds the degree.
template <class Field>
void yun(const Poly<Field>& f, unsigned mult, std::vector<std::pair<Poly<Field>, unsigned>>& out) {
  auto fp = derivative(f);
  auto a = poly_gcd(f, fp);
  auto b = exact_div(f, a);
  auto c = exact_div(fp, a);
  auto d = c - derivative(b);
  for (unsigned i = 1; !is_unit(b); ++i) {
    a = poly_gcd(b, d);
    if (!is_unit(a)) out.emplace_back(monic(a), i * mult);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
  }
}

// Squarefree factorization over F_p for monic f, exponents scaled by mult.
inline void sqf_fp(const Poly<PrimeField>& f, unsigned mult,
                   std::vector<std::pair<Poly<PrimeField>, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const auto p = static_cast<unsigned>(f.field().modulus());
  auto fp = derivative(f);
  if (fp.is_zero()) {
    sqf_fp(pth_root(f), mult * p, out);
    return;
  }
  auto c = poly_gcd(f, fp);
  auto w = exact_div(f, c);
  for (unsigned i = 1; !is_unit(w); ++i) {
    auto y = poly_gcd(w, c);
    auto fac = exact_div(w, y);
    if (!is_unit(fac)) out.emplace_back(monic(fac), i * mult);
    w = std::move(y);
    c = exact_div(c, w);
  }
  if (!is_unit(c)) sqf_fp(pth_root(monic(c)), mult * p, out);
}

}  // namespace detail

/// Squarefree decomposition: pairwise coprime squarefree monic parts, each
/// tagged with its multiplicity. Over F_p, p-th powers are peeled off when the
/// derivative vanishes.
template <class Field>
Factorization<Field> squarefree_decomp(const Poly<Field>& h) {
  if (h.is_zero()) throw Error(Errc::ZeroArgument, "squarefree decomposition of 0");
  Factorization<Field> fz{h.lead_elem(), {}};
  auto m = monic(h);
  if constexpr (Field::is_prime_field) {
    detail::sqf_fp(m, 1, fz.factors);
  } else {
    if (m.degree() > 0) detail::yun(m, 1, fz.factors);
  }
  detail::sort_factors(fz.factors);
  return fz;
}

namespace detail {

inline Poly<PrimeField> random_poly_below(const PrimeField& f, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
  std::vector<std::uint64_t> cs(static_cast<std::size_t>(deg));
  for (auto& c : cs) c = dist(rng);
  return Poly<PrimeField>(f, std::move(cs));
}

// Splits a monic squarefree g whose irreducible factors all have degree k.
inline void equal_degree_split(const Poly<PrimeField>& g, int k, std::mt19937_64& rng,
                               std::vector<Poly<PrimeField>>& out) {
  if (g.degree() == k) {
    out.push_back(g);
    return;
  }
  const PrimeField& f = g.field();
  const auto p = f.modulus();
  const auto one = Poly<PrimeField>::one(f);
  for (;;) {
    auto a = random_poly_below(f, g.degree(), rng);
    if (a.degree() < 1) continue;
    Poly<PrimeField> b(f);
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(k-1)) lands in F_2 on each factor
      auto t = a;
      b = a;
      for (int i = 1; i < k; ++i) {
        t = rem(t * t, g);
        b += t;
      }
    } else {
      // a^((p^k - 1)/2) = (a * a^p * ... * a^(p^(k-1)))^((p-1)/2)
      auto t = a;
      auto norm = a;
      for (int i = 1; i < k; ++i) {
        t = powmod(t, p, g);
        norm = rem(norm * t, g);
      }
      b = powmod(norm, (p - 1) / 2, g) - one;
    }
    auto d = poly_gcd(g, b);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      equal_degree_split(d, k, rng, out);
      equal_degree_split(monic(exact_div(g, d)), k, rng, out);
      return;
    }
  }
}

// Distinct-degree factorization of a monic squarefree polynomial, followed by
// equal-degree splitting of each block.
inline std::vector<Poly<PrimeField>> split_squarefree(Poly<PrimeField> s, std::mt19937_64& rng) {
  std::vector<Poly<PrimeField>> out;
  const PrimeField& f = s.field();
  const auto x = Poly<PrimeField>::x(f);
  auto h = rem(x, s);  // x^(p^k) mod s
  for (int k = 1; 2 * k <= s.degree(); ++k) {
    h = powmod(h, f.modulus(), s);
    auto g = poly_gcd(s, h - x);
    if (!is_unit(g)) {
      equal_degree_split(g, k, rng, out);
      s = exact_div(s, g);
      h = rem(h, s);
    }
  }
  if (s.degree() > 0) out.push_back(monic(s));
  return out;
}

}  // namespace detail

/// Complete factorization into monic irreducibles over F_p: squarefree
/// decomposition, distinct-degree split, then Cantor-Zassenhaus (trace variant
/// for p = 2). The generator is caller-owned.
template <class Field>
Factorization<Field> factor_fp(const Poly<Field>& h, std::mt19937_64& rng) {
  if constexpr (!Field::is_prime_field) {
    throw Error(Errc::WrongField, "factor_fp needs a prime field");
  } else {
    auto sqf = squarefree_decomp(h);
    Factorization<Field> fz{sqf.unit, {}};
    for (const auto& [part, e] : sqf.factors)
      for (auto& q : detail::split_squarefree(part, rng)) fz.factors.emplace_back(std::move(q), e);
    detail::sort_factors(fz.factors);
    return fz;
  }
}

template <class Field>
Factorization<Field> factor_fp(const Poly<Field>& h) {
  std::mt19937_64 rng(kDefaultFactorSeed);
  return factor_fp(h, rng);
}

/// Distinct-degree test: h is irreducible iff gcd(h, x^(p^k) - x) = 1 for
/// all k <= deg(h)/2. Constants are units, so never irreducible.
template <class Field>
bool is_irreducible_fp(const Poly<Field>& h) {
  if constexpr (!Field::is_prime_field) {
    throw Error(Errc::WrongField, "is_irreducible_fp needs a prime field");
  } else {
    if (h.is_constant()) return false;
    auto m = monic(h);
    const auto x = Poly<Field>::x(h.field());
    auto t = rem(x, m);
    for (int k = 1; 2 * k <= m.degree(); ++k) {
      t = powmod(t, h.field().modulus(), m);
      if (!is_unit(poly_gcd(m, t - x))) return false;
    }
    return true;
  }
}

namespace detail {

inline std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Monic irreducible divisors of degree <= 2 of a nonzero h in Q[x] that can
/// be certified without full factorization: rational roots (found from the
/// rational root theorem when the relevant integers are below 2^40), plus any
/// squarefree part that is left with degree 2 and no rational root.
inline std::vector<Poly<Rationals>> small_irreducible_divisors_q(const Poly<Rationals>& h) {
  const Rationals Q;
  std::vector<Poly<Rationals>> out;
  const mpz_class kHeightLimit = mpz_class(1) << 40;
  for (auto [part, e] : squarefree_decomp(h).factors) {
    (void)e;
    auto rest = part;
    bool searched = true;
    const auto x = Poly<Rationals>::x(Q);
    if (rest.coeff(0) == 0) {
      out.push_back(x);
      rest = exact_div(rest, x);
    }
    if (rest.degree() >= 1) {
      // clear denominators to an integer polynomial with the same roots
      mpz_class l = 1;
      for (const auto& c : rest.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
      mpz_class a0 = abs(mpq_class(rest.coeff(0) * l).get_num());
      mpz_class ad = abs(mpq_class(rest.lead() * l).get_num());
      searched = a0 < kHeightLimit && ad < kHeightLimit;
      if (searched) {
        for (auto num : detail::divisors_u64(a0.get_ui())) {
          for (auto den : detail::divisors_u64(ad.get_ui())) {
            for (int sign : {1, -1}) {
              if (rest.degree() < 1) break;
              mpq_class r(sign * mpz_class(num), mpz_class(den));
              r.canonicalize();
              if (r.get_den() != den) continue;  // seen in lowest terms already
              if (rest.eval(r) != 0) continue;
              auto lin = Poly<Rationals>(Q, {-r, 1});
              out.push_back(lin);
              rest = exact_div(rest, lin);  // part is squarefree: each root once
            }
          }
        }
      }
    }
    if (searched && rest.degree() == 2) out.push_back(monic(rest));
  }
  std::sort(out.begin(), out.end(), detail::poly_less<Rationals>);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lehmer
