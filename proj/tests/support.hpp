#pragma once

#include <random>
#include <string>
#include <vector>

#include "lehmer/lehmer.hpp"

namespace testing_support {

using namespace lehmer;

using QPoly = Poly<Rationals>;
using FPoly = Poly<PrimeField>;

inline QPoly q(const std::string& s) { return parse_poly(s, Rationals{}); }
inline FPoly fp(std::uint64_t p, const std::string& s) { return parse_poly(s, PrimeField(p)); }

inline mpq_class random_rational(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  mpq_class v(num(rng), den(rng));
  v.canonicalize();
  return v;
}

template <class Field>
Poly<Field> random_poly(const Field& f, int max_deg, std::mt19937_64& rng, long bound = 5) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<typename Field::value_type> cs;
  for (int i = 0; i <= d; ++i) {
    if constexpr (Field::is_prime_field) {
      cs.push_back(std::uniform_int_distribution<std::uint64_t>(0, f.modulus() - 1)(rng));
    } else {
      cs.push_back(random_rational(rng, bound));
    }
  }
  return Poly<Field>(f, std::move(cs));
}

template <class Field>
Poly<Field> random_nonzero_poly(const Field& f, int max_deg, std::mt19937_64& rng) {
  for (;;) {
    auto p = random_poly(f, max_deg, rng);
    if (!p.is_zero()) return p;
  }
}

/// Φ_n(x) = prod_{d | n} (x^d - 1)^mu(n/d), computed with univariate
/// division over Q and independent of the form-based implementation.
inline QPoly cyclotomic_by_mobius(unsigned n) {
  Rationals Q;
  auto num = QPoly::one(Q), den = QPoly::one(Q);
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    unsigned m = n / d, k = m;
    int mu = 1;
    for (unsigned pr = 2; pr * pr <= k; ++pr) {
      if (k % pr) continue;
      k /= pr;
      if (k % pr == 0) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    if (mu != 0 && k > 1) mu = -mu;
    auto factor = QPoly::monomial(Q, Q.one(), d) - QPoly::one(Q);
    if (mu == 1) num *= factor;
    if (mu == -1) den *= factor;
  }
  return exact_div(num, den);
}

/// Dehomogenize a form at Y = 1 (coefficient of x^i is that of X^i Y^{d-i}).
inline QPoly dehomogenize(const BivarForm& f) {
  Rationals Q;
  std::vector<mpq_class> cs(f.coeffs().size());
  const int d = f.degree();
  for (int k = 0; k <= d; ++k) cs[d - k] = mpq_class(f[k]);
  return QPoly(Q, std::move(cs));
}

/// Resultant of univariate polynomials over Q by the Euclidean recursion
/// res(A, B) = (-1)^{mn} res(B, A), res(B, A) = lc(B)^{m - r} res(B, A mod B).
inline mpq_class euclid_resultant(QPoly a, QPoly b) {
  mpq_class acc = 1;
  for (;;) {
    if (a.is_zero() || b.is_zero()) return 0;
    int m = a.degree(), n = b.degree();
    if (n == 0) {
      mpq_class c = b.lead(), r = 1;
      for (int i = 0; i < m; ++i) r *= c;
      return acc * r;
    }
    if (m == 0) {
      mpq_class c = a.lead(), r = 1;
      for (int i = 0; i < n; ++i) r *= c;
      return acc * r;
    }
    auto r = rem(a, b);
    if (r.is_zero()) return 0;
    // res(a, b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r)
    if ((m * n) % 2) acc = -acc;
    mpq_class lc = b.lead();
    for (int i = 0; i < m - r.degree(); ++i) acc *= lc;
    a = std::move(b);
    b = std::move(r);
  }
}

/// Homogeneous resultant of forms of positive degree whose leading X
/// coefficients are nonzero, via dehomogenization.
inline mpq_class form_resultant_oracle(const BivarForm& a, const BivarForm& b) {
  return euclid_resultant(dehomogenize(a), dehomogenize(b));
}

/// Primitive part straight from the definition: the product of q^{v_q(a_n)}
/// over monic irreducible q dividing a_n and no earlier term.
template <class Field>
Poly<Field> primitive_part_by_factoring(SeqTermCache<Field>& cache, unsigned n) {
  std::mt19937_64 rng(7);
  auto result = Poly<Field>::one(cache.field());
  const auto& an = cache.term(n);
  for (const auto& [qq, e] : factor_fp(an, rng).factors) {
    bool earlier = false;
    for (unsigned m = 1; m < n && !earlier; ++m) earlier = divides(qq, cache.term(m));
    if (!earlier) result *= pow(qq, e);
  }
  return result;
}

}  // namespace testing_support
