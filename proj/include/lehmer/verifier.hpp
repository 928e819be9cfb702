#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "lehmer/divisibility.hpp"
#include "lehmer/factor.hpp"
#include "lehmer/poly_io.hpp"
#include "lehmer/sequences.hpp"

namespace lehmer {

enum class Check { StrongDiv, Zsigmondy, PrimitivePartPhi, LemmaVU, Lemma28, Lemma27, CoprimePairs, OracleEquivalence };

inline constexpr Check kAllChecks[] = {Check::StrongDiv, Check::Zsigmondy,  Check::PrimitivePartPhi,
                                       Check::LemmaVU,   Check::Lemma28,    Check::Lemma27,
                                       Check::CoprimePairs, Check::OracleEquivalence};

constexpr std::string_view check_name(Check c) noexcept {
  switch (c) {
    case Check::StrongDiv: return "StrongDiv";
    case Check::Zsigmondy: return "Zsigmondy";
    case Check::PrimitivePartPhi: return "PrimitivePartPhi";
    case Check::LemmaVU: return "LemmaVU";
    case Check::Lemma28: return "Lemma28";
    case Check::Lemma27: return "Lemma27";
    case Check::CoprimePairs: return "CoprimePairs";
    case Check::OracleEquivalence: return "OracleEquivalence";
  }
  return "?";
}

inline std::optional<Check> parse_check(std::string_view s) {
  for (Check c : kAllChecks)
    if (check_name(c) == s) return c;
  return std::nullopt;
}

enum class Enumeration { Exhaustive, Random, Explicit };

constexpr std::string_view enumeration_name(Enumeration e) noexcept {
  switch (e) {
    case Enumeration::Exhaustive: return "exhaustive";
    case Enumeration::Random: return "random";
    case Enumeration::Explicit: return "explicit";
  }
  return "?";
}

struct CampaignConfig {
  FieldDesc field = FieldDesc::rationals();
  std::vector<SeqKind> kinds{SeqKind::PowerDiff};
  unsigned max_param_degree = 1;
  Enumeration enumeration = Enumeration::Random;
  std::size_t count = 10;            // Random: valid parameter sets per kind
  std::uint64_t seed = 1;
  long coef_bound = 3;               // Random over Q: coefficients in [-bound, bound]
  std::vector<std::pair<std::string, std::string>> explicit_params;
  unsigned n_max = 20;
  unsigned m_max = 20;
  unsigned vu_n_max = 8;             // LemmaVU: divisors of U_n for 3 <= n <= vu_n_max
  unsigned vu_m_max = 5;             // LemmaVU: multipliers 1 <= m <= vu_m_max
  unsigned lemma_odd_max = 7;        // Lemma27: odd m, n up to this bound
  std::vector<Check> checks{Check::StrongDiv, Check::Zsigmondy};
  bool include_excluded = false;     // sabotage: count p | n indices for Zsigmondy
  bool stop_on_failure = false;
  unsigned threads = 0;              // 0: hardware concurrency
  double time_limit_s = 0;           // 0: unlimited

  void validate() const {
    auto bad = [](const std::string& why) { throw Error(Errc::ConfigInvalid, why); };
    if (kinds.empty()) bad("no sequence kinds selected");
    if (checks.empty()) bad("no checks selected");
    if (n_max < 3) bad("n_max must be at least 3");
    if (m_max < 1) bad("m_max must be at least 1");
    if (field.kind == FieldKind::PrimeField && !is_prime_u64(field.p)) bad("p must be prime");
    if (enumeration == Enumeration::Exhaustive) {
      if (field.kind != FieldKind::PrimeField || field.p > 7)
        bad("exhaustive enumeration needs a prime field with p <= 7");
      if (max_param_degree > 3) bad("exhaustive enumeration needs max_param_degree <= 3");
    }
    if (enumeration == Enumeration::Explicit && explicit_params.empty()) bad("explicit enumeration without params");
    if (enumeration == Enumeration::Random && coef_bound < 1 && field.kind == FieldKind::Rationals)
      bad("coef_bound must be positive");
  }
};

template <class Field>
struct EnumeratedParams {
  std::vector<SeqParams<Field>> params;
  std::size_t candidates = 0;
  std::map<std::string, std::size_t> rejected;  // by error name
};

namespace detail {

inline std::vector<Poly<PrimeField>> all_polys_fp(const PrimeField& f, unsigned max_deg, bool monic_only) {
  const auto p = f.modulus();
  std::vector<Poly<PrimeField>> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i <= max_deg; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint64_t> cs;
    for (std::uint64_t c = code, i = 0; i <= max_deg; ++i, c /= p) cs.push_back(c % p);
    Poly<PrimeField> poly(f, std::move(cs));
    if (monic_only && (poly.is_zero() || poly.lead() != 1)) continue;
    out.push_back(std::move(poly));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
  return out;
}

template <class Field>
Poly<Field> random_poly(const Field& f, unsigned max_deg, long bound, std::mt19937_64& rng) {
  std::vector<typename Field::value_type> cs;
  if constexpr (Field::is_prime_field) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    for (unsigned i = 0; i <= max_deg; ++i) cs.push_back(dist(rng));
  } else {
    std::uniform_int_distribution<long> dist(-bound, bound);
    for (unsigned i = 0; i <= max_deg; ++i) cs.push_back(f.from_int(dist(rng)));
  }
  return Poly<Field>(f, std::move(cs));
}

template <class Field>
bool try_admit(EnumeratedParams<Field>& out, SeqKind kind, Poly<Field> a, Poly<Field> b) {
  ++out.candidates;
  try {
    out.params.push_back(validate(kind, std::move(a), std::move(b)));
    return true;
  } catch (const Error& e) {
    ++out.rejected[std::string(e.name())];
    return false;
  }
}

}  // namespace detail

/// Admissible parameter sets for a campaign, in a deterministic order.
///
/// Exhaustive runs normalize the first parameter to be monic: scaling the
/// whole pair by a unit (f, g) -> (uf, ug), (P, Q) -> (uP, u^2 Q),
/// (Rp, Q) -> (uRp, uQ) only multiplies every term by a unit, so one
/// representative per class suffices.
template <class Field>
EnumeratedParams<Field> enumerate_params(const CampaignConfig& config, const Field& field) {
  config.validate();
  if (!(field.desc() == config.field)) throw Error(Errc::ConfigInvalid, "field does not match the config");
  EnumeratedParams<Field> out;
  switch (config.enumeration) {
    case Enumeration::Exhaustive:
      if constexpr (Field::is_prime_field) {
        auto firsts = detail::all_polys_fp(field, config.max_param_degree, true);
        auto seconds = detail::all_polys_fp(field, config.max_param_degree, false);
        for (SeqKind kind : config.kinds)
          for (const auto& a : firsts)
            for (const auto& b : seconds) detail::try_admit(out, kind, a, b);
      }
      break;
    case Enumeration::Random: {
      std::mt19937_64 rng(config.seed);
      for (SeqKind kind : config.kinds) {
        std::size_t got = 0;
        for (std::size_t attempt = 0; got < config.count && attempt < config.count * 1000; ++attempt) {
          auto a = detail::random_poly(field, config.max_param_degree, config.coef_bound, rng);
          auto b = detail::random_poly(field, config.max_param_degree, config.coef_bound, rng);
          if (detail::try_admit(out, kind, std::move(a), std::move(b))) ++got;
        }
      }
      break;
    }
    case Enumeration::Explicit:
      for (SeqKind kind : config.kinds) {
        for (const auto& [sa, sb] : config.explicit_params) {
          Poly<Field> a(field), b(field);
          try {
            a = parse_poly(sa, field);
            b = parse_poly(sb, field);
          } catch (const Error& e) {
            throw Error(Errc::ConfigInvalid, std::string("bad parameter polynomial: ") + e.what());
          }
          detail::try_admit(out, kind, std::move(a), std::move(b));
        }
      }
      break;
  }
  return out;
}

struct Failure {
  std::size_t case_index = 0;  // position in the enumeration
  SeqKind kind = SeqKind::PowerDiff;
  FieldDesc field;
  std::string a, b;
  Check check = Check::StrongDiv;
  std::vector<unsigned> indices;                             // first witness
  std::vector<std::pair<std::string, std::string>> polys;   // name -> canonical text
  std::string detail;
  std::size_t witness_count = 1;
};

struct CheckTally {
  std::size_t run = 0;
  std::size_t passed = 0;
};

struct VerifyReport {
  CampaignConfig config;
  std::size_t candidates = 0;
  std::size_t params_enumerated = 0;
  std::map<std::string, std::size_t> rejected;
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  std::vector<Failure> failures;
  std::map<Check, CheckTally> per_check;
  bool truncated = false;
  std::string truncation_reason;
  double wall_time_s = 0;

  bool ok() const { return failures.empty() && !truncated; }
};

namespace detail {

struct CaseOutcome {
  Check check;
  std::optional<Failure> failure;
};

template <class Field>
class CaseRunner {
 public:
  CaseRunner(const CampaignConfig& cfg, const SeqParams<Field>& params, std::size_t index)
      : cfg_(cfg), cache_(params), index_(index), rng_(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))) {}

  std::vector<CaseOutcome> run() {
    std::vector<CaseOutcome> out;
    for (Check c : cfg_.checks) {
      if (!applicable(c)) continue;
      CaseOutcome oc{c, std::nullopt};
      try {
        oc.failure = run_check(c);
      } catch (const Error& e) {
        oc.failure = make_failure(c, {}, {}, std::string("raised ") + e.what());
      }
      out.push_back(std::move(oc));
    }
    return out;
  }

 private:
  using P = Poly<Field>;
  using Polys = std::vector<std::pair<std::string, std::string>>;

  bool applicable(Check c) const {
    const auto kind = cache_.params().kind();
    switch (c) {
      case Check::LemmaVU:
      case Check::Lemma28:
      case Check::Lemma27:
        return kind == SeqKind::Lehmer;
      default:
        return true;
    }
  }

  Failure make_failure(Check c, std::vector<unsigned> idx, Polys polys, std::string detail) const {
    Failure f;
    f.case_index = index_;
    f.kind = cache_.params().kind();
    f.field = cache_.field().desc();
    f.a = to_string(cache_.params().a());
    f.b = to_string(cache_.params().b());
    f.check = c;
    f.indices = std::move(idx);
    f.polys = std::move(polys);
    f.detail = std::move(detail);
    return f;
  }

  // Records the first witness and counts the rest.
  struct Collector {
    std::optional<Failure> first;
    std::size_t count = 0;
    void add(Failure f) {
      if (!first) first = std::move(f);
      ++count;
    }
    std::optional<Failure> finish() {
      if (first) first->witness_count = count;
      return std::move(first);
    }
  };

  const std::vector<PrimitiveReport<Field>>& reports() {
    if (!reports_) reports_ = zsigmondy_check(cache_, cfg_.n_max, rng_);
    return *reports_;
  }

  std::optional<Failure> run_check(Check c) {
    Collector col;
    const auto p = cache_.characteristic();
    switch (c) {
      case Check::StrongDiv:
        for (unsigned m = 1; m <= cfg_.m_max; ++m)
          for (unsigned n = 1; n <= cfg_.n_max; ++n) {
            if (m > n && n <= cfg_.m_max && m <= cfg_.n_max) continue;  // symmetric pair already seen
            if (!strong_div_check(cache_, m, n)) {
              unsigned d = std::gcd(m, n);
              col.add(make_failure(c, {m, n},
                                   {{"gcd", to_string(poly_gcd(cache_.term(m), cache_.term(n)))},
                                    {"term_gcd_index", to_string(cache_.term(d))}},
                                   "gcd(a_m, a_n) is not associated to a_gcd(m,n)"));
            }
          }
        break;
      case Check::Zsigmondy:
        for (unsigned n : zsigmondy_failures(reports(), cfg_.include_excluded)) {
          const auto& r = reports()[n - 1];
          col.add(make_failure(c, {n}, {{"term", to_string(r.term)}, {"primitive_part", to_string(r.primitive_part)}},
                               r.excluded ? "no primitive prime divisor at an excluded index"
                                          : "no primitive prime divisor"));
        }
        break;
      case Check::PrimitivePartPhi:
        for (const auto& r : reports()) {
          if (r.n < 3 || r.excluded) continue;
          if (!r.matches_phi) {
            col.add(make_failure(c, {r.n},
                                 {{"primitive_part", to_string(r.primitive_part)},
                                  {"phi", to_string(monic(phi_eval(cache_, r.n)))}},
                                 "primitive part differs from the cyclotomic value"));
          }
        }
        break;
      case Check::LemmaVU:
        for (unsigned n = 3; n <= cfg_.vu_n_max; ++n) {
          for (const auto& q : irreducible_divisors(cache_.term(n))) {
            for (unsigned m = 1; m <= cfg_.vu_m_max; ++m) {
              if (is_excluded_index(p, m)) continue;
              if (!lemma_vu_check(cache_, q, n, m))
                col.add(make_failure(c, {n, m}, {{"q", to_string(q)}}, "v_q(U_mn) != v_q(U_n)"));
            }
          }
        }
        break;
      case Check::Lemma28:
        for (unsigned n = 1; n <= cfg_.n_max; n += 2)
          if (!lemma_abn_check(cache_, n))
            col.add(make_failure(c, {n}, {{"term", to_string(cache_.term(n))}}, "U_n and Rp share a prime"));
        break;
      case Check::Lemma27:
        for (unsigned m = 1; m <= cfg_.lemma_odd_max; m += 2)
          for (unsigned n = 1; n <= cfg_.lemma_odd_max; n += 2)
            if (!lemma_pmn_check(cache_, m, n))
              col.add(make_failure(c, {m, n}, {}, "U_mn/U_n and U_2n/U_n share a prime"));
        break;
      case Check::CoprimePairs:
        for (unsigned m = 1; m <= cfg_.m_max; ++m)
          for (unsigned n = m + 1; n <= cfg_.m_max; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (!lemma_coprime_pair_check(cache_, m, n))
              col.add(make_failure(c, {m, n}, {}, "coprime indices give non-coprime terms"));
          }
        break;
      case Check::OracleEquivalence:
        for (unsigned n = 1; n <= cfg_.n_max; ++n) {
          const auto& t = cache_.term(n);
          P expected(cache_.field());
          if (cache_.params().kind() == SeqKind::PowerDiff) {
            expected = P::one(cache_.field());
            for (unsigned d : divisors(n))
              expected *= eval_form(cyclotomic_form(d), cache_.params().a(), cache_.params().b());
          } else {
            expected = oracle_term(cache_.params(), n);
          }
          if (!(t == expected))
            col.add(make_failure(c, {n}, {{"term", to_string(t)}, {"oracle", to_string(expected)}},
                                 "recurrence and definition disagree"));
        }
        break;
    }
    return col.finish();
  }

  std::vector<P> irreducible_divisors(const P& h) {
    std::vector<P> out;
    if (h.is_constant()) return out;
    if constexpr (Field::is_prime_field) {
      for (auto& [q, e] : factor_fp(h, rng_).factors) out.push_back(q);
    } else {
      out = small_irreducible_divisors_q(h);
    }
    return out;
  }

  const CampaignConfig& cfg_;
  SeqTermCache<Field> cache_;
  std::size_t index_;
  std::mt19937_64 rng_;
  std::optional<std::vector<PrimitiveReport<Field>>> reports_;
};

template <class Field>
VerifyReport run_campaign_in(const CampaignConfig& config, const Field& field) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  VerifyReport report;
  report.config = config;
  auto enumerated = enumerate_params(config, field);
  report.candidates = enumerated.candidates;
  report.params_enumerated = enumerated.params.size();
  report.rejected = enumerated.rejected;

  const std::size_t total = enumerated.params.size();
  std::vector<std::optional<std::vector<CaseOutcome>>> outcomes(total);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      if (config.time_limit_s > 0 && elapsed() > config.time_limit_s) {
        timed_out = true;
        stop = true;
        return;
      }
      std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      auto res = CaseRunner<Field>(config, enumerated.params[i], i).run();
      bool failed = std::any_of(res.begin(), res.end(), [](const auto& o) { return o.failure.has_value(); });
      outcomes[i] = std::move(res);
      if (failed && config.stop_on_failure) stop = true;
    }
  };

  unsigned nthreads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // aggregate in enumeration order, independent of scheduling
  for (auto& slot : outcomes) {
    if (!slot) continue;
    for (auto& oc : *slot) {
      auto& tally = report.per_check[oc.check];
      ++tally.run;
      ++report.cases_run;
      if (oc.failure) {
        report.failures.push_back(std::move(*oc.failure));
      } else {
        ++tally.passed;
        ++report.cases_passed;
      }
    }
  }
  if (timed_out) {
    report.truncated = true;
    report.truncation_reason = "time limit of " + std::to_string(config.time_limit_s) + " s exceeded";
  } else if (stop) {
    report.truncated = true;
    report.truncation_reason = "stopped at first failure";
  }
  report.wall_time_s = elapsed();
  return report;
}

}  // namespace detail

/// Runs every enabled check over the enumerated parameters. Each applicable
/// (parameter set, check) pair is one case; a failing case keeps its first
/// witness and the number of failing index tuples.
inline VerifyReport run_campaign(const CampaignConfig& config) {
  config.validate();
  if (config.field.kind == FieldKind::Rationals) return detail::run_campaign_in(config, Rationals{});
  return detail::run_campaign_in(config, PrimeField(config.field.p));
}

}  // namespace lehmer
