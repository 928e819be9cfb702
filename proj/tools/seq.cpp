#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lehmer/lehmer.hpp"

using namespace lehmer;

namespace {

struct Options {
  std::string kind = "power";
  std::string field = "q";
  std::uint64_t p = 0;
  std::string a, b;
  unsigned n = 0;
  unsigned n_max = 0;
  unsigned m_max = 0;
  unsigned m = 0;
  bool json_out = false;
  std::optional<std::uint64_t> seed;
  std::string config;
  bool include_excluded = false;
  bool squarefree = false;
  std::string poly;
  // verify without a config file
  std::string enumeration;
  std::string checks;
  unsigned max_degree = 1;
  std::size_t count = 10;
  unsigned threads = 0;
};

std::uint64_t effective_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("SEQ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::ConfigInvalid, std::string("SEQ_SEED is not an integer: ") + env);
    }
  }
  return kDefaultFactorSeed;
}

FieldDesc field_desc(const Options& o) {
  if (o.field == "q") return FieldDesc::rationals();
  if (o.field == "fp") {
    if (o.p == 0) throw Error(Errc::InvalidModulus, "--field fp needs --p");
    PrimeField check(o.p);
    return FieldDesc::prime(o.p);
  }
  throw Error(Errc::ConfigInvalid, "unknown field " + o.field);
}

SeqKind seq_kind(const Options& o) {
  auto k = parse_kind(o.kind);
  if (!k) throw Error(Errc::ConfigInvalid, "unknown kind " + o.kind);
  return *k;
}

template <class Fn>
int with_field(const Options& o, Fn&& fn) {
  auto desc = field_desc(o);
  if (desc.kind == FieldKind::Rationals) return fn(Rationals{});
  return fn(PrimeField(desc.p));
}

template <class Field>
SeqParams<Field> read_params(const Options& o, const Field& f) {
  if (o.a.empty() || o.b.empty()) throw Error(Errc::ConfigInvalid, "--a and --b are required");
  return validate(seq_kind(o), parse_poly(o.a, f), parse_poly(o.b, f));
}

template <class Field>
std::string factorization_text(const Factorization<Field>& fac) {
  std::string out;
  const auto& f = fac.unit.field();
  if (!f.is_one(fac.unit.value()) || fac.factors.empty()) out += f.to_string(fac.unit.value());
  for (const auto& [q, e] : fac.factors) {
    out += "(" + to_string(q) + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

int cmd_gen(const Options& o) {
  if (o.n == 0) throw Error(Errc::ConfigInvalid, "--n must be positive");
  return with_field(o, [&](const auto& f) {
    SeqTermCache cache(read_params(o, f));
    using P = std::decay_t<decltype(cache.term(1))>;
    std::vector<P> terms;
    for (unsigned i = 1; i <= o.n; ++i) terms.push_back(cache.term(i));
    if (o.json_out) {
      std::cout << gen_json(cache.params(), terms).dump(2) << "\n";
    } else {
      for (const auto& t : terms) std::cout << to_string(t) << "\n";
    }
    return 0;
  });
}

template <class Field>
void print_primitive_text(const PrimitiveReport<Field>& r) {
  std::cout << "n: " << r.n << "\n";
  std::cout << "position: " << (r.position ? std::to_string(*r.position) : "none") << "\n";
  std::cout << "term: " << to_string(r.term) << "\n";
  std::cout << "primitive_part: " << to_string(r.primitive_part) << "\n";
  std::cout << "has_primitive: " << (r.has_primitive ? "true" : "false") << "\n";
  std::cout << "matches_phi: " << (r.matches_phi ? "true" : "false") << "\n";
  std::cout << "excluded: " << (r.excluded ? "true" : "false") << "\n";
  if (r.primitive_primes) {
    std::cout << "primitive_primes:";
    for (const auto& [q, e] : *r.primitive_primes) std::cout << " (" << to_string(q) << ")^" << e;
    std::cout << "\n";
  }
}

int cmd_primitive(const Options& o) {
  if ((o.n == 0) == (o.n_max == 0)) throw Error(Errc::ConfigInvalid, "give exactly one of --n and --n-max");
  return with_field(o, [&](const auto& f) {
    SeqTermCache cache(read_params(o, f));
    std::mt19937_64 rng(effective_seed(o));
    using R = decltype(primitive_part(cache, 1, rng));
    std::vector<R> reports;
    if (o.n) {
      reports.push_back(primitive_part(cache, o.n, rng));
    } else {
      for (unsigned n = 1; n <= o.n_max; ++n) reports.push_back(primitive_part(cache, n, rng));
    }
    if (o.json_out) {
      if (o.n) {
        std::cout << primitive_json(reports.front()).dump(2) << "\n";
      } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(primitive_json(r));
        std::cout << arr.dump(2) << "\n";
      }
    } else {
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) std::cout << "\n";
        print_primitive_text(reports[i]);
      }
    }
    return 0;
  });
}

CampaignConfig inline_config(const Options& o, const CLI::App& sub) {
  CampaignConfig c;
  c.field = field_desc(o);
  c.kinds.clear();
  for (const auto& k : detail::split_list(o.kind, ',')) {
    auto kk = parse_kind(k);
    if (!kk) throw Error(Errc::ConfigInvalid, "unknown kind " + k);
    c.kinds.push_back(*kk);
  }
  c.max_param_degree = o.max_degree;
  c.count = o.count;
  c.seed = effective_seed(o);
  if (!o.a.empty() || !o.b.empty()) {
    c.enumeration = Enumeration::Explicit;
    c.explicit_params = {{o.a, o.b}};
  }
  if (!o.enumeration.empty()) detail::apply_setting(c, "enumeration", o.enumeration);
  if (sub.count("--n-max")) c.n_max = o.n_max;
  if (sub.count("--m-max")) c.m_max = o.m_max;
  if (!o.checks.empty()) detail::apply_setting(c, "checks", o.checks);
  c.include_excluded = o.include_excluded;
  c.threads = o.threads;
  c.validate();
  return c;
}

int cmd_verify(const Options& o, const CLI::App& sub) {
  CampaignConfig c;
  if (!o.config.empty()) {
    c = load_config(o.config);
    if (o.include_excluded) c.include_excluded = true;
    if (o.seed) c.seed = *o.seed;
    if (sub.count("--n-max")) c.n_max = o.n_max;
    if (sub.count("--m-max")) c.m_max = o.m_max;
    c.validate();
  } else {
    c = inline_config(o, sub);
  }
  auto report = run_campaign(c);
  if (o.json_out)
    std::cout << report_json(report).dump(2) << "\n";
  else
    std::cout << summary_table(report);
  return report.ok() ? 0 : 1;
}

int cmd_cyclo(const Options& o) {
  if (o.n == 0) throw Error(Errc::PreconditionViolated, "--n must be positive");
  auto form = cyclotomic_form(o.n);
  if (o.json_out)
    std::cout << json{{"n", o.n}, {"form", to_string(form)}, {"coeffs", form_json(form)}}.dump(2) << "\n";
  else
    std::cout << to_string(form) << "\n";
  return 0;
}

int cmd_resultant(const Options& o) {
  if (o.m == 0 || o.n == 0) throw Error(Errc::PreconditionViolated, "--m and --n must be positive");
  auto r = resultant(pn_form(o.m), pn_form(o.n));
  if (o.json_out)
    std::cout << json{{"m", o.m}, {"n", o.n}, {"resultant", r.get_str()}}.dump(2) << "\n";
  else
    std::cout << r.get_str() << "\n";
  return 0;
}

int cmd_factor(const Options& o) {
  return with_field(o, [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto h = parse_poly(o.poly, f);
    Factorization<F> fac{FieldElem<F>(f, f.one()), {}};
    if constexpr (F::is_prime_field) {
      if (o.squarefree) {
        fac = squarefree_decomp(h);
      } else {
        std::mt19937_64 rng(effective_seed(o));
        fac = factor_fp(h, rng);
      }
    } else {
      if (!o.squarefree)
        throw Error(Errc::UnsupportedField, "complete factorization over Q is not available; use --squarefree");
      fac = squarefree_decomp(h);
    }
    if (o.json_out)
      std::cout << factorization_json(fac).dump(2) << "\n";
    else
      std::cout << factorization_text(fac) << "\n";
    return 0;
  });
}

void add_field_flags(CLI::App* sub, Options& o) {
  sub->add_option("--field", o.field, "coefficient field: q or fp")->check(CLI::IsMember({"q", "fp"}));
  sub->add_option("--p", o.p, "prime modulus for --field fp");
}

void add_seq_flags(CLI::App* sub, Options& o) {
  sub->add_option("--kind", o.kind, "power, lucas or lehmer");
  add_field_flags(sub, o);
  sub->add_option("--a", o.a, "first parameter: f, P or Rp");
  sub->add_option("--b", o.b, "second parameter: g or Q");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Lucas, Lehmer and power-difference sequences over K[x]"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json_out, "emit JSON");
  app.add_option("--seed", o.seed, "seed for randomized algorithms (default: SEQ_SEED)");

  auto* gen = app.add_subcommand("gen", "print terms 1..n");
  add_seq_flags(gen, o);
  gen->add_option("--n", o.n, "number of terms")->required();

  auto* prim = app.add_subcommand("primitive", "primitive divisor report");
  add_seq_flags(prim, o);
  prim->add_option("--n", o.n, "single index");
  prim->add_option("--n-max", o.n_max, "all indices up to this bound");

  auto* ver = app.add_subcommand("verify", "run a verification campaign");
  ver->add_option("--config", o.config, "key=value or JSON config file");
  add_seq_flags(ver, o);
  ver->add_option("--n-max", o.n_max, "largest index");
  ver->add_option("--m-max", o.m_max, "largest second index");
  ver->add_flag("--include-excluded", o.include_excluded, "count indices divisible by p (sabotage)");
  ver->add_option("--enumeration", o.enumeration, "exhaustive, random or explicit");
  ver->add_option("--checks", o.checks, "comma-separated checks, or all");
  ver->add_option("--max-degree", o.max_degree, "largest parameter degree");
  ver->add_option("--count", o.count, "random parameter sets per kind");
  ver->add_option("--threads", o.threads, "worker threads (0: all cores)");

  auto* cyc = app.add_subcommand("cyclo", "homogeneous cyclotomic form");
  cyc->add_option("--n", o.n, "index")->required();

  auto* res = app.add_subcommand("resultant", "resultant of P_m and P_n");
  res->add_option("--m", o.m, "first index")->required();
  res->add_option("--n", o.n, "second index")->required();

  auto* fac = app.add_subcommand("factor", "factor a polynomial");
  add_field_flags(fac, o);
  fac->add_flag("--squarefree", o.squarefree, "squarefree decomposition only");
  fac->add_option("poly", o.poly, "polynomial")->required();

  for (auto* sub : {gen, prim, ver, cyc, res, fac}) {
    sub->add_flag("--json", o.json_out, "emit JSON");
    sub->add_option("--seed", o.seed, "seed for randomized algorithms (default: SEQ_SEED)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*prim) return cmd_primitive(o);
    if (*ver) return cmd_verify(o, *ver);
    if (*cyc) return cmd_cyclo(o);
    if (*res) return cmd_resultant(o);
    if (*fac) return cmd_factor(o);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
