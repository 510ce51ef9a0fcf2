#pragma once

// Property suites over the library and the certificates they emit.
//
// Certificate JSON ("cheese-certificate/1"):
//   {"schema", "claim_id", "suite", "subject", "inputs_digest", "verdict",
//    "margin", "precision_bits", "seed", "timestamp",
//    "checks": [{"name", "passed", "margin", "detail"}], "diagnostics": [...]}
// Everything except "timestamp" is a pure function of the suite inputs.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cheese/browder.hpp"
#include "cheese/io.hpp"
#include "cheese/rational.hpp"

namespace cheese {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr const char* kCertificateSchema = "cheese-certificate/1";

struct SuiteConfig {
  long precision_bits = kDefaultPrecisionBits;
  std::uint64_t seed = kDefaultSeed;
  long trials = 100;       // sqrt_disc discs, sqrt_cheese random families (halved), descent functions (doubled)
  long samples = 100000;   // inclusion samples per disc
  long m = 2;
  std::size_t depth = 20;
  long n_max = 10;         // infinite_order groups
  long count = 8;          // discs per synthetic group
  long witnesses = 1000;   // norm_bound witness indices
  std::optional<CheeseSpec> seed_family;  // pipeline_main_theorem; the toy seed when absent
  std::string timestamp;   // fixed timestamp; the current UTC time when empty
};

struct Certificate {
  std::string claim_id;
  std::string suite;
  std::string subject;
  std::string inputs_digest;
  Outcome verdict = Outcome::fail;
  Real margin;
  long precision_bits = 0;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::vector<Check> checks;
  std::vector<std::string> diagnostics;
};

inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"sqrt_disc",  "sqrt_cheese", "road_runner",           "infinite_order",
                                            "descent",    "norm_bound",  "pipeline_main_theorem", "pipeline_m_to_infinity"};
  return ids;
}

/// 64-bit FNV-1a.
inline std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Json certificate_to_json(const Certificate& c) {
  Json checks = Json::array();
  for (const auto& k : c.checks) {
    checks.push_back({{"name", k.name}, {"passed", k.passed}, {"margin", k.margin.str(20)}, {"detail", k.detail}});
  }
  return Json{{"schema", kCertificateSchema},
              {"claim_id", c.claim_id},
              {"suite", c.suite},
              {"subject", c.subject},
              {"inputs_digest", c.inputs_digest},
              {"verdict", to_string(c.verdict)},
              {"margin", c.margin.str(20)},
              {"precision_bits", c.precision_bits},
              {"seed", c.seed},
              {"timestamp", c.timestamp},
              {"checks", checks},
              {"diagnostics", c.diagnostics}};
}

/// A small family standing in for an externally supplied seed cheese.
/// Non-authoritative: it only exercises the pipeline.
inline CheeseSpec toy_seed_family() {
  std::vector<Disc> discs{
      Disc(Complex(0.625, 0.0), Real(0.125)),
      Disc(Complex(-0.5, 0.375), Real(0.1875)),
      Disc(Complex(0.0, -0.75), Real(0.15625)),
      Disc(Complex(-0.8125, -0.375), Real(0.09375)),
  };
  return CheeseSpec{make_family(std::move(discs)), "toy seed (non-authoritative)"};
}

namespace detail {

struct SuiteContext {
  const SuiteConfig& config;
  std::string suite;
  std::string timestamp;
  std::vector<Certificate> out;

  void emit(std::string claim_id, std::string subject, const Json& inputs, std::vector<Check> checks,
            std::vector<std::string> diagnostics = {}, bool truncated = false) {
    Certificate c;
    c.claim_id = std::move(claim_id);
    c.suite = suite;
    c.subject = std::move(subject);
    Json digest_input{{"suite", suite}, {"subject", c.subject}, {"inputs", inputs},
                      {"precision_bits", config.precision_bits}, {"seed", config.seed}};
    c.inputs_digest = fnv1a_digest(digest_input.dump());
    c.margin = min_margin(checks);
    // Strict checks only pass with a positive margin; non-strict ones may sit at 0.
    const bool ok = all_passed(checks);
    c.verdict = !ok ? Outcome::fail : (truncated ? Outcome::truncated_only : Outcome::pass);
    c.precision_bits = config.precision_bits;
    c.seed = config.seed;
    c.timestamp = timestamp;
    c.checks = std::move(checks);
    c.diagnostics = std::move(diagnostics);
    out.push_back(std::move(c));
  }
};

/// Random disc with 0 < r < |a|; |a| in [1/16, 2), r / |a| in [1/100, 99/100).
inline Disc random_valid_disc(const CounterRng& rng, std::uint64_t key) {
  const double modulus = 0.0625 + 1.9375 * rng.uniform(key, 0);
  const double theta = 2.0 * std::numbers::pi * rng.uniform(key, 1);
  const double ratio = 0.01 + 0.98 * rng.uniform(key, 2);
  return Disc(Complex(modulus * std::cos(theta), modulus * std::sin(theta)), Real(modulus * ratio));
}

/// Draws w area-uniformly from the part of the annulus sqrt(s) < |w| < sqrt(|a| + r)
/// lying in the two sectors arg(a)/2 +- asin(r/|a|)/2 (and their rotation by pi),
/// a region containing the square root of the disc, and counts accepted
/// samples (w^2 in the disc) that miss both output discs.
struct InclusionResult {
  long accepted = 0;
  long attempts = 0;
  long violations = 0;
};

inline InclusionResult inclusion_sample(const Disc& d, const SqrtDiscPair& pair, long samples, const CounterRng& rng,
                                        std::uint64_t key) {
  const FastDisc source(d);
  const FastDisc d1(pair.delta1);
  const FastDisc d2(pair.delta2);
  const double modulus = abs(d.center).to_double();
  const double r = d.radius.to_double();
  const double lo = pair.s.to_double() * (1.0 - 1e-12);
  const double hi = (modulus + r) * (1.0 + 1e-12);
  const double half_width = 0.5 * std::asin(std::min(1.0, r / modulus)) * (1.0 + 1e-9) + 1e-12;
  const double mid = 0.5 * std::atan2(d.center.im.to_double(), d.center.re.to_double());
  InclusionResult res;
  const long max_attempts = 200 * samples;
  while (res.accepted < samples && res.attempts < max_attempts) {
    const auto c = static_cast<std::uint64_t>(3 * res.attempts);
    ++res.attempts;
    const double rho = std::sqrt(lo + (hi - lo) * rng.uniform(key, c));
    double theta = mid + half_width * (2.0 * rng.uniform(key, c + 1) - 1.0);
    if (rng.uniform(key, c + 2) < 0.5) theta += std::numbers::pi;
    const double x = rho * std::cos(theta);
    const double y = rho * std::sin(theta);
    if (source.side_of_square(x, y) >= 0) continue;
    ++res.accepted;
    if (d1.side(x, y) >= 0 && d2.side(x, y) >= 0) ++res.violations;
  }
  return res;
}

/// Random finite family whose discs meet the unit disc and keep the origin outside their closures.
inline DiscFamily random_finite_family(const CounterRng& rng, std::uint64_t key) {
  const long count = 1 + static_cast<long>(rng.uniform(key, 0) * 12.0);
  std::vector<Disc> discs;
  for (std::uint64_t i = 0; static_cast<long>(discs.size()) < count; ++i) {
    const double modulus = 0.1 + 1.1 * rng.uniform(key, 1 + 3 * i);
    const double theta = 2.0 * std::numbers::pi * rng.uniform(key, 2 + 3 * i);
    const double r = modulus * (0.05 + 0.85 * rng.uniform(key, 3 + 3 * i));
    if (!(modulus < 1.0 + r)) continue;
    discs.emplace_back(Complex(modulus * std::cos(theta), modulus * std::sin(theta)), Real(r));
  }
  return make_family(std::move(discs));
}

/// z uniform in the closed unit disc with z in the realized square-root
/// cheese must have z^2 in the source cheese.
inline Check subset_property(const DiscFamily& source, const DiscFamily& root, std::size_t depth, long samples,
                             const CounterRng& rng, std::uint64_t key) {
  const RealizedCheese src(source, depth);
  const RealizedCheese rt(root, depth);
  long tested = 0;
  long violations = 0;
  for (long i = 0; i < 20 * samples && tested < samples; ++i) {
    const double x = 2.0 * rng.uniform(key, 2 * static_cast<std::uint64_t>(i)) - 1.0;
    const double y = 2.0 * rng.uniform(key, 2 * static_cast<std::uint64_t>(i) + 1) - 1.0;
    if (!rt.contains(x, y)) continue;
    ++tested;
    if (!src.contains_square(x, y)) ++violations;
  }
  return boolean_check("z in root cheese implies z^2 in source cheese", violations == 0 && tested > 0,
                       std::to_string(tested) + " samples, " + std::to_string(violations) + " violations");
}

inline Json params_json(const SuiteConfig& c) {
  return Json{{"trials", c.trials}, {"samples", c.samples}, {"m", c.m}, {"depth", c.depth},
              {"n_max", c.n_max},   {"count", c.count},     {"witnesses", c.witnesses}};
}

inline void run_sqrt_disc(SuiteContext& ctx) {
  const auto& cfg = ctx.config;
  const CounterRng rng(cfg.seed);
  const Real tol = strict_margin_epsilon();
  for (long i = 0; i < cfg.trials; ++i) {
    const auto key = static_cast<std::uint64_t>(i);
    const Disc d = random_valid_disc(rng, key);
    const auto pair = sqrt_disc(d);
    const Real modulus = abs(d.center);
    const Real root_s = sqrt(pair.s);
    std::vector<Check> checks;
    checks.push_back(boolean_check("delta2 = -delta1, equal radii",
                                   pair.delta2.center == -pair.delta1.center && pair.delta2.radius == pair.delta1.radius));
    checks.push_back(close_to("|center(delta1)| = sqrt(s + r)", abs(pair.delta1.center), sqrt(pair.s + d.radius), tol));
    for (const Disc* delta : {&pair.delta1, &pair.delta2}) {
      const std::string which = delta == &pair.delta1 ? "delta1" : "delta2";
      checks.push_back(close_to("(a) s0(" + which + ") = sqrt(s)", s_dist(*delta, Complex()), root_s, tol));
      checks.push_back(close_to("(b) r(" + which + ") = sqrt|a| - sqrt(s)", delta->radius, sqrt(modulus) - root_s, tol));
      checks.push_back(strict_less("(b) r(" + which + ") < r/(2 sqrt s)", delta->radius, d.radius / ldexp(root_s, 1)));
      const Real s0 = s_dist(*delta, Complex());
      for (long m = 1; m <= 8; ++m) {
        checks.push_back(strict_less("(c) m=" + std::to_string(m) + " " + which,
                                     delta->radius / pow(s0, 2 * m + 1), d.radius / ldexp(pow(pair.s, m + 1), 1)));
      }
    }
    const auto inc = inclusion_sample(d, pair, cfg.samples, rng.substream(key), key);
    checks.push_back(boolean_check("sqrt(D) subset of delta1 u delta2 (sampled)",
                                   inc.violations == 0 && inc.accepted >= cfg.samples,
                                   std::to_string(inc.accepted) + " accepted of " + std::to_string(inc.attempts) +
                                       " attempts, " + std::to_string(inc.violations) + " violations"));
    Json inputs{{"disc", {{"cx", d.center.re.str()}, {"cy", d.center.im.str()}, {"r", d.radius.str()}}},
                {"samples", cfg.samples}};
    ctx.emit("lemma-square-root-disc", "disc " + std::to_string(i), inputs, std::move(checks));
  }
}

inline void emit_decrease(SuiteContext& ctx, const std::string& subject, const DiscFamily& fam, long m,
                          std::size_t depth, const Json& inputs, std::optional<Check> extra = std::nullopt) {
  const auto v = sqrt_decrease_check(fam, m, depth);
  std::vector<Check> checks{v.comparison};
  checks.push_back(boolean_check("per-disc inequality for every realized disc", all_passed(v.per_disc),
                                 std::to_string(v.per_disc.size()) + " root discs; min margin " +
                                     min_margin(v.per_disc).str(6)));
  if (extra) checks.push_back(*extra);
  std::vector<std::string> diag{"B_m(source) realized = " + v.source.realized_sum.str(25),
                                "B_2m(root) realized = " + v.root.realized_sum.str(25),
                                std::string("root tail: ") + to_string(v.root.tail.kind) + " " +
                                    v.root.tail.value.str(10) + " (" + v.root.tail.provider + ")"};
  Json in = inputs;
  in["m"] = m;
  in["depth"] = depth;
  ctx.emit("theorem-square-root-of-cheese-c", subject + ", m=" + std::to_string(m), in, std::move(checks),
           std::move(diag), v.outcome == Outcome::truncated_only);
}

inline void run_sqrt_cheese(SuiteContext& ctx) {
  const auto& cfg = ctx.config;
  const CounterRng rng(cfg.seed);
  const DiscFamily rr = road_runner(2);
  const DiscFamily rr_finite = truncate(rr, cfg.depth);
  for (long m = 1; m <= 3; ++m) {
    emit_decrease(ctx, "road_runner(2) truncated to depth " + std::to_string(cfg.depth), rr_finite, m, cfg.depth,
                  family_to_json(rr_finite));
  }
  // The infinite family: the root tail is certifiable at m = 1 only.
  emit_decrease(ctx, "road_runner(2) with tail", rr, 1, cfg.depth, family_to_json(rr));
  const long families = std::max<long>(1, cfg.trials / 2);
  for (long i = 0; i < families; ++i) {
    const auto key = static_cast<std::uint64_t>(i);
    const DiscFamily fam = random_finite_family(rng, key);
    const Check subset = subset_property(fam, sqrt_family(fam), 0, 10000, rng.substream(key), key);
    for (long m = 1; m <= 3; ++m) {
      emit_decrease(ctx, "random family " + std::to_string(i), fam, m, 0, family_to_json(fam),
                    m == 1 ? std::optional<Check>(subset) : std::nullopt);
    }
  }
}

inline void run_road_runner(SuiteContext& ctx) {
  const auto& cfg = ctx.config;
  const long m = cfg.m;
  if (m < 2) throw InputError("road_runner suite: m must be >= 2");
  const auto N = static_cast<long>(cfg.depth);
  std::vector<Check> checks;
  for (long n = 1; n <= 20; ++n) {
    const mpq_class d = road_runner_delta_exact(m, n, static_cast<std::size_t>(m));
    checks.push_back(boolean_check("|delta_{0,m}(f_" + std::to_string(n) + ")| = n (exact)", abs(d) == n,
                                   "delta = " + d.get_str()));
    checks.push_back(road_runner_norm_certificate(m, n));
  }
  // Order m-1 Browder sum at 0 in exact arithmetic.
  mpq_class realized(1);
  bool termwise = true;
  for (long n = 1; n <= N; ++n) {
    const mpq_class a = road_runner_center_exact(n);
    const mpq_class r = road_runner_radius_exact(m, n);
    mpq_class denom(1);
    for (long i = 0; i < m; ++i) denom *= a - r;
    const mpq_class term = r / denom;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
    termwise = termwise && term * p <= mpq_class(mpz_class(1) << static_cast<unsigned>(m - 1));
    realized += term;
  }
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(N));
  const mpq_class pow_m1(mpz_class(1) << static_cast<unsigned>(m - 1));
  const mpq_class bound = 1 + pow_m1 - pow_m1 / two_n;
  checks.push_back(boolean_check("terms r_n/(a_n-r_n)^m <= 2^(m-1-n) (exact)", termwise));
  checks.push_back(boolean_check("realized B_(m-1)(0) <= 1 + 2^(m-1) - 2^(m-1-N) (exact)", realized <= bound,
                                 "realized = " + Real(realized).str(25)));
  const Real tail = road_runner_tail(m, m - 1, static_cast<std::size_t>(N));
  checks.push_back(at_most("realized + tail <= 1 + 2^m", Real(realized) + tail, Real(1) + Real::pow2(m)));
  const auto rep = browder_sum(road_runner(m), m - 1, Complex(), static_cast<std::size_t>(N));
  checks.push_back(close_to("floating realized sum matches exact", rep.realized_sum, Real(realized), strict_margin_epsilon()));
  checks.push_back(boolean_check("tail certified", rep.certified(), rep.tail.provider));
  const auto val = validate_cheese(CheeseSpec{road_runner(m), {}}, 50);
  checks.push_back(boolean_check("closures pairwise disjoint to n=50", val.pairwise_disjoint_closures.value_or(false)));
  checks.push_back(boolean_check("discs in (0,1) on the real axis", val.on_positive_axis_in_unit_interval.value_or(false)));
  checks.push_back(boolean_check("0 in K", val.origin_certified));
  Json inputs = params_json(cfg);
  ctx.emit("lemma-road-runner", "road_runner(" + std::to_string(m) + ")", inputs, std::move(checks),
           {"realized B_(m-1)(0) = " + Real(realized).str(30), "tail bound = " + tail.str(10)});
}

inline void run_infinite_order(SuiteContext& ctx) {
  const auto& cfg = ctx.config;
  const auto v = infinite_order_estimate(cfg.n_max, cfg.m, cfg.count, cfg.seed);
  std::vector<Check> checks;
  std::vector<std::string> diag;
  for (const auto& g : v.groups) {
    for (const auto& c : g.checks) {
      Check named = c;
      named.name = "n=" + std::to_string(g.n) + ": " + c.name;
      checks.push_back(std::move(named));
    }
    diag.push_back("n=" + std::to_string(g.n) + ": kept " + std::to_string(g.kept) + "/" +
                   std::to_string(g.generated) + ", group sum " + g.group_sum.str(12) + " <= " + g.group_bound.str(12));
  }
  checks.push_back(v.total_check);
  // The same family through the generic Browder machinery.
  ParametricTail t;
  t.generator = GeneratorKind::infinite_order;
  t.params.count = cfg.count;
  t.params.seed = cfg.seed;
  const DiscFamily fam = make_family({}, {t});
  const auto rep = browder_sum(fam, cfg.m, Complex(), static_cast<std::size_t>(cfg.n_max));
  checks.push_back(boolean_check("tail certified", rep.certified(), rep.tail.provider));
  checks.push_back(close_to("Browder sum realized part = 1 + grouped total", rep.realized_sum, Real(1) + v.total,
                            strict_margin_epsilon()));
  checks.push_back(at_most("realized + tail <= 1 + partial majorant + remainder", rep.upper_bound(),
                           Real(1) + v.majorant_partial + v.remainder));
  diag.push_back("total " + v.total.str(20) + ", majorant " + v.majorant_partial.str(20) + ", remainder " +
                 v.remainder.str(10));
  ctx.emit("theorem-infinite-order", "m=" + std::to_string(cfg.m) + ", n_max=" + std::to_string(cfg.n_max),
           params_json(cfg), std::move(checks), std::move(diag));
}

/// Random rational function with `poles` simple poles of modulus in [1/2, 2].
inline RationalFunction random_rational(const CounterRng& rng, std::uint64_t key, long poles) {
  std::vector<Pole> ps;
  std::uint64_t c = 0;
  for (long i = 0; i < poles; ++i) {
    const double modulus = 0.5 + 1.5 * rng.uniform(key, c++);
    const double theta = 2.0 * std::numbers::pi * rng.uniform(key, c++);
    ps.push_back(Pole{Complex(modulus * std::cos(theta), modulus * std::sin(theta)), 1});
  }
  const long num_degree = static_cast<long>(rng.uniform(key, c++) * static_cast<double>(poles + 2));
  Poly<Complex> num;
  for (long i = 0; i <= num_degree; ++i) {
    num.emplace_back(2.0 * rng.uniform(key, c) - 1.0, 2.0 * rng.uniform(key, c + 1) - 1.0);
    c += 2;
  }
  return RationalFunction::from_poles(std::move(num), Complex(1), std::move(ps));
}

/// Random odd function z E(z^2) / F(z^2) with exactly zero even coefficients.
inline RationalFunction random_odd_rational(const CounterRng& rng, std::uint64_t key, long poles) {
  const RationalFunction h = random_rational(rng, key, poles);
  return RationalFunction::monomial(1) * compose_square(h);
}

inline void run_descent(SuiteContext& ctx) {
  const auto& cfg = ctx.config;
  const CounterRng rng(cfg.seed);
  const long count = 2 * cfg.trials;
  for (long i = 0; i < count; ++i) {
    const auto key = static_cast<std::uint64_t>(i);
    const long poles = 1 + static_cast<long>(rng.uniform(key ^ 0xd1ce, 0) * 10.0);
    const auto m = static_cast<std::size_t>(1 + i % 3);
    const bool odd = i % 10 == 9;
    const RationalFunction f = odd ? random_odd_rational(rng, key, poles) : random_rational(rng, key, poles);
    const auto v = delta_descent_check(f, m);
    std::vector<Check> checks = v.checks;
    if (odd) checks.push_back(boolean_check("odd function: all values exactly 0", v.exact_zero));
    checks.push_back(boolean_check("even part is even", is_even(even_part(f))));
    Json inputs = rational_to_json(f);
    inputs["m"] = m;
    ctx.emit("theorem-square-root-of-set-c",
             std::string(odd ? "odd" : "random") + " function " + std::to_string(i) + ", m=" + std::to_string(m), inputs,
             std::move(checks), {"delta_{0,2m}(f) = " + v.direct.str(25), "delta_{0,m}(h) = " + v.descended.str(25)});
  }
}

inline void run_norm_bound(SuiteContext& ctx) {
  const auto& cfg = ctx.config;
  const long m = std::max<long>(cfg.m, 1);
  const CheeseSpec cheese{road_runner(m), "road_runner(" + std::to_string(m) + ")"};
  for (long k = 0; k < m; ++k) {
    const auto witnesses = road_runner_witnesses(m, static_cast<std::size_t>(k), cfg.witnesses);
    const auto e = browder_norm_experiment(cheese, Complex(), k, witnesses, cfg.depth);
    std::vector<Check> checks;
    checks.push_back(boolean_check("Browder sum certified finite", e.browder.certified(), e.browder.tail.provider));
    checks.push_back(boolean_check("|delta(f)| <= B ||f|| for every witness", e.passed,
                                   std::to_string(e.witnesses) + " witnesses, " +
                                       std::to_string(e.violations.size()) + " violations"));
    checks.push_back(boolean_check("every witness evaluated", e.witnesses == witnesses.size(),
                                   std::to_string(e.witnesses) + " of " + std::to_string(witnesses.size())));
    for (const auto& viol : e.violations) checks.push_back(viol);
    Json inputs = params_json(cfg);
    inputs["order"] = k;
    ctx.emit("lemma-browder2", "road_runner(" + std::to_string(m) + "), order " + std::to_string(k), inputs,
             std::move(checks),
             {"B = " + e.bound.str(25), "largest ratio |delta|/||f|| = " + e.max_ratio.str(25) + " (" + e.argmax + ")"});
  }
  // Order m: |delta_{0,m}(f_n)| / ||f_n|| = n grows without bound.
  std::vector<Check> checks;
  std::vector<std::string> diag;
  mpq_class previous(0);
  bool increasing = true;
  bool identity = true;
  for (long n = 1; n <= 20; ++n) {
    const mpq_class ratio = abs(road_runner_delta_exact(m, n, static_cast<std::size_t>(m)));
    identity = identity && ratio == n;
    increasing = increasing && ratio > previous;
    previous = ratio;
    diag.push_back("n=" + std::to_string(n) + ": ratio " + ratio.get_str());
  }
  checks.push_back(boolean_check("ratios equal n for n = 1..20 (exact)", identity));
  checks.push_back(boolean_check("ratios strictly increasing", increasing));
  checks.push_back(boolean_check("ratio reaches 20", previous == 20));
  const auto rep = browder_sum(cheese.family, m, Complex(), cfg.depth);
  checks.push_back(boolean_check("order-m Browder tail is not finite", rep.tail.kind == TailBound::Kind::unbounded,
                                 rep.tail.provider));
  for (long n = 1; n <= 3; ++n) {
    const auto fn = RationalFunction::simple_pole(Complex(Real(road_runner_radius_exact(m, n))),
                                                  Complex(Real(road_runner_center_exact(n))));
    const auto est = sup_norm_estimate(fn, cheese, 256, cfg.depth);
    checks.push_back(at_most("sampled ||f_" + std::to_string(n) + "|| <= 1", est.value, Real(1)));
    checks.push_back(at_most("sampled ||f_" + std::to_string(n) + "|| >= 1 - 2^-20", Real(1) - Real::pow2(-20),
                             est.value));
  }
  Json inputs = params_json(cfg);
  inputs["order"] = m;
  ctx.emit("lemma-road-runner-unbounded", "road_runner(" + std::to_string(m) + "), order " + std::to_string(m), inputs,
           std::move(checks), std::move(diag));
}

/// Smallest v >= 1 with 2^v + 1 >= m.
inline long sqrt_iterations_for(long m) {
  long v = 1;
  while ((1L << v) + 1 < m) ++v;
  return v;
}

inline void run_pipeline_main_theorem(SuiteContext& ctx) {
  const auto& cfg = ctx.config;
  const long m = cfg.m;
  if (m < 2) throw InputError("pipeline_main_theorem: m must be >= 2");
  const CheeseSpec seed = cfg.seed_family ? *cfg.seed_family : toy_seed_family();
  const std::size_t depth = cfg.depth;

  ParametricTail t1;
  t1.generator = GeneratorKind::infinite_order;
  t1.params.count = cfg.count;
  t1.params.seed = cfg.seed;
  const DiscFamily k1 = make_family({}, {t1});
  const DiscFamily k2 = road_runner(m);
  const long v = sqrt_iterations_for(m);
  DiscFamily k3 = seed.family;
  for (long i = 0; i < v; ++i) k3 = sqrt_family(k3);
  const DiscFamily merged = merge_families({k1, k2, k3});

  std::vector<Check> checks;
  const auto val = validate_cheese(CheeseSpec{merged, {}}, depth);
  checks.push_back(boolean_check("0 in K (realized and every tail)", val.origin_certified));
  checks.push_back(boolean_check("every realized disc meets the unit disc", val.all_meet_unit_disc));
  const auto b = browder_sum(merged, m - 1, Complex(), depth);
  checks.push_back(boolean_check("order m-1 Browder sum at 0 certified", b.certified(), b.tail.provider));
  checks.push_back(boolean_check("order m-1 Browder sum at 0 finite", b.upper_bound().is_finite(),
                                 b.upper_bound().str(20)));
  Real parts(0);
  std::vector<std::string> diag;
  for (const DiscFamily* f : {&k1, &k2, static_cast<const DiscFamily*>(&k3)}) {
    const auto r = browder_sum(*f, m - 1, Complex(), depth);
    parts += r.realized_sum;
    diag.push_back("part realized " + r.realized_sum.str(20) + ", tail " + r.tail.value.str(10));
  }
  checks.push_back(at_most("merged realized <= sum of parts - 2", b.realized_sum, parts - Real(2)));
  diag.push_back("merged realized " + b.realized_sum.str(25) + ", tail " + b.tail.value.str(10) + " (" +
                 b.tail.provider + ")");
  diag.push_back("square-root iterations: " + std::to_string(v));
  diag.push_back("seed: " + seed.label);
  Json inputs = params_json(cfg);
  inputs["seed_family"] = cheese_to_json(seed);
  ctx.emit("theorem-main-theorem", "m=" + std::to_string(m), inputs, std::move(checks), std::move(diag));
}

inline void run_pipeline_m_to_infinity(SuiteContext& ctx) {
  const auto& cfg = ctx.config;
  std::vector<AffineCopy> copies;
  std::vector<Check> checks;
  for (long m = 2; m <= 6; ++m) {
    AffineCopy c{Complex(Real(1) / Real(m)), Real(1) / Real(10 * m * m)};
    checks.push_back(strict_less("copy m=" + std::to_string(m) + " inside the unit disc", abs(c.offset) + c.scale,
                                 Real(1)));
    // The realized road-runner discs of each copy stay inside the copy's disc.
    const DiscFamily image = affine_family(truncate(road_runner(m), cfg.depth), c.offset, c.scale);
    bool inside = true;
    for (const auto& d : image.finite) inside = inside && abs(d.center - c.offset) + d.radius < c.scale;
    checks.push_back(boolean_check("copy m=" + std::to_string(m) + " holes inside a_m + rho_m D", inside));
    copies.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < copies.size(); ++i) {
    for (std::size_t j = i + 1; j < copies.size(); ++j) {
      checks.push_back(strict_less("copies " + std::to_string(i + 2) + "," + std::to_string(j + 2) + " disjoint",
                                   copies[i].scale + copies[j].scale, abs(copies[i].offset - copies[j].offset)));
    }
  }
  const auto overlap = find_overlapping_copies(copies);
  checks.push_back(boolean_check("no overlapping pair", !overlap.has_value()));
  ctx.emit("corollary-m-to-infinity", "copies m=2..6", params_json(cfg), std::move(checks));
}

}  // namespace detail

/// Runs a suite under `config.precision_bits` and returns its certificates.
inline std::vector<Certificate> run_suite(const std::string& suite_id, const SuiteConfig& config = {}) {
  if (config.precision_bits < 53) throw InputError("run_suite: precision must be >= 53 bits");
  const PrecisionScope scope(config.precision_bits);
  detail::SuiteContext ctx{config, suite_id, config.timestamp.empty() ? utc_timestamp() : config.timestamp, {}};
  if (suite_id == "sqrt_disc") {
    detail::run_sqrt_disc(ctx);
  } else if (suite_id == "sqrt_cheese") {
    detail::run_sqrt_cheese(ctx);
  } else if (suite_id == "road_runner") {
    detail::run_road_runner(ctx);
  } else if (suite_id == "infinite_order") {
    detail::run_infinite_order(ctx);
  } else if (suite_id == "descent") {
    detail::run_descent(ctx);
  } else if (suite_id == "norm_bound") {
    detail::run_norm_bound(ctx);
  } else if (suite_id == "pipeline_main_theorem") {
    detail::run_pipeline_main_theorem(ctx);
  } else if (suite_id == "pipeline_m_to_infinity") {
    detail::run_pipeline_m_to_infinity(ctx);
  } else {
    throw InputError("unknown suite '" + suite_id + "'");
  }
  return std::move(ctx.out);
}

/// Overall verdict: fail if any certificate fails, else truncated-only if any is, else pass.
inline Outcome overall(const std::vector<Certificate>& certs) {
  Outcome o = Outcome::pass;
  for (const auto& c : certs) {
    if (c.verdict == Outcome::fail) return Outcome::fail;
    if (c.verdict == Outcome::truncated_only) o = Outcome::truncated_only;
  }
  return o;
}

}  // namespace cheese
