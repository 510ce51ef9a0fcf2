#include <gtest/gtest.h>

#include "cheese/verify.hpp"

using namespace cheese;

namespace {

std::string without_timestamps(const std::vector<Certificate>& certs) {
  Json arr = Json::array();
  for (const auto& c : certs) {
    Json j = certificate_to_json(c);
    j.erase("timestamp");
    arr.push_back(j);
  }
  return arr.dump();
}

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.trials = 6;
  cfg.samples = 2000;
  cfg.witnesses = 50;
  return cfg;
}

}  // namespace

TEST(Suites, AllPassOnSmallConfigs) {
  for (const auto& id : suite_ids()) {
    const auto certs = run_suite(id, small_config());
    EXPECT_FALSE(certs.empty()) << id;
    EXPECT_EQ(overall(certs), Outcome::pass) << id;
    for (const auto& c : certs) {
      EXPECT_EQ(c.suite, id);
      EXPECT_FALSE(c.claim_id.empty());
      EXPECT_EQ(c.inputs_digest.rfind("fnv1a64:", 0), 0u);
    }
  }
}

TEST(Suites, ReproducibleModuloTimestamp) {
  for (const auto& id : suite_ids()) {
    SuiteConfig a = small_config();
    a.timestamp = "2000-01-01T00:00:00Z";
    SuiteConfig b = small_config();
    b.timestamp = "2031-12-31T23:59:59Z";
    EXPECT_EQ(without_timestamps(run_suite(id, a)), without_timestamps(run_suite(id, b))) << id;
  }
}

TEST(Suites, SeedAndPrecisionChangeDigests) {
  SuiteConfig a = small_config();
  SuiteConfig b = small_config();
  b.seed = a.seed + 1;
  SuiteConfig c = small_config();
  c.precision_bits = 192;
  const auto ca = run_suite("sqrt_disc", a);
  const auto cb = run_suite("sqrt_disc", b);
  const auto cc = run_suite("sqrt_disc", c);
  EXPECT_NE(ca.front().inputs_digest, cb.front().inputs_digest);
  EXPECT_NE(ca.front().inputs_digest, cc.front().inputs_digest);
  EXPECT_EQ(cc.front().precision_bits, 192);
}

TEST(Suites, Errors) {
  EXPECT_THROW(run_suite("nope"), InputError);
  SuiteConfig low;
  low.precision_bits = 52;
  EXPECT_THROW(run_suite("sqrt_disc", low), InputError);
}

TEST(Suites, ExpectedCounts) {
  SuiteConfig cfg = small_config();
  EXPECT_EQ(run_suite("sqrt_disc", cfg).size(), 6u);
  EXPECT_EQ(run_suite("descent", cfg).size(), 12u);
  cfg.m = 3;
  cfg.n_max = 8;
  const auto io = run_suite("infinite_order", cfg);
  ASSERT_EQ(io.size(), 1u);
  EXPECT_EQ(io.front().verdict, Outcome::pass);
}

TEST(Certificate, FailingCheckFailsVerdict) {
  const SuiteConfig cfg;
  detail::SuiteContext ctx{cfg, "test", "t", {}};
  ctx.emit("claim", "ok", Json::object(), {strict_less("a", Real(1), Real(2))});
  ctx.emit("claim", "zero margin", Json::object(), {strict_less("a", Real(1), Real(1))});
  ctx.emit("claim", "mixed", Json::object(), {strict_less("a", Real(1), Real(2)), boolean_check("b", false)});
  ctx.emit("claim", "truncated", Json::object(), {at_most("a", Real(1), Real(1))}, {}, true);
  ASSERT_EQ(ctx.out.size(), 4u);
  EXPECT_EQ(ctx.out[0].verdict, Outcome::pass);
  EXPECT_EQ(ctx.out[1].verdict, Outcome::fail);
  EXPECT_EQ(ctx.out[2].verdict, Outcome::fail);
  EXPECT_EQ(ctx.out[3].verdict, Outcome::truncated_only);
  EXPECT_EQ(overall(ctx.out), Outcome::fail);
  EXPECT_EQ(overall({ctx.out[0], ctx.out[3]}), Outcome::truncated_only);
}

TEST(Certificate, JsonShape) {
  const auto certs = run_suite("pipeline_m_to_infinity", small_config());
  const Json j = certificate_to_json(certs.front());
  for (const char* key : {"schema", "claim_id", "suite", "subject", "inputs_digest", "verdict", "margin",
                          "precision_bits", "seed", "timestamp", "checks", "diagnostics"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["schema"], kCertificateSchema);
  EXPECT_EQ(j["seed"], kDefaultSeed);
}

TEST(Pipeline, SqrtIterations) {
  EXPECT_EQ(detail::sqrt_iterations_for(2), 1);
  EXPECT_EQ(detail::sqrt_iterations_for(3), 1);
  EXPECT_EQ(detail::sqrt_iterations_for(4), 2);
  EXPECT_EQ(detail::sqrt_iterations_for(5), 2);
  EXPECT_EQ(detail::sqrt_iterations_for(6), 3);
  EXPECT_EQ(detail::sqrt_iterations_for(9), 3);
}

TEST(Pipeline, MainTheoremOrders) {
  for (long m = 2; m <= 4; ++m) {
    SuiteConfig cfg = small_config();
    cfg.m = m;
    EXPECT_EQ(overall(run_suite("pipeline_main_theorem", cfg)), Outcome::pass) << m;
  }
  SuiteConfig bad = small_config();
  bad.m = 1;
  EXPECT_THROW(run_suite("pipeline_main_theorem", bad), InputError);
}

TEST(Fnv, KnownVectors) {
  EXPECT_EQ(fnv1a_digest(""), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(fnv1a_digest("a"), "fnv1a64:af63dc4c8601ec8c");
}
