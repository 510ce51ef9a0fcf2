// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cheese/cheese.hpp"

using namespace cheese;

namespace {

struct Result {
  bool ok = false;
  std::string detail;
};

// Runs of each suite config, kept for the reproducibility criterion.
struct Run {
  std::string suite;
  SuiteConfig config;
  std::string json;  // certificates without timestamps
};
std::vector<Run> g_runs;

std::string strip_timestamps(const std::vector<Certificate>& certs) {
  Json arr = Json::array();
  for (const auto& c : certs) {
    Json j = certificate_to_json(c);
    j.erase("timestamp");
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

std::vector<Certificate> run(const std::string& suite, SuiteConfig cfg) {
  cfg.timestamp = "1970-01-01T00:00:00Z";
  auto certs = run_suite(suite, cfg);
  g_runs.push_back({suite, cfg, strip_timestamps(certs)});
  return certs;
}

std::size_t count(const std::vector<Certificate>& certs, Outcome o) {
  std::size_t n = 0;
  for (const auto& c : certs) n += c.verdict == o ? 1 : 0;
  return n;
}

bool has_check(const Certificate& c, const std::string& name) {
  for (const auto& k : c.checks) {
    if (k.name == name) return k.passed;
  }
  return false;
}

bool report(int id, const std::string& title, double target_s, const std::function<Result()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = r.ok;
  if (target_s > 0 && secs >= target_s) {
    ok = false;
    r.detail += "; runtime target missed";
  }
  std::printf("criterion %d: %s  %s [%.2fs%s] %s\n", id, ok ? "PASS" : "FAIL", title.c_str(), secs,
              target_s > 0 ? (", target < " + std::to_string(static_cast<int>(target_s)) + "s").c_str() : "",
              r.detail.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  bool all = true;

  all &= report(1, "square root of a disc, 100 random discs", 30, [] {
    SuiteConfig cfg;
    cfg.trials = 100;
    cfg.samples = 100000;
    const auto certs = run("sqrt_disc", cfg);
    bool sampled = true;
    for (const auto& c : certs) sampled = sampled && has_check(c, "sqrt(D) subset of delta1 u delta2 (sampled)");
    return Result{certs.size() == 100 && count(certs, Outcome::pass) == 100 && sampled,
                  std::to_string(count(certs, Outcome::pass)) + "/" + std::to_string(certs.size()) +
                      " pass, 1e5 samples per disc"};
  });

  all &= report(2, "road-runner identities, m = 2, 3, 4", 10, [] {
    std::size_t pass = 0;
    for (long m = 2; m <= 4; ++m) {
      SuiteConfig cfg;
      cfg.m = m;
      cfg.depth = 20;
      const auto certs = run("road_runner", cfg);
      pass += certs.size() == 1 && certs.front().verdict == Outcome::pass ? 1 : 0;
    }
    return Result{pass == 3, std::to_string(pass) + "/3 orders pass"};
  });

  all &= report(3, "strict Browder decrease under square roots", 30, [] {
    SuiteConfig cfg;
    cfg.trials = 100;  // 50 random families
    cfg.depth = 20;
    const auto certs = run("sqrt_cheese", cfg);
    std::size_t random = 0;
    for (const auto& c : certs) random += c.subject.rfind("random family", 0) == 0 ? 1 : 0;
    const std::size_t pass = count(certs, Outcome::pass);
    return Result{pass == certs.size() && random == 150,
                  std::to_string(pass) + "/" + std::to_string(certs.size()) + " pass (" + std::to_string(random) +
                      " random-family certificates, m = 1..3)"};
  });

  all &= report(4, "descent identity, 200 random rational functions", 60, [] {
    SuiteConfig cfg;
    cfg.trials = 100;
    const auto certs = run("descent", cfg);
    std::size_t odd = 0;
    for (const auto& c : certs) odd += has_check(c, "odd function: all values exactly 0") ? 1 : 0;
    const std::size_t pass = count(certs, Outcome::pass);
    return Result{certs.size() == 200 && pass == 200 && odd == 20,
                  std::to_string(pass) + "/200 pass, " + std::to_string(odd) + " odd functions exactly 0"};
  });

  all &= report(5, "norm bound on road_runner(3)", 30, [] {
    SuiteConfig cfg;
    cfg.m = 3;
    cfg.witnesses = 1000;
    const auto certs = run("norm_bound", cfg);
    std::size_t total_witnesses = 0;
    for (std::size_t k = 0; k < 3; ++k) total_witnesses = road_runner_witnesses(3, k, cfg.witnesses).size();
    bool unbounded = false;
    for (const auto& c : certs) {
      if (c.claim_id == "lemma-road-runner-unbounded") {
        unbounded = c.verdict == Outcome::pass && has_check(c, "ratio reaches 20");
      }
    }
    const std::size_t pass = count(certs, Outcome::pass);
    return Result{certs.size() == 4 && pass == 4 && unbounded && total_witnesses >= 1000,
                  std::to_string(pass) + "/4 pass, " + std::to_string(total_witnesses) +
                      " witnesses per order, order-3 ratios reach 20"};
  });

  all &= report(6, "infinite-order majorant, m = 1, 2, 3", 10, [] {
    std::size_t pass = 0;
    for (long m = 1; m <= 3; ++m) {
      SuiteConfig cfg;
      cfg.m = m;
      cfg.n_max = 10;
      const auto certs = run("infinite_order", cfg);
      pass += certs.size() == 1 && certs.front().verdict == Outcome::pass ? 1 : 0;
    }
    return Result{pass == 3, std::to_string(pass) + "/3 orders pass, 10 groups each"};
  });

  all &= report(7, "pipelines", 30, [] {
    SuiteConfig cfg;
    cfg.m = 2;
    cfg.seed_family = cheese_from_json(read_json_file(std::string(CHEESE_DATA_DIR) + "/toy_seed.json"));
    const auto main = run("pipeline_main_theorem", cfg);
    const auto copies = run("pipeline_m_to_infinity", SuiteConfig{});
    const bool ok = main.size() == 1 && main.front().verdict == Outcome::pass &&
                    has_check(main.front(), "0 in K (realized and every tail)") &&
                    has_check(main.front(), "order m-1 Browder sum at 0 certified") && copies.size() == 1 &&
                    copies.front().verdict == Outcome::pass && has_check(copies.front(), "no overlapping pair");
    return Result{ok, "main theorem m = 2 with the bundled seed, copies m = 2..6 disjoint"};
  });

  all &= report(8, "reproducible certificates", 0, [] {
    std::size_t same = 0;
    for (const auto& r : g_runs) {
      SuiteConfig cfg = r.config;
      cfg.timestamp = "2099-12-31T23:59:59Z";
      same += strip_timestamps(run_suite(r.suite, cfg)) == r.json ? 1 : 0;
    }
    return Result{same == g_runs.size() && !g_runs.empty(),
                  std::to_string(same) + "/" + std::to_string(g_runs.size()) + " suite runs byte-identical"};
  });

  return all ? 0 : 1;
}
