// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dodgson/analysis.hpp"
#include "dodgson/bench.hpp"
#include "dodgson/scorers.hpp"
#include "dodgson/tournament.hpp"
#include "oracle.hpp"

using namespace dodgson;

namespace {

constexpr ScorerKind kScorers[] = {ScorerKind::Baseline, ScorerKind::Dfs, ScorerKind::Ucs,
                                   ScorerKind::Sc, ScorerKind::Icr};
constexpr TournamentStrategy kStrategies[] = {
    TournamentStrategy::FullSequential, TournamentStrategy::OrderedSequential,
    TournamentStrategy::Concurrent, TournamentStrategy::ConcurrentOrdered};

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", v.ok ? "PASS" : "FAIL", id, title, secs,
              v.detail.empty() ? "" : " - ", v.detail.c_str());
  std::fflush(stdout);
  if (!v.ok) ++failures;
}

std::string describe(const PreferenceProfile& pp, Alternative a) {
  return "candidate " + pp.name(a) + " of\n" + serialize_profile(pp);
}

// Profiles of the oracle grid: identical-ballot worst cases for n = 1..5 and
// 500 seeded impartial-culture profiles.
std::vector<PreferenceProfile> oracle_profiles() {
  std::vector<PreferenceProfile> out;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 5; ++m) out.push_back(dodgson::testing::unanimous_profile(n, m));
  }
  constexpr std::size_t kVoters[] = {1, 3, 5, 7};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    out.push_back(generate_impartial_culture(kVoters[seed % 4], 2 + (seed / 4) % 4, 10'000 + seed));
  }
  return out;
}

std::vector<PreferenceProfile> tournament_profiles() {
  std::vector<PreferenceProfile> out;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + 2 * (seed % 4);
    const std::size_t m = 2 + (seed / 4) % 4;
    out.push_back(generate_impartial_culture(n, m, 20'000 + seed));
  }
  return out;
}

Verdict table_reproduction() {
  Verdict v;
  const std::string expected =
      "m,phi,c,ratio_percent\n"
      "1,1,1,100.0\n"
      "2,33,9,27.3\n"
      "3,276,36,13.0\n"
      "4,1300,100,7.7\n"
      "5,4425,225,5.1\n"
      "6,12201,441,3.6\n"
      "7,29008,784,2.7\n"
      "8,61776,1296,2.1\n"
      "9,120825,2025,1.7\n"
      "10,220825,3025,1.4\n";
  const auto t0 = std::chrono::steady_clock::now();
  const auto csv = analysis::to_csv(analysis::emit_table(5, 1, 10));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (csv != expected) v.fail("table differs:\n" + csv);
  if (secs >= 1.0) v.fail("took " + std::to_string(secs) + "s");
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::size_t compared = 0;
  for (const auto& pp : oracle_profiles()) {
    for (std::uint32_t a = 0; a < pp.alternatives(); ++a) {
      const auto expected = dodgson::testing::brute_force_score(pp, Alternative(a));
      for (auto kind : kScorers) {
        const auto r = score(kind, pp, Alternative(a));
        ++compared;
        if (!r.exact() || r.score != expected.score || r.minimal_solutions != expected.solutions) {
          v.fail(std::string(to_string(kind)) + " disagrees on " + describe(pp, Alternative(a)));
        }
      }
    }
  }
  v.detail = v.ok ? std::to_string(compared) + " scorer runs matched" : v.detail;
  return v;
}

Verdict condorcet_consistency() {
  Verdict v;
  std::size_t winners = 0;
  auto profiles = oracle_profiles();
  for (auto& pp : tournament_profiles()) profiles.push_back(std::move(pp));
  for (const auto& pp : profiles) {
    for (std::uint32_t a = 0; a < pp.alternatives(); ++a) {
      if (!is_condorcet_winner(pp, Alternative(a))) continue;
      ++winners;
      for (auto kind : kScorers) {
        if (score(kind, pp, Alternative(a)).score != 0) {
          v.fail(std::string(to_string(kind)) + " scores a Condorcet winner above 0");
        }
      }
      for (auto s : kStrategies) {
        const auto o = run_tournament(pp, s, {}, ScorerKind::Icr);
        if (o.winners != std::vector<Alternative>{Alternative(a)} || o.winning_score != 0u) {
          v.fail(std::string(to_string(s)) + " misses the Condorcet winner of\n" +
                 serialize_profile(pp));
        }
      }
    }
  }
  if (winners == 0) v.fail("no profile had a Condorcet winner");
  if (v.ok) v.detail = std::to_string(winners) + " Condorcet winners";
  return v;
}

Verdict worst_case_bound() {
  Verdict v;
  std::ostringstream totals;
  for (std::uint32_t n : {3u, 5u, 7u}) {
    const auto pp = dodgson::testing::unanimous_profile(n, 5);
    std::uint64_t total = 0;
    for (std::uint32_t x = 0; x < 5; ++x) {
      const auto checks = score(ScorerKind::Ucs, pp, Alternative(x)).stats.condorcet_checks;
      if (analysis::BigInt(checks) > analysis::c_candidate(n, x + 1)) {
        v.fail("n=" + std::to_string(n) + " candidate " + pp.name(Alternative(x)) + " examined " +
               std::to_string(checks));
      }
      total += checks;
    }
    const auto bound = analysis::c_worst(n, 5);
    if (analysis::BigInt(total) > bound) {
      v.fail("n=" + std::to_string(n) + " total " + std::to_string(total) + " > " + bound.str());
    }
    totals << (totals.tellp() ? ", " : "") << "n=" << n << ": " << total << "/" << bound;
  }
  if (v.ok) v.detail = totals.str();
  return v;
}

Verdict strategy_equivalence() {
  Verdict v;
  for (const auto& pp : tournament_profiles()) {
    const auto ref = run_tournament(pp, TournamentStrategy::FullSequential, {}, ScorerKind::Icr);
    for (auto s : kStrategies) {
      const auto o = run_tournament(pp, s, {}, ScorerKind::Icr);
      if (o.winners != ref.winners || o.winning_score != ref.winning_score || !o.conclusive) {
        v.fail(std::string(to_string(s)) + " differs on\n" + serialize_profile(pp));
      }
    }
    TournamentOptions opt;
    opt.threads = 4;
    const auto first = run_tournament(pp, TournamentStrategy::Concurrent, {}, ScorerKind::Icr, opt);
    for (int rep = 0; rep < 10; ++rep) {
      const auto again =
          run_tournament(pp, TournamentStrategy::Concurrent, {}, ScorerKind::Icr, opt);
      bool same = again.winners == first.winners && again.winning_score == first.winning_score &&
                  again.conclusive == first.conclusive;
      for (std::size_t i = 0; same && i < first.per_candidate.size(); ++i) {
        same = again.per_candidate[i].status == first.per_candidate[i].status &&
               again.per_candidate[i].value == first.per_candidate[i].value;
      }
      if (!same) v.fail("repeated concurrent run differs on\n" + serialize_profile(pp));
    }
  }
  return v;
}

Verdict threaded_speedup() {
  Verdict v;
  bench::AverageConfig cfg;
  cfg.n = 8;
  cfg.m = 5;
  cfg.runs = 100;
  cfg.seed_base = 1;
  cfg.scorers = {ScorerKind::Icr};
  const double standard = bench::run_average_benchmark(cfg).front().avg_calls;
  cfg.mode = bench::Mode::Threaded;
  const double threaded = bench::run_average_benchmark(cfg).front().avg_calls;
  const double ratio = standard / threaded;
  char buf[128];
  std::snprintf(buf, sizeof buf, "avg calls %.1f -> %.1f, ratio %.1fx", standard, threaded, ratio);
  if (!(ratio >= 10.0)) v.fail(buf);
  else v.detail = buf;
  return v;
}

Verdict sweep_ordering() {
  Verdict v;
  bench::SweepConfig cfg;
  cfg.window_ms = 100;
  cfg.n_first = 3;
  cfg.n_last = 3;
  cfg.scorer = ScorerKind::Icr;
  cfg.mode = bench::Mode::Threaded;
  const double threaded = bench::run_range_sweep(cfg).front().m_max;
  cfg.scorer = ScorerKind::Baseline;
  cfg.mode = bench::Mode::Standard;
  const double baseline = bench::run_range_sweep(cfg).front().m_max;
  char buf[128];
  std::snprintf(buf, sizeof buf, "n=3: concurrent-ordered m_max %.0f, baseline m_max %.0f",
                threaded, baseline);
  if (!(threaded > baseline)) v.fail(buf);
  else v.detail = buf;
  return v;
}

// FNV-1a over everything a seeded run produces except wall time.
std::uint64_t suite_digest() {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto pp = generate_impartial_culture(1 + seed % 7, 2 + seed % 4, 30'000 + seed);
    mix(serialize_profile(pp));
    for (std::uint32_t a = 0; a < pp.alternatives(); ++a) {
      for (auto kind : kScorers) {
        const auto r = score(kind, pp, Alternative(a));
        mix(std::to_string(r.score) + ':' + std::to_string(r.stats.condorcet_checks) + ':' +
            std::to_string(r.stats.nodes_generated));
        for (const auto& s : r.minimal_solutions) {
          for (auto c : s.counts) mix(std::to_string(c) + ',');
        }
      }
    }
    for (auto s : kStrategies) {
      TournamentOptions opt;
      opt.threads = 3;
      const auto o = run_tournament(pp, s, {}, ScorerKind::Ucs, opt);
      for (const auto& c : o.per_candidate) {
        mix(std::to_string(static_cast<int>(c.status)) + ':' + std::to_string(c.value) + ':' +
            std::to_string(c.stats.condorcet_checks));
      }
    }
  }
  bench::AverageConfig cfg;
  cfg.n = 5;
  cfg.m = 4;
  cfg.runs = 10;
  for (const auto& st : bench::run_average_benchmark(cfg)) mix(std::to_string(st.avg_calls));
  return h;
}

Verdict determinism() {
  Verdict v;
  const auto first = suite_digest();
  const auto second = suite_digest();
  char buf[64];
  std::snprintf(buf, sizeof buf, "digest %016llx", static_cast<unsigned long long>(first));
  if (first != second) v.fail("digests differ between runs");
  else v.detail = buf;
  return v;
}

}  // namespace

int main() {
  report(1, "exploration-rate table at n = 5", table_reproduction);
  report(2, "all scorers match the brute-force oracle", oracle_equivalence);
  report(3, "Condorcet winners score 0 and win alone", condorcet_consistency);
  report(4, "UCS stays within the worst-case traversal bound", worst_case_bound);
  report(5, "tournament strategies agree and repeat exactly", strategy_equivalence);
  report(6, "concurrent-ordered ICR needs 10x fewer checks", threaded_speedup);
  report(7, "concurrent-ordered sweeps further than baseline", sweep_ordering);
  report(8, "seeded runs are bit-identical", determinism);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
