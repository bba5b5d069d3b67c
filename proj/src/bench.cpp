// SPDX-License-Identifier: Apache-2.0
#include "dodgson/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "dodgson/error.hpp"
#include "scorers_impl.hpp"

namespace dodgson::bench {

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::Standard ? "standard" : "threaded";
}

Summary summarize(std::span<const double> sample) {
  if (sample.empty()) throw UsageError("cannot summarize an empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = sorted.size();

  Summary s;
  s.min = sorted.front();
  s.max = sorted.back();
  s.median = k % 2 ? sorted[k / 2] : (sorted[k / 2 - 1] + sorted[k / 2]) / 2;
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(k);
  double sq = 0;
  for (double x : sorted) sq += (x - s.mean) * (x - s.mean);
  s.sigma = std::sqrt(sq / static_cast<double>(k));
  return s;
}

TournamentOutcome solve_profile(const PreferenceProfile& pp, ScorerKind scorer, Mode mode,
                                const ScoreBudget& budget, unsigned threads) {
  const auto strategy = mode == Mode::Threaded && is_layered(scorer)
                            ? TournamentStrategy::ConcurrentOrdered
                            : TournamentStrategy::FullSequential;
  return run_tournament(pp, strategy, budget, scorer, TournamentOptions{threads});
}

std::vector<RunStats> run_average_benchmark(const AverageConfig& config) {
  if (config.runs == 0) throw UsageError("runs must be at least 1");
  if (config.scorers.empty()) throw UsageError("no scorer selected");

  const std::size_t k = config.scorers.size();
  std::vector<std::vector<double>> millis(k);
  std::vector<long double> calls(k, 0);
  for (std::uint32_t r = 0; r < config.runs; ++r) {
    const auto pp = generate_impartial_culture(config.n, config.m, config.seed_base + r);
    for (std::size_t s = 0; s < k; ++s) {
      const auto t0 = Clock::now();
      const auto outcome = solve_profile(pp, config.scorers[s], config.mode, {}, config.threads);
      millis[s].push_back(detail::millis_since(t0));
      calls[s] += static_cast<long double>(outcome.total_checks());
    }
  }

  std::vector<RunStats> out;
  for (std::size_t s = 0; s < k; ++s) {
    RunStats st;
    st.scorer = config.scorers[s];
    st.mode = config.mode;
    st.n = config.n;
    st.m = config.m;
    st.runs = config.runs;
    st.millis = summarize(millis[s]);
    st.avg_calls = static_cast<double>(calls[s] / config.runs);
    st.seed_base = config.seed_base;
    out.push_back(st);
  }
  return out;
}

std::vector<RangeRecord> run_range_sweep(const SweepConfig& config) {
  if (config.window_ms <= 0) throw UsageError("window must be positive");
  if (config.repetitions == 0) throw UsageError("repetitions must be at least 1");

  ScoreBudget budget;
  budget.max_millis = config.window_ms;
  const std::uint32_t step = config.odd_n_only ? 2 : 1;
  std::uint32_t n = config.n_first;
  if (config.odd_n_only && n % 2 == 0) ++n;

  std::vector<RangeRecord> records;
  for (; n <= config.n_last; n += step) {
    double total = 0;
    std::uint32_t capped = 0;
    for (std::uint32_t rep = 0; rep < config.repetitions; ++rep) {
      std::uint32_t solved = 0;
      for (std::uint32_t m = 1; m <= config.m_limit; ++m) {
        const auto pp = generate_impartial_culture(n, m, config.seed_base + rep);
        const auto t0 = Clock::now();
        bool ok = false;
        try {
          ok = solve_profile(pp, config.scorer, config.mode, budget, config.threads).conclusive;
        } catch (const SizeLimitError&) {
          ok = false;
        }
        if (!ok || detail::millis_since(t0) > static_cast<double>(config.window_ms)) break;
        solved = m;
      }
      if (solved == config.m_limit) ++capped;
      total += solved;
    }
    RangeRecord rec;
    rec.n = n;
    rec.m_max = total / config.repetitions;
    rec.window_ms = config.window_ms;
    rec.repetitions = config.repetitions;
    rec.capped = capped == config.repetitions;
    rec.seed_base = config.seed_base;
    records.push_back(rec);
    if (rec.m_max <= 4) break;
  }
  return records;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string to_csv(std::span<const RunStats> stats) {
  std::string out = "scorer,mode,n,m,runs,min_ms,median_ms,max_ms,mean_ms,sigma_ms,avg_calls,seed_base\n";
  for (const auto& s : stats) {
    out += std::string(dodgson::to_string(s.scorer)) + ',' + std::string(to_string(s.mode)) + ',' +
           std::to_string(s.n) + ',' + std::to_string(s.m) + ',' + std::to_string(s.runs) + ',' +
           fixed(s.millis.min, 3) + ',' + fixed(s.millis.median, 3) + ',' + fixed(s.millis.max, 3) +
           ',' + fixed(s.millis.mean, 3) + ',' + fixed(s.millis.sigma, 3) + ',' +
           fixed(s.avg_calls, 2) + ',' + std::to_string(s.seed_base) + '\n';
  }
  return out;
}

std::string to_csv(std::span<const RangeRecord> records) {
  std::string out = "n,m_max,window_ms,repetitions\n";
  for (const auto& r : records) {
    out += std::to_string(r.n) + ',' + fixed(r.m_max, 2) + ',' + std::to_string(r.window_ms) + ',' +
           std::to_string(r.repetitions) + '\n';
  }
  return out;
}

}  // namespace dodgson::bench
