// SPDX-License-Identifier: Apache-2.0
#include "dodgson/tournament.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <barrier>
#include <exception>
#include <functional>
#include <numeric>
#include <thread>

#include "dodgson/error.hpp"
#include "scorers_impl.hpp"

namespace dodgson {

namespace {

constexpr std::array<std::pair<TournamentStrategy, std::string_view>, 4> kNames{{
    {TournamentStrategy::FullSequential, "full"},
    {TournamentStrategy::OrderedSequential, "ordered"},
    {TournamentStrategy::Concurrent, "concurrent"},
    {TournamentStrategy::ConcurrentOrdered, "concurrent-ordered"},
}};

CandidateReport report_from(const ScoreResult& r) {
  CandidateReport rep;
  rep.candidate = r.candidate;
  rep.stats = r.stats;
  switch (r.status) {
    case ScoreStatus::Exact:
      rep.status = CandidateStatus::Exact;
      rep.value = r.score;
      break;
    case ScoreStatus::TimedOut:
      rep.status = CandidateStatus::LowerBound;
      rep.value = r.lower_bound;
      break;
    case ScoreStatus::CapExceeded:
      rep.status = CandidateStatus::PrunedAt;
      rep.value = r.lower_bound;
      break;
  }
  return rep;
}

/// Fixed set of threads that execute one batch of indexed jobs per call.
class RoundPool {
 public:
  explicit RoundPool(unsigned workers) : sync_(static_cast<std::ptrdiff_t>(workers) + 1) {
    threads_.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) threads_.emplace_back([this] { loop(); });
  }

  ~RoundPool() {
    stop_ = true;
    sync_.arrive_and_wait();
  }

  RoundPool(const RoundPool&) = delete;
  RoundPool& operator=(const RoundPool&) = delete;

  void run(std::size_t count, const std::function<void(std::size_t)>& job) {
    job_ = &job;
    count_ = count;
    next_.store(0);
    sync_.arrive_and_wait();  // release workers
    sync_.arrive_and_wait();  // all jobs done
  }

 private:
  void loop() {
    for (;;) {
      sync_.arrive_and_wait();
      if (stop_) return;
      for (std::size_t i; (i = next_.fetch_add(1)) < count_;) (*job_)(i);
      sync_.arrive_and_wait();
    }
  }

  std::barrier<> sync_;
  std::atomic<std::size_t> next_{0};
  std::size_t count_ = 0;
  const std::function<void(std::size_t)>* job_ = nullptr;
  bool stop_ = false;
  std::vector<std::jthread> threads_;
};

void run_full(const PreferenceProfile& pp, const ScoreBudget& budget, ScorerKind scorer,
              const Deadline& deadline, std::vector<CandidateReport>& reports) {
  ScoreBudget plain = budget;
  plain.score_cap.reset();
  plain.incumbent = nullptr;
  for (std::uint32_t a = 0; a < pp.alternatives(); ++a) {
    if (expired(deadline)) {
      reports[a] = {Alternative(a), CandidateStatus::LowerBound, 0, {}};
      continue;
    }
    reports[a] = report_from(score(scorer, pp, Alternative(a), plain, deadline));
  }
}

void run_ordered(const PreferenceProfile& pp, const ScoreBudget& budget, ScorerKind scorer,
                 const Deadline& deadline, std::vector<CandidateReport>& reports) {
  SharedIncumbent incumbent;
  ScoreBudget capped = budget;
  capped.score_cap.reset();
  capped.incumbent = &incumbent;
  for (auto a : borda_order(pp)) {
    if (expired(deadline)) {
      reports[index(a)] = {a, CandidateStatus::LowerBound, 0, {}};
      continue;
    }
    auto result = score(scorer, pp, a, capped, deadline);
    if (result.exact()) incumbent.offer(result.score);
    reports[index(a)] = report_from(result);
  }
}

// Every live search advances through the same score layer in one round; a
// round ends when all of them finished that layer. Searches whose next layer
// lies above the best exact score are abandoned.
void run_lockstep(const PreferenceProfile& pp, TournamentStrategy strategy,
                  const ScoreBudget& budget, ScorerKind scorer, const Deadline& deadline,
                  unsigned threads, std::vector<CandidateReport>& reports) {
  std::vector<Alternative> order;
  if (strategy == TournamentStrategy::ConcurrentOrdered) {
    order = borda_order(pp);
  } else {
    for (std::uint32_t a = 0; a < pp.alternatives(); ++a) order.push_back(Alternative(a));
  }

  struct Live {
    std::unique_ptr<LayeredSearch> search;
    LayeredSearch::Step step = LayeredSearch::Step::Continue;
    double elapsed_ms = 0;
    std::exception_ptr error;
  };
  std::vector<Live> live;
  live.reserve(order.size());
  for (auto a : order) {
    live.emplace_back();
    live.back().search = make_layered_search(scorer, pp, a, budget.entry_cap);
  }

  SharedIncumbent incumbent;
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(live.size()));
  std::unique_ptr<RoundPool> pool;
  if (workers > 1) pool = std::make_unique<RoundPool>(workers);

  auto close = [&](Live& l, CandidateStatus status, std::uint32_t value) {
    auto& rep = reports[index(l.search->candidate())];
    rep.candidate = l.search->candidate();
    rep.status = status;
    rep.value = value;
    rep.stats = l.search->stats();
    rep.stats.elapsed_ms = l.elapsed_ms;
    l.search.reset();
  };

  std::vector<Live*> batch;
  bool timed_out = false;
  for (;;) {
    if (expired(deadline)) {
      for (auto& l : live) {
        if (l.search) close(l, CandidateStatus::LowerBound, l.search->verified_below());
      }
      break;
    }
    std::uint32_t layer = SharedIncumbent::kNone;
    for (auto& l : live) {
      if (l.search) layer = std::min(layer, l.search->next_layer());
    }
    if (layer == SharedIncumbent::kNone) break;

    batch.clear();
    for (auto& l : live) {
      if (l.search && l.search->next_layer() == layer) batch.push_back(&l);
    }
    const std::function<void(std::size_t)> job = [&](std::size_t i) {
      Live& l = *batch[i];
      const auto t0 = Clock::now();
      try {
        l.step = l.search->advance(deadline);
        if (l.step == LayeredSearch::Step::Solved) incumbent.offer(layer);
      } catch (...) {
        l.error = std::current_exception();
      }
      l.elapsed_ms += detail::millis_since(t0);
    };
    if (pool) {
      pool->run(batch.size(), job);
    } else {
      for (std::size_t i = 0; i < batch.size(); ++i) job(i);
    }

    for (auto* l : batch) {
      if (l->error) std::rethrow_exception(l->error);
      if (l->step == LayeredSearch::Step::TimedOut) timed_out = true;
      if (l->step == LayeredSearch::Step::Solved) close(*l, CandidateStatus::Exact, layer);
    }
    if (timed_out) {
      for (auto& l : live) {
        if (l.search) close(l, CandidateStatus::LowerBound, l.search->verified_below());
      }
      break;
    }
    const std::uint32_t best = incumbent.load();
    for (auto& l : live) {
      if (l.search && l.search->next_layer() > best) {
        close(l, CandidateStatus::PrunedAt, l.search->next_layer());
      }
    }
  }
}

}  // namespace

std::string_view to_string(TournamentStrategy s) noexcept {
  for (auto [k, name] : kNames) {
    if (k == s) return name;
  }
  return "?";
}

std::optional<TournamentStrategy> parse_strategy(std::string_view name) noexcept {
  for (auto [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::uint64_t TournamentOutcome::total_checks() const noexcept {
  std::uint64_t total = 0;
  for (const auto& r : per_candidate) total += r.stats.condorcet_checks;
  return total;
}

std::vector<Alternative> borda_order(const PreferenceProfile& pp) {
  std::vector<std::uint64_t> points(pp.alternatives());
  std::vector<Alternative> order;
  for (std::uint32_t a = 0; a < pp.alternatives(); ++a) {
    points[a] = borda_count(pp, Alternative(a));
    order.push_back(Alternative(a));
  }
  std::stable_sort(order.begin(), order.end(), [&](Alternative x, Alternative y) {
    return points[index(x)] > points[index(y)];
  });
  return order;
}

TournamentOutcome run_tournament(const PreferenceProfile& pp, TournamentStrategy strategy,
                                 const ScoreBudget& budget, ScorerKind scorer,
                                 const TournamentOptions& options) {
  if (prunes(strategy) && !is_layered(scorer)) {
    throw UsageError("strategy " + std::string(to_string(strategy)) + " needs a ucs, sc or icr scorer, not " +
                     std::string(to_string(scorer)));
  }
  const Deadline deadline = budget.deadline_from(Clock::now());
  TournamentOutcome out;
  out.per_candidate.resize(pp.alternatives());

  switch (strategy) {
    case TournamentStrategy::FullSequential:
      run_full(pp, budget, scorer, deadline, out.per_candidate);
      break;
    case TournamentStrategy::OrderedSequential:
      run_ordered(pp, budget, scorer, deadline, out.per_candidate);
      break;
    case TournamentStrategy::Concurrent:
    case TournamentStrategy::ConcurrentOrdered: {
      unsigned threads = options.threads;
      if (threads == 0) {
        threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                   static_cast<unsigned>(pp.alternatives())));
      }
      run_lockstep(pp, strategy, budget, scorer, deadline, threads, out.per_candidate);
      break;
    }
  }

  std::optional<std::uint32_t> best;
  std::uint32_t floor = SharedIncumbent::kNone;
  for (const auto& r : out.per_candidate) {
    floor = std::min(floor, r.value);
    if (r.status == CandidateStatus::Exact && (!best || r.value < *best)) best = r.value;
  }
  out.certified_floor = floor;
  out.winning_score = best;
  if (best) {
    out.conclusive = true;
    for (const auto& r : out.per_candidate) {
      if (r.status == CandidateStatus::Exact) {
        if (r.value == *best) out.winners.push_back(r.candidate);
      } else if (r.value <= *best) {
        out.conclusive = false;
      }
    }
  }
  return out;
}

}  // namespace dodgson
