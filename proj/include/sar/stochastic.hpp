#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "sar/errors.hpp"
#include "sar/model.hpp"
#include "sar/parameters.hpp"
#include "sar/state.hpp"

namespace sar {

using Engine = std::mt19937_64;

struct StochasticConfig {
  double dt = 1.0;
  double t_end = 40000.0;
  std::optional<double> recruitment;  // Lambda; defaults to N(0) * mu
  std::uint64_t seed = 20240101;
  int n_runs = 100;
  int record_every = 1;
};

/// Population labels used by the figures.
enum class Population : std::int64_t { low = 10'000, medium = 100'000, high = 1'000'000 };

inline std::int64_t population_size(Population p) { return static_cast<std::int64_t>(p); }

inline std::optional<Population> parse_population(std::string_view s) {
  if (s == "low") return Population::low;
  if (s == "medium") return Population::medium;
  if (s == "high") return Population::high;
  return std::nullopt;
}

/// Counts for a population of n with addicted share a0 and reformed share st0.
inline RawState initial_counts(std::int64_t n, double a0, double st0 = 0.0) {
  if (n < 0 || a0 < 0.0 || st0 < 0.0 || a0 + st0 > 1.0)
    throw DomainError("initial_counts: need n >= 0, a0, s~0 >= 0 and a0 + s~0 <= 1");
  RawState x;
  x.A = std::llround(static_cast<double>(n) * a0);
  x.S_tilde = std::llround(static_cast<double>(n) * st0);
  x.S = std::max<std::int64_t>(n - x.A - x.S_tilde, 0);
  return x;
}

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of run `run` in an ensemble: mix64(master ^ mix64(run)).
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t run) {
  return mix64(master ^ mix64(run));
}

inline Engine make_stream(std::uint64_t master, std::uint64_t run) { return Engine(stream_seed(master, run)); }

/// Expected event counts over one leap, in the order addiction, relapse,
/// recovery, recruitment, exit S, exit A, exit S~.
using EventMeans = std::array<double, 7>;

inline EventMeans event_means(const ModelParameters& p, const RawState& x, double dt, double recruitment) {
  const double S = static_cast<double>(x.S), A = static_cast<double>(x.A), St = static_cast<double>(x.S_tilde);
  const double N = S + A + St;
  double addiction = 0.0, relapse = 0.0;
  if (N > 0.0) {
    const double g = p.kappa() / (1.0 + p.nu() * St / N);
    addiction = p.beta() * g * S * A / N;
    relapse = p.phi() * A * St / N;
  }
  return {dt * addiction, dt * relapse,  dt * p.gamma() * A, dt * recruitment,
          dt * p.mu() * S, dt * p.mu() * A, dt * p.mu() * St};
}

template <typename URBG>
std::int64_t draw_poisson(double mean, URBG& rng) {
  if (!(mean > 0.0)) return 0;
  return std::poisson_distribution<std::int64_t>(mean)(rng);
}

/// One tau-leap. All seven counts are drawn from the start-of-step state;
/// each is then capped at its source compartment, applied in table order.
template <typename URBG>
RawState step(const ModelParameters& p, const RawState& x, double dt, double recruitment, URBG& rng) {
  const auto m = event_means(p, x, dt, recruitment);
  std::array<std::int64_t, 7> d{};
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = draw_poisson(m[i], rng);

  RawState y = x;
  auto take = [](std::int64_t& from, std::int64_t n) {
    n = std::min(n, from);
    from -= n;
    return n;
  };
  y.A += take(y.S, d[0]);
  y.A += take(y.S_tilde, d[1]);
  y.S_tilde += take(y.A, d[2]);
  y.S += d[3];
  take(y.S, d[4]);
  take(y.A, d[5]);
  take(y.S_tilde, d[6]);
  return y;
}

template <typename URBG>
RawState step(const ModelParameters& p, const RawState& x, const StochasticConfig& cfg, URBG& rng) {
  return step(p, x, cfg.dt, cfg.recruitment.value_or(static_cast<double>(x.N()) * p.mu()), rng);
}

struct RawTrajectory {
  std::vector<double> times;
  std::vector<RawState> counts;
};

namespace detail {

inline void validate(const StochasticConfig& cfg) {
  if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0) || cfg.n_runs < 1 || cfg.record_every < 1 ||
      (cfg.recruitment && !(*cfg.recruitment >= 0.0)))
    throw DomainError("stochastic config needs dt > 0, t_end > 0, Lambda >= 0, n_runs >= 1, record_every >= 1");
}

inline std::int64_t step_count(const StochasticConfig& cfg) {
  return static_cast<std::int64_t>(std::llround(cfg.t_end / cfg.dt));
}

inline bool recorded(std::int64_t k, std::int64_t steps, int every) { return k % every == 0 || k == steps; }

}  // namespace detail

/// Runs one trajectory with an explicit stream. Lambda stays at its initial
/// value N(0) mu unless the config overrides it.
template <typename URBG>
RawTrajectory simulate(const ModelParameters& p, const RawState& x0, const StochasticConfig& cfg, URBG& rng) {
  detail::validate(cfg);
  if (x0.S < 0 || x0.A < 0 || x0.S_tilde < 0) throw DomainError("negative initial counts");
  const double lambda = cfg.recruitment.value_or(static_cast<double>(x0.N()) * p.mu());
  const auto steps = detail::step_count(cfg);
  RawTrajectory tr;
  tr.times.push_back(0.0);
  tr.counts.push_back(x0);
  RawState x = x0;
  for (std::int64_t k = 1; k <= steps; ++k) {
    x = step(p, x, cfg.dt, lambda, rng);
    if (detail::recorded(k, steps, cfg.record_every)) {
      tr.times.push_back(static_cast<double>(k) * cfg.dt);
      tr.counts.push_back(x);
    }
  }
  return tr;
}

/// Seeded single run; identical to run 0 of an ensemble with the same seed.
inline RawTrajectory simulate(const ModelParameters& p, const RawState& x0, const StochasticConfig& cfg) {
  auto rng = make_stream(cfg.seed, 0);
  return simulate(p, x0, cfg, rng);
}

/// Nearest-rank percentile of an ascending sample: the value at rank
/// ceil(percent/100 * n).
inline double nearest_rank(std::span<const double> sorted, int percent) {
  if (sorted.empty()) throw DomainError("percentile of an empty sample");
  const auto n = static_cast<std::int64_t>(sorted.size());
  std::int64_t rank = (static_cast<std::int64_t>(percent) * n + 99) / 100;
  rank = std::clamp<std::int64_t>(rank, 1, n);
  return sorted[static_cast<std::size_t>(rank - 1)];
}

struct EnsembleSummary {
  std::vector<double> times;
  std::vector<double> mean_fraction;  // mean of A/N
  std::vector<double> p05;
  std::vector<double> p95;
  int n_runs = 0;
  int extinct_runs = 0;  // runs with A = 0 at t_end (A = 0 is absorbing)
};

/// `n_runs` independent runs, run i on stream_seed(seed, i). Runs are spread
/// over `threads` workers (0 = hardware concurrency); the result does not
/// depend on the worker count.
inline EnsembleSummary ensemble(const ModelParameters& p, const RawState& x0, const StochasticConfig& cfg,
                                unsigned threads = 0) {
  detail::validate(cfg);
  const auto runs = static_cast<std::size_t>(cfg.n_runs);
  std::vector<std::vector<double>> fractions(runs);
  std::vector<std::int64_t> final_a(runs, 0);
  std::vector<double> times;
  {
    const auto steps = detail::step_count(cfg);
    times.push_back(0.0);
    for (std::int64_t k = 1; k <= steps; ++k)
      if (detail::recorded(k, steps, cfg.record_every)) times.push_back(static_cast<double>(k) * cfg.dt);
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < runs; r = next++) {
      auto rng = make_stream(cfg.seed, r);
      const auto tr = simulate(p, x0, cfg, rng);
      auto& f = fractions[r];
      f.reserve(tr.counts.size());
      for (const auto& c : tr.counts) f.push_back(c.addicted_fraction());
      final_a[r] = tr.counts.back().A;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, runs));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  EnsembleSummary out;
  out.times = std::move(times);
  out.n_runs = cfg.n_runs;
  out.extinct_runs = static_cast<int>(std::count(final_a.begin(), final_a.end(), 0));
  std::vector<double> column(runs);
  for (std::size_t k = 0; k < out.times.size(); ++k) {
    double sum = 0.0;
    for (std::size_t r = 0; r < runs; ++r) {
      column[r] = fractions[r][k];
      sum += column[r];
    }
    std::sort(column.begin(), column.end());
    out.mean_fraction.push_back(sum / static_cast<double>(runs));
    out.p05.push_back(nearest_rank(column, 5));
    out.p95.push_back(nearest_rank(column, 95));
  }
  return out;
}

}  // namespace sar
