#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/math/distributions/binomial.hpp>

#include "diffgame/diffusion.hpp"
#include "diffgame/distances.hpp"
#include "diffgame/error.hpp"
#include "diffgame/generators.hpp"
#include "diffgame/graph.hpp"
#include "diffgame/parallel.hpp"
#include "diffgame/rng.hpp"

namespace diffgame {

struct SeedPolicy {
  enum class Kind { UniformDistinctPair, FixedPair };
  Kind kind = Kind::UniformDistinctPair;
  NodeId a = 0;
  NodeId b = 1;

  static SeedPolicy uniform() { return {}; }
  static SeedPolicy fixed(NodeId a, NodeId b) { return {Kind::FixedPair, a, b}; }

  std::string tag() const {
    if (kind == Kind::UniformDistinctPair) return "uniform-distinct-pair";
    return "fixed-pair(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

struct TrialRecord {
  std::size_t index = 0;
  NodeId seed_a = 0;
  NodeId seed_b = 0;
  std::size_t utility_a = 0;
  std::size_t utility_b = 0;
  std::size_t gray = 0;
  std::size_t edges = 0;
  std::size_t sandwich_violations = 0;

  double gray_fraction(std::size_t n) const { return static_cast<double>(gray) / static_cast<double>(n); }
};

struct SummaryStats {
  double mean = 0;
  double stddev = 0;   // sample standard deviation (n-1 denominator)
  double stderr_ = 0;  // stddev / sqrt(count)
};

inline SummaryStats summarize(std::span<const double> values) {
  SummaryStats s;
  if (values.empty()) return s;
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
    s.stderr_ = s.stddev / std::sqrt(static_cast<double>(values.size()));
  }
  return s;
}

/// Linearly interpolated quantile of unsorted data, q in [0, 1].
inline double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

struct TrialBatchResult {
  std::size_t n = 0;
  double p = 0;
  std::size_t trials = 0;
  std::string seed_policy;
  std::uint64_t master_seed = 0;
  std::vector<TrialRecord> records;  // trial index order

  // Aggregates, all recomputable from records.
  SummaryStats utility_a;
  SummaryStats utility_b;
  double mean_gray_fraction = 0;
  // Quantiles of U_A / mean(U_A).
  double ratio_q10 = 0;
  double ratio_q25 = 0;
  double ratio_q50 = 0;
  double ratio_q75 = 0;
  double ratio_q90 = 0;
  std::size_t total_sandwich_violations = 0;

  double ratio_iqr() const { return ratio_q75 - ratio_q25; }
  /// The 1/(5p) reference value for the mean utility.
  double reference_bound() const { return 1.0 / (5.0 * p); }
};

inline void aggregate(TrialBatchResult& batch) {
  std::vector<double> ua, ub, gray;
  for (const auto& r : batch.records) {
    ua.push_back(static_cast<double>(r.utility_a));
    ub.push_back(static_cast<double>(r.utility_b));
    gray.push_back(r.gray_fraction(batch.n));
    batch.total_sandwich_violations += r.sandwich_violations;
  }
  batch.utility_a = summarize(ua);
  batch.utility_b = summarize(ub);
  batch.mean_gray_fraction = summarize(gray).mean;
  if (batch.utility_a.mean > 0) {
    std::vector<double> ratio;
    for (double u : ua) ratio.push_back(u / batch.utility_a.mean);
    batch.ratio_q10 = quantile(ratio, 0.10);
    batch.ratio_q25 = quantile(ratio, 0.25);
    batch.ratio_q50 = quantile(ratio, 0.50);
    batch.ratio_q75 = quantile(ratio, 0.75);
    batch.ratio_q90 = quantile(ratio, 0.90);
  }
}

/**
 * Trial t draws G(n, p) and then its seed pair from stream (master_seed, t),
 * so results do not depend on the thread count or scheduling.
 */
inline TrialBatchResult run_er_trials(std::size_t n, double p, std::size_t trials, const SeedPolicy& policy,
                                      std::uint64_t master_seed, std::size_t threads = 1) {
  if (!(p > 0.0 && p <= 1.0)) throw Error("edge probability must lie in (0,1]");
  if (trials == 0) throw Error("need at least one trial");
  if (n < 2) throw Error("two-player trials need n >= 2");
  if (policy.kind == SeedPolicy::Kind::FixedPair && (policy.a >= n || policy.b >= n || policy.a == policy.b))
    throw Error("fixed seed pair must be two distinct nodes below n");

  TrialBatchResult batch;
  batch.n = n;
  batch.p = p;
  batch.trials = trials;
  batch.seed_policy = policy.tag();
  batch.master_seed = master_seed;
  batch.records.resize(trials);

  parallel_for(trials, threads, [&](std::size_t t, std::size_t) {
    Rng rng = make_stream(master_seed, t);
    const Graph g = make_erdos_renyi(n, p, rng);
    NodeId a = policy.a;
    NodeId b = policy.b;
    if (policy.kind == SeedPolicy::Kind::UniformDistinctPair) {
      a = static_cast<NodeId>(uniform_below(rng, n));
      b = static_cast<NodeId>(uniform_below(rng, n - 1));
      if (b >= a) ++b;
    }
    const SeedProfile profile = SeedProfile::singles({a, b});
    const DiffusionOutcome out = diffuse(g, profile);
    TrialRecord& r = batch.records[t];
    r.index = t;
    r.seed_a = a;
    r.seed_b = b;
    r.utility_a = out.utilities[0];
    r.utility_b = out.utilities[1];
    r.gray = out.gray_count();
    r.edges = g.edge_count();
    r.sandwich_violations = check_distance_sandwich(g, profile, out).size();
  });
  aggregate(batch);
  return batch;
}

// ---------------------------------------------------------------------------
// Sphere / ball tail statistic
// ---------------------------------------------------------------------------

/// Whether some i >= 1 has |S_x(i)| >= lambda * |B_x(i-1)|.
inline bool sphere_tail_event(const Graph& g, NodeId x, double lambda) {
  const auto spheres = sphere_sizes(g, x);
  const auto balls = ball_sizes(spheres);
  for (std::size_t i = 1; i <= spheres.size(); ++i)
    if (static_cast<double>(spheres[i - 1]) >= lambda * static_cast<double>(balls[i - 1])) return true;
  return false;
}

/// n^2 exp(-(lambda - (n-1)p)^2 / (3 (n-1) p)).
inline double tail_bound(std::size_t n, double p, double lambda) {
  const double mu = static_cast<double>(n - 1) * p;
  const double gap = lambda - mu;
  return static_cast<double>(n) * static_cast<double>(n) * std::exp(-gap * gap / (3.0 * mu));
}

/// The lambda used in the concentration argument: (1 + sqrt(15)) n p.
inline double proof_lambda(std::size_t n, double p) {
  return (1.0 + std::sqrt(15.0)) * static_cast<double>(n) * p;
}

struct TailStats {
  std::size_t n = 0;
  double p = 0;
  double lambda = 0;
  std::size_t samples = 0;
  std::size_t events = 0;
  double empirical = 0;
  double analytic_bound = 0;
  bool vacuous = false;  // analytic bound > 1: nothing to compare
  // One-sided 99% Clopper-Pearson lower limit on the true tail probability.
  double lower_99 = 0;
  // Empirical rate consistent with the bound at 99% (always true when vacuous).
  bool consistent = true;
};

inline constexpr double kTailConfidence = 0.99;

inline TailStats tail_comparison(std::size_t n, double p, double lambda, std::size_t samples, std::size_t events) {
  TailStats s;
  s.n = n;
  s.p = p;
  s.lambda = lambda;
  s.samples = samples;
  s.events = events;
  s.empirical = static_cast<double>(events) / static_cast<double>(samples);
  s.analytic_bound = tail_bound(n, p, lambda);
  s.vacuous = s.analytic_bound > 1.0;
  s.lower_99 = events == 0 ? 0.0
                           : boost::math::binomial_distribution<>::find_lower_bound_on_p(
                                 static_cast<double>(samples), static_cast<double>(events), 1.0 - kTailConfidence);
  s.consistent = s.vacuous || s.lower_99 <= s.analytic_bound;
  return s;
}

inline void check_tail_arguments(std::size_t n, double p, double lambda, std::size_t samples) {
  if (n < 2) throw Error("tail statistic needs n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw Error("edge probability must lie in (0,1]");
  if (samples == 0) throw Error("need at least one sample");
  if (!(lambda > static_cast<double>(n - 1) * p)) throw Error("lambda must exceed (n-1)p");
}

/// Tail statistic around node 0 over given graphs, all assumed drawn from G(n, p).
inline TailStats sphere_ball_tail_stats(std::span<const Graph> graphs, double p, double lambda) {
  if (graphs.empty()) throw Error("need at least one sample");
  const std::size_t n = graphs.front().node_count();
  check_tail_arguments(n, p, lambda, graphs.size());
  std::size_t events = 0;
  for (const Graph& g : graphs) {
    if (g.node_count() != n) throw Error("all sampled graphs must have the same node count");
    events += sphere_tail_event(g, 0, lambda) ? 1 : 0;
  }
  return tail_comparison(n, p, lambda, graphs.size(), events);
}

/// Samples G(n, p) from streams (master_seed, s) and evaluates the tail statistic at node 0.
inline TailStats sphere_ball_tail_stats(std::size_t n, double p, double lambda, std::size_t samples,
                                        std::uint64_t master_seed, std::size_t threads = 1) {
  check_tail_arguments(n, p, lambda, samples);
  std::vector<char> hit(samples, 0);
  parallel_for(samples, threads, [&](std::size_t s, std::size_t) {
    Rng rng = make_stream(master_seed, s);
    hit[s] = sphere_tail_event(make_erdos_renyi(n, p, rng), 0, lambda) ? 1 : 0;
  });
  return tail_comparison(n, p, lambda, samples, static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1)));
}

}  // namespace diffgame
