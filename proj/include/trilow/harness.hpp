#pragma once
// Experiment drivers: repeated first-phase draws through the quasirandomness
// gate, the verification suite (exact small-instance identities plus
// statistical bounds at configured scale) emitted as CSV rows, the paired
// conditional-deficit experiment, and the gap growth sweep across n.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trilow/config.hpp"
#include "trilow/quasirandom.hpp"

namespace trilow {

struct TrialRecord {
  int trial = 0;
  uint64_t seed = 0;
  QuasirandomReport report;
  double codeg_gap = 0.0;       // low-half minus high-half codegree sum
  double syn_gap = 0.0;         // same gap in synergy units
  double median_synergy = 0.0;  // synergy at the split cut
  TriangleClassCounts classes;  // realized second-phase triangle classes
  int64_t n_tri_total = 0;      // triangles of the union draw
  // Exact conditional class expectations for this first phase at the
  // configured skew (uniform when no skew is configured).
  double cond_e30 = 0.0;
  double cond_e21 = 0.0;
  double cond_e12 = 0.0;
  double cond_e03 = 0.0;
};

struct TrialSummary {
  std::vector<TrialRecord> records;
  int passes = 0;
  double pass_rate = 0.0;
};

std::string trial_csv_header();
std::string trial_csv_row(const TrialRecord& r);

// cfg.trials independent first-phase draws, seeds derived per trial from the
// master seed, spread over cfg.workers threads. Rows go to csv when given.
TrialSummary run_trials(const ExperimentConfig& cfg, std::ostream* csv = nullptr);

struct VerifyRow {
  std::string lemma_id;
  int n = 0;
  int64_t m = 0;
  double eta = 0.0;
  double alpha = 0.0;
  double statistic = 0.0;
  double bound = 0.0;
  bool pass = false;
  // Exact-identity rows carry zero tolerance; a failure there outranks a
  // missed statistical band when the caller picks an exit code.
  bool exact_tier = false;
};

// Two tiers. The first replays exact identities on exhaustively checkable
// instances: triangle class partitions, the complement-triple profile and its
// monochromatic contraction, the two-coloring double count, the recentering
// and relative-shift synergy identities, the split handshake, brute-force
// enumeration of the conditioned second phase, and a Cauchy-Schwarz guard.
// The second draws cfg.trials instances at cfg scale and checks the
// statistical bounds: gap sign and transfer, degree profile, the zero-cut
// comparison, neighborhood edge deviations, the cubic class expansion, the
// skew cost bounds, the gate rate, and the realized deficit frequency.
std::vector<VerifyRow> verify_lemmas(const ExperimentConfig& cfg, std::ostream* csv = nullptr);

struct DeficitReport {
  int draws = 0;             // accepted gate-passing first phases
  int attempts = 0;          // first phases examined to collect them
  bool conclusive = false;   // the requested number of draws passed the gate
  double alpha = 0.0;
  double mu_uniform = 0.0;      // mean over draws of E[triangles | G0, uniform phase 2]
  double mu_conditional = 0.0;  // same under the skewed phase 2
  double deficit = 0.0;         // mu_uniform - mu_conditional
  double paired_se = 0.0;       // sd of the per-draw difference over sqrt(draws)
  bool significant = false;     // deficit >= 5 * paired_se
  double delta_hat = 0.0;       // deficit / (2 mu_uniform)
  double markov_bound = 0.0;    // delta_hat/(1 - delta_hat) - 5/sqrt(draws)
  // Fraction of realized skewed draws with at most (1 - delta_hat) mu_uniform
  // triangles; reverse Markov puts it above markov_bound.
  double markov_frequency = 0.0;
  bool markov_pass = false;
};

// Pairs, per gate-passing first-phase draw, the exact closed-form expectation
// of the final triangle count under a uniform second phase against the skewed
// one, then realizes one skewed draw to measure the low-count frequency.
// First phases that fail the quasirandomness gate are skipped; the report is
// inconclusive unless cfg.deficit_draws of them passed within the attempt cap.
DeficitReport deficit_experiment(const ExperimentConfig& cfg);

struct SweepPoint {
  int n = 0;
  int64_t m = 0;
  int trials = 0;
  double mean_abs_gap = 0.0;
  double negative_fraction = 0.0;  // trials with a negative low-half codegree gap
};

struct SweepReport {
  std::vector<SweepPoint> points;
  double fitted_exponent = 0.0;  // least-squares slope of log mean gap against log n
};

// Low-half codegree gap growth across cfg.sweep_n (or just cfg.n when the
// grid is empty), edge counts scaled to keep the density of cfg.
SweepReport sweep_gap_growth(const ExperimentConfig& cfg, std::ostream* csv = nullptr);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepPoint& p);

}  // namespace trilow
