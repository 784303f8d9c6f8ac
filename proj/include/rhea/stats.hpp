#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rhea/core.hpp"

namespace rhea::stats {

struct SampleSummary {
    int n = 0;
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation; 0 when n == 1
};

SampleSummary summarize(std::span<const double> values);

/// Points by finishing position. Four controllers use the first four entries.
inline constexpr std::array<int, 10> kF1Points = {25, 18, 15, 12, 10, 8, 6, 4, 2, 1};

using F1Assignment = std::map<std::string, int>;

/// Ranks controllers on one game by win rate, then by mean score; anything
/// still tied is ordered by `rng`. Both maps must name the same controllers.
F1Assignment f1_points_for_game(const std::map<std::string, double>& win_rates,
                                const std::map<std::string, double>& scores, SeededRng& rng);

/// Sums points per controller. Throws std::invalid_argument when the games do
/// not all rank the same set of controllers.
std::map<std::string, int> f1_aggregate(std::span<const F1Assignment> games);

enum class UMethod { Exact, NormalApprox };

struct UTestResult {
    double u = 0.0;        // U of the first sample, from midrank sums
    double p_value = 1.0;  // two-sided
    bool significant = false;
    UMethod method = UMethod::Exact;
};

inline constexpr double kSignificanceLevel = 0.05;
inline constexpr int kExactLimit = 10;

/// Two-sided Mann-Whitney U test. Exact null distribution when both samples
/// have at most kExactLimit values and there are no ties; otherwise the
/// normal approximation with tie and continuity corrections.
UTestResult mann_whitney(std::span<const double> a, std::span<const double> b);

/// Number of rank arrangements giving each U in [0, n_a * n_b] for untied
/// samples of sizes n_a and n_b.
std::vector<double> exact_u_counts(int n_a, int n_b);
/// Exact two-sided p-value for an untied U, any sample sizes.
double exact_u_p_value(int n_a, int n_b, double u);

}  // namespace rhea::stats
