#include "rhea/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rhea::stats {

SampleSummary summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summarize needs at least one value");
    SampleSummary s;
    s.n = static_cast<int>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / s.n;
    if (s.n > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / (s.n - 1));
    }
    return s;
}

F1Assignment f1_points_for_game(const std::map<std::string, double>& win_rates,
                                const std::map<std::string, double>& scores, SeededRng& rng) {
    if (win_rates.size() > kF1Points.size()) throw std::invalid_argument("too many controllers for F1 points");
    struct Entry {
        std::string name;
        double rate;
        double score;
        std::uint64_t shuffle;
    };
    std::vector<Entry> entries;
    for (const auto& [name, rate] : win_rates) {
        auto it = scores.find(name);
        if (it == scores.end()) throw std::invalid_argument("no score for controller '" + name + "'");
        entries.push_back({name, rate, it->second, rng.next_u64()});
    }
    if (scores.size() != win_rates.size()) throw std::invalid_argument("score map names extra controllers");
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.rate != b.rate) return a.rate > b.rate;
        if (a.score != b.score) return a.score > b.score;
        return a.shuffle < b.shuffle;
    });
    F1Assignment out;
    for (std::size_t i = 0; i < entries.size(); ++i) out[entries[i].name] = kF1Points[i];
    return out;
}

std::map<std::string, int> f1_aggregate(std::span<const F1Assignment> games) {
    std::map<std::string, int> totals;
    for (std::size_t g = 0; g < games.size(); ++g) {
        if (g > 0) {
            const bool same = games[g].size() == games[0].size() &&
                              std::equal(games[g].begin(), games[g].end(), games[0].begin(),
                                         [](const auto& x, const auto& y) { return x.first == y.first; });
            if (!same) throw std::invalid_argument("controller names differ between games");
        }
        for (const auto& [name, points] : games[g]) totals[name] += points;
    }
    return totals;
}

std::vector<double> exact_u_counts(int n_a, int n_b) {
    if (n_a < 0 || n_b < 0) throw std::invalid_argument("negative sample size");
    // table[i][j] = counts for sizes (i, j), built row by row with
    // f(i, j, u) = f(i-1, j, u-j) + f(i, j-1, u).
    std::vector<std::vector<std::vector<double>>> table(
        static_cast<std::size_t>(n_a + 1), std::vector<std::vector<double>>(static_cast<std::size_t>(n_b + 1)));
    for (int i = 0; i <= n_a; ++i) {
        for (int j = 0; j <= n_b; ++j) {
            auto& cell = table[i][j];
            cell.assign(static_cast<std::size_t>(i * j + 1), 0.0);
            if (i == 0 || j == 0) {
                cell[0] = 1.0;
                continue;
            }
            const auto& left = table[i - 1][j];
            const auto& up = table[i][j - 1];
            for (std::size_t u = 0; u < cell.size(); ++u) {
                if (u >= static_cast<std::size_t>(j) && u - j < left.size()) cell[u] += left[u - j];
                if (u < up.size()) cell[u] += up[u];
            }
        }
    }
    return table[n_a][n_b];
}

double exact_u_p_value(int n_a, int n_b, double u) {
    const auto counts = exact_u_counts(n_a, n_b);
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    double lower = 0.0;
    double upper = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const auto kk = static_cast<double>(k);
        if (kk <= u + 1e-9) lower += counts[k];
        if (kk >= u - 1e-9) upper += counts[k];
    }
    return std::min(1.0, 2.0 * std::min(lower, upper) / total);
}

UTestResult mann_whitney(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("mann_whitney needs non-empty samples");
    const std::size_t n_a = a.size();
    const std::size_t n_b = b.size();
    const std::size_t n = n_a + n_b;

    std::vector<std::pair<double, bool>> pooled;  // (value, from a)
    pooled.reserve(n);
    for (double v : a) pooled.emplace_back(v, true);
    for (double v : b) pooled.emplace_back(v, false);
    std::sort(pooled.begin(), pooled.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    double rank_sum_a = 0.0;
    double tie_term = 0.0;  // sum of t^3 - t over tie groups
    bool ties = false;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[j].first == pooled[i].first) ++j;
        const double t = static_cast<double>(j - i);
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) {
            if (pooled[k].second) rank_sum_a += midrank;
        }
        if (t > 1) {
            ties = true;
            tie_term += t * t * t - t;
        }
        i = j;
    }

    UTestResult r;
    const double na = static_cast<double>(n_a);
    const double nb = static_cast<double>(n_b);
    r.u = rank_sum_a - na * (na + 1.0) / 2.0;

    if (pooled.front().first == pooled.back().first) {
        r.p_value = 1.0;
        r.method = UMethod::NormalApprox;
        r.significant = false;
        return r;
    }

    if (!ties && n_a <= kExactLimit && n_b <= kExactLimit) {
        r.method = UMethod::Exact;
        r.p_value = exact_u_p_value(static_cast<int>(n_a), static_cast<int>(n_b), r.u);
    } else {
        r.method = UMethod::NormalApprox;
        const double nn = static_cast<double>(n);
        const double variance = na * nb / 12.0 * ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));
        if (variance <= 0.0) {
            r.p_value = 1.0;
        } else {
            const double deviation = std::max(0.0, std::abs(r.u - na * nb / 2.0) - 0.5);
            const double z = deviation / std::sqrt(variance);
            r.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
        }
    }
    r.significant = r.p_value < kSignificanceLevel;
    return r;
}

}  // namespace rhea::stats
