#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "rhea/stats.hpp"

using namespace rhea;
using namespace rhea::stats;

namespace {

const std::vector<std::string> kAgents = {"Seeding", "StatTree", "ShiftBuffer", "Vanilla"};

// Per-game F1 points, one row per agent in kAgents order.
const int kStochastic[4][10] = {
    {15, 15, 25, 25, 15, 15, 25, 18, 25, 25},
    {18, 25, 12, 15, 18, 25, 15, 15, 15, 15},
    {25, 18, 18, 12, 25, 18, 12, 25, 12, 12},
    {12, 12, 15, 18, 12, 12, 18, 12, 18, 18},
};
const int kDeterministic[4][10] = {
    {25, 25, 18, 25, 18, 12, 18, 18, 25, 25},
    {18, 18, 25, 12, 25, 25, 25, 25, 18, 18},
    {12, 15, 12, 15, 12, 18, 15, 12, 12, 15},
    {15, 12, 15, 18, 15, 15, 12, 15, 15, 12},
};

std::vector<F1Assignment> table(const int rows[4][10]) {
    std::vector<F1Assignment> games(10);
    for (std::size_t g = 0; g < 10; ++g) {
        for (std::size_t a = 0; a < 4; ++a) games[g][kAgents[a]] = rows[a][g];
    }
    return games;
}

std::map<std::string, double> zeros(const std::map<std::string, double>& like) {
    std::map<std::string, double> z;
    for (const auto& [k, v] : like) z[k] = 0.0;
    return z;
}

}  // namespace

TEST_CASE("sample summary") {
    const std::vector<double> v = {1, 2, 3, 4};
    const auto s = summarize(v);
    CHECK(s.n == 4);
    CHECK(s.mean == 2.5);
    CHECK(s.sd == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-14));
    CHECK(summarize(std::vector<double>{7}).sd == 0.0);
}

TEST_CASE("f1 points by win rate then score") {
    SeededRng rng(1, 1);
    const std::map<std::string, double> rates = {{"A", .9}, {"B", .7}, {"C", .5}, {"D", .1}};
    const auto f = f1_points_for_game(rates, zeros(rates), rng);
    CHECK(f == F1Assignment{{"A", 25}, {"B", 18}, {"C", 15}, {"D", 12}});

    const std::map<std::string, double> tied = {{"A", .7}, {"B", .7}, {"C", .2}, {"D", .1}};
    const std::map<std::string, double> scores = {{"A", 10}, {"B", 8}, {"C", 50}, {"D", 50}};
    const auto g = f1_points_for_game(tied, scores, rng);
    CHECK(g.at("A") == 25);
    CHECK(g.at("B") == 18);
}

TEST_CASE("f1 ranks close win rates strictly") {
    SeededRng rng(2, 2);
    const std::map<std::string, double> rates = {
        {"Seeding", 1.00}, {"ShiftBuffer", 0.99}, {"StatTree", 0.975}, {"Vanilla", 0.98}};
    const auto f = f1_points_for_game(rates, zeros(rates), rng);
    CHECK(f.at("Seeding") == 25);
    CHECK(f.at("ShiftBuffer") == 18);
    CHECK(f.at("Vanilla") == 15);
    CHECK(f.at("StatTree") == 12);
    CHECK(f.at("StatTree") == kStochastic[1][2]);
    CHECK(f.at("Seeding") == kStochastic[0][2]);
}

TEST_CASE("f1 with five controllers uses the next point value") {
    SeededRng rng(3, 3);
    const std::map<std::string, double> rates = {{"a", .5}, {"b", .4}, {"c", .3}, {"d", .2}, {"e", .1}};
    const auto f = f1_points_for_game(rates, zeros(rates), rng);
    CHECK(f.at("e") == 10);
    int total = 0;
    for (const auto& [k, v] : f) total += v;
    CHECK(total == 25 + 18 + 15 + 12 + 10);
}

TEST_CASE("f1 residual ties are shared out at random") {
    SeededRng rng(4, 4);
    const std::map<std::string, double> rates = {{"A", .5}, {"B", .5}, {"C", .5}, {"D", .5}};
    std::vector<int> firsts(4, 0);
    for (int i = 0; i < 4000; ++i) {
        const auto f = f1_points_for_game(rates, zeros(rates), rng);
        int idx = 0;
        for (const auto& [k, v] : f) {
            if (v == 25) ++firsts[static_cast<std::size_t>(idx)];
            ++idx;
        }
    }
    CHECK(oracle::chi_square_uniform_p(firsts) > 0.01);
}

TEST_CASE("f1 is permutation equivariant") {
    SeededRng rng(5, 5);
    const std::vector<std::string> names = {"p", "q", "r", "s"};
    for (int t = 0; t < 200; ++t) {
        std::map<std::string, double> rates, scores;
        for (const auto& n : names) {
            rates[n] = static_cast<double>(rng.below(5)) / 4.0;
            scores[n] = static_cast<double>(rng.below(1000));  // distinct with high probability
        }
        std::set<double> keys;
        for (const auto& n : names) keys.insert(rates[n] * 1e6 + scores[n]);
        if (keys.size() < names.size()) continue;
        std::vector<std::string> perm = names;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::map<std::string, double> r2, s2;
        for (std::size_t i = 0; i < names.size(); ++i) {
            r2[perm[i]] = rates[names[i]];
            s2[perm[i]] = scores[names[i]];
        }
        const auto f = f1_points_for_game(rates, scores, rng);
        const auto g = f1_points_for_game(r2, s2, rng);
        for (std::size_t i = 0; i < names.size(); ++i) CHECK(g.at(perm[i]) == f.at(names[i]));
    }
}

TEST_CASE("f1 aggregate totals over two ten-game tables") {
    const auto stochastic = f1_aggregate(table(kStochastic));
    CHECK(stochastic.at("Seeding") == 203);
    CHECK(stochastic.at("StatTree") == 173);
    CHECK(stochastic.at("ShiftBuffer") == 177);
    CHECK(stochastic.at("Vanilla") == 147);

    const auto deterministic = f1_aggregate(table(kDeterministic));
    CHECK(deterministic.at("Seeding") == 209);
    CHECK(deterministic.at("StatTree") == 209);
    CHECK(deterministic.at("ShiftBuffer") == 138);
    CHECK(deterministic.at("Vanilla") == 144);

    auto all = table(kStochastic);
    const auto more = table(kDeterministic);
    all.insert(all.end(), more.begin(), more.end());
    const auto grand = f1_aggregate(all);
    CHECK(grand.at("Seeding") == 412);
    CHECK(grand.at("StatTree") == 382);
    CHECK(grand.at("ShiftBuffer") == 315);
    CHECK(grand.at("Vanilla") == 291);

    std::vector<F1Assignment> bad = {{{"A", 25}, {"B", 18}}, {{"A", 25}, {"C", 18}}};
    CHECK_THROWS_AS(f1_aggregate(bad), std::invalid_argument);
    CHECK(f1_aggregate(std::vector<F1Assignment>{}).empty());
}

TEST_CASE("mann-whitney small fixtures") {
    const std::vector<double> a = {1, 2, 3}, b = {4, 5, 6};
    const auto r = mann_whitney(a, b);
    CHECK(r.u == 0.0);
    CHECK(r.method == UMethod::Exact);
    CHECK(r.p_value == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_FALSE(r.significant);

    const auto same = mann_whitney(a, a);
    CHECK(same.p_value == doctest::Approx(1.0));
    const std::vector<double> flat(12, 3.0);
    const auto f = mann_whitney(flat, flat);
    CHECK(f.p_value == 1.0);
    CHECK_FALSE(f.significant);
}

TEST_CASE("exact null distribution matches brute force") {
    for (int na = 1; na <= 8; ++na) {
        for (int nb = 1; nb <= 8; ++nb) {
            const auto counts = exact_u_counts(na, nb);
            const auto brute = oracle::brute_force_u_distribution(na, nb);
            REQUIRE(counts.size() == static_cast<std::size_t>(na * nb + 1));
            for (int u = 0; u <= na * nb; ++u) {
                const auto it = brute.find(u);
                CHECK(counts[static_cast<std::size_t>(u)] == (it == brute.end() ? 0.0 : static_cast<double>(it->second)));
                CHECK(exact_u_p_value(na, nb, u) ==
                      doctest::Approx(oracle::brute_force_two_sided_p(na, nb, u)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("normal approximation tracks the exact test at 20 vs 20") {
    SeededRng rng(6, 6);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> pool(40);
        std::iota(pool.begin(), pool.end(), 0.0);
        std::shuffle(pool.begin(), pool.end(), rng);
        // Skew one side so p spans a useful range.
        const int shift = static_cast<int>(rng.below(15));
        std::vector<double> a(pool.begin(), pool.begin() + 20), b(pool.begin() + 20, pool.end());
        for (auto& x : a) x += shift + 0.5;
        const auto r = mann_whitney(a, b);
        CHECK(r.method == UMethod::NormalApprox);
        CHECK(std::abs(r.p_value - exact_u_p_value(20, 20, r.u)) <= 0.01);
    }
}

TEST_CASE("tie-corrected normal approximation matches a reference") {
    // Reference values from an independent statistics package.
    const std::vector<double> a = {1, 2, 2, 3, 5, 5, 5, 7, 8, 9, 9, 10};
    const std::vector<double> b = {2, 4, 4, 6, 6, 7, 8, 8, 11, 12, 12, 13};
    const auto r = mann_whitney(a, b);
    CHECK(r.method == UMethod::NormalApprox);
    CHECK(r.u == 47.5);
    CHECK(r.p_value == doctest::Approx(0.16428909963480265).epsilon(1e-10));

    const std::vector<double> wins(20, 1.0), losses(20, 0.0);
    const auto w = mann_whitney(wins, losses);
    CHECK(w.u == 400.0);
    CHECK(w.significant);
}

TEST_CASE("U statistics are complementary") {
    SeededRng rng(7, 7);
    for (int t = 0; t < 500; ++t) {
        const int na = 1 + static_cast<int>(rng.below(25));
        const int nb = 1 + static_cast<int>(rng.below(25));
        std::vector<double> a, b;
        for (int i = 0; i < na; ++i) a.push_back(static_cast<double>(rng.below(6)));
        for (int i = 0; i < nb; ++i) b.push_back(static_cast<double>(rng.below(6)));
        const auto ab = mann_whitney(a, b);
        const auto ba = mann_whitney(b, a);
        CHECK(ab.u + ba.u == static_cast<double>(na * nb));
        CHECK(ab.p_value == doctest::Approx(ba.p_value).epsilon(1e-12));
        CHECK(ab.p_value >= 0.0);
        CHECK(ab.p_value <= 1.0);
    }
}
