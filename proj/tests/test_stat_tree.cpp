#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "generators.hpp"
#include "oracles.hpp"
#include "rhea/stat_tree.hpp"

using namespace rhea;
using namespace rhea::tree;

namespace {

const std::vector<Action> kLegal = gen::kMoves;

StatTree raw_tree() { return StatTree(UcbParams{1.0, Normalization::None}); }

// Gives `node` a child via `a` with the given statistics.
StatNode& set_child(StatNode& node, Action a, int visits, double total) {
    StatNode& c = node.ensure_child(a);
    c.visits = visits;
    c.total = total;
    return c;
}

}  // namespace

TEST_CASE("ucb1 fixtures") {
    CHECK(ucb1(0.0, 3.7, 1, 1) == 0.0);
    const double v = ucb1(0.5, 1.0, 10, 2);
    // 30-digit evaluation: 3.53485425877029...
    CHECK(std::abs(v - 3.5348542587702927) <= 1e-12 * 3.5348542587702927);
    CHECK(std::abs(v - 3.534859) < 1e-5);
    CHECK(ucb1(0.4, 1.0, 20, 3) > ucb1(0.4, 1.0, 20, 4));
    CHECK_THROWS(ucb1(0.0, 1.0, 5, 0));
    CHECK_THROWS(ucb1(0.0, 1.0, 2, 3));
    CHECK_THROWS(StatTree(UcbParams{0.0}));
}

TEST_CASE("ucb1 agrees with a 50-digit evaluation") {
    SeededRng rng(1, 2);
    for (int i = 0; i < 2000; ++i) {
        const double mean = rng.uniform() * 2 - 0.5;
        const double k = 0.01 + rng.uniform() * 5;
        const int n = 1 + static_cast<int>(rng.below(100000));
        const int nj = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const double expected = oracle::ucb1_high_precision(mean, k, n, nj);
        const double got = ucb1(mean, k, n, nj);
        CHECK(std::abs(got - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("select_child picks unvisited actions uniformly") {
    StatTree tree = raw_tree();
    SeededRng rng(3, 3);
    std::vector<int> counts(kLegal.size(), 0);
    for (int i = 0; i < 10000; ++i) {
        const Selection s = tree.select_child(tree.root(), kLegal, rng);
        CHECK(s.child == nullptr);
        ++counts[static_cast<std::size_t>(std::find(kLegal.begin(), kLegal.end(), s.action) - kLegal.begin())];
    }
    CHECK(oracle::chi_square_uniform_p(counts) > 0.01);
}

TEST_CASE("select_child prefers any unvisited sibling over visited ones") {
    StatTree tree = raw_tree();
    StatNode& root = tree.mutable_root();
    root.visits = 100;
    for (Action a : {Action::Up, Action::Down, Action::Left, Action::Right}) set_child(root, a, 25, 25.0 * 100);
    SeededRng rng(4, 4);
    for (int i = 0; i < 200; ++i) CHECK(tree.select_child(root, kLegal, rng).action == Action::Nil);
}

TEST_CASE("select_child takes the strict UCB1 argmax") {
    StatTree tree = raw_tree();
    StatNode& root = tree.mutable_root();
    root.visits = 30;
    // Equal visits give equal exploration terms, so UCB1 values are
    // mean + E with E shared; choose means so the values are 1.2, 3.4, 0.9.
    const double e = 2.0 * std::sqrt(2.0 * std::log(30.0) / 10.0);
    const std::vector<Action> legal = {Action::Up, Action::Down, Action::Nil};
    set_child(root, Action::Up, 10, (1.2 - e) * 10);
    set_child(root, Action::Down, 10, (3.4 - e) * 10);
    set_child(root, Action::Nil, 10, (0.9 - e) * 10);
    CHECK(std::abs(tree.ucb1_value(30, *root.child(Action::Down)) - 3.4) < 1e-12);
    SeededRng rng(5, 5);
    for (int i = 0; i < 500; ++i) {
        const Selection s = tree.select_child(root, legal, rng);
        CHECK(s.action == Action::Down);
        CHECK(s.child == root.child(Action::Down));
    }
}

TEST_CASE("select_child breaks exact ties evenly") {
    StatTree tree = raw_tree();
    StatNode& root = tree.mutable_root();
    root.visits = 8;
    const std::vector<Action> legal = {Action::Left, Action::Right};
    set_child(root, Action::Left, 4, 2.0);
    set_child(root, Action::Right, 4, 2.0);
    SeededRng rng(6, 6);
    int left = 0;
    for (int i = 0; i < 10000; ++i) left += tree.select_child(root, legal, rng).action == Action::Left;
    CHECK(std::abs(left / 10000.0 - 0.5) <= 0.02);
}

TEST_CASE("backpropagate creates and updates the path") {
    StatTree tree;
    const std::vector<Action> path = {Action::Up, Action::Up};
    tree.backpropagate(path, 3.0);
    const StatNode& root = tree.root();
    CHECK(root.visits == 1);
    CHECK(root.total == 3.0);
    const StatNode* c = root.child(Action::Up);
    REQUIRE(c);
    CHECK(c->visits == 1);
    CHECK(c->total == 3.0);
    const StatNode* g = c->child(Action::Up);
    REQUIRE(g);
    CHECK(g->visits == 1);
    CHECK(g->total == 3.0);
    CHECK(tree.node_count() == 3);

    StatTree twice;
    twice.backpropagate(path, 1.0);
    twice.backpropagate(path, 5.0);
    const StatNode* leaf = twice.root().child(Action::Up)->child(Action::Up);
    CHECK(leaf->visits == 2);
    CHECK(leaf->total == 6.0);
    CHECK(leaf->mean() == 3.0);
    CHECK(twice.reward_min() == 1.0);
    CHECK(twice.reward_max() == 5.0);

    CHECK_THROWS(tree.backpropagate(std::vector<Action>{}, 1.0));
}

TEST_CASE("backpropagation conserves visits and reward") {
    SeededRng rng(7, 7);
    StatTree tree;
    double sum = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double f = std::round(rng.uniform() * 100) / 4;  // exactly representable
        sum += f;
        tree.backpropagate(gen::random_path(rng, 14), f);
    }
    CHECK(tree.root().visits == 50);
    CHECK(tree.root().total == sum);
}

TEST_CASE("children never out-visit their parent") {
    SeededRng rng(8, 8);
    for (int t = 0; t < 50; ++t) {
        const StatTree tree = gen::random_tree(rng, 200);
        std::function<void(const StatNode&)> walk = [&](const StatNode& n) {
            CHECK(n.child_visits() <= n.visits);
            for (const auto& c : n.children) {
                if (c) walk(*c);
            }
        };
        walk(tree.root());
    }
}

TEST_CASE("reroot promotes the fired child intact") {
    StatTree tree;
    tree.backpropagate(std::vector<Action>{Action::Up, Action::Left}, 4.0);
    tree.backpropagate(std::vector<Action>{Action::Up, Action::Right, Action::Up}, 6.0);
    tree.backpropagate(std::vector<Action>{Action::Down}, 1.0);
    const StatNode subtree = *tree.root().child(Action::Up);
    tree.reroot(Action::Up);
    CHECK(tree.root().visits == 2);
    CHECK(tree.root().total == 10.0);
    CHECK_FALSE(tree.root().action);
    CHECK(tree.node_count() == subtree.subtree_size());
    CHECK(tree.node_count() == 4);
    StatNode expected = subtree;
    expected.action.reset();
    CHECK(tree.root() == expected);
    CHECK_FALSE(tree.reward_min());

    tree.reroot(Action::Nil);
    CHECK(tree.root().visits == 0);
    CHECK(tree.node_count() == 1);
}

TEST_CASE("reroot keeps a child with n=7, W=10") {
    StatTree tree;
    StatNode& root = tree.mutable_root();
    root.visits = 9;
    root.total = 12;
    StatNode& up = set_child(root, Action::Up, 7, 10.0);
    set_child(up, Action::Left, 3, 4.0);
    set_child(up, Action::Nil, 4, 6.0);
    set_child(root, Action::Down, 2, 2.0);
    tree.reroot(Action::Up);
    CHECK(tree.root().visits == 7);
    CHECK(tree.root().total == 10.0);
    CHECK(tree.node_count() == 3);
}

TEST_CASE("best_path on empty and chain trees") {
    SeededRng rng(9, 9);
    StatTree empty;
    const auto p = empty.best_path(14, kLegal, rng);
    CHECK(p.size() == 14);

    StatTree chain;
    std::vector<Action> line;
    for (int i = 0; i < 14; ++i) line.push_back(kLegal[static_cast<std::size_t>(i) % kLegal.size()]);
    chain.backpropagate(line, 2.0);
    CHECK(chain.best_path(14, kLegal, rng) == line);
}

TEST_CASE("best_path follows the highest mean, not the highest total") {
    StatTree tree = raw_tree();
    StatNode& root = tree.mutable_root();
    root.visits = 20;
    StatNode& up = set_child(root, Action::Up, 15, 30.0);     // mean 2, largest W
    StatNode& down = set_child(root, Action::Down, 5, 20.0);  // mean 4
    set_child(up, Action::Left, 15, 30.0);
    set_child(down, Action::Left, 2, 2.0);                    // mean 1
    StatNode& dr = set_child(down, Action::Right, 3, 18.0);   // mean 6
    set_child(dr, Action::Nil, 3, 18.0);
    SeededRng rng(10, 10);
    const auto path = tree.best_path(14, kLegal, rng);
    REQUIRE(path.size() == 14);
    CHECK(path[0] == Action::Down);
    CHECK(path[1] == Action::Right);
    CHECK(path[2] == Action::Nil);
}

TEST_CASE("best_path matches exhaustive enumeration on random trees") {
    SeededRng rng(11, 11);
    for (int t = 0; t < 200; ++t) {
        const StatTree tree = gen::random_tree(rng, 200);
        const auto optimal = oracle::argmax_mean_paths(tree.root(), kLegal);
        const auto path = tree.best_path(14, kLegal, rng);
        bool member = false;
        for (const auto& o : optimal) {
            member = member || std::equal(o.begin(), o.end(), path.begin());
        }
        CHECK(member);
    }
}

TEST_CASE("sample_ucb1_sequence length and padding") {
    SeededRng rng(12, 12);
    StatTree empty;
    CHECK(empty.sample_ucb1_sequence(14, kLegal, rng).size() == 14);
    StatTree tree = gen::random_tree(rng, 200);
    for (int i = 0; i < 1000; ++i) {
        const auto seq = tree.sample_ucb1_sequence(14, kLegal, rng);
        CHECK(seq.size() == 14);
        for (Action a : seq) CHECK(std::find(kLegal.begin(), kLegal.end(), a) != kLegal.end());
    }
}

TEST_CASE("sample_ucb1_sequence follows a dominant child") {
    StatTree tree = raw_tree();
    StatNode& root = tree.mutable_root();
    root.visits = 1000;
    // Dominant: mean 10 with 900 visits. Others: mean 0 with 25 visits each.
    // Exploration at most 2*sqrt(2 ln 1000 / 25) = 2.10, so 0 + 2.10 < 10 + 0.17.
    set_child(root, Action::Right, 900, 9000.0);
    for (Action a : {Action::Up, Action::Down, Action::Left, Action::Nil}) set_child(root, a, 25, 0.0);
    REQUIRE(tree.ucb1_value(1000, *root.child(Action::Right)) > tree.ucb1_value(1000, *root.child(Action::Up)));
    SeededRng rng(13, 13);
    for (int i = 0; i < 1000; ++i) CHECK(tree.sample_ucb1_sequence(14, kLegal, rng).front() == Action::Right);
}

TEST_CASE("normalised means sit in [0, 1] for observed rewards") {
    StatTree tree;
    tree.backpropagate(std::vector<Action>{Action::Up}, -4.0);
    tree.backpropagate(std::vector<Action>{Action::Down}, 12.0);
    tree.backpropagate(std::vector<Action>{Action::Down}, 4.0);
    CHECK(tree.normalized_mean(*tree.root().child(Action::Up)) == 0.0);
    CHECK(tree.normalized_mean(*tree.root().child(Action::Down)) == doctest::Approx(0.75));
}

TEST_CASE("dump lists every node with n and W") {
    StatTree tree;
    tree.backpropagate(std::vector<Action>{Action::Up, Action::Left}, 1.5);
    CHECK(tree.dump() == "root n=1 W=1.5\n  up n=1 W=1.5\n    left n=1 W=1.5\n");
}
