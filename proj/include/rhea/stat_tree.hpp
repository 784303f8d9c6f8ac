#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rhea/core.hpp"

namespace rhea::tree {

enum class Normalization { None, MinMaxPerDecision };

struct UcbParams {
    double k = 1.0;
    Normalization normalization = Normalization::MinMaxPerDecision;
};

/// Open-loop node: statistics only, never a game state.
struct StatNode {
    std::optional<Action> action;  // empty at the root
    int visits = 0;
    double total = 0.0;
    std::array<std::unique_ptr<StatNode>, kActionCount> children{};

    StatNode() = default;
    explicit StatNode(Action from) : action(from) {}
    StatNode(const StatNode& other);
    StatNode& operator=(const StatNode& other);
    StatNode(StatNode&&) noexcept = default;
    StatNode& operator=(StatNode&&) noexcept = default;

    /// Only meaningful when visits >= 1.
    double mean() const { return total / visits; }

    StatNode* child(Action a) { return children[action_index(a)].get(); }
    const StatNode* child(Action a) const { return children[action_index(a)].get(); }
    StatNode& ensure_child(Action a);

    int child_visits() const;
    std::size_t subtree_size() const;

    /// Deep structural equality, bitwise on the statistics.
    bool operator==(const StatNode& other) const;
};

/// Exploitation plus exploration term: mean + 2K * sqrt(2 ln(n) / n_j).
double ucb1(double mean, double k, int parent_visits, int child_visits);

/// Result of one selection step. `child` is null when the chosen action has no
/// visited node yet (first-visit rule).
struct Selection {
    Action action;
    const StatNode* child;
};

class StatTree {
public:
    explicit StatTree(UcbParams params = {});

    const UcbParams& params() const { return params_; }
    const StatNode& root() const { return root_; }
    /// Direct access for hand-built fixtures.
    StatNode& mutable_root() { return root_; }

    std::optional<double> reward_min() const { return min_; }
    std::optional<double> reward_max() const { return max_; }
    void observe_reward(double reward);

    /// Adds one visit and `fitness` to every node on root -> path, creating
    /// nodes on first traversal.
    void backpropagate(std::span<const Action> path, double fitness);

    /// Promotes the child reached by `fired` to root; resets to an empty tree
    /// when there is no such child. Reward bounds restart either way.
    void reroot(Action fired);
    void reset();

    std::size_t node_count() const { return root_.subtree_size(); }

    /// Mean reward of a visited node after the configured normalisation.
    double normalized_mean(const StatNode& node) const;
    /// UCB1 of a visited child under a parent visited `parent_visits` times.
    double ucb1_value(int parent_visits, const StatNode& child) const;

    Selection select_child(const StatNode& node, std::span<const Action> legal, SeededRng& rng) const;

    /// Greedy descent on mean reward, padded with random legal actions.
    std::vector<Action> best_path(int length, std::span<const Action> legal, SeededRng& rng) const;
    /// UCB1 descent from the root, padded with random legal actions once the
    /// descent leaves the visited part of the tree.
    std::vector<Action> sample_ucb1_sequence(int length, std::span<const Action> legal, SeededRng& rng) const;

    /// Indented text dump: one line per node with action, n and W.
    std::string dump() const;

private:
    UcbParams params_;
    StatNode root_;
    std::optional<double> min_;
    std::optional<double> max_;
};

}  // namespace rhea::tree
