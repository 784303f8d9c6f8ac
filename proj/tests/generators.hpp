#pragma once

// Random inputs shared by unit tests and the acceptance suite.

#include <vector>

#include "rhea/core.hpp"
#include "rhea/stat_tree.hpp"

namespace gen {

inline const std::vector<rhea::Action> kMoves = {rhea::Action::Up, rhea::Action::Down, rhea::Action::Left,
                                                 rhea::Action::Right, rhea::Action::Nil};

inline std::vector<rhea::Action> random_path(rhea::SeededRng& rng, int max_len,
                                             const std::vector<rhea::Action>& legal = kMoves) {
    const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    std::vector<rhea::Action> path;
    for (int i = 0; i < len; ++i) path.push_back(rng.pick<rhea::Action>(legal));
    return path;
}

/// Tree built from random back-propagations with small integer rewards (so
/// mean ties happen), capped at `max_nodes` nodes.
inline rhea::tree::StatTree random_tree(rhea::SeededRng& rng, std::size_t max_nodes, int max_depth = 6) {
    rhea::tree::StatTree tree;
    const int scripts = 1 + static_cast<int>(rng.below(60));
    for (int i = 0; i < scripts; ++i) {
        const auto path = random_path(rng, max_depth);
        rhea::tree::StatTree trial = tree;
        trial.backpropagate(path, static_cast<double>(rng.below(4)));
        if (trial.node_count() > max_nodes) break;
        tree = std::move(trial);
    }
    return tree;
}

}  // namespace gen
