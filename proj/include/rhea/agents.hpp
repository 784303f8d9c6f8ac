#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "rhea/evolution.hpp"
#include "rhea/game.hpp"
#include "rhea/stat_tree.hpp"

namespace rhea::agents {

enum class Variant { Vanilla, ShiftBuffer, StatTree, StatTreeSeeding, Mcts };

inline constexpr std::array<Variant, 5> kAllVariants = {
    Variant::Vanilla, Variant::ShiftBuffer, Variant::StatTree, Variant::StatTreeSeeding, Variant::Mcts};

std::string_view variant_name(Variant v);
/// Throws std::invalid_argument for unknown names.
Variant parse_variant(std::string_view name);

/// What a controller keeps between ticks.
using Carryover = std::variant<std::monostate, evo::Population, tree::StatTree>;

enum class Injection { Skipped, Discarded, Replaced };

/// Builds the initial population from the tree: the greedy best path first,
/// then m-1 UCB1 samples, each evaluated (and so backed up into the tree)
/// before the next one is drawn. If the budget runs out, the rest of the
/// population is random and unevaluated.
evo::Population seed_population_from_tree(tree::StatTree& tree, const evo::EvoParams& params,
                                          evo::EvalContext& ctx);

/// Samples one UCB1 individual, evaluates it into the tree and swaps it for
/// the worst member when strictly fitter. Skipped when the meter cannot cover
/// a full genome.
Injection inject_tree_individual(evo::Population& pop, tree::StatTree& tree,
                                 const evo::EvoParams& params, evo::EvalContext& ctx);

/// Open-loop UCT over the same statistical tree. Each iteration descends by
/// UCB1, expands one node, rolls out uniformly to `horizon` total ticks and
/// backs the final score up the tree part of the path. Returns the most
/// visited root action (ties: higher mean, then random).
Action mcts_decide(const Game& state, BudgetMeter& meter, tree::StatTree& tree, SeededRng& rng,
                   int horizon, evo::DecisionStats* stats = nullptr);

struct Decision {
    Action action = Action::Nil;
    evo::DecisionStats stats;
    /// The plan the action came from (RHEA variants only).
    std::optional<evo::Individual> best;
    /// Tree root visits at decision start and just before re-rooting.
    int tree_visits_before = 0;
    int tree_visits_after = 0;
    /// Root of the tree before re-rooting; filled only when instrumented.
    std::optional<tree::StatNode> pre_reroot_root;
    /// Final population; filled only when instrumented.
    std::optional<evo::Population> population;
};

class Agent {
public:
    Agent(Variant variant, evo::EvoParams params);

    /// Plans from `state` within `meter` and returns the action to fire.
    Decision decide(const Game& state, BudgetMeter& meter, SeededRng& rng);

    Variant variant() const { return variant_; }
    const evo::EvoParams& params() const { return params_; }
    const Carryover& carryover() const { return carryover_; }
    void set_instrumented(bool on) { instrumented_ = on; }

private:
    Decision decide_rhea(const Game& state, BudgetMeter& meter, SeededRng& rng);
    Decision decide_mcts(const Game& state, BudgetMeter& meter, SeededRng& rng);

    Variant variant_;
    evo::EvoParams params_;
    Carryover carryover_;
    bool instrumented_ = false;
};

Agent make_agent(Variant variant, const evo::EvoParams& params);

}  // namespace rhea::agents
