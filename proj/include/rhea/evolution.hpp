#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rhea/core.hpp"
#include "rhea/game.hpp"
#include "rhea/stat_tree.hpp"

namespace rhea::evo {

struct EvoParams {
    int population_size = 10;
    int genome_length = 14;
    double mutation_rate = 1.0 / 14.0;
    int tournament_size = 3;
    int elites = 1;
    int budget = BudgetMeter::kDefaultLimit;
    double win_bonus = 0.0;
    tree::UcbParams ucb{};

    /// Throws std::invalid_argument on inconsistent values.
    void validate() const;
};

struct Individual {
    std::vector<Action> genome;
    std::optional<double> fitness;
    int evaluated_depth = 0;

    bool evaluated() const { return fitness.has_value(); }
    void invalidate() {
        fitness.reset();
        evaluated_depth = 0;
    }
};

struct Population {
    std::vector<Individual> members;
    int generation = 0;
};

/// Per-decision counters used by audits and conservation checks.
struct DecisionStats {
    int evaluations = 0;
    long depth_sum = 0;
    int generations = 0;
    int injections = 0;
    int seeded = 0;
};

/// Shared state threaded through every evaluation in one decision.
struct EvalContext {
    const Game& root;
    BudgetMeter& meter;
    tree::StatTree* tree = nullptr;
    SeededRng& rng;
    DecisionStats* stats = nullptr;
    double win_bonus = 0.0;
};

Individual random_individual(int length, std::span<const Action> legal, SeededRng& rng);

Population init_population(const EvoParams& params, std::span<const Action> legal, SeededRng& rng);

/// Rolls the genome forward on a copy of the root state, one budget unit per
/// tick, stopping at a terminal state or when the meter runs dry. Returns false
/// (individual left unevaluated) only when no budget was left at entry.
bool evaluate(Individual& ind, EvalContext& ctx);

Individual uniform_crossover(const Individual& a, const Individual& b, SeededRng& rng);

void mutate(Individual& ind, double rate, std::span<const Action> legal, SeededRng& rng);

/// Index of the tournament winner among `size` members drawn without
/// replacement. All members must be evaluated.
std::size_t tournament_select(const Population& pop, int size, SeededRng& rng);

/// Index of the fittest evaluated member, lowest index on ties. Falls back to
/// 0 when nobody is evaluated.
std::size_t best_index(const Population& pop);
/// Index of the least fit evaluated member, highest index on ties, so it never
/// coincides with best_index unless only one member is evaluated.
std::size_t worst_index(const Population& pop);

/// One generational step with elitism. Offspring are evaluated as they are
/// produced; a slot whose offspring cannot be evaluated keeps its previous
/// occupant.
void next_generation(Population& pop, const EvoParams& params, EvalContext& ctx);

/// Drops the first gene of every member, appends a random legal gene and
/// invalidates fitness.
void shift_carryover(Population& pop, std::span<const Action> legal, SeededRng& rng);

}  // namespace rhea::evo
