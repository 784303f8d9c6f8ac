#include "rhea/agents.hpp"

#include <stdexcept>
#include <string>

namespace rhea::agents {

namespace {
constexpr std::array<std::string_view, 5> kVariantNames = {
    "vanilla", "shift-buffer", "stat-tree", "stat-tree-seeding", "mcts"};

bool uses_tree(Variant v) {
    return v == Variant::StatTree || v == Variant::StatTreeSeeding || v == Variant::Mcts;
}
}  // namespace

std::string_view variant_name(Variant v) { return kVariantNames[static_cast<std::size_t>(v)]; }

Variant parse_variant(std::string_view name) {
    for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
        if (kVariantNames[i] == name) return kAllVariants[i];
    }
    throw std::invalid_argument("unknown agent variant '" + std::string(name) + "'");
}

evo::Population seed_population_from_tree(tree::StatTree& tree, const evo::EvoParams& params,
                                          evo::EvalContext& ctx) {
    const auto legal = ctx.root.legal_actions();
    evo::Population pop;
    pop.members.reserve(static_cast<std::size_t>(params.population_size));
    bool budget_left = true;
    for (int i = 0; i < params.population_size; ++i) {
        evo::Individual ind;
        if (!budget_left) {
            pop.members.push_back(evo::random_individual(params.genome_length, legal, ctx.rng));
            continue;
        }
        ind.genome = i == 0 ? tree.best_path(params.genome_length, legal, ctx.rng)
                            : tree.sample_ucb1_sequence(params.genome_length, legal, ctx.rng);
        budget_left = evo::evaluate(ind, ctx);
        if (budget_left && ctx.stats) ++ctx.stats->seeded;
        pop.members.push_back(std::move(ind));
    }
    return pop;
}

Injection inject_tree_individual(evo::Population& pop, tree::StatTree& tree,
                                 const evo::EvoParams& params, evo::EvalContext& ctx) {
    if (ctx.meter.remaining() < params.genome_length) return Injection::Skipped;
    evo::Individual fresh;
    fresh.genome = tree.sample_ucb1_sequence(params.genome_length, ctx.root.legal_actions(), ctx.rng);
    if (!evo::evaluate(fresh, ctx)) return Injection::Skipped;
    if (ctx.stats) ++ctx.stats->injections;

    const std::size_t worst = evo::worst_index(pop);
    const auto& incumbent = pop.members[worst].fitness;
    if (incumbent && *fresh.fitness > *incumbent) {
        pop.members[worst] = std::move(fresh);
        return Injection::Replaced;
    }
    return Injection::Discarded;
}

Action mcts_decide(const Game& state, BudgetMeter& meter, tree::StatTree& tree, SeededRng& rng,
                   int horizon, evo::DecisionStats* stats) {
    if (state.outcome().terminal()) throw std::logic_error("mcts_decide from a terminal state");
    const auto legal = state.legal_actions();
    std::vector<Action> path;
    path.reserve(static_cast<std::size_t>(horizon));

    while (meter.remaining() > 0) {
        auto sim = state.clone();
        if (sim->stochastic()) sim->reseed(rng.split(rng.next_u64()));
        path.clear();

        // Selection and expansion: descend while the chosen child has been
        // visited; the first unvisited action is the expansion.
        const tree::StatNode* node = &tree.root();
        int depth = 0;
        while (depth < horizon && !sim->outcome().terminal()) {
            const tree::Selection sel = tree.select_child(*node, legal, rng);
            if (!meter.try_consume(1)) break;
            sim->advance(sel.action);
            path.push_back(sel.action);
            ++depth;
            if (!sel.child) break;
            node = sel.child;
        }
        // Default policy.
        while (depth < horizon && !sim->outcome().terminal() && meter.try_consume(1)) {
            sim->advance(rng.pick(legal));
            ++depth;
        }
        if (path.empty()) break;
        tree.backpropagate(path, sim->outcome().score);
        if (stats) {
            ++stats->evaluations;
            stats->depth_sum += depth;
        }
    }

    std::array<Action, kActionCount> ties{};
    std::size_t n = 0;
    const tree::StatNode* best = nullptr;
    for (Action a : legal) {
        const tree::StatNode* c = tree.root().child(a);
        if (!c || c->visits == 0) continue;
        const bool better = !best || c->visits > best->visits ||
                            (c->visits == best->visits && c->mean() > best->mean());
        const bool tied = best && c->visits == best->visits && c->mean() == best->mean();
        if (better) {
            best = c;
            n = 0;
        }
        if (better || tied) ties[n++] = a;
    }
    if (n == 0) return rng.pick(legal);
    return ties[n == 1 ? 0 : rng.below(n)];
}

Agent::Agent(Variant variant, evo::EvoParams params) : variant_(variant), params_(params) {
    params_.validate();
    if (uses_tree(variant_)) carryover_ = tree::StatTree(params_.ucb);
}

Decision Agent::decide(const Game& state, BudgetMeter& meter, SeededRng& rng) {
    if (state.outcome().terminal()) throw std::logic_error("decide on a terminal state");
    return variant_ == Variant::Mcts ? decide_mcts(state, meter, rng) : decide_rhea(state, meter, rng);
}

Decision Agent::decide_mcts(const Game& state, BudgetMeter& meter, SeededRng& rng) {
    auto& tree = std::get<tree::StatTree>(carryover_);
    Decision d;
    d.tree_visits_before = tree.root().visits;
    d.action = mcts_decide(state, meter, tree, rng, params_.genome_length, &d.stats);
    d.tree_visits_after = tree.root().visits;
    if (instrumented_) d.pre_reroot_root = tree.root();
    tree.reroot(d.action);
    return d;
}

Decision Agent::decide_rhea(const Game& state, BudgetMeter& meter, SeededRng& rng) {
    const auto legal = state.legal_actions();
    Decision d;
    tree::StatTree* tree = nullptr;
    if (uses_tree(variant_)) {
        tree = &std::get<tree::StatTree>(carryover_);
        d.tree_visits_before = tree->root().visits;
    }
    evo::EvalContext ctx{state, meter, tree, rng, &d.stats, params_.win_bonus};

    evo::Population pop;
    switch (variant_) {
        case Variant::ShiftBuffer:
            if (auto* carried = std::get_if<evo::Population>(&carryover_)) {
                pop = std::move(*carried);
            } else {
                pop = evo::init_population(params_, legal, rng);
            }
            break;
        case Variant::StatTreeSeeding:
            pop = seed_population_from_tree(*tree, params_, ctx);
            break;
        default:
            pop = evo::init_population(params_, legal, rng);
            break;
    }
    for (auto& ind : pop.members) {
        if (!ind.evaluated() && !evo::evaluate(ind, ctx)) break;
    }

    bool all_evaluated = true;
    for (const auto& ind : pop.members) all_evaluated = all_evaluated && ind.evaluated();
    if (all_evaluated) {
        while (meter.remaining() > 0) {
            evo::next_generation(pop, params_, ctx);
            if (variant_ == Variant::StatTreeSeeding) inject_tree_individual(pop, *tree, params_, ctx);
        }
    }

    const evo::Individual& best = pop.members[evo::best_index(pop)];
    d.action = best.genome.front();
    d.best = best;
    if (instrumented_) d.population = pop;

    switch (variant_) {
        case Variant::Vanilla:
            carryover_ = std::monostate{};
            break;
        case Variant::ShiftBuffer:
            evo::shift_carryover(pop, legal, rng);
            carryover_ = std::move(pop);
            break;
        default:
            d.tree_visits_after = tree->root().visits;
            if (instrumented_) d.pre_reroot_root = tree->root();
            tree->reroot(d.action);
            break;
    }
    return d;
}

Agent make_agent(Variant variant, const evo::EvoParams& params) { return Agent(variant, params); }

}  // namespace rhea::agents
