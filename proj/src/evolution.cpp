#include "rhea/evolution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rhea::evo {

void EvoParams::validate() const {
    if (population_size < 2) throw std::invalid_argument("population-size must be >= 2");
    if (genome_length < 1) throw std::invalid_argument("genome-length must be >= 1");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw std::invalid_argument("mutation-rate must be in [0,1]");
    if (elites < 1 || elites >= population_size) throw std::invalid_argument("elites must be in [1, population-size)");
    if (tournament_size < 1 || tournament_size > population_size) {
        throw std::invalid_argument("tournament-size must be in [1, population-size]");
    }
    if (budget < 0) throw std::invalid_argument("budget must be >= 0");
    if (!(ucb.k > 0.0)) throw std::invalid_argument("ucb-K must be > 0");
}

Individual random_individual(int length, std::span<const Action> legal, SeededRng& rng) {
    Individual ind;
    ind.genome.resize(static_cast<std::size_t>(length));
    for (Action& g : ind.genome) g = rng.pick(legal);
    return ind;
}

Population init_population(const EvoParams& params, std::span<const Action> legal, SeededRng& rng) {
    Population pop;
    pop.members.reserve(static_cast<std::size_t>(params.population_size));
    for (int i = 0; i < params.population_size; ++i) {
        pop.members.push_back(random_individual(params.genome_length, legal, rng));
    }
    return pop;
}

bool evaluate(Individual& ind, EvalContext& ctx) {
    if (ctx.root.outcome().terminal()) throw std::logic_error("evaluate from a terminal root state");
    if (ctx.meter.remaining() <= 0) return false;

    auto state = ctx.root.clone();
    if (state->stochastic()) state->reseed(ctx.rng.split(ctx.rng.next_u64()));

    int depth = 0;
    for (Action a : ind.genome) {
        if (state->outcome().terminal() || !ctx.meter.try_consume(1)) break;
        state->advance(a);
        ++depth;
    }
    const GameOutcome& out = state->outcome();
    double fitness = out.score;
    if (out.status == Status::Win) fitness += ctx.win_bonus;
    ind.fitness = fitness;
    ind.evaluated_depth = depth;

    if (ctx.tree) {
        ctx.tree->backpropagate(std::span<const Action>(ind.genome).first(static_cast<std::size_t>(depth)),
                                fitness);
    }
    if (ctx.stats) {
        ++ctx.stats->evaluations;
        ctx.stats->depth_sum += depth;
    }
    return true;
}

Individual uniform_crossover(const Individual& a, const Individual& b, SeededRng& rng) {
    if (a.genome.size() != b.genome.size()) throw std::invalid_argument("crossover of unequal genome lengths");
    Individual child;
    child.genome.resize(a.genome.size());
    for (std::size_t i = 0; i < child.genome.size(); ++i) {
        child.genome[i] = (rng.next_u64() >> 63) == 0 ? a.genome[i] : b.genome[i];
    }
    return child;
}

void mutate(Individual& ind, double rate, std::span<const Action> legal, SeededRng& rng) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("mutation rate must be in [0,1]");
    for (Action& g : ind.genome) {
        if (rng.bernoulli(rate)) g = rng.pick(legal);
    }
    ind.invalidate();
}

std::size_t tournament_select(const Population& pop, int size, SeededRng& rng) {
    const std::size_t m = pop.members.size();
    if (size < 1 || static_cast<std::size_t>(size) > m) throw std::invalid_argument("bad tournament size");

    // Partial Fisher-Yates over member indices.
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < static_cast<std::size_t>(size); ++i) {
        std::swap(idx[i], idx[i + rng.below(m - i)]);
    }

    double best = 0.0;
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < static_cast<std::size_t>(size); ++i) {
        const Individual& ind = pop.members[idx[i]];
        if (!ind.evaluated()) throw std::logic_error("tournament over an unevaluated member");
        if (ties.empty() || *ind.fitness > best) {
            best = *ind.fitness;
            ties.assign(1, idx[i]);
        } else if (*ind.fitness == best) {
            ties.push_back(idx[i]);
        }
    }
    return ties.size() == 1 ? ties.front() : ties[rng.below(ties.size())];
}

std::size_t best_index(const Population& pop) {
    std::size_t best = 0;
    bool found = false;
    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        const auto& f = pop.members[i].fitness;
        if (f && (!found || *f > *pop.members[best].fitness)) {
            best = i;
            found = true;
        }
    }
    return best;
}

std::size_t worst_index(const Population& pop) {
    std::size_t worst = 0;
    bool found = false;
    for (std::size_t i = 0; i < pop.members.size(); ++i) {
        const auto& f = pop.members[i].fitness;
        if (f && (!found || *f <= *pop.members[worst].fitness)) {
            worst = i;
            found = true;
        }
    }
    return worst;
}

void next_generation(Population& pop, const EvoParams& params, EvalContext& ctx) {
    for (const auto& ind : pop.members) {
        if (!ind.evaluated()) throw std::logic_error("next_generation needs an evaluated population");
    }
    const Population parents = pop;
    const std::span<const Action> legal = ctx.root.legal_actions();

    // Elites first (stable on ties), everyone else keeps relative order.
    std::vector<std::size_t> order(pop.members.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return *parents.members[a].fitness > *parents.members[b].fitness;
    });
    const auto elites = static_cast<std::size_t>(params.elites);
    std::vector<std::size_t> layout(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(elites));
    for (std::size_t i = 0; i < parents.members.size(); ++i) {
        if (std::find(layout.begin(), layout.end(), i) == layout.end()) layout.push_back(i);
    }
    std::vector<Individual> next;
    next.reserve(layout.size());
    for (std::size_t i : layout) next.push_back(parents.members[i]);

    for (std::size_t slot = elites; slot < next.size(); ++slot) {
        if (ctx.meter.remaining() <= 0) break;
        const std::size_t p1 = tournament_select(parents, params.tournament_size, ctx.rng);
        const std::size_t p2 = tournament_select(parents, params.tournament_size, ctx.rng);
        Individual child = uniform_crossover(parents.members[p1], parents.members[p2], ctx.rng);
        mutate(child, params.mutation_rate, legal, ctx.rng);
        if (!evaluate(child, ctx)) break;
        next[slot] = std::move(child);
    }
    pop.members = std::move(next);
    ++pop.generation;
    if (ctx.stats) ++ctx.stats->generations;
}

void shift_carryover(Population& pop, std::span<const Action> legal, SeededRng& rng) {
    for (auto& ind : pop.members) {
        if (!ind.genome.empty()) {
            std::rotate(ind.genome.begin(), ind.genome.begin() + 1, ind.genome.end());
            ind.genome.back() = rng.pick(legal);
        }
        ind.invalidate();
    }
}

}  // namespace rhea::evo
