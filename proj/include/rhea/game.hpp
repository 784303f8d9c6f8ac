#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rhea/core.hpp"

namespace rhea {

class IllegalAdvance : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Forward-model contract shared by every game the agents can plan on.
///
/// A Game is a mutable snapshot: planners clone it and call advance() on the
/// clone. One advance() is one game tick and one budget unit.
class Game {
public:
    virtual ~Game() = default;

    virtual std::unique_ptr<Game> clone() const = 0;
    /// Throws IllegalAdvance on a terminal state or an illegal action.
    virtual void advance(Action action) = 0;
    virtual const GameOutcome& outcome() const = 0;
    virtual std::span<const Action> legal_actions() const = 0;
    virtual bool stochastic() const = 0;
    /// Replaces the stream that drives stochastic transitions. Deterministic
    /// games ignore it.
    virtual void reseed(const SeededRng& rng) = 0;

    bool is_legal(Action action) const;
};

/// Decorator that counts every advance() made through it or any of its clones.
/// Used to audit budget accounting against ground truth.
class CountingGame final : public Game {
public:
    CountingGame(std::unique_ptr<Game> inner, std::shared_ptr<std::int64_t> counter);

    std::unique_ptr<Game> clone() const override;
    void advance(Action action) override;
    const GameOutcome& outcome() const override { return inner_->outcome(); }
    std::span<const Action> legal_actions() const override { return inner_->legal_actions(); }
    bool stochastic() const override { return inner_->stochastic(); }
    void reseed(const SeededRng& rng) override { inner_->reseed(rng); }

    std::int64_t count() const { return *counter_; }
    const Game& inner() const { return *inner_; }

private:
    std::unique_ptr<Game> inner_;
    std::shared_ptr<std::int64_t> counter_;
};

}  // namespace rhea
