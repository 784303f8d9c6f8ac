#include "rhea/game.hpp"

#include <algorithm>

namespace rhea {

bool Game::is_legal(Action action) const {
    const auto legal = legal_actions();
    return std::find(legal.begin(), legal.end(), action) != legal.end();
}

CountingGame::CountingGame(std::unique_ptr<Game> inner, std::shared_ptr<std::int64_t> counter)
    : inner_(std::move(inner)), counter_(std::move(counter)) {
    if (!inner_ || !counter_) throw std::invalid_argument("CountingGame needs a game and a counter");
}

std::unique_ptr<Game> CountingGame::clone() const {
    return std::make_unique<CountingGame>(inner_->clone(), counter_);
}

void CountingGame::advance(Action action) {
    ++*counter_;
    inner_->advance(action);
}

}  // namespace rhea
