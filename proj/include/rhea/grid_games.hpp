#pragma once

#include <array>
#include <compare>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rhea/game.hpp"

namespace rhea::games {

enum class GameId : std::uint8_t { Escape, Race, Missiles, Aliens, Butterflies, Zombies };

inline constexpr std::array<GameId, 6> kAllGames = {
    GameId::Escape, GameId::Race, GameId::Missiles,
    GameId::Aliens, GameId::Butterflies, GameId::Zombies};

std::string_view game_name(GameId id);
std::optional<GameId> parse_game(std::string_view name);

struct Pos {
    int x = 0;
    int y = 0;
    auto operator<=>(const Pos&) const = default;
};

/// Static description of one game: which actions it accepts, whether its
/// transitions are random, which glyphs a level may use, and the smallest
/// positive score change it can produce (every per-tick delta is a
/// non-negative multiple of it).
struct GameSpec {
    GameId id;
    std::vector<Action> legal_actions;
    bool stochastic;
    std::string legend;
    double score_unit;
    bool win_on_timeout;
};

const GameSpec& game_spec(GameId id);

/// Parse failure with a 1-based location in the level text.
class LevelError : public std::runtime_error {
public:
    LevelError(const std::string& what, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Per-level tunables read from `#key=value` header lines.
struct LevelParams {
    int max_ticks = 500;
    double p = 0.05;            // aliens: bomb drop chance; butterflies: move chance
    double beta = 0.5;          // zombies: chance of a greedy step toward the avatar
    int racer_period = 2;
    int missile_period = 3;
    int alien_period = 3;
    int zombie_period = 1;

    bool operator==(const LevelParams&) const = default;
};

struct Terrain {
    GameId id;
    int width = 0;
    int height = 0;
    std::vector<char> walls;  // row-major, 1 = wall
    std::vector<Pos> exits;
    LevelParams params;

    bool wall(Pos p) const {
        return p.x < 0 || p.y < 0 || p.x >= width || p.y >= height ||
               walls[static_cast<std::size_t>(p.y * width + p.x)] != 0;
    }
    bool operator==(const Terrain&) const = default;
};

/// The six desk-scale grid games behind one forward model.
///
/// Static layout lives in a shared immutable Terrain; everything that moves is
/// held by value, so a copy costs O(entities).
class GridGame final : public Game {
public:
    /// Parses a level. Throws LevelError.
    static GridGame load(std::string_view text, GameId id);
    static GridGame load_file(const std::filesystem::path& path, GameId id);

    std::unique_ptr<Game> clone() const override;
    void advance(Action action) override;
    const GameOutcome& outcome() const override { return outcome_; }
    std::span<const Action> legal_actions() const override;
    bool stochastic() const override;
    void reseed(const SeededRng& rng) override { rng_ = rng; }

    /// ASCII grid of the current state using the level glyphs. In-flight
    /// bombs, which have no level glyph, render as '*'.
    std::string render() const;

    GameId id() const { return terrain_->id; }
    const GameSpec& spec() const { return game_spec(terrain_->id); }
    const Terrain& terrain() const { return *terrain_; }
    const LevelParams& params() const { return terrain_->params; }
    Pos avatar() const { return avatar_; }
    const std::vector<Pos>& cities() const { return cities_; }
    const std::vector<Pos>& missiles() const { return missiles_; }
    const std::vector<Pos>& aliens() const { return aliens_; }
    const std::vector<Pos>& bombs() const { return bombs_; }
    const std::vector<Pos>& butterflies() const { return butterflies_; }
    const std::vector<Pos>& zombies() const { return zombies_; }
    const std::vector<Pos>& honey() const { return honey_; }
    std::optional<Pos> racer() const { return racer_; }
    const SeededRng& rng() const { return rng_; }

    /// Overrides max-ticks after loading (harness override).
    void set_max_ticks(int max_ticks);

    bool operator==(const GridGame& other) const;

private:
    GridGame() = default;

    void step_escape(Action a);
    void step_race(Action a);
    void step_missiles(Action a);
    void step_aliens(Action a);
    void step_butterflies(Action a);
    void step_zombies(Action a);
    void move_avatar(Action a);
    bool on_period(int period) const;

    std::shared_ptr<const Terrain> terrain_;
    GameOutcome outcome_;
    SeededRng rng_;
    Pos avatar_;
    std::optional<Pos> racer_;
    std::vector<Pos> cities_;
    std::vector<Pos> missiles_;
    std::vector<Pos> aliens_;
    int alien_dir_ = 1;
    std::vector<Pos> bombs_;
    std::vector<Pos> butterflies_;
    std::vector<Pos> zombies_;
    std::vector<Pos> honey_;
};

/// Pure successor: copies `state` and advances the copy.
GridGame advance(const GridGame& state, Action action);

Pos step(Pos p, Action a);

}  // namespace rhea::games
