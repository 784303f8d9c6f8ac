#include "rhea/grid_games.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace rhea::games {

namespace {

using enum Action;

const std::array<GameSpec, 6> kSpecs = {{
    {GameId::Escape, {Up, Down, Left, Right, Nil}, false, "w.Ax", 1.0, false},
    {GameId::Race, {Up, Down, Left, Right, Nil}, false, "w.Ar", 1.0, false},
    {GameId::Missiles, {Up, Down, Left, Right, Use, Nil}, false, "w.Acm", 2.0, false},
    {GameId::Aliens, {Left, Right, Use, Nil}, true, "w.Ae", 1.0, false},
    {GameId::Butterflies, {Up, Down, Left, Right, Nil}, true, "w.Ab", 2.0, false},
    {GameId::Zombies, {Up, Down, Left, Right, Nil}, true, "w.Azh", 1.0, true},
}};

constexpr std::array<std::string_view, 6> kNames = {
    "d-escape", "d-race", "d-missiles", "s-aliens", "s-butterflies", "s-zombies"};

constexpr std::array<Action, 4> kMoves = {Up, Down, Left, Right};

bool erase_at(std::vector<Pos>& items, Pos p) {
    auto it = std::find(items.begin(), items.end(), p);
    if (it == items.end()) return false;
    items.erase(it);
    return true;
}

bool contains(const std::vector<Pos>& items, Pos p) {
    return std::find(items.begin(), items.end(), p) != items.end();
}

std::string location(int line, int column) {
    return " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
}

template <typename T>
T parse_number(std::string_view text, int line, std::string_view key) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw LevelError("bad value for '" + std::string(key) + "': " + std::string(text), line, 1);
    }
    return value;
}

void apply_header(LevelParams& params, std::string_view key, std::string_view value, int line) {
    auto positive = [&](int v) {
        if (v < 1) throw LevelError(std::string(key) + " must be >= 1", line, 1);
        return v;
    };
    auto probability = [&](double v) {
        if (!(v >= 0.0 && v <= 1.0)) throw LevelError(std::string(key) + " must be in [0,1]", line, 1);
        return v;
    };
    if (key == "max-ticks") params.max_ticks = positive(parse_number<int>(value, line, key));
    else if (key == "p") params.p = probability(parse_number<double>(value, line, key));
    else if (key == "beta") params.beta = probability(parse_number<double>(value, line, key));
    else if (key == "racer-period") params.racer_period = positive(parse_number<int>(value, line, key));
    else if (key == "missile-period") params.missile_period = positive(parse_number<int>(value, line, key));
    else if (key == "alien-period") params.alien_period = positive(parse_number<int>(value, line, key));
    else if (key == "zombie-period") params.zombie_period = positive(parse_number<int>(value, line, key));
    else throw LevelError("unknown header key '" + std::string(key) + "'", line, 2);
}

}  // namespace

std::string_view game_name(GameId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<GameId> parse_game(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return kAllGames[i];
    }
    return std::nullopt;
}

const GameSpec& game_spec(GameId id) { return kSpecs[static_cast<std::size_t>(id)]; }

LevelError::LevelError(const std::string& what, int line, int column)
    : std::runtime_error(what + location(line, column)), line_(line), column_(column) {}

Pos step(Pos p, Action a) {
    switch (a) {
        case Up: return {p.x, p.y - 1};
        case Down: return {p.x, p.y + 1};
        case Left: return {p.x - 1, p.y};
        case Right: return {p.x + 1, p.y};
        default: return p;
    }
}

GridGame GridGame::load(std::string_view text, GameId id) {
    const GameSpec& spec = game_spec(id);
    auto terrain = std::make_shared<Terrain>();
    terrain->id = id;

    std::vector<std::string_view> rows;
    int first_row_line = 0;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        start = end + 1;
        if (rows.empty() && !line.empty() && line.front() == '#') {
            auto eq = line.find('=');
            if (eq == std::string_view::npos) throw LevelError("header line without '='", line_no, 1);
            apply_header(terrain->params, line.substr(1, eq - 1), line.substr(eq + 1), line_no);
            continue;
        }
        if (line.empty()) {
            if (rows.empty()) continue;
            // Trailing blank lines are allowed; anything after them is not.
            auto rest = text.substr(std::min(start, text.size()));
            if (rest.find_first_not_of("\r\n") != std::string_view::npos) {
                throw LevelError("blank line inside grid", line_no, 1);
            }
            break;
        }
        if (rows.empty()) first_row_line = line_no;
        rows.push_back(line);
        if (end == text.size()) break;
    }

    if (rows.empty()) throw LevelError("level has no grid", line_no, 1);
    const int height = static_cast<int>(rows.size());
    const int width = static_cast<int>(rows.front().size());
    if (width < 3 || height < 3) throw LevelError("grid must be at least 3x3", first_row_line, 1);

    GridGame g;
    terrain->width = width;
    terrain->height = height;
    terrain->walls.assign(static_cast<std::size_t>(width * height), 0);
    bool have_avatar = false;

    for (int y = 0; y < height; ++y) {
        const int line = first_row_line + y;
        if (static_cast<int>(rows[y].size()) != width) {
            throw LevelError("non-rectangular grid: expected width " + std::to_string(width), line,
                             static_cast<int>(std::min<std::size_t>(rows[y].size(), width)) + 1);
        }
        for (int x = 0; x < width; ++x) {
            const char c = rows[y][x];
            const int column = x + 1;
            if (spec.legend.find(c) == std::string::npos) {
                throw LevelError(std::string("unknown glyph '") + c + "' for " +
                                     std::string(game_name(id)), line, column);
            }
            const bool border = x == 0 || y == 0 || x == width - 1 || y == height - 1;
            if (border && c != 'w') throw LevelError("border cell must be a wall", line, column);
            const Pos p{x, y};
            switch (c) {
                case 'w': terrain->walls[static_cast<std::size_t>(y * width + x)] = 1; break;
                case 'A':
                    if (have_avatar) throw LevelError("duplicate avatar 'A'", line, column);
                    have_avatar = true;
                    g.avatar_ = p;
                    break;
                case 'x': terrain->exits.push_back(p); break;
                case 'c': g.cities_.push_back(p); break;
                case 'm': g.missiles_.push_back(p); break;
                case 'e': g.aliens_.push_back(p); break;
                case 'b': g.butterflies_.push_back(p); break;
                case 'z': g.zombies_.push_back(p); break;
                case 'h': g.honey_.push_back(p); break;
                case 'r':
                    if (g.racer_) throw LevelError("duplicate racer 'r'", line, column);
                    g.racer_ = p;
                    break;
                default: break;
            }
        }
    }
    if (!have_avatar) throw LevelError("level has no avatar 'A'", first_row_line, 1);
    if (id == GameId::Race && !g.racer_) throw LevelError("race level needs a racer 'r'", first_row_line, 1);
    if (id == GameId::Escape && terrain->exits.empty()) throw LevelError("escape level needs an exit 'x'", first_row_line, 1);

    g.terrain_ = std::move(terrain);
    return g;
}

GridGame GridGame::load_file(const std::filesystem::path& path, GameId id) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open level file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return load(buf.str(), id);
    } catch (const LevelError& e) {
        throw LevelError(path.string() + ": " + e.what(), e.line(), e.column());
    }
}

void GridGame::set_max_ticks(int max_ticks) {
    if (max_ticks < 1) throw std::invalid_argument("max-ticks must be >= 1");
    auto t = std::make_shared<Terrain>(*terrain_);
    t->params.max_ticks = max_ticks;
    terrain_ = std::move(t);
}

std::unique_ptr<Game> GridGame::clone() const { return std::make_unique<GridGame>(*this); }

std::span<const Action> GridGame::legal_actions() const { return spec().legal_actions; }

bool GridGame::stochastic() const { return spec().stochastic; }

bool GridGame::on_period(int period) const { return outcome_.tick % period == 0; }

void GridGame::move_avatar(Action a) {
    const Pos next = step(avatar_, a);
    if (!terrain_->wall(next)) avatar_ = next;
}

void GridGame::advance(Action action) {
    if (outcome_.terminal()) {
        throw IllegalAdvance("advance on terminal state of " + std::string(game_name(id())));
    }
    if (!is_legal(action)) {
        throw IllegalAdvance("action '" + std::string(action_name(action)) + "' is not legal in " +
                             std::string(game_name(id())));
    }
    switch (id()) {
        case GameId::Escape: step_escape(action); break;
        case GameId::Race: step_race(action); break;
        case GameId::Missiles: step_missiles(action); break;
        case GameId::Aliens: step_aliens(action); break;
        case GameId::Butterflies: step_butterflies(action); break;
        case GameId::Zombies: step_zombies(action); break;
    }
    ++outcome_.tick;
    if (!outcome_.terminal() && outcome_.tick >= params().max_ticks) {
        outcome_.status = spec().win_on_timeout ? Status::Win : Status::Loss;
    }
}

void GridGame::step_escape(Action a) {
    move_avatar(a);
    if (contains(terrain_->exits, avatar_)) {
        outcome_.score += 1.0;
        outcome_.status = Status::Win;
    }
}

// The finish line is the last interior column. The avatar moves first, so it
// wins a dead heat.
void GridGame::step_race(Action a) {
    const int finish = terrain_->width - 2;
    move_avatar(a);
    if (avatar_.x >= finish) {
        outcome_.score += 1.0;
        outcome_.status = Status::Win;
        return;
    }
    if (on_period(params().racer_period)) {
        const Pos next = step(*racer_, Right);
        if (!terrain_->wall(next)) racer_ = next;
    }
    if (racer_->x >= finish) outcome_.status = Status::Loss;
}

void GridGame::step_missiles(Action a) {
    if (a == Use) {
        auto hit = std::find_if(missiles_.begin(), missiles_.end(), [&](Pos m) {
            return std::abs(m.x - avatar_.x) <= 1 && std::abs(m.y - avatar_.y) <= 1;
        });
        if (hit != missiles_.end()) {
            missiles_.erase(hit);
            outcome_.score += 2.0;
        }
    } else {
        move_avatar(a);
    }
    if (on_period(params().missile_period)) {
        std::vector<Pos> falling;
        falling.reserve(missiles_.size());
        for (Pos m : missiles_) {
            const Pos next = step(m, Down);
            if (terrain_->wall(next)) continue;
            if (erase_at(cities_, next)) continue;
            falling.push_back(next);
        }
        missiles_ = std::move(falling);
    }
    if (cities_.empty()) outcome_.status = Status::Loss;
    else if (missiles_.empty()) outcome_.status = Status::Win;
}

void GridGame::step_aliens(Action a) {
    if (a == Use) {
        for (Pos shot = step(avatar_, Up); !terrain_->wall(shot); shot = step(shot, Up)) {
            if (erase_at(aliens_, shot)) {
                outcome_.score += 1.0;
                break;
            }
        }
        if (aliens_.empty()) {
            outcome_.status = Status::Win;
            return;
        }
    } else {
        move_avatar(a);
    }
    if (contains(bombs_, avatar_)) {
        outcome_.status = Status::Loss;
        return;
    }

    std::vector<Pos> falling;
    falling.reserve(bombs_.size());
    for (Pos b : bombs_) {
        const Pos next = step(b, Down);
        if (!terrain_->wall(next)) falling.push_back(next);
    }
    bombs_ = std::move(falling);

    if (on_period(params().alien_period)) {
        const bool blocked = std::any_of(aliens_.begin(), aliens_.end(), [&](Pos e) {
            return terrain_->wall({e.x + alien_dir_, e.y});
        });
        for (Pos& e : aliens_) {
            if (blocked) ++e.y;
            else e.x += alien_dir_;
        }
        if (blocked) alien_dir_ = -alien_dir_;
    }
    for (Pos e : aliens_) {
        const bool drop = rng_.bernoulli(params().p);
        const Pos below = step(e, Down);
        if (drop && !terrain_->wall(below) && !contains(bombs_, below)) bombs_.push_back(below);
    }

    if (contains(bombs_, avatar_)) {
        outcome_.status = Status::Loss;
        return;
    }
    for (Pos e : aliens_) {
        if (e.y >= avatar_.y) {
            outcome_.status = Status::Loss;
            return;
        }
    }
}

void GridGame::step_butterflies(Action a) {
    move_avatar(a);
    while (erase_at(butterflies_, avatar_)) outcome_.score += 2.0;
    for (Pos& b : butterflies_) {
        if (!rng_.bernoulli(params().p)) continue;
        const Pos next = step(b, kMoves[rng_.below(kMoves.size())]);
        if (!terrain_->wall(next)) b = next;
    }
    while (erase_at(butterflies_, avatar_)) outcome_.score += 2.0;
    if (butterflies_.empty()) outcome_.status = Status::Win;
}

// Zombie move: with probability beta the greedy step that shrinks the larger
// axis distance to the avatar (horizontal on ties), otherwise one of the
// other three directions uniformly. Walls block.
void GridGame::step_zombies(Action a) {
    move_avatar(a);
    if (erase_at(honey_, avatar_)) outcome_.score += 1.0;
    if (contains(zombies_, avatar_)) {
        outcome_.status = Status::Loss;
        return;
    }
    if (on_period(params().zombie_period)) {
        for (Pos& z : zombies_) {
            const int dx = avatar_.x - z.x;
            const int dy = avatar_.y - z.y;
            Action greedy;
            if (std::abs(dx) >= std::abs(dy) && dx != 0) greedy = dx > 0 ? Right : Left;
            else greedy = dy > 0 ? Down : Up;
            Action chosen = greedy;
            if (!rng_.bernoulli(params().beta)) {
                std::array<Action, 3> others{};
                std::size_t n = 0;
                for (Action m : kMoves) {
                    if (m != greedy) others[n++] = m;
                }
                chosen = others[rng_.below(others.size())];
            }
            const Pos next = step(z, chosen);
            if (!terrain_->wall(next)) z = next;
        }
    }
    if (contains(zombies_, avatar_)) outcome_.status = Status::Loss;
}

std::string GridGame::render() const {
    const Terrain& t = *terrain_;
    std::string grid(static_cast<std::size_t>(t.height * (t.width + 1)), '.');
    auto put = [&](Pos p, char c) { grid[static_cast<std::size_t>(p.y * (t.width + 1) + p.x)] = c; };
    for (int y = 0; y < t.height; ++y) {
        grid[static_cast<std::size_t>(y * (t.width + 1) + t.width)] = '\n';
        for (int x = 0; x < t.width; ++x) {
            if (t.wall({x, y})) put({x, y}, 'w');
        }
    }
    for (Pos p : t.exits) put(p, 'x');
    for (Pos p : cities_) put(p, 'c');
    for (Pos p : honey_) put(p, 'h');
    for (Pos p : bombs_) put(p, '*');
    for (Pos p : missiles_) put(p, 'm');
    for (Pos p : aliens_) put(p, 'e');
    for (Pos p : butterflies_) put(p, 'b');
    for (Pos p : zombies_) put(p, 'z');
    if (racer_) put(*racer_, 'r');
    put(avatar_, 'A');
    return grid;
}

bool GridGame::operator==(const GridGame& o) const {
    const bool same_terrain = terrain_ == o.terrain_ || *terrain_ == *o.terrain_;
    return same_terrain && outcome_ == o.outcome_ && rng_ == o.rng_ &&
           avatar_ == o.avatar_ && racer_ == o.racer_ && cities_ == o.cities_ &&
           missiles_ == o.missiles_ && aliens_ == o.aliens_ && alien_dir_ == o.alien_dir_ &&
           bombs_ == o.bombs_ && butterflies_ == o.butterflies_ && zombies_ == o.zombies_ &&
           honey_ == o.honey_;
}

GridGame advance(const GridGame& state, Action action) {
    GridGame next = state;
    next.advance(action);
    return next;
}

}  // namespace rhea::games
