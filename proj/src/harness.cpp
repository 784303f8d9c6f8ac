#include "rhea/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace rhea::bench {

namespace {

using games::GameId;
using games::GridGame;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.size() - start : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename T>
T to_number(std::string_view text, std::string_view what) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

// Splits CSV text into rows of fields, honouring RFC 4180 quoting.
std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            if (any || !field.empty()) {
                row.push_back(std::move(field));
                rows.push_back(std::move(row));
            }
            row.clear();
            field.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) throw std::runtime_error("unterminated quoted CSV field");
    if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

constexpr std::string_view kCsvHeader = "agent,game,level,seed,win,score,ticks,fm_calls,wall_ms";

int variant_rank(const std::string& name) {
    for (std::size_t i = 0; i < agents::kAllVariants.size(); ++i) {
        if (agents::variant_name(agents::kAllVariants[i]) == name) return static_cast<int>(i);
    }
    return static_cast<int>(agents::kAllVariants.size());
}

int game_rank(const std::string& name) {
    if (auto g = games::parse_game(name)) return static_cast<int>(*g);
    return static_cast<int>(games::kAllGames.size());
}

template <typename RankFn>
std::vector<std::string> ordered_names(std::vector<std::string> names, RankFn rank) {
    std::sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
        const int ra = rank(a);
        const int rb = rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

}  // namespace

void RunSpec::validate() const {
    if (agents.empty() || games.empty() || levels.empty()) throw std::invalid_argument("run needs agents, games and levels");
    if (repetitions < 1) throw std::invalid_argument("reps must be >= 1");
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    if (max_ticks && *max_ticks < 1) throw std::invalid_argument("max-ticks must be >= 1");
    params.validate();
    for (GameId g : games) {
        for (int level : levels) {
            const auto path = level_path(levels_dir, g, level);
            if (!std::filesystem::exists(path)) throw std::runtime_error("missing level file " + path.string());
        }
    }
}

std::vector<int> parse_levels(std::string_view text) {
    std::vector<int> levels;
    for (const std::string& part : split(text, ',')) {
        if (part.empty()) continue;
        const auto dash = part.find('-');
        if (dash == std::string::npos) {
            levels.push_back(to_number<int>(part, "level"));
            continue;
        }
        const int lo = to_number<int>(trim(std::string_view(part).substr(0, dash)), "level");
        const int hi = to_number<int>(trim(std::string_view(part).substr(dash + 1)), "level");
        if (lo > hi) throw std::invalid_argument("empty level range '" + part + "'");
        for (int l = lo; l <= hi; ++l) levels.push_back(l);
    }
    if (levels.empty()) throw std::invalid_argument("no levels in '" + std::string(text) + "'");
    return levels;
}

bool apply_setting(RunSpec& spec, RunOptions& options, std::string_view key, std::string_view raw) {
    const std::string value = trim(raw);
    if (key == "agents") {
        spec.agents.clear();
        for (const auto& name : split(value, ',')) spec.agents.push_back(agents::parse_variant(name));
    } else if (key == "games") {
        spec.games.clear();
        for (const auto& name : split(value, ',')) {
            auto g = games::parse_game(name);
            if (!g) throw std::invalid_argument("unknown game '" + name + "'");
            spec.games.push_back(*g);
        }
    } else if (key == "levels") {
        spec.levels = parse_levels(value);
    } else if (key == "reps" || key == "repetitions") {
        spec.repetitions = to_number<int>(value, key);
    } else if (key == "seed") {
        spec.base_seed = to_number<std::uint64_t>(value, key);
    } else if (key == "budget") {
        spec.budget = to_number<int>(value, key);
        spec.params.budget = spec.budget;
    } else if (key == "max-ticks") {
        spec.max_ticks = to_number<int>(value, key);
    } else if (key == "levels-dir") {
        spec.levels_dir = value;
    } else if (key == "population-size") {
        spec.params.population_size = to_number<int>(value, key);
    } else if (key == "genome-length") {
        spec.params.genome_length = to_number<int>(value, key);
    } else if (key == "mutation-rate") {
        spec.params.mutation_rate = to_number<double>(value, key);
    } else if (key == "tournament-size") {
        spec.params.tournament_size = to_number<int>(value, key);
    } else if (key == "elites") {
        spec.params.elites = to_number<int>(value, key);
    } else if (key == "ucb-K") {
        spec.params.ucb.k = to_number<double>(value, key);
    } else if (key == "win-bonus") {
        spec.params.win_bonus = to_number<double>(value, key);
    } else if (key == "out") {
        options.out_dir = value;
    } else if (key == "format") {
        if (value != "csv" && value != "json") throw std::invalid_argument("format must be csv or json");
        options.format = value;
    } else if (key == "parallel") {
        options.parallel = to_number<int>(value, key);
    } else {
        return false;
    }
    return true;
}

void load_config(const std::filesystem::path& path, RunSpec& spec, RunOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path.string());
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = trim(std::string_view(t).substr(0, eq));
        if (!apply_setting(spec, options, key, std::string_view(t).substr(eq + 1))) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
}

std::filesystem::path level_path(const std::filesystem::path& dir, GameId game, int level) {
    return dir / std::string(games::game_name(game)) / ("level" + std::to_string(level) + ".txt");
}

void EpisodeAudit::merge(const EpisodeAudit& o) {
    decisions += o.decisions;
    over_budget += o.over_budget;
    depth_mismatches += o.depth_mismatches;
    shim_mismatches += o.shim_mismatches;
    max_used = std::max(max_used, o.max_used);
}

std::uint64_t episode_seed(std::uint64_t base_seed, std::string_view agent, std::string_view game,
                           int level, int repetition) {
    std::uint64_t h = mix64(base_seed);
    h = mix64(h ^ fnv1a(agent));
    h = mix64(h ^ fnv1a(game));
    h = mix64(h ^ static_cast<std::uint64_t>(level));
    h = mix64(h ^ (static_cast<std::uint64_t>(repetition) << 32));
    return h;
}

EpisodeResult run_episode(agents::Variant variant, const evo::EvoParams& params, const GridGame& initial,
                          int level, std::uint64_t seed, int budget,
                          const std::function<void(const TraceStep&)>& trace) {
    const auto start = std::chrono::steady_clock::now();
    EpisodeResult result;
    EpisodeRecord& rec = result.record;
    rec.agent = std::string(agents::variant_name(variant));
    rec.game = std::string(games::game_name(initial.id()));
    rec.level = level;
    rec.seed = seed;

    const SeededRng root(seed, 0);
    GridGame real = initial;
    real.reseed(root.split(1));
    SeededRng agent_rng = root.split(2);

    evo::EvoParams p = params;
    p.budget = budget;
    agents::Agent agent(variant, p);
    auto counter = std::make_shared<std::int64_t>(0);

    while (!real.outcome().terminal()) {
        BudgetMeter meter(budget);
        CountingGame shim(real.clone(), counter);
        const std::int64_t before = *counter;
        const agents::Decision d = agent.decide(shim, meter, agent_rng);
        const std::int64_t counted = *counter - before;

        EpisodeAudit& a = result.audit;
        ++a.decisions;
        a.max_used = std::max(a.max_used, meter.used());
        if (meter.used() > budget) ++a.over_budget;
        if (d.stats.depth_sum != meter.used()) ++a.depth_mismatches;
        if (counted != meter.used()) ++a.shim_mismatches;
        rec.fm_calls += meter.used();

        real.advance(d.action);
        if (trace) {
            trace({real.outcome().tick, d.action, real.outcome().score, meter.used(), real.outcome().status});
        }
    }
    rec.win = real.outcome().status == Status::Win ? 1 : 0;
    rec.score = real.outcome().score;
    rec.ticks = real.outcome().tick;
    rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return result;
}

MatrixResult run_matrix(const RunSpec& spec, int parallelism) {
    spec.validate();
    struct Cell {
        agents::Variant agent;
        GameId game;
        int level;
        int rep;
    };
    std::vector<Cell> cells;
    for (auto a : spec.agents) {
        for (auto g : spec.games) {
            for (int l : spec.levels) {
                for (int r = 0; r < spec.repetitions; ++r) cells.push_back({a, g, l, r});
            }
        }
    }

    std::map<std::pair<GameId, int>, GridGame> prototypes;
    for (auto g : spec.games) {
        for (int l : spec.levels) {
            GridGame level = GridGame::load_file(level_path(spec.levels_dir, g, l), g);
            if (spec.max_ticks) level.set_max_ticks(*spec.max_ticks);
            prototypes.emplace(std::make_pair(g, l), std::move(level));
        }
    }

    std::vector<std::optional<EpisodeResult>> slots(cells.size());
    std::vector<std::string> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const Cell& c = cells[i];
            const std::string agent(agents::variant_name(c.agent));
            const std::string game(games::game_name(c.game));
            const std::uint64_t seed = episode_seed(spec.base_seed, agent, game, c.level, c.rep);
            try {
                slots[i] = run_episode(c.agent, spec.params, prototypes.at({c.game, c.level}), c.level, seed,
                                       spec.budget);
            } catch (const std::exception& e) {
                errors[i] = agent + "/" + game + "/level" + std::to_string(c.level) + "/seed " +
                            std::to_string(seed) + ": " + e.what();
            }
        }
    };

    const int threads = std::max(1, parallelism);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    MatrixResult out;
    out.records.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (slots[i]) {
            out.records.push_back(std::move(slots[i]->record));
            out.audit.merge(slots[i]->audit);
        } else {
            out.failures.push_back(std::move(errors[i]));
        }
    }
    sort_canonical(out.records);
    return out;
}

void sort_canonical(std::vector<EpisodeRecord>& records) {
    std::sort(records.begin(), records.end(), [](const EpisodeRecord& a, const EpisodeRecord& b) {
        return std::tie(a.agent, a.game, a.level, a.seed) < std::tie(b.agent, b.game, b.level, b.seed);
    });
}

std::string to_csv(const std::vector<EpisodeRecord>& records, Timing timing) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : records) {
        out += csv_field(r.agent) + ',' + csv_field(r.game) + ',' + std::to_string(r.level) + ',' +
               std::to_string(r.seed) + ',' + std::to_string(r.win) + ',' + format_double(r.score) + ',' +
               std::to_string(r.ticks) + ',' + std::to_string(r.fm_calls) + ',' +
               std::to_string(timing == Timing::Keep ? r.wall_ms : 0) + '\n';
    }
    return out;
}

std::vector<EpisodeRecord> parse_csv(std::string_view text) {
    const auto rows = csv_rows(text);
    if (rows.empty()) throw std::runtime_error("CSV has no header");
    std::string header;
    for (std::size_t i = 0; i < rows[0].size(); ++i) header += (i ? "," : "") + rows[0][i];
    if (header != kCsvHeader) throw std::runtime_error("unexpected CSV header: " + header);

    std::vector<EpisodeRecord> records;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& f = rows[i];
        if (f.size() != 9) throw std::runtime_error("CSV row " + std::to_string(i + 1) + " has " + std::to_string(f.size()) + " fields");
        EpisodeRecord r;
        r.agent = f[0];
        r.game = f[1];
        r.level = to_number<int>(f[2], "level");
        r.seed = to_number<std::uint64_t>(f[3], "seed");
        r.win = to_number<int>(f[4], "win");
        r.score = to_number<double>(f[5], "score");
        r.ticks = to_number<int>(f[6], "ticks");
        r.fm_calls = to_number<std::int64_t>(f[7], "fm_calls");
        r.wall_ms = to_number<std::int64_t>(f[8], "wall_ms");
        if (r.win != 0 && r.win != 1) throw std::runtime_error("win must be 0 or 1 in CSV row " + std::to_string(i + 1));
        records.push_back(std::move(r));
    }
    return records;
}

std::string to_json(const std::vector<EpisodeRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back({{"agent", r.agent}, {"game", r.game}, {"level", r.level}, {"seed", r.seed},
                       {"win", r.win}, {"score", r.score}, {"ticks", r.ticks}, {"fm_calls", r.fm_calls},
                       {"wall_ms", r.wall_ms}});
    }
    return arr.dump(2) + '\n';
}

std::vector<EpisodeRecord> parse_json(std::string_view text) {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::runtime_error("results JSON must be an array");
    std::vector<EpisodeRecord> records;
    for (const auto& o : arr) {
        EpisodeRecord r;
        r.agent = o.at("agent").get<std::string>();
        r.game = o.at("game").get<std::string>();
        r.level = o.at("level").get<int>();
        r.seed = o.at("seed").get<std::uint64_t>();
        r.win = o.at("win").get<int>();
        r.score = o.at("score").get<double>();
        r.ticks = o.at("ticks").get<int>();
        r.fm_calls = o.at("fm_calls").get<std::int64_t>();
        r.wall_ms = o.at("wall_ms").get<std::int64_t>();
        records.push_back(std::move(r));
    }
    return records;
}

void write_results(const std::vector<EpisodeRecord>& records, const std::filesystem::path& path,
                   std::string_view format) {
    std::string body;
    if (format == "csv") body = to_csv(records);
    else if (format == "json") body = to_json(records);
    else throw std::invalid_argument("unknown results format '" + std::string(format) + "'");

    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << body;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<EpisodeRecord> read_results(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return path.extension() == ".json" ? parse_json(buf.str()) : parse_csv(buf.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

ReportBundle summarize(const std::vector<EpisodeRecord>& records) {
    ReportBundle b;
    std::vector<std::string> agent_names;
    std::vector<std::string> game_names;
    std::map<std::pair<std::string, std::string>, std::pair<std::vector<double>, std::vector<double>>> samples;
    for (const auto& r : records) {
        agent_names.push_back(r.agent);
        game_names.push_back(r.game);
        auto& s = samples[{r.agent, r.game}];
        s.first.push_back(r.win);
        s.second.push_back(r.score);
    }
    b.agents = ordered_names(std::move(agent_names), variant_rank);
    b.games = ordered_names(std::move(game_names), game_rank);
    if (b.agents.size() < 2) throw std::invalid_argument("a report needs at least two agents");

    for (const auto& [key, s] : samples) {
        b.cells[key] = {stats::summarize(s.first), stats::summarize(s.second)};
    }

    for (const auto& game : b.games) {
        std::map<std::string, double> rates;
        std::map<std::string, double> scores;
        for (const auto& agent : b.agents) {
            auto it = b.cells.find({agent, game});
            if (it == b.cells.end()) break;
            rates[agent] = it->second.wins.mean;
            scores[agent] = it->second.scores.mean;
        }
        if (rates.size() != b.agents.size() || rates.size() > stats::kF1Points.size()) continue;
        SeededRng tiebreak(fnv1a(game), 0);
        b.f1_per_game[game] = stats::f1_points_for_game(rates, scores, tiebreak);
    }
    for (const auto& agent : b.agents) b.f1_totals[agent] = 0;
    for (const auto& [game, points] : b.f1_per_game) {
        for (const auto& [agent, p] : points) b.f1_totals[agent] += p;
    }

    for (const auto& row : b.agents) {
        for (const auto& col : b.agents) {
            if (row == col) continue;
            int wins = 0;
            int scores = 0;
            for (const auto& game : b.games) {
                auto ra = samples.find({row, game});
                auto ca = samples.find({col, game});
                if (ra == samples.end() || ca == samples.end()) continue;
                const auto& rs = ra->second;
                const auto& cs = ca->second;
                const auto wt = stats::mann_whitney(rs.first, cs.first);
                if (wt.significant && b.cells[{row, game}].wins.mean > b.cells[{col, game}].wins.mean) ++wins;
                const auto st = stats::mann_whitney(rs.second, cs.second);
                if (st.significant && b.cells[{row, game}].scores.mean > b.cells[{col, game}].scores.mean) ++scores;
            }
            b.win_significance[{row, col}] = wins;
            b.score_significance[{row, col}] = scores;
        }
    }
    return b;
}

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

void matrix_table(std::ostringstream& os, const ReportBundle& b,
                  const std::map<std::pair<std::string, std::string>, int>& counts) {
    os << "| |";
    for (const auto& a : b.agents) os << ' ' << a << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < b.agents.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& row : b.agents) {
        os << "| " << row << " |";
        for (const auto& col : b.agents) {
            if (row == col) os << " -- |";
            else os << ' ' << counts.at({row, col}) << " |";
        }
        os << '\n';
    }
}

void f1_table(std::ostringstream& os, const ReportBundle& b, const std::vector<std::string>& games) {
    os << "| Agent |";
    for (const auto& g : games) os << ' ' << g << " |";
    os << " Total |\n|---|";
    for (std::size_t i = 0; i <= games.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& a : b.agents) {
        os << "| " << a << " |";
        int total = 0;
        for (const auto& g : games) {
            const int p = b.f1_per_game.at(g).at(a);
            total += p;
            os << ' ' << p << " |";
        }
        os << ' ' << total << " |\n";
    }
}

}  // namespace

std::string render_report(const ReportBundle& b) {
    std::ostringstream os;
    os << "# Tournament report\n\n## Mean wins (± standard deviation)\n\n| Game |";
    for (const auto& a : b.agents) os << ' ' << a << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < b.agents.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& g : b.games) {
        os << "| " << g << " |";
        for (const auto& a : b.agents) {
            auto it = b.cells.find({a, g});
            if (it == b.cells.end()) os << " n/a |";
            else os << ' ' << fixed(it->second.wins.mean, 3) << " (± " << fixed(it->second.wins.sd, 2) << ") |";
        }
        os << '\n';
    }

    os << "\n## Mean score (± standard deviation)\n\n| Game |";
    for (const auto& a : b.agents) os << ' ' << a << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < b.agents.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& g : b.games) {
        os << "| " << g << " |";
        for (const auto& a : b.agents) {
            auto it = b.cells.find({a, g});
            if (it == b.cells.end()) os << " n/a |";
            else os << ' ' << fixed(it->second.scores.mean, 3) << " (± " << fixed(it->second.scores.sd, 2) << ") |";
        }
        os << '\n';
    }

    std::vector<std::string> stochastic;
    std::vector<std::string> deterministic;
    for (const auto& g : b.games) {
        if (!b.f1_per_game.contains(g)) continue;
        auto id = games::parse_game(g);
        (id && games::game_spec(*id).stochastic ? stochastic : deterministic).push_back(g);
    }
    if (!stochastic.empty()) {
        os << "\n## F1 points, stochastic games\n\n";
        f1_table(os, b, stochastic);
    }
    if (!deterministic.empty()) {
        os << "\n## F1 points, deterministic games\n\n";
        f1_table(os, b, deterministic);
    }

    std::vector<std::pair<std::string, int>> ranking(b.f1_totals.begin(), b.f1_totals.end());
    std::stable_sort(ranking.begin(), ranking.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
    os << "\n## F1 totals\n\n| Rank | Agent | F1 points |\n|---|---|---|\n";
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        os << "| " << i + 1 << " | " << ranking[i].first << " | " << ranking[i].second << " |\n";
    }

    os << "\n## Games where the row agent has significantly better win rates (Mann-Whitney, p < 0.05)\n\n";
    matrix_table(os, b, b.win_significance);
    os << "\n## Games where the row agent has significantly better scores (Mann-Whitney, p < 0.05)\n\n";
    matrix_table(os, b, b.score_significance);
    return os.str();
}

}  // namespace rhea::bench
