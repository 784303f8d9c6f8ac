#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rhea/agents.hpp"
#include "rhea/evolution.hpp"
#include "rhea/grid_games.hpp"
#include "rhea/stats.hpp"

namespace rhea::bench {

struct RunSpec {
    std::vector<agents::Variant> agents{agents::kAllVariants.begin(), agents::kAllVariants.end()};
    std::vector<games::GameId> games{games::kAllGames.begin(), games::kAllGames.end()};
    std::vector<int> levels{0, 1, 2, 3, 4};
    int repetitions = 20;
    std::uint64_t base_seed = 20200101;
    int budget = BudgetMeter::kDefaultLimit;
    std::optional<int> max_ticks;
    std::filesystem::path levels_dir = "levels";
    evo::EvoParams params{};

    /// Throws std::invalid_argument (bad values) or std::runtime_error
    /// (missing level files).
    void validate() const;
};

/// Output/CLI options that do not affect results.
struct RunOptions {
    std::filesystem::path out_dir = "results";
    std::string format = "csv";
    int parallel = 1;
};

/// Applies one `key=value` setting. Returns false for keys it does not know.
bool apply_setting(RunSpec& spec, RunOptions& options, std::string_view key, std::string_view value);
/// Reads a flat `key=value` config file (`#` comments, blank lines ignored).
void load_config(const std::filesystem::path& path, RunSpec& spec, RunOptions& options);
/// "0-4", "1,3" or a mix such as "0,2-3".
std::vector<int> parse_levels(std::string_view text);

std::filesystem::path level_path(const std::filesystem::path& dir, games::GameId game, int level);

struct EpisodeRecord {
    std::string agent;
    std::string game;
    int level = 0;
    std::uint64_t seed = 0;
    int win = 0;
    double score = 0.0;
    int ticks = 0;
    std::int64_t fm_calls = 0;
    std::int64_t wall_ms = 0;

    bool operator==(const EpisodeRecord&) const = default;
};

/// Budget bookkeeping cross-checked against a counting forward-model shim.
struct EpisodeAudit {
    int decisions = 0;
    int over_budget = 0;        // decisions with meter.used above the limit
    int depth_mismatches = 0;   // decisions where summed rollout depth != meter.used
    int shim_mismatches = 0;    // decisions where counted advances != meter.used
    int max_used = 0;

    bool clean() const { return over_budget == 0 && depth_mismatches == 0 && shim_mismatches == 0; }
    void merge(const EpisodeAudit& other);
};

struct TraceStep {
    int tick = 0;
    Action action = Action::Nil;
    double score = 0.0;
    int fm_calls = 0;
    Status status = Status::Ongoing;
};

struct EpisodeResult {
    EpisodeRecord record;
    EpisodeAudit audit;
};

/// Stable hash of the cell coordinates; independent of scheduling order.
std::uint64_t episode_seed(std::uint64_t base_seed, std::string_view agent, std::string_view game,
                           int level, int repetition);

/// Plays one episode to Win, Loss or max-ticks. The action fired on the real
/// game is not charged to the meter.
EpisodeResult run_episode(agents::Variant variant, const evo::EvoParams& params,
                          const games::GridGame& initial, int level, std::uint64_t seed, int budget,
                          const std::function<void(const TraceStep&)>& trace = {});

struct MatrixResult {
    std::vector<EpisodeRecord> records;
    EpisodeAudit audit;
    std::vector<std::string> failures;
};

/// Runs every (agent, game, level, repetition) cell. Records come back in
/// canonical order whatever the parallelism.
MatrixResult run_matrix(const RunSpec& spec, int parallelism);

void sort_canonical(std::vector<EpisodeRecord>& records);

enum class Timing { Keep, Zero };

std::string to_csv(const std::vector<EpisodeRecord>& records, Timing timing = Timing::Keep);
std::vector<EpisodeRecord> parse_csv(std::string_view text);
std::string to_json(const std::vector<EpisodeRecord>& records);
std::vector<EpisodeRecord> parse_json(std::string_view text);

void write_results(const std::vector<EpisodeRecord>& records, const std::filesystem::path& path,
                   std::string_view format);
std::vector<EpisodeRecord> read_results(const std::filesystem::path& path);

struct CellSummary {
    stats::SampleSummary wins;
    stats::SampleSummary scores;
};

struct ReportBundle {
    std::vector<std::string> agents;
    std::vector<std::string> games;
    std::map<std::pair<std::string, std::string>, CellSummary> cells;  // (agent, game)
    std::map<std::string, stats::F1Assignment> f1_per_game;            // games every agent played
    std::map<std::string, int> f1_totals;
    /// (row, column) -> number of games where row is significantly better.
    std::map<std::pair<std::string, std::string>, int> win_significance;
    std::map<std::pair<std::string, std::string>, int> score_significance;
};

ReportBundle summarize(const std::vector<EpisodeRecord>& records);
std::string render_report(const ReportBundle& bundle);

}  // namespace rhea::bench
