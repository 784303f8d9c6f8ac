#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rhea {

// Canonical order is the enumerator order; it is part of the on-disk format.
enum class Action : std::uint8_t { Up, Down, Left, Right, Use, Nil, Escape };

inline constexpr std::size_t kActionCount = 7;
inline constexpr std::array<Action, kActionCount> kAllActions = {
    Action::Up, Action::Down, Action::Left, Action::Right,
    Action::Use, Action::Nil, Action::Escape};

constexpr std::size_t action_index(Action a) { return static_cast<std::size_t>(a); }

std::string_view action_name(Action a);
// Accepts the names produced by action_name (case-sensitive).
std::optional<Action> parse_action(std::string_view name);

enum class Status : std::uint8_t { Ongoing, Win, Loss };

std::string_view status_name(Status s);

struct GameOutcome {
    Status status = Status::Ongoing;
    double score = 0.0;
    int tick = 0;

    bool terminal() const { return status != Status::Ongoing; }
    bool operator==(const GameOutcome&) const = default;
};

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("forward-model budget exhausted") {}
};

/// Forward-model call accounting for a single decision.
class BudgetMeter {
public:
    static constexpr int kDefaultLimit = 900;

    explicit BudgetMeter(int limit = kDefaultLimit);

    /// Charges `n` calls. Returns false and leaves `used` untouched when the
    /// charge would exceed the limit.
    [[nodiscard]] bool try_consume(int n = 1);
    /// Throwing variant of try_consume.
    void consume(int n = 1);

    void reset() { used_ = 0; }
    int limit() const { return limit_; }
    int used() const { return used_; }
    int remaining() const { return limit_ - used_; }
    bool exhausted() const { return used_ >= limit_; }

private:
    int limit_;
    int used_ = 0;
};

/// SplitMix64 stream keyed by (seed, stream id).
///
/// The generator state is initialised as mix(seed ^ mix(stream ^ C)) and each
/// draw adds the golden-ratio increment 0x9E3779B97F4A7C15 before applying the
/// SplitMix64 finaliser. Bounded integers use Lemire's multiply-shift with
/// rejection, doubles take the top 53 bits. No std distributions are used, so
/// draw sequences are identical on every platform.
class SeededRng {
public:
    using result_type = std::uint64_t;

    SeededRng() : SeededRng(0, 0) {}
    SeededRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64();
    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [0, 1).
    double uniform();
    bool bernoulli(double p) { return uniform() < p; }

    template <typename T>
    const T& pick(std::span<const T> items) {
        return items[static_cast<std::size_t>(below(items.size()))];
    }

    /// Child stream that depends only on (seed, stream, child_id), never on
    /// how many values the parent has drawn.
    SeededRng split(std::uint64_t child_id) const;

    // UniformRandomBitGenerator surface.
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return next_u64(); }

    bool operator==(const SeededRng&) const = default;

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t x);

/// 64-bit FNV-1a, used for stable hashing of names.
std::uint64_t fnv1a(std::string_view text, std::uint64_t basis = 0xcbf29ce484222325ULL);

}  // namespace rhea
