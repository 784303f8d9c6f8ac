#include "rhea/core.hpp"

namespace rhea {

namespace {
constexpr std::array<std::string_view, kActionCount> kActionNames = {
    "up", "down", "left", "right", "use", "nil", "escape"};
__extension__ using u128 = unsigned __int128;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ULL;
}  // namespace

std::string_view action_name(Action a) { return kActionNames[action_index(a)]; }

std::optional<Action> parse_action(std::string_view name) {
    for (std::size_t i = 0; i < kActionCount; ++i) {
        if (kActionNames[i] == name) return kAllActions[i];
    }
    return std::nullopt;
}

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Ongoing: return "ongoing";
        case Status::Win: return "win";
        case Status::Loss: return "loss";
    }
    return "?";
}

BudgetMeter::BudgetMeter(int limit) : limit_(limit) {
    if (limit < 0) throw std::invalid_argument("budget limit must be non-negative");
}

bool BudgetMeter::try_consume(int n) {
    if (n < 1) throw std::invalid_argument("consume requires n >= 1");
    if (used_ + n > limit_) return false;
    used_ += n;
    return true;
}

void BudgetMeter::consume(int n) {
    if (!try_consume(n)) throw BudgetExhausted();
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t basis) {
    std::uint64_t h = basis;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), state_(mix64(seed ^ mix64(stream ^ kStreamSalt))) {}

std::uint64_t SeededRng::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

std::uint64_t SeededRng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("SeededRng::below(0)");
    // Lemire, "Fast Random Integer Generation in an Interval" (2019).
    u128 m = static_cast<u128>(next_u64()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
        const std::uint64_t threshold = (0 - n) % n;
        while (low < threshold) {
            m = static_cast<u128>(next_u64()) * n;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double SeededRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

SeededRng SeededRng::split(std::uint64_t child_id) const {
    return SeededRng(mix64(seed_ + kGolden * (stream_ + 1)) ^ mix64(~seed_), child_id);
}

}  // namespace rhea
