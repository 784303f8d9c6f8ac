#include "rhea/stat_tree.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace rhea::tree {

StatNode::StatNode(const StatNode& other)
    : action(other.action), visits(other.visits), total(other.total) {
    for (std::size_t i = 0; i < kActionCount; ++i) {
        if (other.children[i]) children[i] = std::make_unique<StatNode>(*other.children[i]);
    }
}

StatNode& StatNode::operator=(const StatNode& other) {
    if (this != &other) {
        StatNode copy(other);
        *this = std::move(copy);
    }
    return *this;
}

StatNode& StatNode::ensure_child(Action a) {
    auto& slot = children[action_index(a)];
    if (!slot) slot = std::make_unique<StatNode>(a);
    return *slot;
}

int StatNode::child_visits() const {
    int sum = 0;
    for (const auto& c : children) {
        if (c) sum += c->visits;
    }
    return sum;
}

std::size_t StatNode::subtree_size() const {
    std::size_t n = 1;
    for (const auto& c : children) {
        if (c) n += c->subtree_size();
    }
    return n;
}

bool StatNode::operator==(const StatNode& other) const {
    if (action != other.action || visits != other.visits) return false;
    if (std::bit_cast<std::uint64_t>(total) != std::bit_cast<std::uint64_t>(other.total)) return false;
    for (std::size_t i = 0; i < kActionCount; ++i) {
        const bool a = static_cast<bool>(children[i]);
        const bool b = static_cast<bool>(other.children[i]);
        if (a != b) return false;
        if (a && !(*children[i] == *other.children[i])) return false;
    }
    return true;
}

double ucb1(double mean, double k, int parent_visits, int child_visits) {
    if (child_visits < 1 || parent_visits < child_visits) {
        throw std::invalid_argument("ucb1 needs 1 <= child visits <= parent visits");
    }
    return mean + 2.0 * k * std::sqrt(2.0 * std::log(static_cast<double>(parent_visits)) / child_visits);
}

StatTree::StatTree(UcbParams params) : params_(params) {
    if (!(params_.k > 0.0)) throw std::invalid_argument("UCB constant K must be > 0");
}

void StatTree::observe_reward(double reward) {
    if (!min_ || reward < *min_) min_ = reward;
    if (!max_ || reward > *max_) max_ = reward;
}

void StatTree::backpropagate(std::span<const Action> path, double fitness) {
    if (path.empty()) throw std::invalid_argument("backpropagate needs a non-empty path");
    observe_reward(fitness);
    StatNode* node = &root_;
    node->visits += 1;
    node->total += fitness;
    for (Action a : path) {
        node = &node->ensure_child(a);
        node->visits += 1;
        node->total += fitness;
    }
}

void StatTree::reroot(Action fired) {
    auto& slot = root_.children[action_index(fired)];
    if (slot) {
        StatNode promoted = std::move(*slot);
        root_ = std::move(promoted);
        root_.action.reset();
    } else {
        root_ = StatNode{};
    }
    min_.reset();
    max_.reset();
}

void StatTree::reset() {
    root_ = StatNode{};
    min_.reset();
    max_.reset();
}

double StatTree::normalized_mean(const StatNode& node) const {
    const double mean = node.mean();
    if (params_.normalization == Normalization::None || !min_ || !max_) return mean;
    const double range = *max_ - *min_;
    if (range <= 0.0) return 0.5;
    return (mean - *min_) / range;
}

double StatTree::ucb1_value(int parent_visits, const StatNode& child) const {
    return ucb1(normalized_mean(child), params_.k, parent_visits, child.visits);
}

Selection StatTree::select_child(const StatNode& node, std::span<const Action> legal,
                                 SeededRng& rng) const {
    if (legal.empty()) throw std::invalid_argument("select_child needs at least one legal action");

    std::array<Action, kActionCount> pool{};
    std::size_t unvisited = 0;
    for (Action a : legal) {
        const StatNode* c = node.child(a);
        if (!c || c->visits == 0) pool[unvisited++] = a;
    }
    if (unvisited > 0) {
        const Action a = pool[rng.below(unvisited)];
        return {a, nullptr};
    }

    double best = -std::numeric_limits<double>::infinity();
    std::size_t ties = 0;
    for (Action a : legal) {
        const double v = ucb1_value(node.visits, *node.child(a));
        if (v > best) {
            best = v;
            ties = 0;
        }
        if (v == best) pool[ties++] = a;
    }
    const Action a = pool[ties == 1 ? 0 : rng.below(ties)];
    return {a, node.child(a)};
}

std::vector<Action> StatTree::best_path(int length, std::span<const Action> legal, SeededRng& rng) const {
    if (length < 1) throw std::invalid_argument("best_path length must be >= 1");
    std::vector<Action> path;
    path.reserve(static_cast<std::size_t>(length));
    const StatNode* node = &root_;
    while (node && static_cast<int>(path.size()) < length) {
        std::array<Action, kActionCount> ties{};
        std::size_t n = 0;
        double best = -std::numeric_limits<double>::infinity();
        for (Action a : legal) {
            const StatNode* c = node->child(a);
            if (!c || c->visits == 0) continue;
            const double m = c->mean();
            if (m > best) {
                best = m;
                n = 0;
            }
            if (m == best) ties[n++] = a;
        }
        if (n == 0) break;
        const Action a = ties[n == 1 ? 0 : rng.below(n)];
        path.push_back(a);
        node = node->child(a);
    }
    while (static_cast<int>(path.size()) < length) path.push_back(rng.pick(legal));
    return path;
}

std::vector<Action> StatTree::sample_ucb1_sequence(int length, std::span<const Action> legal,
                                                   SeededRng& rng) const {
    if (length < 1) throw std::invalid_argument("sample length must be >= 1");
    std::vector<Action> path;
    path.reserve(static_cast<std::size_t>(length));
    const StatNode* node = &root_;
    while (node && static_cast<int>(path.size()) < length) {
        const Selection s = select_child(*node, legal, rng);
        path.push_back(s.action);
        node = s.child;
    }
    while (static_cast<int>(path.size()) < length) path.push_back(rng.pick(legal));
    return path;
}

namespace {
void dump_node(const StatNode& node, int depth, std::string& out) {
    char line[128];
    std::snprintf(line, sizeof line, " n=%d W=%.17g\n", node.visits, node.total);
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += node.action ? action_name(*node.action) : std::string_view("root");
    out += line;
    for (const auto& c : node.children) {
        if (c) dump_node(*c, depth + 1, out);
    }
}
}  // namespace

std::string StatTree::dump() const {
    std::string out;
    dump_node(root_, 0, out);
    return out;
}

}  // namespace rhea::tree
