#include "coxdepth/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace coxdepth {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// Monotone bucket queue for small nonnegative integer keys.
class BucketQueue {
public:
    explicit BucketQueue(std::size_t max_key) : buckets_(max_key + 1) {}

    void push(std::size_t key, ElementIndex value)
    {
        buckets_[key].push_back(value);
        ++size_;
    }

    bool empty() const noexcept { return size_ == 0; }

    // Smallest key first. Keys pushed after a pop are never below the last
    // popped key (label-setting with nonnegative weights).
    std::pair<std::size_t, ElementIndex> pop()
    {
        while (buckets_[cursor_].empty()) ++cursor_;
        const ElementIndex v = buckets_[cursor_].back();
        buckets_[cursor_].pop_back();
        --size_;
        return {cursor_, v};
    }

private:
    std::vector<std::vector<ElementIndex>> buckets_;
    std::size_t cursor_ = 0;
    std::size_t size_ = 0;
};

}  // namespace

std::vector<int> depth_oracle(const GroupBackend& backend)
{
    const auto reflections = backend.reflections();
    std::vector<int> weight;
    weight.reserve(reflections.size());
    for (ElementIndex t : reflections) weight.push_back(reflection_depth(backend, t));

    // dep(g) <= length(g) because simple reflections have weight one, so
    // tentative distances above max_length are never useful.
    const auto bound = static_cast<std::size_t>(backend.max_length());
    std::vector<int> dist(backend.order(), kUnreached);
    BucketQueue queue(bound);
    dist[backend.identity()] = 0;
    queue.push(0, backend.identity());
    while (!queue.empty()) {
        const auto [d, g] = queue.pop();
        if (static_cast<int>(d) != dist[g]) continue;
        for (std::size_t k = 0; k < reflections.size(); ++k) {
            const ElementIndex h = backend.multiply_reflection(g, k);
            const int nd = dist[g] + weight[k];
            if (nd < dist[h] && static_cast<std::size_t>(nd) <= bound) {
                dist[h] = nd;
                queue.push(static_cast<std::size_t>(nd), h);
            }
        }
    }
    return dist;
}

std::vector<int> reflection_length_oracle(const GroupBackend& backend)
{
    const std::size_t num_reflections = backend.reflections().size();
    std::vector<int> dist(backend.order(), -1);
    std::deque<ElementIndex> queue{backend.identity()};
    dist[backend.identity()] = 0;
    while (!queue.empty()) {
        const ElementIndex g = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < num_reflections; ++k) {
            const ElementIndex h = backend.multiply_reflection(g, k);
            if (dist[h] < 0) {
                dist[h] = dist[g] + 1;
                queue.push_back(h);
            }
        }
    }
    return dist;
}

namespace {

void extend(const GroupBackend& backend, const std::vector<int>& rlength, ElementIndex target,
            int remaining, ReflectionWord& suffix, std::vector<ReflectionWord>& out)
{
    if (remaining == 0) {
        if (target == backend.identity()) out.emplace_back(suffix.rbegin(), suffix.rend());
        return;
    }
    // target = t_1 ... t_r; choosing t_r = t leaves t_1 ... t_{r-1} = target * t.
    for (std::size_t k = 0; k < backend.reflections().size(); ++k) {
        const ElementIndex next = backend.multiply_reflection(target, k);
        if (rlength[next] > remaining - 1) continue;
        suffix.push_back(k);
        extend(backend, rlength, next, remaining - 1, suffix, out);
        suffix.pop_back();
    }
}

}  // namespace

std::vector<ReflectionWord> enumerate_min_factorizations(const GroupBackend& backend, ElementIndex g,
                                                         int budget)
{
    if (budget < 0 || budget > kMaxFactorizationBudget) {
        throw CapExceeded("factorization budget " + std::to_string(budget) + " outside 0.." +
                          std::to_string(kMaxFactorizationBudget));
    }
    if (backend.order() > kMaxFactorizationOrder) {
        throw CapExceeded(backend.kind().name() + " exceeds the factorization cap of " +
                          std::to_string(kMaxFactorizationOrder) + " elements");
    }
    const auto rlength = reflection_length_oracle(backend);
    std::vector<ReflectionWord> out;
    ReflectionWord suffix;
    if (rlength.at(g) <= budget) extend(backend, rlength, g, budget, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace coxdepth
