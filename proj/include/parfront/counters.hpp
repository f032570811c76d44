#pragma once

#include <cstdint>
#include <map>
#include <utility>

namespace parfront {

// Instrumentation attached to one reconstruction run. All counters are
// monotone while the run is active.
struct WorkCounters {
    std::uint64_t comparisons = 0;       // exact coordinate comparisons, total
    std::uint64_t retrievals = 0;
    std::uint64_t cell_sweep_comparisons = 0;
    std::uint64_t finger_sweep_comparisons = 0;
    double finger_log_sum = 0.0;         // sum of log2(b_i - a_i) over finger insertions
    std::uint64_t finger_insertions = 0; // k
    std::uint64_t finger_tree_size = 0;  // m, at the end of the run
    std::uint64_t fiddly_points = 0;     // points processed without insertion
    // per processed cell: t = |own AB| + |AB of up/right/diag neighbours|
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> per_cell_t;

    void add(const WorkCounters& o) {
        comparisons += o.comparisons;
        retrievals += o.retrievals;
        cell_sweep_comparisons += o.cell_sweep_comparisons;
        finger_sweep_comparisons += o.finger_sweep_comparisons;
        finger_log_sum += o.finger_log_sum;
        finger_insertions += o.finger_insertions;
        finger_tree_size += o.finger_tree_size;
        fiddly_points += o.fiddly_points;
        for (const auto& [k, v] : o.per_cell_t) per_cell_t[k] += v;
    }
};

namespace detail {
inline thread_local std::uint64_t* active_comparison_counter = nullptr;
}

// Scoped redirection of comparison ticks into one counter field.
class CountScope {
public:
    explicit CountScope(std::uint64_t& slot)
        : previous_(detail::active_comparison_counter) {
        detail::active_comparison_counter = &slot;
    }
    ~CountScope() { detail::active_comparison_counter = previous_; }
    CountScope(const CountScope&) = delete;
    CountScope& operator=(const CountScope&) = delete;

private:
    std::uint64_t* previous_;
};

inline void tick(std::uint64_t n = 1) {
    if (detail::active_comparison_counter) *detail::active_comparison_counter += n;
}

} // namespace parfront
