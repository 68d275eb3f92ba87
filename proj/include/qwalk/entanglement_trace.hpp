#pragma once

#include <vector>
#include <utility>

namespace qwalk {

// Time series of an entanglement value, one entry per step with strictly
// increasing step numbers.
class EntanglementTrace {
public:
    struct Entry {
        int step;
        double value;
        bool operator==(const Entry&) const = default;
    };

    // Throws invalid_parameter if `step` does not exceed the last stored step.
    void push(int step, double value);

    const std::vector<Entry>& entries() const& { return entries_; }
    // Keeps `for (auto& e : make_trace().entries())` off a dead temporary.
    std::vector<Entry> entries() && { return std::move(entries_); }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Value at `step`; throws invalid_parameter if absent.
    double at_step(int step) const;

    // Mean of the values with first <= step <= last.
    double window_mean(int first, int last) const;
    // max - min of the values with first <= step <= last.
    double window_swing(int first, int last) const;

    bool operator==(const EntanglementTrace&) const = default;

private:
    std::vector<Entry> entries_;
};

}  // namespace qwalk
