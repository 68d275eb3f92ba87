#include "qwalk/entanglement_trace.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

void EntanglementTrace::push(int step, double value) {
    if (!entries_.empty() && step <= entries_.back().step) {
        throw Error(ErrorKind::invalid_parameter, "trace steps must be strictly increasing");
    }
    entries_.push_back({step, value});
}

double EntanglementTrace::at_step(int step) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), step,
                                     [](const Entry& e, int s) { return e.step < s; });
    if (it == entries_.end() || it->step != step) {
        throw Error(ErrorKind::invalid_parameter, "trace has no entry for step " + std::to_string(step));
    }
    return it->value;
}

double EntanglementTrace::window_mean(int first, int last) const {
    double sum = 0.0;
    int count = 0;
    for (const auto& e : entries_) {
        if (e.step >= first && e.step <= last) {
            sum += e.value;
            ++count;
        }
    }
    if (count == 0) {
        throw Error(ErrorKind::invalid_parameter, "empty trace window");
    }
    return sum / count;
}

double EntanglementTrace::window_swing(int first, int last) const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& e : entries_) {
        if (e.step >= first && e.step <= last) {
            lo = std::min(lo, e.value);
            hi = std::max(hi, e.value);
        }
    }
    if (lo > hi) {
        throw Error(ErrorKind::invalid_parameter, "empty trace window");
    }
    return hi - lo;
}

}  // namespace qwalk
