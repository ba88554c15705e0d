#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mipforge {

// Error taxonomy. The CLI maps these onto exit codes (see config.hpp).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct geometry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct constraint_violation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct infeasible_region_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct no_program_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct empty_program_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step budget ran out; carries the best state seen so far for diagnostics.
struct budget_error : std::runtime_error {
    budget_error(const std::string& msg, int steps, double best_min_prob)
        : std::runtime_error(msg), steps_used(steps), best_min_prob(best_min_prob) {}
    int steps_used = 0;
    double best_min_prob = 0.0;
};

// Training failed to reach the target accuracy inside the epoch budget.
struct non_convergence_error : std::runtime_error {
    non_convergence_error(const std::string& msg, std::vector<double> curve)
        : std::runtime_error(msg), loss_curve(std::move(curve)) {}
    std::vector<double> loss_curve;
};

// Rounding rule used across the project: round half away from zero.
inline int round_half_away(double x) {
    return static_cast<int>(x < 0 ? std::ceil(x - 0.5) : std::floor(x + 0.5));
}

inline int clamp_pixel(int v) { return v < 0 ? 0 : (v > 255 ? 255 : v); }

}  // namespace mipforge
