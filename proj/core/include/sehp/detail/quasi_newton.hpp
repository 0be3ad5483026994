#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace sehp::detail {

using Vec3 = std::array<double, 3>;

struct ObjectiveValue {
    double value = 0.0;
    Vec3 gradient{0.0, 0.0, 0.0};
};

// Returns nullopt where the objective is not finitely evaluable; the line
// search treats such points as rejected.
using Objective = std::function<std::optional<ObjectiveValue>(const Vec3&)>;

struct AscentOptions {
    std::size_t max_iterations = 500;
    double gradient_tolerance = 1e-6;  // infinity norm
    double armijo_c1 = 1e-4;
    double backtrack_factor = 0.5;
    double min_step = 1e-20;
    // iterates are confined to |x_k| <= coordinate_bound; trial points
    // outside are rejected by the line search
    double coordinate_bound = 60.0;
};

struct AscentResult {
    Vec3 x{0.0, 0.0, 0.0};
    double value = 0.0;
    Vec3 gradient{0.0, 0.0, 0.0};
    double gradient_norm = 0.0;
    std::size_t iterations = 0;  // accepted steps
    bool converged = false;
    bool evaluable = false;  // objective was finite at the starting point
};

// BFGS ascent with backtracking line search enforcing sufficient increase.
// Accepted iterates never decrease the objective. If trace is non-null, the
// value of every accepted iterate is appended, starting with the initial
// point.
AscentResult maximize(const Objective& objective, const Vec3& x0,
                      const AscentOptions& options,
                      std::vector<double>* trace = nullptr);

}  // namespace sehp::detail
