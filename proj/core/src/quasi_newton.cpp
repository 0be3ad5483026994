#include "sehp/detail/quasi_newton.hpp"

#include <cmath>

namespace sehp::detail {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

constexpr Mat3 kIdentity{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};

Vec3 mul(const Mat3& m, const Vec3& x) {
    Vec3 out{};
    for (int r = 0; r < 3; ++r) {
        out[r] = m[r][0] * x[0] + m[r][1] * x[1] + m[r][2] * x[2];
    }
    return out;
}

double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm2(const Vec3& a) { return std::sqrt(dot(a, a)); }

double inf_norm(const Vec3& a) {
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

// inverse-Hessian update: H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
void bfgs_update(Mat3& h, const Vec3& s, const Vec3& y) {
    const double rho = 1.0 / dot(y, s);
    const Vec3 hy = mul(h, y);
    const double yhy = dot(y, hy);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            h[r][c] += -rho * (s[r] * hy[c] + hy[r] * s[c]) +
                       rho * (1.0 + rho * yhy) * s[r] * s[c];
        }
    }
}

bool within_bounds(const Vec3& x, double bound) {
    return std::abs(x[0]) <= bound && std::abs(x[1]) <= bound &&
           std::abs(x[2]) <= bound;
}

bool finite(const ObjectiveValue& v) {
    return std::isfinite(v.value) && std::isfinite(v.gradient[0]) &&
           std::isfinite(v.gradient[1]) && std::isfinite(v.gradient[2]);
}

}  // namespace

AscentResult maximize(const Objective& objective, const Vec3& x0,
                      const AscentOptions& options, std::vector<double>* trace) {
    AscentResult result;
    result.x = x0;

    auto current = objective(x0);
    if (!current || !finite(*current)) {
        return result;  // evaluable stays false
    }
    result.evaluable = true;
    if (trace) trace->push_back(current->value);

    Vec3 x = x0;
    double value = current->value;
    Vec3 grad = current->gradient;
    Mat3 h = kIdentity;
    bool h_seeded = false;

    for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
        if (inf_norm(grad) <= options.gradient_tolerance) {
            result.converged = true;
            break;
        }

        Vec3 direction = mul(h, grad);
        double slope = dot(direction, grad);
        if (!(slope > 0.0)) {
            // curvature information went bad; fall back to steepest ascent
            h = kIdentity;
            h_seeded = false;
            direction = grad;
            slope = dot(grad, grad);
        }

        bool accepted = false;
        for (double step = 1.0; step >= options.min_step;
             step *= options.backtrack_factor) {
            const Vec3 candidate{x[0] + step * direction[0],
                                 x[1] + step * direction[1],
                                 x[2] + step * direction[2]};
            if (!within_bounds(candidate, options.coordinate_bound)) continue;
            const auto trial = objective(candidate);
            if (!trial || !finite(*trial)) continue;
            if (trial->value < value + options.armijo_c1 * step * slope) continue;

            const Vec3 s{candidate[0] - x[0], candidate[1] - x[1],
                         candidate[2] - x[2]};
            const Vec3 y{grad[0] - trial->gradient[0], grad[1] - trial->gradient[1],
                         grad[2] - trial->gradient[2]};
            const double ys = dot(y, s);
            if (ys > 1e-10 * norm2(y) * norm2(s)) {
                if (!h_seeded) {
                    // Shanno-Phua scaling: start from a curvature-sized
                    // multiple of the identity before the first update
                    const double scale = ys / dot(y, y);
                    for (int r = 0; r < 3; ++r) h[r][r] = scale;
                    h_seeded = true;
                }
                bfgs_update(h, s, y);
            }
            x = candidate;
            value = trial->value;
            grad = trial->gradient;
            ++result.iterations;
            if (trace) trace->push_back(value);
            accepted = true;
            break;
        }
        if (!accepted) break;  // line search exhausted
    }

    result.x = x;
    result.value = value;
    result.gradient = grad;
    result.gradient_norm = inf_norm(grad);
    if (result.gradient_norm <= options.gradient_tolerance) {
        result.converged = true;
    }
    return result;
}

}  // namespace sehp::detail
