#pragma once

#include <cstdint>
#include <vector>

#include "hankel/objectives.hpp"

namespace hankel {

enum class PointKind { vertex, edge, interior };

struct CriticalPoint {
    double s = 0.0, u = 0.0;
    double value = 0.0;
    double residual = 0.0;  // sup-norm of the gradient; 0 for vertex/edge entries
    PointKind kind = PointKind::interior;
};

struct BoxMaxResult {
    double max_value = 0.0;
    double argmax_s = 0.0, argmax_u = 0.0;
    PointKind argmax_kind = PointKind::vertex;
    std::vector<CriticalPoint> candidates;
};

struct Box {
    double s_lo, s_hi, u_lo, u_hi;
};

struct EdgeMax {
    double argmax;
    double value;
};

// Endpoint values plus every root of q' in (lo,hi), found by sign-change
// bisection over a 4096-interval scan and polished by Newton to 1e-12.
// q holds integer coefficients, index = exponent. Ties go to the smaller
// argument.
EdgeMax edge_maximize(const std::vector<std::int64_t>& q, double lo, double hi);

// Multistart Newton on the system (ps, pu) = (0, 0) with the analytic
// Jacobian, seeded from a grid_n x grid_n lattice over `region`. Converged
// roots (residual <= tol, at most 50 iterations) are deduplicated at distance
// 1e-6 and sorted lexicographically by (s, u). Points inside the open unit
// square by margin 1e-7 are marked interior; the rest are attributed to the
// boundary. value is filled from value_source when given. Seeds with a
// singular Jacobian are abandoned; `abandoned_seeds` reports how many, when
// requested.
std::vector<CriticalPoint> critical_points(const BivariatePoly& ps, const BivariatePoly& pu,
                                           const Box& region, int grid_n, double tol = 1e-10,
                                           const BivariatePoly* value_source = nullptr,
                                           std::int64_t* abandoned_seeds = nullptr);

// Global maximum of p over the closed unit square, decomposed into exact
// vertex values, edge maxima, and interior critical points. Deterministic for
// fixed inputs; equal maxima resolve to the lexicographically smallest
// argmax.
BoxMaxResult maximize_on_box(const BivariatePoly& p, int grid_n, double tol = 1e-10);

const char* kind_name(PointKind k);

}  // namespace hankel
