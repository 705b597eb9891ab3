#include "hankel/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hankel {

namespace {

double poly_eval(const std::vector<std::int64_t>& q, double x) {
    double acc = 0.0;
    for (std::size_t k = q.size(); k > 0; --k) acc = acc * x + static_cast<double>(q[k - 1]);
    return acc;
}

std::vector<std::int64_t> poly_deriv(const std::vector<std::int64_t>& q) {
    if (q.size() <= 1) return {0};
    std::vector<std::int64_t> d(q.size() - 1);
    for (std::size_t k = 1; k < q.size(); ++k)
        d[k - 1] = q[k] * static_cast<std::int64_t>(k);
    return d;
}

// value-first comparison; ties prefer the lexicographically smaller point,
// then the earlier kind (vertex < edge < interior)
bool better(const CriticalPoint& a, const CriticalPoint& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.s != b.s) return a.s < b.s;
    if (a.u != b.u) return a.u < b.u;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
}

}  // namespace

EdgeMax edge_maximize(const std::vector<std::int64_t>& q, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("edge_maximize: need lo < hi");
    const std::vector<std::int64_t> dq = poly_deriv(q);
    const std::vector<std::int64_t> ddq = poly_deriv(dq);
    std::vector<double> candidates{lo, hi};

    constexpr int kScan = 4096;
    double xa = lo, fa = poly_eval(dq, xa);
    for (int k = 1; k <= kScan; ++k) {
        const double xb = lo + (hi - lo) * k / kScan;
        const double fb = poly_eval(dq, xb);
        if (fa == 0.0) candidates.push_back(xa);
        if (fa * fb < 0.0) {
            double a = xa, b = xb;
            for (int it = 0; it < 60 && b - a > 1e-15; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = poly_eval(dq, mid);
                if (fm == 0.0) { a = b = mid; break; }
                if (fm * poly_eval(dq, a) < 0.0) b = mid; else a = mid;
            }
            double x = 0.5 * (a + b);
            for (int it = 0; it < 8; ++it) {
                const double f = poly_eval(dq, x);
                const double df = poly_eval(ddq, x);
                if (df == 0.0) break;
                const double step = f / df;
                x -= step;
                if (std::abs(step) < 1e-12) break;
            }
            if (x >= lo && x <= hi) candidates.push_back(x);
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0.0) candidates.push_back(xa);

    EdgeMax best{lo, poly_eval(q, lo)};
    for (double x : candidates) {
        const double v = poly_eval(q, x);
        if (v > best.value || (v == best.value && x < best.argmax)) best = {x, v};
    }
    return best;
}

std::vector<CriticalPoint> critical_points(const BivariatePoly& ps, const BivariatePoly& pu,
                                           const Box& region, int grid_n, double tol,
                                           const BivariatePoly* value_source,
                                           std::int64_t* abandoned_seeds) {
    if (grid_n < 1) throw std::invalid_argument("critical_points: grid_n must be positive");
    const BivariatePoly pss = ps.d_ds(), psu = ps.d_du();
    const BivariatePoly pus = pu.d_ds(), puu = pu.d_du();
    std::vector<CriticalPoint> roots;
    std::int64_t abandoned = 0;

    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            double s = region.s_lo + (region.s_hi - region.s_lo) * (i + 0.5) / grid_n;
            double u = region.u_lo + (region.u_hi - region.u_lo) * (j + 0.5) / grid_n;
            bool converged = false;
            for (int it = 0; it < 50; ++it) {
                const double f1 = ps.eval(s, u);
                const double f2 = pu.eval(s, u);
                if (std::max(std::abs(f1), std::abs(f2)) <= tol) { converged = true; break; }
                const double j11 = pss.eval(s, u), j12 = psu.eval(s, u);
                const double j21 = pus.eval(s, u), j22 = puu.eval(s, u);
                const double det = j11 * j22 - j12 * j21;
                if (std::abs(det) < 1e-30) { ++abandoned; break; }
                s -= (f1 * j22 - f2 * j12) / det;
                u -= (f2 * j11 - f1 * j21) / det;
                if (std::abs(s) > 1e3 || std::abs(u) > 1e3) break;  // diverged
            }
            if (!converged) continue;
            if (s < region.s_lo || s > region.s_hi || u < region.u_lo || u > region.u_hi) continue;
            bool duplicate = false;
            for (const auto& r : roots)
                if (std::max(std::abs(r.s - s), std::abs(r.u - u)) < 1e-6) { duplicate = true; break; }
            if (duplicate) continue;
            CriticalPoint cp;
            cp.s = s;
            cp.u = u;
            cp.residual = std::max(std::abs(ps.eval(s, u)), std::abs(pu.eval(s, u)));
            constexpr double kMargin = 1e-7;
            cp.kind = (s > kMargin && s < 1.0 - kMargin && u > kMargin && u < 1.0 - kMargin)
                          ? PointKind::interior
                          : PointKind::edge;
            cp.value = value_source ? value_source->eval(s, u) : 0.0;
            roots.push_back(cp);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        return a.s != b.s ? a.s < b.s : a.u < b.u;
    });
    if (abandoned_seeds) *abandoned_seeds = abandoned;
    return roots;
}

BoxMaxResult maximize_on_box(const BivariatePoly& p, int grid_n, double tol) {
    if (grid_n < 64) throw std::invalid_argument("maximize_on_box: grid_n must be >= 64");
    BoxMaxResult result;
    auto& cands = result.candidates;

    // vertices, exactly: the corner values are plain integer sums of coefficients
    const std::pair<double, double> corners[4] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (const auto& [vs, vu] : corners) {
        std::int64_t total = 0;
        for (int i = 0; i <= p.deg_s(); ++i)
            for (int j = 0; j <= p.deg_u(); ++j)
                if ((vs == 1.0 || i == 0) && (vu == 1.0 || j == 0)) total += p.coeff(i, j);
        cands.push_back({vs, vu, static_cast<double>(total), 0.0, PointKind::vertex});
    }

    // edge maxima of the four exact restrictions
    const Edge edges[4] = {Edge::s0, Edge::s1, Edge::u0, Edge::u1};
    for (Edge e : edges) {
        const EdgeMax m = edge_maximize(edge_restrict(p, e), 0.0, 1.0);
        CriticalPoint cp;
        cp.kind = PointKind::edge;
        cp.value = m.value;
        cp.residual = 0.0;
        switch (e) {
            case Edge::s0: cp.s = 0.0; cp.u = m.argmax; break;
            case Edge::s1: cp.s = 1.0; cp.u = m.argmax; break;
            case Edge::u0: cp.s = m.argmax; cp.u = 0.0; break;
            case Edge::u1: cp.s = m.argmax; cp.u = 1.0; break;
        }
        cands.push_back(cp);
    }

    // interior critical points of the gradient system; near-boundary roots
    // already belong to the edge pass above
    const auto [ps, pu] = grad(p);
    for (const auto& cp : critical_points(ps, pu, Box{-0.1, 1.1, -0.1, 1.1}, grid_n, tol, &p))
        if (cp.kind == PointKind::interior) cands.push_back(cp);

    const CriticalPoint* best = &cands.front();
    for (const auto& c : cands)
        if (better(c, *best)) best = &c;
    result.max_value = best->value;
    result.argmax_s = best->s;
    result.argmax_u = best->u;
    result.argmax_kind = best->kind;
    return result;
}

const char* kind_name(PointKind k) {
    switch (k) {
        case PointKind::vertex: return "vertex";
        case PointKind::edge: return "edge";
        case PointKind::interior: return "interior";
    }
    return "?";
}

}  // namespace hankel
