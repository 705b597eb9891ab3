#include "hankel/caratheodory.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hankel {

namespace {

constexpr double kTol = 1e-12;

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double to_unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

cplx sq(cplx x) { return x * x; }
cplx cube(cplx x) { return x * x * x; }

}  // namespace

SchurParams::SchurParams(cplx t1_, cplx t2_, cplx t3_, cplx t4_)
    : t1(t1_), t2(t2_), t3(t3_), t4(t4_) {
    for (const cplx& t : {t1, t2, t3, t4})
        if (std::abs(t) > 1.0 + kTol)
            throw std::domain_error("SchurParams: parameter outside the closed unit disk");
}

HerglotzAtoms::HerglotzAtoms(std::vector<double> w, std::vector<cplx> x)
    : weights(std::move(w)), points(std::move(x)) {
    if (weights.size() != points.size() || weights.empty())
        throw std::invalid_argument("HerglotzAtoms: need equally many weights and points");
    double total = 0.0;
    for (double wk : weights) {
        if (wk < -kTol) throw std::domain_error("HerglotzAtoms: negative weight");
        total += wk;
    }
    if (std::abs(total - 1.0) > kTol)
        throw std::domain_error("HerglotzAtoms: weights must sum to 1");
    for (const cplx& xk : points)
        if (std::abs(std::abs(xk) - 1.0) > kTol)
            throw std::domain_error("HerglotzAtoms: points must be unimodular");
}

CaratheodoryCoeffs schur_to_c(const SchurParams& t) {
    const cplx t1 = t.t1, t2 = t.t2, t3 = t.t3, t4 = t.t4;
    const double m1 = 1.0 - std::norm(t1);
    const double m2 = 1.0 - std::norm(t2);
    const double m3 = 1.0 - std::norm(t3);
    const cplx t1c = std::conj(t1), t2c = std::conj(t2);
    CaratheodoryCoeffs c;
    c.c1 = 2.0 * t1;
    c.c2 = 2.0 * sq(t1) + 2.0 * m1 * t2;
    c.c3 = 2.0 * cube(t1) + 4.0 * m1 * t1 * t2 - 2.0 * m1 * t1c * sq(t2) + 2.0 * m1 * m2 * t3;
    c.c4 = 2.0 * sq(sq(t1))
         + 2.0 * m1 * (3.0 * sq(t1) + sq(t1c) * sq(t2) - 3.0 * std::norm(t1) * t2 + t2) * t2
         + 2.0 * m1 * m2 * (2.0 * t1 - 2.0 * t1c * t2 - t2c * t3) * t3
         + 2.0 * m1 * m2 * m3 * t4;
    return c;
}

CaratheodoryCoeffs herglotz_c(const HerglotzAtoms& atoms) {
    std::array<cplx, 4> c{};
    for (std::size_t k = 0; k < atoms.weights.size(); ++k) {
        cplx p = 1.0;
        for (int n = 0; n < 4; ++n) {
            p *= atoms.points[k];
            c[static_cast<std::size_t>(n)] += 2.0 * atoms.weights[k] * p;
        }
    }
    return CaratheodoryCoeffs{c[0], c[1], c[2], c[3]};
}

double toeplitz_min_eig(const CaratheodoryCoeffs& c, int order) {
    if (order < 1 || order > 5) throw std::invalid_argument("toeplitz_min_eig: order must be 1..5");
    const std::array<cplx, 5> row{cplx(2.0), c.c1, c.c2, c.c3, c.c4};
    const int n = order;
    // Hermitian T = A + iB embeds into the real symmetric [[A, -B], [B, A]],
    // whose spectrum is that of T with doubled multiplicity.
    const int m = 2 * n;
    std::vector<double> M(static_cast<std::size_t>(m) * m, 0.0);
    auto at = [&](int i, int j) -> double& { return M[static_cast<std::size_t>(i) * m + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const cplx e = (j >= i) ? row[static_cast<std::size_t>(j - i)]
                                    : std::conj(row[static_cast<std::size_t>(i - j)]);
            at(i, j) = e.real();
            at(i + n, j + n) = e.real();
            at(i, j + n) = -e.imag();
            at(i + n, j) = e.imag();
        }
    }
    // cyclic Jacobi sweeps
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-28) break;
        for (int p = 0; p < m; ++p) {
            for (int q = p + 1; q < m; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
                const double sg = theta >= 0.0 ? 1.0 : -1.0;
                const double tt = sg / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cc = 1.0 / std::sqrt(tt * tt + 1.0);
                const double ss = tt * cc;
                for (int k = 0; k < m; ++k) {
                    const double mkp = at(k, p), mkq = at(k, q);
                    at(k, p) = cc * mkp - ss * mkq;
                    at(k, q) = ss * mkp + cc * mkq;
                }
                for (int k = 0; k < m; ++k) {
                    const double mpk = at(p, k), mqk = at(q, k);
                    at(p, k) = cc * mpk - ss * mqk;
                    at(q, k) = ss * mpk + cc * mqk;
                }
            }
        }
    }
    double mn = at(0, 0);
    for (int i = 1; i < m; ++i) mn = std::min(mn, at(i, i));
    return mn;
}

SchurParams sample_schur(std::uint64_t seed, std::uint64_t index, SampleMode mode) {
    std::uint64_t state = seed ^ (0xD1342543DE82EF95ULL * (index + 0x632BE59BD9B4E019ULL));
    cplx t[4];
    for (auto& tk : t) {
        const double ur = to_unit(splitmix64(state));
        const double ua = to_unit(splitmix64(state));
        const double um = to_unit(splitmix64(state));
        const double ang = 2.0 * std::numbers::pi * ua;
        double r = std::sqrt(ur);  // area-uniform radius on the disk
        if (mode == SampleMode::boundary_biased) {
            if (um < 0.25) r = 1.0;
            else if (um < 0.5) r = 0.0;
        }
        tk = cplx(r * std::cos(ang), r * std::sin(ang));
    }
    return SchurParams(t[0], t[1], t[2], t[3]);
}

cplx h3_schur_R(const SchurParams& t) {
    const cplx t1 = t.t1, t2 = t.t2, t3 = t.t3, t4 = t.t4;
    const double a1 = std::norm(t1);
    const double m1 = 1.0 - a1;
    const double m2 = 1.0 - std::norm(t2);
    const double m3 = 1.0 - std::norm(t3);
    const cplx t1c = std::conj(t1), t2c = std::conj(t2);
    cplx v = 208.0 * cube(sq(t1));
    v += 16.0 * t2 * m1
         * (-132.0 * sq(sq(t1)) + 6.0 * sq(t1) * (50.0 - 41.0 * a1) * t2
            - 4.0 * (35.0 * a1 * a1 - 61.0 * a1 + 44.0) * sq(t2)
            + 9.0 * sq(t1c) * m1 * cube(t2));
    v += -288.0 * m1 * m2 * (m1 * t1c * sq(t2) - 2.0 * (3.0 + a1) * t1 * t2 + 3.0 * cube(t1)) * t3;
    v += -144.0 * m1 * m2 * (m1 * (std::norm(t2) + 15.0) - 8.0 * sq(t1) * t2c) * sq(t3);
    v += 1152.0 * m1 * m2 * m3 * (2.0 * m1 * t2 - sq(t1)) * t4;
    return v / 8640.0;
}

cplx h3_schur_R1(const SchurParams& t) {
    const cplx t1 = t.t1, t2 = t.t2, t3 = t.t3, t4 = t.t4;
    const double a1 = std::norm(t1);
    const double m1 = 1.0 - a1;
    const double m2 = 1.0 - std::norm(t2);
    const double m3 = 1.0 - std::norm(t3);
    const cplx t1c = std::conj(t1), t2c = std::conj(t2);
    cplx v = -76288.0 * cube(sq(t1));
    v += 64.0 * t2 * m1
         * (-1740.0 * sq(sq(t1)) + 6.0 * sq(t1) * (2986.0 - 1447.0 * a1) * t2
            - 4.0 * (1621.0 * a1 * a1 - 2189.0 * a1 + 1216.0) * sq(t2)
            + 2511.0 * sq(t1c) * m1 * cube(t2));
    v += -10368.0 * m1 * m2
         * (31.0 * m1 * t1c * sq(t2) - 2.0 * (3.0 + 13.0 * a1) * t1 * t2 + 57.0 * cube(t1)) * t3;
    v += -5184.0 * m1 * m2 * (m1 * (31.0 * std::norm(t2) + 225.0) - 32.0 * sq(t1) * t2c) * sq(t3);
    v += 165888.0 * m1 * m2 * m3 * (8.0 * m1 * t2 - sq(t1)) * t4;
    return v / 74649600.0;
}

double branch_condition_R(cplx t1, cplx t2) {
    const double m1 = 1.0 - std::norm(t1);
    return std::abs(m1 * (15.0 + std::norm(t2)) - 8.0 * sq(t1) * std::conj(t2))
         - 8.0 * std::abs(2.0 * m1 * t2 - sq(t1));
}

double branch_condition_R1(cplx t1, cplx t2) {
    const double m1 = 1.0 - std::norm(t1);
    return std::abs(m1 * (31.0 * std::norm(t2) + 225.0) - 32.0 * sq(t1) * std::conj(t2))
         - 32.0 * std::abs(8.0 * m1 * t2 - sq(t1));
}

}  // namespace hankel
