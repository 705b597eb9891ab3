#include "hankel/objectives.hpp"

#include <stdexcept>

namespace hankel {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("BivariatePoly: coefficient overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("BivariatePoly: coefficient overflow");
    return r;
}

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int k = 0; k < e; ++k) r = checked_mul(r, base);
    return r;
}

}  // namespace

void BivariatePoly::trim() {
    std::size_t du = 1;
    for (const auto& row : c_)
        for (std::size_t j = row.size(); j > du; --j)
            if (row[j - 1] != 0) { du = j; break; }
    std::size_t ds = 1;
    for (std::size_t i = c_.size(); i > 1; --i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < std::min(du, c_[i - 1].size()); ++j)
            if (c_[i - 1][j] != 0) { nonzero = true; break; }
        if (nonzero) { ds = i; break; }
    }
    c_.resize(ds);
    for (auto& row : c_) row.resize(du, 0);
}

BivariatePoly BivariatePoly::monomial(std::int64_t coeff, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<std::vector<std::int64_t>> c(
        static_cast<std::size_t>(i) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(j) + 1, 0));
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coeff;
    return BivariatePoly(std::move(c));
}

double BivariatePoly::eval(double s, double u) const {
    double acc = 0.0;
    for (int j = deg_u(); j >= 0; --j) {
        double row = 0.0;
        for (int i = deg_s(); i >= 0; --i) row = row * s + static_cast<double>(coeff(i, j));
        acc = acc * u + row;
    }
    return acc;
}

std::int64_t BivariatePoly::eval_scaled_pow2(std::int64_t num_s, std::int64_t num_u, int k) const {
    // returns p(num_s/2^k, num_u/2^k) * 2^{k*(deg_s+deg_u)}, all in integers
    std::int64_t acc = 0;
    for (int i = 0; i <= deg_s(); ++i)
        for (int j = 0; j <= deg_u(); ++j) {
            std::int64_t term = checked_mul(coeff(i, j), ipow(num_s, i));
            term = checked_mul(term, ipow(num_u, j));
            term = checked_mul(term, ipow(2, k * (deg_s() - i + deg_u() - j)));
            acc = checked_add(acc, term);
        }
    return acc;
}

BivariatePoly BivariatePoly::d_ds() const {
    std::vector<std::vector<std::int64_t>> c(
        static_cast<std::size_t>(std::max(deg_s(), 1)),
        std::vector<std::int64_t>(static_cast<std::size_t>(deg_u()) + 1, 0));
    for (int i = 1; i <= deg_s(); ++i)
        for (int j = 0; j <= deg_u(); ++j)
            c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = checked_mul(coeff(i, j), i);
    return BivariatePoly(std::move(c));
}

BivariatePoly BivariatePoly::d_du() const {
    std::vector<std::vector<std::int64_t>> c(
        static_cast<std::size_t>(deg_s()) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(std::max(deg_u(), 1)), 0));
    for (int i = 0; i <= deg_s(); ++i)
        for (int j = 1; j <= deg_u(); ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] = checked_mul(coeff(i, j), j);
    return BivariatePoly(std::move(c));
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    const int ds = std::max(a.deg_s(), b.deg_s());
    const int du = std::max(a.deg_u(), b.deg_u());
    std::vector<std::vector<std::int64_t>> c(
        static_cast<std::size_t>(ds) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(du) + 1, 0));
    for (int i = 0; i <= ds; ++i)
        for (int j = 0; j <= du; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                checked_add(a.coeff(i, j), b.coeff(i, j));
    return BivariatePoly(std::move(c));
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    return a + (-1 * b);
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    const int ds = a.deg_s() + b.deg_s();
    const int du = a.deg_u() + b.deg_u();
    std::vector<std::vector<std::int64_t>> c(
        static_cast<std::size_t>(ds) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(du) + 1, 0));
    for (int i = 0; i <= a.deg_s(); ++i)
        for (int j = 0; j <= a.deg_u(); ++j) {
            const std::int64_t aij = a.coeff(i, j);
            if (aij == 0) continue;
            for (int k = 0; k <= b.deg_s(); ++k)
                for (int l = 0; l <= b.deg_u(); ++l) {
                    auto& slot = c[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(j + l)];
                    slot = checked_add(slot, checked_mul(aij, b.coeff(k, l)));
                }
        }
    return BivariatePoly(std::move(c));
}

BivariatePoly operator*(std::int64_t k, const BivariatePoly& a) {
    return BivariatePoly::monomial(k, 0, 0) * a;
}

bool BivariatePoly::operator==(const BivariatePoly& other) const {
    const int ds = std::max(deg_s(), other.deg_s());
    const int du = std::max(deg_u(), other.deg_u());
    for (int i = 0; i <= ds; ++i)
        for (int j = 0; j <= du; ++j)
            if (coeff(i, j) != other.coeff(i, j)) return false;
    return true;
}

BivariatePoly build(Objective which) {
    using P = BivariatePoly;
    const P one = P::monomial(1, 0, 0);
    const P s = P::monomial(1, 1, 0);
    const P u = P::monomial(1, 0, 1);
    const P s2 = s * s, s3 = s2 * s, s4 = s2 * s2, s6 = s3 * s3;
    const P u2 = u * u, u3 = u2 * u;
    const P ms = one - s2;
    const P mu = one - u2;

    P p;
    if (which == Objective::g || which == Objective::g1) {
        const P core = 208 * s6
            + 16 * (u * ms * (132 * s4 + 6 * (s2 * (50 * one - 41 * s2)) * u
                              + 4 * (35 * s4 - 61 * s2 + 44 * one) * u2 + 9 * (s2 * ms) * u3))
            + 288 * (s * ms * mu * (ms * u2 + 2 * ((3 * one + s2) * u) + 3 * s2));
        if (which == Objective::g)
            p = core + 144 * (ms * mu * (ms * (15 * one + u2) + 8 * (s2 * u)));
        else
            p = core + 1152 * (ms * mu * (2 * (ms * u) + s2));
    } else {
        const P core = 76288 * s6
            + 64 * (u * ms * (1740 * s4 + 6 * (s2 * (2986 * one - 1447 * s2)) * u
                              + 4 * (1621 * s4 - 2189 * s2 + 1216 * one) * u2 + 2511 * (s2 * ms) * u3))
            + 10368 * (ms * mu * (31 * (ms * s * u2) + 2 * ((3 * one + 13 * s2) * (s * u)) + 57 * s3));
        if (which == Objective::h)
            p = core + 5184 * (ms * mu * (ms * (31 * u2 + 225 * one) + 32 * (s2 * u)));
        else
            p = core + 165888 * (ms * mu * (8 * (ms * u) + s2));
    }

    for (int i = 0; i <= p.deg_s(); ++i)
        for (int j = 0; j <= p.deg_u(); ++j)
            if (p.coeff(i, j) > 10000000 || p.coeff(i, j) < -10000000)
                throw std::logic_error("build: coefficient magnitude exceeds expected bound");
    return p;
}

double eval(const BivariatePoly& p, double s, double u) { return p.eval(s, u); }

std::pair<BivariatePoly, BivariatePoly> grad(const BivariatePoly& p) {
    return {p.d_ds(), p.d_du()};
}

std::vector<std::int64_t> edge_restrict(const BivariatePoly& p, Edge edge) {
    std::vector<std::int64_t> q;
    switch (edge) {
        case Edge::s0:
            q.assign(static_cast<std::size_t>(p.deg_u()) + 1, 0);
            for (int j = 0; j <= p.deg_u(); ++j) q[static_cast<std::size_t>(j)] = p.coeff(0, j);
            break;
        case Edge::s1:
            q.assign(static_cast<std::size_t>(p.deg_u()) + 1, 0);
            for (int j = 0; j <= p.deg_u(); ++j)
                for (int i = 0; i <= p.deg_s(); ++i)
                    q[static_cast<std::size_t>(j)] = checked_add(q[static_cast<std::size_t>(j)], p.coeff(i, j));
            break;
        case Edge::u0:
            q.assign(static_cast<std::size_t>(p.deg_s()) + 1, 0);
            for (int i = 0; i <= p.deg_s(); ++i) q[static_cast<std::size_t>(i)] = p.coeff(i, 0);
            break;
        case Edge::u1:
            q.assign(static_cast<std::size_t>(p.deg_s()) + 1, 0);
            for (int i = 0; i <= p.deg_s(); ++i)
                for (int j = 0; j <= p.deg_u(); ++j)
                    q[static_cast<std::size_t>(i)] = checked_add(q[static_cast<std::size_t>(i)], p.coeff(i, j));
            break;
    }
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

double envelope(ClassId cls, double s, double u) {
    static const BivariatePoly G = build(Objective::g);
    static const BivariatePoly G1 = build(Objective::g1);
    static const BivariatePoly H = build(Objective::h);
    static const BivariatePoly H1 = build(Objective::h1);
    if (cls == ClassId::R) return std::max(G.eval(s, u), G1.eval(s, u));
    return std::max(H.eval(s, u), H1.eval(s, u));
}

std::string to_csv(const BivariatePoly& p) {
    std::string out = "i,j,coeff\n";
    for (int i = 0; i <= p.deg_s(); ++i)
        for (int j = 0; j <= p.deg_u(); ++j)
            if (p.coeff(i, j) != 0)
                out += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(p.coeff(i, j)) + "\n";
    return out;
}

const char* objective_name(Objective which) {
    switch (which) {
        case Objective::g: return "g";
        case Objective::g1: return "g1";
        case Objective::h: return "h";
        case Objective::h1: return "h1";
    }
    return "?";
}

}  // namespace hankel
