#include "hankel/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankel {

namespace {
constexpr double kUnitTol = 1e-12;

int min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}
}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, cplx(0.0));
}

TruncatedSeries TruncatedSeries::constant(cplx value, int order) {
    std::vector<cplx> c(static_cast<std::size_t>(std::max(order, 0)) + 1, cplx(0.0));
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(int order) {
    std::vector<cplx> c(static_cast<std::size_t>(std::max(order, 1)) + 1, cplx(0.0));
    c[1] = 1.0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = min_order(a, b);
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.at(k) + b.at(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = min_order(a, b);
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.at(k) - b.at(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = min_order(a, b);
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.0));
    for (int i = 0; i <= n; ++i) {
        const cplx ai = a.at(i);
        if (ai == cplx(0.0)) continue;
        for (int j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += ai * b.at(j);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(cplx k, const TruncatedSeries& a) {
    std::vector<cplx> c(a.coeffs());
    for (auto& v : c) v *= k;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries truncate(const TruncatedSeries& a, int order) {
    std::vector<cplx> c(static_cast<std::size_t>(std::max(order, 0)) + 1, cplx(0.0));
    for (int k = 0; k <= std::min(order, a.order()); ++k) c[static_cast<std::size_t>(k)] = a.at(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries log(const TruncatedSeries& a) {
    if (std::abs(a.at(0) - cplx(1.0)) > kUnitTol)
        throw std::domain_error("log: constant term must be 1");
    const int n = a.order();
    std::vector<cplx> L(static_cast<std::size_t>(n) + 1, cplx(0.0));
    // L_n = a_n - (1/n) sum_{k=1}^{n-1} k L_k a_{n-k}
    for (int m = 1; m <= n; ++m) {
        cplx acc = a.at(m);
        for (int k = 1; k < m; ++k)
            acc -= (static_cast<double>(k) / m) * L[static_cast<std::size_t>(k)] * a.at(m - k);
        L[static_cast<std::size_t>(m)] = acc;
    }
    return TruncatedSeries(std::move(L));
}

TruncatedSeries exp(const TruncatedSeries& a) {
    if (std::abs(a.at(0)) > kUnitTol)
        throw std::domain_error("exp: constant term must be 0");
    const int n = a.order();
    std::vector<cplx> E(static_cast<std::size_t>(n) + 1, cplx(0.0));
    E[0] = 1.0;
    // E_n = (1/n) sum_{k=1}^{n} k a_k E_{n-k}
    for (int m = 1; m <= n; ++m) {
        cplx acc(0.0);
        for (int k = 1; k <= m; ++k)
            acc += (static_cast<double>(k) / m) * a.at(k) * E[static_cast<std::size_t>(m - k)];
        E[static_cast<std::size_t>(m)] = acc;
    }
    return TruncatedSeries(std::move(E));
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    if (std::abs(a.at(0)) <= kUnitTol)
        throw std::domain_error("reciprocal: constant term must be nonzero");
    const int n = a.order();
    std::vector<cplx> r(static_cast<std::size_t>(n) + 1, cplx(0.0));
    r[0] = 1.0 / a.at(0);
    for (int m = 1; m <= n; ++m) {
        cplx acc(0.0);
        for (int k = 1; k <= m; ++k) acc += a.at(k) * r[static_cast<std::size_t>(m - k)];
        r[static_cast<std::size_t>(m)] = -acc / a.at(0);
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    const int n = std::max(a.order() - 1, 0);
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.0));
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = static_cast<double>(k + 1) * a.at(k + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate(const TruncatedSeries& a) {
    const int n = a.order() + 1;
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.0));
    for (int k = 1; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = a.at(k - 1) / static_cast<double>(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul_by_z(const TruncatedSeries& a) {
    std::vector<cplx> c(a.coeffs().size() + 1, cplx(0.0));
    for (int k = 0; k <= a.order(); ++k) c[static_cast<std::size_t>(k) + 1] = a.at(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries div_by_z(const TruncatedSeries& a) {
    if (std::abs(a.at(0)) > kUnitTol)
        throw std::domain_error("div_by_z: constant term must be 0");
    const int n = std::max(a.order() - 1, 0);
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.0));
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.at(k + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (std::abs(b.at(0)) > kUnitTol)
        throw std::domain_error("compose: inner series must have zero constant term");
    const int n = min_order(a, b);
    const TruncatedSeries bt = truncate(b, n);
    // Horner from the top coefficient down
    TruncatedSeries r = TruncatedSeries::constant(a.at(n), n);
    for (int k = n - 1; k >= 0; --k)
        r = add(mul(r, bt), TruncatedSeries::constant(a.at(k), n));
    return r;
}

TruncatedSeries revert(const TruncatedSeries& a) {
    if (std::abs(a.at(0)) > kUnitTol || std::abs(a.at(1) - cplx(1.0)) > kUnitTol)
        throw std::domain_error("revert: series must be w + O(w^2)");
    const int n = a.order();
    std::vector<cplx> b(static_cast<std::size_t>(n) + 1, cplx(0.0));
    if (n >= 1) b[1] = 1.0;
    for (int m = 2; m <= n; ++m) {
        // with b_m still zero, [w^m] a(b) picks up exactly b_m once a_1 = 1
        TruncatedSeries partial(std::vector<cplx>(b.begin(), b.begin() + m + 1));
        const TruncatedSeries c = compose(truncate(a, m), partial);
        b[static_cast<std::size_t>(m)] = -c.at(m);
    }
    return TruncatedSeries(std::move(b));
}

}  // namespace hankel
