#include "hankel/function_classes.hpp"

#include <cmath>
#include <stdexcept>

namespace hankel {

namespace {

cplx sq(cplx x) { return x * x; }

// determinant by minor expansion along the first row; q <= 4 keeps this exact
// and allocation-light
cplx det(const std::vector<cplx>& m, int q) {
    if (q == 1) return m[0];
    cplx acc(0.0);
    double sign = 1.0;
    for (int col = 0; col < q; ++col) {
        std::vector<cplx> minor;
        minor.reserve(static_cast<std::size_t>((q - 1) * (q - 1)));
        for (int i = 1; i < q; ++i)
            for (int j = 0; j < q; ++j)
                if (j != col) minor.push_back(m[static_cast<std::size_t>(i * q + j)]);
        acc += sign * m[static_cast<std::size_t>(col)] * det(minor, q - 1);
        sign = -sign;
    }
    return acc;
}

}  // namespace

ClassCoeffs from_caratheodory_R(const CaratheodoryCoeffs& c) {
    return ClassCoeffs{c.c1 / 2.0, c.c2 / 3.0, c.c3 / 4.0, c.c4 / 5.0};
}

ClassCoeffs from_caratheodory_R1(const CaratheodoryCoeffs& c) {
    return ClassCoeffs{c.c1 / 4.0, c.c2 / 9.0, c.c3 / 16.0, c.c4 / 25.0};
}

InverseCoeffs inverse_coeffs(const ClassCoeffs& a) {
    InverseCoeffs A;
    A.A2 = -a.a2;
    A.A3 = 2.0 * sq(a.a2) - a.a3;
    A.A4 = 5.0 * a.a2 * a.a3 - 5.0 * a.a2 * sq(a.a2) - a.a4;
    A.A5 = 14.0 * sq(sq(a.a2)) - 21.0 * a.a3 * sq(a.a2) + 6.0 * a.a2 * a.a4 + 3.0 * sq(a.a3) - a.a5;
    return A;
}

cplx h3(cplx x2, cplx x3, cplx x4, cplx x5) {
    return 2.0 * x2 * x3 * x4 - x3 * sq(x3) - sq(x4) + x3 * x5 - sq(x2) * x5;
}

cplx hankel_det(int q, int n, const std::vector<cplx>& coeffs) {
    if (q < 1 || q > 4) throw std::invalid_argument("hankel_det: q must be 1..4");
    if (n < 1) throw std::invalid_argument("hankel_det: n must be >= 1");
    const int top = n + 2 * q - 2;  // largest index used
    if (static_cast<int>(coeffs.size()) < top)
        throw std::invalid_argument("hankel_det: not enough coefficients");
    std::vector<cplx> m(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            m[static_cast<std::size_t>(i * q + j)] = coeffs[static_cast<std::size_t>(n + i + j - 1)];
    return det(m, q);
}

cplx h3_inverse_R(const CaratheodoryCoeffs& c) {
    const cplx c1 = c.c1, c2 = c.c2, c3 = c.c3, c4 = c.c4;
    const cplx v = -540.0 * sq(sq(c1)) * c2 - 432.0 * sq(c1) * c4 + 720.0 * sq(c1) * sq(c2)
                 + 576.0 * c2 * c4 - 540.0 * sq(c3) + 720.0 * c1 * c2 * c3
                 + 135.0 * sq(c1) * sq(sq(c1)) - 640.0 * c2 * sq(c2);
    return v / 8640.0;
}

cplx h3_inverse_R1(const CaratheodoryCoeffs& c) {
    const cplx c1 = c.c1, c2 = c.c2, c3 = c.c3, c4 = c.c4;
    const cplx v = -97200.0 * sq(sq(c1)) * c2 - 186624.0 * sq(c1) * c4 + 172800.0 * sq(c1) * sq(c2)
                 + 331776.0 * c2 * c4 - 291600.0 * sq(c3) + 18225.0 * sq(c1) * sq(sq(c1))
                 + 259200.0 * c1 * c2 * c3 - 204800.0 * c2 * sq(c2);
    return v / 74649600.0;
}

TruncatedSeries r_from_starlike(const TruncatedSeries& g) {
    if (std::abs(g.at(0)) > 1e-12 || std::abs(g.at(1) - cplx(1.0)) > 1e-12)
        throw std::domain_error("r_from_starlike: need g = z + O(z^2)");
    const TruncatedSeries L = log(div_by_z(g));
    return sub(add(TruncatedSeries::identity(g.order()), mul_by_z(L)), integrate(L));
}

TruncatedSeries starlike_from_r(const TruncatedSeries& f) {
    if (std::abs(f.at(0)) > 1e-12 || std::abs(f.at(1) - cplx(1.0)) > 1e-12)
        throw std::domain_error("starlike_from_r: need f = z + O(z^2)");
    const TruncatedSeries fp = derivative(f);
    const TruncatedSeries integrand = div_by_z(sub(fp, TruncatedSeries::constant(1.0, fp.order())));
    return mul_by_z(exp(integrate(integrand)));
}

TruncatedSeries extremal_f0_arctanh(int order) {
    std::vector<cplx> c(static_cast<std::size_t>(std::max(order, 1)) + 1, cplx(0.0));
    c[1] = 1.0;
    for (int n = 3; n <= order; n += 2) c[static_cast<std::size_t>(n)] = 2.0 / n;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries extremal_fstar_R1(int order) {
    // p = (1+z^3)/(1-z^3) = 1 + 2 z^3 + 2 z^6 + ...; then f = int (int p)/z
    const int n = std::max(order, 1);
    std::vector<cplx> p(static_cast<std::size_t>(n), cplx(0.0));  // order n-1
    p[0] = 1.0;
    for (int k = 3; k <= n - 1; k += 3) p[static_cast<std::size_t>(k)] = 2.0;
    return integrate(div_by_z(integrate(TruncatedSeries(std::move(p)))));
}

TruncatedSeries extremal_f0_theta(double theta, int order) {
    std::vector<cplx> c(static_cast<std::size_t>(std::max(order, 1)) + 1, cplx(0.0));
    c[1] = 1.0;
    for (int n = 2; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = 2.0 * std::polar(1.0, -(n - 1) * theta) / static_cast<double>(n);
    return TruncatedSeries(std::move(c));
}

}  // namespace hankel
