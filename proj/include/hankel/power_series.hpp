#pragma once

#include <complex>
#include <vector>

namespace hankel {

using cplx = std::complex<double>;

// Taylor coefficients c[0..N] of an analytic function; index n holds the
// coefficient of z^n. Immutable value type: every operation returns a fresh
// series, so instances are safe to share across threads.
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1, cplx(0.0)) {}
    explicit TruncatedSeries(std::vector<cplx> coeffs);

    static TruncatedSeries constant(cplx value, int order);
    static TruncatedSeries identity(int order);  // the series z

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return c_; }
    // reads past the truncation order are zero
    cplx at(int n) const {
        return (0 <= n && n <= order()) ? c_[static_cast<std::size_t>(n)] : cplx(0.0);
    }

private:
    std::vector<cplx> c_;
};

// termwise; result order = min of the operand orders
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
// Cauchy product truncated at the min operand order
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(cplx k, const TruncatedSeries& a);

// copy resized to the given order, extending with zeros when it grows
TruncatedSeries truncate(const TruncatedSeries& a, int order);

// requires a0 == 1 (within 1e-12); returns L with exp(L) == a and L(0) = 0
TruncatedSeries log(const TruncatedSeries& a);
// requires a0 == 0; returns E with log(E) == a
TruncatedSeries exp(const TruncatedSeries& a);
// requires a0 != 0
TruncatedSeries reciprocal(const TruncatedSeries& a);

TruncatedSeries derivative(const TruncatedSeries& a);  // order drops by one
TruncatedSeries integrate(const TruncatedSeries& a);   // order grows by one, zero constant term

// multiply by z (order grows by one) / divide by z (requires a0 == 0)
TruncatedSeries mul_by_z(const TruncatedSeries& a);
TruncatedSeries div_by_z(const TruncatedSeries& a);

// a(b(w)); requires b0 == 0; result order = min of the operand orders
TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b);

// the series b with a(b(w)) == w mod w^{N+1}; requires a0 == 0, a1 == 1.
// Solved coefficient by coefficient: the triangular system is monic in b_n.
TruncatedSeries revert(const TruncatedSeries& a);

}  // namespace hankel
