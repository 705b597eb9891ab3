#pragma once

#include <vector>

#include "hankel/caratheodory.hpp"
#include "hankel/power_series.hpp"

namespace hankel {

// Taylor coefficients a2..a5 of a normalized analytic f (a1 = 1 implicit).
struct ClassCoeffs {
    cplx a2, a3, a4, a5;
};

// Coefficients A2..A5 of the local inverse f^{-1} (A1 = 1 implicit).
struct InverseCoeffs {
    cplx A2, A3, A4, A5;
};

// f' = p gives a_n = c_{n-1}/n
ClassCoeffs from_caratheodory_R(const CaratheodoryCoeffs& c);
// (zf')' = p gives a_n = c_{n-1}/n^2
ClassCoeffs from_caratheodory_R1(const CaratheodoryCoeffs& c);

// A2 = -a2, A3 = 2a2^2 - a3, A4 = 5a2a3 - 5a2^3 - a4,
// A5 = 14a2^4 - 21a3a2^2 + 6a2a4 + 3a3^2 - a5
InverseCoeffs inverse_coeffs(const ClassCoeffs& a);

// 2 x2 x3 x4 - x3^3 - x4^2 + x3 x5 - x2^2 x5, the third Hankel determinant of
// the sequence 1, x2, x3, x4, x5
cplx h3(cplx x2, cplx x3, cplx x4, cplx x5);

// Determinant of the q x q matrix with (i,j) entry a_{n+i+j} (0-based i,j),
// where coeffs[k] holds a_{k+1}. Requires q in 1..4 and enough coefficients.
cplx hankel_det(int q, int n, const std::vector<cplx>& coeffs);

// Closed-form H3 of the inverse coefficients as a polynomial in c1..c4.
cplx h3_inverse_R(const CaratheodoryCoeffs& c);
cplx h3_inverse_R1(const CaratheodoryCoeffs& c);

// f(z) = z + z ln(g(z)/z) - int_0^z ln(g(s)/s) ds; satisfies f' = z g'/g.
// Requires g = z + O(z^2).
TruncatedSeries r_from_starlike(const TruncatedSeries& g);
// g(z) = z exp(int_0^z (f'(s)-1)/s ds), the inverse transform.
TruncatedSeries starlike_from_r(const TruncatedSeries& f);

// -z + 2 arctanh z = z + (2/3)z^3 + (2/5)z^5 + ...
TruncatedSeries extremal_f0_arctanh(int order);
// the series f with (zf')' = (1+z^3)/(1-z^3): z + (1/8)z^4 + (2/49)z^7 + ...
TruncatedSeries extremal_fstar_R1(int order);
// -z - 2 e^{i theta} ln(1 - e^{-i theta} z): a_n = 2 e^{-i(n-1)theta}/n, a1 = 1
TruncatedSeries extremal_f0_theta(double theta, int order);

}  // namespace hankel
