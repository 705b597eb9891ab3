#pragma once

#include <cstdint>
#include <vector>

#include "hankel/power_series.hpp"

namespace hankel {

// Free parameters in the closed unit polydisk; they generate every admissible
// tuple of the first four Caratheodory coefficients.
struct SchurParams {
    cplx t1, t2, t3, t4;
    SchurParams() : t1(0.0), t2(0.0), t3(0.0), t4(0.0) {}
    SchurParams(cplx t1_, cplx t2_, cplx t3_, cplx t4_);  // enforces |tk| <= 1 (+1e-12)
};

// First four Taylor coefficients of p with p(0) = 1 and Re p > 0 on the disk;
// |c_n| <= 2 whenever produced by schur_to_c or herglotz_c.
struct CaratheodoryCoeffs {
    cplx c1, c2, c3, c4;
};

// Finite-atom measure on the circle: p(z) = sum_k w_k (1 + x_k z)/(1 - x_k z).
struct HerglotzAtoms {
    std::vector<double> weights;  // nonnegative, summing to 1
    std::vector<cplx> points;     // unimodular
    HerglotzAtoms(std::vector<double> w, std::vector<cplx> x);  // validates both
};

CaratheodoryCoeffs schur_to_c(const SchurParams& t);

// c_n = 2 sum_k w_k x_k^n
CaratheodoryCoeffs herglotz_c(const HerglotzAtoms& atoms);

// Smallest eigenvalue of the `order` x `order` Hermitian Toeplitz matrix with
// diagonal 2 and first row (2, c1, c2, ...). Nonnegative up to roundoff for
// genuine Caratheodory coefficients. order must lie in 1..5.
double toeplitz_min_eig(const CaratheodoryCoeffs& c, int order);

enum class SampleMode { uniform, boundary_biased };

// Deterministic draw from the closed polydisk; a pure function of
// (seed, index), so parallel consumers see one well-defined stream.
// boundary_biased snaps each |tk| to 1 or to 0 with probability 1/4 each.
SchurParams sample_schur(std::uint64_t seed, std::uint64_t index, SampleMode mode);

// Third Hankel determinant of the inverse coefficients, evaluated directly in
// the Schur parameters. R is the bounded turning class (Re f' > 0); R1 is the
// class with Re (zf')' > 0.
cplx h3_schur_R(const SchurParams& t);
cplx h3_schur_R1(const SchurParams& t);

// Sign of the returned value picks the branch objective used to bound |H3|:
// >= 0 selects g (resp. h), < 0 selects g1 (resp. h1).
double branch_condition_R(cplx t1, cplx t2);
double branch_condition_R1(cplx t1, cplx t2);

}  // namespace hankel
