#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hankel/caratheodory.hpp"
#include "hankel/function_classes.hpp"
#include "hankel/objectives.hpp"
#include "hankel/optimizer.hpp"

namespace hankel {

struct SamplingSummary {
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::boundary_biased;
    double sup_abs_h3 = 0.0;
    SchurParams argsup;
    std::uint64_t violations = 0;           // samples exceeding bound + tol
    std::uint64_t envelope_violations = 0;  // samples exceeding the branch envelope + 1e-9
};

struct VerifyConfig {
    int grid_n = 128;
    std::uint64_t n_samples = 1000000;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    SampleMode mode = SampleMode::boundary_biased;
    std::uint64_t consistency_n = 10000;
};

// Structured outcome of a full bound verification for one class.
struct BoundReport {
    ClassId class_id = ClassId::R;
    std::int64_t normalizer = 0;  // 8640 or 74649600
    BoxMaxResult branch_a;        // g for R, h for R1
    BoxMaxResult branch_b;        // g1 for R, h1 for R1
    std::int64_t bound_num = 0, bound_den = 1;  // reduced fraction
    double bound_float = 0.0;
    double extremal_value = 0.0;  // |H3| of the class extremal via series reversion
    SamplingSummary sampling;
    double consistency_max_err = 0.0;
    bool passed = false;
    std::string failure;  // first failing sub-check, empty when passed
};

// Monte Carlo sweep of |H3| over Schur parameters. boundary_biased streams
// additionally pin the exact attainment probes t=(0,1,0,0) and t=(0,0,1,0)
// ahead of the random draws. When csv is given, writes one
// "abs_t1,abs_t2,abs_h3" row per evaluated point.
SamplingSummary sample_h3(ClassId cls, std::uint64_t n, std::uint64_t seed, SampleMode mode,
                          double bound_float, double tol, std::ostream* csv = nullptr);

// Max relative discrepancy among the four ways of computing H3 from Schur
// parameters: the direct expansion, the closed-form polynomial in c1..c4, the
// closed-form inverse coefficients, and series reversion.
double consistency_suite(ClassId cls, std::uint64_t n, std::uint64_t seed);

// |a_n| = 2/n on the rotated extremal family (n <= 30) and |a_n| <= 2/n for
// Herglotz-generated members of the bounded turning class.
bool coefficient_bound_check(int n_thetas);

// Full reproduction for one class: branch maxima, exact bound assembly,
// extremal attainment, sampling domination, and cross-path consistency.
BoundReport verify_bound(ClassId cls, const VerifyConfig& config);

// Deterministic serializations: identical reports produce identical bytes.
std::string report_json(const BoundReport& r);
std::string report_text(const BoundReport& r);

const char* class_name(ClassId cls);
const char* mode_name(SampleMode mode);
// shortest decimal string that round-trips the double
std::string format_double(double x);

}  // namespace hankel
