#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hankel {

enum class ClassId { R, R1 };

// The two branch objectives per class: g/g1 bound 8640|H3| for the bounded
// turning class, h/h1 bound 74649600|H3| for the class with Re (zf')' > 0.
enum class Objective { g, g1, h, h1 };

// Polynomial in (s,u) with exact 64-bit integer coefficients; coeff(i,j) is
// the coefficient of s^i u^j. Construction never rounds.
class BivariatePoly {
public:
    BivariatePoly() : c_(1, std::vector<std::int64_t>(1, 0)) {}
    static BivariatePoly monomial(std::int64_t coeff, int i, int j);

    int deg_s() const { return static_cast<int>(c_.size()) - 1; }
    int deg_u() const { return static_cast<int>(c_[0].size()) - 1; }
    std::int64_t coeff(int i, int j) const {
        if (i < 0 || j < 0 || i > deg_s() || j > deg_u()) return 0;
        return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    // Horner in u outermost, each u-coefficient evaluated by Horner in s;
    // exact at integer arguments
    double eval(double s, double u) const;
    // exact value at (num_s/2^k, num_u/2^k) scaled by 2^{k*(deg_s+deg_u)}:
    // used to check eval against pure integer arithmetic
    std::int64_t eval_scaled_pow2(std::int64_t num_s, std::int64_t num_u, int k) const;

    BivariatePoly d_ds() const;
    BivariatePoly d_du() const;

    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(std::int64_t k, const BivariatePoly& a);
    bool operator==(const BivariatePoly& other) const;

private:
    // rows 0..deg_s, cols 0..deg_u, trailing zero rows/cols trimmed
    std::vector<std::vector<std::int64_t>> c_;
    void trim();
    explicit BivariatePoly(std::vector<std::vector<std::int64_t>> c) : c_(std::move(c)) { trim(); }
};

// Expands the factored definition of the objective into monomials with exact
// integer arithmetic; coefficient magnitudes are checked against 10^7.
BivariatePoly build(Objective which);

double eval(const BivariatePoly& p, double s, double u);

// formal partial derivatives (d/ds, d/du)
std::pair<BivariatePoly, BivariatePoly> grad(const BivariatePoly& p);

enum class Edge { s0, s1, u0, u1 };

// Exact restriction to a side of the unit square; coefficients of the free
// variable (u on s-edges, s on u-edges), index = exponent.
std::vector<std::int64_t> edge_restrict(const BivariatePoly& p, Edge edge);

// max of the two branch objectives of the class at (s,u)
double envelope(ClassId cls, double s, double u);

// rows "i,j,coeff" for every nonzero monomial
std::string to_csv(const BivariatePoly& p);

const char* objective_name(Objective which);

}  // namespace hankel
