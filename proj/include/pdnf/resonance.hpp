#pragma once

#include "pdnf/field.hpp"
#include "pdnf/lattice.hpp"
#include "pdnf/matrix.hpp"

#include <string>
#include <vector>

namespace pdnf {

inline constexpr int kDefaultResonanceBound = 16;

/// Integer tuple c with sum_j c_j gamma_j = 0, c_j >= -1, sum_j c_j >= 1 and at
/// most one negative entry.
using ResonanceRelation = std::vector<int>;

struct ResonanceSet {
    std::vector<Scalar> gamma;
    int bound = 0;                            // only relations with sum c_j <= bound are listed
    std::vector<ResonanceRelation> relations; // sorted by sum c_j, then descending
    std::size_t q = 0;                        // rank of the listed relations
    std::size_t q_upper = 0;                  // dim of {c in Q^n : sum c_j gamma_j = 0}
    bool complete = false;                    // q is certified to be the degree of resonance
    std::string completeness;                 // "q_equals_upper", "stable_under_doubling" or "provisional"
};

/// Weight lattice: integer rho orthogonal to every relation, constant on
/// blocks of equal eigenvalues.
struct WeightLattice {
    IntMatrix basis;  // Hermite normal form rows
    std::size_t r = 0;
    bool provisional = true;  // copied from !ResonanceSet::complete
};

struct TorusGenerators {
    IntMatrix weights;             // rho^k
    std::vector<VectorField> Z;    // Z_k = sum_j rho^k_j x_j d/dx_j
};

/// Relations with sum c_j <= bound, by exhaustive walk over the admissible
/// box. When q < q_upper the walk is repeated at 2*bound; an unchanged rank
/// marks the set complete.
ResonanceSet enumerate_resonances(const std::vector<Scalar>& gamma, int bound = kDefaultResonanceBound);

WeightLattice weight_lattice(const ResonanceSet& res);

TorusGenerators torus_generators(const WeightLattice& lattice, std::size_t dim);

/// True when every Z_k commutes with the other generators and with the
/// linear fields of S and N (all given in eigencoordinates).
bool torus_commutes(const TorusGenerators& torus, const Matrix& S, const Matrix& N);

/// sum_j b_j gamma_j - gamma_l: the eigenvalue of ad_{X^s} on x^b d/dx_l.
Scalar monomial_weight(const std::vector<Scalar>& gamma, const MultiIndex& b, std::size_t axis);

/// sum_j b_j gamma_j: the eigenvalue of X^s acting on the function x^b.
Scalar function_weight(const std::vector<Scalar>& gamma, const MultiIndex& b);

/// Weight zero and |b| >= 2.
bool is_resonant_monomial(const std::vector<Scalar>& gamma, const MultiIndex& b, std::size_t axis);

/// sum_j gamma_j == 0.
bool isochore_weight_check(const std::vector<Scalar>& gamma);

}  // namespace pdnf
