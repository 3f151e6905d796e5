#pragma once

#include "pdnf/field.hpp"
#include "pdnf/matrix.hpp"

#include <vector>

namespace pdnf {

/// Eigen-structure of the linear part X^(1).
struct LinearData {
    Matrix A;                    // linear part
    Matrix S;                    // semisimple part
    Matrix N;                    // nilpotent part, A = S + N
    UPoly s_of_a;                // S = s_of_a(A)
    std::vector<Scalar> gamma;   // eigenvalues, ordered as the columns of P
    Matrix P;                    // P^-1 S P = diag(gamma)
    Matrix P_inv;
};

/// Matrix of X^(1): entry (i, j) is the coefficient of x_j in X_i.
/// Throws NonVanishingAtOrigin if X has constant terms.
Matrix linear_part(const VectorField& X);

/// The linear field sum_ij A_ij x_j d/dx_i.
VectorField linear_field(const Matrix& A);

struct JordanChevalley {
    Matrix S;
    Matrix N;
    UPoly s_of_a;
};

/// Semisimple/nilpotent split of A via Newton iteration on the squarefree
/// part of the characteristic polynomial, carried out in Q(i)[t]/(charpoly),
/// so S is an explicit polynomial in A.
JordanChevalley jordan_chevalley(const Matrix& A);

struct Diagonalization {
    std::vector<Scalar> gamma;
    Matrix P;
};

/// Eigenbasis of a semisimple S. Columns of P have first nonzero entry 1 and
/// are ordered by the position of that entry, then by descending entries.
/// Throws SpectrumNotInField naming the irreducible factor when the
/// characteristic polynomial does not split over Q(i).
Diagonalization diagonalize(const Matrix& S);

/// The field in coordinates y = P^-1 x: y' = P^-1 X(P y), truncated at order.
/// Throws SingularMatrix.
VectorField apply_linear_change(const VectorField& X, const Matrix& P, int order = kExact);

/// f(P y).
Poly apply_linear_change(const Poly& f, const Matrix& P, int order = kExact);

/// linear_part + jordan_chevalley + diagonalize, with every identity checked.
LinearData analyze_linear_part(const VectorField& X);

}  // namespace pdnf
