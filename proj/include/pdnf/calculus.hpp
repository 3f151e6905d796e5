#pragma once

#include "pdnf/field.hpp"

#include <vector>

namespace pdnf {

/// X(f) = sum_j X_j df/dx_j, truncated at `order`.
Poly derivation(const VectorField& X, const Poly& f, int order = kExact);

/// [X,Y]_i = sum_j (X_j dY_i/dx_j - Y_j dX_i/dx_j), truncated at `order`.
VectorField lie_bracket(const VectorField& X, const VectorField& Y, int order = kExact);

Poly divergence(const VectorField& X);

/// Determinant of a square polynomial matrix (cofactor expansion), truncated.
Poly determinant(const std::vector<std::vector<Poly>>& rows, int order = kExact);

/// X_1 ^ ... ^ X_m. The coefficient on the axis subset J is the m x m minor
/// det[(X_i)_{J_k}].
Multivector wedge_vectors(const std::vector<VectorField>& fields);

/// df_1 ^ ... ^ df_k.
DiffForm wedge_differentials(const std::vector<Poly>& fns);

DiffForm differential(const Poly& f);

/// Interior product i_X w. Throws DegreeZeroForm for 0-forms.
DiffForm contract(const VectorField& X, const DiffForm& w);

DiffForm exterior_derivative(const DiffForm& w);

/// Potential g of a closed 1-form with g(0) = 0, via the radial homotopy
/// g(x) = int_0^1 sum_j x_j a_j(t x) dt. Throws NotClosed if d(alpha) != 0.
Poly poincare_integrate(const DiffForm& alpha);

}  // namespace pdnf
