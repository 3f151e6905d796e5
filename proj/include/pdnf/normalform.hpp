#pragma once

#include "pdnf/field.hpp"
#include "pdnf/linear.hpp"
#include "pdnf/resonance.hpp"

#include <optional>
#include <vector>

namespace pdnf {

/// Homogeneous generator W of degree >= 2 with no weight-zero terms.
struct LieGenerator {
    int degree = 0;
    VectorField W;
};

struct HomologicalSolution {
    VectorField W;              // [X^(1), W] = Xk - resonant
    VectorField resonant_part;  // weight-zero part of Xk
};

/// Splits Xk by ad_{X^s}-weight and inverts ad_{X^(1)} = lambda + ad_{X^nil}
/// on every nonzero weight by a terminating Neumann series. `lin` must
/// describe the linear part in eigencoordinates (S diagonal), else
/// NotDiagonalized.
HomologicalSolution homological_solve(const VectorField& Xk, const LinearData& lin);

/// exp(ad_W) X = sum_m ad_W^m X / m!, truncated at `order`. This is the
/// pushforward of X under the time-1 flow of -W.
VectorField lie_transform(const VectorField& X, const VectorField& W, int order);

/// Time-1 flow map of `W` as a polynomial map, truncated at `order`:
/// x_j -> sum_m L_W^m(x_j) / m!.
std::vector<Poly> flow_map(const VectorField& W, int order);

/// Polynomial map composition (outer o inner), truncated.
std::vector<Poly> compose_maps(const std::vector<Poly>& outer, const std::vector<Poly>& inner, int order);

std::vector<Poly> identity_map(std::size_t dim);

/// Compositional inverse of a map tangent to the identity, by order-by-order
/// reversion. Throws InvalidArgument if the linear part is not the identity.
std::vector<Poly> revert_map(const std::vector<Poly>& map, int order);

/// Jacobian determinant of a polynomial map, truncated.
Poly jacobian_determinant(const std::vector<Poly>& map, int order);

struct NormalizeOptions {
    int order = 2;
    bool isochore = false;
};

struct IsochoreCertificate {
    bool input_divergence_free = false;
    std::vector<bool> generator_divergence_free;  // one per generator
    Poly jacobian_determinant;                    // of transform, through degree order
    bool jacobian_is_one = false;
    bool normalized_divergence_free = false;      // through degree order - 1
};

struct NormalizationResult {
    int order = 0;
    LinearData linear;               // of the input, in input coordinates
    LinearData eigen_linear;         // in eigencoordinates: S diagonal, P = I
    VectorField eigen_field;         // input in eigencoordinates, truncated
    VectorField normalized;
    std::vector<LieGenerator> generators;
    std::vector<Poly> transform;          // eigencoordinates -> normal coordinates
    std::vector<Poly> inverse_transform;
    VectorField residual;                 // [normalized, X^s] truncated at order
    std::optional<IsochoreCertificate> isochore;

    bool certified() const { return residual.is_zero(); }
};

/// Degree-by-degree Poincare-Dulac normalization to `order`, reported in the
/// eigencoordinates of the semisimple part.
NormalizationResult normalize(const VectorField& X, const NormalizeOptions& options);

/// Pushes a field given in input coordinates through the same linear change
/// and generator sequence that normalized the primary field.
VectorField push_forward(const NormalizationResult& nf, const VectorField& Y);

/// f in input coordinates, re-expressed in normal coordinates: f(P T^-1(y)).
Poly pull_function(const NormalizationResult& nf, const Poly& f);

struct SimultaneousResult {
    NormalizationResult primary;
    std::vector<VectorField> normalized;  // every input field, primary first
    ResonanceSet resonances;
    WeightLattice lattice;
    TorusGenerators torus;
    /// torus_residuals[i][k] = [Z_k, normalized[i]] truncated at order.
    std::vector<std::vector<VectorField>> torus_residuals;
    bool torus_clean = false;
};

/// Lowest degree <= order at which [X, Y] is nonzero, or nullopt.
std::optional<int> lowest_noncommuting_degree(const VectorField& X, const VectorField& Y, int order);

/// Normalizes fields[0] and carries the other fields along. Throws
/// NotCommuting naming the first pair and degree where a bracket survives.
/// `resonance_bound` is raised to `order` when smaller, so every monomial of
/// degree <= order is covered by the lattice.
SimultaneousResult normalize_simultaneous(const std::vector<VectorField>& fields, int order,
                                          int resonance_bound = kDefaultResonanceBound);

}  // namespace pdnf
