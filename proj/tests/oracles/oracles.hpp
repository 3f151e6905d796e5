#pragma once

// Brute-force reference computations for the test suites. They share only
// the Scalar and Poly kernels with the engine.

#include "pdnf/field.hpp"

#include <set>
#include <vector>

namespace pdnf::oracle {

/// Every c in [-1, box_bound]^n passing the literal membership test
/// (sum c_j gamma_j = 0, c_j >= -1, sum c_j >= 1, at most one negative).
std::set<std::vector<int>> brute_resonances(const std::vector<Scalar>& gamma, int box_bound);

/// Weight of x^b d/dx_l read off the expanded bracket [sum gamma_j x_j d_j, x^b d_l].
Scalar brute_bracket_weight(const std::vector<Scalar>& gamma, const MultiIndex& b, std::size_t axis);

/// (D phi . X) o phi^-1 truncated at order, by direct substitution and
/// fixed-point reversion. phi must be identity + higher order.
VectorField brute_pushforward(const VectorField& X, const std::vector<Poly>& phi, int order);

/// phi^-1 for phi = identity + higher order, truncated.
std::vector<Poly> brute_inverse(const std::vector<Poly>& phi, int order);

/// p(subs) truncated, by explicit products.
Poly substitute(const Poly& p, const std::vector<Poly>& subs, int order);

/// Time-1 flow of W: x_j -> sum_m W^m(x_j) / m!, with W acting as a derivation.
std::vector<Poly> brute_flow_map(const VectorField& W, int order);

/// Leibniz-formula determinant of the Jacobian matrix, truncated.
Poly brute_jacobian_determinant(const std::vector<Poly>& map, int order);

}  // namespace pdnf::oracle
