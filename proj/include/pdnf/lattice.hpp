#pragma once

#include "pdnf/scalar.hpp"

#include <vector>

namespace pdnf {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Rank over Q of a list of integer rows of length n.
std::size_t integer_rank(const IntMatrix& rows, std::size_t n);

/// Row-style Hermite normal form of the lattice spanned by `rows`: upper
/// echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& rows, std::size_t n);

/// Basis of {x in Z^n : A x = 0}, as rows in Hermite normal form. The basis
/// is saturated: it spans every integer kernel vector, not a sublattice.
IntMatrix integer_kernel(const IntMatrix& rows, std::size_t n);

}  // namespace pdnf
