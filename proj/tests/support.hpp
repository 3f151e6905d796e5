#pragma once

// Random instance generators and small exact helpers shared by the suites.

#include "pdnf/calculus.hpp"
#include "pdnf/field.hpp"
#include "pdnf/linear.hpp"
#include "pdnf/matrix.hpp"

#include <random>
#include <vector>

namespace pdnf::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Small Gaussian rational: integer parts in [-bound, bound], denominator in {1, 2, 3}.
inline Scalar random_scalar(Rng& rng, int bound, bool complex = true, int max_den = 3) {
    const int den = uniform(rng, 1, max_den);
    const Rational re(uniform(rng, -bound, bound), den);
    const Rational im = complex ? Rational(uniform(rng, -bound, bound), den) : Rational(0);
    return Scalar(re, im);
}

/// Random MultiIndex of total degree exactly `degree`.
inline MultiIndex random_exponent(Rng& rng, std::size_t n, int degree) {
    std::vector<unsigned> e(n, 0);
    for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))];
    return MultiIndex(std::move(e));
}

inline Poly random_poly(Rng& rng, std::size_t n, int min_deg, int max_deg, int terms, int coeff_bound = 3) {
    Poly p(n);
    for (int t = 0; t < terms; ++t) {
        p.add_term(random_exponent(rng, n, uniform(rng, min_deg, max_deg)), random_scalar(rng, coeff_bound, false, 2));
    }
    return p;
}

inline VectorField random_field(Rng& rng, std::size_t n, int min_deg, int max_deg, int terms_per_component) {
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(random_poly(rng, n, min_deg, max_deg, terms_per_component));
    return VectorField(std::move(comps));
}

/// Invertible matrix with small integer entries (unit lower times unit upper
/// triangular, so det = 1 and the inverse stays integral).
inline Matrix random_unimodular(Rng& rng, std::size_t n) {
    Matrix L = Matrix::identity(n), U = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            L(i, j) = Scalar(uniform(rng, -1, 1));
            U(j, i) = Scalar(uniform(rng, -1, 1));
        }
    }
    return L * U;
}

/// Eigenvalues drawn from a small pool so resonances occur regularly.
inline std::vector<Scalar> random_spectrum(Rng& rng, std::size_t n) {
    static const std::vector<Scalar> pool = {
        Scalar(1), Scalar(-1), Scalar(2), Scalar(3), Scalar(-2), Scalar(1, 2), Scalar(0, 1), Scalar(0, -1),
        Scalar(Rational(1), Rational(1)), Scalar(5, 3),
    };
    std::vector<Scalar> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))]);
    return g;
}

/// A = P diag(gamma) P^-1 with P unimodular: diagonalizable over Q(i).
inline Matrix random_diagonalizable(Rng& rng, const std::vector<Scalar>& gamma) {
    const Matrix P = random_unimodular(rng, gamma.size());
    return P * Matrix::diagonal(gamma) * P.inverse();
}

/// Divergence-free nonlinear part built from Hamiltonian-style pairs
/// dH/dx_j d_i - dH/dx_i d_j.
inline VectorField random_divergence_free(Rng& rng, std::size_t n, int min_deg, int max_deg, int terms) {
    VectorField X(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Poly H = random_poly(rng, n, min_deg + 1, max_deg + 1, terms);
            std::vector<Poly> c(n, Poly(n));
            c[i] = H.derivative(j);
            c[j] = -H.derivative(i);
            X += VectorField(std::move(c));
        }
    }
    return X;
}

/// (D phi . X) o phi_inv for a polynomial automorphism with polynomial inverse.
inline VectorField conjugate_exact(const VectorField& X, const std::vector<Poly>& phi, const std::vector<Poly>& phi_inv) {
    const std::size_t n = X.dim();
    std::vector<Poly> out;
    for (std::size_t i = 0; i < n; ++i) {
        Poly c(n);
        for (std::size_t j = 0; j < n; ++j) c += phi[i].derivative(j) * X[j];
        out.push_back(c.compose(phi_inv, kExact));
    }
    return VectorField(std::move(out));
}

inline std::vector<Poly> vars(std::size_t n) {
    std::vector<Poly> v;
    for (std::size_t j = 0; j < n; ++j) v.push_back(Poly::variable(n, j));
    return v;
}

}  // namespace pdnf::testing
