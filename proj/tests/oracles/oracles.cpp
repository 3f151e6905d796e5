#include "oracles.hpp"

#include "pdnf/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pdnf::oracle {

std::set<std::vector<int>> brute_resonances(const std::vector<Scalar>& gamma, int box_bound) {
    const std::size_t n = gamma.size();
    std::set<std::vector<int>> out;
    std::vector<int> c(n, -1);
    while (true) {
        Scalar dot;
        int sum = 0, negatives = 0;
        bool above = true;
        for (std::size_t j = 0; j < n; ++j) {
            dot += gamma[j] * Scalar(c[j]);
            sum += c[j];
            if (c[j] < 0) ++negatives;
            if (c[j] < -1) above = false;
        }
        if (dot.is_zero() && above && sum >= 1 && negatives <= 1) out.insert(c);
        // odometer over the box
        std::size_t j = 0;
        while (j < n && c[j] == box_bound) c[j++] = -1;
        if (j == n) break;
        ++c[j];
    }
    return out;
}

Scalar brute_bracket_weight(const std::vector<Scalar>& gamma, const MultiIndex& b, std::size_t axis) {
    const std::size_t n = gamma.size();
    // [A, B]_i = sum_j A_j dB_i/dx_j - B_j dA_i/dx_j with A = sum gamma_j x_j d_j, B = x^b d_axis.
    const Poly mono = Poly::monomial(b, Scalar(1));
    Poly bracket_axis(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Poly aj = Poly::monomial(MultiIndex::unit(n, j), gamma[j]);
        bracket_axis += aj * mono.derivative(j);
    }
    const Poly a_axis = Poly::monomial(MultiIndex::unit(n, axis), gamma[axis]);
    bracket_axis -= mono * a_axis.derivative(axis);
    // The bracket must be a multiple of the monomial itself.
    Poly rest = bracket_axis;
    const Scalar w = bracket_axis.coeff(b);
    rest.add_term(b, -w);
    if (!rest.is_zero()) throw Error(ErrorKind::InternalFault, "bracket is not proportional to the monomial");
    return w;
}

Poly substitute(const Poly& p, const std::vector<Poly>& subs, int order) {
    const std::size_t m = subs.front().dim();
    Poly out(m);
    for (const auto& [b, c] : p.terms()) {
        Poly t = Poly::constant(m, c);
        for (std::size_t j = 0; j < b.dim(); ++j) {
            for (unsigned e = 0; e < b[j]; ++e) t = Poly::multiply(t, subs[j], order);
        }
        out += t.truncate(order);
    }
    return out;
}

std::vector<Poly> brute_inverse(const std::vector<Poly>& phi, int order) {
    const std::size_t n = phi.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (phi[j].degree_range(0, 1) != Poly::variable(n, j)) {
            throw Error(ErrorKind::InvalidArgument, "map is not unipotent (identity linear part required)");
        }
    }
    // psi_{k+1} = y - (phi - id)(psi_k)
    std::vector<Poly> psi;
    for (std::size_t j = 0; j < n; ++j) psi.push_back(Poly::variable(n, j));
    for (int it = 0; it < order; ++it) {
        std::vector<Poly> next;
        for (std::size_t j = 0; j < n; ++j) {
            const Poly h = phi[j] - Poly::variable(n, j);
            next.push_back(Poly::variable(n, j) - substitute(h, psi, order));
        }
        psi = std::move(next);
    }
    return psi;
}

VectorField brute_pushforward(const VectorField& X, const std::vector<Poly>& phi, int order) {
    const std::size_t n = X.dim();
    const auto inv = brute_inverse(phi, order);
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < n; ++i) {
        Poly dx(n);
        for (std::size_t j = 0; j < n; ++j) dx += Poly::multiply(phi[i].derivative(j), X[j], order);
        comps.push_back(substitute(dx, inv, order));
    }
    return VectorField(std::move(comps));
}

std::vector<Poly> brute_flow_map(const VectorField& W, int order) {
    const std::size_t n = W.dim();
    auto apply = [&](const Poly& f) {
        Poly out(n);
        for (std::size_t j = 0; j < n; ++j) out += Poly::multiply(W[j], f.derivative(j), order);
        return out;
    };
    std::vector<Poly> out;
    for (std::size_t j = 0; j < n; ++j) {
        Poly term = Poly::variable(n, j);
        Poly sum = term;
        for (int m = 1; m <= order && !term.is_zero(); ++m) {
            term = apply(term) * Scalar(Rational(1, m));
            sum += term;
        }
        out.push_back(sum.truncate(order));
    }
    return out;
}

Poly brute_jacobian_determinant(const std::vector<Poly>& map, int order) {
    const std::size_t n = map.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly det(n);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        Poly prod = Poly::constant(n, Scalar(inversions % 2 ? -1 : 1));
        for (std::size_t i = 0; i < n; ++i) prod = Poly::multiply(prod, map[i].derivative(perm[i]), order);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace pdnf::oracle
