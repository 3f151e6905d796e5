#include "pdnf/normalform.hpp"

#include "pdnf/calculus.hpp"
#include "pdnf/errors.hpp"

#include <algorithm>
#include <map>

namespace pdnf {

namespace {

std::vector<Scalar> diagonal_of(const Matrix& S) {
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < S.rows(); ++i) d.push_back(S(i, i));
    return d;
}

bool is_identity_map(const std::vector<Poly>& map, int order) {
    const auto id = identity_map(map.size());
    for (std::size_t j = 0; j < map.size(); ++j) {
        if (map[j].truncate(order) != id[j]) return false;
    }
    return true;
}

// exp(L_V) f = sum_m V^m(f) / m!, truncated.
Poly exp_derivation(const VectorField& V, const Poly& f, int order) {
    Poly acc = f.truncate(order);
    Poly term = acc;
    for (long m = 1; !term.is_zero(); ++m) {
        term = derivation(V, term, order) * Scalar(Rational(1, m));
        acc += term;
    }
    return acc;
}

}  // namespace

HomologicalSolution homological_solve(const VectorField& Xk, const LinearData& lin) {
    const std::size_t n = Xk.dim();
    if (lin.S.rows() != n) throw Error(ErrorKind::DimensionMismatch, "linear data and field differ in dimension");
    if (!lin.S.is_diagonal()) throw Error(ErrorKind::NotDiagonalized, "semisimple part is not diagonal");
    const std::vector<Scalar> gamma = diagonal_of(lin.S);
    const VectorField nil = linear_field(lin.N);

    std::map<Scalar, VectorField> by_weight;
    Xk.for_each_term([&](const MultiIndex& b, std::size_t l, const Scalar& c) {
        auto [it, inserted] = by_weight.try_emplace(monomial_weight(gamma, b, l), VectorField(n));
        it->second += VectorField::monomial(b, l, c);
    });

    HomologicalSolution sol{VectorField(n), VectorField(n)};
    const int deg = Xk.degree();
    for (const auto& [lambda, part] : by_weight) {
        if (lambda.is_zero()) {
            sol.resonant_part += part;
            continue;
        }
        // W = lambda^-1 sum_m (-ad_N / lambda)^m part
        const Scalar inv = lambda.inverse();
        VectorField term = part * inv;
        const std::size_t max_steps = n * static_cast<std::size_t>(std::max(deg, 1)) + n + 2;
        std::size_t steps = 0;
        while (!term.is_zero()) {
            sol.W += term;
            term = lie_bracket(nil, term) * (-inv);
            if (++steps > max_steps) throw Error(ErrorKind::InternalFault, "ad_N is not nilpotent on this degree");
        }
    }
    const VectorField linear = linear_field(lin.S + lin.N);
    if (lie_bracket(linear, sol.W) != Xk - sol.resonant_part) {
        throw Error(ErrorKind::InternalFault, "homological equation not satisfied");
    }
    return sol;
}

VectorField lie_transform(const VectorField& X, const VectorField& W, int order) {
    if (W.is_zero()) return X.truncate(order);
    if (W.min_degree() != W.degree() || W.degree() < 2) {
        throw Error(ErrorKind::InvalidGenerator,
                    "generator must be homogeneous of degree >= 2, got degrees " + std::to_string(W.min_degree()) +
                        ".." + std::to_string(W.degree()));
    }
    VectorField result = X.truncate(order);
    VectorField term = result;
    for (long m = 1; !term.is_zero(); ++m) {
        term = lie_bracket(W, term, order) * Scalar(Rational(1, m));
        result += term;
    }
    return result;
}

std::vector<Poly> identity_map(std::size_t dim) {
    std::vector<Poly> id;
    for (std::size_t j = 0; j < dim; ++j) id.push_back(Poly::variable(dim, j));
    return id;
}

std::vector<Poly> flow_map(const VectorField& W, int order) {
    std::vector<Poly> out;
    for (std::size_t j = 0; j < W.dim(); ++j) out.push_back(exp_derivation(W, Poly::variable(W.dim(), j), order));
    return out;
}

std::vector<Poly> compose_maps(const std::vector<Poly>& outer, const std::vector<Poly>& inner, int order) {
    std::vector<Poly> out;
    out.reserve(outer.size());
    for (const auto& p : outer) out.push_back(p.truncate(order).compose(inner, order));
    return out;
}

std::vector<Poly> revert_map(const std::vector<Poly>& map, int order) {
    const std::size_t n = map.size();
    const auto id = identity_map(n);
    std::vector<Poly> higher;
    for (std::size_t j = 0; j < n; ++j) {
        if (!map[j].constant_term().is_zero() || map[j].homogeneous(1) != id[j]) {
            throw Error(ErrorKind::InvalidArgument, "map is not tangent to the identity");
        }
        higher.push_back(map[j].degree_range(2, order));
    }
    // G = id - H(G). After pass t, G is exact through degree t + 1, so the
    // pass only needs that precision.
    std::vector<Poly> inv = id;
    for (int pass = 1; pass < order; ++pass) {
        const auto hg = compose_maps(higher, inv, pass + 1);
        for (std::size_t j = 0; j < n; ++j) inv[j] = id[j] - hg[j];
    }
    return inv;
}

Poly jacobian_determinant(const std::vector<Poly>& map, int order) {
    std::vector<std::vector<Poly>> rows;
    for (const auto& p : map) {
        std::vector<Poly> r;
        for (std::size_t j = 0; j < map.size(); ++j) r.push_back(p.derivative(j).truncate(order));
        rows.push_back(std::move(r));
    }
    return determinant(rows, order);
}

NormalizationResult normalize(const VectorField& X, const NormalizeOptions& options) {
    const int M = options.order;
    if (M < 1) throw Error(ErrorKind::InvalidArgument, "normalization order must be at least 1");
    const std::size_t n = X.dim();

    NormalizationResult nf;
    nf.order = M;
    nf.linear = analyze_linear_part(X);

    if (options.isochore) {
        const Poly div = divergence(X);
        if (!div.is_zero()) throw Error(ErrorKind::NotIsochore, "div X = " + div.to_string());
        nf.isochore.emplace();
        nf.isochore->input_divergence_free = true;
    }

    nf.eigen_field = apply_linear_change(X, nf.linear.P, M);
    LinearData& el = nf.eigen_linear;
    el.A = linear_part(nf.eigen_field);
    el.S = Matrix::diagonal(nf.linear.gamma);
    el.N = el.A - el.S;
    el.s_of_a = nf.linear.s_of_a;
    el.gamma = nf.linear.gamma;
    el.P = Matrix::identity(n);
    el.P_inv = Matrix::identity(n);
    if (el.N != nf.linear.P_inv * nf.linear.N * nf.linear.P) {
        throw Error(ErrorKind::InternalFault, "nilpotent part does not transform with the eigenbasis");
    }

    // The Jacobian certificate needs the transform one degree beyond M.
    const int map_order = options.isochore ? M + 1 : M;
    VectorField current = nf.eigen_field;
    for (int k = 2; k <= M; ++k) {
        const HomologicalSolution sol = homological_solve(current.homogeneous(k), el);
        if (sol.W.is_zero()) continue;
        current = lie_transform(current, sol.W, M);
        if (current.homogeneous(k) != sol.resonant_part) {
            throw Error(ErrorKind::InternalFault, "degree " + std::to_string(k) + " not normalized");
        }
        if (nf.isochore) nf.isochore->generator_divergence_free.push_back(divergence(sol.W).is_zero());
        nf.generators.push_back({k, sol.W});
    }

    nf.normalized = current;
    nf.residual = lie_bracket(current, linear_field(el.S), M);

    // T = psi_M o ... o psi_2 with psi_k the time-1 flow of -W_k. Since
    // f o psi_k = exp(L_{-W_k}) f, the coordinates of T are
    // exp(L_{-W_2}) ... exp(L_{-W_M}) x_j, applied innermost first.
    std::vector<Poly> transform = identity_map(n);
    for (auto g = nf.generators.rbegin(); g != nf.generators.rend(); ++g) {
        const VectorField minus_w = -g->W;
        for (auto& p : transform) p = exp_derivation(minus_w, p, map_order);
    }

    if (nf.isochore) {
        nf.isochore->jacobian_determinant = jacobian_determinant(transform, M);
        nf.isochore->jacobian_is_one = nf.isochore->jacobian_determinant == Poly::constant(n, Scalar(1));
        nf.isochore->normalized_divergence_free = divergence(nf.normalized).truncate(M - 1).is_zero();
    }

    for (const auto& p : transform) nf.transform.push_back(p.truncate(M));
    nf.inverse_transform = revert_map(nf.transform, M);
    if (!is_identity_map(compose_maps(nf.transform, nf.inverse_transform, M), M) ||
        !is_identity_map(compose_maps(nf.inverse_transform, nf.transform, M), M)) {
        throw Error(ErrorKind::InternalFault, "transform and its reversion do not compose to the identity");
    }
    return nf;
}

VectorField push_forward(const NormalizationResult& nf, const VectorField& Y) {
    VectorField out = apply_linear_change(Y, nf.linear.P, nf.order);
    for (const auto& g : nf.generators) out = lie_transform(out, g.W, nf.order);
    return out;
}

Poly pull_function(const NormalizationResult& nf, const Poly& f) {
    const Poly eig = apply_linear_change(f, nf.linear.P, nf.order);
    return eig.compose(nf.inverse_transform, nf.order);
}

std::optional<int> lowest_noncommuting_degree(const VectorField& X, const VectorField& Y, int order) {
    const VectorField br = lie_bracket(X, Y, order);
    if (br.is_zero()) return std::nullopt;
    return br.min_degree();
}

SimultaneousResult normalize_simultaneous(const std::vector<VectorField>& fields, int order, int resonance_bound) {
    if (fields.empty()) throw Error(ErrorKind::InvalidArgument, "no fields to normalize");
    const std::size_t n = fields.front().dim();
    for (const auto& X : fields) {
        if (X.dim() != n) throw Error(ErrorKind::DimensionMismatch, "fields differ in dimension");
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        for (std::size_t j = i + 1; j < fields.size(); ++j) {
            if (auto d = lowest_noncommuting_degree(fields[i], fields[j], order)) {
                throw Error(ErrorKind::NotCommuting, "[X" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) +
                                                         "] has a nonzero term of degree " + std::to_string(*d));
            }
        }
    }
    SimultaneousResult out;
    out.primary = normalize(fields.front(), {order, false});
    out.normalized.push_back(out.primary.normalized);
    for (std::size_t i = 1; i < fields.size(); ++i) out.normalized.push_back(push_forward(out.primary, fields[i]));

    out.resonances = enumerate_resonances(out.primary.linear.gamma, std::max(resonance_bound, order));
    out.lattice = weight_lattice(out.resonances);
    out.torus = torus_generators(out.lattice, n);
    out.torus_clean = true;
    for (const auto& Xi : out.normalized) {
        std::vector<VectorField> row;
        for (const auto& Z : out.torus.Z) {
            row.push_back(lie_bracket(Z, Xi, order));
            if (!row.back().is_zero()) out.torus_clean = false;
        }
        out.torus_residuals.push_back(std::move(row));
    }
    return out;
}

}  // namespace pdnf
