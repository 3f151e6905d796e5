#include "pdnf/calculus.hpp"

#include "pdnf/errors.hpp"

#include <algorithm>

namespace pdnf {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + ": dimensions " + std::to_string(a) + " and " + std::to_string(b));
    }
}

// All increasing m-subsets of {0..n-1}, lexicographic.
std::vector<AxisSet> subsets(std::size_t n, std::size_t m) {
    std::vector<AxisSet> out;
    AxisSet cur;
    auto rec = [&](auto&& self, unsigned start) -> void {
        if (cur.size() == m) {
            out.push_back(cur);
            return;
        }
        for (unsigned j = start; j < n; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

Poly derivation(const VectorField& X, const Poly& f, int order) {
    require_same_dim(X.dim(), f.dim(), "derivation");
    Poly r(f.dim());
    for (std::size_t j = 0; j < X.dim(); ++j) {
        if (X[j].is_zero()) continue;
        r += Poly::multiply(X[j], f.derivative(j), order);
    }
    return r;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y, int order) {
    require_same_dim(X.dim(), Y.dim(), "lie_bracket");
    std::vector<Poly> out;
    out.reserve(X.dim());
    for (std::size_t i = 0; i < X.dim(); ++i) {
        out.push_back(derivation(X, Y[i], order) - derivation(Y, X[i], order));
    }
    return VectorField(std::move(out));
}

Poly divergence(const VectorField& X) {
    Poly r(X.dim());
    for (std::size_t j = 0; j < X.dim(); ++j) r += X[j].derivative(j);
    return r;
}

Poly determinant(const std::vector<std::vector<Poly>>& rows, int order) {
    const std::size_t m = rows.size();
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "determinant of an empty matrix");
    for (const auto& r : rows) {
        if (r.size() != m) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    }
    if (m == 1) return rows[0][0].truncate(order);
    const std::size_t dim = rows[0][0].dim();
    Poly det(dim);
    for (std::size_t col = 0; col < m; ++col) {
        if (rows[0][col].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(m - 1);
        for (std::size_t i = 1; i < m; ++i) {
            std::vector<Poly> r;
            r.reserve(m - 1);
            for (std::size_t j = 0; j < m; ++j) {
                if (j != col) r.push_back(rows[i][j]);
            }
            minor.push_back(std::move(r));
        }
        Poly term = Poly::multiply(rows[0][col], determinant(minor, order), order);
        if (col % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

Multivector wedge_vectors(const std::vector<VectorField>& fields) {
    if (fields.empty()) throw Error(ErrorKind::InvalidArgument, "wedge of zero vector fields");
    const std::size_t n = fields.front().dim();
    for (const auto& X : fields) require_same_dim(n, X.dim(), "wedge_vectors");
    const std::size_t m = fields.size();
    if (m > n) {
        throw Error(ErrorKind::CountMismatch,
                    "wedge of " + std::to_string(m) + " vector fields in dimension " + std::to_string(n));
    }
    Multivector out{n, static_cast<unsigned>(m), {}};
    for (const auto& J : subsets(n, m)) {
        std::vector<std::vector<Poly>> rows;
        rows.reserve(m);
        for (const auto& X : fields) {
            std::vector<Poly> r;
            r.reserve(m);
            for (unsigned a : J) r.push_back(X[a]);
            rows.push_back(std::move(r));
        }
        Poly minor = determinant(rows);
        if (!minor.is_zero()) out.terms.emplace(J, std::move(minor));
    }
    return out;
}

DiffForm differential(const Poly& f) {
    DiffForm w(f.dim(), 1);
    for (unsigned j = 0; j < f.dim(); ++j) w.add_term({j}, f.derivative(j));
    return w;
}

DiffForm wedge_differentials(const std::vector<Poly>& fns) {
    if (fns.empty()) throw Error(ErrorKind::InvalidArgument, "wedge of zero differentials");
    const std::size_t n = fns.front().dim();
    for (const auto& f : fns) require_same_dim(n, f.dim(), "wedge_differentials");
    const std::size_t k = fns.size();
    if (k > n) {
        throw Error(ErrorKind::CountMismatch,
                    "wedge of " + std::to_string(k) + " differentials in dimension " + std::to_string(n));
    }
    std::vector<std::vector<Poly>> gradients;
    for (const auto& f : fns) {
        std::vector<Poly> g;
        for (std::size_t j = 0; j < n; ++j) g.push_back(f.derivative(j));
        gradients.push_back(std::move(g));
    }
    DiffForm out(n, static_cast<unsigned>(k));
    for (const auto& J : subsets(n, k)) {
        std::vector<std::vector<Poly>> rows;
        for (const auto& g : gradients) {
            std::vector<Poly> r;
            for (unsigned a : J) r.push_back(g[a]);
            rows.push_back(std::move(r));
        }
        out.add_term(J, determinant(rows));
    }
    return out;
}

DiffForm contract(const VectorField& X, const DiffForm& w) {
    require_same_dim(X.dim(), w.dim(), "contract");
    if (w.degree() == 0) throw Error(ErrorKind::DegreeZeroForm, "cannot contract a 0-form");
    DiffForm out(w.dim(), w.degree() - 1);
    for (const auto& [J, f] : w.terms()) {
        for (std::size_t s = 0; s < J.size(); ++s) {
            const Poly& Xa = X[J[s]];
            if (Xa.is_zero()) continue;
            AxisSet rest;
            rest.reserve(J.size() - 1);
            for (std::size_t t = 0; t < J.size(); ++t) {
                if (t != s) rest.push_back(J[t]);
            }
            Poly coeff = Xa * f;
            out.add_term(rest, s % 2 == 0 ? coeff : -coeff);
        }
    }
    return out;
}

DiffForm exterior_derivative(const DiffForm& w) {
    DiffForm out(w.dim(), w.degree() + 1);
    for (const auto& [J, f] : w.terms()) {
        for (unsigned k = 0; k < w.dim(); ++k) {
            if (std::find(J.begin(), J.end(), k) != J.end()) continue;
            Poly dfk = f.derivative(k);
            if (dfk.is_zero()) continue;
            // dx_k ^ dx_J: moving dx_k past the smaller indices of J.
            const auto pos = std::lower_bound(J.begin(), J.end(), k) - J.begin();
            AxisSet key = J;
            key.insert(key.begin() + pos, k);
            out.add_term(key, pos % 2 == 0 ? dfk : -dfk);
        }
    }
    return out;
}

Poly poincare_integrate(const DiffForm& alpha) {
    if (alpha.degree() != 1) throw Error(ErrorKind::InvalidArgument, "poincare_integrate expects a 1-form");
    const DiffForm d_alpha = exterior_derivative(alpha);
    if (!d_alpha.is_zero()) {
        throw Error(ErrorKind::NotClosed, "d(alpha) = " + d_alpha.to_string() + " is not zero");
    }
    const std::size_t n = alpha.dim();
    Poly g(n);
    for (const auto& [J, a] : alpha.terms()) {
        const std::size_t j = J[0];
        for (const auto& [b, c] : a.terms()) {
            // x_j * x^b, scaled by int_0^1 t^{|b|} dt.
            const long d = static_cast<long>(b.degree());
            g.add_term(b + MultiIndex::unit(n, j), c / Scalar(d + 1));
        }
    }
    return g;
}

}  // namespace pdnf
