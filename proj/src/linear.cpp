#include "pdnf/linear.hpp"

#include "pdnf/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pdnf {

Matrix linear_part(const VectorField& X) {
    const std::size_t n = X.dim();
    Matrix A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!X[i].constant_term().is_zero()) {
            throw Error(ErrorKind::NonVanishingAtOrigin,
                        "component " + std::to_string(i + 1) + " has constant term " +
                            X[i].constant_term().to_string());
        }
        for (std::size_t j = 0; j < n; ++j) A(i, j) = X[i].coeff(MultiIndex::unit(n, j));
    }
    return A;
}

VectorField linear_field(const Matrix& A) {
    if (!A.is_square()) throw Error(ErrorKind::DimensionMismatch, "linear field needs a square matrix");
    const std::size_t n = A.rows();
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < n; ++i) {
        Poly p(n);
        for (std::size_t j = 0; j < n; ++j) p.add_term(MultiIndex::unit(n, j), A(i, j));
        comps.push_back(std::move(p));
    }
    return VectorField(std::move(comps));
}

JordanChevalley jordan_chevalley(const Matrix& A) {
    if (!A.is_square()) throw Error(ErrorKind::DimensionMismatch, "jordan_chevalley needs a square matrix");
    const std::size_t n = A.rows();
    const UPoly chi = characteristic_polynomial(A);
    const UPoly s = squarefree_part(chi);
    const UPoly ds = s.derivative();

    UPoly p = UPoly::monomial(1);
    if (s.degree() < chi.degree()) {
        // p <- p - s(p) / s'(p)  (mod chi); converges in O(log n) steps.
        for (std::size_t iter = 0; iter <= n + 1; ++iter) {
            const UPoly sp = UPoly::compose_mod(s, p, chi);
            if (sp.is_zero()) break;
            const UPoly dsp = UPoly::compose_mod(ds, p, chi);
            p = (p - (sp * UPoly::inverse_mod(dsp, chi)).mod(chi)).mod(chi);
        }
    }
    JordanChevalley out{p.evaluate(A), Matrix(n, n), p};
    out.N = A - out.S;
    if (!s.evaluate(out.S).is_zero() || out.S * out.N != out.N * out.S ||
        !out.N.pow(static_cast<unsigned>(n)).is_zero()) {
        throw Error(ErrorKind::InternalFault, "Jordan-Chevalley identities failed for " + A.to_string());
    }
    return out;
}

Diagonalization diagonalize(const Matrix& S) {
    if (!S.is_square()) throw Error(ErrorKind::DimensionMismatch, "diagonalize needs a square matrix");
    const std::size_t n = S.rows();
    const UPoly s = squarefree_part(characteristic_polynomial(S));
    if (!s.evaluate(S).is_zero()) throw Error(ErrorKind::InvalidArgument, "matrix is not semisimple");
    const RootSearch found = gaussian_rational_roots(s);
    if (found.remainder.degree() > 0) {
        throw Error(ErrorKind::SpectrumNotInField,
                    "characteristic polynomial has the factor " + found.remainder.to_string() +
                        " with no root in Q(i)");
    }

    struct Column {
        std::vector<Scalar> v;
        Scalar eigenvalue;
        std::size_t lead;
    };
    std::vector<Column> cols;
    for (const Scalar& lambda : found.roots) {
        for (auto v : (S - Matrix::identity(n) * lambda).nullspace()) {
            std::size_t lead = 0;
            while (v[lead].is_zero()) ++lead;
            const Scalar inv = v[lead].inverse();
            for (auto& x : v) x *= inv;
            cols.push_back({std::move(v), lambda, lead});
        }
    }
    if (cols.size() != n) throw Error(ErrorKind::InternalFault, "eigenvectors do not span");
    std::sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) {
        if (a.lead != b.lead) return a.lead < b.lead;
        return std::lexicographical_compare(b.v.begin(), b.v.end(), a.v.begin(), a.v.end());
    });

    Diagonalization out;
    std::vector<std::vector<Scalar>> vs;
    for (auto& c : cols) {
        out.gamma.push_back(c.eigenvalue);
        vs.push_back(std::move(c.v));
    }
    out.P = Matrix::from_columns(vs);
    if (out.P.inverse() * S * out.P != Matrix::diagonal(out.gamma)) {
        throw Error(ErrorKind::InternalFault, "eigenbasis does not diagonalize " + S.to_string());
    }
    return out;
}

namespace {

std::vector<Poly> linear_substitution(const Matrix& P) {
    const std::size_t n = P.rows();
    std::vector<Poly> subs;
    for (std::size_t i = 0; i < n; ++i) {
        Poly p(n);
        for (std::size_t j = 0; j < n; ++j) p.add_term(MultiIndex::unit(n, j), P(i, j));
        subs.push_back(std::move(p));
    }
    return subs;
}

}  // namespace

Poly apply_linear_change(const Poly& f, const Matrix& P, int order) {
    if (!P.is_square() || P.rows() != f.dim()) throw Error(ErrorKind::DimensionMismatch, "change of basis shape");
    return f.truncate(order).compose(linear_substitution(P), order);
}

VectorField apply_linear_change(const VectorField& X, const Matrix& P, int order) {
    if (!P.is_square() || P.rows() != X.dim()) throw Error(ErrorKind::DimensionMismatch, "change of basis shape");
    const Matrix P_inv = P.inverse();
    const std::size_t n = X.dim();
    const auto subs = linear_substitution(P);
    std::vector<Poly> pulled;
    for (std::size_t i = 0; i < n; ++i) pulled.push_back(X[i].truncate(order).compose(subs, order));
    std::vector<Poly> out;
    for (std::size_t i = 0; i < n; ++i) {
        Poly p(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!P_inv(i, j).is_zero()) p += pulled[j] * P_inv(i, j);
        }
        out.push_back(std::move(p));
    }
    return VectorField(std::move(out));
}

LinearData analyze_linear_part(const VectorField& X) {
    LinearData d;
    d.A = linear_part(X);
    auto jc = jordan_chevalley(d.A);
    d.S = std::move(jc.S);
    d.N = std::move(jc.N);
    d.s_of_a = std::move(jc.s_of_a);
    auto diag = diagonalize(d.S);
    d.gamma = std::move(diag.gamma);
    d.P = std::move(diag.P);
    d.P_inv = d.P.inverse();
    return d;
}

}  // namespace pdnf
