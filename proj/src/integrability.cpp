#include "pdnf/integrability.hpp"

#include "pdnf/calculus.hpp"
#include "pdnf/errors.hpp"

#include <algorithm>

namespace pdnf {

IntegrabilityReport check_integrability(const std::vector<VectorField>& fields, const std::vector<Poly>& integrals,
                                        int order) {
    if (fields.empty()) throw Error(ErrorKind::InvalidArgument, "at least one vector field is required");
    const std::size_t n = fields.front().dim();
    for (const auto& X : fields) {
        if (X.dim() != n) throw Error(ErrorKind::DimensionMismatch, "fields differ in dimension");
    }
    for (const auto& f : integrals) {
        if (f.dim() != n) throw Error(ErrorKind::DimensionMismatch, "integral in the wrong dimension");
    }
    if (fields.size() + integrals.size() != n) {
        throw Error(ErrorKind::CountMismatch, std::to_string(fields.size()) + " fields and " +
                                                  std::to_string(integrals.size()) + " integrals in dimension " +
                                                  std::to_string(n));
    }

    IntegrabilityReport rep;
    rep.m = fields.size();
    rep.order = order;

    int max_degree = -1;
    rep.commutation_ok = true;
    for (std::size_t i = 0; i < fields.size() && rep.commutation_ok; ++i) {
        for (std::size_t j = i + 1; j < fields.size(); ++j) {
            max_degree = std::max(max_degree, fields[i].degree() + fields[j].degree() - 1);
            if (auto d = lowest_noncommuting_degree(fields[i], fields[j], order)) {
                rep.commutation_ok = false;
                rep.noncommuting_pair = std::make_pair(i, j);
                rep.noncommuting_degree = d;
                break;
            }
        }
    }

    rep.wedge_fields_nonzero = !wedge_vectors(fields).is_zero();

    bool integrals_ok = true;
    for (const auto& X : fields) {
        std::vector<bool> row;
        for (const auto& f : integrals) {
            max_degree = std::max(max_degree, X.degree() + f.degree() - 1);
            const bool ok = derivation(X, f, order).is_zero();
            row.push_back(ok);
            integrals_ok = integrals_ok && ok;
        }
        rep.first_integral_ok.push_back(std::move(row));
    }

    rep.wedge_differentials_nonzero = integrals.empty() || !wedge_differentials(integrals).is_zero();
    rep.exact_all_degrees = order >= max_degree;
    rep.verdict = rep.commutation_ok && rep.wedge_fields_nonzero && integrals_ok && rep.wedge_differentials_nonzero;
    return rep;
}

IsochoreIntegral isochore_first_integral(const std::vector<VectorField>& fields, int order) {
    if (fields.empty()) throw Error(ErrorKind::InvalidArgument, "at least one vector field is required");
    const std::size_t n = fields.front().dim();
    if (fields.size() + 1 != n) {
        throw Error(ErrorKind::CountMismatch,
                    "need n - 1 = " + std::to_string(n - 1) + " fields, got " + std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i].dim() != n) throw Error(ErrorKind::DimensionMismatch, "fields differ in dimension");
        const Poly div = divergence(fields[i]);
        if (!div.is_zero()) {
            throw Error(ErrorKind::NotIsochore, "div X" + std::to_string(i + 1) + " = " + div.to_string());
        }
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        for (std::size_t j = i + 1; j < fields.size(); ++j) {
            if (auto d = lowest_noncommuting_degree(fields[i], fields[j], order)) {
                throw Error(ErrorKind::NotCommuting, "[X" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) +
                                                         "] has a nonzero term of degree " + std::to_string(*d));
            }
        }
    }

    DiffForm alpha = DiffForm::volume(n);
    for (std::size_t i = fields.size(); i-- > 0;) alpha = contract(fields[i], alpha);

    IsochoreIntegral out{alpha, poincare_integrate(alpha)};
    if (differential(out.g) != out.alpha) throw Error(ErrorKind::InternalFault, "dg differs from alpha");
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (!derivation(fields[i], out.g).is_zero()) {
            throw Error(ErrorKind::InternalFault, "g is not a first integral of X" + std::to_string(i + 1));
        }
    }
    return out;
}

LemmaReport verify_lemma(const VectorField& X, const NormalizationResult& nf, const TorusGenerators& torus,
                         const std::vector<VectorField>& commuting, const std::vector<Poly>& integrals, int order) {
    if (order > nf.order) {
        throw Error(ErrorKind::InvalidArgument, "normalization order " + std::to_string(nf.order) +
                                                    " is below the requested order " + std::to_string(order));
    }
    if (!nf.residual.truncate(order).is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "field is not in normal form up to the requested order");
    }
    for (std::size_t i = 0; i < commuting.size(); ++i) {
        if (auto d = lowest_noncommuting_degree(X, commuting[i], order)) {
            throw Error(ErrorKind::InvalidWitness,
                        "[X, Y" + std::to_string(i + 1) + "] has a nonzero term of degree " + std::to_string(*d));
        }
    }
    for (std::size_t j = 0; j < integrals.size(); ++j) {
        const Poly xf = derivation(X, integrals[j], order);
        if (!xf.is_zero()) {
            throw Error(ErrorKind::InvalidWitness, "X(f" + std::to_string(j + 1) + ") = " + xf.to_string() + " is not zero");
        }
    }

    LemmaReport rep;
    rep.order = order;
    std::vector<VectorField> ys;
    for (const auto& Y : commuting) ys.push_back(push_forward(nf, Y).truncate(order));
    std::vector<Poly> fs;
    for (const auto& f : integrals) fs.push_back(pull_function(nf, f).truncate(order));

    for (std::size_t k = 0; k < torus.Z.size(); ++k) {
        for (std::size_t i = 0; i < ys.size(); ++i) {
            const VectorField br = lie_bracket(torus.Z[k], ys[i], order);
            if (!br.is_zero()) rep.findings.push_back({k, "Y" + std::to_string(i + 1), br.min_degree()});
        }
        for (std::size_t j = 0; j < fs.size(); ++j) {
            const Poly zf = derivation(torus.Z[k], fs[j], order);
            if (!zf.is_zero()) rep.findings.push_back({k, "f" + std::to_string(j + 1), zf.min_degree()});
        }
    }
    rep.clean = rep.findings.empty();
    return rep;
}

}  // namespace pdnf
