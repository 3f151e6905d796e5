#pragma once

#include "pdnf/field.hpp"
#include "pdnf/normalform.hpp"
#include "pdnf/resonance.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pdnf {

/// Verdict on m commuting fields plus n - m common first integrals. Every
/// check is an exact polynomial identity through degree `order`.
struct IntegrabilityReport {
    std::size_t m = 0;
    int order = 0;
    bool commutation_ok = false;
    std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair;  // 0-based
    std::optional<int> noncommuting_degree;
    bool wedge_fields_nonzero = false;
    std::vector<std::vector<bool>> first_integral_ok;  // [i][j]: X_i(f_j) == 0
    bool wedge_differentials_nonzero = false;
    /// Brackets and derivatives were exact in every degree, not just up to order.
    bool exact_all_degrees = false;
    bool verdict = false;
};

/// Throws CountMismatch unless fields.size() + integrals.size() == n.
IntegrabilityReport check_integrability(const std::vector<VectorField>& fields, const std::vector<Poly>& integrals,
                                        int order);

struct IsochoreIntegral {
    DiffForm alpha;  // i_{X_1} i_{X_2} ... i_{X_{n-1}} (dx_1 ^ ... ^ dx_n)
    Poly g;          // dg = alpha, g(0) = 0
};

/// Common first integral of n - 1 commuting divergence-free fields. The
/// innermost contraction is with X_{n-1}, the outermost with X_1.
IsochoreIntegral isochore_first_integral(const std::vector<VectorField>& fields, int order);

struct LemmaFinding {
    std::size_t generator = 0;       // index k of Z_k
    std::string witness;             // "Y1", "f2", ...
    int degree = 0;                  // lowest degree with a surviving term
};

struct LemmaReport {
    int order = 0;
    bool clean = true;
    std::vector<LemmaFinding> findings;
};

/// For every torus generator Z_k, checks [Z_k, Y] and Z_k(f) through degree
/// `order` for witnesses Y commuting with X and first integrals f of X. The
/// witnesses are given in input coordinates; they are moved into the normal
/// coordinates of `nf` first. Throws InvalidWitness if a witness fails its
/// precondition against the input field `X`.
LemmaReport verify_lemma(const VectorField& X, const NormalizationResult& nf, const TorusGenerators& torus,
                         const std::vector<VectorField>& commuting, const std::vector<Poly>& integrals, int order);

}  // namespace pdnf
