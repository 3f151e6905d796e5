#include "pdnf/report.hpp"

#include "pdnf/calculus.hpp"
#include "pdnf/errors.hpp"
#include "pdnf/integrability.hpp"
#include "pdnf/linear.hpp"
#include "pdnf/normalform.hpp"
#include "pdnf/resonance.hpp"

#include <algorithm>

namespace pdnf {

namespace {

Json scalar_json(const Scalar& s) {
    return s.to_string();
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json int_matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& v : r) {
            if (v.fits_slong_p()) {
                row.push_back(v.get_si());
            } else {
                row.push_back(v.get_str());
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json map_json(const std::vector<Poly>& map, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (const auto& p : map) out.push_back(to_json(p, names));
    return out;
}

// "zero" for a vanishing certificate, the offending field otherwise.
Json residual_json(const VectorField& X, const std::vector<std::string>& names) {
    if (X.is_zero()) return "zero";
    return to_json(X, names);
}

Json linear_json(const LinearData& lin) {
    Json j;
    j["A"] = matrix_json(lin.A);
    j["S"] = matrix_json(lin.S);
    j["N"] = matrix_json(lin.N);
    j["P"] = matrix_json(lin.P);
    j["S_as_polynomial_in_A"] = lin.s_of_a.to_string("A");
    Json gamma = Json::array();
    for (const auto& g : lin.gamma) gamma.push_back(scalar_json(g));
    j["gamma"] = std::move(gamma);
    return j;
}

struct TorusData {
    ResonanceSet res;
    WeightLattice lattice;
    TorusGenerators torus;
};

TorusData torus_data(const LinearData& lin, int bound) {
    TorusData t;
    t.res = enumerate_resonances(lin.gamma, bound);
    t.lattice = weight_lattice(t.res);
    t.torus = torus_generators(t.lattice, lin.gamma.size());
    return t;
}

Json resonance_json(const TorusData& t, const LinearData& lin, const std::vector<std::string>& names) {
    Json out;
    Json rel = Json::array();
    for (const auto& c : t.res.relations) rel.push_back(c);
    out["resonance"] = {{"bound", t.res.bound},
                        {"relations", std::move(rel)},
                        {"q", t.res.q},
                        {"q_upper", t.res.q_upper},
                        {"complete", t.res.complete},
                        {"completeness", t.res.completeness}};
    out["lattice"] = {{"basis", int_matrix_json(t.lattice.basis)},
                      {"r", t.lattice.r},
                      {"provisional", t.lattice.provisional},
                      {"q_plus_r_at_most_n", t.res.q + t.lattice.r <= lin.gamma.size()}};
    Json zs = Json::array();
    Json divs = Json::array();
    for (const auto& Z : t.torus.Z) {
        zs.push_back(to_json(Z, names));
        divs.push_back(to_json(divergence(Z), names));
    }
    const Matrix s_eig = Matrix::diagonal(lin.gamma);
    const Matrix n_eig = lin.P_inv * lin.N * lin.P;
    out["torus"] = {{"Z", std::move(zs)},
                    {"weights", int_matrix_json(t.torus.weights)},
                    {"divergence", std::move(divs)},
                    {"commutes_with_linear_part", torus_commutes(t.torus, s_eig, n_eig)},
                    {"eigenvalue_sum_zero", isochore_weight_check(lin.gamma)}};
    return out;
}

Json normal_form_json(const NormalizationResult& nf, const TorusData& t, const std::vector<std::string>& names) {
    Json j;
    j["order"] = nf.order;
    j["coordinates"] = "eigencoordinates of the semisimple part, y = P^-1 x";
    j["eigen_field"] = to_json(nf.eigen_field, names);
    j["normalized"] = to_json(nf.normalized, names);
    Json gens = Json::array();
    for (const auto& g : nf.generators) gens.push_back({{"degree", g.degree}, {"W", to_json(g.W, names)}});
    j["generators"] = std::move(gens);
    j["transform"] = map_json(nf.transform, names);
    j["inverse_transform"] = map_json(nf.inverse_transform, names);

    Json cert;
    cert["residual"] = residual_json(nf.residual, names);
    cert["normal_form_through_order"] = nf.residual.is_zero();
    bool resonant_only = true;
    nf.normalized.degree_range(2, nf.order).for_each_term([&](const MultiIndex& b, std::size_t l, const Scalar&) {
        if (!is_resonant_monomial(nf.linear.gamma, b, l)) resonant_only = false;
    });
    cert["nonlinear_terms_resonant"] = resonant_only;
    Json torus_res = Json::array();
    bool torus_clean = true;
    for (const auto& Z : t.torus.Z) {
        const VectorField br = lie_bracket(Z, nf.normalized, nf.order);
        torus_clean = torus_clean && br.is_zero();
        torus_res.push_back(residual_json(br, names));
    }
    cert["torus_residuals"] = std::move(torus_res);
    cert["torus_commutes"] = torus_clean;
    j["certificates"] = std::move(cert);

    if (nf.isochore) {
        const auto& iso = *nf.isochore;
        Json flags = Json::array();
        for (bool b : iso.generator_divergence_free) flags.push_back(b);
        j["isochore"] = {{"input_divergence_free", iso.input_divergence_free},
                         {"generators_divergence_free", std::move(flags)},
                         {"jacobian_determinant", to_json(iso.jacobian_determinant, names)},
                         {"jacobian_is_one", iso.jacobian_is_one},
                         {"normalized_divergence_free", iso.normalized_divergence_free}};
    }
    return j;
}

const VectorField& first_field(const ProblemSpec& spec) {
    if (spec.fields.empty()) throw Error(ErrorKind::InvalidArgument, "the problem declares no vector field");
    return spec.fields.front().field;
}

}  // namespace

Json to_json(const Poly& p, const std::vector<std::string>& names) {
    Json terms = Json::array();
    for (const auto& [b, c] : p.terms()) {
        terms.push_back({{"exponents", b.exponents()}, {"re", c.re().get_str()}, {"im", c.im().get_str()}});
    }
    return {{"terms", std::move(terms)}, {"text", p.to_string(names)}};
}

Json to_json(const VectorField& X, const std::vector<std::string>& names) {
    Json comps = Json::array();
    for (const auto& c : X.components()) comps.push_back(to_json(c, names));
    return comps;
}

Json run(const ProblemSpec& spec) {
    const auto& names = spec.variables;
    Json report;
    report["mode"] = to_string(spec.mode);
    report["order"] = spec.order;
    report["res_bound"] = spec.res_bound;
    report["dimension"] = spec.dim();
    report["variables"] = spec.variables;
    report["isochore_flag"] = spec.isochore;
    Json input;
    for (const auto& f : spec.fields) input["fields"][f.name] = f.field.to_string(names);
    for (const auto& g : spec.integrals) input["integrals"][g.name] = g.poly.to_string(names);
    report["input"] = std::move(input);

    // Torus checks on an order-M normal form need every relation of sum <= M.
    const int bound = std::max(spec.res_bound, spec.order);

    auto attach_linear_and_torus = [&](const LinearData& lin, int b) {
        const TorusData t = torus_data(lin, b);
        report["linear"] = linear_json(lin);
        report.update(resonance_json(t, lin, names));
        return t;
    };

    switch (spec.mode) {
    case Mode::ResonanceOnly: {
        const LinearData lin = analyze_linear_part(first_field(spec));
        attach_linear_and_torus(lin, spec.res_bound);
        break;
    }
    case Mode::Normalize: {
        const NormalizationResult nf = normalize(first_field(spec), {spec.order, spec.isochore});
        const TorusData t = attach_linear_and_torus(nf.linear, bound);
        report["normal_form"] = normal_form_json(nf, t, names);
        break;
    }
    case Mode::Integrability: {
        std::vector<VectorField> fields;
        for (const auto& f : spec.fields) fields.push_back(f.field);
        std::vector<Poly> integrals;
        for (const auto& g : spec.integrals) integrals.push_back(g.poly);
        const IntegrabilityReport rep = check_integrability(fields, integrals, spec.order);
        Json ij;
        ij["m"] = rep.m;
        ij["order"] = rep.order;
        ij["commutation_ok"] = rep.commutation_ok;
        if (rep.noncommuting_pair) {
            ij["noncommuting_pair"] = {spec.fields[rep.noncommuting_pair->first].name,
                                       spec.fields[rep.noncommuting_pair->second].name};
            ij["noncommuting_degree"] = *rep.noncommuting_degree;
        }
        ij["wedge_fields_nonzero"] = rep.wedge_fields_nonzero;
        ij["first_integral_ok"] = rep.first_integral_ok;
        ij["wedge_differentials_nonzero"] = rep.wedge_differentials_nonzero;
        ij["exact_all_degrees"] = rep.exact_all_degrees;
        ij["verdict"] = rep.verdict;
        report["integrability"] = std::move(ij);
        if (rep.verdict) {
            const NormalizationResult nf = normalize(fields.front(), {spec.order, false});
            const TorusData t = attach_linear_and_torus(nf.linear, bound);
            report["normal_form"] = normal_form_json(nf, t, names);
            const std::vector<VectorField> others(fields.begin() + 1, fields.end());
            const LemmaReport lemma = verify_lemma(fields.front(), nf, t.torus, others, integrals, spec.order);
            Json findings = Json::array();
            for (const auto& f : lemma.findings) {
                findings.push_back({{"generator", f.generator}, {"witness", f.witness}, {"degree", f.degree}});
            }
            report["torus_lemma"] = {{"clean", lemma.clean}, {"order", lemma.order}, {"findings", std::move(findings)}};
        }
        break;
    }
    case Mode::Isochore: {
        std::vector<VectorField> fields;
        for (const auto& f : spec.fields) fields.push_back(f.field);
        const IsochoreIntegral gi = isochore_first_integral(fields, spec.order);
        Json alpha = Json::array();
        for (const auto& [axes, coeff] : gi.alpha.terms()) {
            alpha.push_back({{"axes", axes}, {"coefficient", to_json(coeff, names)}});
        }
        report["first_integral"] = {{"alpha", std::move(alpha)},
                                    {"contraction_order", "i_X1 outermost, i_X(n-1) innermost"},
                                    {"g", to_json(gi.g, names)},
                                    {"dg_equals_alpha", differential(gi.g) == gi.alpha}};
        const NormalizationResult nf = normalize(fields.front(), {spec.order, true});
        const TorusData t = attach_linear_and_torus(nf.linear, bound);
        report["normal_form"] = normal_form_json(nf, t, names);
        break;
    }
    case Mode::Simultaneous: {
        std::vector<VectorField> fields;
        for (const auto& f : spec.fields) fields.push_back(f.field);
        const SimultaneousResult sim = normalize_simultaneous(fields, spec.order, spec.res_bound);
        TorusData t{sim.resonances, sim.lattice, sim.torus};
        report["linear"] = linear_json(sim.primary.linear);
        report.update(resonance_json(t, sim.primary.linear, names));
        report["normal_form"] = normal_form_json(sim.primary, t, names);
        Json per_field;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            Json res = Json::array();
            for (const auto& r : sim.torus_residuals[i]) res.push_back(residual_json(r, names));
            per_field[spec.fields[i].name] = {{"normalized", to_json(sim.normalized[i], names)},
                                              {"torus_residuals", std::move(res)}};
        }
        report["simultaneous"] = {{"fields", std::move(per_field)}, {"torus_clean", sim.torus_clean}};
        break;
    }
    }
    return report;
}

std::string run_to_string(const ProblemSpec& spec) {
    return run(spec).dump(2) + "\n";
}

}  // namespace pdnf
