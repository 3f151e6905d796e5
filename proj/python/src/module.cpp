#include "pdnf/calculus.hpp"
#include "pdnf/errors.hpp"
#include "pdnf/integrability.hpp"
#include "pdnf/normalform.hpp"
#include "pdnf/problem.hpp"
#include "pdnf/report.hpp"
#include "pdnf/resonance.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace pdnf;

namespace {

using Names = std::vector<std::string>;

VectorField parse_field(const std::vector<std::string>& comps, const Names& names) {
    if (comps.size() != names.size())
        throw Error(ErrorKind::DimensionMismatch, "field has " + std::to_string(comps.size()) + " components for " +
                                                      std::to_string(names.size()) + " variables");
    std::vector<Poly> polys;
    for (const auto& c : comps) polys.push_back(parse_polynomial(c, names));
    return VectorField(std::move(polys));
}

Json map_json(const std::vector<Poly>& map, const Names& names) {
    Json out = Json::array();
    for (const auto& p : map) out.push_back(to_json(p, names));
    return out;
}

// Results cross the boundary as JSON text; the Python side decodes them.
std::string run_text(const std::string& text) { return run_to_string(parse_problem(text)); }

std::string canonical(const std::string& text) { return format_problem(parse_problem(text)); }

std::string resonances(const std::vector<std::string>& eigenvalues, int bound) {
    std::vector<Scalar> gamma;
    for (const auto& e : eigenvalues) {
        const Poly p = parse_polynomial(e, {});
        gamma.push_back(p.constant_term());
    }
    const ResonanceSet r = enumerate_resonances(gamma, bound);
    const WeightLattice w = weight_lattice(r);
    Json lattice = Json::array();
    for (const auto& row : w.basis) {
        Json v = Json::array();
        for (const auto& x : row) v.push_back(x.get_str());
        lattice.push_back(std::move(v));
    }
    return Json{{"relations", r.relations},
                {"q", r.q},
                {"q_upper", r.q_upper},
                {"complete", r.complete},
                {"completeness", r.completeness},
                {"lattice", std::move(lattice)},
                {"r", w.r}}
        .dump();
}

std::string normalize_field(const std::vector<std::string>& field, const Names& names, int order, bool isochore) {
    const NormalizationResult nf = normalize(parse_field(field, names), {order, isochore});
    Json gens = Json::array();
    for (const auto& g : nf.generators) gens.push_back({{"degree", g.degree}, {"W", to_json(g.W, names)}});
    Json out = {{"order", nf.order},
                {"normalized", to_json(nf.normalized, names)},
                {"generators", std::move(gens)},
                {"transform", map_json(nf.transform, names)},
                {"inverse_transform", map_json(nf.inverse_transform, names)},
                {"certified", nf.certified()}};
    if (nf.isochore) out["jacobian_is_one"] = nf.isochore->jacobian_is_one;
    return out.dump();
}

std::vector<std::string> bracket(const std::vector<std::string>& X, const std::vector<std::string>& Y,
                                 const Names& names) {
    const VectorField B = lie_bracket(parse_field(X, names), parse_field(Y, names));
    std::vector<std::string> out;
    for (const auto& c : B.components()) out.push_back(c.to_string(names));
    return out;
}

bool integrable(const std::vector<std::vector<std::string>>& fields, const std::vector<std::string>& integrals,
                const Names& names, int order) {
    std::vector<VectorField> xs;
    for (const auto& f : fields) xs.push_back(parse_field(f, names));
    std::vector<Poly> fs;
    for (const auto& f : integrals) fs.push_back(parse_polynomial(f, names));
    return check_integrability(xs, fs, order).verdict;
}

}  // namespace

PYBIND11_MODULE(_pdnf, m) {
    m.doc() = "Exact Poincare-Dulac normal forms";

    // translators run newest first, so the subclass is registered last
    const auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());

    m.def("run", &run_text, py::arg("text"));
    m.def("canonical", &canonical, py::arg("text"));
    m.def("resonances", &resonances, py::arg("eigenvalues"), py::arg("bound") = kDefaultResonanceBound);
    m.def("normalize", &normalize_field, py::arg("field"), py::arg("variables"), py::arg("order") = kDefaultOrder,
          py::arg("isochore") = false);
    m.def("bracket", &bracket, py::arg("X"), py::arg("Y"), py::arg("variables"));
    m.def("integrable", &integrable, py::arg("fields"), py::arg("integrals"), py::arg("variables"),
          py::arg("order") = kDefaultOrder);
}
