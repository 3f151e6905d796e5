#pragma once

#include "pdnf/field.hpp"
#include "pdnf/resonance.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdnf {

enum class Mode { Normalize, ResonanceOnly, Integrability, Isochore, Simultaneous };

const char* to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

struct NamedField {
    std::string name;
    VectorField field;
    friend bool operator==(const NamedField&, const NamedField&) = default;
};

struct NamedIntegral {
    std::string name;
    Poly poly;
    friend bool operator==(const NamedIntegral&, const NamedIntegral&) = default;
};

inline constexpr int kDefaultOrder = 4;

struct ProblemSpec {
    std::vector<std::string> variables;
    std::vector<NamedField> fields;
    std::vector<NamedIntegral> integrals;
    int order = kDefaultOrder;
    int res_bound = kDefaultResonanceBound;
    Mode mode = Mode::Normalize;
    bool isochore = false;

    std::size_t dim() const { return variables.size(); }
    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Parses a problem document:
///
///   vars x1 x2;
///   field X = [x1 + x1*x2^2, -x2];
///   integral f = x1*x2;
///   order 4;
///   resbound 16;
///   mode normalize;        # normalize | resonance-only | integrability | isochore | simultaneous
///   isochore;
///
/// Expressions: expr := ['+'|'-'] term (('+'|'-') term)*,
/// term := factor (('*'|'/') factor)*, factor := ('-' factor) | atom ('^' nat)?,
/// atom := integer | 'i' | var | '(' expr ')'. Division is by nonzero constants only.
/// Throws ParseError (SyntaxError / UnknownIdentifier / DimensionMismatch) with
/// a 1-based line:column.
ProblemSpec parse_problem(std::string_view text);

/// Canonical text; parse_problem(format_problem(s)) == s.
std::string format_problem(const ProblemSpec& spec);

/// Parses a single polynomial expression over the given variables.
Poly parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace pdnf
