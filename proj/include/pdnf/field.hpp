#pragma once

#include "pdnf/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace pdnf {

/// X = sum_i X_i d/dx_i with polynomial components.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(std::size_t dim);
    explicit VectorField(std::vector<Poly> components);

    /// c * x^b d/dx_axis
    static VectorField monomial(const MultiIndex& b, std::size_t axis, const Scalar& c);
    /// sum_j weights[j] x_j d/dx_j
    static VectorField diagonal(const std::vector<Scalar>& weights);

    std::size_t dim() const { return comps_.size(); }
    const Poly& operator[](std::size_t i) const { return comps_[i]; }
    const std::vector<Poly>& components() const { return comps_; }

    bool is_zero() const;
    int degree() const;
    int min_degree() const;

    VectorField operator-() const;
    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(const Scalar& c);

    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(VectorField a, const Scalar& c) { return a *= c; }
    friend VectorField operator*(const Scalar& c, VectorField a) { return a *= c; }

    friend bool operator==(const VectorField& a, const VectorField& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    /// f * X, truncated at `order`.
    VectorField scaled(const Poly& f, int order = kExact) const;

    VectorField truncate(int order) const;
    VectorField homogeneous(int degree) const;
    VectorField degree_range(int lo, int hi) const;

    /// Visits every monomial term (b, axis, coefficient).
    template <class Fn>
    void for_each_term(Fn&& fn) const {
        for (std::size_t l = 0; l < comps_.size(); ++l) {
            for (const auto& [b, c] : comps_[l].terms()) fn(b, l, c);
        }
    }

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_dim(const VectorField& o) const;

    std::vector<Poly> comps_;
};

/// Key of a basis p-form / p-vector: strictly increasing axis indices.
using AxisSet = std::vector<unsigned>;

/// Differential p-form sum_J f_J dx_J with sorted keys J.
class DiffForm {
public:
    using TermMap = std::map<AxisSet, Poly>;

    DiffForm(std::size_t dim, unsigned degree) : dim_(dim), degree_(degree) {}

    /// f as a 0-form.
    static DiffForm function(const Poly& f);
    /// dx_axes (axes need not be sorted; the sign of the sort is applied).
    static DiffForm basis(std::size_t dim, const std::vector<unsigned>& axes, const Poly& coeff);
    /// dx_1 ^ ... ^ dx_n
    static DiffForm volume(std::size_t dim);

    std::size_t dim() const { return dim_; }
    unsigned degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of dx_J for sorted J; zero polynomial if absent.
    Poly coeff(const AxisSet& axes) const;

    void add_term(const AxisSet& sorted_axes, const Poly& f);

    DiffForm& operator+=(const DiffForm& o);
    DiffForm& operator-=(const DiffForm& o);
    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }

    friend bool operator==(const DiffForm& a, const DiffForm& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_compatible(const DiffForm& o) const;

    std::size_t dim_;
    unsigned degree_;
    TermMap terms_;
};

/// Polynomial m-vector X_1 ^ ... ^ X_m, keyed by axis m-subsets.
struct Multivector {
    std::size_t dim = 0;
    unsigned degree = 0;
    std::map<AxisSet, Poly> terms;

    bool is_zero() const { return terms.empty(); }
};

}  // namespace pdnf
