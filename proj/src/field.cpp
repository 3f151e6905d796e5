#include "pdnf/field.hpp"

#include "pdnf/errors.hpp"

#include <algorithm>

namespace pdnf {

VectorField::VectorField(std::size_t dim) : comps_(dim, Poly(dim)) {}

VectorField::VectorField(std::vector<Poly> components) : comps_(std::move(components)) {
    for (const auto& c : comps_) {
        if (c.dim() != comps_.size()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "vector field with " + std::to_string(comps_.size()) +
                            " components has a component in dimension " + std::to_string(c.dim()));
        }
    }
}

VectorField VectorField::monomial(const MultiIndex& b, std::size_t axis, const Scalar& c) {
    if (axis >= b.dim()) throw Error(ErrorKind::AxisOutOfRange, "vector field axis out of range");
    VectorField X(b.dim());
    X.comps_[axis].add_term(b, c);
    return X;
}

VectorField VectorField::diagonal(const std::vector<Scalar>& weights) {
    const std::size_t n = weights.size();
    VectorField X(n);
    for (std::size_t j = 0; j < n; ++j) X.comps_[j].add_term(MultiIndex::unit(n, j), weights[j]);
    return X;
}

bool VectorField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

int VectorField::degree() const {
    int d = -1;
    for (const auto& c : comps_) d = std::max(d, c.degree());
    return d;
}

int VectorField::min_degree() const {
    int d = -1;
    for (const auto& c : comps_) {
        const int m = c.min_degree();
        if (m >= 0 && (d < 0 || m < d)) d = m;
    }
    return d;
}

void VectorField::check_dim(const VectorField& o) const {
    if (dim() != o.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vector fields in dimensions " + std::to_string(dim()) + " and " + std::to_string(o.dim()));
    }
}

VectorField VectorField::operator-() const {
    VectorField r(*this);
    for (auto& c : r.comps_) c = -c;
    return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
    check_dim(o);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    check_dim(o);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}

VectorField& VectorField::operator*=(const Scalar& c) {
    for (auto& p : comps_) p *= c;
    return *this;
}

VectorField VectorField::scaled(const Poly& f, int order) const {
    std::vector<Poly> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(Poly::multiply(f, c, order));
    return VectorField(std::move(out));
}

VectorField VectorField::truncate(int order) const {
    return degree_range(0, order);
}

VectorField VectorField::homogeneous(int degree) const {
    return degree_range(degree, degree);
}

VectorField VectorField::degree_range(int lo, int hi) const {
    VectorField r(*this);
    for (auto& c : r.comps_) c = c.degree_range(lo, hi);
    return r;
}

std::string VectorField::to_string(const std::vector<std::string>& names) const {
    std::string out = "[";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i > 0) out += ", ";
        out += comps_[i].to_string(names);
    }
    return out + "]";
}

DiffForm DiffForm::function(const Poly& f) {
    DiffForm w(f.dim(), 0);
    w.add_term({}, f);
    return w;
}

DiffForm DiffForm::basis(std::size_t dim, const std::vector<unsigned>& axes, const Poly& coeff) {
    if (coeff.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "form coefficient in wrong dimension");
    AxisSet sorted = axes;
    // Bubble sort to track the permutation sign; p is small.
    int sign = 1;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= dim) throw Error(ErrorKind::AxisOutOfRange, "form axis out of range");
        for (std::size_t j = 0; j + 1 < sorted.size() - i; ++j) {
            if (sorted[j] > sorted[j + 1]) {
                std::swap(sorted[j], sorted[j + 1]);
                sign = -sign;
            }
        }
    }
    DiffForm w(dim, static_cast<unsigned>(axes.size()));
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return w;
    w.add_term(sorted, sign > 0 ? coeff : -coeff);
    return w;
}

DiffForm DiffForm::volume(std::size_t dim) {
    AxisSet all(dim);
    for (unsigned j = 0; j < dim; ++j) all[j] = j;
    return basis(dim, all, Poly::constant(dim, Scalar(1)));
}

Poly DiffForm::coeff(const AxisSet& axes) const {
    auto it = terms_.find(axes);
    return it == terms_.end() ? Poly(dim_) : it->second;
}

void DiffForm::add_term(const AxisSet& sorted_axes, const Poly& f) {
    if (sorted_axes.size() != degree_) throw Error(ErrorKind::InvalidArgument, "basis element has wrong degree");
    if (f.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "form coefficient in wrong dimension");
    if (!std::is_sorted(sorted_axes.begin(), sorted_axes.end()) ||
        std::adjacent_find(sorted_axes.begin(), sorted_axes.end()) != sorted_axes.end()) {
        throw Error(ErrorKind::InvalidArgument, "form key must be strictly increasing");
    }
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(sorted_axes, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void DiffForm::check_compatible(const DiffForm& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_) {
        throw Error(ErrorKind::DimensionMismatch, "forms differ in dimension or degree");
    }
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
    check_compatible(o);
    for (const auto& [k, f] : o.terms_) add_term(k, f);
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
    check_compatible(o);
    for (const auto& [k, f] : o.terms_) add_term(k, -f);
    return *this;
}

std::string DiffForm::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    const auto vars = names.empty() ? default_names(dim_) : names;
    std::string out;
    for (const auto& [k, f] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + f.to_string(vars) + ")";
        for (unsigned a : k) out += "*d" + vars[a];
    }
    return out;
}

}  // namespace pdnf
