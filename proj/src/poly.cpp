#include "pdnf/poly.hpp"

#include "pdnf/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pdnf {

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t axis) {
    MultiIndex b(dim);
    b.exps_.at(axis) = 1;
    return b;
}

unsigned MultiIndex::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    MultiIndex r(*this);
    for (std::size_t j = 0; j < exps_.size(); ++j) r.exps_[j] += o.exps_[j];
    return r;
}

bool GradedLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
}

Poly Poly::constant(std::size_t dim, const Scalar& c) {
    Poly p(dim);
    p.add_term(MultiIndex(dim), c);
    return p;
}

Poly Poly::variable(std::size_t dim, std::size_t axis) {
    if (axis >= dim) throw Error(ErrorKind::AxisOutOfRange, "variable index out of range");
    Poly p(dim);
    p.add_term(MultiIndex::unit(dim, axis), Scalar(1));
    return p;
}

Poly Poly::monomial(const MultiIndex& b, const Scalar& c) {
    Poly p(b.dim());
    p.add_term(b, c);
    return p;
}

Scalar Poly::coeff(const MultiIndex& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar Poly::constant_term() const {
    return coeff(MultiIndex(dim_));
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.degree());
}

int Poly::min_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

void Poly::add_term(const MultiIndex& b, const Scalar& c) {
    if (b.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "monomial dimension differs from polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_dim(const Poly& o) const {
    if (dim_ != o.dim_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "polynomials in dimensions " + std::to_string(dim_) + " and " + std::to_string(o.dim_));
    }
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_dim(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_dim(o);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, v] : terms_) v *= c;
    return *this;
}

Poly Poly::multiply(const Poly& a, const Poly& b, int order) {
    a.check_dim(b);
    Poly r(a.dim_);
    for (const auto& [ba, ca] : a.terms_) {
        const int da = static_cast<int>(ba.degree());
        if (da > order) break;
        for (const auto& [bb, cb] : b.terms_) {
            if (da + static_cast<int>(bb.degree()) > order) break;
            r.add_term(ba + bb, ca * cb);
        }
    }
    return r;
}

Poly Poly::derivative(std::size_t axis) const {
    if (axis >= dim_) throw Error(ErrorKind::AxisOutOfRange, "derivative axis out of range");
    Poly r(dim_);
    for (const auto& [b, c] : terms_) {
        const unsigned e = b[axis];
        if (e == 0) continue;
        std::vector<unsigned> exps = b.exponents();
        exps[axis] = e - 1;
        r.add_term(MultiIndex(std::move(exps)), c * Scalar(static_cast<long>(e)));
    }
    return r;
}

Poly Poly::truncate(int order) const {
    return degree_range(0, order);
}

Poly Poly::homogeneous(int degree) const {
    return degree_range(degree, degree);
}

Poly Poly::degree_range(int lo, int hi) const {
    Poly r(dim_);
    for (const auto& [b, c] : terms_) {
        const int d = static_cast<int>(b.degree());
        if (d > hi) break;
        if (d >= lo) r.terms_.emplace_hint(r.terms_.end(), b, c);
    }
    return r;
}

Poly Poly::pow(unsigned e, int order) const {
    Poly result = constant(dim_, Scalar(1)).truncate(order);
    Poly base = truncate(order);
    while (e > 0) {
        if (e & 1u) result = multiply(result, base, order);
        e >>= 1;
        if (e > 0) base = multiply(base, base, order);
    }
    return result;
}

Poly Poly::compose(const std::vector<Poly>& subs, int order) const {
    if (subs.size() != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "substitution needs one polynomial per variable");
    }
    const std::size_t out_dim = subs.empty() ? 0 : subs.front().dim();
    for (const auto& s : subs) {
        if (s.dim() != out_dim) throw Error(ErrorKind::DimensionMismatch, "substitutes differ in dimension");
    }
    // mono[b] = subs^b truncated, each built from a cached neighbour with one multiply.
    std::map<MultiIndex, Poly, GradedLex> mono;
    const Poly one = constant(out_dim, Scalar(1)).truncate(order);
    std::function<const Poly&(const MultiIndex&)> power = [&](const MultiIndex& b) -> const Poly& {
        if (auto it = mono.find(b); it != mono.end()) return it->second;
        std::size_t j = 0;
        while (j < dim_ && b[j] == 0) ++j;
        if (j == dim_) return mono.emplace(b, one).first->second;
        std::vector<unsigned> prev = b.exponents();
        --prev[j];
        Poly p = multiply(power(MultiIndex(std::move(prev))), subs[j], order);
        return mono.emplace(b, std::move(p)).first->second;
    };
    Poly r(out_dim);
    for (const auto& [b, c] : terms_) {
        const Poly& p = power(b);
        for (const auto& [bb, cc] : p.terms()) r.add_term(bb, c * cc);
    }
    return r;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "evaluation point has wrong dimension");
    Scalar total;
    for (const auto& [b, c] : terms_) {
        Scalar t = c;
        for (std::size_t j = 0; j < dim_; ++j) {
            for (unsigned k = 0; k < b[j]; ++k) t *= point[j];
        }
        total += t;
    }
    return total;
}

std::vector<std::string> default_names(std::size_t dim) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) names.push_back("x" + std::to_string(j + 1));
    return names;
}

namespace {

std::string monomial_text(const MultiIndex& b, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t j = 0; j < b.dim(); ++j) {
        if (b[j] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[j];
        if (b[j] > 1) out += '^' + std::to_string(b[j]);
    }
    return out;
}

std::string term_text(const MultiIndex& b, const Scalar& c, const std::vector<std::string>& names) {
    if (b.degree() == 0) return c.to_string();
    const std::string mono = monomial_text(b, names);
    if (c.is_one()) return mono;
    if (c == Scalar(-1)) return "-" + mono;
    if (c.is_real() || sgn(c.re()) == 0) return c.to_string() + "*" + mono;
    return "(" + c.to_string() + ")*" + mono;
}

}  // namespace

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    const std::vector<std::string> fallback = names.empty() ? default_names(dim_) : std::vector<std::string>{};
    const auto& vars = names.empty() ? fallback : names;
    if (vars.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "wrong number of variable names");
    std::string out;
    for (const auto& [b, c] : terms_) {
        std::string t = term_text(b, c, vars);
        if (out.empty()) {
            out = std::move(t);
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

}  // namespace pdnf
