#pragma once

#include "pdnf/scalar.hpp"

#include <climits>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace pdnf {

/// Truncation order meaning "keep every degree".
inline constexpr int kExact = INT_MAX;

/// Exponent tuple (b_1, ..., b_n) of a monomial.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t dim) : exps_(dim, 0) {}
    explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static MultiIndex unit(std::size_t dim, std::size_t axis);

    std::size_t dim() const { return exps_.size(); }
    unsigned operator[](std::size_t j) const { return exps_[j]; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned degree() const;

    MultiIndex operator+(const MultiIndex& o) const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

private:
    std::vector<unsigned> exps_;
};

/// Graded-lexicographic order: ascending total degree, then x1 before x2 etc.
/// (so within a degree x1^2 < x1*x2 < x2^2).
struct GradedLex {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Sparse multivariate polynomial over Scalar in a fixed ambient dimension.
/// No zero coefficients are stored; the zero polynomial is the empty map.
class Poly {
public:
    using TermMap = std::map<MultiIndex, Scalar, GradedLex>;

    Poly() = default;
    explicit Poly(std::size_t dim) : dim_(dim) {}

    static Poly constant(std::size_t dim, const Scalar& c);
    static Poly variable(std::size_t dim, std::size_t axis);
    static Poly monomial(const MultiIndex& b, const Scalar& c);

    std::size_t dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coeff(const MultiIndex& b) const;
    Scalar constant_term() const;

    /// Highest total degree, -1 for the zero polynomial.
    int degree() const;
    /// Lowest total degree present, -1 for the zero polynomial.
    int min_degree() const;

    /// Accumulates c*x^b; drops the term if it cancels.
    void add_term(const MultiIndex& b, const Scalar& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b, kExact); }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Product with every term of degree > order discarded.
    static Poly multiply(const Poly& a, const Poly& b, int order);

    Poly derivative(std::size_t axis) const;
    Poly truncate(int order) const;
    Poly homogeneous(int degree) const;
    /// Terms with degree in [lo, hi].
    Poly degree_range(int lo, int hi) const;

    /// Substitutes x_j -> subs[j], truncated at `order`. The substitutes may
    /// live in a different dimension; the result has dimension subs[0].dim().
    Poly compose(const std::vector<Poly>& subs, int order) const;

    Poly pow(unsigned e, int order = kExact) const;

    Scalar evaluate(const std::vector<Scalar>& point) const;

    /// Canonical text. With empty `names` the variables print as x1..xn.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_dim(const Poly& o) const;

    std::size_t dim_ = 0;
    TermMap terms_;
};

std::vector<std::string> default_names(std::size_t dim);

}  // namespace pdnf
