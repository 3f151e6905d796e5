#pragma once

#include "pdnf/scalar.hpp"

#include <string>
#include <vector>

namespace pdnf {

/// Dense matrix over Scalar, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<Scalar>& d);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Scalar> column(std::size_t j) const;

    bool is_zero() const;
    bool is_diagonal() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix pow(unsigned e) const;
    Scalar trace() const;
    Scalar determinant() const;
    std::size_t rank() const;
    /// Throws SingularMatrix.
    Matrix inverse() const;
    /// Reduced row echelon form, with the pivot column of each nonzero row.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    /// Basis of the right kernel read off the RREF: one vector per free column,
    /// with a 1 in that column.
    std::vector<std::vector<Scalar>> nullspace() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

/// Univariate polynomial over Scalar, coefficients from low to high degree.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Scalar> coeffs);

    static UPoly monomial(unsigned degree, const Scalar& c = Scalar(1));
    static UPoly linear_factor(const Scalar& root);  // t - root

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }
    const Scalar& leading() const { return c_.back(); }

    UPoly monic() const;
    UPoly derivative() const;
    Scalar evaluate(const Scalar& t) const;
    Matrix evaluate(const Matrix& A) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on a zero divisor.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
    UPoly mod(const UPoly& m) const;
    /// Monic gcd.
    static UPoly gcd(const UPoly& a, const UPoly& b);
    /// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
    static UPoly inverse_mod(const UPoly& a, const UPoly& m);
    /// p(q) mod m.
    static UPoly compose_mod(const UPoly& p, const UPoly& q, const UPoly& m);

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    std::vector<Scalar> c_;
};

/// Monic characteristic polynomial det(t I - A) (Faddeev-LeVerrier).
UPoly characteristic_polynomial(const Matrix& A);

/// Monic squarefree part p / gcd(p, p').
UPoly squarefree_part(const UPoly& p);

struct RootSearch {
    std::vector<Scalar> roots;  // distinct roots found in Q(i)
    UPoly remainder;            // monic cofactor with no root in Q(i); degree 0 when fully split
};

/// Roots in Q(i) of a squarefree polynomial. Candidates come from a numerical
/// root finder; a candidate is accepted only after exact evaluation to zero.
/// A root z of a monic p whose coefficients have common denominator D
/// satisfies D*z in Z[i], so every candidate is rounded on that grid.
RootSearch gaussian_rational_roots(const UPoly& p);

}  // namespace pdnf
