#include "pdnf/matrix.hpp"

#include "pdnf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace pdnf {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>>& cols) {
    const std::size_t c = cols.size();
    const std::size_t r = c == 0 ? 0 : cols[0].size();
    Matrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw Error(ErrorKind::DimensionMismatch, "ragged matrix columns");
        for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && !(*this)(i, j).is_zero()) return false;
        }
    }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
    for (auto& v : a_) v *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

Matrix Matrix::pow(unsigned e) const {
    if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "power of a non-square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Scalar Matrix::trace() const {
    Scalar t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && m(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != row) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(row, j));
        }
        const Scalar inv = m(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Scalar f = m(i, col);
            for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Scalar Matrix::determinant() const {
    if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    Matrix m = *this;
    Scalar det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t sel = col;
        while (sel < rows_ && m(sel, col).is_zero()) ++sel;
        if (sel == rows_) return Scalar();
        if (sel != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const Scalar inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m(i, col).is_zero()) continue;
            const Scalar f = m(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = Scalar(1);
    }
    std::vector<std::size_t> piv;
    Matrix r = aug.rref(&piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    }
    return inv;
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
    std::vector<std::size_t> piv;
    const Matrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_);
        v[free] = Scalar(1);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string Matrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i > 0) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) out += ", ";
            out += (*this)(i, j).to_string();
        }
        out += "]";
    }
    return out + "]";
}

// ---------------------------------------------------------------------------

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monomial(unsigned degree, const Scalar& c) {
    std::vector<Scalar> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::linear_factor(const Scalar& root) {
    return UPoly({-root, Scalar(1)});
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    const Scalar inv = leading().inverse();
    UPoly r(*this);
    for (auto& v : r.c_) v *= inv;
    return r;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return UPoly(std::move(d));
}

Scalar UPoly::evaluate(const Scalar& t) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Matrix UPoly::evaluate(const Matrix& A) const {
    const std::size_t n = A.rows();
    Matrix acc(n, n);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * A + Matrix::identity(n) * *it;
    }
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    rem = a;
    if (a.degree() < b.degree()) {
        quot = UPoly();
        return;
    }
    std::vector<Scalar> q(a.degree() - b.degree() + 1);
    const Scalar inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = rem.degree() - b.degree();
        const Scalar f = rem.leading() * inv;
        q[shift] = f;
        for (std::size_t k = 0; k < b.c_.size(); ++k) rem.c_[k + shift] -= f * b.c_[k];
        rem.trim();
    }
    quot = UPoly(std::move(q));
}

UPoly UPoly::mod(const UPoly& m) const {
    UPoly q, r;
    divmod(*this, m, q, r);
    return r;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x.mod(y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly UPoly::inverse_mod(const UPoly& a, const UPoly& m) {
    // Extended Euclid tracking only the coefficient of a.
    UPoly r0 = m, r1 = a.mod(m);
    UPoly s0, s1({Scalar(1)});
    while (!r1.is_zero()) {
        UPoly q, r;
        divmod(r0, r1, q, r);
        UPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw Error(ErrorKind::InvalidArgument, "polynomial is not invertible modulo m");
    const Scalar inv = r0.leading().inverse();
    UPoly out = s0.mod(m);
    for (auto& v : out.c_) v *= inv;
    return out;
}

UPoly UPoly::compose_mod(const UPoly& p, const UPoly& q, const UPoly& m) {
    UPoly acc;
    for (auto it = p.c_.rbegin(); it != p.c_.rend(); ++it) {
        acc = (acc * q + UPoly({*it})).mod(m);
    }
    return acc;
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Scalar& c = c_[k];
        if (c.is_zero()) continue;
        std::string t;
        const std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (k == 0) {
            t = c.to_string();
        } else if (c.is_one()) {
            t = mono;
        } else if (c == Scalar(-1)) {
            t = "-" + mono;
        } else if (c.is_real() || sgn(c.re()) == 0) {
            t = c.to_string() + "*" + mono;
        } else {
            t = "(" + c.to_string() + ")*" + mono;
        }
        if (out.empty()) {
            out = t;
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

UPoly characteristic_polynomial(const Matrix& A) {
    if (!A.is_square()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    const std::size_t n = A.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = Scalar(1);
    Matrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M + Matrix::identity(n) * c[n - k + 1];
        c[n - k] = -(A * M).trace() / Scalar(static_cast<long>(k));
    }
    return UPoly(std::move(c));
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.monic();
    UPoly q, r;
    UPoly::divmod(p, UPoly::gcd(p, p.derivative()), q, r);
    return q.monic();
}

namespace {

using Complex = std::complex<long double>;

long double to_ld(const Rational& q) {
    return static_cast<long double>(q.get_d());
}

Complex to_complex(const Scalar& s) {
    return {to_ld(s.re()), to_ld(s.im())};
}

// Aberth-Ehrlich simultaneous iteration on a monic polynomial of degree >= 1.
std::vector<Complex> approximate_roots(const std::vector<Complex>& c) {
    const std::size_t d = c.size() - 1;
    long double bound = 0;
    for (std::size_t k = 0; k < d; ++k) bound = std::max(bound, std::abs(c[k]));
    bound += 1;
    std::vector<Complex> z(d);
    for (std::size_t k = 0; k < d; ++k) {
        const long double angle = 2.0L * 3.14159265358979323846L * (k + 0.25L) / d + 0.4L;
        z[k] = std::polar(bound * 0.5L, angle);
    }
    auto eval = [&](Complex x, Complex& deriv) {
        Complex p = c[d];
        deriv = 0;
        for (std::size_t k = d; k-- > 0;) {
            deriv = deriv * x + p;
            p = p * x + c[k];
        }
        return p;
    };
    for (int iter = 0; iter < 500; ++iter) {
        long double change = 0;
        for (std::size_t k = 0; k < d; ++k) {
            Complex dp;
            const Complex p = eval(z[k], dp);
            if (p == Complex(0)) continue;
            const Complex ratio = p / dp;
            Complex sum = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j != k) sum += 1.0L / (z[k] - z[j]);
            }
            const Complex step = ratio / (1.0L - ratio * sum);
            z[k] -= step;
            change = std::max(change, std::abs(step) / (1 + std::abs(z[k])));
        }
        if (change < 1e-17L) break;
    }
    return z;
}

Integer denominator_lcm(const UPoly& p) {
    Integer l = 1;
    for (const auto& s : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.im().get_den_mpz_t());
    }
    return l;
}

Rational round_on_grid(long double x, const Integer& den) {
    const long double scaled = x * static_cast<long double>(den.get_d());
    Integer num;
    mpz_set_d(num.get_mpz_t(), static_cast<double>(std::nearbyint(scaled)));
    return Rational(num, den);
}

}  // namespace

RootSearch gaussian_rational_roots(const UPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero polynomial");
    RootSearch out;
    UPoly rest = p.monic();
    while (rest.degree() >= 1) {
        if (rest.degree() == 1) {
            out.roots.push_back(-rest.coeff(0));
            rest = UPoly({Scalar(1)});
            break;
        }
        const Integer den = denominator_lcm(rest);
        std::vector<Complex> c;
        for (const auto& s : rest.coeffs()) c.push_back(to_complex(s));
        bool found = false;
        for (const Complex& z : approximate_roots(c)) {
            const Scalar cand(round_on_grid(z.real(), den), round_on_grid(z.imag(), den));
            if (rest.evaluate(cand).is_zero()) {
                UPoly q, r;
                UPoly::divmod(rest, UPoly::linear_factor(cand), q, r);
                out.roots.push_back(cand);
                rest = q.monic();
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    out.remainder = rest;
    return out;
}

}  // namespace pdnf
