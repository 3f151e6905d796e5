#include "pdnf/resonance.hpp"

#include "pdnf/calculus.hpp"
#include "pdnf/errors.hpp"
#include "pdnf/linear.hpp"

#include <algorithm>
#include <numeric>

namespace pdnf {

namespace {

// Gaussian integers L*gamma_j, split into real and imaginary parts.
struct ScaledSpectrum {
    std::vector<Integer> re;
    std::vector<Integer> im;
};

ScaledSpectrum scale_to_integers(const std::vector<Scalar>& gamma) {
    Integer l = 1;
    for (const auto& g : gamma) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.im().get_den_mpz_t());
    }
    ScaledSpectrum s;
    for (const auto& g : gamma) {
        const Rational re = g.re() * l;
        const Rational im = g.im() * l;
        s.re.push_back(re.get_num());
        s.im.push_back(im.get_num());
    }
    return s;
}

template <class T>
class BoxWalker {
public:
    BoxWalker(std::vector<T> re, std::vector<T> im, int bound)
        : re_(std::move(re)), im_(std::move(im)), n_(re_.size()), bound_(bound) {}

    std::vector<ResonanceRelation> run() {
        c_.assign(n_, 0);
        walk_with_negative(-1);
        for (std::size_t l = 0; l < n_; ++l) walk_with_negative(static_cast<int>(l));
        return std::move(out_);
    }

private:
    void walk_with_negative(int neg) {
        neg_ = neg;
        std::fill(c_.begin(), c_.end(), 0);
        T re0 = 0, im0 = 0;
        int min_sum = 1, max_sum = bound_;
        if (neg >= 0) {
            c_[neg] = -1;
            re0 = -re_[neg];
            im0 = -im_[neg];
            min_sum = 2;
            max_sum = bound_ + 1;
        }
        rec(0, 0, min_sum, max_sum, re0, im0);
    }

    void rec(std::size_t j, int used, int min_sum, int max_sum, const T& re, const T& im) {
        if (j == n_) {
            if (used >= min_sum && re == 0 && im == 0) out_.push_back(c_);
            return;
        }
        if (static_cast<int>(j) == neg_) {
            rec(j + 1, used, min_sum, max_sum, re, im);
            return;
        }
        T r = re, i = im;
        for (int v = 0; used + v <= max_sum; ++v) {
            c_[j] = v;
            rec(j + 1, used + v, min_sum, max_sum, r, i);
            r += re_[j];
            i += im_[j];
        }
        c_[j] = 0;
    }

    std::vector<T> re_, im_;
    std::size_t n_;
    int bound_;
    int neg_ = -1;
    ResonanceRelation c_;
    std::vector<ResonanceRelation> out_;
};

using Wide = __int128;

bool fits_wide(const ScaledSpectrum& s, int bound) {
    // Partial sums are bounded by (bound + 1) * n * max|entry|.
    const Integer limit = Integer(1) << 100;
    const Integer scale = Integer(bound + 2) * Integer(static_cast<long>(s.re.size() + 1));
    for (std::size_t j = 0; j < s.re.size(); ++j) {
        if (abs(s.re[j]) * scale >= limit || abs(s.im[j]) * scale >= limit) return false;
    }
    return true;
}

Wide to_wide(const Integer& z) {
    // Only called when |z| < 2^100.
    const bool neg = sgn(z) < 0;
    Integer a = abs(z);
    const Integer lo = a & ((Integer(1) << 62) - 1);
    const Integer hi = a >> 62;
    Wide w = static_cast<Wide>(hi.get_ui());
    w = (w << 62) + static_cast<Wide>(lo.get_ui());
    return neg ? -w : w;
}

std::vector<ResonanceRelation> walk(const ScaledSpectrum& s, int bound) {
    std::vector<ResonanceRelation> rel;
    if (fits_wide(s, bound)) {
        std::vector<Wide> re, im;
        for (const auto& z : s.re) re.push_back(to_wide(z));
        for (const auto& z : s.im) im.push_back(to_wide(z));
        rel = BoxWalker<Wide>(std::move(re), std::move(im), bound).run();
    } else {
        rel = BoxWalker<Integer>(s.re, s.im, bound).run();
    }
    std::sort(rel.begin(), rel.end(), [](const ResonanceRelation& a, const ResonanceRelation& b) {
        const int sa = std::accumulate(a.begin(), a.end(), 0);
        const int sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb) return sa < sb;
        return a > b;
    });
    return rel;
}

IntMatrix to_int_rows(const std::vector<ResonanceRelation>& rel) {
    IntMatrix rows;
    for (const auto& c : rel) {
        IntVector r;
        for (int v : c) r.emplace_back(v);
        rows.push_back(std::move(r));
    }
    return rows;
}

// (n+1) * C(bound + 1 + n, n): size of the admissible box.
double box_size(std::size_t n, int bound) {
    double c = 1;
    for (std::size_t k = 1; k <= n; ++k) c = c * (bound + 1 + k) / k;
    return c * static_cast<double>(n + 1);
}

constexpr double kMaxDoublingBox = 2e7;

}  // namespace

ResonanceSet enumerate_resonances(const std::vector<Scalar>& gamma, int bound) {
    if (bound < 1) throw Error(ErrorKind::InvalidArgument, "resonance bound must be at least 1");
    const std::size_t n = gamma.size();
    ResonanceSet res;
    res.gamma = gamma;
    res.bound = bound;
    const ScaledSpectrum scaled = scale_to_integers(gamma);
    res.relations = walk(scaled, bound);
    res.q = integer_rank(to_int_rows(res.relations), n);

    IntMatrix kernel_rows{IntVector(scaled.re.begin(), scaled.re.end()),
                          IntVector(scaled.im.begin(), scaled.im.end())};
    res.q_upper = n - integer_rank(kernel_rows, n);

    if (res.q == res.q_upper) {
        res.complete = true;
        res.completeness = "q_equals_upper";
    } else if (box_size(n, 2 * bound) <= kMaxDoublingBox &&
               integer_rank(to_int_rows(walk(scaled, 2 * bound)), n) == res.q) {
        res.complete = true;
        res.completeness = "stable_under_doubling";
    } else {
        res.completeness = "provisional";
    }
    return res;
}

WeightLattice weight_lattice(const ResonanceSet& res) {
    const std::size_t n = res.gamma.size();
    IntMatrix constraints = to_int_rows(res.relations);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            if (res.gamma[j] != res.gamma[k]) continue;
            IntVector row(n, Integer(0));
            row[j] = 1;
            row[k] = -1;
            constraints.push_back(std::move(row));
        }
    }
    WeightLattice q;
    q.basis = integer_kernel(constraints, n);
    q.r = q.basis.size();
    q.provisional = !res.complete;
    return q;
}

TorusGenerators torus_generators(const WeightLattice& lattice, std::size_t dim) {
    TorusGenerators t;
    t.weights = lattice.basis;
    for (const auto& rho : lattice.basis) {
        if (rho.size() != dim) throw Error(ErrorKind::DimensionMismatch, "lattice vector has the wrong length");
        std::vector<Scalar> w;
        for (const auto& v : rho) w.emplace_back(Rational(v));
        t.Z.push_back(VectorField::diagonal(w));
    }
    for (std::size_t a = 0; a < t.Z.size(); ++a) {
        for (std::size_t b = a + 1; b < t.Z.size(); ++b) {
            if (!lie_bracket(t.Z[a], t.Z[b]).is_zero()) {
                throw Error(ErrorKind::InternalFault, "torus generators do not commute");
            }
        }
    }
    return t;
}

bool torus_commutes(const TorusGenerators& torus, const Matrix& S, const Matrix& N) {
    const VectorField s_field = linear_field(S);
    const VectorField n_field = linear_field(N);
    for (std::size_t a = 0; a < torus.Z.size(); ++a) {
        if (!lie_bracket(torus.Z[a], s_field).is_zero()) return false;
        if (!lie_bracket(torus.Z[a], n_field).is_zero()) return false;
        for (std::size_t b = a + 1; b < torus.Z.size(); ++b) {
            if (!lie_bracket(torus.Z[a], torus.Z[b]).is_zero()) return false;
        }
    }
    return true;
}

Scalar function_weight(const std::vector<Scalar>& gamma, const MultiIndex& b) {
    if (b.dim() != gamma.size()) throw Error(ErrorKind::DimensionMismatch, "multi-index and spectrum differ in length");
    Scalar w;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        if (b[j] != 0) w += gamma[j] * Scalar(static_cast<long>(b[j]));
    }
    return w;
}

Scalar monomial_weight(const std::vector<Scalar>& gamma, const MultiIndex& b, std::size_t axis) {
    if (axis >= gamma.size()) throw Error(ErrorKind::AxisOutOfRange, "axis " + std::to_string(axis + 1) + " out of range");
    if (b.degree() == 0) throw Error(ErrorKind::InvalidArgument, "monomial weight needs |b| >= 1");
    return function_weight(gamma, b) - gamma[axis];
}

bool is_resonant_monomial(const std::vector<Scalar>& gamma, const MultiIndex& b, std::size_t axis) {
    return b.degree() >= 2 && monomial_weight(gamma, b, axis).is_zero();
}

bool isochore_weight_check(const std::vector<Scalar>& gamma) {
    Scalar sum;
    for (const auto& g : gamma) sum += g;
    return sum.is_zero();
}

}  // namespace pdnf
