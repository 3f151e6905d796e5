#include "oracles/oracles.hpp"
#include "support.hpp"

#include "pdnf/calculus.hpp"
#include "pdnf/errors.hpp"
#include "pdnf/lattice.hpp"
#include "pdnf/resonance.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace pdnf;
using namespace pdnf::testing;

namespace {

using Rel = std::vector<int>;

std::set<Rel> as_set(const ResonanceSet& r) { return {r.relations.begin(), r.relations.end()}; }

std::set<Rel> oracle_within(const std::vector<Scalar>& gamma, int bound) {
    std::set<Rel> out;
    for (const auto& c : oracle::brute_resonances(gamma, bound + 1)) {
        if (std::accumulate(c.begin(), c.end(), 0) <= bound) out.insert(c);
    }
    return out;
}

IntMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m;
    for (const auto& r : rows) {
        IntVector v;
        for (long x : r) v.emplace_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

const std::vector<Scalar> kSaddle = {Scalar(1), Scalar(-1)};

}  // namespace

TEST_CASE("resonance enumeration examples") {
    ResonanceSet r = enumerate_resonances({Scalar(2), Scalar(3)}, 10);
    CHECK(r.relations.empty());
    CHECK(r.q == 0);
    CHECK(r.q_upper == 1);
    CHECK(oracle::brute_resonances({Scalar(2), Scalar(3)}, 11).empty());

    r = enumerate_resonances(kSaddle, 4);
    CHECK(r.relations == std::vector<Rel>{{1, 1}, {2, 2}});
    CHECK(r.q == 1);
    CHECK(r.complete);
    CHECK(r.completeness == "q_equals_upper");

    for (int bound : {1, 5, 12}) {
        r = enumerate_resonances({Scalar(1), Scalar(1)}, bound);
        CHECK(r.relations.empty());
        CHECK(r.q == 0);
    }
}

TEST_CASE("oracle examples") {
    // The full box [-1, 4]^2 also holds (3, 3) and (4, 4); the listed pair is the part with sum <= 4.
    CHECK(oracle::brute_resonances(kSaddle, 4) == std::set<Rel>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    CHECK(oracle_within(kSaddle, 4) == std::set<Rel>{{1, 1}, {2, 2}});
    CHECK(oracle::brute_resonances({Scalar(2), Scalar(3)}, 10).empty());
    CHECK(oracle::brute_resonances({Scalar(0), Scalar(1)}, 3) == std::set<Rel>{{1, 0}, {2, 0}, {3, 0}});
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
    Rng rng(101);
    for (int it = 0; it < 60; ++it) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        std::vector<Scalar> gamma;
        for (std::size_t j = 0; j < n; ++j) gamma.push_back(random_scalar(rng, 3, uniform(rng, 0, 1) == 1, 2));
        const int bound = uniform(rng, 1, 6);
        CHECK(as_set(enumerate_resonances(gamma, bound)) == oracle_within(gamma, bound));
    }
}

TEST_CASE("relations are sorted and satisfy the definition") {
    const ResonanceSet r = enumerate_resonances({Scalar(1), Scalar(2), Scalar(-3)}, 8);
    for (std::size_t k = 0; k + 1 < r.relations.size(); ++k) {
        const int s0 = std::accumulate(r.relations[k].begin(), r.relations[k].end(), 0);
        const int s1 = std::accumulate(r.relations[k + 1].begin(), r.relations[k + 1].end(), 0);
        CHECK(s0 <= s1);
    }
    CHECK(r.relations.front() == Rel{2, -1, 0});
}

TEST_CASE("weight lattice examples") {
    WeightLattice w = weight_lattice(enumerate_resonances(kSaddle, 16));
    CHECK(w.basis == ints({{1, -1}}));
    CHECK(w.r == 1);
    CHECK_FALSE(w.provisional);

    w = weight_lattice(enumerate_resonances({Scalar(2), Scalar(3)}, 16));
    CHECK(w.basis == ints({{1, 0}, {0, 1}}));
    CHECK(w.r == 2);

    w = weight_lattice(enumerate_resonances({Scalar(1), Scalar(1)}, 16));
    CHECK(w.basis == ints({{1, 1}}));
    CHECK(w.r == 1);
}

TEST_CASE("torus generators examples") {
    TorusGenerators t = torus_generators({ints({{1, -1}}), 1, false}, 2);
    REQUIRE(t.Z.size() == 1);
    CHECK(t.Z[0] == VectorField::diagonal({Scalar(1), Scalar(-1)}));
    t = torus_generators({ints({{1, 1}}), 1, false}, 2);
    CHECK(t.Z[0] == VectorField::diagonal({Scalar(1), Scalar(1)}));
    t = torus_generators({ints({{1, 0}, {0, 1}}), 2, false}, 2);
    CHECK(t.Z[0] == VectorField::diagonal({Scalar(1), Scalar(0)}));
    CHECK(t.Z[1] == VectorField::diagonal({Scalar(0), Scalar(1)}));
}

TEST_CASE("monomial weight") {
    CHECK(monomial_weight(kSaddle, MultiIndex({2, 1}), 0) == Scalar(0));
    CHECK(is_resonant_monomial(kSaddle, MultiIndex({2, 1}), 0));
    CHECK(monomial_weight(kSaddle, MultiIndex({2, 0}), 0) == Scalar(1));
    CHECK(oracle::brute_bracket_weight(kSaddle, MultiIndex({2, 0}), 0) == Scalar(1));
    Rng rng(8);
    for (int it = 0; it < 10; ++it) {
        const auto gamma = random_spectrum(rng, 3);
        for (std::size_t l = 0; l < 3; ++l) {
            CHECK(monomial_weight(gamma, MultiIndex::unit(3, l), l) == Scalar(0));
            CHECK_FALSE(is_resonant_monomial(gamma, MultiIndex::unit(3, l), l));
        }
    }
    CHECK_THROWS_AS(monomial_weight(kSaddle, MultiIndex({1, 0}), 2), Error);
    CHECK_THROWS_AS(monomial_weight(kSaddle, MultiIndex({0, 0}), 0), Error);
}

TEST_CASE("monomial weight equals the bracket eigenvalue") {
    Rng rng(12);
    for (int it = 0; it < 12; ++it) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        std::vector<Scalar> gamma;
        for (std::size_t j = 0; j < n; ++j) gamma.push_back(random_scalar(rng, 4));
        const VectorField Xs = VectorField::diagonal(gamma);
        for (int d = 1; d <= 4; ++d) {
            for (int t = 0; t < 4; ++t) {
                const MultiIndex b = random_exponent(rng, n, d);
                for (std::size_t l = 0; l < n; ++l) {
                    const Scalar w = monomial_weight(gamma, b, l);
                    CHECK(w == oracle::brute_bracket_weight(gamma, b, l));
                    const VectorField m = VectorField::monomial(b, l, Scalar(1));
                    CHECK(lie_bracket(Xs, m) == m * w);
                }
            }
        }
    }
}

TEST_CASE("isochore weight check") {
    CHECK(isochore_weight_check(kSaddle));
    const TorusGenerators t = torus_generators(weight_lattice(enumerate_resonances(kSaddle, 16)), 2);
    CHECK(divergence(t.Z[0]).is_zero());
    CHECK_FALSE(isochore_weight_check({Scalar(2), Scalar(3)}));
    CHECK(isochore_weight_check({Scalar(1), Scalar(1), Scalar(-2)}));
}

TEST_CASE("lattice invariants on random spectra") {
    Rng rng(55);
    for (int it = 0; it < 40; ++it) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        const auto gamma = random_spectrum(rng, n);
        const ResonanceSet r = enumerate_resonances(gamma, 6);
        const WeightLattice w = weight_lattice(r);
        const TorusGenerators t = torus_generators(w, n);
        for (const auto& rho : w.basis) {
            for (const auto& c : r.relations) {
                Integer dot = 0;
                for (std::size_t j = 0; j < n; ++j) dot += rho[j] * c[j];
                CHECK(dot == 0);
            }
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (gamma[j] == gamma[k]) CHECK(rho[j] == rho[k]);
                }
            }
        }
        for (std::size_t k = 0; k < t.Z.size(); ++k) {
            Integer s = 0;
            for (const auto& v : w.basis[k]) s += v;
            CHECK(divergence(t.Z[k]) == Poly::constant(n, Scalar(Rational(s))));
        }
        if (r.complete) CHECK(r.q + w.r <= n);
        CHECK(r.q <= r.q_upper);
        CHECK(torus_commutes(t, Matrix::diagonal(gamma), Matrix(n, n)));
        // doubling never loses rank and never grows the lattice
        const ResonanceSet r2 = enumerate_resonances(gamma, 12);
        CHECK(r2.q >= r.q);
        CHECK(weight_lattice(r2).r <= w.r);
    }
}

TEST_CASE("hermite normal form and integer kernel") {
    CHECK(hermite_normal_form(ints({{2, 4}, {1, 3}}), 2) == ints({{1, 1}, {0, 2}}));
    CHECK(hermite_normal_form(ints({{0, 0}}), 2).empty());
    CHECK(integer_kernel(ints({{1, 1}}), 2) == ints({{1, -1}}));
    CHECK(integer_kernel({}, 2) == ints({{1, 0}, {0, 1}}));
    // saturation: kernel of (2, 4) is spanned by (2, -1), not (4, -2)
    CHECK(integer_kernel(ints({{2, 4}}), 2) == ints({{2, -1}}));
    CHECK(integer_rank(ints({{1, 2, 3}, {2, 4, 6}, {0, 1, 0}}), 3) == 2);
    Rng rng(77);
    for (int it = 0; it < 30; ++it) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
        const std::size_t m = static_cast<std::size_t>(uniform(rng, 0, 4));
        IntMatrix A(m, IntVector(n));
        for (auto& row : A)
            for (auto& v : row) v = uniform(rng, -4, 4);
        const IntMatrix K = integer_kernel(A, n);
        CHECK(K.size() == n - integer_rank(A, n));
        for (const auto& k : K)
            for (const auto& row : A) {
                Integer dot = 0;
                for (std::size_t j = 0; j < n; ++j) dot += row[j] * k[j];
                CHECK(dot == 0);
            }
        CHECK(hermite_normal_form(K, n) == K);
    }
}
