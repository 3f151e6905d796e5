#include "oracles/oracles.hpp"
#include "support.hpp"

#include "pdnf/calculus.hpp"
#include "pdnf/errors.hpp"
#include "pdnf/normalform.hpp"
#include "pdnf/problem.hpp"
#include "pdnf/resonance.hpp"

#include <doctest.h>

using namespace pdnf;
using namespace pdnf::testing;

namespace {

Poly P1(const char* t) { return parse_polynomial(t, {"x"}); }
Poly P2(const char* t) { return parse_polynomial(t, {"x1", "x2"}); }
VectorField F1(const char* a) { return VectorField({P1(a)}); }
VectorField F2(const char* a, const char* b) { return VectorField({P2(a), P2(b)}); }

LinearData eigen_data(const std::vector<Scalar>& gamma, const Matrix& N) {
    LinearData lin;
    const std::size_t n = gamma.size();
    lin.S = Matrix::diagonal(gamma);
    lin.N = N;
    lin.A = lin.S + lin.N;
    lin.gamma = gamma;
    lin.P = lin.P_inv = Matrix::identity(n);
    return lin;
}

VectorField semisimple(const NormalizationResult& nf) { return VectorField::diagonal(nf.linear.gamma); }

}  // namespace

TEST_CASE("homological equation examples") {
    const LinearData one = eigen_data({Scalar(1)}, Matrix(1, 1));
    HomologicalSolution h = homological_solve(F1("3*x^2"), one);
    CHECK(h.W == F1("3*x^2"));
    CHECK(h.resonant_part.is_zero());

    const LinearData saddle = eigen_data({Scalar(1), Scalar(-1)}, Matrix(2, 2));
    h = homological_solve(F2("x1^2*x2", "0"), saddle);
    CHECK(h.W.is_zero());
    CHECK(h.resonant_part == F2("x1^2*x2", "0"));

    // N = 0: W = X_lambda / lambda per weight
    const LinearData diag = eigen_data({Scalar(2), Scalar(3)}, Matrix(2, 2));
    h = homological_solve(F2("x1^2", "x1*x2"), diag);
    CHECK(h.W == F2("1/2*x1^2", "1/2*x1*x2"));

    const LinearData rotated = eigen_data({Scalar(1), Scalar(-1)}, Matrix(2, 2));
    CHECK_THROWS_AS(homological_solve(F2("x1^2", "0"),
                                      [&] {
                                          LinearData l = rotated;
                                          l.S = Matrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}});
                                          return l;
                                      }()),
                    Error);
}

TEST_CASE("homological equation with a nilpotent part") {
    Matrix N(2, 2);
    N(0, 1) = Scalar(1);
    const LinearData jordan = eigen_data({Scalar(1), Scalar(1)}, N);
    const VectorField X1 = linear_field(jordan.A);
    Rng rng(2);
    for (int k = 2; k <= 4; ++k) {
        const VectorField Xk = random_field(rng, 2, k, k, 3);
        const HomologicalSolution h = homological_solve(Xk, jordan);
        CHECK(lie_bracket(X1, h.W) == Xk - h.resonant_part);
        h.W.for_each_term([&](const MultiIndex& b, std::size_t l, const Scalar&) {
            CHECK_FALSE(monomial_weight(jordan.gamma, b, l).is_zero());
        });
    }
}

TEST_CASE("lie transform examples") {
    const VectorField X = F1("x + x^2");
    CHECK(lie_transform(X, F1("x^2"), 2) == F1("x"));
    const VectorField D = F2("x1", "-x2");
    // x1^2*x2 d1 commutes with the saddle
    CHECK(lie_transform(D, F2("x1^2*x2", "0"), 6) == D);
    CHECK_THROWS_AS(lie_transform(X, F1("x"), 3), Error);
    Rng rng(15);
    for (int it = 0; it < 10; ++it) {
        const VectorField Y = random_field(rng, 2, 1, 3, 3);
        const VectorField W = random_field(rng, 2, 2, 2, 2);
        CHECK(lie_transform(lie_transform(Y, W, 5), -W, 5) == Y.truncate(5));
    }
}

TEST_CASE("oracle pushforward") {
    const VectorField X = F1("x");
    CHECK(oracle::brute_pushforward(X, {P1("x")}, 4) == X);
    // Phi = x - x^2: (D Phi . X) o Phi^-1 = x - x^2; the inverse map gives x + x^2
    CHECK(oracle::brute_pushforward(X, {P1("x - x^2")}, 2) == F1("x - x^2"));
    const auto inv = oracle::brute_inverse({P1("x - x^2")}, 2);
    CHECK(inv[0] == P1("x + x^2"));
    CHECK(oracle::brute_pushforward(X, inv, 2) == F1("x + x^2"));
    CHECK_THROWS_AS(oracle::brute_pushforward(X, {P1("2*x")}, 2), Error);

    Rng rng(19);
    for (int it = 0; it < 15; ++it) {
        const VectorField Y = random_field(rng, 2, 1, 3, 3);
        const VectorField W = random_field(rng, 2, 2, 2, 2);
        CHECK(lie_transform(Y, W, 4) == oracle::brute_pushforward(Y, flow_map(-W, 4), 4));
    }
}

TEST_CASE("map utilities") {
    Rng rng(23);
    for (int it = 0; it < 10; ++it) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        std::vector<Poly> phi = vars(n);
        for (auto& p : phi) p += random_poly(rng, n, 2, 3, 3);
        const auto inv = revert_map(phi, 5);
        CHECK(inv == oracle::brute_inverse(phi, 5));
        const auto id = identity_map(n);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(compose_maps(phi, inv, 5)[j] == id[j]);
            CHECK(compose_maps(inv, phi, 5)[j] == id[j]);
        }
    }
    CHECK_THROWS_AS(revert_map({P1("2*x")}, 3), Error);
}

TEST_CASE("normalize examples") {
    NormalizationResult nf = normalize(F1("x + x^2"), {5, false});
    CHECK(nf.normalized == F1("x"));
    CHECK(nf.certified());

    const VectorField resonant = F2("x1 + x1^2*x2", "-x2");
    nf = normalize(resonant, {4, false});
    CHECK(nf.normalized == resonant);
    CHECK(nf.generators.empty());

    nf = normalize(F2("x1 + x1^2", "-x2"), {3, false});
    CHECK(nf.normalized == F2("x1", "-x2"));
    REQUIRE(nf.generators.size() == 1);
    CHECK(nf.generators[0].degree == 2);
    CHECK(nf.residual.is_zero());
}

TEST_CASE("normalize: certificate, conjugacy and inverse on random fields") {
    Rng rng(1234);
    for (int it = 0; it < 12; ++it) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        const auto gamma = random_spectrum(rng, n);
        const VectorField X = linear_field(random_diagonalizable(rng, gamma)) + random_field(rng, n, 2, 3, 2);
        const int M = 4;
        const NormalizationResult nf = normalize(X, {M, false});
        CHECK(lie_bracket(nf.normalized, semisimple(nf), M).is_zero());
        CHECK(oracle::brute_pushforward(nf.eigen_field, nf.transform, M) == nf.normalized);
        nf.normalized.degree_range(2, M).for_each_term([&](const MultiIndex& b, std::size_t l, const Scalar&) {
            CHECK(is_resonant_monomial(nf.linear.gamma, b, l));
        });
        for (const auto& g : nf.generators) {
            CHECK(g.W == g.W.homogeneous(g.degree));
            g.W.for_each_term([&](const MultiIndex& b, std::size_t l, const Scalar&) {
                CHECK_FALSE(is_resonant_monomial(nf.linear.gamma, b, l));
            });
        }
        // idempotence
        const NormalizationResult again = normalize(nf.normalized, {M, false});
        CHECK(again.generators.empty());
        CHECK(again.normalized == nf.normalized);
    }
}

TEST_CASE("normalize with a nilpotent linear part") {
    const VectorField X = F2("x1 + x2 + x1^2", "x2 + x1*x2 + x2^2");
    const NormalizationResult nf = normalize(X, {5, false});
    CHECK_FALSE(nf.linear.N.is_zero());
    CHECK(nf.certified());
    CHECK(oracle::brute_pushforward(nf.eigen_field, nf.transform, 5) == nf.normalized);
}

TEST_CASE("generator prefix stability as the order grows") {
    Rng rng(99);
    for (int it = 0; it < 5; ++it) {
        const auto gamma = random_spectrum(rng, 2);
        const VectorField X = linear_field(Matrix::diagonal(gamma)) + random_field(rng, 2, 2, 3, 2);
        const NormalizationResult a = normalize(X, {3, false}), b = normalize(X, {5, false});
        REQUIRE(a.generators.size() <= b.generators.size());
        for (std::size_t k = 0; k < a.generators.size(); ++k) {
            CHECK(a.generators[k].degree == b.generators[k].degree);
            CHECK(a.generators[k].W == b.generators[k].W);
        }
        CHECK(a.normalized == b.normalized.truncate(3));
    }
}

TEST_CASE("isochore normalization") {
    const VectorField X = F2("x1 + x1^2 + x2^2", "-x2 - 2*x1*x2");
    REQUIRE(divergence(X).is_zero());
    const NormalizationResult nf = normalize(X, {5, true});
    REQUIRE(nf.isochore);
    CHECK(nf.isochore->jacobian_is_one);
    for (bool ok : nf.isochore->generator_divergence_free) CHECK(ok);
    for (const auto& g : nf.generators) CHECK(divergence(g.W).is_zero());
    CHECK(nf.isochore->normalized_divergence_free);
    CHECK(jacobian_determinant(nf.transform, 5).truncate(4) == Poly::constant(2, Scalar(1)));
    try {
        normalize(F2("x1 + x1^2", "-x2"), {3, true});
        FAIL("expected NotIsochore");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotIsochore);
    }
}

TEST_CASE("simultaneous normalization") {
    const VectorField D = F2("x1", "-x2");
    const VectorField G = D.scaled(P2("x1*x2"));
    SimultaneousResult s = normalize_simultaneous({D, G}, 5);
    CHECK(s.normalized[0] == D);
    CHECK(s.normalized[1] == G);
    CHECK(s.torus_clean);

    s = normalize_simultaneous({F2("x1 + x1^2", "-x2"), F2("x1 + x1^2", "-x2")}, 4);
    CHECK(s.normalized[0] == s.normalized[1]);

    s = normalize_simultaneous({F2("x1", "-x2"), F2("x1", "x2")}, 4);
    CHECK(s.normalized[0] == F2("x1", "-x2"));
    CHECK(s.normalized[1] == F2("x1", "x2"));
    CHECK(s.torus_clean);

    try {
        normalize_simultaneous({D, F2("x1^2", "0")}, 4);
        FAIL("expected NotCommuting");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCommuting);
    }
    CHECK(lowest_noncommuting_degree(D, F2("x1^2", "0"), 4) == 2);
    CHECK_FALSE(lowest_noncommuting_degree(D, G, 4).has_value());
}
