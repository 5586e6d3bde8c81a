#include <gtest/gtest.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "fpx/io.hpp"
#include "fpx/polymap.hpp"
#include "fpx/polynomial.hpp"
#include "fpx/random.hpp"

using namespace fpx;

namespace {

Polynomial P(const char* text, std::uint32_t p, std::size_t n) {
    return parse_polynomial(text, p, n);
}

PolyMap M(const char* text, std::uint32_t p, std::size_t n) {
    return parse_poly_map(text, p, n);
}

Polynomial rand_poly(SplitMix64& rng, std::uint32_t p, std::size_t n) {
    return random_polynomial(rng, p, n, 3, 4);
}

} // namespace

TEST(PolyArith, SpecExamples) {
    // (x+y)^2 = x^2 + y^2 in characteristic 2
    EXPECT_EQ(P("x+y", 2, 2) * P("x+y", 2, 2), P("x^2 + y^2", 2, 2));
    const Polynomial f = P("x^2*y + 3", 5, 2);
    EXPECT_EQ(f + Polynomial(5, 2), f);
    EXPECT_EQ(Polynomial(5, 2).pow(0), P("1", 5, 2));
    EXPECT_EQ(f.pow(0), P("1", 5, 2));
}

TEST(PolyArith, CanonicalInvariants) {
    const Polynomial f = P("x + y", 3, 2);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ((f - f).term_count(), 0u);
    EXPECT_EQ(f * Fp::zero(3), Polynomial(3, 2));
    // 3*x collapses mod 3 during construction
    EXPECT_TRUE(P("3*x", 3, 2).is_zero());
    EXPECT_EQ(Polynomial::constant(3, 2, 5), P("2", 3, 2));
}

TEST(PolyArith, MismatchErrors) {
    EXPECT_THROW(P("x", 2, 1) + P("x", 3, 1), std::invalid_argument);
    EXPECT_THROW(P("x", 2, 1) * P("x1", 2, 2), std::invalid_argument);
    EXPECT_THROW(P("x", 2, 1) * Fp(1, 3), std::invalid_argument);
}

TEST(PolyArith, RingAxiomsRandomized) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        SplitMix64 rng(17 * p);
        for (int t = 0; t < 40; ++t) {
            const Polynomial a = rand_poly(rng, p, 2);
            const Polynomial b = rand_poly(rng, p, 2);
            const Polynomial c = rand_poly(rng, p, 2);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + (-a), Polynomial(p, 2));
        }
    }
}

namespace {

// Reference product: direct map accumulation, no packing, no hashing.
Polynomial reference_mul(const Polynomial& a, const Polynomial& b) {
    std::map<MultiIndex, Fp, GradedLexLess> acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            const MultiIndex e = ea + eb;
            const Fp c = ca * cb;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, c);
            else
                it->second += c;
        }
    return Polynomial::from_accumulated(a.modulus(), a.dimension(), std::move(acc));
}

Polynomial stretch_exponents(const Polynomial& f, std::uint32_t scale) {
    Polynomial out(f.modulus(), f.dimension());
    for (const auto& [e, c] : f.terms()) {
        std::vector<std::uint32_t> comp(e.components());
        for (auto& x : comp) x *= scale;
        out.add_term(MultiIndex(std::move(comp)), c);
    }
    return out;
}

} // namespace

TEST(PolyArith, PackedAndGenericProductPathsAgree) {
    SplitMix64 rng(2024);
    // small exponents (packed path) and exponents past 127 (generic path)
    for (int t = 0; t < 25; ++t) {
        const Polynomial a = random_polynomial(rng, 5, 3, 4, 5);
        const Polynomial b = random_polynomial(rng, 5, 3, 4, 5);
        EXPECT_EQ(a * b, reference_mul(a, b));
        const Polynomial as = stretch_exponents(a, 64); // components up to 256
        const Polynomial bs = stretch_exponents(b, 64);
        EXPECT_EQ(as * bs, reference_mul(as, bs));
        EXPECT_EQ(as * b, reference_mul(as, b)); // mixed magnitudes
    }
    // more than 8 variables also takes the generic path
    SessionConfig cfg;
    cfg.p = 3;
    cfg.n = 9;
    for (int t = 0; t < 10; ++t) {
        const Polynomial a = random_polynomial(rng, 3, 9, 3, 5);
        const Polynomial b = random_polynomial(rng, 3, 9, 3, 5);
        EXPECT_EQ(a * b, reference_mul(a, b));
    }
}

TEST(PolyArith, PowerAgreesWithRepeatedProduct) {
    SplitMix64 rng(99);
    const Polynomial f = rand_poly(rng, 3, 2);
    Polynomial acc = Polynomial::constant(3, 2, 1);
    for (std::uint64_t e = 0; e <= 6; ++e) {
        EXPECT_EQ(f.pow(e), acc);
        acc *= f;
    }
}

TEST(PolyDegree, ZeroIsMinusInfinity) {
    EXPECT_EQ(Polynomial(5, 2).total_degree(), std::nullopt);
    EXPECT_EQ(P("x^2*y + 1", 5, 2).total_degree(), std::optional<std::uint64_t>(3));
}

TEST(Derive, SpecExamples) {
    EXPECT_EQ(derive(P("x^2*y", 3, 2), MultiIndex({1, 1})), P("2*x", 3, 2));
    const Polynomial f = P("x^2*y + y", 3, 2);
    EXPECT_EQ(derive(f, MultiIndex::zero(2)), f);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Polynomial xp = Polynomial::monomial(Fp::one(p), MultiIndex({p}));
        EXPECT_TRUE(derive(xp, std::size_t{0}).is_zero());
    }
    EXPECT_THROW(derive(P("x", 2, 1), MultiIndex({1, 0})), std::invalid_argument);
}

TEST(Derive, PartialsCommuteAndCompose) {
    SplitMix64 rng(5);
    const auto orders = interval_enumerate(0, 2, 2);
    for (int t = 0; t < 25; ++t) {
        const Polynomial f = random_polynomial(rng, 5, 2, 4, 5);
        for (const MultiIndex& a : orders)
            for (const MultiIndex& b : orders) {
                if (a.degree() + b.degree() > 4) continue;
                EXPECT_EQ(derive(derive(f, a), b), derive(f, a + b));
            }
    }
}

TEST(Derive, LeibnizOnUnitIndices) {
    SplitMix64 rng(7);
    for (int t = 0; t < 30; ++t) {
        const Polynomial f = rand_poly(rng, 3, 2);
        const Polynomial g = rand_poly(rng, 3, 2);
        for (std::size_t i = 0; i < 2; ++i)
            EXPECT_EQ(derive(f * g, i), derive(f, i) * g + f * derive(g, i));
    }
}

TEST(MonomialPower, SpecExamples) {
    const PolyMap F = M("x+y; x*y", 2, 2);
    EXPECT_EQ(monomial_power(F, MultiIndex::zero(2)), P("1", 2, 2));
    EXPECT_EQ(monomial_power(F, MultiIndex({1, 1})), P("x^2*y + x*y^2", 2, 2));
    EXPECT_EQ(monomial_power(M("x", 5, 1), MultiIndex({3})), P("x^3", 5, 1));
    EXPECT_THROW(monomial_power(F, MultiIndex({1})), std::invalid_argument);
}

TEST(Substitute, SpecExamples) {
    const Polynomial g = P("x^2*y + 2", 3, 2);
    EXPECT_EQ(substitute(g, PolyMap::identity(3, 2)), g);
    EXPECT_EQ(substitute(P("x^2", 3, 1), M("x+1", 3, 1)), P("x^2 + 2*x + 1", 3, 1));
    EXPECT_EQ(substitute(P("x*y", 3, 2), M("y; x", 3, 2)), P("x*y", 3, 2));
}

TEST(Substitute, IsARingHomomorphism) {
    SplitMix64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const Polynomial f = rand_poly(rng, 3, 2);
        const Polynomial g = rand_poly(rng, 3, 2);
        const Polynomial h = rand_poly(rng, 3, 2);
        SessionConfig cfg;
        cfg.p = 3;
        cfg.n = 2;
        const PolyMap F = random_poly_map(rng, cfg, MapRegime::generic);
        EXPECT_EQ(substitute(f * g + h, F), substitute(f, F) * substitute(g, F) + substitute(h, F));
    }
}

TEST(Jacobian, SpecExamples) {
    EXPECT_EQ(jacobian_matrix(PolyMap::identity(3, 2)), PolyMatrix::identity(2, 3, 2));
    const PolyMatrix J = jacobian_matrix(M("x+y; x*y", 2, 2));
    EXPECT_EQ(J.at(0, 0), P("1", 2, 2));
    EXPECT_EQ(J.at(0, 1), P("1", 2, 2));
    EXPECT_EQ(J.at(1, 0), P("y", 2, 2));
    EXPECT_EQ(J.at(1, 1), P("x", 2, 2));
    EXPECT_EQ(jacobian_matrix(M("1; 2", 3, 2)), PolyMatrix(2, 2, 3, 2));

    EXPECT_EQ(jacobian(PolyMap::identity(5, 3)), P("1", 5, 3));
    EXPECT_EQ(jacobian(M("x+y; x*y", 2, 2)), P("x + y", 2, 2));
    EXPECT_TRUE(jacobian(M("x^2", 2, 1)).is_zero());
}

TEST(Jacobian, ChainRuleForDeterminants) {
    SessionConfig cfg;
    cfg.p = 3;
    cfg.n = 2;
    SplitMix64 rng(23);
    for (int t = 0; t < 15; ++t) {
        const PolyMap F = random_poly_map(rng, cfg, MapRegime::generic);
        const PolyMap G = random_poly_map(rng, cfg, MapRegime::generic);
        EXPECT_EQ(jacobian(substitute(G, F)), substitute(jacobian(G), F) * jacobian(F));
    }
}

TEST(JacobianIdealGenerators, SpecExamples) {
    const auto identity_gens =
        jacobian_ideal_generators(PolyMap::identity(3, 2).components());
    ASSERT_EQ(identity_gens.size(), 1u);
    EXPECT_EQ(identity_gens[0], P("1", 3, 2));

    const auto univariate = jacobian_ideal_generators({P("x", 3, 1), P("x^2", 3, 1)});
    ASSERT_EQ(univariate.size(), 2u);
    EXPECT_EQ(univariate[0], P("1", 3, 1));
    EXPECT_EQ(univariate[1], P("2*x", 3, 1));

    const auto pair = jacobian_ideal_generators({P("x+y", 2, 2), P("x*y", 2, 2)});
    ASSERT_EQ(pair.size(), 1u);
    EXPECT_EQ(pair[0], P("x + y", 2, 2));

    EXPECT_THROW(jacobian_ideal_generators({P("x1", 2, 2)}), std::invalid_argument);
}

TEST(JacobianIdealGenerators, SubsetCountAndOrder) {
    // 4 generators in n = 2: C(4,2) = 6 subsets, lexicographic by index pair
    std::vector<Polynomial> gens = {P("x", 2, 2), P("y", 2, 2), P("x*y", 2, 2), P("x+y", 2, 2)};
    const auto out = jacobian_ideal_generators(gens);
    ASSERT_EQ(out.size(), 6u);
    EXPECT_EQ(out[0], jacobian(PolyMap({gens[0], gens[1]})));
    EXPECT_EQ(out[1], jacobian(PolyMap({gens[0], gens[2]})));
    EXPECT_EQ(out[5], jacobian(PolyMap({gens[2], gens[3]})));
}

TEST(ExactQuotient, RoundTripsAndRejects) {
    SplitMix64 rng(31);
    for (int t = 0; t < 30; ++t) {
        const Polynomial a = rand_poly(rng, 5, 2);
        Polynomial b = rand_poly(rng, 5, 2);
        if (b.is_zero()) b = P("x + 1", 5, 2);
        const auto q = try_exact_quotient(a * b, b);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, a);
    }
    EXPECT_FALSE(try_exact_quotient(P("x^2 + 1", 5, 1), P("x + 1", 5, 1)).has_value());
    EXPECT_THROW(try_exact_quotient(P("x", 5, 1), Polynomial(5, 1)), std::domain_error);
}

TEST(PolyMapType, Validation) {
    EXPECT_THROW(PolyMap({P("x1", 2, 2)}), std::invalid_argument);
    EXPECT_THROW(PolyMap({P("x", 2, 1), P("x", 2, 1)}), std::invalid_argument);
    EXPECT_THROW(PolyMap(std::vector<Polynomial>{}), std::invalid_argument);
    EXPECT_EQ(PolyMap::linear({{Fp(1, 3), Fp(2, 3)}, {Fp(0, 3), Fp(1, 3)}}),
              M("x + 2*y; y", 3, 2));
}
