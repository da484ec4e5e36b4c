#include <gtest/gtest.h>

#include "support.hpp"

namespace lts {
namespace {

using fixtures::lts3;
using fixtures::lts4;

constexpr std::uint64_t kSeed = 20240601;

Matrix diag(const std::vector<int>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

TEST(CheckRbo, ProjectionsAreOperatorsForSampledWeights) {
    for (const Scalar& lambda : {Scalar(0), Scalar(1), Scalar(-2), Scalar(5, 3)}) {
        EXPECT_TRUE(check_rbo(fixtures::rbo3_P(lambda)).ok());
        EXPECT_TRUE(check_rbo(fixtures::rbo4_P(lambda)).ok());
    }
}

TEST(CheckRbo, ProjectionsAreOperatorsForEveryWeight) {
    for (const auto& r : {fixtures::rbo3_P(), fixtures::rbo4_P()}) EXPECT_TRUE(check_rbo_all_weights(r.action, r.T).ok());
}

TEST(CheckRbo, ZeroMapIsAnOperatorForEveryWeight) {
    // T = 0 sends both sides of the identity to zero, whatever the weight.
    for (const auto& a : support::fixture_actions()) {
        const LinearMap zero = LinearMap::zero(a.source().dim(), a.target.dim());
        for (const Scalar& lambda : {Scalar(0), Scalar(1), Scalar(-2)}) EXPECT_TRUE(check_rbo(a, lambda, zero).ok());
        EXPECT_TRUE(check_rbo_all_weights(a, zero).ok());
    }
}

TEST(CheckRbo, IdentityOnLts3FailsWithLexicographicWitness) {
    const auto a = fixtures::adjoint_action(lts3());
    const Report r = check_rbo(a, Scalar(1), LinearMap::identity(3));
    ASSERT_FALSE(r.ok());
    for (std::size_t i = 1; i < r.count(); ++i) EXPECT_LT(r.violations[i - 1].witness, r.violations[i].witness);
    EXPECT_EQ(r.violations.front().rule, "rbo");
}

TEST(CheckRbo, WeightPartSeparatesFromConstantPart) {
    // The identity on lts3 is an operator of weight 0 only when T kills the
    // derived algebra; here T(e3) = e3 survives the weight term.
    const auto a = fixtures::adjoint_action(lts3());
    Matrix m(3, 3);
    m(2, 2) = 1;
    const Report r = check_rbo_all_weights(a, LinearMap(m));
    EXPECT_EQ(r.count_rule("rbo-constant"), 0u);
    EXPECT_GT(r.count_rule("rbo-weight"), 0u);
    EXPECT_TRUE(check_rbo(a, Scalar(0), LinearMap(m)).ok());
    EXPECT_FALSE(check_rbo(a, Scalar(1), LinearMap(m)).ok());
}

TEST(CheckRbo, RejectsWrongShape) {
    EXPECT_THROW(check_rbo(fixtures::adjoint_action(lts3()), Scalar(1), LinearMap::identity(4)), ShapeError);
}

TEST(ProjectionRbo, ReproducesFixtureOperators) {
    EXPECT_EQ(projection_rbo(lts3(), SubspaceBasis::coordinate(3, {0}), SubspaceBasis::coordinate(3, {1, 2})),
              fixtures::rbo3_P().T);
    EXPECT_EQ(projection_rbo(lts4(), SubspaceBasis::coordinate(4, {1, 2}), SubspaceBasis::coordinate(4, {0, 3})),
              fixtures::rbo4_P().T);
}

TEST(ProjectionRbo, NonCoordinateComplement) {
    const SubspaceBasis Lp = SubspaceBasis::coordinate(3, {0});
    const SubspaceBasis h(3, {Vector{1, 1, 0}, Vector{0, 0, 1}});
    const LinearMap P = projection_rbo(lts3(), Lp, h);
    EXPECT_EQ(compose(P, P), P);
    EXPECT_EQ(P.apply(Vector{1, 1, 0}), zero_vector(3));
    EXPECT_EQ(P.apply(unit_vector(3, 0)), unit_vector(3, 0));
}

TEST(ProjectionRbo, NamesFailedHypothesis) {
    auto message = [](auto&& fn) {
        try {
            fn();
        } catch (const HypothesisError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(message([] {
                  projection_rbo(lts3(), SubspaceBasis::coordinate(3, {2}), SubspaceBasis::coordinate(3, {0, 1}));
              }).find("intersect"),
              std::string::npos);
    EXPECT_NE(message([] {
                  projection_rbo(lts3(), SubspaceBasis::coordinate(3, {0, 1}), SubspaceBasis::coordinate(3, {2}));
              }).find("abelian"),
              std::string::npos);
    EXPECT_NE(message([] {
                  projection_rbo(lts3(), SubspaceBasis::coordinate(3, {0}), SubspaceBasis::coordinate(3, {1}));
              }).find("direct sum"),
              std::string::npos);
    EXPECT_NE(message([] {
                  projection_rbo(support::so3(), SubspaceBasis::coordinate(3, {0}), SubspaceBasis::coordinate(3, {1, 2}));
              }).find("action"),
              std::string::npos);
}

TEST(Graph, FixtureGraphIsSubsystem) {
    const auto r = fixtures::rbo3_P(1);
    const auto G = graph_subsystem(r);
    EXPECT_EQ(G.dim(), 3u);
    EXPECT_EQ(G.ambient_dim(), 6u);
    EXPECT_TRUE(graph_is_subsystem(r));
    EXPECT_TRUE(graph_is_subsystem(fixtures::rbo4_P(1)));
}

TEST(Graph, ZeroMapAtWeightZero) {
    for (const auto& a : support::fixture_actions()) {
        const RelativeRBO r(a, Scalar(0), LinearMap::zero(a.source().dim(), a.target.dim()));
        EXPECT_TRUE(graph_is_subsystem(r));
    }
}

TEST(Descendent, ZeroMapGivesScaledTargetBracket) {
    for (const auto& a : support::fixture_actions()) {
        const std::size_t m = a.target.dim();
        const LinearMap zero = LinearMap::zero(a.source().dim(), m);
        EXPECT_TRUE(descendent_lts(RelativeRBO(a, Scalar(0), zero)).is_abelian());
        const auto D = descendent_lts(RelativeRBO(a, Scalar(-3), zero));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k)
                    EXPECT_EQ(D.structure(i, j, k), scaled(Scalar(-3), a.target.structure(i, j, k)));
    }
}

TEST(Descendent, FixtureOperatorIsHomomorphism) {
    for (const auto& r : {fixtures::rbo3_P(), fixtures::rbo4_P(), fixtures::rbo3_P(0)}) {
        const auto D = descendent_lts(r);
        EXPECT_TRUE(verify_lts(D).ok());
        EXPECT_TRUE(is_homomorphism({D, r.L(), r.T}));
    }
}

TEST(Descendent, RejectsNonOperator) {
    const RelativeRBO r(fixtures::adjoint_action(lts3()), Scalar(1), LinearMap::identity(3));
    EXPECT_THROW(descendent_lts(r), HypothesisError);
}

TEST(Nijenhuis, IdentityAndZero) {
    for (const auto& L : {lts3(), lts4(), support::so3()}) {
        EXPECT_TRUE(nijenhuis_check(L, LinearMap::identity(L.dim())).ok());
        EXPECT_TRUE(nijenhuis_check(L, LinearMap::zero(L.dim(), L.dim())).ok());
    }
}

TEST(Nijenhuis, LiftOfFixtureOperator) {
    const auto r = fixtures::rbo3_P(1);
    const LinearMap lift = nijenhuis_lift(r.action, r.T);
    EXPECT_EQ(lift.target_dim(), 6u);
    EXPECT_TRUE(nijenhuis_check(semidirect_bracket(r.action, r.weight), lift).ok());
}

TEST(Nijenhuis, LiftOfZeroIsProjectionOntoFirstSummand) {
    const auto a = fixtures::adjoint_action(lts4());
    const LinearMap lift = nijenhuis_lift(a, LinearMap::zero(4, 4));
    Matrix expect(8, 8);
    for (std::size_t i = 0; i < 4; ++i) expect(i, i) = 1;
    EXPECT_EQ(lift.matrix(), expect);
}

TEST(Nijenhuis, LiftIsIdempotent) {
    RandomSource rng(kSeed);
    for (const auto& a : support::fixture_actions()) {
        for (int trial = 0; trial < 30; ++trial) {
            const LinearMap lift = nijenhuis_lift(a, LinearMap(rng.matrix(a.source().dim(), a.target.dim())));
            EXPECT_EQ(compose(lift, lift), lift);
        }
    }
}

TEST(ThreeWayEquivalence, RandomMapsOnFixtures) {
    RandomSource rng(kSeed);
    for (const auto& a : support::fixture_actions()) {
        for (const Scalar& lambda : {Scalar(0), Scalar(1), Scalar(-1)}) {
            const LieTripleSystem sd = semidirect_bracket(a, lambda);
            std::size_t operators = 0;
            for (int trial = 0; trial < 120; ++trial) {
                const RelativeRBO r(a, lambda, LinearMap(rng.mixed_sparsity_matrix(a.source().dim(), a.target.dim())));
                const bool op = check_rbo(r).ok();
                EXPECT_EQ(op, is_subsystem(sd, graph_subsystem(r)));
                EXPECT_EQ(op, nijenhuis_check(sd, nijenhuis_lift(a, r.T)).ok());
                if (op) {
                    ++operators;
                    const auto D = descendent_lts(r);
                    EXPECT_TRUE(verify_lts(D).ok());
                    EXPECT_TRUE(is_homomorphism({D, r.L(), r.T}));
                }
            }
            EXPECT_GT(operators, 0u) << "sample contains no operators at weight " << to_string(lambda);
            EXPECT_LT(operators, 120u);
        }
    }
}

TEST(RboHomomorphism, IdentityPair) {
    for (const auto& r : {fixtures::rbo3_P(), fixtures::rbo4_P()}) {
        const std::size_t d = r.L().dim();
        EXPECT_TRUE(check_rbo_homomorphism({r, r, LinearMap::identity(d), LinearMap::identity(d)}).ok());
    }
}

TEST(RboHomomorphism, IdentityPairBetweenDifferentOperatorsFails) {
    const auto r = fixtures::rbo3_P();
    const RelativeRBO zero(r.action, r.weight, LinearMap::zero(3, 3));
    const Report rep = check_rbo_homomorphism({r, zero, LinearMap::identity(3), LinearMap::identity(3)});
    EXPECT_EQ(rep.count_rule("hom-T"), 1u);
    EXPECT_EQ(rep.violations.front().witness, (std::vector<std::size_t>{0}));
}

TEST(RboHomomorphism, DiagonalSignPairsFoundByEnumeration) {
    const auto r = fixtures::rbo3_P();
    std::size_t found = 0;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<int> a(3), b(3);
        for (int i = 0; i < 3; ++i) {
            a[i] = (mask >> i) & 1 ? -1 : 1;
            b[i] = (mask >> (i + 3)) & 1 ? -1 : 1;
        }
        if (check_rbo_homomorphism({r, r, LinearMap(diag(a)), LinearMap(diag(b))}).ok()) ++found;
    }
    // Derived by hand: psi_L = psi_L' = diag(s, t, t) for signs s, t.
    EXPECT_EQ(found, 4u);
    EXPECT_TRUE(check_rbo_homomorphism({r, r, LinearMap(diag({-1, 1, 1})), LinearMap(diag({-1, 1, 1}))}).ok());
}

TEST(RboHomomorphism, RequiresSharedActionAndWeight) {
    EXPECT_THROW(check_rbo_homomorphism({fixtures::rbo3_P(1), fixtures::rbo3_P(0), LinearMap::identity(3),
                                         LinearMap::identity(3)}),
                 ShapeError);
}

}  // namespace
}  // namespace lts
