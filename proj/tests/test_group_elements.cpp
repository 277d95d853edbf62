#include "chevalley/group_elements.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chevalley;

namespace {

const ZMod::Context Z9(3, 2);
const ZMod::Context Z27(3, 3);
const ZMod::Context GF7(7, 1);

template <class R>
std::vector<R> diagonal(const Matrix<R>& m) {
    std::vector<R> d;
    for (int i = 0; i < m.rows(); ++i) d.push_back(m(i, i));
    return d;
}

}  // namespace

TEST(GroupOracle, TorusInvolutionDiagonals) {
    ChevalleyGroup<ZMod> G(3, GF7);
    auto h1 = G.h(G.roots().simple(0), -1).matrix;
    std::vector<int> want{1, 1, -1, -1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1};
    std::vector<ZMod> w;
    for (int v : want) w.push_back(GF7.from_int(v));
    EXPECT_EQ(diagonal(h1), w);
    EXPECT_EQ(h1.nonzeros(), 21u);

    // a2 = e2-e3 pairs with a1..a9 as -1,2,-1,1,1,0,0,-1,1
    auto h2 = G.h(G.roots().simple(1), -1).matrix;
    std::vector<int> want2{-1, -1, 1, 1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1};
    std::vector<ZMod> w2;
    for (int v : want2) w2.push_back(GF7.from_int(v));
    EXPECT_EQ(diagonal(h2), w2);
}

TEST(GroupOracle, TrivialParameters) {
    ChevalleyGroup<ZMod> G(2, Z9);
    auto I = G.identity().matrix;
    for (const Root& a : G.roots().roots()) {
        EXPECT_EQ(G.x(a, 0).matrix, I);
        EXPECT_EQ(G.h(a, 1).matrix, I);
    }
    TorusCharacter<ZMod> one{{Z9.one(), Z9.one()}};
    EXPECT_EQ(G.h_char(one).matrix, I);
}

TEST(GroupOracle, CharacterEntry) {
    ChevalleyGroup<ZMod> G(2, Z9);
    TorusCharacter<ZMod> chi{{Z9.from_int(2), Z9.one()}};
    auto m = G.h_char(chi).matrix;
    int k = G.algebra_data().index(parse_root("e1+e2", 2));
    EXPECT_EQ(m(k, k), Z9.from_int(2));
    EXPECT_EQ(m(k + 1, k + 1), Z9.from_int(2).inverse());
}

TEST(GroupOracle, CharacterOfSingleRoot) {
    ChevalleyGroup<ZMod> G(3, Z27);
    const auto& rs = G.roots();
    ZMod u = Z27.from_int(5);
    for (int i = 0; i < 3; ++i) {
        // chi_{a,u}(b) = u^<b,a>, so its values on the simple roots are u^<a_j, a_i>
        TorusCharacter<ZMod> chi{{}};
        for (int j = 0; j < 3; ++j) chi.values.push_back(power(u, RootSystem::pairing(rs.simple(j), rs.simple(i))));
        EXPECT_EQ(G.h_char(chi).matrix, G.h(rs.simple(i), u).matrix);
    }
}

TEST(GroupOracle, WeylElementSquaresAndOrder) {
    ChevalleyGroup<ZMod> G(3, Z27);
    auto I = G.identity().matrix;
    for (const Root& a : G.roots().roots()) {
        auto w = G.w(a, 1);
        auto w2 = G.mul(w, w);
        EXPECT_EQ(w2.matrix, G.h(a, -1).matrix) << a.to_string();
        EXPECT_EQ(G.mul(w2, w2).matrix, I);
        EXPECT_EQ(G.mul(w, G.w(a, -1)).matrix, I);
    }
}

TEST(GroupOracle, WeylElementIsMonomial) {
    ChevalleyGroup<ZMod> G(3, GF7);
    const auto& alg = G.algebra_data();
    for (const Root& a : G.roots().roots()) {
        auto w = G.w(a, 1).matrix;
        for (int j = 0; j < alg.dim(); ++j) {
            if (alg.is_h_index(j)) continue;
            // column of v_b has one nonzero entry, at v_{s_a b}
            int target = alg.index(G.roots().reflect(a, alg.root_at(j)));
            for (int i = 0; i < alg.dim(); ++i) {
                if (i == target) EXPECT_TRUE(w(i, j).is_unit());
                else EXPECT_TRUE(w(i, j).is_zero());
            }
        }
    }
}

TEST(GroupOracle, WeylConjugationMovesRootElement) {
    ChevalleyGroup<ZMod> G(3, GF7);
    const auto& rs = G.roots();
    auto c = G.conj(G.w(rs.simple(1), 1), G.x(rs.simple(0), 1)).matrix;
    Root target = rs.reflect(rs.simple(1), rs.simple(0));
    EXPECT_TRUE(c == G.x(target, 1).matrix || c == G.x(target, -1).matrix);
}

TEST(GroupOracle, TorusFromWeylElements) {
    ChevalleyGroup<ZMod> G(2, Z27);
    for (const Root& a : G.roots().roots())
        for (int t : {2, 4, 26}) {
            auto lhs = G.h(a, t).matrix;
            auto rhs = G.mul(G.w(a, t), G.inv(G.w(a, 1))).matrix;
            EXPECT_EQ(lhs, rhs) << a.to_string() << " " << t;
        }
}

TEST(GroupOracle, NonUnitParametersRejected) {
    ChevalleyGroup<ZMod> G(2, Z9);
    EXPECT_THROW(G.w(G.roots().simple(0), 3), NonUnit);
    EXPECT_THROW(G.h(G.roots().simple(0), 6), NonUnit);
    TorusCharacter<ZMod> chi{{Z9.from_int(3), Z9.one()}};
    EXPECT_THROW(G.h_char(chi), NonUnit);
    TorusCharacter<ZMod> short_chi{{Z9.one()}};
    EXPECT_THROW(G.h_char(short_chi), InvalidArgument);
}

TEST(GroupOracle, RadicalCongruence) {
    ChevalleyGroup<ZMod> G(2, Z9);
    EXPECT_TRUE(G.is_radical_congruent(G.identity()));
    EXPECT_TRUE(G.is_radical_congruent(G.x(G.roots().simple(1), 3)));
    EXPECT_FALSE(G.is_radical_congruent(G.h(G.roots().simple(0), -1)));
    EXPECT_FALSE(G.is_radical_congruent(G.x(G.roots().simple(0), 1)));
}

TEST(GroupOracle, GroupPlumbing) {
    ChevalleyGroup<ZMod> G(3, Z9);
    auto g = G.mul(G.x(G.roots().simple(2), 4), G.w(G.roots().simple(0), 2));
    auto h = G.h(G.roots().simple(1), 5);
    EXPECT_EQ(G.mul(g, G.inv(g)).matrix, G.identity().matrix);
    EXPECT_EQ(G.conj(G.identity(), h).matrix, h.matrix);
    EXPECT_EQ(G.inv(g).matrix, g.matrix.inverse());
    EXPECT_EQ(g.word.size(), 2u);
}

// ---- properties ----------------------------------------------------------------

template <class R>
void one_parameter_properties(const typename R::Context& ctx, int l, std::uint64_t seed) {
    ChevalleyGroup<R> G(l, ctx);
    std::mt19937_64 rng(seed);
    auto I = G.identity().matrix;
    for (const Root& a : G.roots().roots()) {
        for (int k = 0; k < 4; ++k) {
            R t = ctx.random(rng), s = ctx.random(rng);
            auto xt = G.x(a, t).matrix;
            ASSERT_EQ(xt * G.x(a, s).matrix, G.x(a, t + s).matrix);
            auto d = xt - I;
            ASSERT_TRUE((d * d * d).is_zero());
            ASSERT_EQ(xt.det(), ctx.one());
            R u = random_unit<R>(ctx, rng), v = random_unit<R>(ctx, rng);
            ASSERT_EQ(G.h(a, u).matrix * G.h(a, v).matrix, G.h(a, u * v).matrix);
        }
        R d = G.w(a, 1).matrix.det();
        ASSERT_TRUE(d == ctx.one() || d == -ctx.one());
    }
    TorusCharacter<R> chi{{}};
    for (int i = 0; i < l; ++i) chi.values.push_back(random_unit<R>(ctx, rng));
    ASSERT_TRUE(G.h_char(chi).matrix.det().is_unit());
}

TEST(GroupProperties, OneParameterGF7) { one_parameter_properties<ZMod>(GF7, 3, 1); }
TEST(GroupProperties, OneParameterZ27) { one_parameter_properties<ZMod>(Z27, 2, 2); }
TEST(GroupProperties, OneParameterDual) { one_parameter_properties<Dual>(Dual::Context(7), 2, 3); }
TEST(GroupProperties, OneParameterLocalized) { one_parameter_properties<ZLoc>(ZLoc::Context(5), 2, 4); }
TEST(GroupProperties, OneParameterQuadratic) {
    one_parameter_properties<SqrtExt<ZMod>>(adjoin_sqrt<ZMod>(Z9, Z9.from_int(2)), 2, 5);
}

TEST(GroupProperties, ResidueCommutesWithConstructors) {
    ChevalleyGroup<ZMod> G(3, Z27);
    ChevalleyGroup<ZMod> K(3, Z27.residue_context());
    std::mt19937_64 rng(6);
    for (const Root& a : G.roots().roots()) {
        ZMod t = Z27.random(rng), u = random_unit<ZMod>(Z27, rng);
        ASSERT_EQ(G.x(a, t).matrix.residue(), K.x(a, t.residue()).matrix);
        ASSERT_EQ(G.w(a, u).matrix.residue(), K.w(a, u.residue()).matrix);
        ASSERT_EQ(G.h(a, u).matrix.residue(), K.h(a, u.residue()).matrix);
        auto g = G.mul(G.x(a, t), G.w(a, u));
        auto k = K.mul(K.x(a, t.residue()), K.w(a, u.residue()));
        ASSERT_EQ(G.inv(g).matrix.residue(), K.inv(k).matrix);
    }
}

TEST(GroupProperties, RadicalParametersStayCongruent) {
    ChevalleyGroup<ZMod> G(3, Z27);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 30; ++k) {
        Root a = G.roots().roots()[k % 18];
        ASSERT_TRUE(G.is_radical_congruent(G.x(a, Z27.random_radical(rng))));
        ASSERT_TRUE(G.is_radical_congruent(G.h(a, random_principal_unit<ZMod>(Z27, rng))));
    }
}
