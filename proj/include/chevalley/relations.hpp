#pragma once
// Executable checks of the group relations: additivity, torus and Weyl
// conjugation, Chevalley commutator formula, the B_3 condition suite, and the
// commuting criterion for the Cartan-block involutions.

#include "chevalley/group_elements.hpp"

#include <array>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace chevalley {

namespace detail {

inline IntMatrix int_x(const ChevalleyAlgebra& alg, const Root& a, long long t) {
    return IntMatrix::identity(alg.dim()) + t * alg.ad(a) + (t * t) * alg.ad_half_square(a);
}
inline IntMatrix int_w(const ChevalleyAlgebra& alg, const Root& a, long long t) {
    // t = +-1 keeps everything integral
    return int_x(alg, a, t) * int_x(alg, -a, -t) * int_x(alg, a, t);
}

// Parameter c of x_g(c) read off a product of root elements: the (g, V_j)
// entry is linear in c and untouched by the other factors.
inline long long read_parameter(const ChevalleyAlgebra& alg, const IntMatrix& g, const Root& root) {
    const IntMatrix& A = alg.ad(root);
    int r = alg.index(root);
    for (int j = 0; j < alg.rank(); ++j) {
        long long d = A(r, alg.h_index(j));
        if (d == 0) continue;
        long long v = g(r, alg.h_index(j));
        if (v % d != 0) throw std::logic_error("non-integral parameter");
        return v / d;
    }
    throw std::logic_error("root element has no Cartan entry");
}

}  // namespace detail

// One term x_{i a + j b}(C t^i u^j) of the commutator formula.
struct CommutatorTerm {
    int i = 1, j = 1;
    Root root;
    long long constant = 0;
};

// Constants of [x_a(t), x_b(u)] = prod x_{ia+jb}(C_ij t^i u^j), derived from the
// group itself over the integers and cached per rank.
class CommutatorTable {
public:
    explicit CommutatorTable(const ChevalleyAlgebra& alg) : alg_(alg) {}

    const std::vector<CommutatorTerm>& terms(const Root& a, const Root& b) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(a, b);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, derive(a, b)).first->second;
    }

private:
    std::vector<CommutatorTerm> derive(const Root& a, const Root& b) const {
        const RootSystem& rs = alg_.roots();
        rs.require_root(a);
        rs.require_root(b);
        if (a == -b) throw InvalidArgument("commutator formula needs a + b != 0");
        std::vector<CommutatorTerm> out;
        for (int s = 2; s <= 4; ++s)
            for (int i = 1; i < s; ++i) {
                Root g = i * a + (s - i) * b;
                if (!g.is_zero() && rs.is_root(g)) out.push_back({i, s - i, g, 0});
            }
        if (a == b) return {};
        IntMatrix c = detail::int_x(alg_, a, 1) * detail::int_x(alg_, b, 1) * detail::int_x(alg_, a, -1) *
                      detail::int_x(alg_, b, -1);
        for (auto& term : out) term.constant = detail::read_parameter(alg_, c, term.root);
        // the formula must hold exactly; test it at a few integer points
        for (auto [t, u] : {std::pair{1LL, 1LL}, {2LL, 1LL}, {1LL, 3LL}, {-2LL, 5LL}}) {
            IntMatrix lhs = detail::int_x(alg_, a, t) * detail::int_x(alg_, b, u) * detail::int_x(alg_, a, -t) *
                            detail::int_x(alg_, b, -u);
            IntMatrix rhs = IntMatrix::identity(alg_.dim());
            for (const auto& term : out) {
                long long p = term.constant;
                for (int k = 0; k < term.i; ++k) p *= t;
                for (int k = 0; k < term.j; ++k) p *= u;
                rhs = rhs * detail::int_x(alg_, term.root, p);
            }
            if (!(lhs == rhs)) throw std::logic_error("commutator formula failed for " + a.to_string() + ", " + b.to_string());
        }
        return out;
    }

    const ChevalleyAlgebra& alg_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<Root, Root>, std::vector<CommutatorTerm>> cache_;
};

inline const CommutatorTable& commutator_table(int rank) {
    static std::map<int, std::unique_ptr<CommutatorTable>> tables;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = tables[rank];
    if (!slot) slot = std::make_unique<CommutatorTable>(*algebra(rank));
    return *slot;
}

// eta in w_a(1) x_b(t) w_a(1)^{-1} = x_{s_a b}(eta t)
inline int weyl_sign(const ChevalleyAlgebra& alg, const Root& a, const Root& b) {
    Root target = alg.roots().reflect(a, b);
    IntMatrix g = detail::int_w(alg, a, 1) * detail::int_x(alg, b, 1) * detail::int_w(alg, a, -1);
    long long eta = detail::read_parameter(alg, g, target);
    if (eta != 1 && eta != -1) throw std::logic_error("Weyl conjugation sign is not +-1");
    if (!(g == detail::int_x(alg, target, eta))) throw std::logic_error("Weyl conjugate is not a root element");
    return static_cast<int>(eta);
}

template <LocalRing R>
class Relations {
public:
    using Group = ChevalleyGroup<R>;
    using Element = GroupElement<R>;

    explicit Relations(const Group& g) : G_(g) {}

    // x_a(t) x_a(s) = x_a(t+s)
    bool check_additivity(const Root& a, const R& t, const R& s) const {
        return G_.mul(G_.x(a, t), G_.x(a, s)).matrix == G_.x(a, t + s).matrix;
    }

    // h(chi) x_b(xi) h(chi)^{-1} = x_b(chi(b) xi)
    bool check_torus_conjugation(const TorusCharacter<R>& chi, const Root& b, const R& xi) const {
        Element h = G_.h_char(chi);
        return G_.conj(h, G_.x(b, xi)).matrix == G_.x(b, chi(G_.roots(), b) * xi).matrix;
    }

    bool check_commutator(const Root& a, const Root& b, const R& t, const R& u) const {
        const auto& terms = commutator_table(G_.rank()).terms(a, b);
        Element lhs = G_.commutator(G_.x(a, t), G_.x(b, u));
        Element rhs = G_.identity();
        for (const auto& term : terms) {
            R p = G_.context().from_int(term.constant) * power(t, term.i) * power(u, term.j);
            rhs = G_.mul(rhs, G_.x(term.root, p));
        }
        return lhs.matrix == rhs.matrix;
    }

    bool check_weyl_conjugation(const Root& a, const Root& b, const R& t) const {
        const auto& alg = G_.algebra_data();
        int eta = weyl_sign(alg, a, b);
        Element lhs = G_.conj(G_.w(a, 1), G_.x(b, t));
        return lhs.matrix == G_.x(alg.roots().reflect(a, b), G_.context().from_int(eta) * t).matrix;
    }

    // Cartan-block involution criterion: w~_i, w~_j commute iff
    // V_1^i in V_0^j and V_1^j in V_0^i. With 1/2 available,
    // V_1^i = im(1 - w~_i) and V_0^j = ker(1 - w~_j).
    struct InvolutionReport {
        bool commute = false;
        bool eigenspace_condition = false;
    };
    InvolutionReport check_involution_commuting(int i, int j) const {
        if (i == j) throw InvalidArgument("involution criterion needs i != j");
        auto wi = cartan_block(i), wj = cartan_block(j);
        IntMatrix I = IntMatrix::identity(G_.rank());
        InvolutionReport r;
        r.commute = wi * wj == wj * wi;
        r.eigenspace_condition = ((I - wj) * (I - wi)).is_zero() && ((I - wi) * (I - wj)).is_zero();
        return r;
    }

    // l x l block of w_{a_i}(1) on V_1..V_l
    IntMatrix cartan_block(int i) const {
        const auto& alg = G_.algebra_data();
        IntMatrix w = detail::int_w(alg, alg.roots().simple(i), 1);
        int l = alg.rank();
        IntMatrix b(l, l);
        for (int r = 0; r < l; ++r)
            for (int c = 0; c < l; ++c) b(r, c) = w(alg.h_index(r), alg.h_index(c));
        return b;
    }

private:
    const Group& G_;
};

// ---------------------------------------------------------------------------
// The seven B_3 conditions on x_1, x_3, w_1..w_3, h_2.

template <LocalRing R>
struct ConGenerators {
    GroupElement<R> x1, x3, w1, w2, w3, h2;
};

template <LocalRing R>
struct ConReport {
    std::array<bool, 7> holds{};
    // Con4 exactly as printed, x_1 x_2 = x_4 x_2 x_1. It contradicts Con7 in every
    // sign convention, so the suite checks x_1 x_2 = x_4^{-1} x_2 x_1 instead.
    bool con4_as_printed = false;
    bool all() const {
        for (bool b : holds)
            if (!b) return false;
        return true;
    }
};

template <LocalRing R>
ConGenerators<R> canonical_con_generators(const ChevalleyGroup<R>& G) {
    if (G.rank() != 3) throw InvalidArgument("the condition suite is stated for rank 3");
    const RootSystem& rs = G.roots();
    return {G.x(rs.simple(0), 1), G.x(rs.simple(2), 1), G.w(rs.simple(0), 1),
            G.w(rs.simple(1), 1), G.w(rs.simple(2), 1), G.h(rs.simple(1), -1)};
}

template <LocalRing R>
ConReport<R> check_con_suite(const ChevalleyGroup<R>& G, const ConGenerators<R>& g) {
    const auto& x1 = g.x1;
    const auto& x3 = g.x3;
    auto x4 = G.conj(g.w2, x1);
    auto x2 = G.conj(g.w1, x4);
    auto x7 = G.conj(g.w3, x2);
    auto x5 = G.conj(g.w2, x3);
    auto E = G.identity().matrix;
    auto m = [&](std::initializer_list<const GroupElement<R>*> fs) {
        Matrix<R> acc = E;
        for (auto* f : fs) acc = acc * f->matrix;
        return acc;
    };
    auto x4i = G.inv(x4);
    ConReport<R> r;
    r.holds[0] = m({&g.h2, &x1, &g.h2, &x1}) == E;
    r.holds[1] = m({&x1, &x4}) == m({&x4, &x1});
    r.holds[2] = m({&x1, &x3}) == m({&x3, &x1});
    r.holds[3] = m({&x1, &x2}) == m({&x4i, &x2, &x1});
    r.holds[4] = m({&x7, &x3}) == m({&x3, &x7});
    r.holds[5] = m({&g.h2, &x3, &g.h2, &x3}) == E;
    r.holds[6] = m({&x7, &x7, &x3, &x5}) == m({&x5, &x3});
    r.con4_as_printed = m({&x1, &x2}) == m({&x4, &x2, &x1});
    return r;
}

// A generator of the suite replaced by its radical perturbation.
template <LocalRing R>
struct Perturbation {
    int generator = 0;  // 0:x1 1:x3 2:w1 3:w2 4:w3 5:h2
    R j{};
    std::string describe() const {
        static const char* names[] = {"x1", "x3", "w1", "w2", "w3", "h2"};
        return std::string(names[generator]) + " shifted by " + j.to_string();
    }
};

template <LocalRing R>
ConGenerators<R> perturbed_generators(const ChevalleyGroup<R>& G, const Perturbation<R>& p) {
    const RootSystem& rs = G.roots();
    auto g = canonical_con_generators(G);
    R one = G.context().one();
    switch (p.generator) {
        case 0: g.x1 = G.x(rs.simple(0), one + p.j); break;
        case 1: g.x3 = G.x(rs.simple(2), one + p.j); break;
        case 2: g.w1 = G.w(rs.simple(0), one + p.j); break;
        case 3: g.w2 = G.w(rs.simple(1), one + p.j); break;
        case 4: g.w3 = G.w(rs.simple(2), one + p.j); break;
        case 5: g.h2 = G.h(rs.simple(1), -one + p.j); break;
        default: throw InvalidArgument("unknown generator");
    }
    return g;
}

// Shifting the parameter of w2 multiplies x2, x4, x5 and x7 by the same unit
// 1 + j, and every condition is homogeneous in that factor, so no such shift is
// ever detected. Sampling draws from the remaining generators.
inline constexpr std::array<int, 5> kPinnedGenerators{0, 1, 2, 4, 5};
inline constexpr int kScaleInvisibleGenerator = 3;

// Seeded sample of perturbations with nonzero radical shifts.
template <LocalRing R>
std::vector<Perturbation<R>> sample_perturbations(const typename R::Context& ctx, int count, std::mt19937_64& rng) {
    std::vector<Perturbation<R>> out;
    R probe = ctx.random_radical(rng);
    for (int tries = 0; tries < 1000 && probe.is_zero(); ++tries) probe = ctx.random_radical(rng);
    if (probe.is_zero()) throw UnsupportedRing("radical perturbations need J != 0");
    std::uniform_int_distribution<std::size_t> pick(0, kPinnedGenerators.size() - 1);
    for (int k = 0; k < count; ++k) {
        R j = ctx.random_radical(rng);
        while (j.is_zero()) j = ctx.random_radical(rng);
        // cycle through the generators first so every one is exercised
        std::size_t g = k < static_cast<int>(kPinnedGenerators.size()) ? k : pick(rng);
        out.push_back({kPinnedGenerators[g], j});
    }
    return out;
}

}  // namespace chevalley
