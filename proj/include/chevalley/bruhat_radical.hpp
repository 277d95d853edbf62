#pragma once
// Products X = lambda * t_{a_1}(s_1)..t_{a_l}(s_l) * x_{a_1}(t_1)..x_{a_m}(t_m)
//              * x_{-a_1}(u_1)..x_{-a_m}(u_m)
// congruent to the identity modulo the radical, and the recovery of the n+1
// coefficients from n+1 designated matrix positions.

#include "chevalley/group_elements.hpp"

#include <string>
#include <vector>

namespace chevalley {

template <LocalRing R>
struct RadicalCoefficients {
    R lambda;
    std::vector<R> s, t, u;

    static RadicalCoefficients trivial(const typename R::Context& ctx, int rank, int m) {
        return {ctx.one(), std::vector<R>(rank, ctx.one()), std::vector<R>(m, ctx.zero()),
                std::vector<R>(m, ctx.zero())};
    }
    std::size_t size() const { return 1 + s.size() + t.size() + u.size(); }
    friend bool operator==(const RadicalCoefficients& a, const RadicalCoefficients& b) {
        return a.lambda == b.lambda && a.s == b.s && a.t == b.t && a.u == b.u;
    }
};

struct Position {
    int row = 0, col = 0;
    friend bool operator==(const Position& a, const Position& b) { return a.row == b.row && a.col == b.col; }
};

// Which unknown a designated position is read for, in reading order.
struct DesignatedPosition {
    Position pos;
    std::string reason;
};

// Reading order: the (-g_1,-g_1) diagonal, then for q = 2, 3, ... the t/u pair
// of every new root g_p - g_q (p < q) followed by the (-g_q,-g_q) diagonal up to
// q = l+1, and finally the Cartan-row/column pairs of the roots that are not a
// difference of two gammas.
inline std::vector<DesignatedPosition> designated_positions(const ChevalleyAlgebra& alg) {
    const RootSystem& rs = alg.roots();
    auto g = rs.gamma_sequence();
    int l = rs.rank(), m = rs.num_positive();
    std::vector<DesignatedPosition> out;
    std::vector<bool> done(m, false);
    auto diag = [&](int q) {
        int k = alg.index(-g[q]);
        out.push_back({{k, k}, "diagonal at -gamma_" + std::to_string(q + 1)});
    };
    diag(0);
    for (int q = 1; q < static_cast<int>(g.size()); ++q) {
        for (int p = 0; p < q; ++p) {
            Root d = g[p] - g[q];
            if (!rs.is_positive(d)) continue;
            int k = rs.positive_index(d);
            if (done[k]) continue;
            done[k] = true;
            int a = alg.index(-g[p]), b = alg.index(-g[q]);
            std::string tag = "a" + std::to_string(k + 1) + " = gamma_" + std::to_string(p + 1) + " - gamma_" +
                              std::to_string(q + 1);
            out.push_back({{b, a}, "t for " + tag});
            out.push_back({{a, b}, "u for " + tag});
        }
        if (q <= l) diag(q);
    }
    for (int k = 0; k < m; ++k) {
        if (done[k]) continue;
        const Root& d = rs.positive(k);
        const IntMatrix& A = alg.ad(d);
        int neg = alg.index(-d);
        // the t entry needs a nonzero coroot coefficient, the u entry a nonzero pairing
        int jt = 0, ju = 0;
        while (jt < l && A(alg.h_index(jt), neg) == 0) ++jt;
        const IntMatrix& B = alg.ad(-d);
        while (ju < l && B(neg, alg.h_index(ju)) == 0) ++ju;
        if (jt == l || ju == l) throw std::logic_error("no Cartan entry for " + d.to_string());
        std::string tag = "a" + std::to_string(k + 1);
        out.push_back({{alg.h_index(jt), neg}, "t for " + tag + " via h" + std::to_string(jt + 1)});
        out.push_back({{neg, alg.h_index(ju)}, "u for " + tag + " via h" + std::to_string(ju + 1)});
    }
    if (static_cast<int>(out.size()) != alg.dim() + 1) throw std::logic_error("designated positions do not number n+1");
    return out;
}

template <LocalRing R>
class RadicalDecomposition {
public:
    using Group = ChevalleyGroup<R>;

    explicit RadicalDecomposition(const Group& G) : G_(G), positions_(designated_positions(G.algebra_data())) {}

    const std::vector<DesignatedPosition>& positions() const { return positions_; }

    Matrix<R> compose(const RadicalCoefficients<R>& c) const {
        validate(c);
        const RootSystem& rs = G_.roots();
        Matrix<R> X = G_.scalar(c.lambda).matrix;
        for (int k = 0; k < rs.rank(); ++k) X = X * G_.torus_simple(k, c.s[k]).matrix;
        for (int i = 0; i < rs.num_positive(); ++i)
            if (!c.t[i].is_zero()) X = X * G_.x(rs.positive(i), c.t[i]).matrix;
        for (int i = 0; i < rs.num_positive(); ++i)
            if (!c.u[i].is_zero()) X = X * G_.x(-rs.positive(i), c.u[i]).matrix;
        return X;
    }

    // Linearisation of compose at the trivial tuple, restricted to the
    // designated positions. Unknown order: lambda, s, t, u.
    IntMatrix jacobian() const {
        const auto& alg = G_.algebra_data();
        const RootSystem& rs = alg.roots();
        int N = alg.dim() + 1, l = rs.rank(), m = rs.num_positive();
        std::vector<IntMatrix> cols;
        cols.push_back(IntMatrix::identity(alg.dim()));
        for (int k = 0; k < l; ++k) cols.push_back(alg.coefficient_diagonal(k));
        for (int i = 0; i < m; ++i) cols.push_back(alg.ad(rs.positive(i)));
        for (int i = 0; i < m; ++i) cols.push_back(alg.ad(-rs.positive(i)));
        IntMatrix J(N, N);
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) J(r, c) = cols[c](positions_[r].pos.row, positions_[r].pos.col);
        return J;
    }

    RadicalCoefficients<R> reconstruct(const Matrix<R>& X) const {
        const auto& ctx = G_.context();
        auto nil = ctx.nilpotency();
        if (!nil) throw UnsupportedRing("reconstruction needs a nilpotent radical; " + ctx.name() + " has none");
        if (X.rows() != G_.dim() || X.cols() != G_.dim()) throw InvalidArgument("matrix has the wrong size");
        if (!X.congruent_to_identity()) throw NotRadicalCongruent("matrix is not congruent to the identity modulo J");

        const RootSystem& rs = G_.roots();
        int l = rs.rank(), m = rs.num_positive(), N = G_.dim() + 1;
        auto target = read(X);
        Matrix<R> Jinv = Matrix<R>::from_int(ctx, jacobian()).inverse();
        auto c = RadicalCoefficients<R>::trivial(ctx, l, m);
        // chord iteration: each sweep gains one power of J
        for (int sweep = 0; sweep < *nil; ++sweep) {
            auto cur = read(compose(c));
            std::vector<R> diff(N, ctx.zero());
            bool done = true;
            for (int r = 0; r < N; ++r) {
                diff[r] = cur[r] - target[r];
                done = done && diff[r].is_zero();
            }
            if (done) return c;
            std::vector<R> step(N, ctx.zero());
            for (int r = 0; r < N; ++r)
                for (int k = 0; k < N; ++k)
                    if (!Jinv(r, k).is_zero() && !diff[k].is_zero()) step[r] += Jinv(r, k) * diff[k];
            c.lambda -= step[0];
            for (int k = 0; k < l; ++k) c.s[k] -= step[1 + k];
            for (int i = 0; i < m; ++i) c.t[i] -= step[1 + l + i];
            for (int i = 0; i < m; ++i) c.u[i] -= step[1 + l + m + i];
        }
        if (read(compose(c)) != target) throw std::logic_error("reconstruction did not converge");
        return c;
    }

    std::vector<R> read(const Matrix<R>& X) const {
        std::vector<R> v;
        v.reserve(positions_.size());
        for (const auto& p : positions_) v.push_back(X(p.pos.row, p.pos.col));
        return v;
    }

    RadicalCoefficients<R> random_coefficients(std::mt19937_64& rng) const {
        const auto& ctx = G_.context();
        auto c = RadicalCoefficients<R>::trivial(ctx, G_.rank(), G_.roots().num_positive());
        c.lambda = random_principal_unit<R>(ctx, rng);
        for (auto& v : c.s) v = random_principal_unit<R>(ctx, rng);
        for (auto& v : c.t) v = ctx.random_radical(rng);
        for (auto& v : c.u) v = ctx.random_radical(rng);
        return c;
    }

    void validate(const RadicalCoefficients<R>& c) const {
        const auto& ctx = G_.context();
        int l = G_.rank(), m = G_.roots().num_positive();
        if (static_cast<int>(c.s.size()) != l || static_cast<int>(c.t.size()) != m ||
            static_cast<int>(c.u.size()) != m)
            throw InvalidArgument("coefficient tuple has the wrong length");
        auto principal = [&](const R& v) { return (v - ctx.one()).in_radical(); };
        if (!principal(c.lambda)) throw InvalidArgument("lambda must be congruent to 1 modulo J");
        for (const R& v : c.s)
            if (!principal(v)) throw InvalidArgument("s_i must be congruent to 1 modulo J");
        for (const R& v : c.t)
            if (!v.in_radical()) throw InvalidArgument("t_i must lie in J");
        for (const R& v : c.u)
            if (!v.in_radical()) throw InvalidArgument("u_i must lie in J");
    }

private:
    const Group& G_;
    std::vector<DesignatedPosition> positions_;
};

}  // namespace chevalley
