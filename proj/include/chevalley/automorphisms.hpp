#pragma once
// Standard automorphisms of E_ad(B_l, R): ring, inner and central types and
// their composites (type B_l has no graph automorphisms), plus the torus lift
// into a quadratic extension R[sqrt r].

#include "chevalley/group_elements.hpp"

#include <memory>
#include <string>
#include <type_traits>
#include <vector>

namespace chevalley {

// Span membership over a local ring: coefficients c with sum_k c_k basis[k] = M,
// or nullopt. Needs the basis to have unit pivots modulo J.
template <LocalRing R>
std::optional<std::vector<R>> solve_in_span(const std::vector<Matrix<R>>& basis, const Matrix<R>& M) {
    const auto& ctx = M.context();
    int k = static_cast<int>(basis.size());
    int eqs = M.rows() * M.cols();
    std::vector<std::vector<R>> a(eqs, std::vector<R>(k + 1, ctx.zero()));
    for (int e = 0; e < eqs; ++e) {
        int r = e / M.cols(), c = e % M.cols();
        for (int j = 0; j < k; ++j) a[e][j] = basis[j](r, c);
        a[e][k] = M(r, c);
    }
    std::vector<int> pivot_row(k, -1);
    int next = 0;
    for (int j = 0; j < k; ++j) {
        int p = -1;
        for (int e = next; e < eqs; ++e)
            if (a[e][j].is_unit()) {
                p = e;
                break;
            }
        if (p < 0) throw NonUnit("span basis has no unit pivot");
        std::swap(a[p], a[next]);
        R inv = a[next][j].inverse();
        for (int c = j; c <= k; ++c) a[next][c] = a[next][c] * inv;
        for (int e = 0; e < eqs; ++e) {
            if (e == next || a[e][j].is_zero()) continue;
            R f = a[e][j];
            for (int c = j; c <= k; ++c) a[e][c] -= f * a[next][c];
        }
        pivot_row[j] = next++;
    }
    for (int e = next; e < eqs; ++e)
        if (!a[e][k].is_zero()) return std::nullopt;
    std::vector<R> out;
    for (int j = 0; j < k; ++j) out.push_back(a[pivot_row[j]][k]);
    return out;
}

// ad of every module basis element, as matrices over R.
template <LocalRing R>
std::vector<Matrix<R>> adjoint_span(const ChevalleyGroup<R>& G) {
    const auto& alg = G.algebra_data();
    std::vector<Matrix<R>> out;
    for (int k = 0; k < 2 * alg.num_positive(); ++k) out.push_back(ad_matrix<R>(alg, G.context(), alg.root_at(k)));
    for (int j = 0; j < alg.rank(); ++j)
        out.push_back(Matrix<R>::from_int(G.context(), alg.lie_ad(alg.h_index(j))));
    return out;
}

template <LocalRing R>
struct RingAutomorphism {
    enum class Kind { Identity, DualRescale, Frobenius };
    Kind kind = Kind::Identity;
    R u{};  // DualRescale: eps -> u eps, u a unit of the residue field (embedded)

    static RingAutomorphism identity() { return {}; }
    static RingAutomorphism frobenius() { return {Kind::Frobenius, R{}}; }
    static RingAutomorphism dual_rescale(const R& unit) {
        if constexpr (!std::is_same_v<R, Dual>) {
            throw UnsupportedRing("eps rescaling needs dual numbers");
        } else {
            if (!unit.is_unit() || !unit.eps_part().is_zero())
                throw InvalidArgument("eps rescaling needs a unit of the residue field");
            return {Kind::DualRescale, unit};
        }
    }

    R operator()(const R& x) const {
        switch (kind) {
            case Kind::Identity: return x;
            case Kind::Frobenius:
                if constexpr (std::is_same_v<R, ZMod>) {
                    if (!x.context().is_field()) throw UnsupportedRing("Frobenius is only offered on prime fields");
                    return power(x, static_cast<long long>(x.context().p));
                } else {
                    throw UnsupportedRing("Frobenius is only offered on prime fields");
                }
            case Kind::DualRescale:
                if constexpr (std::is_same_v<R, Dual>) {
                    return Dual(x.context(), x.real(), x.eps_part() * u.real());
                } else {
                    throw UnsupportedRing("eps rescaling needs dual numbers");
                }
        }
        throw std::logic_error("unknown ring automorphism");
    }

    std::string describe() const {
        switch (kind) {
            case Kind::Identity: return "ring(identity)";
            case Kind::Frobenius: return "ring(frobenius)";
            case Kind::DualRescale: return "ring(eps -> " + u.to_string() + "*eps)";
        }
        return "ring(?)";
    }
};

// Conjugation by a torus element defined over R[sqrt r] (see lift_torus).
template <LocalRing R>
struct TorusLift;

template <LocalRing R>
class StandardAutomorphism {
public:
    enum class Kind { Ring, Inner, InnerLift, Central, Composite };

    static StandardAutomorphism ring(RingAutomorphism<R> sigma) {
        StandardAutomorphism a;
        a.kind_ = Kind::Ring;
        a.sigma_ = sigma;
        return a;
    }
    // Throws InvalidArgument when g fails the normalization spot-check.
    static StandardAutomorphism inner(const ChevalleyGroup<R>& G, const GroupElement<R>& g) {
        if (!is_normalizing(G, g)) throw InvalidArgument("conjugating element does not normalize the group");
        StandardAutomorphism a;
        a.kind_ = Kind::Inner;
        a.g_ = std::make_shared<GroupElement<R>>(g);
        a.g_inv_ = std::make_shared<GroupElement<R>>(G.inv(g));
        return a;
    }
    static StandardAutomorphism inner_lift(std::shared_ptr<const TorusLift<R>> lift) {
        StandardAutomorphism a;
        a.kind_ = Kind::InnerLift;
        a.lift_ = std::move(lift);
        return a;
    }
    // Central automorphisms are trivial on the elementary adjoint group.
    static StandardAutomorphism central() {
        StandardAutomorphism a;
        a.kind_ = Kind::Central;
        return a;
    }
    static StandardAutomorphism composite(std::vector<StandardAutomorphism> parts) {
        StandardAutomorphism a;
        a.kind_ = Kind::Composite;
        a.parts_ = std::move(parts);
        return a;
    }

    Kind kind() const { return kind_; }

    GroupElement<R> apply(const GroupElement<R>& x) const {
        switch (kind_) {
            case Kind::Ring: {
                const auto& ctx = x.matrix.context();
                GroupElement<R> r{x.matrix.map([&](const R& v) { return sigma_(v); }, ctx), {}};
                for (auto f : x.word) {
                    f.t = sigma_(f.t);
                    for (auto& c : f.chi) c = sigma_(c);
                    r.word.push_back(std::move(f));
                }
                return r;
            }
            case Kind::Inner: return {g_->matrix * x.matrix * g_inv_->matrix, {}};
            case Kind::InnerLift:
                if constexpr (!is_sqrt_ext_v<R>) return lift_->apply(x);
                throw UnsupportedRing("quadratic extensions nest one level only");
            case Kind::Central: return x;
            case Kind::Composite: {
                GroupElement<R> r = x;
                for (const auto& p : parts_) r = p.apply(r);
                return r;
            }
        }
        throw std::logic_error("unknown automorphism kind");
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::Ring: return sigma_.describe();
            case Kind::Inner: return "inner(" + (g_->has_word() ? g_->word_string() : std::string("matrix")) + ")";
            case Kind::InnerLift:
                if constexpr (!is_sqrt_ext_v<R>) return "inner(" + lift_->describe() + ")";
                return "inner(lift)";
            case Kind::Central: return "central(trivial)";
            case Kind::Composite: {
                std::string s;
                for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? " then " : "") + parts_[i].describe();
                return s;
            }
        }
        return "?";
    }

    // det a unit and g ad(x_{+-a_i}) g^{-1} inside ad(L) for every simple root.
    static bool is_normalizing(const ChevalleyGroup<R>& G, const GroupElement<R>& g) {
        if (g.matrix.rows() != G.dim() || g.matrix.cols() != G.dim()) return false;
        if (!g.matrix.det().is_unit()) return false;
        Matrix<R> gi = g.has_word() ? G.inv(g).matrix : g.matrix.inverse();
        auto span = adjoint_span(G);
        for (int i = 0; i < G.rank(); ++i)
            for (int sgn : {1, -1}) {
                Root a = sgn * G.roots().simple(i);
                auto conj = g.matrix * ad_matrix<R>(G.algebra_data(), G.context(), a) * gi;
                if (!solve_in_span(span, conj)) return false;
            }
        return true;
    }

private:
    Kind kind_ = Kind::Central;
    RingAutomorphism<R> sigma_{};
    std::shared_ptr<const GroupElement<R>> g_, g_inv_;
    std::shared_ptr<const TorusLift<R>> lift_;
    std::vector<StandardAutomorphism> parts_;
};

template <LocalRing R>
struct TorusLift {
    using S = SqrtExt<R>;
    int kind = 1;  // 1 or l
    R r;
    typename S::Context ext;
    std::shared_ptr<const ChevalleyGroup<S>> group;
    GroupElement<S> t, t_inv;

    // exponent of r acquired by x_a: the a_1 (kind 1) or a_l coefficient of a
    int exponent(const Root& a) const {
        auto c = group->roots().coefficients(a);
        return kind == 1 ? c.front() : c.back();
    }

    Matrix<S> embed(const Matrix<R>& m) const { return m.map([&](const R& v) { return ext.embed(v); }, ext); }

    // t x t^{-1}, required to land in the embedded copy of R
    GroupElement<R> apply(const GroupElement<R>& x) const {
        Matrix<S> y = t.matrix * embed(x.matrix) * t_inv.matrix;
        Matrix<R> out(r.context(), y.rows(), y.cols());
        for (int i = 0; i < y.rows(); ++i)
            for (int j = 0; j < y.cols(); ++j) {
                if (!y(i, j).second().is_zero()) throw std::logic_error("torus lift left the base ring");
                out(i, j) = y(i, j).first();
            }
        return {std::move(out), {}};
    }

    // conj(t, x_a(xi)) = x_a(r^k xi) as matrices over S
    bool check_generator(const ChevalleyGroup<R>& G, const Root& a, const R& xi) const {
        Matrix<S> lhs = t.matrix * embed(G.x(a, xi).matrix) * t_inv.matrix;
        return lhs == embed(G.x(a, power(r, exponent(a)) * xi).matrix);
    }

    std::string describe() const {
        return "t_" + std::string(kind == 1 ? "1" : "l") + " over " + ext.name();
    }
};

// t_1 = h_{a_1}(s^2)...h_{a_{l-1}}(s^2) h_{a_l}(s)
// t_l = h_{a_1}(s^2) h_{a_2}(s^4)...h_{a_{l-1}}(s^{2(l-1)}) h_{a_l}(s^l)
template <LocalRing R>
    requires(!is_sqrt_ext_v<R>)
std::shared_ptr<const TorusLift<R>> lift_torus(const ChevalleyGroup<R>& G, int kind, const R& r) {
    int l = G.rank();
    if (kind != 1 && kind != l) throw InvalidArgument("lift kind must be 1 or l");
    if (!r.is_unit()) throw NonUnit("lift needs a unit, got " + r.to_string());
    auto lift = std::make_shared<TorusLift<R>>();
    lift->kind = kind == 1 ? 1 : l;
    lift->r = r;
    lift->ext = adjoin_sqrt<R>(G.context(), r);
    lift->group = std::make_shared<ChevalleyGroup<SqrtExt<R>>>(l, lift->ext);
    const auto& GS = *lift->group;
    auto s = lift->ext.root();
    GroupElement<SqrtExt<R>> t = GS.identity();
    for (int i = 0; i < l; ++i) {
        int e = kind == 1 ? (i + 1 < l ? 2 : 1) : (i + 1 < l ? 2 * (i + 1) : l);
        t = GS.mul(t, GS.h(GS.roots().simple(i), power(s, e)));
    }
    lift->t = t;
    lift->t_inv = GS.inv(t);
    return lift;
}

// Commutes with every x_{+-a_i}(1).
template <LocalRing R>
bool is_central(const ChevalleyGroup<R>& G, const GroupElement<R>& g) {
    for (int i = 0; i < G.rank(); ++i)
        for (int sgn : {1, -1}) {
            auto x = G.x(sgn * G.roots().simple(i), 1).matrix;
            if (!(g.matrix * x == x * g.matrix)) return false;
        }
    return true;
}

}  // namespace chevalley
