#pragma once
// Elements of the adjoint elementary Chevalley group E_ad(B_l, R): root
// elements x_a(t), Weyl elements w_a(t), torus elements h_a(t) and h(chi).

#include "chevalley/chevalley_algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace chevalley {

template <LocalRing R>
struct Factor {
    enum class Kind { Unipotent, Weyl, Torus, Char, Scalar };
    Kind kind = Kind::Unipotent;
    Root root;
    R t{};
    std::vector<R> chi;  // Char only: values on the simple roots

    std::string to_string() const {
        switch (kind) {
            case Kind::Unipotent: return "x_{" + root.to_string() + "}(" + t.to_string() + ")";
            case Kind::Weyl: return "w_{" + root.to_string() + "}(" + t.to_string() + ")";
            case Kind::Torus: return "h_{" + root.to_string() + "}(" + t.to_string() + ")";
            case Kind::Scalar: return "(" + t.to_string() + ")";
            case Kind::Char: {
                std::string s = "h(chi=[";
                for (std::size_t i = 0; i < chi.size(); ++i) s += (i ? "," : "") + chi[i].to_string();
                return s + "])";
            }
        }
        return "?";
    }
};

template <LocalRing R>
struct GroupElement {
    Matrix<R> matrix;
    std::vector<Factor<R>> word;  // empty when unknown

    bool has_word() const { return !word.empty(); }
    std::string word_string() const {
        std::string s;
        for (const auto& f : word) s += f.to_string();
        return s;
    }
    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.matrix == b.matrix; }
};

// Character of the root lattice given by its values on the simple roots.
template <LocalRing R>
struct TorusCharacter {
    std::vector<R> values;

    R operator()(const RootSystem& rs, const Root& beta) const {
        auto c = rs.coefficients(beta);
        R acc = values.front().context().one();
        for (std::size_t i = 0; i < values.size(); ++i) acc = acc * power(values[i], c[i]);
        return acc;
    }
};

template <LocalRing R>
class ChevalleyGroup {
public:
    using Context = typename R::Context;
    using Element = GroupElement<R>;
    using F = Factor<R>;

    ChevalleyGroup(int rank, const Context& ctx) : alg_(algebra(rank)), ctx_(ctx) {}

    const ChevalleyAlgebra& algebra_data() const { return *alg_; }
    const RootSystem& roots() const { return alg_->roots(); }
    const Context& context() const { return ctx_; }
    int rank() const { return alg_->rank(); }
    int dim() const { return alg_->dim(); }

    Element identity() const { return {Matrix<R>::identity(ctx_, dim()), {}}; }

    // exp(t ad x_a) = 1 + t A + t^2 A^2/2
    Element x(const Root& a, const R& t) const {
        roots().require_root(a);
        Matrix<R> m = Matrix<R>::identity(ctx_, dim());
        if (!t.is_zero()) {
            const IntMatrix& A = alg_->ad(a);
            const IntMatrix& H = alg_->ad_half_square(a);
            R t2 = t * t;
            for (int i = 0; i < dim(); ++i)
                for (int j = 0; j < dim(); ++j) {
                    if (A(i, j) != 0) m(i, j) += ctx_.from_int(A(i, j)) * t;
                    if (H(i, j) != 0) m(i, j) += ctx_.from_int(H(i, j)) * t2;
                }
        }
        return {std::move(m), {F{F::Kind::Unipotent, a, t, {}}}};
    }
    Element x(const Root& a, long long t) const { return x(a, ctx_.from_int(t)); }

    // w_a(t) = x_a(t) x_{-a}(-t^{-1}) x_a(t)
    Element w(const Root& a, const R& t) const {
        R ti = t.inverse();
        Matrix<R> m = x(a, t).matrix * x(-a, -ti).matrix * x(a, t).matrix;
        return {std::move(m), {F{F::Kind::Weyl, a, t, {}}}};
    }
    Element w(const Root& a, long long t = 1) const { return w(a, ctx_.from_int(t)); }

    // diagonal: t^{<b,a>} on v_b, 1 on the Cartan block
    Element h(const Root& a, const R& t) const {
        roots().require_root(a);
        if (!t.is_unit()) throw NonUnit("h_a(t) needs a unit, got " + t.to_string());
        Matrix<R> m = Matrix<R>::identity(ctx_, dim());
        R ti = t.inverse();
        for (int k = 0; k < 2 * alg_->num_positive(); ++k) {
            int e = RootSystem::pairing(alg_->root_at(k), a);
            m(k, k) = e >= 0 ? power(t, e) : power(ti, -e);
        }
        return {std::move(m), {F{F::Kind::Torus, a, t, {}}}};
    }
    Element h(const Root& a, long long t) const { return h(a, ctx_.from_int(t)); }

    Element h_char(const TorusCharacter<R>& chi) const {
        if (static_cast<int>(chi.values.size()) != rank()) throw InvalidArgument("character needs one value per simple root");
        for (const R& v : chi.values)
            if (!v.is_unit()) throw NonUnit("character value " + v.to_string() + " is not a unit");
        Matrix<R> m = Matrix<R>::identity(ctx_, dim());
        for (int k = 0; k < 2 * alg_->num_positive(); ++k) m(k, k) = chi(roots(), alg_->root_at(k));
        return {std::move(m), {F{F::Kind::Char, Root{}, ctx_.one(), chi.values}}};
    }

    // torus element with chi(a_k) = s and chi(a_j) = 1 otherwise
    Element torus_simple(int k, const R& s) const {
        TorusCharacter<R> chi{std::vector<R>(rank(), ctx_.one())};
        chi.values.at(k) = s;
        return h_char(chi);
    }

    Element scalar(const R& lambda) const {
        Matrix<R> m(ctx_, dim(), dim());
        for (int i = 0; i < dim(); ++i) m(i, i) = lambda;
        return {std::move(m), {F{F::Kind::Scalar, Root{}, lambda, {}}}};
    }

    Element mul(const Element& a, const Element& b) const {
        Element r{a.matrix * b.matrix, {}};
        if (a.has_word() && b.has_word()) {
            r.word = a.word;
            r.word.insert(r.word.end(), b.word.begin(), b.word.end());
        }
        return r;
    }

    Element inv(const Element& g) const {
        if (!g.has_word()) return {g.matrix.inverse(), {}};
        Element r = identity();
        for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) r = mul(r, inverse_factor(*it));
        return r;
    }

    // g h g^{-1}
    Element conj(const Element& g, const Element& h) const { return mul(mul(g, h), inv(g)); }

    // [a, b] = a b a^{-1} b^{-1}
    Element commutator(const Element& a, const Element& b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

    bool is_radical_congruent(const Element& g) const { return g.matrix.congruent_to_identity(); }

    Element from_factor(const F& f) const {
        switch (f.kind) {
            case F::Kind::Unipotent: return x(f.root, f.t);
            case F::Kind::Weyl: return w(f.root, f.t);
            case F::Kind::Torus: return h(f.root, f.t);
            case F::Kind::Char: return h_char(TorusCharacter<R>{f.chi});
            case F::Kind::Scalar: return scalar(f.t);
        }
        throw std::logic_error("unknown factor kind");
    }

private:
    Element inverse_factor(const F& f) const {
        switch (f.kind) {
            case F::Kind::Unipotent: return x(f.root, -f.t);
            case F::Kind::Weyl: return w(f.root, -f.t);
            case F::Kind::Torus: return h(f.root, f.t.inverse());
            case F::Kind::Scalar: return scalar(f.t.inverse());
            case F::Kind::Char: {
                std::vector<R> v;
                for (const R& c : f.chi) v.push_back(c.inverse());
                return h_char(TorusCharacter<R>{v});
            }
        }
        throw std::logic_error("unknown factor kind");
    }

    std::shared_ptr<const ChevalleyAlgebra> alg_;
    Context ctx_;
};

}  // namespace chevalley
