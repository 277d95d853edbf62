#pragma once
// Constructive generation of every matrix unit E_ij of M_n(R) from elements of
// the elementary adjoint group, using only ring scalars, sums, differences and
// products. Every unit is certified by exact comparison.

#include "chevalley/group_elements.hpp"

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace chevalley {

template <LocalRing R>
struct RecipeNode;

template <LocalRing R>
using Recipe = std::shared_ptr<const RecipeNode<R>>;

template <LocalRing R>
struct RecipeNode {
    enum class Op { Group, Identity, Unit, Scale, Add, Sub, Mul };
    Op op = Op::Identity;
    Matrix<R> leaf;      // Group
    std::string name;    // Group: word; Unit: "E[a1,-a1]"
    int row = 0, col = 0;  // Unit
    R scalar{};          // Scale
    Recipe<R> a, b;

    static Recipe<R> group(const GroupElement<R>& g, std::string text) {
        auto n = std::make_shared<RecipeNode>();
        n->op = Op::Group;
        n->leaf = g.matrix;
        n->name = text.empty() ? g.word_string() : std::move(text);
        return n;
    }
    static Recipe<R> identity() { return std::make_shared<RecipeNode>(); }
    static Recipe<R> unit(int i, int j, std::string text) {
        auto n = std::make_shared<RecipeNode>();
        n->op = Op::Unit;
        n->row = i;
        n->col = j;
        n->name = std::move(text);
        return n;
    }
    static Recipe<R> scale(const R& s, Recipe<R> x) {
        auto n = std::make_shared<RecipeNode>();
        n->op = Op::Scale;
        n->scalar = s;
        n->a = std::move(x);
        return n;
    }
    static Recipe<R> binary(Op op, Recipe<R> x, Recipe<R> y) {
        auto n = std::make_shared<RecipeNode>();
        n->op = op;
        n->a = std::move(x);
        n->b = std::move(y);
        return n;
    }

    std::string to_string() const {
        switch (op) {
            case Op::Group: return name;
            case Op::Identity: return "1";
            case Op::Unit: return name;
            case Op::Scale: return scalar.to_string() + "*(" + a->to_string() + ")";
            case Op::Add: return "(" + a->to_string() + " + " + b->to_string() + ")";
            case Op::Sub: return "(" + a->to_string() + " - " + b->to_string() + ")";
            case Op::Mul: return a->to_string() + "*" + b->to_string();
        }
        return "?";
    }
};

template <LocalRing R>
Recipe<R> operator+(Recipe<R> x, Recipe<R> y) {
    return RecipeNode<R>::binary(RecipeNode<R>::Op::Add, std::move(x), std::move(y));
}
template <LocalRing R>
Recipe<R> operator-(Recipe<R> x, Recipe<R> y) {
    return RecipeNode<R>::binary(RecipeNode<R>::Op::Sub, std::move(x), std::move(y));
}
template <LocalRing R>
Recipe<R> operator*(Recipe<R> x, Recipe<R> y) {
    return RecipeNode<R>::binary(RecipeNode<R>::Op::Mul, std::move(x), std::move(y));
}

template <LocalRing R>
struct CertifiedUnit {
    Recipe<R> recipe;
    std::string provenance;
};

template <LocalRing R>
struct SeedResult {
    Matrix<R> square;  // (x - 1)^2
    Matrix<R> unit;    // isolated E
    bool certified = false;
};

template <LocalRing R>
struct HBlockResult {
    Matrix<R> A, B, C_last, C2, C, C1;
    std::vector<Matrix<R>> chain;  // C_l, C_{l-1}, ..., C_2
    bool A_projector = false;
    bool B_matches = false;
    bool C_last_matches = false;
    bool chain_matches = false;
    bool C_matches = false;
    bool C1_matches = false;
    bool printed_sum_matches = false;      // C_1 + B = -2 E_{V2,V1}
    bool corrected_difference_matches = false;  // C_1 - B = -2 E_{V2,V1}
    Matrix<R> printed_sum;
};

template <LocalRing R>
class MatrixUnits {
public:
    using Group = ChevalleyGroup<R>;
    using Node = RecipeNode<R>;

    explicit MatrixUnits(const Group& G) : G_(G), alg_(G.algebra_data()), n_(G.dim()) {}

    Matrix<R> E(int i, int j) const { return Matrix<R>::unit(G_.context(), n_, i, j); }

    // (x_{a_1}(1) - 1)^2 has the single entry -2 at (v_{a_1}, v_{-a_1})
    SeedResult<R> seed_long() const {
        const Root& a = alg_.roots().simple(0);
        Matrix<R> d = G_.x(a, 1).matrix - Matrix<R>::identity(G_.context(), n_);
        SeedResult<R> s{d * d, E(alg_.index(a), alg_.index(-a)), false};
        s.certified = s.square == G_.context().from_int(-2) * s.unit;
        return s;
    }

    // (x_{e_i}(1) - 1)^2 for the short root e_i (0-based i); long-root units
    // subtracted leaves a multiple of E_{v_{e_i}, v_{-e_i}}.
    SeedResult<R> seed_short(int i) const {
        Root e = alg_.roots().unit(i);
        Matrix<R> d = G_.x(e, 1).matrix - Matrix<R>::identity(G_.context(), n_);
        SeedResult<R> s{d * d, E(alg_.index(e), alg_.index(-e)), false};
        Matrix<R> rest = s.square;
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                if (is_long_index(r) && is_long_index(c)) rest(r, c) = G_.context().zero();
        s.certified = rest == G_.context().from_int(-2) * s.unit;
        return s;
    }

    // The Cartan-block identities. Needs rank >= 3: at rank 2 every long root has
    // even pairings with both simple roots, so A is not the Cartan projector.
    HBlockResult<R> h_block_combination() const {
        int l = alg_.rank();
        if (l < 3) throw InvalidArgument("the Cartan-block construction needs rank >= 3");
        const auto& ctx = G_.context();
        const RootSystem& rs = alg_.roots();
        auto I = Matrix<R>::identity(ctx, n_);
        HBlockResult<R> r;
        Matrix<R> A = I;
        for (int k = 0; k < l; ++k) A = A * (G_.h(rs.simple(k), -1).matrix + I);
        R inv2 = ctx.from_int(2).inverse();
        A = power(inv2, l) * A;
        r.A = A;
        Matrix<R> P(ctx, n_, n_);
        for (int j = 0; j < l; ++j) P(alg_.h_index(j), alg_.h_index(j)) = ctx.one();
        r.A_projector = A == P && A * A == A;

        std::vector<Matrix<R>> w;
        for (int k = 0; k < l; ++k) w.push_back(G_.w(rs.simple(k), 1).matrix);
        auto V = [&](int j) { return alg_.h_index(j - 1); };
        auto e = [&](int i, int j) { return E(V(i), V(j)); };
        auto c = [&](long long k) { return ctx.from_int(k); };

        Matrix<R> B = A;
        for (int k = 0; k < l; ++k) B = B * (w[k] - A);
        for (int k = l - 2; k >= 0; --k) B = B * (w[k] - A);
        B = B * A;
        r.B = B;
        r.B_matches = B == c(-4) * e(1, 1) + c(2) * e(1, 2);

        Matrix<R> Cl = A;
        for (int k = 0; k < l; ++k) Cl = Cl * (w[k] - A);
        Cl = Cl * A;
        r.C_last = Cl;
        r.C_last_matches = Cl == c(2) * e(1, l - 1) - c(2) * e(1, l);

        // C_{k} = w_k C_{k+1} w_k down to k = 2
        r.chain_matches = true;
        Matrix<R> Ck = Cl;
        r.chain.push_back(Ck);
        for (int k = l - 1; k >= 2; --k) {
            Ck = w[k - 1] * Ck * w[k - 1];
            r.chain.push_back(Ck);
            if (k > 2) r.chain_matches = r.chain_matches && Ck == c(2) * e(1, k - 1) - c(2) * e(1, k);
        }
        r.C2 = Ck;
        r.chain_matches = r.chain_matches && Ck == c(2) * e(1, 1) + c(2) * e(2, 1) - c(2) * e(1, 2) - c(2) * e(2, 2);
        r.C = B + r.C2;
        r.C_matches = r.C == c(-2) * e(1, 1) + c(2) * e(2, 1) - c(2) * e(2, 2);
        r.C1 = w[0] * r.C * w[0];
        r.C1_matches = r.C1 == c(-4) * e(1, 1) + c(2) * e(1, 2) - c(2) * e(2, 1);
        r.printed_sum = r.C1 + B;
        r.printed_sum_matches = r.printed_sum == c(-2) * e(2, 1);
        r.corrected_difference_matches = r.C1 - B == c(-2) * e(2, 1);
        return r;
    }

    // Recipes for all n^2 units, each certified on creation.
    const std::vector<std::optional<CertifiedUnit<R>>>& generate_all() {
        if (!table_.empty()) return table_;
        table_.assign(static_cast<std::size_t>(n_) * n_, std::nullopt);
        const auto& ctx = G_.context();
        const RootSystem& rs = alg_.roots();
        auto I = Node::identity();
        auto one_minus = [&](const GroupElement<R>& g) { return Node::group(g, "") - I; };

        // long seed
        const Root& a1 = rs.simple(0);
        int p = alg_.index(a1), q = alg_.index(-a1);
        {
            auto sq = one_minus(G_.x(a1, 1));
            auto rec = Node::scale(ctx.from_int(-2).inverse(), sq * sq);
            certify(p, q, rec, "seed: (x_a1(1)-1)^2 / -2");
        }
        transport(p, q, /*long*/ true);

        // short seed: subtract the long-index units it contains
        const Root& s0 = rs.simple(rs.rank() - 1);
        int sp = alg_.index(s0), sq_ = alg_.index(-s0);
        {
            auto d = one_minus(G_.x(s0, 1));
            Recipe<R> rec = d * d;
            Matrix<R> val = eval(rec);
            for (int r = 0; r < n_; ++r)
                for (int c = 0; c < n_; ++c) {
                    if (val(r, c).is_zero() || (r == sp && c == sq_)) continue;
                    if (!(is_long_index(r) && is_long_index(c)))
                        throw std::logic_error("short seed has an unexpected entry at " + alg_.label(r) + "," + alg_.label(c));
                    rec = rec - Node::scale(val(r, c), ref(r, c));
                }
            rec = Node::scale(val(sp, sq_).inverse(), rec);
            certify(sp, sq_, rec, "seed: (x_" + s0.to_string() + "(1)-1)^2 minus long units");
        }
        transport(sp, sq_, /*long*/ false);

        // mixed root indices through a unit entry of x_{a_l}(1)
        bridge();

        // Cartan rows: column -a_j of x_{a_j}(1) - 1 minus its root part
        for (int j = 0; j < rs.rank(); ++j) {
            const Root& aj = rs.simple(j);
            int neg = alg_.index(-aj), pos = alg_.index(aj), h = alg_.h_index(j);
            auto M = G_.x(aj, 1).matrix;
            auto rec = (one_minus(G_.x(aj, 1)) * ref(neg, neg)) - Node::scale(M(pos, neg), ref(pos, neg));
            rec = Node::scale(M(h, neg).inverse(), rec);
            certify(h, neg, rec, "Cartan row from x_a" + std::to_string(j + 1) + "(1) - 1");
            for (int b = 0; b < 2 * alg_.num_positive(); ++b)
                if (b != neg) certify(h, b, ref(h, neg) * ref(neg, b), "closure E_ik E_kj");
        }

        // Cartan columns: rows a_j of x_{a_j}(1) - 1 give K E_{a,V}, K invertible
        {
            int l = rs.rank();
            int anchor = p;
            IntMatrix K(l, l);
            std::vector<Recipe<R>> rows;
            for (int j = 0; j < l; ++j) {
                const Root& aj = rs.simple(j);
                int pos = alg_.index(aj), neg = alg_.index(-aj);
                auto M = G_.x(aj, 1).matrix;
                for (int k = 0; k < l; ++k) K(j, k) = alg_.ad(aj)(pos, alg_.h_index(k));
                rows.push_back((ref(anchor, pos) * one_minus(G_.x(aj, 1))) - Node::scale(M(pos, neg), ref(anchor, neg)));
            }
            Matrix<R> Kinv = Matrix<R>::from_int(ctx, K).inverse();
            for (int k = 0; k < l; ++k) {
                Recipe<R> rec;
                for (int j = 0; j < l; ++j) {
                    if (Kinv(k, j).is_zero()) continue;
                    auto term = Node::scale(Kinv(k, j), rows[j]);
                    rec = rec ? rec + term : term;
                }
                certify(anchor, alg_.h_index(k), rec, "Cartan column via inverse Cartan pairing matrix");
            }
            for (int k = 0; k < l; ++k) {
                int h = alg_.h_index(k);
                for (int b = 0; b < n_; ++b)
                    if (b != anchor && !table_[idx(b, h)])
                        certify(b, h, ref(b, anchor) * ref(anchor, h), "closure E_ik E_kj");
            }
        }
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!table_[idx(i, j)]) throw std::logic_error("unit " + alg_.label(i) + "," + alg_.label(j) + " not generated");
        return table_;
    }

    const CertifiedUnit<R>& unit(int i, int j) {
        generate_all();
        return *table_[idx(i, j)];
    }
    int certified_count() const {
        int c = 0;
        for (const auto& e : table_) c += e.has_value();
        return c;
    }

    Matrix<R> eval(const Recipe<R>& r) const {
        switch (r->op) {
            case Node::Op::Group: return r->leaf;
            case Node::Op::Identity: return Matrix<R>::identity(G_.context(), n_);
            case Node::Op::Unit: return values_.at(idx(r->row, r->col));
            case Node::Op::Scale: return r->scalar * eval(r->a);
            case Node::Op::Add: return eval(r->a) + eval(r->b);
            case Node::Op::Sub: return eval(r->a) - eval(r->b);
            case Node::Op::Mul: return eval(r->a) * eval(r->b);
        }
        throw std::logic_error("bad recipe node");
    }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    bool is_long_index(int k) const { return !alg_.is_h_index(k) && alg_.root_at(k).is_long(); }
    bool is_short_index(int k) const { return !alg_.is_h_index(k) && alg_.root_at(k).is_short(); }

    Recipe<R> ref(int i, int j) const {
        if (!table_[idx(i, j)]) throw std::logic_error("reference to an ungenerated unit");
        return Node::unit(i, j, "E[" + alg_.label(i) + "," + alg_.label(j) + "]");
    }

    void certify(int i, int j, Recipe<R> rec, std::string provenance) {
        if (table_[idx(i, j)]) return;
        Matrix<R> v = eval(rec);
        if (!(v == E(i, j)))
            throw std::logic_error("certification failed for E[" + alg_.label(i) + "," + alg_.label(j) + "]");
        values_.emplace(idx(i, j), std::move(v));
        table_[idx(i, j)] = CertifiedUnit<R>{std::move(rec), std::move(provenance)};
    }

    // Products of simple Weyl elements reaching every root of the orbit of the
    // start index, found by breadth-first search on basis lines.
    std::map<int, std::vector<int>> weyl_paths(int start) const {
        std::map<int, std::vector<int>> path{{start, {}}};
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int k = queue.front();
            queue.pop_front();
            for (int i = 0; i < alg_.rank(); ++i) {
                int img = alg_.index(alg_.roots().reflect(alg_.roots().simple(i), alg_.root_at(k)));
                if (path.count(img)) continue;
                auto pth = path[k];
                pth.push_back(i);
                path[img] = pth;
                queue.push_back(img);
            }
        }
        return path;
    }

    GroupElement<R> weyl_word(const std::vector<int>& word, bool left) const {
        GroupElement<R> g = G_.identity();
        for (int i : word) {
            auto w = G_.w(alg_.roots().simple(i), 1);
            g = left ? G_.mul(w, g) : G_.mul(g, w);
        }
        return g;
    }

    // All E_{a,b} with a, b in the Weyl orbit of the seed's row and column.
    void transport(int p, int q, bool long_roots) {
        auto rows = weyl_paths(p), cols = weyl_paths(q);
        const auto& ctx = G_.context();
        for (const auto& [a, wa] : rows)
            for (const auto& [b, wb] : cols) {
                if (table_[idx(a, b)]) continue;
                Recipe<R> rec = ref(p, q);
                if (!wa.empty()) rec = Node::group(weyl_word(wa, true), "W" + word_name(wa, true)) * rec;
                if (!wb.empty()) rec = rec * Node::group(weyl_word(wb, false), "W" + word_name(wb, false));
                R sign = eval(rec)(a, b);
                if (!(sign == ctx.one())) rec = Node::scale(sign.inverse(), rec);
                certify(a, b, rec, std::string("Weyl transport of the ") + (long_roots ? "long" : "short") + " seed");
            }
    }

    std::string word_name(const std::vector<int>& word, bool left) const {
        std::string s = "[";
        if (left)
            for (auto it = word.rbegin(); it != word.rend(); ++it) s += "w" + std::to_string(*it + 1);
        else
            for (int i : word) s += "w" + std::to_string(i + 1);
        return s + "]";
    }

    void bridge() {
        const Root& s0 = alg_.roots().simple(alg_.rank() - 1);
        auto X = G_.x(s0, 1);
        int lk = -1, ll = -1, sk = -1, sl = -1;  // long<-short and short<-long unit entries
        for (int r = 0; r < 2 * alg_.num_positive(); ++r)
            for (int c = 0; c < 2 * alg_.num_positive(); ++c) {
                if (!X.matrix(r, c).is_unit()) continue;
                if (lk < 0 && is_long_index(r) && is_short_index(c)) lk = r, ll = c;
                if (sk < 0 && is_short_index(r) && is_long_index(c)) sk = r, sl = c;
            }
        if (lk < 0 || sk < 0) throw std::logic_error("no bridge entry between root lengths");
        auto xr = Node::group(X, "");
        for (int a = 0; a < 2 * alg_.num_positive(); ++a)
            for (int b = 0; b < 2 * alg_.num_positive(); ++b) {
                if (table_[idx(a, b)]) continue;
                auto [k, l] = is_long_index(a) ? std::pair{lk, ll} : std::pair{sk, sl};
                auto rec = Node::scale(X.matrix(k, l).inverse(), ref(a, k) * xr * ref(l, b));
                certify(a, b, rec, "bridge through x_" + s0.to_string() + "(1) entry " + alg_.label(k) + "," + alg_.label(l));
            }
    }

    const Group& G_;
    const ChevalleyAlgebra& alg_;
    int n_;
    std::vector<std::optional<CertifiedUnit<R>>> table_;
    std::map<std::size_t, Matrix<R>> values_;
};

}  // namespace chevalley
