#pragma once
// Chevalley basis of the simple Lie algebra of type B_l and the integral
// matrices of its adjoint representation.
//
// Basis order of the adjoint module (n = l + 2m):
//   v_{a_1}, v_{-a_1}, ..., v_{a_m}, v_{-a_m}, V_1, ..., V_l
// with v_b = (b,b) x_b (sign-calibrated) and V_j = -(a_j,a_j) h_j. This lattice
// holds the divided powers of every ad x_a and reproduces the reference B_3
// displays; see docs/basis.md.

#include "chevalley/matrix.hpp"
#include "chevalley/root_system.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace chevalley {

// Structure constants N(a,b) of [x_a, x_b] = N(a,b) x_{a+b}, fixed by Carter's
// algorithm: extraspecial pairs (minimal first root in the positive order) get
// N = +(p+1), everything else follows.
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs) : rs_(rs) {
        const auto& pos = rs.positive();
        for (const Root& xi : pos) {
            std::vector<std::pair<Root, Root>> pairs;
            for (const Root& a : pos)
                for (const Root& b : pos)
                    if (rs.positive_index(a) < rs.positive_index(b) && a + b == xi) pairs.emplace_back(a, b);
            if (pairs.empty()) continue;
            std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
                return rs.positive_index(x.first) < rs.positive_index(y.first);
            });
            const auto& [a, b] = pairs.front();
            int p = 0;
            while (rs.is_root(b - (p + 1) * a)) ++p;
            table_[{a, b}] = p + 1;
            for (std::size_t k = 1; k < pairs.size(); ++k) {
                const auto& [g, d] = pairs[k];
                long long n1 = 0, d1 = 1, n2 = 0, d2 = 1;
                if (rs.is_root(b - g)) {
                    n1 = static_cast<long long>(N(b, -g)) * N(a, -d);
                    d1 = (b - g).norm2();
                }
                if (rs.is_root(a - g)) {
                    n2 = static_cast<long long>(N(-g, a)) * N(b, -d);
                    d2 = (a - g).norm2();
                }
                long long num = xi.norm2() * (n1 * d2 + n2 * d1);
                long long den = static_cast<long long>(table_.at({a, b})) * d1 * d2;
                if (num % den != 0) throw std::logic_error("non-integral structure constant");
                table_[{g, d}] = static_cast<int>(num / den);
            }
        }
    }

    int N(const Root& a, const Root& b) const {
        Root c = a + b;
        if (c.is_zero() || !rs_.is_root(c)) return 0;
        bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
        if (pa && pb) {
            if (rs_.positive_index(a) > rs_.positive_index(b)) return -N(b, a);
            return table_.at({a, b});
        }
        if (!pa && !pb) return -N(-a, -b);
        // a + b + g = 0: N(a,b)/(g,g) = N(b,g)/(a,a) = N(g,a)/(b,b)
        Root g = -c;
        bool pg = rs_.is_positive(g);
        long long num, den;
        if (pg == pa) {
            num = static_cast<long long>(g.norm2()) * N(g, a);
            den = b.norm2();
        } else {
            num = static_cast<long long>(g.norm2()) * N(b, g);
            den = a.norm2();
        }
        if (num % den != 0) throw std::logic_error("non-integral structure constant");
        return static_cast<int>(num / den);
    }

private:
    const RootSystem& rs_;
    std::map<std::pair<Root, Root>, int> table_;
};

class ChevalleyAlgebra {
public:
    ChevalleyAlgebra(const ChevalleyAlgebra&) = delete;
    ChevalleyAlgebra& operator=(const ChevalleyAlgebra&) = delete;

    explicit ChevalleyAlgebra(int rank) : rs_(rank), sc_(rs_) {
        m_ = rs_.num_positive();
        n_ = rs_.dim();
        eps_.assign(m_, 1);
        if (rank == 3) eps_ = {1, 1, 1, 1, -1, -1, 1, 1, -1};
        scale_.resize(n_);
        for (int k = 0; k < m_; ++k) scale_[2 * k] = scale_[2 * k + 1] = rs_.positive(k).norm2();
        for (int j = 0; j < rank; ++j) scale_[2 * m_ + j] = -rs_.simple(j).norm2();

        for (const Root& r : rs_.roots()) {
            IntMatrix lie = lie_root_ad(r);
            IntMatrix mod(n_, n_);
            int er = sign(r);
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) {
                    long long v = lie(i, j);
                    if (v == 0) continue;
                    long long num = v * er * basis_sign(i) * basis_sign(j) * scale_[j];
                    if (num % scale_[i] != 0) throw std::logic_error("module basis is not integral");
                    mod(i, j) = num / scale_[i];
                }
            IntMatrix sq = mod * mod;
            IntMatrix half(n_, n_);
            for (std::size_t t = 0; t < sq.a.size(); ++t) {
                if (sq.a[t] % 2 != 0) throw std::logic_error("divided square is not integral");
                half.a[t] = sq.a[t] / 2;
            }
            int idx = index(r);
            ad_[idx] = std::move(mod);
            half_sq_[idx] = std::move(half);
        }
    }

    const RootSystem& roots() const { return rs_; }
    const StructureConstants& constants() const { return sc_; }
    int rank() const { return rs_.rank(); }
    int dim() const { return n_; }
    int num_positive() const { return m_; }

    int index(const Root& r) const {
        int k = rs_.positive_index(r);
        return rs_.is_positive(r) ? 2 * k : 2 * k + 1;
    }
    int h_index(int j) const { return 2 * m_ + j; }
    bool is_h_index(int idx) const { return idx >= 2 * m_; }
    Root root_at(int idx) const {
        if (is_h_index(idx)) throw InvalidArgument("basis index belongs to the Cartan block");
        const Root& r = rs_.positive(idx / 2);
        return idx % 2 == 0 ? r : -r;
    }
    // "a4", "-a4", "h2"
    std::string label(int idx) const {
        if (is_h_index(idx)) return "h" + std::to_string(idx - 2 * m_ + 1);
        return (idx % 2 == 0 ? "a" : "-a") + std::to_string(idx / 2 + 1);
    }
    int parse_label(const std::string& s) const {
        for (int i = 0; i < n_; ++i)
            if (label(i) == s) return i;
        throw InvalidArgument("unknown basis label " + s);
    }

    // calibration sign shared by v_a and v_{-a}
    int sign(const Root& r) const { return eps_[rs_.positive_index(r)]; }
    const std::vector<int>& calibration() const { return eps_; }
    long long module_scale(int idx) const { return scale_[idx]; }

    const IntMatrix& ad(const Root& r) const { return ad_.at(index(r)); }
    // (ad x_r)^2 / 2
    const IntMatrix& ad_half_square(const Root& r) const { return half_sq_.at(index(r)); }

    IntMatrix coefficient_diagonal(int i) const {
        if (i < 0 || i >= rank()) throw InvalidArgument("simple root index out of range");
        IntMatrix t(n_, n_);
        for (int k = 0; k < m_; ++k) {
            int c = rs_.coefficients(rs_.positive(k))[i];
            t(2 * k, 2 * k) = c;
            t(2 * k + 1, 2 * k + 1) = -c;
        }
        return t;
    }

    // Coroot coefficients: a^v = sum_j c_j a_j^v.
    std::vector<int> coroot_coefficients(const Root& a) const {
        auto c = rs_.coefficients(a);
        std::vector<int> out(rank());
        for (int j = 0; j < rank(); ++j) out[j] = c[j] * rs_.simple(j).norm2() / a.norm2();
        return out;
    }

    // ad of a Lie basis element (x_b or the coroot h_j) in the uncalibrated
    // Lie basis {x_b, h_j}, same index layout as the module basis.
    IntMatrix lie_ad(int idx) const {
        if (!is_h_index(idx)) return lie_root_ad(root_at(idx));
        int j = idx - 2 * m_;
        IntMatrix h(n_, n_);
        for (int k = 0; k < 2 * m_; ++k) h(k, k) = RootSystem::pairing(root_at(k), rs_.simple(j));
        return h;
    }
    // [b_i, b_j] in the Lie basis as a coefficient vector
    std::vector<long long> lie_bracket(int i, int j) const {
        IntMatrix a = lie_ad(i);
        std::vector<long long> out(n_);
        for (int r = 0; r < n_; ++r) out[r] = a(r, j);
        return out;
    }

private:
    int basis_sign(int idx) const { return is_h_index(idx) ? 1 : sign(root_at(idx)); }

    IntMatrix lie_root_ad(const Root& a) const {
        IntMatrix M(n_, n_);
        for (const Root& b : rs_.roots()) {
            if (b == -a) {
                auto cc = coroot_coefficients(a);
                for (int j = 0; j < rank(); ++j) M(h_index(j), index(b)) += cc[j];
            } else if (rs_.is_root(a + b)) {
                M(index(a + b), index(b)) += sc_.N(a, b);
            }
        }
        for (int j = 0; j < rank(); ++j) M(index(a), h_index(j)) -= RootSystem::pairing(a, rs_.simple(j));
        return M;
    }

    RootSystem rs_;
    StructureConstants sc_;
    int m_ = 0, n_ = 0;
    std::vector<int> eps_;
    std::vector<long long> scale_;
    std::map<int, IntMatrix> ad_, half_sq_;
};

// Cached algebra per rank; construction is pure so sharing is safe.
inline std::shared_ptr<const ChevalleyAlgebra> algebra(int rank) {
    static std::map<int, std::shared_ptr<const ChevalleyAlgebra>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(rank);
    if (it != cache.end()) return it->second;
    auto a = std::make_shared<const ChevalleyAlgebra>(rank);
    cache.emplace(rank, a);
    return a;
}

template <LocalRing R>
Matrix<R> ad_matrix(const ChevalleyAlgebra& alg, const typename R::Context& ctx, const Root& a) {
    alg.roots().require_root(a);
    return Matrix<R>::from_int(ctx, alg.ad(a));
}

}  // namespace chevalley
