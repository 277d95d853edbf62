#pragma once
// Root system of type B_l in the orthonormal basis e_1..e_l.

#include "chevalley/ring_core.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chevalley {

struct Root {
    std::vector<int> c;

    Root() = default;
    explicit Root(std::vector<int> coords) : c(std::move(coords)) {}

    std::size_t rank() const { return c.size(); }
    int norm2() const {
        int s = 0;
        for (int x : c) s += x * x;
        return s;
    }
    bool is_long() const { return norm2() == 2; }
    bool is_short() const { return norm2() == 1; }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
    }

    friend Root operator+(const Root& a, const Root& b) {
        Root r(a.c);
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend Root operator-(const Root& a, const Root& b) {
        Root r(a.c);
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    Root operator-() const {
        Root r(c);
        for (int& x : r.c) x = -x;
        return r;
    }
    friend Root operator*(int k, const Root& a) {
        Root r(a.c);
        for (int& x : r.c) x *= k;
        return r;
    }
    friend bool operator==(const Root& a, const Root& b) { return a.c == b.c; }
    friend bool operator<(const Root& a, const Root& b) { return a.c < b.c; }

    // "e1-e2", "e2", "-e1-e3", "e1+e2"
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (c[i] < 0) s += "-";
            else if (!s.empty()) s += "+";
            if (c[i] != 1 && c[i] != -1) s += std::to_string(c[i] < 0 ? -c[i] : c[i]);
            s += "e" + std::to_string(i + 1);
        }
        return s.empty() ? "0" : s;
    }
};

inline int dot(const Root& a, const Root& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.c.size(); ++i) s += a.c[i] * b.c[i];
    return s;
}

// Parses "e1-e2", "-e3", "e1+e2" for the given rank.
inline Root parse_root(const std::string& text, int rank) {
    std::vector<int> v(rank, 0);
    std::size_t i = 0;
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        }
        if (i >= text.size() || text[i] != 'e') throw InvalidArgument("bad root literal: " + text);
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw InvalidArgument("bad root literal: " + text);
        int idx = std::stoi(text.substr(i, j - i));
        if (idx < 1 || idx > rank) throw InvalidArgument("index out of range in root " + text);
        v[idx - 1] += sign;
        any = true;
        i = j;
    }
    if (!any) throw InvalidArgument("empty root literal");
    return Root(std::move(v));
}

class RootSystem {
public:
    explicit RootSystem(int rank) : l_(rank) {
        if (rank < 2) throw InvalidArgument("rank must be at least 2");
        std::vector<Root> pos;
        for (int i = 0; i < l_; ++i) {
            for (int j = i + 1; j < l_; ++j) {
                pos.push_back(unit(i) - unit(j));
                pos.push_back(unit(i) + unit(j));
            }
            pos.push_back(unit(i));
        }
        std::sort(pos.begin(), pos.end(), [this](const Root& a, const Root& b) {
            int ha = height(a), hb = height(b);
            if (ha != hb) return ha < hb;
            return b.c < a.c;  // descending lexicographic
        });
        positive_ = std::move(pos);
        for (std::size_t k = 0; k < positive_.size(); ++k) pos_index_[positive_[k]] = static_cast<int>(k);
    }

    int rank() const { return l_; }
    int num_positive() const { return static_cast<int>(positive_.size()); }
    int num_roots() const { return 2 * num_positive(); }
    // dimension of the adjoint module
    int dim() const { return l_ + 2 * num_positive(); }

    const std::vector<Root>& positive() const { return positive_; }
    const Root& positive(int k) const { return positive_.at(k); }
    // simple root alpha_{i+1}
    const Root& simple(int i) const { return positive_.at(i); }

    // All roots in basis order: alpha_1, -alpha_1, alpha_2, -alpha_2, ...
    std::vector<Root> roots() const {
        std::vector<Root> out;
        for (const Root& r : positive_) {
            out.push_back(r);
            out.push_back(-r);
        }
        return out;
    }

    bool is_root(const Root& v) const {
        if (static_cast<int>(v.rank()) != l_) return false;
        return pos_index_.count(v) || pos_index_.count(-v);
    }
    bool is_positive(const Root& v) const { return pos_index_.count(v) != 0; }
    // index into positive() of +-v
    int positive_index(const Root& v) const {
        auto it = pos_index_.find(v);
        if (it != pos_index_.end()) return it->second;
        it = pos_index_.find(-v);
        if (it != pos_index_.end()) return it->second;
        throw InvalidArgument(v.to_string() + " is not a root");
    }

    // Coefficients in the simple roots: c_i = v_1 + ... + v_i.
    std::vector<int> coefficients(const Root& v) const {
        std::vector<int> out(l_);
        int s = 0;
        for (int i = 0; i < l_; ++i) {
            s += v.c[i];
            out[i] = s;
        }
        return out;
    }
    int height(const Root& v) const {
        int h = 0;
        for (int x : coefficients(v)) h += x;
        return h;
    }

    static int pairing(const Root& beta, const Root& alpha) { return 2 * dot(beta, alpha) / alpha.norm2(); }

    Root reflect(const Root& alpha, const Root& beta) const {
        require_root(alpha);
        return beta - pairing(beta, alpha) * alpha;
    }

    std::pair<int, int> root_string(const Root& alpha, const Root& beta) const {
        require_root(alpha);
        require_root(beta);
        if (alpha == beta || alpha == -beta) throw InvalidArgument("root_string needs beta != +-alpha");
        int p = 0, q = 0;
        while (is_root(beta - (p + 1) * alpha)) ++p;
        while (is_root(beta + (q + 1) * alpha)) ++q;
        return {p, q};
    }

    // gamma_1 = e1+e2 (highest root) down to alpha_2, consecutive differences simple.
    std::vector<Root> gamma_sequence() const {
        std::vector<Root> g;
        if (l_ == 2) {
            g = {unit(0) + unit(1), unit(0), unit(1)};
            return g;
        }
        for (int j = 1; j < l_; ++j) g.push_back(unit(0) + unit(j));
        g.push_back(unit(1) + unit(l_ - 1));
        g.push_back(unit(1));
        for (int j = l_ - 1; j >= 2; --j) g.push_back(unit(1) - unit(j));
        return g;
    }

    Root unit(int i) const {
        std::vector<int> v(l_, 0);
        v[i] = 1;
        return Root(std::move(v));
    }

    void require_root(const Root& v) const {
        if (!is_root(v)) throw InvalidArgument(v.to_string() + " is not a root of B" + std::to_string(l_));
    }

private:
    int l_;
    std::vector<Root> positive_;
    std::map<Root, int> pos_index_;
};

}  // namespace chevalley
