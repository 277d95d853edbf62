#pragma once
// JSON forms used by the command-line tool: ring descriptors, matrices and
// radical coefficient tuples.
//
//   ring:   {"kind":"gfp","p":7} {"kind":"zmod","p":3,"k":2} {"kind":"zloc","p":5}
//           {"kind":"dual","p":7} {"kind":"sqrt-ext","base":<ring>,"r":"2"}
//   matrix: {"ring":<ring>,"rank":l,"rows":[["1","0",...],...]}
//   coeffs: {"lambda":"1","s":[...],"t":[...],"u":[...]}

#include "chevalley/bruhat_radical.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace chevalley {

using json = nlohmann::json;

namespace detail {

inline std::uint64_t json_prime(const json& d) {
    if (!d.contains("p") || !d.at("p").is_number_integer()) throw InvalidArgument("ring descriptor needs an integer \"p\"");
    long long p = d.at("p").get<long long>();
    if (p <= 0) throw InvalidArgument("ring descriptor has a non-positive p");
    return static_cast<std::uint64_t>(p);
}

inline std::string literal(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InvalidArgument("ring element literal must be a string or integer: " + v.dump());
}

template <class F>
auto with_base_ring(const json& d, F&& f) {
    if (!d.is_object() || !d.contains("kind")) throw InvalidArgument("ring descriptor needs a \"kind\"");
    std::string kind = d.at("kind").get<std::string>();
    if (kind == "gfp") return f(ZMod::Context(json_prime(d), 1));
    if (kind == "zmod") return f(ZMod::Context(json_prime(d), d.value("k", 1)));
    if (kind == "zloc") return f(ZLoc::Context(json_prime(d)));
    if (kind == "dual") return f(Dual::Context(json_prime(d)));
    if (kind == "sqrt-ext") throw InvalidArgument("quadratic extensions nest one level only");
    throw InvalidArgument("unknown ring kind \"" + kind + "\"");
}

}  // namespace detail

// Calls f with the concrete ring context described by d.
template <class F>
auto with_ring(const json& d, F&& f) {
    if (d.is_object() && d.value("kind", "") == "sqrt-ext") {
        if (!d.contains("base") || !d.contains("r")) throw InvalidArgument("sqrt-ext needs \"base\" and \"r\"");
        return detail::with_base_ring(d.at("base"), [&](const auto& base) {
            auto r = base.parse(detail::literal(d.at("r")));
            return f(adjoin_sqrt<std::decay_t<decltype(r)>>(base, r));
        });
    }
    return detail::with_base_ring(d, f);
}

inline json ring_descriptor(const ZMod::Context& c) {
    if (c.k == 1) return {{"kind", "gfp"}, {"p", c.p}};
    return {{"kind", "zmod"}, {"p", c.p}, {"k", c.k}};
}
inline json ring_descriptor(const ZLoc::Context& c) { return {{"kind", "zloc"}, {"p", c.p}}; }
inline json ring_descriptor(const Dual::Context& c) { return {{"kind", "dual"}, {"p", c.field.p}}; }
template <class C>
    requires requires(const C& c) { c.base; c.r; }
json ring_descriptor(const C& c) {
    return {{"kind", "sqrt-ext"}, {"base", ring_descriptor(c.base)}, {"r", c.r.to_string()}};
}

template <LocalRing R>
json matrix_to_json(const Matrix<R>& m, int rank) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return {{"ring", ring_descriptor(m.context())}, {"rank", rank}, {"rows", std::move(rows)}};
}

template <LocalRing R>
Matrix<R> matrix_from_json(const json& j, const typename R::Context& ctx, int n) {
    if (!j.contains("rows") || !j.at("rows").is_array()) throw InvalidArgument("matrix JSON needs \"rows\"");
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n) throw InvalidArgument("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    Matrix<R> m(ctx, n, n);
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) throw InvalidArgument("matrix row " + std::to_string(i) + " has the wrong length");
        for (int k = 0; k < n; ++k) m(i, k) = ctx.parse(detail::literal(rows[i][k]));
    }
    return m;
}

template <LocalRing R>
json coefficients_to_json(const RadicalCoefficients<R>& c) {
    auto vec = [](const std::vector<R>& v) {
        json a = json::array();
        for (const R& x : v) a.push_back(x.to_string());
        return a;
    };
    return {{"lambda", c.lambda.to_string()}, {"s", vec(c.s)}, {"t", vec(c.t)}, {"u", vec(c.u)}};
}

template <LocalRing R>
RadicalCoefficients<R> coefficients_from_json(const json& j, const typename R::Context& ctx) {
    for (const char* key : {"lambda", "s", "t", "u"})
        if (!j.contains(key)) throw InvalidArgument(std::string("coefficient JSON needs \"") + key + "\"");
    auto vec = [&](const json& a) {
        if (!a.is_array()) throw InvalidArgument("coefficient lists must be arrays");
        std::vector<R> v;
        for (const auto& x : a) v.push_back(ctx.parse(detail::literal(x)));
        return v;
    };
    return {ctx.parse(detail::literal(j.at("lambda"))), vec(j.at("s")), vec(j.at("t")), vec(j.at("u"))};
}

}  // namespace chevalley
