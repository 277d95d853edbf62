#pragma once
// Exact arithmetic for the commutative local rings used throughout the library.
//
// Every value carries its ring parameters inline, so values are self-describing
// and freely copyable across threads. Mixing values from different rings throws
// ContextMismatch.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

namespace chevalley {

struct NonUnit : std::domain_error {
    using std::domain_error::domain_error;
};
struct ContextMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotRadicalCongruent : std::domain_error {
    using std::domain_error::domain_error;
};
struct UnsupportedRing : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {

inline bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::string strip_parens(std::string s) {
    s = trim(s);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0 && i + 1 < s.size()) {
                wraps = false;
                break;
            }
        }
        if (!wraps) break;
        s = trim(std::string_view(s).substr(1, s.size() - 2));
    }
    return s;
}

// Splits "a+b*<tag>" (also "a-b*<tag>", "b*<tag>", "a") into the two coordinate
// literals. Operators inside parentheses are ignored.
inline std::pair<std::string, std::string> split_pair(std::string_view text, std::string_view tag) {
    std::string s = strip_parens(std::string(text));
    std::string suffix = "*" + std::string(tag);
    if (s.size() < suffix.size() || s.compare(s.size() - suffix.size(), suffix.size(), suffix) != 0) {
        if (s == tag) return {"0", "1"};
        return {s, "0"};
    }
    std::string body = s.substr(0, s.size() - suffix.size());
    int depth = 0;
    std::size_t cut = std::string::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && i > 0 && (c == '+' || c == '-')) {
            char prev = body[i - 1];
            if (prev != '+' && prev != '-' && prev != '*' && prev != '/' && prev != '(') cut = i;
        }
    }
    if (cut == std::string::npos) return {"0", strip_parens(body)};
    std::string a = body.substr(0, cut);
    std::string b = body[cut] == '-' ? "-" + strip_parens(body.substr(cut + 1)) : body.substr(cut + 1);
    return {strip_parens(a), strip_parens(b)};
}

inline std::string wrap(const std::string& s) {
    bool plain = s.find_first_of("+*") == std::string::npos &&
                 s.find('-', 1) == std::string::npos;
    return plain ? s : "(" + s + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Z / p^k Z (k = 1 gives the prime field GF(p)).

class ZMod {
public:
    struct Context {
        std::uint64_t p = 3;
        int k = 1;
        std::uint64_t modulus = 3;

        Context() = default;
        Context(std::uint64_t prime, int exponent) : p(prime), k(exponent) {
            if (!detail::is_odd_prime(prime)) throw InvalidArgument("p must be an odd prime");
            if (exponent < 1) throw InvalidArgument("k must be at least 1");
            modulus = 1;
            for (int i = 0; i < exponent; ++i) {
                if (modulus > (std::uint64_t{1} << 62) / prime) throw InvalidArgument("p^k too large");
                modulus *= prime;
            }
        }

        ZMod zero() const { return ZMod(*this, 0); }
        ZMod one() const { return ZMod(*this, 1 % modulus); }
        ZMod from_int(long long n) const {
            long long m = static_cast<long long>(modulus);
            long long r = n % m;
            if (r < 0) r += m;
            return ZMod(*this, static_cast<std::uint64_t>(r));
        }
        ZMod parse(std::string_view text) const {
            std::string s = detail::strip_parens(std::string(text));
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(s, &used);
            } catch (const std::exception&) {
                throw InvalidArgument("bad integer literal: " + s);
            }
            if (used != s.size()) throw InvalidArgument("bad integer literal: " + s);
            return from_int(v);
        }
        std::optional<int> nilpotency() const { return k; }
        bool is_field() const { return k == 1; }
        Context residue_context() const { return Context(p, 1); }
        std::uint64_t residue_characteristic() const { return p; }
        std::string name() const {
            return k == 1 ? "GF(" + std::to_string(p) + ")" : "Z/" + std::to_string(modulus);
        }
        ZMod random(std::mt19937_64& rng) const {
            return ZMod(*this, std::uniform_int_distribution<std::uint64_t>(0, modulus - 1)(rng));
        }
        ZMod random_radical(std::mt19937_64& rng) const {
            std::uint64_t q = modulus / p;
            return ZMod(*this, p * std::uniform_int_distribution<std::uint64_t>(0, q - 1)(rng));
        }
        friend bool operator==(const Context& a, const Context& b) { return a.p == b.p && a.k == b.k; }
    };
    using Residue = ZMod;

    ZMod() = default;
    ZMod(const Context& c, std::uint64_t v) : ctx_(c), v_(v % c.modulus) {}

    const Context& context() const { return ctx_; }
    std::uint64_t value() const { return v_; }

    friend ZMod operator+(const ZMod& a, const ZMod& b) {
        a.check(b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.ctx_.modulus) s -= a.ctx_.modulus;
        return ZMod(a.ctx_, s, raw_tag{});
    }
    friend ZMod operator-(const ZMod& a, const ZMod& b) {
        a.check(b);
        std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.ctx_.modulus - b.v_;
        return ZMod(a.ctx_, s, raw_tag{});
    }
    friend ZMod operator*(const ZMod& a, const ZMod& b) {
        a.check(b);
        unsigned __int128 m = static_cast<unsigned __int128>(a.v_) * b.v_;
        return ZMod(a.ctx_, static_cast<std::uint64_t>(m % a.ctx_.modulus), raw_tag{});
    }
    ZMod operator-() const { return ZMod(ctx_, v_ == 0 ? 0 : ctx_.modulus - v_, raw_tag{}); }
    ZMod& operator+=(const ZMod& o) { return *this = *this + o; }
    ZMod& operator-=(const ZMod& o) { return *this = *this - o; }
    ZMod& operator*=(const ZMod& o) { return *this = *this * o; }
    friend bool operator==(const ZMod& a, const ZMod& b) { return a.ctx_ == b.ctx_ && a.v_ == b.v_; }

    bool is_zero() const { return v_ == 0; }
    bool in_radical() const { return v_ % ctx_.p == 0; }
    bool is_unit() const { return !in_radical(); }

    ZMod inverse() const {
        if (!is_unit()) throw NonUnit(to_string() + " is not a unit in " + ctx_.name());
        // extended Euclid on (v, modulus)
        long long m = static_cast<long long>(ctx_.modulus);
        long long a = static_cast<long long>(v_), b = m, x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            std::tie(a, b) = std::make_pair(b, a - q * b);
            std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        }
        return ctx_.from_int(x0);
    }

    ZMod residue() const { return ZMod(ctx_.residue_context(), v_ % ctx_.p); }
    std::string to_string() const { return std::to_string(v_); }

private:
    struct raw_tag {};
    ZMod(const Context& c, std::uint64_t v, raw_tag) : ctx_(c), v_(v) {}
    void check(const ZMod& o) const {
        if (!(ctx_ == o.ctx_)) throw ContextMismatch(ctx_.name() + " vs " + o.ctx_.name());
    }

    Context ctx_{};
    std::uint64_t v_ = 0;
};

// ---------------------------------------------------------------------------
// Dual numbers GF(p)[eps]/(eps^2).

class Dual {
public:
    struct Context {
        ZMod::Context field;

        Context() = default;
        explicit Context(std::uint64_t p) : field(p, 1) {}

        Dual zero() const { return Dual(*this, field.zero(), field.zero()); }
        Dual one() const { return Dual(*this, field.one(), field.zero()); }
        Dual from_int(long long n) const { return Dual(*this, field.from_int(n), field.zero()); }
        Dual eps() const { return Dual(*this, field.zero(), field.one()); }
        Dual parse(std::string_view text) const {
            auto [a, b] = detail::split_pair(text, "eps");
            return Dual(*this, field.parse(a), field.parse(b));
        }
        std::optional<int> nilpotency() const { return 2; }
        bool is_field() const { return false; }
        ZMod::Context residue_context() const { return field; }
        std::uint64_t residue_characteristic() const { return field.p; }
        std::string name() const { return field.name() + "[eps]"; }
        Dual random(std::mt19937_64& rng) const { return Dual(*this, field.random(rng), field.random(rng)); }
        Dual random_radical(std::mt19937_64& rng) const { return Dual(*this, field.zero(), field.random(rng)); }
        friend bool operator==(const Context& a, const Context& b) { return a.field == b.field; }
    };
    using Residue = ZMod;

    Dual() = default;
    Dual(const Context& c, ZMod a, ZMod b) : ctx_(c), a_(a), b_(b) {
        if (!(a.context() == c.field) || !(b.context() == c.field))
            throw ContextMismatch("dual coordinates over the wrong field");
    }

    const Context& context() const { return ctx_; }
    const ZMod& real() const { return a_; }
    const ZMod& eps_part() const { return b_; }

    friend Dual operator+(const Dual& x, const Dual& y) {
        x.check(y);
        return Dual(x.ctx_, x.a_ + y.a_, x.b_ + y.b_, raw_tag{});
    }
    friend Dual operator-(const Dual& x, const Dual& y) {
        x.check(y);
        return Dual(x.ctx_, x.a_ - y.a_, x.b_ - y.b_, raw_tag{});
    }
    friend Dual operator*(const Dual& x, const Dual& y) {
        x.check(y);
        return Dual(x.ctx_, x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_, raw_tag{});
    }
    Dual operator-() const { return Dual(ctx_, -a_, -b_, raw_tag{}); }
    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    friend bool operator==(const Dual& x, const Dual& y) { return x.ctx_ == y.ctx_ && x.a_ == y.a_ && x.b_ == y.b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool in_radical() const { return a_.is_zero(); }
    bool is_unit() const { return !a_.is_zero(); }

    Dual inverse() const {
        if (!is_unit()) throw NonUnit(to_string() + " is not a unit in " + ctx_.name());
        ZMod ai = a_.inverse();
        return Dual(ctx_, ai, -(b_ * ai * ai), raw_tag{});
    }

    ZMod residue() const { return a_; }
    std::string to_string() const { return a_.to_string() + "+" + b_.to_string() + "*eps"; }

private:
    struct raw_tag {};
    Dual(const Context& c, ZMod a, ZMod b, raw_tag) : ctx_(c), a_(a), b_(b) {}
    void check(const Dual& o) const {
        if (!(ctx_ == o.ctx_)) throw ContextMismatch(ctx_.name() + " vs " + o.ctx_.name());
    }

    Context ctx_{};
    ZMod a_{}, b_{};
};

// ---------------------------------------------------------------------------
// The localization Z_(p): fractions whose denominator is prime to p.

class ZLoc {
public:
    using Rational = boost::multiprecision::cpp_rational;
    using Integer = boost::multiprecision::cpp_int;

    struct Context {
        std::uint64_t p = 3;

        Context() = default;
        explicit Context(std::uint64_t prime) : p(prime) {
            if (!detail::is_odd_prime(prime)) throw InvalidArgument("p must be an odd prime");
        }

        ZLoc zero() const { return ZLoc(*this, Rational(0)); }
        ZLoc one() const { return ZLoc(*this, Rational(1)); }
        ZLoc from_int(long long n) const { return ZLoc(*this, Rational(n)); }
        ZLoc from_fraction(long long num, long long den) const {
            if (den == 0) throw InvalidArgument("zero denominator");
            return ZLoc(*this, Rational(Integer(num), Integer(den)));
        }
        ZLoc parse(std::string_view text) const {
            std::string s = detail::strip_parens(std::string(text));
            auto slash = s.find('/');
            try {
                if (slash == std::string::npos) return ZLoc(*this, Rational(Integer(s)));
                Integer num(detail::trim(s.substr(0, slash)));
                Integer den(detail::trim(s.substr(slash + 1)));
                if (den == 0) throw InvalidArgument("zero denominator");
                return ZLoc(*this, Rational(num, den));
            } catch (const InvalidArgument&) {
                throw;
            } catch (const std::exception&) {
                throw InvalidArgument("bad fraction literal: " + s);
            }
        }
        std::optional<int> nilpotency() const { return std::nullopt; }
        bool is_field() const { return false; }
        ZMod::Context residue_context() const { return ZMod::Context(p, 1); }
        std::uint64_t residue_characteristic() const { return p; }
        std::string name() const { return "Z_(" + std::to_string(p) + ")"; }
        ZLoc random(std::mt19937_64& rng) const {
            std::uniform_int_distribution<long long> num(-60, 60), den(1, 40);
            long long d = den(rng);
            while (d % static_cast<long long>(p) == 0) d = den(rng);
            return from_fraction(num(rng), d);
        }
        ZLoc random_radical(std::mt19937_64& rng) const {
            ZLoc r = random(rng);
            return r * from_int(static_cast<long long>(p));
        }
        friend bool operator==(const Context& a, const Context& b) { return a.p == b.p; }
    };
    using Residue = ZMod;

    ZLoc() = default;
    ZLoc(const Context& c, Rational q) : ctx_(c), q_(std::move(q)) {
        if (boost::multiprecision::denominator(q_) % c.p == 0)
            throw InvalidArgument("denominator divisible by p is not in " + c.name());
    }

    const Context& context() const { return ctx_; }
    const Rational& value() const { return q_; }

    friend ZLoc operator+(const ZLoc& a, const ZLoc& b) {
        a.check(b);
        return ZLoc(a.ctx_, a.q_ + b.q_, raw_tag{});
    }
    friend ZLoc operator-(const ZLoc& a, const ZLoc& b) {
        a.check(b);
        return ZLoc(a.ctx_, a.q_ - b.q_, raw_tag{});
    }
    friend ZLoc operator*(const ZLoc& a, const ZLoc& b) {
        a.check(b);
        if (a.q_.is_zero() || b.q_.is_zero()) return ZLoc(a.ctx_, Rational(0), raw_tag{});
        return ZLoc(a.ctx_, a.q_ * b.q_, raw_tag{});
    }
    ZLoc operator-() const { return ZLoc(ctx_, -q_, raw_tag{}); }
    ZLoc& operator+=(const ZLoc& o) { return *this = *this + o; }
    ZLoc& operator-=(const ZLoc& o) { return *this = *this - o; }
    ZLoc& operator*=(const ZLoc& o) { return *this = *this * o; }
    friend bool operator==(const ZLoc& a, const ZLoc& b) { return a.ctx_ == b.ctx_ && a.q_ == b.q_; }

    bool is_zero() const { return q_.is_zero(); }
    bool in_radical() const { return boost::multiprecision::numerator(q_) % ctx_.p == 0; }
    bool is_unit() const { return !in_radical(); }

    ZLoc inverse() const {
        if (!is_unit()) throw NonUnit(to_string() + " is not a unit in " + ctx_.name());
        return ZLoc(ctx_, Rational(1) / q_, raw_tag{});
    }

    ZMod residue() const {
        ZMod::Context k = ctx_.residue_context();
        Integer pp(ctx_.p);
        Integer n = boost::multiprecision::numerator(q_) % pp;
        Integer d = boost::multiprecision::denominator(q_) % pp;
        if (n < 0) n += pp;
        return k.from_int(n.convert_to<long long>()) * k.from_int(d.convert_to<long long>()).inverse();
    }

    std::string to_string() const {
        auto n = boost::multiprecision::numerator(q_);
        auto d = boost::multiprecision::denominator(q_);
        return d == 1 ? n.str() : n.str() + "/" + d.str();
    }

private:
    struct raw_tag {};
    ZLoc(const Context& c, Rational q, raw_tag) : ctx_(c), q_(std::move(q)) {}
    void check(const ZLoc& o) const {
        if (!(ctx_ == o.ctx_)) throw ContextMismatch(ctx_.name() + " vs " + o.ctx_.name());
    }

    Context ctx_{};
    Rational q_{0};
};

// ---------------------------------------------------------------------------
// Quadratic extension B[s]/(s^2 - r) for a unit r of B. One level of nesting.

template <class B>
class SqrtExt;

template <class T>
inline constexpr bool is_sqrt_ext_v = false;
template <class B>
inline constexpr bool is_sqrt_ext_v<SqrtExt<B>> = true;

template <class B>
class SqrtExt {
    static_assert(!is_sqrt_ext_v<B>, "quadratic extensions nest one level only");

public:
    using Base = B;
    using BaseContext = typename B::Context;
    using Residue = SqrtExt<typename B::Residue>;

    struct Context {
        BaseContext base{};
        B r{};

        Context() = default;
        Context(const BaseContext& b, const B& radicand) : base(b), r(radicand) {
            if (!(radicand.context() == b)) throw ContextMismatch("radicand from another ring");
            if (!radicand.is_unit()) throw NonUnit("adjoin_sqrt needs a unit radicand, got " + radicand.to_string());
        }

        SqrtExt zero() const { return SqrtExt(*this, base.zero(), base.zero()); }
        SqrtExt one() const { return SqrtExt(*this, base.one(), base.zero()); }
        SqrtExt from_int(long long n) const { return SqrtExt(*this, base.from_int(n), base.zero()); }
        SqrtExt embed(const B& x) const { return SqrtExt(*this, x, base.zero()); }
        SqrtExt root() const { return SqrtExt(*this, base.zero(), base.one()); }
        SqrtExt parse(std::string_view text) const {
            auto [a, b] = detail::split_pair(text, "sqrt");
            return SqrtExt(*this, base.parse(a), base.parse(b));
        }
        std::optional<int> nilpotency() const { return base.nilpotency(); }
        bool is_field() const { return false; }
        typename Residue::Context residue_context() const {
            return typename Residue::Context(base.residue_context(), r.residue());
        }
        std::uint64_t residue_characteristic() const { return base.residue_characteristic(); }
        std::string name() const { return base.name() + "[sqrt(" + r.to_string() + ")]"; }
        SqrtExt random(std::mt19937_64& rng) const { return SqrtExt(*this, base.random(rng), base.random(rng)); }
        SqrtExt random_radical(std::mt19937_64& rng) const {
            return SqrtExt(*this, base.random_radical(rng), base.random_radical(rng));
        }
        friend bool operator==(const Context& x, const Context& y) { return x.base == y.base && x.r == y.r; }
    };

    SqrtExt() = default;
    SqrtExt(const Context& c, B a, B b) : ctx_(c), a_(std::move(a)), b_(std::move(b)) {
        if (!(a_.context() == c.base) || !(b_.context() == c.base))
            throw ContextMismatch("coordinates outside the base ring");
    }

    const Context& context() const { return ctx_; }
    const B& first() const { return a_; }
    const B& second() const { return b_; }

    friend SqrtExt operator+(const SqrtExt& x, const SqrtExt& y) {
        x.check(y);
        return SqrtExt(x.ctx_, x.a_ + y.a_, x.b_ + y.b_, raw_tag{});
    }
    friend SqrtExt operator-(const SqrtExt& x, const SqrtExt& y) {
        x.check(y);
        return SqrtExt(x.ctx_, x.a_ - y.a_, x.b_ - y.b_, raw_tag{});
    }
    friend SqrtExt operator*(const SqrtExt& x, const SqrtExt& y) {
        x.check(y);
        return SqrtExt(x.ctx_, x.a_ * y.a_ + x.ctx_.r * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, raw_tag{});
    }
    SqrtExt operator-() const { return SqrtExt(ctx_, -a_, -b_, raw_tag{}); }
    SqrtExt& operator+=(const SqrtExt& o) { return *this = *this + o; }
    SqrtExt& operator-=(const SqrtExt& o) { return *this = *this - o; }
    SqrtExt& operator*=(const SqrtExt& o) { return *this = *this * o; }
    friend bool operator==(const SqrtExt& x, const SqrtExt& y) {
        return x.ctx_ == y.ctx_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    B norm() const { return a_ * a_ - ctx_.r * b_ * b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    // When r is a square mod J the quotient splits and is not local; then some
    // elements are neither units nor radical.
    bool in_radical() const { return a_.in_radical() && b_.in_radical(); }
    bool is_unit() const { return norm().is_unit(); }

    SqrtExt inverse() const {
        B n = norm();
        if (!n.is_unit()) throw NonUnit(to_string() + " is not a unit in " + ctx_.name());
        B ni = n.inverse();
        return SqrtExt(ctx_, a_ * ni, -(b_ * ni), raw_tag{});
    }

    Residue residue() const { return Residue(ctx_.residue_context(), a_.residue(), b_.residue()); }
    std::string to_string() const {
        return detail::wrap(a_.to_string()) + "+" + detail::wrap(b_.to_string()) + "*sqrt";
    }

private:
    struct raw_tag {};
    SqrtExt(const Context& c, B a, B b, raw_tag) : ctx_(c), a_(std::move(a)), b_(std::move(b)) {}
    void check(const SqrtExt& o) const {
        if (!(ctx_ == o.ctx_)) throw ContextMismatch(ctx_.name() + " vs " + o.ctx_.name());
    }

    Context ctx_{};
    B a_{}, b_{};
};

template <class B>
typename SqrtExt<B>::Context adjoin_sqrt(const typename B::Context& base, const B& r) {
    return typename SqrtExt<B>::Context(base, r);
}

// ---------------------------------------------------------------------------

template <class R>
concept LocalRing = requires(const R a, const R b, const typename R::Context c, std::mt19937_64& rng,
                             long long n, std::string_view s) {
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_unit() } -> std::same_as<bool>;
    { a.in_radical() } -> std::same_as<bool>;
    { a.inverse() } -> std::same_as<R>;
    { a.residue() } -> std::same_as<typename R::Residue>;
    { a.context() } -> std::convertible_to<typename R::Context>;
    { a.to_string() } -> std::same_as<std::string>;
    { c.zero() } -> std::same_as<R>;
    { c.one() } -> std::same_as<R>;
    { c.from_int(n) } -> std::same_as<R>;
    { c.parse(s) } -> std::same_as<R>;
    { c.nilpotency() } -> std::same_as<std::optional<int>>;
    { c.random(rng) } -> std::same_as<R>;
    { c.random_radical(rng) } -> std::same_as<R>;
    { c.name() } -> std::same_as<std::string>;
};

template <LocalRing R>
R power(R base, long long e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    R acc = base.context().one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

template <LocalRing R>
R random_unit(const typename R::Context& c, std::mt19937_64& rng) {
    for (;;) {
        R x = c.random(rng);
        if (x.is_unit()) return x;
    }
}

// 1 + J, the units congruent to one.
template <LocalRing R>
R random_principal_unit(const typename R::Context& c, std::mt19937_64& rng) {
    return c.one() + c.random_radical(rng);
}

}  // namespace chevalley
