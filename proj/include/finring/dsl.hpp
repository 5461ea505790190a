#pragma once

/**
 * @file dsl.hpp
 * @brief Construction expressions: AST, parser, printer and evaluator.
 *
 *   expr  := Z(n) | GF(p,k[,irr]) | Prod(expr,expr[,...]) | M(n,expr) | T(n,expr)
 *          | Sn(n,expr) | Ks(expr,s) | MnS(n,expr,s) | TrivExt(expr[,k])
 *          | GR(expr,group) | PolyQuot(expr,n) | SkewPolyQuot(expr,n,alpha)
 *          | Tnm(n,m,expr) | Snm(n,m,expr) | Un(n,expr) | Anm(n,m,expr)
 *          | Bnm(n,m,expr) | Corner(expr,e) | Quot(expr,[gens])
 *   group := C(n) | GxG(group,group)
 *   alpha := frobenius | pow(j) | explicit([...])
 *
 * irr is an ascending coefficient list [c0,...,ck]. s, e and gens are element
 * indices of the inner ring. Whitespace between tokens is ignored.
 * Error offsets are 1-based byte positions.
 */

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "finring/constructors.hpp"
#include "finring/error.hpp"
#include "finring/group.hpp"
#include "finring/ideal.hpp"
#include "finring/ring.hpp"

namespace finring {

enum class ExprKind {
    Z, GF, Prod, M, T, Sn, Ks, MnS, TrivExt, GR, PolyQuot, SkewPolyQuot,
    Tnm, Snm, Un, Anm, Bnm, Corner, Quot,
};

struct GroupExpr {
    bool product = false;
    std::uint32_t n = 0;  // C(n)
    std::vector<GroupExpr> parts;

    bool operator==(const GroupExpr&) const = default;
};

struct AlphaExpr {
    enum class Kind { frobenius, pow, explicit_map };
    Kind kind = Kind::frobenius;
    std::uint32_t j = 0;
    std::vector<std::uint64_t> map;

    bool operator==(const AlphaExpr&) const = default;
};

/// One constructor application. Arguments are stored by type, each in order
/// of appearance; `list` holds GF's modulus or Quot's generators.
struct Expr {
    ExprKind kind = ExprKind::Z;
    std::vector<std::uint64_t> ints;
    std::vector<Expr> rings;
    std::vector<GroupExpr> groups;
    std::vector<AlphaExpr> alphas;
    std::optional<std::vector<std::uint64_t>> list;

    bool operator==(const Expr&) const = default;
};

class ParseError : public Error {
public:
    enum class Kind { syntax, arity, range };

    ParseError(Kind kind, std::size_t offset, std::set<std::string> expected, const std::string& detail)
        : Error(format(kind, offset, expected, detail)), kind_(kind), offset_(offset), expected_(std::move(expected)) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }
    const std::set<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(Kind kind, std::size_t offset, const std::set<std::string>& expected,
                              const std::string& detail) {
        static const char* names[] = {"syntax error", "arity error", "integer range error"};
        std::string s = std::string(names[int(kind)]) + " at offset " + std::to_string(offset);
        if (!detail.empty()) s += ": " + detail;
        if (!expected.empty()) {
            s += " (expected";
            for (const auto& e : expected) s += " '" + e + "'";
            s += ")";
        }
        return s;
    }

    Kind kind_;
    std::size_t offset_;
    std::set<std::string> expected_;
};

namespace detail {

enum class Arg { integer, ring, group, alpha, list };

struct ArgSpec {
    Arg type;
    std::uint64_t min = 0;
    std::uint64_t max = 0xFFFFFFFFu;
    bool optional = false;
};

struct Signature {
    ExprKind kind;
    std::string_view name;
    std::vector<ArgSpec> args;
    bool variadic_rings = false;  // Prod
};

inline const std::vector<Signature>& signatures() {
    using A = Arg;
    static const std::vector<Signature> table = {
        {ExprKind::Z, "Z", {{A::integer, 2}}},
        {ExprKind::GF, "GF", {{A::integer, 2}, {A::integer, 1}, {A::list, 0, 0xFFFFFFFFu, true}}},
        {ExprKind::Prod, "Prod", {{A::ring}, {A::ring}}, true},
        {ExprKind::M, "M", {{A::integer, 1}, {A::ring}}},
        {ExprKind::T, "T", {{A::integer, 1}, {A::ring}}},
        {ExprKind::Sn, "Sn", {{A::integer, 1}, {A::ring}}},
        {ExprKind::Ks, "Ks", {{A::ring}, {A::integer, 0}}},
        {ExprKind::MnS, "MnS", {{A::integer, 2}, {A::ring}, {A::integer, 0}}},
        {ExprKind::TrivExt, "TrivExt", {{A::ring}, {A::integer, 1, 0xFFFFFFFFu, true}}},
        {ExprKind::GR, "GR", {{A::ring}, {A::group}}},
        {ExprKind::PolyQuot, "PolyQuot", {{A::ring}, {A::integer, 1}}},
        {ExprKind::SkewPolyQuot, "SkewPolyQuot", {{A::ring}, {A::integer, 1}, {A::alpha}}},
        {ExprKind::Tnm, "Tnm", {{A::integer, 1}, {A::integer, 1}, {A::ring}}},
        {ExprKind::Snm, "Snm", {{A::integer, 1}, {A::integer, 1}, {A::ring}}},
        {ExprKind::Un, "Un", {{A::integer, 2}, {A::ring}}},
        {ExprKind::Anm, "Anm", {{A::integer, 2}, {A::integer, 2}, {A::ring}}},
        {ExprKind::Bnm, "Bnm", {{A::integer, 2}, {A::integer, 2}, {A::ring}}},
        {ExprKind::Corner, "Corner", {{A::ring}, {A::integer, 0}}},
        {ExprKind::Quot, "Quot", {{A::ring}, {A::list}}},
    };
    return table;
}

inline const Signature& signature(ExprKind k) {
    for (const auto& s : signatures())
        if (s.kind == k) return s;
    throw std::logic_error("unknown expression kind");
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = ring();
        skip();
        if (pos_ != text_.size()) syntax({"end of input"}, "trailing characters");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(ParseError::Kind k, std::size_t at, std::set<std::string> expected, const std::string& d) {
        throw ParseError(k, at + 1, std::move(expected), d);
    }
    [[noreturn]] void syntax(std::set<std::string> expected, const std::string& detail = "") {
        fail(ParseError::Kind::syntax, pos_, std::move(expected), detail);
    }

    void skip() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                        text_[pos_] == '\r'))
            ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) syntax({std::string(1, c)});
        ++pos_;
    }

    std::string identifier() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint64_t integer(const ArgSpec& spec) {
        skip();
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) syntax({"integer"});
        std::uint64_t v = 0;
        bool overflow = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const unsigned d = unsigned(text_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) overflow = true;
            else v = v * 10 + d;
            ++pos_;
        }
        if (overflow || v < spec.min || v > spec.max)
            fail(ParseError::Kind::range, start, {},
                 std::string(text_.substr(start, pos_ - start)) + " outside [" + std::to_string(spec.min) + ", " +
                     std::to_string(spec.max) + "]");
        return v;
    }

    std::vector<std::uint64_t> int_list(bool allow_empty) {
        expect('[');
        std::vector<std::uint64_t> out;
        if (peek(']')) {
            if (!allow_empty) syntax({"integer"}, "empty list");
            ++pos_;
            return out;
        }
        const ArgSpec any{Arg::integer};
        while (true) {
            out.push_back(integer(any));
            if (peek(',')) {
                ++pos_;
                continue;
            }
            if (peek(']')) {
                ++pos_;
                return out;
            }
            syntax({",", "]"});
        }
    }

    GroupExpr group() {
        skip();
        const std::size_t start = pos_;
        const auto name = identifier();
        GroupExpr g;
        if (name == "C") {
            expect('(');
            g.n = static_cast<std::uint32_t>(integer({Arg::integer, 1}));
            close(1, 1, "C");
        } else if (name == "GxG") {
            g.product = true;
            expect('(');
            g.parts.push_back(group());
            next_arg(1, 2, "GxG");
            g.parts.push_back(group());
            close(2, 2, "GxG");
        } else {
            pos_ = start;
            syntax({"C", "GxG"}, name.empty() ? "" : "unknown group '" + name + "'");
        }
        return g;
    }

    AlphaExpr alpha() {
        skip();
        const std::size_t start = pos_;
        const auto name = identifier();
        AlphaExpr a;
        if (name == "frobenius") {
            a.kind = AlphaExpr::Kind::frobenius;
        } else if (name == "pow") {
            a.kind = AlphaExpr::Kind::pow;
            expect('(');
            a.j = static_cast<std::uint32_t>(integer({Arg::integer, 0}));
            close(1, 1, "pow");
        } else if (name == "explicit") {
            a.kind = AlphaExpr::Kind::explicit_map;
            expect('(');
            a.map = int_list(false);
            close(1, 1, "explicit");
        } else {
            pos_ = start;
            syntax({"frobenius", "pow", "explicit"}, name.empty() ? "" : "unknown endomorphism '" + name + "'");
        }
        return a;
    }

    /// After argument `done` of a node taking [min_args, max_args]: expects ','.
    void next_arg(std::size_t done, std::size_t min_args, std::string_view name) {
        skip();
        if (peek(',')) {
            ++pos_;
            return;
        }
        if (peek(')'))
            fail(ParseError::Kind::arity, pos_, {","},
                 std::string(name) + " takes at least " + std::to_string(min_args) + " arguments, got " +
                     std::to_string(done));
        syntax({","});
    }

    void close(std::size_t done, std::size_t max_args, std::string_view name) {
        if (peek(')')) {
            ++pos_;
            return;
        }
        if (peek(','))
            fail(ParseError::Kind::arity, pos_, {")"},
                 std::string(name) + " takes at most " + std::to_string(max_args) + " arguments");
        (void)done;
        syntax({")"});
    }

    Expr ring() {
        skip();
        const std::size_t start = pos_;
        const auto name = identifier();
        const Signature* sig = nullptr;
        for (const auto& s : signatures())
            if (s.name == name) sig = &s;
        if (!sig) {
            pos_ = start;
            std::set<std::string> names;
            for (const auto& s : signatures()) names.insert(std::string(s.name));
            syntax(std::move(names), name.empty() ? "" : "unknown constructor '" + name + "'");
        }
        Expr e;
        e.kind = sig->kind;
        expect('(');
        std::size_t required = 0;
        for (const auto& a : sig->args) required += !a.optional;
        bool complete = true;
        for (std::size_t i = 0; i < sig->args.size(); ++i) {
            const auto& spec = sig->args[i];
            if (i > 0) {
                if (spec.optional) {
                    if (!peek(',')) {
                        complete = false;
                        break;
                    }
                    ++pos_;
                } else {
                    next_arg(i, required, sig->name);
                }
            }
            switch (spec.type) {
                case Arg::integer: e.ints.push_back(integer(spec)); break;
                case Arg::ring: e.rings.push_back(ring()); break;
                case Arg::group: e.groups.push_back(group()); break;
                case Arg::alpha: e.alphas.push_back(alpha()); break;
                case Arg::list: e.list = int_list(sig->kind == ExprKind::Quot); break;
            }
        }
        if (sig->variadic_rings)
            while (peek(',')) {
                ++pos_;
                e.rings.push_back(ring());
            }
        if (!peek(')')) {
            const bool more_allowed = sig->variadic_rings || !complete;
            if (peek(',') && !more_allowed) close(sig->args.size(), sig->args.size(), sig->name);
            if (more_allowed) syntax({",", ")"});
            syntax({")"});
        }
        ++pos_;
        return e;
    }
};

inline void render_list(std::string& out, const std::vector<std::uint64_t>& xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    out += ']';
}

}  // namespace detail

inline Expr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

inline std::string render(const GroupExpr& g) {
    if (!g.product) return "C(" + std::to_string(g.n) + ")";
    return "GxG(" + render(g.parts.at(0)) + "," + render(g.parts.at(1)) + ")";
}

inline std::string render(const AlphaExpr& a) {
    switch (a.kind) {
        case AlphaExpr::Kind::frobenius: return "frobenius";
        case AlphaExpr::Kind::pow: return "pow(" + std::to_string(a.j) + ")";
        case AlphaExpr::Kind::explicit_map: {
            std::string s = "explicit(";
            detail::render_list(s, a.map);
            return s + ")";
        }
    }
    return {};
}

/// Canonical text of an expression; parse_expr(render(e)) == e.
inline std::string render(const Expr& e) {
    const auto& sig = detail::signature(e.kind);
    std::string out(sig.name);
    out += '(';
    std::size_t ii = 0, ri = 0, gi = 0, ai = 0;
    bool first = true;
    auto sep = [&] {
        if (!first) out += ',';
        first = false;
    };
    for (const auto& spec : sig.args) {
        switch (spec.type) {
            case detail::Arg::integer:
                if (ii >= e.ints.size()) break;
                sep();
                out += std::to_string(e.ints[ii++]);
                break;
            case detail::Arg::ring: sep(); out += render(e.rings.at(ri++)); break;
            case detail::Arg::group: sep(); out += render(e.groups.at(gi++)); break;
            case detail::Arg::alpha: sep(); out += render(e.alphas.at(ai++)); break;
            case detail::Arg::list:
                if (!e.list) break;
                sep();
                detail::render_list(out, *e.list);
                break;
        }
    }
    while (ri < e.rings.size()) {
        sep();
        out += render(e.rings[ri++]);
    }
    return out + ')';
}

inline std::uint64_t group_order(const GroupExpr& g) {
    if (!g.product) return g.n;
    return std::min<std::uint64_t>(group_order(g.parts.at(0)) * group_order(g.parts.at(1)), UINT64_MAX / 2);
}

/// Order of the ring an expression denotes, computed from constructor
/// dimensions without building anything (saturating). Corner and Quot report
/// the inner order as an upper bound.
inline std::uint64_t expr_order(const Expr& e) {
    auto inner = [&] { return expr_order(e.rings.at(0)); };
    auto at = [&](std::size_t i) { return e.ints.at(i); };
    auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
        return (b != 0 && a > UINT64_MAX / b) ? UINT64_MAX : a * b;
    };
    switch (e.kind) {
        case ExprKind::Z: return at(0);
        case ExprKind::GF: return saturating_pow(at(0), at(1));
        case ExprKind::Prod: {
            std::uint64_t o = 1;
            for (const auto& r : e.rings) o = sat_mul(o, expr_order(r));
            return o;
        }
        case ExprKind::M: return saturating_pow(inner(), sat_mul(at(0), at(0)));
        case ExprKind::T: return saturating_pow(inner(), sat_mul(at(0), at(0) + 1) / 2);
        case ExprKind::Sn: return saturating_pow(inner(), 1 + sat_mul(at(0), at(0) - 1) / 2);
        case ExprKind::Ks: return saturating_pow(inner(), 4);
        case ExprKind::MnS: return saturating_pow(inner(), sat_mul(at(0), at(0)));
        case ExprKind::TrivExt: return saturating_pow(inner(), 1 + (e.ints.empty() ? 1 : at(0)));
        case ExprKind::GR: return saturating_pow(inner(), group_order(e.groups.at(0)));
        case ExprKind::PolyQuot:
        case ExprKind::SkewPolyQuot: return saturating_pow(inner(), at(0));
        case ExprKind::Tnm:
        case ExprKind::Anm: return saturating_pow(inner(), at(0) + at(1) - 1);
        case ExprKind::Snm:
        case ExprKind::Bnm: return saturating_pow(inner(), sat_mul(at(0), at(1)));
        case ExprKind::Un: return saturating_pow(inner(), 2 * at(0) - 2);
        case ExprKind::Corner:
        case ExprKind::Quot: return inner();
    }
    return UINT64_MAX;
}

inline FiniteGroup eval_group(const GroupExpr& g) {
    require_order(group_order(g), render(g));
    if (!g.product) return cyclic_group(g.n);
    return group_product(eval_group(g.parts.at(0)), eval_group(g.parts.at(1)));
}

namespace detail {

inline Elem element_arg(const FiniteRing& R, std::uint64_t v, const char* what) {
    if (v >= R.order())
        throw ConstructionError(std::string(what) + " = " + std::to_string(v) + " is not an element of " + R.label());
    return static_cast<Elem>(v);
}

inline std::uint32_t u32(std::uint64_t v) { return static_cast<std::uint32_t>(v); }

}  // namespace detail

/// Builds the ring an expression denotes. The order cap is checked on every
/// node before its tables are allocated.
inline FiniteRing eval_expr(const Expr& e) {
    using detail::u32;
    require_order(expr_order(e), render(e));
    std::vector<FiniteRing> sub;
    for (const auto& r : e.rings) sub.push_back(eval_expr(r));
    auto at = [&](std::size_t i) { return u32(e.ints.at(i)); };
    switch (e.kind) {
        case ExprKind::Z: return zmod(at(0));
        case ExprKind::GF: {
            std::optional<std::vector<std::uint32_t>> irr;
            if (e.list) {
                irr.emplace();
                for (auto c : *e.list) {
                    if (c >= at(0)) throw ConstructionError("GF: modulus coefficient " + std::to_string(c) + " is not below p");
                    irr->push_back(u32(c));
                }
            }
            return galois_field(at(0), at(1), irr);
        }
        case ExprKind::Prod: return direct_product(sub);
        case ExprKind::M: return matrix_ring(at(0), sub[0]);
        case ExprKind::T: return upper_triangular(at(0), sub[0]);
        case ExprKind::Sn: return constant_diag_triangular(at(0), sub[0]);
        case ExprKind::Ks: return formal_Ks(sub[0], detail::element_arg(sub[0], e.ints.at(0), "s"));
        case ExprKind::MnS: return formal_MnS(at(0), sub[0], detail::element_arg(sub[0], e.ints.at(1), "s"));
        case ExprKind::TrivExt: return trivial_extension(sub[0], e.ints.empty() ? 1 : at(0));
        case ExprKind::GR: return group_ring(sub[0], eval_group(e.groups.at(0))).ring;
        case ExprKind::PolyQuot: return poly_quot(sub[0], at(0));
        case ExprKind::SkewPolyQuot: {
            const auto& a = e.alphas.at(0);
            switch (a.kind) {
                case AlphaExpr::Kind::frobenius: return skew_poly_quot(sub[0], at(0), frobenius(sub[0]));
                case AlphaExpr::Kind::pow: return skew_poly_quot(sub[0], at(0), power_endomorphism(sub[0], a.j));
                case AlphaExpr::Kind::explicit_map: {
                    if (a.map.size() != sub[0].order())
                        throw ConstructionError("explicit alpha must list " + std::to_string(sub[0].order()) + " images");
                    std::vector<Elem> map;
                    for (auto v : a.map) map.push_back(detail::element_arg(sub[0], v, "alpha image"));
                    return skew_poly_quot(sub[0], at(0), make_endomorphism(sub[0], std::move(map), render(a)));
                }
            }
            break;
        }
        case ExprKind::Tnm: return family_Tnm(at(0), at(1), sub[0]);
        case ExprKind::Snm: return family_Snm(at(0), at(1), sub[0]);
        case ExprKind::Un: return family_Un(at(0), sub[0]);
        case ExprKind::Anm: return family_Anm(at(0), at(1), sub[0]);
        case ExprKind::Bnm: return family_Bnm(at(0), at(1), sub[0]);
        case ExprKind::Corner: return corner_ring(sub[0], detail::element_arg(sub[0], e.ints.at(0), "e"));
        case ExprKind::Quot: {
            std::vector<Elem> gens;
            for (auto g : *e.list) gens.push_back(detail::element_arg(sub[0], g, "generator"));
            return quotient_ring(sub[0], ideal_closure(sub[0], gens)).ring;
        }
    }
    throw std::logic_error("unhandled expression kind");
}

inline FiniteRing eval_expr(std::string_view text) { return eval_expr(parse_expr(text)); }

}  // namespace finring
