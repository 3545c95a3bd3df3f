#pragma once

#include <cctype>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "selmer/point.hpp"

namespace selmer {

namespace detail {

/// Recursive descent over + - * / ^, parentheses and unary minus.
/// `Ops` supplies the value type, the atoms, division and integer powers.
template <class Ops>
class ExprParser {
public:
    using Value = typename Ops::Value;

    ExprParser(std::string_view text, const Ops& ops) : s_(text), ops_(ops) {}

    Value parse() {
        Value v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        Value v = term();
        while (true) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }
    Value term() {
        Value v = unary();
        while (true) {
            if (eat('*'))
                v = v * unary();
            else if (eat('/'))
                v = ops_.divide(v, unary());
            else
                return v;
        }
    }
    Value unary() {
        if (eat('-')) return ops_.constant(Rational(0)) - unary();
        if (eat('+')) return unary();
        return power();
    }
    Value power() {
        Value base = primary();
        if (!eat('^')) return base;
        skip();
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        return ops_.power(base, neg ? -e : e);
    }
    Value primary() {
        skip();
        if (eat('(')) {
            Value v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return ops_.constant(parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name != ops_.variable) fail("unknown symbol '" + name + "'");
            return ops_.generator();
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    const Ops& ops_;
};

struct PolyOps {
    using Value = RatPoly;
    std::string variable = "x";
    Value constant(const Rational& q) const { return RatPoly::constant(q); }
    Value generator() const { return RatPoly({Rational(0), Rational(1)}); }
    Value divide(const Value& a, const Value& b) const {
        if (b.degree() != 0) throw ParseError("polynomial division is only allowed by nonzero constants");
        return Rational(1) / b[0] * a;
    }
    Value power(const Value& b, long e) const {
        if (e < 0) throw ParseError("negative exponent in a polynomial");
        Value r = constant(Rational(1));
        for (long i = 0; i < e; ++i) r = r * b;
        return r;
    }
};

struct ElementOps {
    using Value = Element;
    FieldPtr field;
    std::string variable = "a";
    Value constant(const Rational& q) const { return Element(field, q); }
    Value generator() const { return Element::generator(field); }
    Value divide(const Value& a, const Value& b) const {
        if (b.is_zero()) throw ParseError("division by zero");
        return a / b;
    }
    Value power(const Value& b, long e) const {
        if (e < 0 && b.is_zero()) throw ParseError("negative power of zero");
        return b.pow(e);
    }
};

}  // namespace detail

/// Splits on commas that are not inside parentheses.
inline std::vector<std::string> split_top_level(std::string_view text, char sep = ',') {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline RatPoly parse_polynomial(std::string_view text, const std::string& var = "x") {
    detail::PolyOps ops;
    ops.variable = var;
    return detail::ExprParser<detail::PolyOps>(text, ops).parse();
}

/// "x^3-2:(1,2)" declares the minimal polynomial and an isolating root interval.
/// An empty spec or "Q" gives the rationals.
inline FieldPtr parse_field(std::string_view spec) {
    std::string s(spec);
    std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (s.empty() || s == "Q" || s == "QQ") return NumberField::rationals();
    auto colon = s.rfind(':');
    if (colon == std::string::npos) throw ParseError("field spec needs the form 'poly:(lo,hi)'");
    RatPoly m = parse_polynomial(s.substr(0, colon));
    std::string iv = s.substr(colon + 1);
    if (iv.size() < 5 || (iv.front() != '(' && iv.front() != '[') || (iv.back() != ')' && iv.back() != ']'))
        throw ParseError("root interval must look like (lo,hi)");
    auto ends = split_top_level(iv.substr(1, iv.size() - 2));
    if (ends.size() != 2) throw ParseError("root interval needs two endpoints");
    Rational lo = parse_rational(ends[0]), hi = parse_rational(ends[1]);
    if (!(lo < hi)) throw ParseError("root interval must satisfy lo < hi");
    try {
        return NumberField::create(m, Interval(lo, hi));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid field: ") + e.what());
    }
}

inline Element parse_element(std::string_view text, const FieldPtr& field, const std::string& var = "a") {
    detail::ElementOps ops{field, var};
    return detail::ExprParser<detail::ElementOps>(text, ops).parse();
}

/// Comma separated coordinate expressions; the result must lie in B^n.
inline PointB parse_point(std::string_view text, const FieldPtr& field) {
    std::vector<Element> xs;
    for (const auto& part : split_top_level(text)) {
        if (part.find_first_not_of(" \t") == std::string::npos) throw ParseError("empty coordinate");
        xs.push_back(parse_element(part, field));
    }
    if (auto why = PointB::ordering_violation(xs); !why.empty()) throw ParseError("point is not in B^n: " + why);
    return PointB(std::move(xs));
}

/// "5" or "2..6" as an inclusive range.
inline std::pair<long, long> parse_range(std::string_view text) {
    std::string s(text);
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        long lo = std::stol(s.substr(0, dots)), hi = std::stol(s.substr(dots + 2));
        if (hi < lo) throw ParseError("empty range '" + s + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParseError("malformed range '" + s + "'");
    }
}

}  // namespace selmer
