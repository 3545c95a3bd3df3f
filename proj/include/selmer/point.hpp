#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "selmer/numfield.hpp"

namespace selmer {

/// A point of B^n = {1 >= x_1 >= ... >= x_n >= 0} with exact coordinates in one number field.
class PointB {
public:
    PointB() = default;

    explicit PointB(std::vector<Element> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw DomainError("point must have dimension >= 1");
        for (const auto& c : coords_)
            if (!c.field()->same_as(*coords_.front().field())) throw FieldMismatchError();
        if (auto why = ordering_violation(coords_); !why.empty()) throw DomainError("point not in B^n: " + why);
    }

    static PointB from_rationals(const std::vector<Rational>& xs, const FieldPtr& f = NumberField::rationals()) {
        std::vector<Element> c;
        c.reserve(xs.size());
        for (const auto& q : xs) c.emplace_back(f, q);
        return PointB(std::move(c));
    }

    /// Empty string when 1 >= x_1 >= ... >= x_n >= 0 holds, otherwise a description.
    static std::string ordering_violation(const std::vector<Element>& x) {
        if (x.empty()) return "empty";
        if (x.front() > Rational(1)) return "x_1 > 1";
        for (std::size_t i = 0; i + 1 < x.size(); ++i)
            if (x[i] < x[i + 1]) return "x_" + std::to_string(i + 1) + " < x_" + std::to_string(i + 2);
        if (x.back() < Rational(0)) return "x_n < 0";
        return {};
    }

    std::size_t dim() const { return coords_.size(); }
    const Element& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Element>& coords() const { return coords_; }
    const FieldPtr& field() const { return coords_.front().field(); }

    friend bool operator==(const PointB&, const PointB&) = default;

    std::string to_text(const std::string& var = "a") const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].to_text(var);
        return s + ")";
    }

    std::string to_decimal(unsigned digits) const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + certified_decimal(coords_[i], digits);
        return s + ")";
    }

private:
    std::vector<Element> coords_;
};

struct PointHash {
    std::size_t operator()(const PointB& x) const noexcept {
        std::size_t h = x.dim();
        for (const auto& c : x.coords()) hash_combine(h, c.hash());
        return h;
    }
};

}  // namespace selmer
