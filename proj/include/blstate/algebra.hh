#pragma once

#include <blstate/element_set.hh>

#include <compare>
#include <cstddef>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace blstate {

/// Candidate operation tables. Binary tables are row-major n×n:
/// entry (a, b) lives at index a * n + b.
struct OperationTables {
    std::vector<std::string> labels;
    std::vector<Element> meet, join, prod, impl;
    Element bottom = 0;
    Element top = 0;

    std::size_t size() const { return labels.size(); }
};

enum class Axiom { shape, lattice, monoid, adjointness, divisibility, prelinearity };

std::string_view to_string(Axiom a);

/// First failing instance of a defining law. Re-evaluating `law` at
/// `witness` on the same tables fails (see law_holds_at).
struct AxiomViolation {
    Axiom axiom = Axiom::shape;
    std::string law;
    std::vector<Element> witness;

    bool operator==(const AxiomViolation &) const = default;
};

/// ℕ ∪ {∞}. Infinity compares greater than every finite value.
class ExtendedNat {
public:
    ExtendedNat() = default;
    explicit ExtendedNat(std::size_t v) : value_(v) {}
    static ExtendedNat infinity() { return ExtendedNat{}; }

    bool is_finite() const { return value_.has_value(); }
    std::size_t value() const { return value_.value(); }

    bool operator==(const ExtendedNat &) const = default;
    std::strong_ordering operator<=>(const ExtendedNat & o) const;

    std::string to_string() const;

private:
    std::optional<std::size_t> value_;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(AxiomViolation v);
    const AxiomViolation & violation() const { return violation_; }

private:
    AxiomViolation violation_;
};

/// Raised when {z : prod(a, z) ≤ b} has no greatest element.
class NoResiduum : public std::runtime_error {
public:
    NoResiduum(Element a, Element b);
    Element a, b;
};

/// A finite BL-algebra whose tables passed every defining axiom. Instances
/// can only be obtained through verify_bl_axioms / seal and are immutable.
class FiniteBLAlgebra {
public:
    std::size_t size() const { return t_.labels.size(); }
    auto elements() const { return std::views::iota(Element{0}, static_cast<Element>(size())); }

    const std::vector<std::string> & labels() const { return t_.labels; }
    const std::string & label(Element e) const { return t_.labels.at(e); }
    const OperationTables & tables() const { return t_; }

    Element bottom() const { return t_.bottom; }
    Element top() const { return t_.top; }

    Element meet(Element a, Element b) const { return t_.meet[a * size() + b]; }
    Element join(Element a, Element b) const { return t_.join[a * size() + b]; }
    Element prod(Element a, Element b) const { return t_.prod[a * size() + b]; }
    Element impl(Element a, Element b) const { return t_.impl[a * size() + b]; }

    bool leq(Element a, Element b) const { return meet(a, b) == a; }
    bool lt(Element a, Element b) const { return a != b && leq(a, b); }
    bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

    Element neg(Element x) const { return impl(x, bottom()); }
    Element oplus(Element x, Element y) const { return neg(prod(neg(x), neg(y))); }
    Element ominus(Element x, Element y) const { return prod(x, neg(y)); }
    Element dist(Element x, Element y) const { return prod(impl(x, y), impl(y, x)); }
    Element pow(Element x, std::size_t k) const;

    /// Least k ≥ 1 with x^k = bottom, or ∞.
    ExtendedNat ord(Element x) const;

    /// x^1, x^2, ... up to the first power that repeats. Every later power
    /// equals the last entry, so "for all n" conditions over powers only need
    /// to look at this list.
    std::vector<Element> powers(Element x) const;

    bool orthogonal(Element x, Element y) const { return prod(x, y) == bottom(); }
    /// x + y := y⁻ → x⁻⁻, defined for orthogonal pairs.
    Element partial_sum(Element x, Element y) const { return impl(neg(y), neg(neg(x))); }

    bool is_idempotent(Element x) const { return prod(x, x) == x; }
    bool is_linear() const;

    /// Elements z with a ≤ z.
    ElementSet upset(Element a) const;

    Element element(std::string_view label) const;
    std::string set_to_string(const ElementSet & s) const;

    bool operator==(const FiniteBLAlgebra & o) const;

private:
    friend std::variant<FiniteBLAlgebra, AxiomViolation> verify_bl_axioms(OperationTables tables);
    explicit FiniteBLAlgebra(OperationTables t) : t_(std::move(t)) {}

    OperationTables t_;
};

/// Checks, in this order, table shape, lattice, monoid, adjointness,
/// divisibility and prelinearity. Within a group the laws are tried in a
/// fixed order and each law scans its variable tuples lexicographically, so
/// the reported violation is reproducible.
std::variant<FiniteBLAlgebra, AxiomViolation> verify_bl_axioms(OperationTables tables);

/// verify_bl_axioms, throwing ValidationError on failure.
FiniteBLAlgebra seal(OperationTables tables);

/// Re-evaluates the named law at the violation's witness.
bool law_holds_at(const OperationTables & tables, const AxiomViolation & v);

/// impl(a, b) = max{ z : prod(a, z) ≤ b }, the order taken from `meet`.
/// Throws NoResiduum when some maximum does not exist.
std::vector<Element> residuum_from_monoid(std::size_t n, std::span<const Element> meet, std::span<const Element> prod);

/// Chain meet/join tables for the order 0 < 1 < ... < n-1.
std::vector<Element> chain_meet(std::size_t n);
std::vector<Element> chain_join(std::size_t n);

/// Sets bottom/top to the least/greatest element of the meet order when
/// they exist (leaves them untouched otherwise).
void infer_bounds(OperationTables & tables);

enum class DerivedOp { neg, oplus, ominus, dist, pow, ord };

std::variant<Element, ExtendedNat> derived(const FiniteBLAlgebra & a, DerivedOp op, std::span<const Element> args,
    std::size_t exponent = 0);

struct IdentityCheck {
    bool holds = true;
    std::vector<Element> witness;
};

struct VarietyFlags {
    IdentityCheck is_mv;                  // x⁻⁻ = x
    IdentityCheck is_godel;               // x ⊙ x = x
    IdentityCheck is_linear;              // any two elements comparable
    IdentityCheck mv_or_product_identity; // x → (x ⊙ y) = x⁻ ∨ y
};

VarietyFlags classify_variety(const FiniteBLAlgebra & a);

} // namespace blstate
