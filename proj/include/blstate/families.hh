#pragma once

#include <blstate/operator.hh>

#include <stdexcept>
#include <vector>

namespace blstate {

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// S_base ⊕ (S_{n1} × ... × S_{nk}), or the bare product when base is 0.
/// The product is the top summand A₁; its least element is 0₁.
class Comet {
public:
    Comet(std::size_t base, std::vector<std::size_t> factors);

    const FiniteBLAlgebra & algebra() const { return algebra_; }
    std::size_t base() const { return base_; }
    const std::vector<std::size_t> & factors() const { return factors_; }

    /// Index of the product element with the given coordinates.
    Element embed(const std::vector<std::size_t> & coordinates) const;
    /// Coordinates of an element of A₁; throws ShapeMismatch for base elements.
    std::vector<std::size_t> coordinates(Element x) const;
    bool in_top_summand(Element x) const { return x >= base_; }
    Element bottom_of_top() const { return static_cast<Element>(base_); }

    /// x* = x → 0₁.
    Element star(Element x) const { return algebra_.impl(x, bottom_of_top()); }

private:
    std::size_t base_;
    std::vector<std::size_t> factors_;
    FiniteBLAlgebra algebra_;
};

/// Sets the coordinates listed in J (0-based factor indices) to their top and
/// leaves the rest, on A₁; identity on the base chain.
StateOperator sigma_J(const Comet & c, const std::vector<std::size_t> & j);

struct SigmaA {
    StateOperator op;
    Element a;
    Element a_star;
    bool covers = false; // [a, 1] ∪ [0₁, a*] = A₁
};

/// 1 above a, 0₁ between 0₁ and a*, identity elsewhere (the first clause
/// wins where both apply). Throws ShapeMismatch unless a is an idempotent of A₁.
SigmaA sigma_a(const Comet & c, Element a);

/// On a finite Gödel chain: x for x ≤ a, 1 otherwise.
StateOperator godel_sigma_lower(const FiniteBLAlgebra & chain, Element a);

/// On a finite Gödel chain, a ≠ 0: x for x < a, 1 otherwise.
StateOperator godel_sigma_upper(const FiniteBLAlgebra & chain, Element a);

} // namespace blstate
