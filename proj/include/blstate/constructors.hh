#pragma once

#include <blstate/algebra.hh>
#include <blstate/operator.hh>

#include <optional>
#include <stdexcept>
#include <vector>

namespace blstate {

class NonLinearSummand : public std::runtime_error {
public:
    explicit NonLinearSummand(std::size_t index);
    std::size_t index;
};

class NotAFilter : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAHomomorphism : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Łukasiewicz chain {x_0 < ... < x_n}, labels "0".."n".
FiniteBLAlgebra mv_chain(std::size_t n);

/// Gödel chain with `elements` elements (prod = min), labels "0", "c1", ..., "1".
FiniteBLAlgebra godel_chain(std::size_t elements);

/// Componentwise operations; (a, b) has index a * |B| + b.
FiniteBLAlgebra direct_product(const FiniteBLAlgebra & a, const FiniteBLAlgebra & b);

/// Ordinal sum with all tops identified. Element order: the first summand
/// bottom-up without its top, then each later summand's non-top elements in
/// index order, then the shared top. Summands other than the last must be
/// chains. k summands are folded left with the binary sum.
FiniteBLAlgebra ordinal_sum(const std::vector<FiniteBLAlgebra> & summands);

/// The 4-element chain 0 < a < b < 1 whose ⊙ has a⊙a = 0, b⊙b = b, a⊙b = a,
/// with σ = (0, a, 1, 1).
StateAlgebra four_element_example();

struct Quotient {
    FiniteBLAlgebra algebra;
    std::vector<Element> projection;
};

/// A/F for x ~ y iff d(x, y) ∈ F. Classes are numbered by their least member;
/// each class is labelled by its members, e.g. "{b,1}".
Quotient quotient_by_filter(const FiniteBLAlgebra & a, const ElementSet & filter);

struct Subalgebra {
    FiniteBLAlgebra algebra;
    std::vector<Element> embedding; // subalgebra index -> parent index
};

/// Restriction of the tables to `members` (which must be closed under all
/// operations and contain 0, 1), relabelled in ascending parent index.
Subalgebra subalgebra(const FiniteBLAlgebra & a, const ElementSet & members);

struct Homomorphism {
    std::vector<Element> map;
};

bool is_homomorphism(const FiniteBLAlgebra & source, const FiniteBLAlgebra & target, const std::vector<Element> & map);

/// Verifies preservation of ⊙, →, ∧, ∨, 0, 1; throws NotAHomomorphism.
Homomorphism make_homomorphism(const FiniteBLAlgebra & source, const FiniteBLAlgebra & target, std::vector<Element> map);

/// σ_1(a, b) = (a, a) (which = 1) or σ_2(a, b) = (b, b) (which = 2) on A × A.
StateAlgebra diagonal_operator(const FiniteBLAlgebra & a, int which);

/// σ(b, c) = (b, h(b)) on B × C.
StateAlgebra sigma_h(const FiniteBLAlgebra & b, const FiniteBLAlgebra & c, const Homomorphism & h);

/// A bijection preserving all operations, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const FiniteBLAlgebra & a, const FiniteBLAlgebra & b);

/// Isomorphism f: A → B with f ∘ σ = τ ∘ f.
std::optional<std::vector<Element>> find_state_isomorphism(const FiniteBLAlgebra & a, const std::vector<Element> & sigma,
    const FiniteBLAlgebra & b, const std::vector<Element> & tau);

/// Relabel a chain so that index order equals the lattice order.
FiniteBLAlgebra canonical_chain(const FiniteBLAlgebra & chain);

} // namespace blstate
