#pragma once

#include <blstate/algebra.hh>

#include <optional>
#include <span>
#include <vector>

namespace blstate {

/// Contains the top, closed under ⊙ and upward closed.
bool is_filter(const FiniteBLAlgebra & a, const ElementSet & s);

/// Every filter, ordered by size and then by member list.
std::vector<ElementSet> all_filters(const FiniteBLAlgebra & a);

/// The two enumeration strategies behind all_filters: testing every subset,
/// and taking the upsets of idempotent elements.
std::vector<ElementSet> filters_by_subsets(const FiniteBLAlgebra & a);
std::vector<ElementSet> filters_by_idempotents(const FiniteBLAlgebra & a);

/// Least filter containing `generators` (which must be nonempty).
ElementSet filter_generated(const FiniteBLAlgebra & a, const ElementSet & generators);

/// Maximal proper filters, in all_filters order.
std::vector<ElementSet> maximal_filters(const FiniteBLAlgebra & a);

/// For a proper filter: every x outside it has some (x^n)⁻ inside it.
bool satisfies_maximality_criterion(const FiniteBLAlgebra & a, const ElementSet & f);

/// Intersection of the maximal filters (the whole algebra when there are none).
ElementSet radical(const FiniteBLAlgebra & a);

/// {x : (x^n)⁻ ≤ x for every n ≥ 1}.
ElementSet radical_by_formula(const FiniteBLAlgebra & a);

/// {x⁻ : x ∈ s}.
ElementSet negations(const FiniteBLAlgebra & a, const ElementSet & s);

/// Proper filter P such that (x⊙y)⁻ ∈ P forces (x^n)⁻ ∈ P or (y^n)⁻ ∈ P for some n.
bool is_primary(const FiniteBLAlgebra & a, const ElementSet & p);
std::vector<ElementSet> primary_filters(const FiniteBLAlgebra & a);

/// Outcome of a universally quantified property with its first counterexample.
struct Flag {
    bool holds = true;
    std::optional<Element> witness;
};

struct AlgebraClassification {
    Flag simple;         // exactly two filters (witness: none)
    Flag semisimple;     // radical = {1} (witness: least radical element other than 1)
    Flag local;          // exactly one maximal filter
    Flag perfect;        // every x lies in Rad or in Rad⁻ (witness: first x in neither)
    Flag locally_finite; // every x ≠ 1 has finite order (witness: first x of infinite order)

    /// local, decided instead by "ord(x) < ∞ or ord(x⁻) < ∞ for all x"
    Flag local_by_order;

    ElementSet radical;
    ElementSet radical_by_formula;
    ElementSet radical_neg;
    std::vector<ElementSet> maximal_filters;
    std::vector<ElementSet> primary_filters;
    std::size_t filter_count = 0;
};

AlgebraClassification classify_algebra(const FiniteBLAlgebra & a);

struct Irreducibility {
    bool irreducible = false;
    std::optional<ElementSet> least; // least filter other than {1}
};

/// Whether the filters other than {1} have a least element. When `sigma` is
/// given, only filters closed under σ are considered.
Irreducibility subdirectly_irreducible(const FiniteBLAlgebra & a, std::span<const Element> sigma = {});

} // namespace blstate
