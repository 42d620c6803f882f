#pragma once

#include <blstate/constructors.hh>
#include <blstate/filters.hh>
#include <blstate/operator.hh>

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace blstate {

/// Operator classes that can be enumerated. An endomorphism is a state
/// operator that also preserves →.
enum class SearchClass { state, strong, morphism, endomorphism };

std::string_view to_string(SearchClass c);
SearchClass search_class_from_string(std::string_view s);

bool in_class(const StateOperator & op, SearchClass c);

/// Every operator of class `c`, in lexicographic order of the maps. The
/// search assigns σ(0), σ(1), ... in turn and abandons a branch as soon as
/// a fully determined instance of a law or of a known consequence fails.
/// With workers > 1 the first branching level is split across threads; the
/// result is the same for every worker count.
std::vector<StateOperator> enumerate_operators(const FiniteBLAlgebra & a, SearchClass c, unsigned workers = 1);

/// Tests all n^n maps. Only for very small algebras.
std::vector<StateOperator> enumerate_operators_brute_force(const FiniteBLAlgebra & a, SearchClass c);

/// Maps with class state but not strong.
std::vector<StateOperator> search_nonstrong(const FiniteBLAlgebra & a, unsigned workers = 1);

ElementSet kernel(const FiniteBLAlgebra & a, std::span<const Element> sigma);

/// σ(S) and σ⁻¹(S).
ElementSet image_of(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & s);
ElementSet preimage_of(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & s);

struct KernelReport {
    ElementSet kernel;
    bool faithful = false;
    bool radical_faithful = false;
    std::optional<Element> radical_witness; // σ(x) ∈ Rad but x ∉ Rad
};

KernelReport kernel_and_faithfulness(const FiniteBLAlgebra & a, const StateOperator & op);

class NotAStateFilter : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_state_filter(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & f);

/// Filters closed under σ, in all_filters order.
std::vector<ElementSet> state_filters(const FiniteBLAlgebra & a, std::span<const Element> sigma);

/// Upward closure of the finite ⊙-products of the elements x ⊙ σ(x), x ∈ X.
ElementSet state_filter_generated(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & x);

/// Least σ-closed filter containing X, by adding σ-images, products and
/// upper bounds until nothing changes.
ElementSet state_filter_closure(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & x);

/// {x : x ≥ i ⊙ (a ⊙ σ(a))^n, i ∈ F, n ≥ 1}. Throws NotAStateFilter.
ElementSet state_filter_generated_ext(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & f,
    Element x);

/// Proper state filters not strictly contained in another proper state filter.
std::vector<ElementSet> maximal_state_filters(const FiniteBLAlgebra & a, std::span<const Element> sigma);

/// For a proper state filter: every x outside has some (σ(x)^n)⁻ inside.
bool satisfies_state_maximality_criterion(const FiniteBLAlgebra & a, std::span<const Element> sigma,
    const ElementSet & f);

/// Intersection of the maximal state filters.
ElementSet rad_sigma(const FiniteBLAlgebra & a, std::span<const Element> sigma);

/// The fixed points of σ as a subalgebra, relabelled in ascending index.
Subalgebra image_subalgebra(const FiniteBLAlgebra & a, const StateOperator & op);

struct StateAlgebraClassification {
    Flag ssbl_simple;      // σ(A) is simple
    Flag sssbl_semisimple; // Rad(σ(A)) = {1} (witness in A's indices)
    Flag radical_faithful; // σ(x) ∈ Rad(A) ⇒ x ∈ Rad(A)

    ElementSet ker;
    ElementSet rad_sigma;
    std::vector<ElementSet> maximal_state_filters;
    Subalgebra image;

    AlgebraClassification algebra;       // of A
    AlgebraClassification image_algebra; // of σ(A), in σ(A)'s own indices

    bool ker_maximal = false; // Ker(σ) is a maximal filter of A
};

StateAlgebraClassification classify_state_algebra(const FiniteBLAlgebra & a, const StateOperator & op);

class NotMV : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MVReport {
    bool mv_axioms = false;                   // the four MV-style operator axioms
    std::optional<LawFailure> mv_failure;     // first failing MV-style axiom
    bool state = false;                       // the BL-style state axioms
    bool agree = false;                       // mv_axioms == state
    bool strong_if_state = true;              // state ⇒ strong
    bool additive = true;                     // σ(x + y) = σ(x) + σ(y) on orthogonal pairs (state maps)
    std::optional<std::vector<Element>> additivity_witness;
};

/// Compares the MV-style and BL-style axiom systems on an MV carrier.
/// Throws NotMV when x⁻⁻ = x fails somewhere.
MVReport mv_equivalence_check(const FiniteBLAlgebra & a, std::span<const Element> map);

} // namespace blstate
