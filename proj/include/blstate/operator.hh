#pragma once

#include <blstate/algebra.hh>

#include <optional>
#include <string>
#include <vector>

namespace blstate {

/// Strongest operator class whose axioms hold everywhere.
/// morphism ⇒ strong ⇒ state.
enum class OperatorClass { none, state, strong, morphism };

std::string_view to_string(OperatorClass c);

/// Failing instance of an operator law, e.g. {"(2)", {x, y}}.
struct LawFailure {
    std::string law;
    std::vector<Element> witness;

    bool operator==(const LawFailure &) const = default;
};

struct OperatorVerdict {
    bool state = false;          // (1)-(5)
    bool strong = false;         // (1), (2), (3'), (4), (5)
    bool morphism = false;       // (1), (2), (4), (5), (6)
    bool preserves_impl = false; // (7)

    std::optional<LawFailure> state_failure;
    std::optional<LawFailure> strong_failure;
    std::optional<LawFailure> morphism_failure;
    std::optional<LawFailure> impl_failure;

    /// First violated necessary condition of state operators (σ(1)=1,
    /// negation, monotonicity, the ⊙ inequality, idempotence), reported for
    /// maps that are not state operators. Diagonal tuples are scanned first.
    std::optional<LawFailure> consequence_failure;

    /// False only if a stronger class held without a weaker one, which would
    /// contradict morphism ⇒ strong ⇒ state.
    bool class_chain_consistent = true;

    OperatorClass operator_class() const;
};

/// A unary map on a sealed algebra together with its verdict. Obtain one
/// through verify_operator.
class StateOperator {
public:
    StateOperator(std::vector<Element> map, OperatorVerdict verdict) : map_(std::move(map)), verdict_(std::move(verdict)) {}

    Element operator()(Element x) const { return map_[x]; }
    const std::vector<Element> & map() const { return map_; }
    const OperatorVerdict & verdict() const { return verdict_; }
    OperatorClass operator_class() const { return verdict_.operator_class(); }

    bool is_state() const { return verdict_.state; }
    bool is_strong() const { return verdict_.strong; }
    bool is_morphism() const { return verdict_.morphism; }
    bool preserves_impl() const { return verdict_.preserves_impl; }
    bool is_endomorphism() const { return verdict_.state && verdict_.preserves_impl; }

    bool operator==(const StateOperator & o) const { return map_ == o.map_; }

private:
    std::vector<Element> map_;
    OperatorVerdict verdict_;
};

struct StateAlgebra {
    FiniteBLAlgebra algebra;
    StateOperator op;
};

/// Evaluates every operator law over all pairs and records the strongest
/// class that holds, with a witness for each class that fails.
StateOperator verify_operator(const FiniteBLAlgebra & a, std::vector<Element> map);

StateOperator identity_operator(const FiniteBLAlgebra & a);

} // namespace blstate
