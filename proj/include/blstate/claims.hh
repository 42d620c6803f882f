#pragma once

#include <blstate/families.hh>
#include <blstate/filters.hh>
#include <blstate/operators.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blstate {

enum class Verdict { pass, fail, not_applicable, logged };

std::string_view to_string(Verdict v);

struct NamedOperator {
    std::string name;
    std::vector<Element> map;

    bool operator==(const NamedOperator &) const = default;
};

/// One algebra of a suite corpus. The optional shape fields unlock the
/// claims that only make sense for comets or for squares B × B.
struct CorpusInstance {
    std::string name;
    FiniteBLAlgebra algebra;
    std::vector<NamedOperator> operators;
    std::optional<Comet> comet;
    std::optional<FiniteBLAlgebra> square_of;
};

struct ClaimOutcome {
    Verdict verdict = Verdict::pass;
    std::string witness;
    std::string detail;
};

struct ClaimInfo {
    std::string id;
    std::string statement;
};

/// Every claim id the suite knows, in report order.
const std::vector<ClaimInfo> & claim_catalogue();

bool is_known_claim(std::string_view id);

/// Lazily computed facts about one corpus instance, shared by all claims
/// checked on it. Not safe for concurrent use; give each worker its own.
class InstanceContext {
public:
    /// State operators are enumerated exhaustively when the algebra has at
    /// most `enumeration_limit` elements; otherwise only the named
    /// operators that verify as state operators are used.
    explicit InstanceContext(const CorpusInstance & instance, std::size_t enumeration_limit = 25);

    const CorpusInstance & instance() const { return instance_; }
    const FiniteBLAlgebra & algebra() const { return instance_.algebra; }
    bool exhaustive() const { return algebra().size() <= limit_; }

    const AlgebraClassification & classification();
    const std::vector<ElementSet> & filters();

    /// Named operators after verification, in declaration order.
    const std::vector<StateOperator> & named();

    /// The state operators the per-operator claims range over.
    const std::vector<StateOperator> & state_operators();

    /// Separate enumerations of the strong and morphism classes.
    const std::vector<StateOperator> & strong_operators();
    const std::vector<StateOperator> & morphism_operators();

    /// classify_state_algebra for state_operators()[i].
    const StateAlgebraClassification & operator_classification(std::size_t i);

private:
    const CorpusInstance & instance_;
    std::size_t limit_;
    std::optional<AlgebraClassification> classification_;
    std::optional<std::vector<ElementSet>> filters_;
    std::optional<std::vector<StateOperator>> named_;
    std::optional<std::vector<StateOperator>> state_;
    std::optional<std::vector<StateOperator>> strong_;
    std::optional<std::vector<StateOperator>> morphism_;
    std::vector<std::optional<StateAlgebraClassification>> op_classification_;
};

/// Throws std::invalid_argument for an unknown id.
ClaimOutcome check_claim(std::string_view id, InstanceContext & ctx);

} // namespace blstate
