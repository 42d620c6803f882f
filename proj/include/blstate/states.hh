#pragma once

#include <blstate/operator.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace blstate {

using Rational = boost::multiprecision::cpp_rational;

/// Lowest terms, "p/q", or "p" for integers.
std::string to_string(const Rational & r);

/// Accepts "p", "-p" and "p/q"; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// One value per element, indexed like the algebra.
using StateValues = std::vector<Rational>;

std::string to_string(const StateValues & s);

class NotAState : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct StateVerdict {
    bool in_range = true; // every value in [0, 1]
    std::optional<Element> range_witness;

    bool bosbach = false; // s(0) = 0, s(1) = 1 and s(x) + s(x→y) = s(y) + s(y→x)
    std::optional<std::vector<Element>> bosbach_witness;

    bool riecan = false; // s(0) = 0, s(1) = 1 and additivity on orthogonal pairs
    std::optional<std::vector<Element>> riecan_witness;

    bool state_morphism = false; // m(0) = 0 and m(x→y) = min{1 - m(x) + m(y), 1}
    std::optional<std::vector<Element>> morphism_witness;

    // Extremality criteria. Only meaningful when the map is a state.
    bool max_on_joins = false;
    bool lukasiewicz_product = false; // m(x⊙y) = max{m(x) + m(y) - 1, 0}
    bool kernel_maximal = false;

    bool extremal = false;          // a state that is a state-morphism
    bool criteria_agree = true;     // the four criteria coincide (for states)
    bool bosbach_riecan_agree = true;
};

StateVerdict check_state(const FiniteBLAlgebra & a, std::span<const Rational> s);

/// x ↦ rank(x/F) / k for each maximal filter F, where A/F is the chain of
/// k + 1 elements. Listed in maximal_filters order.
std::vector<StateValues> extremal_states(const FiniteBLAlgebra & a);

/// Vertices of the polytope cut out by the state equations and 0 ≤ s ≤ 1,
/// with extra equalities s(x) = s(y) for every pair in `tied`. Sorted.
std::vector<StateValues> state_polytope_vertices(const FiniteBLAlgebra & a,
    std::span<const std::pair<Element, Element>> tied = {});

/// Convex weights expressing `s` over `generators`, if any exist.
std::optional<std::vector<Rational>> hull_coefficients(std::span<const StateValues> generators, const StateValues & s);

/// Σ w_i g_i.
StateValues mix(std::span<const StateValues> generators, std::span<const Rational> weights);

/// s(x) = s(y) whenever σ(x) = σ(y).
bool is_sigma_compatible(std::span<const Element> sigma, std::span<const Rational> s);

/// Extremal states among the σ-compatible ones.
std::vector<StateValues> extremal_compatible_states(const FiniteBLAlgebra & a, std::span<const Element> sigma);

/// x ↦ s(σ(x)) for a state s on the image subalgebra (in its own indices).
/// Throws NotAState when s is not a state there.
StateValues pull_back_state(const FiniteBLAlgebra & a, const StateOperator & op, std::span<const Rational> s);

/// Restriction of a σ-compatible state to the image subalgebra.
StateValues restrict_to_image(const FiniteBLAlgebra & a, const StateOperator & op, std::span<const Rational> s);

struct CorrespondenceReport {
    std::vector<StateValues> compatible_extremals; // on A
    std::vector<StateValues> image_extremals;      // on σ(A), in its indices
    bool phi_psi_identity = false;                 // φ(ψ(s')) = s'
    bool psi_phi_identity = false;                 // ψ(φ(s)) = s
    bool psi_onto = false;                         // ψ maps image extremals onto compatible extremals
    bool psi_compatible = false;                   // every ψ(s') is a σ-compatible state
    bool convex_preserved = false;                 // on sampled mixtures
    std::size_t samples = 0;

    bool holds() const
    {
        return phi_psi_identity && psi_phi_identity && psi_onto && psi_compatible && convex_preserved;
    }
};

CorrespondenceReport sigma_compatible_correspondence(const FiniteBLAlgebra & a, const StateOperator & op,
    std::size_t samples = 8, std::uint32_t seed = 1);

} // namespace blstate
