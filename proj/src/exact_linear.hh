#pragma once

#include <blstate/states.hh>

#include <optional>
#include <vector>

namespace blstate::detail {

using Row = std::vector<Rational>;

/// Solution set {particular + Σ t_k basis[k]} of an affine system.
struct AffineSpace {
    Row particular;
    std::vector<Row> basis;
};

/// Rows are [a_1 ... a_m | b]. Returns nullopt when inconsistent.
std::optional<AffineSpace> solve_affine(std::vector<Row> rows, std::size_t unknowns);

/// Bound on one coordinate: x_var ≥ value (lower) or x_var ≤ value.
struct Bound {
    std::size_t var;
    Rational value;
    bool lower;
};

/// Vertices of {x ∈ space : all bounds hold}, sorted and without repeats.
/// With `first_only` the search stops at the first vertex found.
std::vector<Row> vertices(const AffineSpace & space, const std::vector<Bound> & bounds, bool first_only = false);

} // namespace blstate::detail
