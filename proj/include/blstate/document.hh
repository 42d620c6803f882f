#pragma once

#include <blstate/algebra.hh>
#include <blstate/claims.hh>
#include <blstate/states.hh>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blstate {

inline constexpr std::string_view document_format = "bl-algebra/1";

/// Malformed document text. Line and column are 1-based; the column
/// counts code points.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string & message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string & message() const { return message_; }

private:
    std::size_t line_, column_;
    std::string message_;
};

struct NamedState {
    std::string name;
    StateValues values;

    bool operator==(const NamedState &) const = default;
};

/// A parsed document. Table entries and operator maps are stored as element
/// indices into `labels`; absent tables stay absent so that serialization
/// reproduces the input.
struct AlgebraDocument {
    std::optional<std::string> name;
    std::vector<std::string> labels;
    std::optional<std::vector<Element>> meet, join;
    std::vector<Element> prod;
    std::optional<std::vector<Element>> impl;
    std::vector<NamedOperator> operators;
    std::vector<NamedState> states;

    bool operator==(const AlgebraDocument &) const = default;
};

/// Strict parse: unknown fields, duplicate keys, unknown labels and
/// malformed grids are ParseErrors.
AlgebraDocument parse_algebra(std::string_view text);

/// Canonical text: fixed field order, two-space indent, one table row per
/// line, empty lists omitted, rationals in lowest terms.
std::string serialize_algebra(const AlgebraDocument & doc);

AlgebraDocument from_algebra(const FiniteBLAlgebra & a, std::optional<std::string> name = {},
    std::vector<NamedOperator> operators = {}, std::vector<NamedState> states = {});

struct LoadedAlgebra {
    std::string name;
    FiniteBLAlgebra algebra;
    std::vector<NamedOperator> operators;
    std::vector<NamedState> states;
};

/// Fills in the derived tables and seals the algebra. Throws
/// ValidationError when an axiom fails or the residuum does not exist.
LoadedAlgebra load(const AlgebraDocument & doc, std::string fallback_name = "algebra");

/// Reads and parses a file; I/O failures become ParseError at 1:1.
AlgebraDocument read_document(const std::filesystem::path & path);

} // namespace blstate
