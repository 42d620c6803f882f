#include "fixtures.hh"

#include <blstate/document.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>

using namespace blstate;

namespace {

const char * const example_text = R"({
  "format": "bl-algebra/1",
  "name": "example-3-4",
  "labels": ["0", "a", "b", "1"],
  "tables": {
    "meet": [
      ["0", "0", "0", "0"],
      ["0", "a", "a", "a"],
      ["0", "a", "b", "b"],
      ["0", "a", "b", "1"]
    ],
    "join": [
      ["0", "a", "b", "1"],
      ["a", "a", "b", "1"],
      ["b", "b", "b", "1"],
      ["1", "1", "1", "1"]
    ],
    "prod": [
      ["0", "0", "0", "0"],
      ["0", "0", "a", "a"],
      ["0", "a", "b", "b"],
      ["0", "a", "b", "1"]
    ],
    "impl": [
      ["1", "1", "1", "1"],
      ["a", "1", "1", "1"],
      ["0", "a", "1", "1"],
      ["0", "a", "b", "1"]
    ]
  },
  "operators": [
    {"name": "sigma", "map": ["0", "a", "1", "1"]}
  ],
  "states": [
    {"name": "half", "values": ["0", "1/2", "1", "1"]}
  ]
}
)";

std::string replace_once(std::string text, const std::string & from, const std::string & to)
{
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

ParseError parse_failure(const std::string & text)
{
    try {
        parse_algebra(text);
    } catch (const ParseError & e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}

} // namespace

TEST_CASE("the example document parses, verifies and round-trips")
{
    const auto doc = parse_algebra(example_text);
    CHECK(serialize_algebra(doc) == example_text);

    const auto l = load(doc);
    const auto example = four_element_example();
    CHECK(l.name == "example-3-4");
    CHECK(l.algebra == example.algebra);
    REQUIRE(l.operators.size() == 1);
    CHECK(l.operators.front().name == "sigma");
    CHECK(l.operators.front().map == example.op.map());
    REQUIRE(l.states.size() == 1);
    CHECK(to_string(l.states.front().values) == "(0, 1/2, 1, 1)");
}

TEST_CASE("documents of the fixture algebras round-trip")
{
    for (const auto & a : fixtures::small_algebras()) {
        const auto doc = from_algebra(a, "x", {{"id", std::vector<Element>(a.elements().begin(), a.elements().end())}});
        const auto text = serialize_algebra(doc);
        const auto back = parse_algebra(text);
        CHECK(back == doc);
        CHECK(serialize_algebra(back) == text);
        CHECK(load(back).algebra == a);
    }
}

TEST_CASE("prod alone: chain order from the labels, residuum derived")
{
    const auto expected = mv_chain(3);
    AlgebraDocument doc;
    doc.labels = expected.labels();
    doc.prod = expected.tables().prod;
    const auto text = serialize_algebra(doc);
    CHECK(text.find("\"impl\"") == std::string::npos);
    CHECK(text.find("\"meet\"") == std::string::npos);

    const auto loaded = load(parse_algebra(text));
    // Łukasiewicz residuum on 0 < 1 < 2 < 3: x → y = min(3, 3 - x + y)
    std::vector<Element> impl;
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y <= 3; ++y)
            impl.push_back(static_cast<Element>(std::min(3, 3 - x + y)));
    CHECK(loaded.algebra.tables().impl == impl);
    CHECK(loaded.algebra == expected);
}

TEST_CASE("empty or missing tables are parse errors")
{
    const std::string head = R"({"format": "bl-algebra/1", "labels": ["0", "1"], )";
    CHECK_THROWS_AS(parse_algebra(head + R"("tables": {}})"), ParseError);
    CHECK_THROWS_AS(parse_algebra(head + R"("tables": {"prod": []}})"), ParseError);
    CHECK_THROWS_AS(parse_algebra(head + R"("tables": {"prod": [[], []]}})"), ParseError);
    CHECK_THROWS_AS(parse_algebra(R"({"format": "bl-algebra/1", "labels": [], "tables": {"prod": [[]]}})"), ParseError);
    CHECK_THROWS_AS(parse_algebra(head + "}"), ParseError);
}

TEST_CASE("strict parsing reports positions")
{
    SUBCASE("unknown field")
    {
        const auto e = parse_failure(replace_once(example_text, "\"labels\"", "\"colour\": 1,\n  \"labels\""));
        CHECK(e.line() == 4);
        CHECK(e.column() == 13);
        CHECK(e.message().find("unknown field 'colour'") != std::string::npos);
    }
    SUBCASE("unknown label inside a table")
    {
        const auto e = parse_failure(replace_once(example_text, R"(["0", "a", "b", "b"],
      ["0", "a", "b", "1"]
    ],
    "impl")", R"(["0", "a", "q", "b"],
      ["0", "a", "b", "1"]
    ],
    "impl")"));
        CHECK(e.line() == 21);
        CHECK(e.column() == 18);
        CHECK(e.message().find("unknown label 'q'") != std::string::npos);
    }
    SUBCASE("duplicate key")
    {
        const auto e = parse_failure(replace_once(example_text, "\"name\": \"example-3-4\"", "\"name\": \"x\", \"name\": \"y\""));
        CHECK(e.line() == 3);
        CHECK(e.column() == 16);
    }
    SUBCASE("syntax error")
    {
        const auto e = parse_failure(replace_once(example_text, "\"labels\": [", "\"labels\" ["));
        CHECK(e.line() == 4);
        CHECK(e.message().find("syntax error") != std::string::npos);
    }
    SUBCASE("short row")
    {
        const auto e = parse_failure(replace_once(example_text, R"(["a", "1", "1", "1"])", R"(["a", "1", "1"])"));
        CHECK(e.line() == 26);
        CHECK(e.message().find("expected 4 entries") != std::string::npos);
    }
    SUBCASE("bad rational")
    {
        const auto e = parse_failure(replace_once(example_text, "\"1/2\"", "\"1/0\""));
        CHECK(e.line() == 35);
        CHECK(e.column() == 38);
    }
    SUBCASE("wrong format")
    {
        CHECK_THROWS_AS(parse_algebra(replace_once(example_text, "bl-algebra/1", "bl-algebra/2")), ParseError);
    }
    SUBCASE("meet without join")
    {
        const auto start = std::string(example_text).find("    \"join\"");
        const auto end = std::string(example_text).find("    \"prod\"");
        std::string text = example_text;
        text.erase(start, end - start);
        CHECK_THROWS_AS(parse_algebra(text), ParseError);
    }
}

TEST_CASE("non-canonical input normalises on output")
{
    const auto text = replace_once(replace_once(example_text, "\"1/2\"", "\"2/4\""), "  \"format\"", "\"format\"");
    const auto doc = parse_algebra(text);
    CHECK(serialize_algebra(doc) == example_text);
}

TEST_CASE("axiom failures surface as validation errors")
{
    const auto doc = parse_algebra(replace_once(example_text, R"(["0", "0", "a", "a"])", R"(["0", "0", "b", "a"])"));
    try {
        load(doc);
        FAIL("expected a validation error");
    } catch (const ValidationError & e) {
        CHECK(e.violation().axiom == Axiom::monoid);
        CHECK_FALSE(e.violation().witness.empty());
    }

    // The diamond lattice with ⊙ = ∧ has no greatest z with a ∧ z = 0.
    AlgebraDocument diamond;
    diamond.labels = {"0", "a", "b", "c", "1"};
    auto rank = [](Element x) { return x == 0 ? 0 : x == 4 ? 2 : 1; };
    std::vector<Element> meet, join;
    for (Element x = 0; x < 5; ++x)
        for (Element y = 0; y < 5; ++y) {
            if (x == y || rank(x) != rank(y)) {
                meet.push_back(rank(x) <= rank(y) ? x : y);
                join.push_back(rank(x) >= rank(y) ? x : y);
            } else {
                meet.push_back(0);
                join.push_back(4);
            }
        }
    diamond.meet = meet;
    diamond.join = join;
    diamond.prod = meet;
    try {
        load(diamond);
        FAIL("expected a validation error");
    } catch (const ValidationError & e) {
        CHECK(e.violation().axiom == Axiom::adjointness);
        CHECK(e.violation().witness.size() == 2);
    }
}

TEST_CASE("the sample documents load and are canonical")
{
    std::size_t seen = 0;
    for (const auto & entry : std::filesystem::directory_iterator(std::string(BLSTATE_DOCS_DIR) + "/examples")) {
        std::ifstream in(entry.path(), std::ios::binary);
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        const auto doc = read_document(entry.path());
        CHECK(serialize_algebra(doc) == text);
        const auto loaded = load(doc);
        for (const auto & op : loaded.operators)
            CHECK(verify_operator(loaded.algebra, op.map).is_state());
        ++seen;
    }
    CHECK(seen == 3);
}
