#include "fixtures.hh"
#include "oracles.hh"

#include <blstate/algebra.hh>

#include <doctest.h>

using namespace blstate;

namespace {

oracle::Raw raw(const OperationTables & t)
{
    return {t.size(), t.meet, t.join, t.prod, t.impl, t.bottom, t.top};
}

} // namespace

TEST_CASE("example tables verify")
{
    auto r = verify_bl_axioms(fixtures::example_tables());
    REQUIRE(std::holds_alternative<FiniteBLAlgebra>(r));
    const auto & a = std::get<FiniteBLAlgebra>(r);
    CHECK(a.size() == 4);
    CHECK(a.bottom() == 0);
    CHECK(a.top() == 3);
    CHECK(a.prod(2, 1) == 1); // b⊙a = a
    CHECK(a.impl(2, 1) == 1); // b→a = a
    CHECK(a.oplus(1, 1) == 3);
}

TEST_CASE("recomputed residuum matches the printed table")
{
    const auto t = fixtures::example_tables();
    CHECK(residuum_from_monoid(4, t.meet, t.prod) == t.impl);
    CHECK(residuum_from_monoid(4, t.meet, t.prod) == oracle::residuum_on_chain(4, t.prod));
}

TEST_CASE("residuum of the five-element Lukasiewicz chain")
{
    const auto o = oracle::lukasiewicz(4);
    const auto r = residuum_from_monoid(5, o.meet, o.prod);
    CHECK(r == o.impl);
    CHECK(r[3 * 5 + 1] == 2);
    for (Element b = 0; b < 5; ++b)
        CHECK(r[0 * 5 + b] == 4);
}

TEST_CASE("residuum missing")
{
    // two incomparable atoms below a top; every product is bottom except with the top
    OperationTables t;
    t.labels = {"0", "p", "q", "1"};
    t.meet = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
    t.prod = {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 1, 2, 3};
    // p⊙z ≤ 0 holds for z ∈ {0, p, q}, which has no greatest element
    CHECK_THROWS_AS(residuum_from_monoid(4, t.meet, t.prod), NoResiduum);
}

TEST_CASE("mutated example reports divisibility")
{
    auto t = fixtures::example_tables();
    t.prod[1 * 4 + 2] = 0;
    t.prod[2 * 4 + 1] = 0;
    t.impl = residuum_from_monoid(4, t.meet, t.prod);

    const auto expected = oracle::first_divisibility_failure(raw(t));
    REQUIRE(expected);
    CHECK(*expected == std::pair<std::uint32_t, std::uint32_t>{2, 1});

    auto r = verify_bl_axioms(t);
    REQUIRE(std::holds_alternative<AxiomViolation>(r));
    const auto & v = std::get<AxiomViolation>(r);
    CHECK(v.axiom == Axiom::divisibility);
    CHECK(v.witness == std::vector<Element>{2, 1});
    CHECK_FALSE(law_holds_at(t, v));
    CHECK_THROWS_AS(seal(t), ValidationError);
}

TEST_CASE("mutated product with the printed residuum fails adjointness")
{
    auto t = fixtures::example_tables();
    t.prod[1 * 4 + 2] = 0;
    t.prod[2 * 4 + 1] = 0;
    auto r = verify_bl_axioms(t);
    REQUIRE(std::holds_alternative<AxiomViolation>(r));
    CHECK(std::get<AxiomViolation>(r).axiom == Axiom::adjointness);
    CHECK_FALSE(law_holds_at(t, std::get<AxiomViolation>(r)));
}

TEST_CASE("shape violations")
{
    auto t = fixtures::example_tables();
    SUBCASE("duplicate label")
    {
        t.labels[1] = "0";
        auto r = verify_bl_axioms(t);
        REQUIRE(std::holds_alternative<AxiomViolation>(r));
        CHECK(std::get<AxiomViolation>(r).axiom == Axiom::shape);
    }
    SUBCASE("entry out of range")
    {
        t.prod[5] = 9;
        auto r = verify_bl_axioms(t);
        REQUIRE(std::holds_alternative<AxiomViolation>(r));
        CHECK(std::get<AxiomViolation>(r).axiom == Axiom::shape);
    }
    SUBCASE("short table")
    {
        t.join.pop_back();
        auto r = verify_bl_axioms(t);
        REQUIRE(std::holds_alternative<AxiomViolation>(r));
        CHECK(std::get<AxiomViolation>(r).axiom == Axiom::shape);
    }
}

TEST_CASE("derived operations")
{
    const auto a = four_element_example().algebra;
    CHECK(a.ord(1) == ExtendedNat(2));
    CHECK_FALSE(a.ord(2).is_finite());
    CHECK(a.ord(2) > ExtendedNat(1000));
    CHECK(a.ord(2).to_string() == "inf");
    CHECK(a.pow(1, 0) == a.top());
    CHECK(a.pow(1, 1) == 1);
    CHECK(a.pow(1, 2) == 0);
    for (auto x : a.elements())
        CHECK(a.dist(x, x) == a.top());
    const Element args[] = {1, 1};
    CHECK(std::get<Element>(derived(a, DerivedOp::oplus, args)) == 3);
    CHECK(std::get<ExtendedNat>(derived(a, DerivedOp::ord, std::span(args, 1))) == ExtendedNat(2));
    CHECK(std::get<Element>(derived(a, DerivedOp::pow, std::span(args, 1), 3)) == 0);
}

TEST_CASE("variety flags")
{
    const auto a = four_element_example().algebra;
    const auto v = classify_variety(a);
    CHECK_FALSE(v.is_mv.holds);
    CHECK(v.is_mv.witness == std::vector<Element>{2});
    CHECK(v.is_linear.holds);
    CHECK_FALSE(v.is_godel.holds);

    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(classify_variety(mv_chain(n)).is_mv.holds);
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto g = classify_variety(godel_chain(n));
        CHECK(g.is_godel.holds);
        CHECK(g.is_linear.holds);
    }
    CHECK_FALSE(classify_variety(direct_product(mv_chain(1), mv_chain(1))).is_linear.holds);
}

TEST_CASE("residuated lattice laws hold on every sample algebra")
{
    for (const auto & a : fixtures::small_algebras()) {
        CAPTURE(a.size());
        const auto t = a.tables();
        CHECK(residuum_from_monoid(a.size(), t.meet, t.prod) == t.impl);
        for (auto x : a.elements())
            for (auto y : a.elements()) {
                CHECK(a.neg(a.prod(x, y)) == a.impl(x, a.neg(y)));
                CHECK(a.impl(x, a.meet(x, y)) == a.impl(x, y));
                // orthogonality has three equivalent forms
                const bool o1 = a.leq(a.neg(a.neg(x)), a.neg(y));
                const bool o2 = a.leq(x, a.neg(y));
                const bool o3 = a.prod(x, y) == a.bottom();
                CHECK(o1 == o2);
                CHECK(o2 == o3);
                if (o3)
                    CHECK(a.impl(a.neg(y), a.neg(a.neg(x))) == a.impl(a.neg(x), a.neg(a.neg(y))));
                for (auto z : a.elements()) {
                    CHECK(a.impl(x, a.impl(y, z)) == a.impl(a.prod(x, y), z));
                    CHECK(a.leq(a.impl(x, y), a.impl(a.prod(x, z), a.prod(y, z))));
                    if (a.leq(x, y)) {
                        CHECK(a.leq(a.prod(x, z), a.prod(y, z)));
                        CHECK(a.leq(a.impl(z, x), a.impl(z, y)));
                    }
                }
            }
    }
}

TEST_CASE("powers stabilise")
{
    for (const auto & a : fixtures::small_algebras())
        for (auto x : a.elements()) {
            const auto ps = a.powers(x);
            REQUIRE_FALSE(ps.empty());
            CHECK(a.prod(ps.back(), x) == ps.back());
            CHECK(ps.size() <= a.size());
        }
}

TEST_CASE("element sets order by size then members")
{
    ElementSet a(5, {4}), b(5, {0, 4}), c(5, {1, 2}), d(5, {0, 1, 4});
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < d);
    CHECK(b.to_string() == "{0,4}");
    CHECK((b & d) == b);
    CHECK((a | c) == ElementSet(5, {1, 2, 4}));
}
