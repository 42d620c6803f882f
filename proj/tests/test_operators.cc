#include "fixtures.hh"
#include "oracles.hh"

#include <blstate/families.hh>
#include <blstate/operators.hh>

#include <doctest.h>

using namespace blstate;

namespace {

oracle::Raw raw(const FiniteBLAlgebra & a)
{
    const auto & t = a.tables();
    return {t.size(), t.meet, t.join, t.prod, t.impl, t.bottom, t.top};
}

std::vector<std::vector<Element>> maps(const std::vector<StateOperator> & ops)
{
    std::vector<std::vector<Element>> out;
    for (const auto & op : ops)
        out.push_back(op.map());
    return out;
}

} // namespace

TEST_CASE("operator of the four element example")
{
    const auto [a, op] = four_element_example();
    CHECK(op.operator_class() == OperatorClass::morphism);
    CHECK(op.is_strong());
    CHECK(op.is_endomorphism());
    CHECK_FALSE(op.verdict().consequence_failure);
    CHECK(oracle::is_state_operator(raw(a), op.map()));
    CHECK(image_subalgebra(a, op).embedding == std::vector<Element>{0, 1, 3});
}

TEST_CASE("verify_operator rejects malformed maps")
{
    const auto a = mv_chain(2);
    CHECK_THROWS_AS(verify_operator(a, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_operator(a, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("non-state maps carry witnesses")
{
    const auto a = mv_chain(2);
    const auto op = verify_operator(a, {1, 1, 2});
    CHECK_FALSE(op.is_state());
    REQUIRE(op.verdict().state_failure);
    CHECK(op.verdict().state_failure->law == "(1)");
    CHECK(op.operator_class() == OperatorClass::none);

    const auto constant = verify_operator(a, {0, 0, 0});
    REQUIRE(constant.verdict().consequence_failure);
    CHECK(constant.verdict().consequence_failure->law == "(a)");
}

TEST_CASE("sigma_a on S4 x S4 with a = (0,4) is rejected")
{
    const Comet c(0, {4, 4});
    const auto s = sigma_a(c, c.embed({0, 4}));
    CHECK(s.a_star == c.embed({4, 0}));
    CHECK_FALSE(s.covers);
    CHECK_FALSE(s.op.is_state());
    const Element x = c.embed({3, 1});
    CHECK(x == 16);
    REQUIRE(s.op.verdict().consequence_failure);
    CHECK(s.op.verdict().consequence_failure->law == "(d)");
    CHECK(s.op.verdict().consequence_failure->witness == std::vector<Element>{x, x});
    const auto & a = c.algebra();
    CHECK(s.op(a.prod(x, x)) == c.embed({0, 0}));
    CHECK(a.prod(s.op(x), s.op(x)) == c.embed({2, 0}));
}

TEST_CASE("enumeration matches the brute force oracle")
{
    for (const auto & a : fixtures::small_algebras()) {
        if (a.size() > 6)
            continue;
        CAPTURE(a.size());
        const auto expected = oracle::all_state_operators(raw(a));
        const auto pruned = enumerate_operators(a, SearchClass::state);
        CHECK(maps(pruned) == expected);
        CHECK(maps(enumerate_operators_brute_force(a, SearchClass::state)) == expected);
        CHECK(maps(enumerate_operators(a, SearchClass::state, 3)) == expected);
    }
}

TEST_CASE("every class agrees with brute force on small algebras")
{
    for (const auto & a : fixtures::small_algebras()) {
        if (a.size() > 6)
            continue;
        for (auto c : {SearchClass::state, SearchClass::strong, SearchClass::morphism, SearchClass::endomorphism}) {
            CAPTURE(to_string(c));
            const auto pruned = enumerate_operators(a, c);
            CHECK(maps(pruned) == maps(enumerate_operators_brute_force(a, c)));
            for (const auto & op : pruned)
                CHECK(in_class(op, c));
        }
    }
}

TEST_CASE("Lukasiewicz chains carry only the identity")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto a = mv_chain(n);
        const auto ops = enumerate_operators(a, SearchClass::state);
        REQUIRE(ops.size() == 1);
        CHECK(ops.front() == identity_operator(a));
    }
}

TEST_CASE("state operators on chains are idempotent endomorphisms")
{
    for (const auto & a : fixtures::small_algebras()) {
        if (! a.is_linear())
            continue;
        for (const auto & op : enumerate_operators(a, SearchClass::state)) {
            CHECK(op.is_endomorphism());
            CHECK(op.is_morphism());
            for (auto x : a.elements())
                CHECK(op(op(x)) == op(x));
        }
    }
}

TEST_CASE("Goedel chains")
{
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto g = godel_chain(n);
        const auto ops = enumerate_operators(g, SearchClass::state);
        CHECK(ops.size() == n - 1);
        for (Element a = 0; a < n; ++a) {
            const auto lower = godel_sigma_lower(g, a);
            CHECK(lower.is_state());
            CHECK(std::find(ops.begin(), ops.end(), lower) != ops.end());
            if (a != 0) {
                const auto upper = godel_sigma_upper(g, a);
                CHECK(upper.is_state());
                CHECK(upper.is_endomorphism());
            }
        }
    }
    CHECK(maps(enumerate_operators(godel_chain(3), SearchClass::state))
        == std::vector<std::vector<Element>>{{0, 1, 2}, {0, 2, 2}});
}

TEST_CASE("coordinate operators on a comet")
{
    const Comet c(1, {1, 1});
    const auto & a = c.algebra();
    REQUIRE(a.size() == 5);
    std::vector<StateOperator> family;
    for (const std::vector<std::size_t> & j : {std::vector<std::size_t>{}, {0}, {1}, {0, 1}}) {
        const auto op = sigma_J(c, j);
        CHECK(op.is_state());
        CHECK(op.is_endomorphism());
        CHECK(op(0) == 0);
        family.push_back(op);
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t k = i + 1; k < family.size(); ++k)
            CHECK_FALSE(family[i] == family[k]);

    const auto all = enumerate_operators(a, SearchClass::state);
    CHECK(maps(all) == maps(enumerate_operators_brute_force(a, SearchClass::state)));
    CHECK(maps(all) == oracle::all_state_operators(raw(a)));
    CHECK(all.size() >= 4);
    for (const auto & op : family)
        CHECK(std::find(all.begin(), all.end(), op) != all.end());
    CHECK(sigma_J(c, {}) == identity_operator(a));
}

TEST_CASE("sigma_a on covered idempotents")
{
    const Comet c(1, {2, 1});
    const auto a = c.embed({0, 1});
    const auto s = sigma_a(c, a);
    CHECK(s.a_star == c.embed({2, 0}));
    CHECK(s.covers);
    CHECK(s.op.is_state());
    CHECK(s.op.is_endomorphism());
    for (const std::vector<std::size_t> & j : {std::vector<std::size_t>{}, {0}, {1}, {0, 1}})
        CHECK_FALSE(s.op == sigma_J(c, j));

    const Comet d(0, {2, 2, 1});
    const auto t = sigma_a(d, d.embed({0, 0, 1}));
    CHECK(t.a_star == d.embed({2, 2, 0}));
    CHECK(t.covers);
    CHECK(t.op.is_state());

    CHECK(sigma_a(c, c.bottom_of_top()).op == sigma_J(c, {0, 1}));
    CHECK(sigma_a(c, c.algebra().top()).op == sigma_J(c, {}));
    CHECK_THROWS_AS(sigma_a(c, c.embed({1, 0})), ShapeMismatch);
}

TEST_CASE("enumeration does not depend on the worker count")
{
    const auto a = direct_product(mv_chain(2), mv_chain(2));
    const auto one = maps(enumerate_operators(a, SearchClass::state, 1));
    CHECK(one == maps(enumerate_operators(a, SearchClass::state, 2)));
    CHECK(one == maps(enumerate_operators(a, SearchClass::state, 8)));
    for (const auto & m : one)
        CHECK(oracle::is_state_operator(raw(a), m));
}

TEST_CASE("nonstrong search")
{
    for (const auto & a : fixtures::small_algebras())
        for (const auto & op : search_nonstrong(a)) {
            CHECK(op.is_state());
            CHECK_FALSE(op.is_strong());
        }
}

TEST_CASE("kernels and state filters of the four element example")
{
    const auto [a, op] = four_element_example();
    const auto r = kernel_and_faithfulness(a, op);
    CHECK(r.kernel == ElementSet(4, {2, 3}));
    CHECK_FALSE(r.faithful);
    CHECK(r.radical_faithful);

    const auto sf = state_filters(a, op.map());
    CHECK(sf == std::vector{ElementSet(4, {3}), ElementSet(4, {2, 3}), ElementSet::full(4)});
    CHECK(maximal_state_filters(a, op.map()) == std::vector{ElementSet(4, {2, 3})});
    CHECK(rad_sigma(a, op.map()) == ElementSet(4, {2, 3}));

    const auto c = classify_state_algebra(a, op);
    CHECK(c.ssbl_simple.holds);
    CHECK(c.ker_maximal);
    CHECK(c.sssbl_semisimple.holds);
    CHECK(c.algebra.local.holds);
    CHECK_FALSE(c.algebra.perfect.holds);
}

TEST_CASE("state filter generation agrees across constructions")
{
    for (const auto & a : fixtures::small_algebras()) {
        if (a.size() > 6)
            continue;
        for (const auto & op : enumerate_operators(a, SearchClass::state)) {
            const auto & s = op.map();
            const auto sf = state_filters(a, s);
            for (const auto & f : sf) {
                CHECK(is_state_filter(a, s, f));
                CHECK(state_filter_closure(a, s, f) == f);
                const bool proper = ! f.contains(a.bottom());
                const bool maximal = std::find(sf.begin(), sf.end(), f) != sf.end() && proper
                    && std::none_of(sf.begin(), sf.end(), [&](const ElementSet & g) {
                           return g != f && ! g.contains(a.bottom()) && (f & g) == f;
                       });
                const auto ms = maximal_state_filters(a, s);
                CHECK(maximal == (std::find(ms.begin(), ms.end(), f) != ms.end()));
                if (proper)
                    CHECK(maximal == satisfies_state_maximality_criterion(a, s, f));
                for (auto x : a.elements())
                    CHECK(state_filter_generated_ext(a, s, f, x) == state_filter_closure(a, s, f | ElementSet(a.size(), {x})));
            }
            for (auto x : a.elements()) {
                const ElementSet single(a.size(), {x});
                CHECK(state_filter_generated(a, s, single) == state_filter_closure(a, s, single));
            }
            CHECK(kernel(a, s) == preimage_of(a, s, ElementSet(a.size(), {a.top()})));
        }
    }
}

TEST_CASE("state filter generation needs a state filter")
{
    const auto [a, op] = four_element_example();
    CHECK_THROWS_AS(state_filter_generated_ext(a, op.map(), ElementSet(4, {1, 3}), 2), NotAStateFilter);
}

TEST_CASE("MV-style and BL-style axioms agree on MV carriers")
{
    std::vector<FiniteBLAlgebra> carriers;
    for (std::size_t n = 1; n <= 3; ++n)
        carriers.push_back(mv_chain(n));
    carriers.push_back(direct_product(mv_chain(1), mv_chain(1)));
    carriers.push_back(direct_product(mv_chain(1), mv_chain(2)));
    for (const auto & a : carriers) {
        const auto n = a.size();
        std::vector<Element> m(n, 0);
        while (true) {
            const auto r = mv_equivalence_check(a, m);
            CHECK(r.agree);
            CHECK(r.strong_if_state);
            CHECK(r.additive);
            std::size_t i = n;
            while (i > 0 && ++m[i - 1] == n)
                m[--i] = 0;
            if (i == 0)
                break;
        }
    }
    CHECK_THROWS_AS(mv_equivalence_check(four_element_example().algebra, std::vector<Element>{0, 1, 3, 3}), NotMV);
}
