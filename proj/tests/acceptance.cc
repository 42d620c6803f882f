// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <blstate/constructors.hh>
#include <blstate/families.hh>
#include <blstate/filters.hh>
#include <blstate/operators.hh>
#include <blstate/states.hh>
#include <blstate/suite.hh>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace blstate;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool condition, const std::string & what)
    {
        if (! condition && ok) {
            ok = false;
            note = what;
        }
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::vector<Element>> maps(const std::vector<StateOperator> & ops)
{
    std::vector<std::vector<Element>> out;
    for (const auto & op : ops)
        out.push_back(op.map());
    return out;
}

/// Every record of the listed claims over the default corpus; none may fail.
void no_failures(Outcome & o, const std::vector<std::string> & claims, std::size_t * checked = nullptr)
{
    const auto report = run_suite(default_corpus(), {claims, 1, true});
    std::size_t passed = 0;
    for (const auto & r : report.records) {
        o.require(r.verdict != Verdict::fail, r.claim + " on " + r.instance + ": " + r.witness);
        passed += r.verdict == Verdict::pass ? 1 : 0;
    }
    if (checked)
        *checked += passed;
}

OperationTables example_tables()
{
    OperationTables t;
    t.labels = {"0", "a", "b", "1"};
    t.meet = chain_meet(4);
    t.join = chain_join(4);
    t.prod = {0, 0, 0, 0, /**/ 0, 0, 1, 1, /**/ 0, 1, 2, 2, /**/ 0, 1, 2, 3};
    t.impl = {3, 3, 3, 3, /**/ 1, 3, 3, 3, /**/ 0, 1, 3, 3, /**/ 0, 1, 2, 3};
    t.bottom = 0;
    t.top = 3;
    return t;
}

Outcome example_end_to_end()
{
    Outcome o;
    const auto start = Clock::now();
    const auto v = verify_bl_axioms(example_tables());
    o.require(std::holds_alternative<FiniteBLAlgebra>(v), "tables rejected");
    if (! o.ok)
        return o;
    const auto & a = std::get<FiniteBLAlgebra>(v);
    const auto mv = classify_variety(a).is_mv;
    o.require(! mv.holds && mv.witness == std::vector<Element>{a.element("b")}, "is_mv should fail at b");
    const auto op = verify_operator(a, {0, 1, 3, 3});
    o.require(op.is_morphism() && op.preserves_impl(), "σ should be a morphism preserving →");
    const auto image = image_subalgebra(a, op);
    o.require(image.embedding == std::vector<Element>{0, 1, 3}, "σ(A) should be {0,a,1}");
    o.require(find_isomorphism(image.algebra, mv_chain(2)).has_value(), "σ(A) should be the three element MV-chain");
    const auto t = seconds_since(start);
    o.require(t < 1.0, "took longer than 1 s");
    o.note = o.ok ? "σ(A)={0,a,1}, is_mv fails at b" : o.note;
    return o;
}

Outcome chains_and_linear_algebras()
{
    Outcome o;
    const auto start = Clock::now();
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto a = mv_chain(n);
        const auto ops = enumerate_operators(a, SearchClass::state);
        o.require(ops.size() == 1 && ops.front() == identity_operator(a), "mv_chain(" + std::to_string(n) + ") has more than the identity");
        if (n <= 4)
            o.require(maps(enumerate_operators_brute_force(a, SearchClass::state)) == maps(ops),
                "brute force differs on mv_chain(" + std::to_string(n) + ")");
    }
    std::size_t linear = 0;
    for (const auto & c : default_corpus()) {
        const auto & a = c.algebra;
        if (! a.is_linear())
            continue;
        ++linear;
        const auto ops = enumerate_operators(a, SearchClass::state);
        for (const auto & op : ops) {
            const bool idempotent = std::all_of(a.elements().begin(), a.elements().end(), [&](Element x) { return op(op(x)) == op(x); });
            o.require(idempotent && is_homomorphism(a, a, op.map()), c.name + ": not an idempotent endomorphism");
        }
        if (a.size() <= 5)
            o.require(maps(enumerate_operators_brute_force(a, SearchClass::state)) == maps(ops), c.name + ": brute force differs");
    }
    o.require(seconds_since(start) < 30.0, "took longer than 30 s");
    if (o.ok)
        o.note = std::to_string(linear) + " linear corpus algebras";
    return o;
}

Outcome coordinate_operators()
{
    Outcome o;
    const auto start = Clock::now();
    const Comet c(1, {1, 1});
    const auto & a = c.algebra();
    std::vector<StateOperator> family;
    for (const std::vector<std::size_t> & j : {std::vector<std::size_t>{}, {0}, {1}, {0, 1}}) {
        const auto s = sigma_J(c, j);
        o.require(s.is_state(), "σ_J is not a state operator");
        o.require(std::find(family.begin(), family.end(), s) == family.end(), "σ_J repeats");
        family.push_back(s);
    }
    const auto pruned = enumerate_operators(a, SearchClass::state);
    const auto brute = enumerate_operators_brute_force(a, SearchClass::state);
    o.require(maps(pruned) == maps(brute), "pruned and brute force enumerations differ");
    o.require(pruned.size() >= 4, "fewer than 4 state operators");
    for (const auto & s : family)
        o.require(std::find(pruned.begin(), pruned.end(), s) != pruned.end(), "σ_J missing from the enumeration");
    o.require(seconds_since(start) < 300.0, "took longer than 5 min");
    if (o.ok)
        o.note = std::to_string(a.size()) + " elements, " + std::to_string(pruned.size()) + " state operators (brute force agrees)";
    return o;
}

Outcome rejected_sigma_a()
{
    Outcome o;
    const auto start = Clock::now();
    const Comet c(0, {4, 4});
    const auto & a = c.algebra();
    const auto s = sigma_a(c, c.embed({0, 4}));
    const auto x = c.embed({3, 1});
    o.require(! s.op.is_state(), "σ_a accepted");
    const auto & f = s.op.verdict().consequence_failure;
    o.require(f && f->law == "(d)" && f->witness == std::vector<Element>{x, x}, "rejection witness is not x=(3,1)");
    o.require(s.op(a.prod(x, x)) == c.embed({0, 0}), "σ(x⊙x) should be (0,0)");
    o.require(a.prod(s.op(x), s.op(x)) == c.embed({2, 0}), "σ(x)⊙σ(x) should be (2,0)");
    o.require(seconds_since(start) < 1.0, "took longer than 1 s");
    if (o.ok)
        o.note = "rejected at x=(3,1): σ(x⊙x)=(0,0), σ(x)⊙σ(x)=(2,0)";
    return o;
}

Outcome lemma_suite()
{
    Outcome o;
    std::vector<std::string> claims;
    for (char part = 'a'; part <= 'r'; ++part)
        claims.push_back(std::string("Lemma-3.5-") + part);
    for (const char * id : {"Lemma-3.9-a", "Lemma-3.9-b", "Lemma-3.9-c", "Lemma-3.10-1", "Lemma-3.10-2", "Lemma-3.10-3"})
        claims.push_back(id);
    std::size_t checked = 0;
    no_failures(o, claims, &checked);
    if (o.ok)
        o.note = std::to_string(checked) + " passing records, no violations";
    return o;
}

Outcome radicals()
{
    Outcome o;
    for (const auto & c : default_corpus())
        o.require(radical(c.algebra) == radical_by_formula(c.algebra), c.name + ": radical formulas differ");
    no_failures(o, {"Prop-2.10", "Prop-5.7", "Prop-5.10"});
    if (o.ok)
        o.note = "exact on every corpus algebra and operator";
    return o;
}

Outcome section_seven()
{
    Outcome o;
    no_failures(o, {"Thm-7.3", "Thm-7.5", "Thm-7.8", "Thm-7.9"});
    const auto [a, op] = four_element_example();
    const auto c = classify_state_algebra(a, op);
    o.require(c.ker == ElementSet(4, {a.element("b"), a.top()}), "Ker(σ) should be {b,1}");
    o.require(c.ker_maximal, "Ker(σ) should be maximal");
    o.require(c.ssbl_simple.holds, "σ(A) should be simple");
    if (o.ok)
        o.note = "example: Ker={b,1} maximal, σ(A) simple";
    return o;
}

Outcome states()
{
    Outcome o;
    const auto start = Clock::now();
    const std::vector<Rational> grid = {0, Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4), 1};
    std::size_t sampled = 0, found = 0;
    for (const auto & c : default_corpus()) {
        const auto & a = c.algebra;
        if (a.size() > 5)
            continue;
        const auto n = a.size();
        std::vector<std::size_t> idx(n, 0);
        std::vector<StateValues> seen;
        while (true) {
            StateValues s(n);
            for (std::size_t x = 0; x < n; ++x)
                s[x] = grid[idx[x]];
            const auto v = check_state(a, s);
            ++sampled;
            o.require(v.bosbach_riecan_agree, c.name + ": Bosbach and Riečan disagree at " + to_string(s));
            if (v.bosbach) {
                ++found;
                o.require(v.criteria_agree, c.name + ": extremality criteria disagree at " + to_string(s));
                o.require(hull_coefficients(state_polytope_vertices(a), s).has_value(), c.name + ": state outside the polytope");
            }
            std::size_t i = n;
            while (i > 0 && ++idx[i - 1] == grid.size())
                idx[--i] = 0;
            if (i == 0)
                break;
        }
        auto extremal = extremal_states(a);
        std::sort(extremal.begin(), extremal.end());
        o.require(extremal == state_polytope_vertices(a), c.name + ": solved system differs from the maximal filter states");
    }
    const auto [ex, sigma] = four_element_example();
    o.require(extremal_states(ex) == std::vector<StateValues>{{0, Rational(1, 2), 1, 1}}, "example should have one extremal state");
    o.require(sigma_compatible_correspondence(ex, sigma).holds(), "correspondence fails on the example");
    const auto diagonal = diagonal_operator(mv_chain(1), 1);
    o.require(sigma_compatible_correspondence(diagonal.algebra, diagonal.op).holds(), "correspondence fails for σ_1 on S1×S1");
    o.require(seconds_since(start) < 120.0, "took longer than 2 min");
    if (o.ok)
        o.note = std::to_string(sampled) + " maps, " + std::to_string(found) + " states";
    return o;
}

Outcome irreducible_square()
{
    Outcome o;
    const auto start = Clock::now();
    const auto [a, op] = diagonal_operator(mv_chain(2), 1);
    const auto irr = subdirectly_irreducible(a, op.map());
    o.require(irr.irreducible, "(B×B, σ_1) should be subdirectly irreducible");
    o.require(! a.is_linear(), "B×B should not be linear");
    o.require(image_subalgebra(a, op).algebra.is_linear(), "the diagonal should be linear");
    o.require(seconds_since(start) < 10.0, "took longer than 10 s");
    if (o.ok)
        o.note = "irreducible, least state filter " + a.set_to_string(*irr.least);
    return o;
}

Outcome determinism()
{
    Outcome o;
    const auto corpus = default_corpus();
    const auto one = run_suite(corpus, {{}, 1, true});
    const auto many = run_suite(corpus, {{}, 4, true});
    o.require(report_text(one) == report_text(many), "text reports differ");
    o.require(report_json(one) == report_json(many), "JSON reports differ");
    o.require(one.passed(), "the default suite has failures");
    if (o.ok)
        o.note = std::to_string(one.records.size()) + " records, identical for 1 and 4 workers";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"example end to end", example_end_to_end},
        {"chains carry idempotent endomorphisms only", chains_and_linear_algebras},
        {"coordinate operators on S1+(S1xS1)", coordinate_operators},
        {"sigma_a rejected on S4xS4", rejected_sigma_a},
        {"state operator lemma suite", lemma_suite},
        {"radical cross-check", radicals},
        {"simplicity and semisimplicity theorems", section_seven},
        {"states", states},
        {"irreducible non-linear state algebra", irreducible_square},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
             << o.note << ") " << seconds_since(start) << " s";
        std::cout << line.str() << std::endl;
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
