#include <blstate/claims.hh>
#include <blstate/constructors.hh>
#include <blstate/states.hh>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace blstate {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::not_applicable:
        return "n/a";
    case Verdict::logged:
        return "logged";
    }
    return "?";
}

InstanceContext::InstanceContext(const CorpusInstance & instance, std::size_t enumeration_limit) :
    instance_(instance), limit_(enumeration_limit)
{
}

const AlgebraClassification & InstanceContext::classification()
{
    if (! classification_)
        classification_ = classify_algebra(algebra());
    return *classification_;
}

const std::vector<ElementSet> & InstanceContext::filters()
{
    if (! filters_)
        filters_ = all_filters(algebra());
    return *filters_;
}

const std::vector<StateOperator> & InstanceContext::named()
{
    if (! named_) {
        named_.emplace();
        for (const auto & op : instance_.operators)
            named_->push_back(verify_operator(algebra(), op.map));
    }
    return *named_;
}

const std::vector<StateOperator> & InstanceContext::state_operators()
{
    if (! state_) {
        if (exhaustive()) {
            state_ = enumerate_operators(algebra(), SearchClass::state);
        } else {
            state_.emplace();
            for (const auto & op : named())
                if (op.is_state() && std::find(state_->begin(), state_->end(), op) == state_->end())
                    state_->push_back(op);
        }
        op_classification_.assign(state_->size(), std::nullopt);
    }
    return *state_;
}

const std::vector<StateOperator> & InstanceContext::strong_operators()
{
    if (! strong_) {
        if (exhaustive()) {
            strong_ = enumerate_operators(algebra(), SearchClass::strong);
        } else {
            strong_.emplace();
            for (const auto & op : state_operators())
                if (op.is_strong())
                    strong_->push_back(op);
        }
    }
    return *strong_;
}

const std::vector<StateOperator> & InstanceContext::morphism_operators()
{
    if (! morphism_) {
        if (exhaustive()) {
            morphism_ = enumerate_operators(algebra(), SearchClass::morphism);
        } else {
            morphism_.emplace();
            for (const auto & op : state_operators())
                if (op.is_morphism())
                    morphism_->push_back(op);
        }
    }
    return *morphism_;
}

const StateAlgebraClassification & InstanceContext::operator_classification(std::size_t i)
{
    const auto & ops = state_operators();
    if (! op_classification_.at(i))
        op_classification_[i] = classify_state_algebra(algebra(), ops[i]);
    return *op_classification_[i];
}

namespace {

using Witness = std::optional<std::string>;

ClaimOutcome pass(std::string detail = {}) { return {Verdict::pass, {}, std::move(detail)}; }

ClaimOutcome fail(std::string witness, std::string detail = {})
{
    return {Verdict::fail, std::move(witness), std::move(detail)};
}

ClaimOutcome skip(std::string detail) { return {Verdict::not_applicable, {}, std::move(detail)}; }

std::string plural(std::size_t k, std::string_view noun)
{
    std::string out = std::to_string(k) + " " + std::string(noun);
    if (k != 1)
        out += "s";
    return out;
}

std::string show_map(const FiniteBLAlgebra & a, std::span<const Element> m)
{
    std::string out = "σ=[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            out += ",";
        out += a.label(m[i]);
    }
    return out + "]";
}

std::string show_tuple(const FiniteBLAlgebra & a, std::span<const Element> xs)
{
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ", ";
        out += a.label(xs[i]);
    }
    return out + ")";
}

std::string vars(const FiniteBLAlgebra & a, Element x) { return "x=" + a.label(x); }

std::string vars(const FiniteBLAlgebra & a, Element x, Element y)
{
    return "x=" + a.label(x) + ", y=" + a.label(y);
}

template <class F>
Witness each_element(const FiniteBLAlgebra & a, F && ok)
{
    for (auto x : a.elements())
        if (! ok(x))
            return vars(a, x);
    return std::nullopt;
}

template <class F>
Witness each_pair(const FiniteBLAlgebra & a, F && ok)
{
    for (auto x : a.elements())
        for (auto y : a.elements())
            if (! ok(x, y))
                return vars(a, x, y);
    return std::nullopt;
}

ElementSet singleton(const FiniteBLAlgebra & a, Element x) { return ElementSet(a.size(), {x}); }

ElementSet image_set(const FiniteBLAlgebra & a, const StateOperator & op)
{
    return image_of(a, op.map(), ElementSet::full(a.size()));
}

bool faithful(const FiniteBLAlgebra & a, const StateOperator & op)
{
    return kernel(a, op.map()) == singleton(a, a.top());
}

/// Parent indices of a set given in subalgebra indices.
ElementSet lift(const Subalgebra & s, std::size_t universe, const ElementSet & inner)
{
    ElementSet out(universe);
    for (auto i : inner.members())
        out.insert(s.embedding[i]);
    return out;
}

/// Subalgebra indices of the members of `outer` that lie in the subalgebra.
ElementSet lower(const Subalgebra & s, const ElementSet & outer)
{
    ElementSet out(s.embedding.size());
    for (std::size_t i = 0; i < s.embedding.size(); ++i)
        if (outer.contains(s.embedding[i]))
            out.insert(static_cast<Element>(i));
    return out;
}

bool contains(const std::vector<ElementSet> & list, const ElementSet & s)
{
    return std::find(list.begin(), list.end(), s) != list.end();
}

bool contains(const std::vector<StateOperator> & list, const StateOperator & op)
{
    return std::find(list.begin(), list.end(), op) != list.end();
}

std::vector<std::vector<Element>> sorted_maps(const std::vector<StateOperator> & ops)
{
    std::vector<std::vector<Element>> out;
    for (const auto & op : ops)
        out.push_back(op.map());
    std::sort(out.begin(), out.end());
    return out;
}

bool preserves_prod(const FiniteBLAlgebra & a, const StateOperator & s)
{
    return ! each_pair(a, [&](Element x, Element y) { return s(a.prod(x, y)) == a.prod(s(x), s(y)); });
}

bool preserves_impl(const FiniteBLAlgebra & a, const StateOperator & s)
{
    return ! each_pair(a, [&](Element x, Element y) { return s(a.impl(x, y)) == a.impl(s(x), s(y)); });
}

bool all_idempotent(const FiniteBLAlgebra & a)
{
    return std::all_of(a.elements().begin(), a.elements().end(), [&](Element x) { return a.is_idempotent(x); });
}

bool is_mv(const FiniteBLAlgebra & a)
{
    return std::all_of(a.elements().begin(), a.elements().end(), [&](Element x) { return a.neg(a.neg(x)) == x; });
}

/// Runs `check` on every state operator meeting `applies`; the first
/// witness fails the claim. No applicable operator gives n/a.
template <class Applies, class Check>
ClaimOutcome for_each_operator(InstanceContext & ctx, Applies && applies, Check && check)
{
    const auto & a = ctx.algebra();
    const auto & ops = ctx.state_operators();
    std::size_t checked = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (! applies(ops[i], i))
            continue;
        ++checked;
        if (auto w = check(ops[i], i))
            return fail(show_map(a, ops[i].map()) + "; " + *w);
    }
    std::string scope = ctx.exhaustive() ? "" : " (named operators only)";
    if (checked == 0)
        return skip((ops.empty() ? "no state operators" : "no operator meets the hypotheses") + scope);
    std::string detail = plural(checked, "operator");
    if (checked < ops.size())
        detail += ", " + std::to_string(ops.size() - checked) + " outside the hypotheses";
    return pass(detail + scope);
}

constexpr auto every = [](const StateOperator &, std::size_t) { return true; };

// Basic algebra

ClaimOutcome def_2_1(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto & t = a.tables();
    const auto v = verify_bl_axioms(t);
    if (const auto * bad = std::get_if<AxiomViolation>(&v))
        return fail(std::string(to_string(bad->axiom)) + " " + bad->law + " at " + show_tuple(a, bad->witness));
    try {
        const auto impl = residuum_from_monoid(a.size(), t.meet, t.prod);
        for (std::size_t k = 0; k < impl.size(); ++k)
            if (impl[k] != t.impl[k])
                return fail("residuum differs at " + vars(a, Element(k / a.size()), Element(k % a.size())));
    } catch (const NoResiduum & e) {
        return fail(e.what());
    }
    return pass(plural(a.size(), "element"));
}

ClaimOutcome prop_2_2(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    for (auto x : a.elements())
        for (auto y : a.elements()) {
            if (a.impl(x, a.neg(y)) != a.neg(a.prod(x, y)))
                return fail("(3) at " + vars(a, x, y));
            if (a.impl(x, a.meet(x, y)) != a.impl(x, y))
                return fail("(4) at " + vars(a, x, y));
            for (auto z : a.elements()) {
                const auto where = vars(a, x, y) + ", z=" + a.label(z);
                if (a.leq(x, y) && ! a.leq(a.impl(z, x), a.impl(z, y)))
                    return fail("(2) at " + where);
                if (! a.leq(a.impl(x, y), a.impl(a.prod(x, z), a.prod(y, z))))
                    return fail("(5) at " + where);
                if (a.impl(x, a.impl(y, z)) != a.impl(a.prod(x, y), z))
                    return fail("(6) at " + where);
                if (! a.leq(x, y))
                    continue;
                for (auto w : a.elements())
                    if (a.leq(z, w) && ! a.leq(a.prod(x, z), a.prod(y, w)))
                        return fail("(1) at " + where + ", w=" + a.label(w));
            }
        }
    return pass("six laws");
}

ClaimOutcome orthogonality(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    auto w = each_pair(a, [&](Element x, Element y) {
        const bool by_neg = a.leq(a.neg(a.neg(x)), a.neg(y));
        const bool by_order = a.leq(x, a.neg(y));
        const bool by_prod = a.orthogonal(x, y);
        return by_neg == by_order && by_order == by_prod && by_prod == a.orthogonal(y, x)
            && a.orthogonal(x, a.bottom());
    });
    return w ? fail(*w) : pass();
}

ClaimOutcome partial_sum(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    std::size_t pairs = 0;
    auto w = each_pair(a, [&](Element x, Element y) {
        if (! a.orthogonal(x, y))
            return true;
        ++pairs;
        return a.partial_sum(x, y) == a.impl(a.neg(x), a.neg(a.neg(y)));
    });
    return w ? fail(*w) : pass(plural(pairs, "orthogonal pair"));
}

ClaimOutcome bosbach_riecan(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (a.size() < 2)
        return skip("one-element algebra");
    const auto base = extremal_states(a);
    auto samples = base;
    const std::array half = {Rational(1, 2), Rational(1, 2)};
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
        const std::array pair = {base[i], base[i + 1]};
        samples.push_back(mix(pair, half));
    }
    for (const auto & s : base)
        for (auto x : a.elements()) {
            if (x == a.bottom() || x == a.top())
                continue;
            auto t = s;
            t[x] += t[x] + Rational(1, 7) <= 1 ? Rational(1, 7) : Rational(-1, 7);
            samples.push_back(std::move(t));
        }
    std::size_t states = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto v = check_state(a, samples[i]);
        if (! v.bosbach_riecan_agree)
            return fail("s=" + to_string(samples[i]) + (v.bosbach ? " is Bosbach only" : " is Riečan only"));
        if (v.state_morphism && ! v.bosbach)
            return fail("s=" + to_string(samples[i]) + " is a state-morphism but not a state");
        if (i < base.size() + (base.empty() ? 0 : base.size() - 1) && ! v.bosbach)
            return fail("s=" + to_string(samples[i]) + " should be a state");
        states += v.bosbach ? 1 : 0;
    }
    return pass(plural(samples.size(), "map") + ", " + plural(states, "state"));
}

ClaimOutcome thm_2_5(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (a.size() < 2)
        return skip("one-element algebra");
    auto extremal = extremal_states(a);
    std::sort(extremal.begin(), extremal.end());
    if (std::adjacent_find(extremal.begin(), extremal.end()) != extremal.end())
        return fail("two maximal filters give the same state");
    if (extremal != state_polytope_vertices(a))
        return fail("extremal states differ from the vertices of the state polytope");
    for (const auto & s : extremal) {
        const auto v = check_state(a, s);
        if (! v.bosbach || ! v.extremal || ! v.criteria_agree || ! v.kernel_maximal)
            return fail("s=" + to_string(s));
    }
    const std::array half = {Rational(1, 2), Rational(1, 2)};
    for (std::size_t i = 0; i + 1 < extremal.size(); ++i) {
        const std::array pair = {extremal[i], extremal[i + 1]};
        const auto m = mix(pair, half);
        const auto v = check_state(a, m);
        if (! v.bosbach || v.extremal || ! v.criteria_agree)
            return fail("s=" + to_string(m));
    }
    return pass(plural(extremal.size(), "extremal state"));
}

ClaimOutcome prop_2_6(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto & maximal = ctx.classification().maximal_filters;
    for (const auto & f : ctx.filters()) {
        if (f.contains(a.bottom()))
            continue;
        if (contains(maximal, f) != satisfies_maximality_criterion(a, f))
            return fail("F=" + a.set_to_string(f));
    }
    return pass(plural(maximal.size(), "maximal filter"));
}

ClaimOutcome prop_2_7(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    std::optional<ElementSet> non_primary;
    for (const auto & f : ctx.filters())
        if (! f.contains(a.bottom()) && ! is_primary(a, f)) {
            non_primary = f;
            break;
        }
    const bool local = ctx.classification().local.holds;
    if (local != ! non_primary)
        return fail(non_primary ? "non-primary F=" + a.set_to_string(*non_primary) : "not local");
    return pass(local ? "local" : "not local");
}

ClaimOutcome prop_2_8(InstanceContext & ctx)
{
    const auto & c = ctx.classification();
    if (c.local.holds != c.local_by_order.holds)
        return fail(c.local_by_order.witness ? vars(ctx.algebra(), *c.local_by_order.witness) : "");
    return pass(c.local.holds ? "local" : "not local");
}

ClaimOutcome prop_2_10(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto & c = ctx.classification();
    if (c.radical != c.radical_by_formula)
        return fail("∩ maximal = " + a.set_to_string(c.radical) + ", formula = " + a.set_to_string(c.radical_by_formula));
    return pass("Rad = " + a.set_to_string(c.radical));
}

ClaimOutcome remark_2_11(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto & c = ctx.classification();
    for (auto x : c.radical.members())
        if (! c.radical_neg.contains(a.neg(x)))
            return fail(vars(a, x));
    for (auto x : c.radical_neg.members())
        if (! c.radical.contains(a.neg(x)))
            return fail(vars(a, x));
    return pass();
}

ClaimOutcome cor_2_12(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto & c = ctx.classification();
    if (! c.perfect.holds)
        return skip("not perfect");
    for (auto x : c.radical.members())
        for (auto y : c.radical_neg.members())
            if (! a.leq(a.neg(x), a.neg(y)))
                return fail(vars(a, x, y));
    return pass();
}

ClaimOutcome remark_2_9(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    for (const auto & f : ctx.filters()) {
        const auto q = quotient_by_filter(a, f);
        if (! is_homomorphism(a, q.algebra, q.projection))
            return fail("projection onto A/" + a.set_to_string(f) + " is not a homomorphism");
        for (auto x : a.elements())
            if ((q.projection[x] == q.algebra.top()) != f.contains(x))
                return fail("F=" + a.set_to_string(f) + ", " + vars(a, x));
    }
    return pass(plural(ctx.filters().size(), "filter"));
}

ClaimOutcome prop_2_13(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    std::size_t proper = 0;
    for (const auto & f : ctx.filters()) {
        if (f.contains(a.bottom()))
            continue;
        ++proper;
        const bool local = classify_algebra(quotient_by_filter(a, f).algebra).local.holds;
        if (local != is_primary(a, f))
            return fail("P=" + a.set_to_string(f));
    }
    return pass(plural(proper, "proper filter"));
}

ClaimOutcome lemma_2_14(InstanceContext & ctx)
{
    const auto & c = ctx.classification();
    if (c.locally_finite.holds != c.simple.holds)
        return fail(c.locally_finite.witness ? vars(ctx.algebra(), *c.locally_finite.witness) : "");
    if (c.simple.holds && ! ctx.algebra().is_linear())
        return fail("simple but not linear");
    return pass(c.simple.holds ? "simple" : "not simple");
}

ClaimOutcome remark_2_15(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto & maximal = ctx.classification().maximal_filters;
    const auto extremal = extremal_states(a);
    for (const auto & f : maximal) {
        const auto q = quotient_by_filter(a, f);
        const auto & b = q.algebra;
        if (! b.is_linear() || ! is_mv(b))
            return fail("A/" + a.set_to_string(f) + " is not an MV-chain");
        StateValues s(a.size());
        for (auto x : a.elements()) {
            std::size_t rank = 0;
            for (auto y : b.elements())
                rank += b.lt(y, q.projection[x]) ? 1 : 0;
            s[x] = Rational(rank, b.size() - 1);
        }
        if (! check_state(a, s).state_morphism)
            return fail("F=" + a.set_to_string(f) + ", s=" + to_string(s));
        if (std::find(extremal.begin(), extremal.end(), s) == extremal.end())
            return fail("F=" + a.set_to_string(f) + " missing from the extremal states");
    }
    return pass(plural(maximal.size(), "maximal filter"));
}

// Operators

ClaimOutcome def_3_1(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto & ops = ctx.state_operators();
    for (const auto & op : ops)
        if (! op.is_state() || ! op.verdict().class_chain_consistent)
            return fail(show_map(a, op.map()));
    std::string detail = plural(ops.size(), "state operator");
    if (ctx.exhaustive() && a.size() <= 6) {
        if (sorted_maps(ops) != sorted_maps(enumerate_operators_brute_force(a, SearchClass::state)))
            return fail("pruned enumeration differs from brute force");
        detail += ", brute force agrees";
    }
    for (std::size_t i = 0; i < ctx.named().size(); ++i)
        detail += "; " + ctx.instance().operators[i].name + ": " + std::string(to_string(ctx.named()[i].operator_class()));
    return pass(detail);
}

ClaimOutcome example_3_2(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto id = identity_operator(a);
    if (! id.is_morphism() || ! id.preserves_impl())
        return fail("identity is " + std::string(to_string(id.operator_class())));
    if (ctx.exhaustive() && ! contains(ctx.state_operators(), id))
        return fail("identity missing from the enumeration");
    return pass();
}

/// (x, y) ↦ (y, x) on B × B.
std::vector<Element> swap_map(std::size_t m)
{
    std::vector<Element> out(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out[i * m + j] = static_cast<Element>(j * m + i);
    return out;
}

ClaimOutcome example_3_3(InstanceContext & ctx)
{
    if (! ctx.instance().square_of)
        return skip("not a square B × B");
    const auto & b = *ctx.instance().square_of;
    const auto & a = ctx.algebra();
    const auto m = b.size();
    const auto s1 = diagonal_operator(b, 1).op;
    const auto s2 = diagonal_operator(b, 2).op;
    for (const auto * s : {&s1, &s2}) {
        if (! s->is_morphism() || ! s->preserves_impl())
            return fail(show_map(a, s->map()) + " is " + std::string(to_string(s->operator_class())));
        if (auto w = each_element(a, [&](Element x) { return (*s)((*s)(x)) == (*s)(x); }))
            return fail(show_map(a, s->map()) + "; " + *w);
    }
    const auto f = swap_map(m);
    if (! is_homomorphism(a, a, f))
        return fail("swap is not an automorphism");
    if (auto w = each_element(a, [&](Element x) { return f[s1(x)] == s2(f[x]); }))
        return fail("swap does not intertwine σ1 and σ2 at " + *w);
    for (std::size_t i = 0; i < m; ++i) {
        const auto d = static_cast<Element>(i * m + i);
        if (s1(d) != d)
            return fail("σ1 moves the diagonal element " + a.label(d));
    }
    return pass();
}

ClaimOutcome example_3_4(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (a.size() != 4)
        return skip("not the four element example");
    const auto example = four_element_example();
    const auto iso = find_isomorphism(example.algebra, a);
    if (! iso)
        return skip("not the four element example");
    const auto & f = *iso;
    std::vector<Element> map(4);
    for (Element x = 0; x < 4; ++x)
        map[f[x]] = f[example.op(x)];
    const auto op = verify_operator(a, map);
    if (! op.is_morphism() || ! op.preserves_impl())
        return fail(show_map(a, map) + " is " + std::string(to_string(op.operator_class())));
    const auto variety = classify_variety(a);
    if (variety.is_mv.holds || variety.is_mv.witness != std::vector<Element>{f[2]})
        return fail("expected the MV identity to fail at " + a.label(f[2]));
    const auto image = image_subalgebra(a, op);
    if (ElementSet::from_members(4, image.embedding) != ElementSet(4, {f[0], f[1], f[3]}))
        return fail("σ(A) = " + show_tuple(a, image.embedding));
    if (! find_isomorphism(image.algebra, mv_chain(2)))
        return fail("σ(A) is not the three element Łukasiewicz chain");
    if (ctx.exhaustive() && ! contains(ctx.state_operators(), op))
        return fail("σ missing from the enumeration");
    return pass("σ(A) = " + show_tuple(a, image.embedding));
}

bool lemma_3_5_hypothesis(char part, InstanceContext & ctx, const StateOperator & s)
{
    const auto & a = ctx.algebra();
    switch (part) {
    case 'o':
        return image_set(a, s) == ElementSet::full(a.size());
    case 'p':
    case 'q':
        return faithful(a, s);
    case 'r':
        return a.is_linear() && faithful(a, s);
    default:
        return true;
    }
}

Witness lemma_3_5_part(char part, InstanceContext & ctx, const StateOperator & s)
{
    const auto & a = ctx.algebra();
    switch (part) {
    case 'a':
        return s(a.top()) == a.top() ? Witness{} : Witness{"σ(1)=" + a.label(s(a.top()))};
    case 'b':
        return each_element(a, [&](Element x) { return s(a.neg(x)) == a.neg(s(x)); });
    case 'c':
        return each_pair(a, [&](Element x, Element y) { return ! a.leq(x, y) || a.leq(s(x), s(y)); });
    case 'd':
        return each_pair(a, [&](Element x, Element y) {
            const auto lhs = s(a.prod(x, y));
            const auto rhs = a.prod(s(x), s(y));
            return a.leq(rhs, lhs) && (a.prod(x, y) != a.bottom() || lhs == rhs);
        });
    case 'e':
        return each_pair(a, [&](Element x, Element y) {
            const auto lhs = s(a.ominus(x, y));
            const auto rhs = a.ominus(s(x), s(y));
            return a.leq(rhs, lhs) && (! a.leq(x, y) || lhs == rhs);
        });
    case 'f':
        return each_pair(a, [&](Element x, Element y) { return s(a.meet(x, y)) == a.prod(s(x), s(a.impl(x, y))); });
    case 'g':
        return each_pair(a, [&](Element x, Element y) {
            const auto lhs = s(a.impl(x, y));
            const auto rhs = a.impl(s(x), s(y));
            return a.leq(lhs, rhs) && (! a.comparable(x, y) || lhs == rhs);
        });
    case 'h':
        return each_pair(a, [&](Element x, Element y) {
            return a.leq(a.prod(s(a.impl(x, y)), s(a.impl(y, x))), a.dist(s(x), s(y)));
        });
    case 'i':
        return each_pair(a, [&](Element x, Element y) {
            const auto lhs = a.oplus(s(x), s(y));
            const auto rhs = s(a.oplus(x, y));
            if (! a.leq(rhs, lhs))
                return false;
            return a.oplus(x, y) != a.top() || (lhs == a.top() && rhs == a.top());
        });
    case 'j':
        return each_element(a, [&](Element x) { return s(s(x)) == s(x); });
    case 'k': {
        const auto image = image_set(a, s);
        if (! image.contains(a.bottom()) || ! image.contains(a.top()))
            return "σ(A) misses a constant";
        for (auto x : image.members())
            for (auto y : image.members())
                for (auto r : {a.meet(x, y), a.join(x, y), a.prod(x, y), a.impl(x, y)})
                    if (! image.contains(r))
                        return vars(a, x, y);
        return std::nullopt;
    }
    case 'l': {
        ElementSet fixed(a.size());
        for (auto x : a.elements())
            if (s(x) == x)
                fixed.insert(x);
        const auto image = image_set(a, s);
        return image == fixed ? Witness{} : Witness{"σ(A)=" + a.set_to_string(image) + ", fixed=" + a.set_to_string(fixed)};
    }
    case 'm': {
        const auto & rad = ctx.classification().radical;
        return each_element(a, [&](Element x) {
            const auto ox = a.ord(x);
            return ! ox.is_finite() || (a.ord(s(x)) <= ox && ! rad.contains(s(x)));
        });
    }
    case 'n':
        return each_pair(a, [&](Element x, Element y) {
            return (s(a.impl(x, y)) == a.impl(s(x), s(y))) == (s(a.impl(y, x)) == a.impl(s(y), s(x)));
        });
    case 'o':
    case 'r':
        return each_element(a, [&](Element x) { return s(x) == x; });
    case 'p':
        return each_pair(a, [&](Element x, Element y) { return ! a.lt(x, y) || a.lt(s(x), s(y)); });
    case 'q':
        return each_element(a, [&](Element x) { return s(x) == x || ! a.comparable(s(x), x); });
    }
    throw std::logic_error("unknown part");
}

template <char Part>
ClaimOutcome lemma_3_5(InstanceContext & ctx)
{
    return for_each_operator(
        ctx, [&](const StateOperator & s, std::size_t) { return lemma_3_5_hypothesis(Part, ctx, s); },
        [&](const StateOperator & s, std::size_t) { return lemma_3_5_part(Part, ctx, s); });
}

ClaimOutcome prop_3_8(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto & strong = ctx.strong_operators();
    for (const auto & op : strong) {
        if (! op.is_state())
            return fail(show_map(a, op.map()) + " is strong but not a state operator");
        if (ctx.exhaustive() && ! contains(ctx.state_operators(), op))
            return fail(show_map(a, op.map()) + " missing from the state enumeration");
    }
    return pass(plural(strong.size(), "strong operator"));
}

template <char Part>
ClaimOutcome lemma_3_9(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(
        ctx, [](const StateOperator & s, std::size_t) { return s.is_strong(); },
        [&](const StateOperator & s, std::size_t) -> Witness {
            if constexpr (Part == 'a')
                return each_pair(a, [&](Element x, Element y) {
                    const auto lhs = s(a.prod(x, y));
                    const auto rhs = a.prod(s(x), s(y));
                    return a.leq(rhs, lhs) && (! a.leq(a.neg(x), y) || lhs == rhs);
                });
            else if constexpr (Part == 'b')
                return each_pair(a, [&](Element x, Element y) {
                    const auto lhs = s(a.ominus(x, y));
                    const auto rhs = a.ominus(s(x), s(y));
                    return a.leq(rhs, lhs) && (! a.comparable(x, y) || lhs == rhs);
                });
            else
                return each_element(a, [&](Element x) {
                    return s(a.prod(x, s(a.neg(x)))) == s(a.prod(a.neg(x), s(x)));
                });
        });
}

ClaimOutcome lemma_3_10_1(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) {
        return each_pair(a, [&](Element x, Element y) {
            return (s(a.impl(x, y)) == a.impl(s(x), s(y))) == (s(a.meet(x, y)) == a.meet(s(x), s(y)));
        });
    });
}

ClaimOutcome lemma_3_10_2(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        bool joins = true;
        if (auto w = each_pair(a, [&](Element x, Element y) {
                if (s(a.join(x, y)) != a.join(s(x), s(y))) {
                    joins = false;
                    return true;
                }
                return s(a.impl(x, y)) == a.impl(s(x), s(y));
            }))
            return "∨ kept but → not at " + *w;
        if (joins != preserves_impl(a, s))
            return joins ? "preserves ∨ but not →" : "preserves → but not ∨";
        return std::nullopt;
    });
}

ClaimOutcome lemma_3_10_3(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(
        ctx, [&](const StateOperator & s, std::size_t) { return preserves_impl(a, s); },
        [&](const StateOperator & s, std::size_t) {
            return each_pair(a, [&](Element x, Element y) { return s(a.prod(x, y)) == a.prod(s(x), s(y)); });
        });
}

ClaimOutcome lemma_3_11_1(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (! a.is_linear())
        return skip("not linear");
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) {
        return each_pair(a, [&](Element x, Element y) { return s(a.impl(x, y)) == a.impl(s(x), s(y)); });
    });
}

ClaimOutcome lemma_3_11_2(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (! a.is_linear())
        return skip("not linear");
    return for_each_operator(
        ctx, [](const StateOperator & s, std::size_t) { return s.is_strong(); },
        [&](const StateOperator & s, std::size_t) {
            return each_pair(a, [&](Element x, Element y) { return s(a.prod(x, y)) == a.prod(s(x), s(y)); });
        });
}

ClaimOutcome prop_3_13(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (! is_mv(a))
        return skip("not an MV-algebra");
    const auto n = a.size();
    std::vector<std::vector<Element>> maps;
    if (n <= 5) {
        std::vector<Element> m(n, 0);
        while (true) {
            maps.push_back(m);
            std::size_t i = n;
            while (i > 0 && ++m[i - 1] == n)
                m[--i] = 0;
            if (i == 0)
                break;
        }
    } else {
        for (const auto & op : ctx.state_operators()) {
            maps.push_back(op.map());
            for (auto x : a.elements())
                for (auto v : a.elements())
                    if (v != op(x)) {
                        auto m = op.map();
                        m[x] = v;
                        maps.push_back(std::move(m));
                    }
        }
    }
    std::size_t states = 0;
    for (const auto & m : maps) {
        const auto r = mv_equivalence_check(a, m);
        if (! r.agree || ! r.strong_if_state || ! r.additive)
            return fail(show_map(a, m) + (r.agree ? " is a state operator but not strong" : ": the two axiom systems disagree"));
        states += r.state ? 1 : 0;
    }
    return pass(plural(maps.size(), "map") + ", " + plural(states, "state operator"));
}

ClaimOutcome additivity(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) {
        return each_pair(a, [&](Element x, Element y) {
            if (! a.orthogonal(x, y))
                return true;
            return a.orthogonal(s(x), s(y)) && s(a.partial_sum(x, y)) == a.partial_sum(s(x), s(y));
        });
    });
}

ClaimOutcome mv_morphism_impl(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (! is_mv(a))
        return skip("not an MV-algebra");
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        if (preserves_prod(a, s) != preserves_impl(a, s))
            return std::string(preserves_prod(a, s) ? "preserves ⊙ but not →" : "preserves → but not ⊙");
        return std::nullopt;
    });
}

ClaimOutcome prop_3_16(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto & morphisms = ctx.morphism_operators();
    for (const auto & op : morphisms)
        if (! op.is_strong() || ! op.is_state())
            return fail(show_map(a, op.map()) + " is a morphism operator but not strong");
    return pass(plural(morphisms.size(), "morphism operator"));
}

// Families of operators

bool base_comet(InstanceContext & ctx) { return ctx.instance().comet && ctx.instance().comet->base() > 0; }

/// The axioms (2) to (5) on the pairs of A₁.
Witness top_summand_axioms(const Comet & c, std::span<const Element> s)
{
    const auto & a = c.algebra();
    for (auto x : a.elements()) {
        if (! c.in_top_summand(x))
            continue;
        for (auto y : a.elements()) {
            if (! c.in_top_summand(y))
                continue;
            if (s[a.impl(x, y)] != a.impl(s[x], s[a.meet(x, y)]))
                return "(2) at " + vars(a, x, y);
            if (s[a.prod(x, y)] != a.prod(s[x], s[a.impl(x, a.prod(x, y))]))
                return "(3) at " + vars(a, x, y);
            if (s[a.prod(s[x], s[y])] != a.prod(s[x], s[y]))
                return "(4) at " + vars(a, x, y);
            if (s[a.impl(s[x], s[y])] != a.impl(s[x], s[y]))
                return "(5) at " + vars(a, x, y);
        }
    }
    return std::nullopt;
}

ClaimOutcome lemma_4_2(InstanceContext & ctx)
{
    if (! base_comet(ctx))
        return skip("not of the form S_n ⊕ A₁");
    const auto & c = *ctx.instance().comet;
    const auto & a = c.algebra();
    const auto zero1 = c.bottom_of_top();
    auto outcome = for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        for (auto x : a.elements()) {
            if (! c.in_top_summand(x)) {
                if (s(x) != x)
                    return "moves the base element " + a.label(x);
                continue;
            }
            if (! c.in_top_summand(s(x)))
                return "maps " + a.label(x) + " out of A₁";
            if (! a.leq(s(zero1), s(x)))
                return "(i) at " + vars(a, x);
            if (s(c.star(x)) != a.impl(s(x), s(zero1)))
                return "(ii) at " + vars(a, x);
        }
        if (! a.is_idempotent(s(zero1)))
            return std::string("(iii) σ(0₁) is not idempotent");
        if (auto w = top_summand_axioms(c, s.map()))
            return "(iv) " + *w;
        return std::nullopt;
    });
    if (outcome.verdict != Verdict::pass)
        return outcome;

    // Converse: maps on A₁ with (iii) and (iv) extend to state operators.
    const auto n = a.size();
    const auto k = n - c.base();
    if (! ctx.exhaustive() || k > 6)
        return outcome;
    std::vector<Element> s(n);
    for (Element x = 0; x < c.base(); ++x)
        s[x] = x;
    std::vector<std::size_t> digits(k, 0);
    std::vector<std::vector<Element>> extended;
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            s[c.base() + i] = static_cast<Element>(c.base() + digits[i]);
        if (a.is_idempotent(s[zero1]) && ! top_summand_axioms(c, s))
            extended.push_back(s);
        std::size_t i = k;
        while (i > 0 && ++digits[i - 1] == k)
            digits[--i] = 0;
        if (i == 0)
            break;
    }
    if (extended != sorted_maps(ctx.state_operators()))
        return fail("maps on A₁ meeting (iii) and (iv) do not extend to exactly the state operators",
            std::to_string(extended.size()) + " maps on A₁ against " + plural(ctx.state_operators().size(), "state operator"));
    return pass(outcome.detail + "; converse: " + plural(extended.size(), "map") + " on A₁ extend to exactly these");
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
        std::vector<std::size_t> j;
        for (std::size_t i = 0; i < k; ++i)
            if (bits >> i & 1)
                j.push_back(i);
        out.push_back(std::move(j));
    }
    return out;
}

ClaimOutcome lemma_4_3(InstanceContext & ctx)
{
    if (! base_comet(ctx))
        return skip("not of the form S_n ⊕ A₁");
    const auto & c = *ctx.instance().comet;
    const auto & a = c.algebra();
    const auto k = c.factors().size();
    std::vector<StateOperator> family;
    for (const auto & j : all_subsets(k)) {
        const auto s = sigma_J(c, j);
        if (! s.is_state() || ! preserves_prod(a, s) || ! preserves_impl(a, s))
            return fail(show_map(a, s.map()) + " is " + std::string(to_string(s.operator_class())));
        std::vector<std::size_t> low(k);
        for (std::size_t i = 0; i < k; ++i)
            low[i] = std::find(j.begin(), j.end(), i) == j.end() ? c.factors()[i] : 0;
        if (kernel(a, s.map()) != a.upset(c.embed(low)))
            return fail(show_map(a, s.map()) + "; kernel " + a.set_to_string(kernel(a, s.map())));
        if (contains(family, s))
            return fail(show_map(a, s.map()) + " repeats");
        if (ctx.exhaustive() && ! contains(ctx.state_operators(), s))
            return fail(show_map(a, s.map()) + " missing from the enumeration");
        family.push_back(s);
    }
    const auto count = ctx.state_operators().size();
    const auto bound = std::size_t{1} << k;
    if (ctx.exhaustive() && count < bound)
        return fail("only " + plural(count, "state operator"));
    return pass(plural(count, "state operator") + ", at least " + std::to_string(bound) + " required");
}

std::vector<Element> idempotents_of_top(const Comet & c)
{
    std::vector<Element> out;
    for (auto x : c.algebra().elements())
        if (c.in_top_summand(x) && c.algebra().is_idempotent(x))
            out.push_back(x);
    return out;
}

ClaimOutcome lemma_4_4(InstanceContext & ctx)
{
    if (! base_comet(ctx))
        return skip("not of the form S_n ⊕ A₁");
    const auto & c = *ctx.instance().comet;
    const auto & a = c.algebra();
    std::size_t covering = 0;
    for (auto e : idempotents_of_top(c)) {
        const auto s = sigma_a(c, e);
        if (! s.covers)
            continue;
        ++covering;
        if (! s.op.is_state() || ! preserves_prod(a, s.op) || ! preserves_impl(a, s.op))
            return fail("a=" + a.label(e) + ", " + show_map(a, s.op.map()));
    }
    return pass(plural(covering, "covering idempotent"));
}

std::string coordinates(const Comet & c, Element x)
{
    std::string out = "(";
    const auto xs = c.coordinates(x);
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out + ")";
}

ClaimOutcome remark_4_5(InstanceContext & ctx)
{
    const auto & comet = ctx.instance().comet;
    if (! comet || comet->factors() != std::vector<std::size_t>{4, 4})
        return skip("top summand is not S_4 × S_4");
    const auto & c = *comet;
    const auto & a = c.algebra();
    const auto s = sigma_a(c, c.embed({0, 4}));
    const auto x = c.embed({3, 1});
    if (s.covers || s.a_star != c.embed({4, 0}))
        return fail("a*=" + coordinates(c, s.a_star));
    if (a.leq(s.a, x) || (a.leq(c.bottom_of_top(), x) && a.leq(x, s.a_star)))
        return fail("x=(3,1) lies in [a,1] ∪ [0₁,a*]");
    if (a.prod(x, x) != c.embed({2, 0}))
        return fail("x⊙x=" + coordinates(c, a.prod(x, x)));
    const auto & v = s.op.verdict();
    if (s.op.is_state() || ! v.consequence_failure || v.consequence_failure->law != "(d)"
        || v.consequence_failure->witness != std::vector<Element>{x, x})
        return fail(show_map(a, s.op.map()) + " was not rejected at x=(3,1)");
    const auto lhs = s.op(a.prod(x, x));
    const auto rhs = a.prod(s.op(x), s.op(x));
    if (lhs != c.embed({0, 0}) || rhs != c.embed({2, 0}))
        return fail("σ(x⊙x)=" + coordinates(c, lhs) + ", σ(x)⊙σ(x)=" + coordinates(c, rhs));
    for (std::size_t i = 0; i < ctx.named().size(); ++i)
        if (ctx.named()[i] == s.op && ctx.named()[i].is_state())
            return fail(ctx.instance().operators[i].name + " accepted");
    ClaimOutcome out = pass("rejected as expected: σ(x⊙x)=(0,0) differs from σ(x)⊙σ(x)=(2,0), law (d)");
    out.witness = "x=(3,1)";
    return out;
}

ClaimOutcome remark_4_6(InstanceContext & ctx)
{
    if (! ctx.instance().comet)
        return skip("not a comet");
    const auto & c = *ctx.instance().comet;
    const auto & a = c.algebra();
    const auto k = c.factors().size();
    std::vector<std::size_t> everything(k);
    for (std::size_t i = 0; i < k; ++i)
        everything[i] = i;
    if (sigma_a(c, a.top()).op != sigma_J(c, {}))
        return fail("(i) a=1 does not give the identity on A₁");
    if (sigma_a(c, c.bottom_of_top()).op != sigma_J(c, everything))
        return fail("(i) a=0₁ does not give σ_J for the full index set");
    std::string detail = "(i)";
    auto differs_from_family = [&](const SigmaA & s) {
        for (const auto & j : all_subsets(k))
            if (s.op == sigma_J(c, j))
                return false;
        return true;
    };
    const auto & f = c.factors();
    if (k >= 2 && std::all_of(f.begin() + 1, f.end(), [](std::size_t m) { return m == 1; })) {
        std::vector<std::size_t> e(k, 0), star(k, 1);
        e.back() = 1;
        star.front() = f.front();
        star.back() = 0;
        const auto s = sigma_a(c, c.embed(e));
        if (s.a_star != c.embed(star) || ! s.covers || ! s.op.is_state() || ! differs_from_family(s))
            return fail("(ii) a=" + coordinates(c, s.a));
        detail += " (ii)";
    }
    if (f == std::vector<std::size_t>{2, 2, 1}) {
        const auto s = sigma_a(c, c.embed({0, 0, 1}));
        if (s.a_star != c.embed({2, 2, 0}) || ! s.covers || ! s.op.is_state() || ! differs_from_family(s))
            return fail("(iii) a=(0,0,1)");
        detail += " (iii)";
    }
    return pass(detail);
}

bool godel_chain_shape(const FiniteBLAlgebra & a) { return a.is_linear() && all_idempotent(a); }

ClaimOutcome lemma_4_7_2(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (! godel_chain_shape(a))
        return skip("not a Gödel chain");
    for (auto e : a.elements()) {
        const auto lo = godel_sigma_lower(a, e);
        if (! lo.is_morphism() || ! lo.preserves_impl())
            return fail("σ_a for a=" + a.label(e));
        if (e == a.bottom())
            continue;
        const auto up = godel_sigma_upper(a, e);
        if (! up.is_morphism() || ! up.preserves_impl())
            return fail("σ^a for a=" + a.label(e));
    }
    return pass(plural(2 * a.size() - 1, "operator"));
}

ClaimOutcome example_4_11(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (! godel_chain_shape(a))
        return skip("not a Gödel chain");
    if (! ctx.exhaustive())
        return skip("enumeration skipped");
    std::vector<StateOperator> family;
    for (auto e : a.elements()) {
        family.push_back(godel_sigma_lower(a, e));
        if (e != a.bottom())
            family.push_back(godel_sigma_upper(a, e));
    }
    auto expected = sorted_maps(family);
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    for (const auto & op : ctx.state_operators())
        if (! std::binary_search(expected.begin(), expected.end(), op.map()))
            return fail(show_map(a, op.map()) + " is neither σ_a nor σ^a");
    if (expected != sorted_maps(ctx.state_operators()))
        return fail("some σ_a or σ^a is not a state operator");
    return pass(plural(expected.size(), "distinct operator"));
}

ClaimOutcome prop_4_9(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (! a.is_linear())
        return skip("not linear");
    auto outcome = for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        if (! preserves_prod(a, s))
            return std::string("does not preserve ⊙");
        if (! preserves_impl(a, s))
            return std::string("does not preserve →");
        return each_element(a, [&](Element x) { return s(s(x)) == s(x); });
    });
    if (outcome.verdict != Verdict::pass || ! ctx.exhaustive() || a.size() > 6)
        return outcome;
    // The state operators are exactly the idempotent endomorphisms.
    const auto n = a.size();
    std::vector<Element> m(n, 0);
    std::vector<std::vector<Element>> idempotent;
    while (true) {
        const bool idem = std::all_of(m.begin(), m.end(), [&](Element y) { return m[y] == y; });
        if (idem && is_homomorphism(a, a, m))
            idempotent.push_back(m);
        std::size_t i = n;
        while (i > 0 && ++m[i - 1] == n)
            m[--i] = 0;
        if (i == 0)
            break;
    }
    if (idempotent != sorted_maps(ctx.state_operators()))
        return fail("state operators differ from the idempotent endomorphisms");
    return pass(outcome.detail + "; equal to the idempotent endomorphisms");
}

ClaimOutcome prop_4_10(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (! all_idempotent(a))
        return skip("x⊙x = x fails");
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        if (! preserves_prod(a, s) || ! preserves_impl(a, s))
            return std::string("not an endomorphism");
        return std::nullopt;
    });
}

ClaimOutcome prop_4_12(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (! ctx.classification().locally_finite.holds)
        return skip("not locally finite");
    if (! ctx.exhaustive())
        return skip("enumeration skipped");
    const auto & ops = ctx.state_operators();
    if (ops.size() != 1 || ops.front() != identity_operator(a))
        return fail(plural(ops.size(), "state operator"));
    return pass("identity only");
}

ClaimOutcome mv_product_strong(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    if (! classify_variety(a).mv_or_product_identity.holds)
        return skip("x→(x⊙y) = x⁻∨y fails");
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        if (! s.is_strong())
            return s.verdict().strong_failure ? s.verdict().strong_failure->law + " at " + show_tuple(a, s.verdict().strong_failure->witness)
                                              : std::string("not strong");
        return std::nullopt;
    });
}

// State filters

ClaimOutcome kernel_filter(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        const auto k = kernel(a, s.map());
        if (! is_state_filter(a, s.map(), k))
            return "Ker=" + a.set_to_string(k);
        return std::nullopt;
    });
}

ClaimOutcome congruence(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        for (const auto & f : state_filters(a, s.map()))
            if (auto w = each_pair(a, [&](Element x, Element y) {
                    return ! f.contains(a.dist(x, y)) || f.contains(a.dist(s(x), s(y)));
                }))
                return "F=" + a.set_to_string(f) + ", " + *w;
        return std::nullopt;
    });
}

ClaimOutcome example_5_2(InstanceContext & ctx)
{
    if (! ctx.instance().square_of)
        return skip("not a square B × B");
    const auto & b = *ctx.instance().square_of;
    if (! classify_algebra(b).simple.holds)
        return skip("B is not simple");
    const auto & a = ctx.algebra();
    const auto m = b.size();
    if (a.is_linear())
        return fail("B × B is linear");
    for (int which : {1, 2}) {
        const auto s = diagonal_operator(b, which).op;
        if (! s.is_morphism() || ! s.preserves_impl())
            return fail("σ" + std::to_string(which) + " is " + std::string(to_string(s.operator_class())));
        ElementSet expected(a.size());
        for (std::size_t i = 0; i < m; ++i)
            expected.insert(static_cast<Element>(which == 1 ? b.top() * m + i : i * m + b.top()));
        if (kernel(a, s.map()) != expected)
            return fail("Ker(σ" + std::to_string(which) + ")=" + a.set_to_string(kernel(a, s.map())));
        const auto irr = subdirectly_irreducible(a, s.map());
        if (! irr.irreducible || irr.least != expected)
            return fail("(A, σ" + std::to_string(which) + ") is not irreducible with least state-filter the kernel");
        if (! image_subalgebra(a, s).algebra.is_linear())
            return fail("σ" + std::to_string(which) + "(A) is not linear");
    }
    if (subdirectly_irreducible(a).irreducible)
        return fail("B × B is irreducible without the operator");
    return pass("kernels {1}×B and B×{1}");
}

/// A homomorphism from a chain into the two element algebra, if any.
std::optional<std::vector<Element>> onto_boolean(const FiniteBLAlgebra & b, const FiniteBLAlgebra & two)
{
    if (b.size() > 12)
        return std::nullopt;
    for (std::size_t bits = 0; bits < (std::size_t{1} << b.size()); ++bits) {
        std::vector<Element> h(b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
            h[i] = bits >> i & 1;
        if (is_homomorphism(b, two, h))
            return h;
    }
    return std::nullopt;
}

/// Checks (B × C, σ_h) against the example. Returns the first discrepancy.
Witness sigma_h_case(const FiniteBLAlgebra & b, const FiniteBLAlgebra & c, const std::vector<Element> & h)
{
    const auto irr_c = subdirectly_irreducible(c);
    if (! irr_c.irreducible)
        return std::string("C is not subdirectly irreducible");
    const auto st = sigma_h(b, c, make_homomorphism(b, c, h));
    const auto & a = st.algebra;
    const auto m = c.size();
    if (! st.op.is_morphism())
        return "σ_h is " + std::string(to_string(st.op.operator_class()));
    if (a.is_linear())
        return std::string("B × C is linear");
    ElementSet ker(a.size()), least(a.size());
    for (auto y : c.elements()) {
        const auto e = static_cast<Element>(b.top() * m + y);
        ker.insert(e);
        if (irr_c.least->contains(y))
            least.insert(e);
    }
    if (kernel(a, st.op.map()) != ker)
        return "Ker(σ_h)=" + a.set_to_string(kernel(a, st.op.map()));
    // A filter G of B inside ker(h) gives the σ-closed filter G × {1}.
    ElementSet kernel_of_h(a.size());
    for (auto x : b.elements())
        if (h[x] == c.top())
            kernel_of_h.insert(static_cast<Element>(x * m + c.top()));
    const auto irr = subdirectly_irreducible(a, st.op.map());
    if (! irr.irreducible) {
        if (kernel_of_h.size() > 1 && is_state_filter(a, st.op.map(), kernel_of_h))
            return "not subdirectly irreducible: the state-filter " + a.set_to_string(kernel_of_h)
                + " meets Ker(σ_h) only in 1";
        return std::string("not subdirectly irreducible");
    }
    if (irr.least != least)
        return "least state-filter " + a.set_to_string(*irr.least) + " is not {1}×F_C";
    return std::nullopt;
}

ClaimOutcome example_5_3(InstanceContext & ctx)
{
    const auto & b = ctx.algebra();
    if (! b.is_linear() || b.size() < 2)
        return skip("not a chain");
    std::vector<Element> id(b.elements().begin(), b.elements().end());
    if (auto w = sigma_h_case(b, b, id))
        return fail("C = B, h = id: " + *w);
    const auto two = mv_chain(1);
    const auto h = onto_boolean(b, two);
    if (! h || b.size() == 2)
        return pass("C = B, h = id");
    if (auto w = sigma_h_case(b, two, *h))
        return {Verdict::logged, "C = S_1, h = " + show_tuple(two, *h) + ": " + *w,
            "holds for h = id; a homomorphism with a nontrivial kernel breaks irreducibility"};
    return pass("C = B, h = id; C = S_1, h = " + show_tuple(two, *h));
}

ClaimOutcome prop_5_4(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        const auto & m = s.map();
        const auto sf = state_filters(a, m);
        const auto maximal = maximal_state_filters(a, m);
        for (const auto & f : sf) {
            for (auto x : a.elements())
                if (! f.contains(x)
                    && state_filter_generated_ext(a, m, f, x) != state_filter_closure(a, m, f | singleton(a, x)))
                    return "F=" + a.set_to_string(f) + ", " + vars(a, x);
            if (! f.contains(a.bottom()) && contains(maximal, f) != satisfies_state_maximality_criterion(a, m, f))
                return "maximality criterion at F=" + a.set_to_string(f);
        }
        return each_element(a, [&](Element x) {
            return state_filter_generated(a, m, singleton(a, x)) == state_filter_closure(a, m, singleton(a, x));
        });
    });
}

ClaimOutcome thm_5_5(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t i) -> Witness {
        const auto & image = ctx.operator_classification(i).image;
        const bool irr = subdirectly_irreducible(a, s.map()).irreducible;
        if (irr && ! image.algebra.is_linear())
            return std::string("irreducible but σ(A) is not linear");
        if (faithful(a, s) && irr != subdirectly_irreducible(image.algebra).irreducible)
            return std::string("faithful, irreducibility of (A, σ) and σ(A) differ");
        return std::nullopt;
    });
}

ElementSet image_radical(InstanceContext & ctx, std::size_t i)
{
    const auto & c = ctx.operator_classification(i);
    return lift(c.image, ctx.algebra().size(), c.image_algebra.radical);
}

ClaimOutcome prop_5_7(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t i) -> Witness {
        const auto rad_image = image_radical(ctx, i);
        const auto image_rad = image_of(a, s.map(), ctx.classification().radical);
        if (! rad_image.is_subset_of(image_rad))
            return "Rad(σ(A))=" + a.set_to_string(rad_image) + " ⊄ σ(Rad(A))=" + a.set_to_string(image_rad);
        if (s.is_strong() && rad_image != image_rad)
            return "strong, Rad(σ(A))=" + a.set_to_string(rad_image) + " ≠ σ(Rad(A))=" + a.set_to_string(image_rad);
        return std::nullopt;
    });
}

ClaimOutcome prop_5_8(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        for (const auto & f : maximal_state_filters(a, s.map())) {
            const auto q = quotient_by_filter(a, f);
            const auto co_infinitesimal = radical_by_formula(q.algebra);
            for (auto x : a.elements())
                if (co_infinitesimal.contains(q.projection[s(x)]) && ! f.contains(s(x)))
                    return "F=" + a.set_to_string(f) + ", " + vars(a, x);
        }
        return std::nullopt;
    });
}

/// σ-closed subalgebras to test against: σ(A), A and, for small algebras,
/// every other σ-closed subalgebra.
std::vector<ElementSet> closed_subalgebras(const FiniteBLAlgebra & a, const StateOperator & s)
{
    const auto n = a.size();
    std::vector<ElementSet> out = {image_set(a, s), ElementSet::full(n)};
    if (n > 10)
        return out;
    std::vector<Element> free;
    for (auto x : a.elements())
        if (x != a.bottom() && x != a.top())
            free.push_back(x);
    for (std::size_t bits = 0; bits < (std::size_t{1} << free.size()); ++bits) {
        ElementSet m(n, {a.bottom(), a.top()});
        for (std::size_t i = 0; i < free.size(); ++i)
            if (bits >> i & 1)
                m.insert(free[i]);
        bool closed = true;
        for (auto x : m.members()) {
            closed = closed && m.contains(s(x));
            for (auto y : m.members())
                closed = closed && m.contains(a.meet(x, y)) && m.contains(a.join(x, y)) && m.contains(a.prod(x, y))
                    && m.contains(a.impl(x, y));
            if (! closed)
                break;
        }
        if (closed && ! contains(out, m))
            out.push_back(m);
    }
    return out;
}

ClaimOutcome prop_5_9_1(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        const auto big = maximal_state_filters(a, s.map());
        for (const auto & members : closed_subalgebras(a, s)) {
            const auto n = subalgebra(a, members);
            std::vector<Element> restricted;
            for (auto x : n.embedding)
                restricted.push_back(static_cast<Element>(
                    std::find(n.embedding.begin(), n.embedding.end(), s(x)) - n.embedding.begin()));
            const auto small = maximal_state_filters(n.algebra, restricted);
            for (const auto & j : big)
                if (! contains(small, lower(n, j)))
                    return "N=" + a.set_to_string(members) + ", J=" + a.set_to_string(j);
            for (const auto & i : small)
                if (std::none_of(big.begin(), big.end(), [&](const ElementSet & j) { return lower(n, j) == i; }))
                    return "N=" + a.set_to_string(members) + ", I=" + a.set_to_string(lift(n, a.size(), i));
        }
        return std::nullopt;
    });
}

ClaimOutcome prop_5_9_2(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t i) -> Witness {
        const auto & c = ctx.operator_classification(i);
        const auto image = image_set(a, s);
        const auto image_maximal = maximal_filters(c.image.algebra);
        for (const auto & f : state_filters(a, s.map())) {
            const auto moved = image_of(a, s.map(), f);
            if (moved != (f & image))
                return "σ(I) ≠ I ∩ σ(A) at I=" + a.set_to_string(f);
            if (! is_filter(c.image.algebra, lower(c.image, moved)))
                return "σ(I) is not a filter at I=" + a.set_to_string(f);
            if (contains(c.maximal_state_filters, f) && ! contains(image_maximal, lower(c.image, moved)))
                return "σ(I) is not maximal at I=" + a.set_to_string(f);
        }
        return std::nullopt;
    });
}

ClaimOutcome prop_5_9_3(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t i) -> Witness {
        const auto & c = ctx.operator_classification(i);
        const auto image = image_set(a, s);
        const auto image_maximal = maximal_filters(c.image.algebra);
        for (const auto & f : all_filters(c.image.algebra)) {
            const auto up = lift(c.image, a.size(), f);
            const auto back = preimage_of(a, s.map(), up);
            if (! is_state_filter(a, s.map(), back))
                return "σ⁻¹(I) is not a state-filter at I=" + a.set_to_string(up);
            if ((back & image) != up)
                return "σ⁻¹(I) ∩ σ(A) ≠ I at I=" + a.set_to_string(up);
            if (contains(image_maximal, f) && ! contains(c.maximal_state_filters, back))
                return "σ⁻¹(I) is not maximal at I=" + a.set_to_string(up);
        }
        return std::nullopt;
    });
}

ClaimOutcome prop_5_10(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t i) -> Witness {
        const auto rad_image = image_radical(ctx, i);
        const auto from_sigma = image_of(a, s.map(), ctx.operator_classification(i).rad_sigma);
        if (rad_image != from_sigma)
            return "Rad(σ(A))=" + a.set_to_string(rad_image) + ", σ(Rad_σ(A))=" + a.set_to_string(from_sigma);
        if (! rad_image.is_subset_of(image_of(a, s.map(), ctx.classification().radical)))
            return std::string("Rad(σ(A)) ⊄ σ(Rad(A))");
        return std::nullopt;
    });
}

// States on state algebras

ClaimOutcome prop_6_1(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t i) -> Witness {
        const auto & image = ctx.operator_classification(i).image.algebra;
        auto states = extremal_states(image);
        const std::array half = {Rational(1, 2), Rational(1, 2)};
        for (std::size_t k = 0; k + 1 < states.size(); k += 2) {
            const std::array pair = {states[k], states[k + 1]};
            states.push_back(mix(pair, half));
        }
        for (const auto & t : states) {
            const auto pulled = pull_back_state(a, s, t);
            if (! check_state(a, pulled).bosbach)
                return "s=" + to_string(t) + " pulls back to " + to_string(pulled);
        }
        return std::nullopt;
    });
}

ClaimOutcome prop_6_2(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(
        ctx, [](const StateOperator & s, std::size_t) { return s.is_morphism(); },
        [&](const StateOperator & s, std::size_t i) -> Witness {
            for (const auto & t : extremal_states(ctx.operator_classification(i).image.algebra)) {
                const auto pulled = pull_back_state(a, s, t);
                if (! check_state(a, pulled).extremal)
                    return "s=" + to_string(t) + " pulls back to the non-extremal " + to_string(pulled);
            }
            return std::nullopt;
        });
}

ClaimOutcome thm_6_4(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t) -> Witness {
        const auto r = sigma_compatible_correspondence(a, s);
        if (r.compatible_extremals.empty())
            return std::string("no σ-compatible state");
        if (! r.phi_psi_identity)
            return std::string("φ∘ψ is not the identity");
        if (! r.psi_phi_identity)
            return std::string("ψ∘φ is not the identity");
        if (! r.psi_onto || ! r.psi_compatible)
            return std::string("ψ does not map the extremal states onto the compatible ones");
        if (! r.convex_preserved)
            return std::string("convex combinations are not preserved");
        return std::nullopt;
    });
}

ClaimOutcome cor_6_5(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, every, [&](const StateOperator & s, std::size_t i) -> Witness {
        std::vector<StateValues> generators;
        for (const auto & t : extremal_states(ctx.operator_classification(i).image.algebra))
            generators.push_back(pull_back_state(a, s, t));
        std::vector<std::pair<Element, Element>> tied;
        for (auto x : a.elements())
            if (s(x) != x)
                tied.emplace_back(x, s(x));
        for (const auto & v : state_polytope_vertices(a, tied)) {
            if (! is_sigma_compatible(s.map(), v))
                return "vertex " + to_string(v) + " is not σ-compatible";
            if (! hull_coefficients(generators, v))
                return "compatible state " + to_string(v) + " outside the hull";
        }
        return std::nullopt;
    });
}

// Classes of state algebras

ClaimOutcome remark_7_2(InstanceContext & ctx)
{
    if (! ctx.classification().simple.holds)
        return skip("A is not simple");
    return for_each_operator(ctx, every, [&](const StateOperator &, std::size_t i) -> Witness {
        if (! ctx.operator_classification(i).ssbl_simple.holds)
            return std::string("σ(A) is not simple");
        return std::nullopt;
    });
}

constexpr auto morphism_only = [](const StateOperator & s, std::size_t) { return s.is_morphism(); };

ClaimOutcome thm_7_3(InstanceContext & ctx)
{
    std::size_t simple = 0;
    auto out = for_each_operator(ctx, morphism_only, [&](const StateOperator &, std::size_t i) -> Witness {
        const auto & c = ctx.operator_classification(i);
        simple += c.ssbl_simple.holds ? 1 : 0;
        if (c.ssbl_simple.holds != c.ker_maximal)
            return std::string(c.ker_maximal ? "Ker maximal but σ(A) not simple" : "σ(A) simple but Ker not maximal");
        return std::nullopt;
    });
    if (out.verdict == Verdict::pass)
        out.detail += ", " + std::to_string(simple) + " simple";
    return out;
}

ClaimOutcome thm_7_5(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    return for_each_operator(ctx, morphism_only, [&](const StateOperator &, std::size_t i) -> Witness {
        const auto & c = ctx.operator_classification(i);
        const bool inside = ctx.classification().radical.is_subset_of(c.ker);
        if (c.sssbl_semisimple.holds != inside)
            return "semisimple=" + std::string(c.sssbl_semisimple.holds ? "true" : "false") + ", Rad(A)="
                + a.set_to_string(ctx.classification().radical) + ", Ker=" + a.set_to_string(c.ker);
        return std::nullopt;
    });
}

ClaimOutcome thm_7_6(InstanceContext & ctx)
{
    const auto & a = ctx.algebra();
    const auto & ops = ctx.state_operators();
    const bool perfect = ctx.classification().perfect.holds;
    std::size_t logged = 0;
    std::string first_logged;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto & c = ctx.operator_classification(i);
        const bool rhs = c.radical_faithful.holds && c.image_algebra.perfect.holds;
        if (perfect == rhs)
            continue;
        if (ops[i].is_morphism())
            return fail(show_map(a, ops[i].map()) + "; A perfect=" + (perfect ? "true" : "false"));
        if (logged++ == 0)
            first_logged = show_map(a, ops[i].map());
    }
    if (ops.empty())
        return skip("no state operators");
    if (logged)
        return {Verdict::logged, first_logged, plural(logged, "non-morphism operator") + " disagree"};
    return pass(plural(ops.size(), "operator"));
}

ClaimOutcome thm_7_8(InstanceContext & ctx)
{
    return for_each_operator(
        ctx, [&](const StateOperator & s, std::size_t i) {
            return s.is_morphism() && ctx.operator_classification(i).radical_faithful.holds;
        },
        [&](const StateOperator &, std::size_t i) -> Witness {
            const auto & c = ctx.operator_classification(i);
            if (c.algebra.local.holds != c.image_algebra.local.holds)
                return std::string(c.algebra.local.holds ? "A local, σ(A) not" : "σ(A) local, A not");
            return std::nullopt;
        });
}

ClaimOutcome thm_7_9(InstanceContext & ctx)
{
    return for_each_operator(
        ctx, [&](const StateOperator & s, std::size_t i) {
            return s.is_morphism() && ctx.operator_classification(i).radical_faithful.holds;
        },
        [&](const StateOperator &, std::size_t i) -> Witness {
            const auto & c = ctx.operator_classification(i);
            const bool rhs = c.algebra.local.holds && c.ker == c.algebra.radical;
            if (c.ssbl_simple.holds != rhs)
                return std::string(c.ssbl_simple.holds ? "simple without local and Ker = Rad" : "local with Ker = Rad but not simple");
            return std::nullopt;
        });
}

struct Claim {
    const char * id;
    const char * statement;
    ClaimOutcome (*check)(InstanceContext &);
};

const std::vector<Claim> & registry()
{
    static const std::vector<Claim> claims = {
        {"Def-2.1", "The tables satisfy the BL axioms and the residuum is the adjoint of the product.", def_2_1},
        {"Prop-2.2", "Basic laws: monotonicity of ⊙ and of →, (a⊙b)⁻ = a→b⁻, a→(a∧b) = a→b, a→b ≤ (a⊙c)→(b⊙c), a→(b→c) = (a⊙b)→c.", prop_2_2},
        {"Section-2-orthogonality", "x⁻⁻ ≤ y⁻, x ≤ y⁻ and x⊙y = 0 are equivalent; orthogonality is symmetric and x is orthogonal to 0.", orthogonality},
        {"Section-2-partial-sum", "For orthogonal x, y the two formulas for x + y agree.", partial_sum},
        {"Section-2-states", "A map is a Bosbach state exactly when it is a Riečan state; state-morphisms are states.", bosbach_riecan},
        {"Thm-2.5", "For states, being extremal, a state-morphism, max on joins, Łukasiewicz on products and having a maximal kernel coincide.", thm_2_5},
        {"Remark-2.9", "The quotient map by a filter is a homomorphism and sends exactly the filter to 1.", remark_2_9},
        {"Prop-2.6", "A proper filter is maximal iff every x outside it has some (x^n)⁻ inside.", prop_2_6},
        {"Prop-2.7", "An algebra is local iff all proper filters are primary.", prop_2_7},
        {"Prop-2.8", "An algebra is local iff ord(x) or ord(x⁻) is finite for every x.", prop_2_8},
        {"Prop-2.10", "The radical equals the set of co-infinitesimal elements.", prop_2_10},
        {"Remark-2.11", "Negation swaps Rad(A) and Rad(A)⁻.", remark_2_11},
        {"Cor-2.12", "In a perfect algebra x⁻ ≤ y⁻ for x in Rad(A) and y in Rad(A)⁻.", cor_2_12},
        {"Prop-2.13", "A filter P is primary iff A/P is local.", prop_2_13},
        {"Lemma-2.14", "Locally finite and simple coincide, and such algebras are chains.", lemma_2_14},
        {"Remark-2.15", "For a maximal filter F, A/F is an MV-chain and x ↦ x/F read as a rational is a state-morphism.", remark_2_15},
        {"Def-3.1", "Every enumerated operator satisfies the state-operator axioms; small cases agree with brute force.", def_3_1},
        {"Example-3.2", "The identity is a state operator preserving ⊙ and →.", example_3_2},
        {"Example-3.3", "The diagonal operators on B × B are idempotent endomorphisms exchanged by the coordinate swap.", example_3_3},
        {"Example-3.4", "The four element chain is BL but not MV and its σ is an endomorphism with image {0,a,1}.", example_3_4},
        {"Lemma-3.5-a", "σ(1) = 1.", lemma_3_5<'a'>},
        {"Lemma-3.5-b", "σ(x⁻) = σ(x)⁻.", lemma_3_5<'b'>},
        {"Lemma-3.5-c", "σ is monotone.", lemma_3_5<'c'>},
        {"Lemma-3.5-d", "σ(x⊙y) ≥ σ(x)⊙σ(y), with equality when x⊙y = 0.", lemma_3_5<'d'>},
        {"Lemma-3.5-e", "σ(x⊖y) ≥ σ(x)⊖σ(y), with equality when x ≤ y.", lemma_3_5<'e'>},
        {"Lemma-3.5-f", "σ(x∧y) = σ(x)⊙σ(x→y).", lemma_3_5<'f'>},
        {"Lemma-3.5-g", "σ(x→y) ≤ σ(x)→σ(y), with equality for comparable x, y.", lemma_3_5<'g'>},
        {"Lemma-3.5-h", "σ(x→y)⊙σ(y→x) ≤ d(σ(x), σ(y)).", lemma_3_5<'h'>},
        {"Lemma-3.5-i", "σ(x⊕y) ≤ σ(x)⊕σ(y), and both are 1 when x⊕y = 1.", lemma_3_5<'i'>},
        {"Lemma-3.5-j", "σ is idempotent.", lemma_3_5<'j'>},
        {"Lemma-3.5-k", "σ(A) is a subalgebra.", lemma_3_5<'k'>},
        {"Lemma-3.5-l", "σ(A) is the set of fixed points of σ.", lemma_3_5<'l'>},
        {"Lemma-3.5-m", "For x of finite order, ord(σ(x)) ≤ ord(x) and σ(x) lies outside the radical.", lemma_3_5<'m'>},
        {"Lemma-3.5-n", "σ preserves x→y iff it preserves y→x.", lemma_3_5<'n'>},
        {"Lemma-3.5-o", "A surjective state operator is the identity.", lemma_3_5<'o'>},
        {"Lemma-3.5-p", "A faithful state operator is strictly monotone.", lemma_3_5<'p'>},
        {"Lemma-3.5-q", "Under a faithful state operator σ(x) is x or incomparable with x.", lemma_3_5<'q'>},
        {"Lemma-3.5-r", "On a chain a faithful state operator is the identity.", lemma_3_5<'r'>},
        {"Prop-3.8", "Every strong state operator is a state operator.", prop_3_8},
        {"Lemma-3.9-a", "Strong σ: σ(x⊙y) ≥ σ(x)⊙σ(y), with equality when x⁻ ≤ y.", lemma_3_9<'a'>},
        {"Lemma-3.9-b", "Strong σ: σ(x⊖y) ≥ σ(x)⊖σ(y), with equality for comparable x, y.", lemma_3_9<'b'>},
        {"Lemma-3.9-c", "Strong σ: σ(x⊙σ(x⁻)) = σ(x⁻⊙σ(x)).", lemma_3_9<'c'>},
        {"Lemma-3.10-1", "At each pair, σ preserves → iff it preserves ∧.", lemma_3_10_1},
        {"Lemma-3.10-2", "σ preserves → everywhere iff it preserves ∨ everywhere; a preserved join gives a preserved arrow.", lemma_3_10_2},
        {"Lemma-3.10-3", "A state operator preserving → also preserves ⊙.", lemma_3_10_3},
        {"Lemma-3.11-1", "On a chain every state operator preserves →.", lemma_3_11_1},
        {"Lemma-3.11-2", "On a chain every strong state operator preserves ⊙.", lemma_3_11_2},
        {"Prop-3.13", "On an MV-algebra the MV and BL axiom systems for σ agree and every state operator is strong.", prop_3_13},
        {"Section-3-additivity", "σ maps orthogonal pairs to orthogonal pairs and preserves their sum.", additivity},
        {"Section-3-mv-morphism", "On an MV-algebra a state operator preserves ⊙ iff it preserves →.", mv_morphism_impl},
        {"Prop-3.16", "Every morphism operator is strong.", prop_3_16},
        {"Lemma-4.2", "On S_n ⊕ A₁ a state operator fixes S_n and restricts to A₁ with the listed properties, and conversely.", lemma_4_2},
        {"Lemma-4.3", "On S_n ⊕ (S_n1 × ... × S_nk) the 2^k operators σ_J are distinct endomorphisms with kernel [a_J', 1].", lemma_4_3},
        {"Lemma-4.4", "σ_a is a state endomorphism whenever [a,1] and [0₁,a*] cover A₁.", lemma_4_4},
        {"Remark-4.5", "Negative instance: on S_4 × S_4 with a = (0,4) the map σ_a is rejected at x = (3,1).", remark_4_5},
        {"Remark-4.6", "Instances of the covering condition: the extreme choices of a and the shapes S_n × S_1 × ... × S_1 and S_2 × S_2 × S_1.", remark_4_6},
        {"Lemma-4.7-2", "On a finite Gödel chain σ_a and σ^a are endomorphisms.", lemma_4_7_2},
        {"Example-4.11", "On a finite Gödel chain every state operator is some σ_a or σ^a.", example_4_11},
        {"Prop-4.9", "On a chain every state operator is an idempotent endomorphism, and conversely.", prop_4_9},
        {"Prop-4.10", "When x⊙x = x holds, every state operator is an endomorphism.", prop_4_10},
        {"Prop-4.12", "On a locally finite algebra the identity is the only state operator.", prop_4_12},
        {"Section-4-strong", "When x→(x⊙y) = x⁻∨y holds, every state operator is strong.", mv_product_strong},
        {"Section-5-kernel", "Ker(σ) is a state-filter.", kernel_filter},
        {"Section-5-congruence", "The congruence of a state-filter is compatible with σ.", congruence},
        {"Example-5.2", "For simple B, (B × B, σ_i) is subdirectly irreducible and not linear, with its kernel as least state-filter.", example_5_2},
        {"Example-5.3", "For a chain B and an injective homomorphism h into an irreducible C, (B × C, σ_h) is irreducible with kernel {1} × C (logged when a non-injective h exists).", example_5_3},
        {"Prop-5.4", "Generated state-filters follow the product formula, and the maximality criterion holds.", prop_5_4},
        {"Thm-5.5", "An irreducible state algebra has a linear image; for faithful σ irreducibility matches that of σ(A).", thm_5_5},
        {"Prop-5.7", "Rad(σ(A)) ⊆ σ(Rad(A)), with equality for strong σ.", prop_5_7},
        {"Prop-5.8", "At a maximal state-filter F, σ(a) lies in F when σ(a)/F is co-infinitesimal.", prop_5_8},
        {"Prop-5.9-1", "Maximal state-filters restrict to a state subalgebra, and every maximal one there arises this way.", prop_5_9_1},
        {"Prop-5.9-2", "σ(I) = I ∩ σ(A) for a state-filter I, and maximal I give maximal filters of σ(A).", prop_5_9_2},
        {"Prop-5.9-3", "Preimages of (maximal) filters of σ(A) are (maximal) state-filters meeting σ(A) in the original filter.", prop_5_9_3},
        {"Prop-5.10", "Rad(σ(A)) = σ(Rad_σ(A)) ⊆ σ(Rad(A)).", prop_5_10},
        {"Prop-6.1", "s∘σ is a state on A for every state s on σ(A).", prop_6_1},
        {"Prop-6.2", "For a morphism operator, s∘σ is extremal whenever s is.", prop_6_2},
        {"Thm-6.4", "σ-compatible states on A correspond affinely to states on σ(A).", thm_6_4},
        {"Cor-6.5", "Every σ-compatible state is a convex combination of extremal σ-compatible states.", cor_6_5},
        {"Remark-7.2", "If A is simple then so is σ(A).", remark_7_2},
        {"Thm-7.3", "For morphism operators, σ(A) is simple iff Ker(σ) is a maximal filter.", thm_7_3},
        {"Thm-7.5", "For morphism operators, Rad(σ(A)) = {1} iff Rad(A) ⊆ Ker(σ).", thm_7_5},
        {"Thm-7.6", "A is perfect iff σ is radical-faithful and σ(A) is perfect (checked for morphism operators, logged otherwise).", thm_7_6},
        {"Thm-7.8", "For radical-faithful morphism operators, A is local iff σ(A) is local.", thm_7_8},
        {"Thm-7.9", "For radical-faithful morphism operators, σ(A) is simple iff A is local with Ker(σ) = Rad(A).", thm_7_9},
    };
    return claims;
}

} // namespace

const std::vector<ClaimInfo> & claim_catalogue()
{
    static const std::vector<ClaimInfo> catalogue = [] {
        std::vector<ClaimInfo> out;
        for (const auto & c : registry())
            out.push_back({c.id, c.statement});
        return out;
    }();
    return catalogue;
}

bool is_known_claim(std::string_view id)
{
    const auto & r = registry();
    return std::any_of(r.begin(), r.end(), [&](const Claim & c) { return c.id == id; });
}

ClaimOutcome check_claim(std::string_view id, InstanceContext & ctx)
{
    for (const auto & c : registry()) {
        if (c.id != id)
            continue;
        try {
            return c.check(ctx);
        } catch (const std::exception & e) {
            return fail("", std::string("error: ") + e.what());
        }
    }
    throw std::invalid_argument("unknown claim " + std::string(id));
}

} // namespace blstate
