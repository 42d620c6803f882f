#include <blstate/operators.hh>

#include <algorithm>
#include <functional>
#include <thread>

namespace blstate {

std::string_view to_string(SearchClass c)
{
    switch (c) {
    case SearchClass::state:
        return "state";
    case SearchClass::strong:
        return "strong";
    case SearchClass::morphism:
        return "morphism";
    case SearchClass::endomorphism:
        return "endomorphism";
    }
    return "?";
}

SearchClass search_class_from_string(std::string_view s)
{
    for (auto c : {SearchClass::state, SearchClass::strong, SearchClass::morphism, SearchClass::endomorphism})
        if (to_string(c) == s)
            return c;
    throw std::invalid_argument("unknown operator class '" + std::string(s) + "'");
}

bool in_class(const StateOperator & op, SearchClass c)
{
    switch (c) {
    case SearchClass::state:
        return op.is_state();
    case SearchClass::strong:
        return op.is_strong();
    case SearchClass::morphism:
        return op.is_morphism();
    case SearchClass::endomorphism:
        return op.is_endomorphism();
    }
    return false;
}

namespace {

    constexpr Element unset = ~Element{0};

    /// Checks every law instance whose σ-references are all assigned.
    class PartialChecker {
    public:
        PartialChecker(const FiniteBLAlgebra & a, SearchClass c) : a_(a), c_(c) {}

        bool ok(const std::vector<Element> & s) const
        {
            const auto n = a_.size();
            bool unknown = false;
            auto g = [&](Element e) {
                const auto v = s[e];
                if (v == unset)
                    unknown = true;
                return v == unset ? Element{0} : v;
            };
            // evaluates one instance; an instance touching an unassigned value passes
            auto holds = [&](auto && eq) {
                unknown = false;
                const bool r = eq();
                return unknown || r;
            };

            for (Element x = 0; x < n; ++x) {
                if (s[x] == unset)
                    continue;
                const auto sx = s[x];
                if (! holds([&] { return g(sx) == sx; }))
                    return false;
                if (! holds([&] { return g(a_.neg(x)) == a_.neg(sx); }))
                    return false;
                for (Element y = 0; y < n; ++y) {
                    if (s[y] == unset)
                        continue;
                    const auto sy = s[y];
                    if (a_.leq(x, y) && ! a_.leq(sx, sy))
                        return false;
                    if (! holds([&] { return a_.leq(a_.prod(sx, sy), g(a_.prod(x, y))); }))
                        return false;
                    if (! holds([&] { return g(a_.impl(x, y)) == a_.impl(sx, g(a_.meet(x, y))); }))
                        return false;
                    if (! holds([&] {
                            const auto p = a_.prod(sx, sy);
                            return g(p) == p;
                        }))
                        return false;
                    if (! holds([&] {
                            const auto p = a_.impl(sx, sy);
                            return g(p) == p;
                        }))
                        return false;
                    switch (c_) {
                    case SearchClass::state:
                        if (! holds([&] { return g(a_.prod(x, y)) == a_.prod(sx, g(a_.impl(x, a_.prod(x, y)))); }))
                            return false;
                        break;
                    case SearchClass::strong:
                        if (! holds([&] { return g(a_.prod(x, y)) == a_.prod(sx, g(a_.join(a_.neg(x), y))); }))
                            return false;
                        break;
                    case SearchClass::morphism:
                        if (! holds([&] { return g(a_.prod(x, y)) == a_.prod(sx, sy); }))
                            return false;
                        break;
                    case SearchClass::endomorphism:
                        if (! holds([&] { return g(a_.prod(x, y)) == a_.prod(sx, g(a_.impl(x, a_.prod(x, y)))); }))
                            return false;
                        if (! holds([&] { return g(a_.impl(x, y)) == a_.impl(sx, sy); }))
                            return false;
                        break;
                    }
                }
            }
            return true;
        }

    private:
        const FiniteBLAlgebra & a_;
        SearchClass c_;
    };

    void search(const FiniteBLAlgebra & a, SearchClass c, const PartialChecker & check, std::vector<Element> & s,
        Element x, std::vector<StateOperator> & out)
    {
        const auto n = a.size();
        while (x < n && s[x] != unset)
            ++x;
        if (x == n) {
            auto op = verify_operator(a, s);
            if (in_class(op, c))
                out.push_back(std::move(op));
            return;
        }
        for (Element v = 0; v < n; ++v) {
            s[x] = v;
            if (check.ok(s))
                search(a, c, check, s, x + 1, out);
        }
        s[x] = unset;
    }

} // namespace

std::vector<StateOperator> enumerate_operators(const FiniteBLAlgebra & a, SearchClass c, unsigned workers)
{
    const auto n = a.size();
    const PartialChecker check(a, c);
    std::vector<Element> root(n, unset);
    root[a.bottom()] = a.bottom();
    root[a.top()] = a.top();
    if (! check.ok(root))
        return {};

    Element first = 0;
    while (first < n && root[first] != unset)
        ++first;
    if (first == n || workers <= 1) {
        std::vector<StateOperator> out;
        search(a, c, check, root, 0, out);
        return out;
    }

    // one result list per value of the first free element, filled by workers in strides
    std::vector<std::vector<StateOperator>> branches(n);
    auto work = [&](unsigned w) {
        for (Element v = w; v < n; v += workers) {
            auto s = root;
            s[first] = v;
            if (check.ok(s))
                search(a, c, check, s, first + 1, branches[v]);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
    }
    std::vector<StateOperator> out;
    for (auto & b : branches)
        std::move(b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<StateOperator> enumerate_operators_brute_force(const FiniteBLAlgebra & a, SearchClass c)
{
    const auto n = a.size();
    if (n > 8)
        throw std::invalid_argument("brute-force enumeration limited to 8 elements");
    std::vector<StateOperator> out;
    std::vector<Element> s(n, 0);
    while (true) {
        auto op = verify_operator(a, s);
        if (in_class(op, c))
            out.push_back(std::move(op));
        // odometer with the last element varying fastest gives lexicographic order
        std::size_t i = n;
        while (i > 0 && ++s[i - 1] == n)
            s[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

std::vector<StateOperator> search_nonstrong(const FiniteBLAlgebra & a, unsigned workers)
{
    std::vector<StateOperator> out;
    for (auto & op : enumerate_operators(a, SearchClass::state, workers))
        if (! op.is_strong())
            out.push_back(op);
    return out;
}

ElementSet kernel(const FiniteBLAlgebra & a, std::span<const Element> sigma)
{
    ElementSet k(a.size());
    for (auto x : a.elements())
        if (sigma[x] == a.top())
            k.insert(x);
    return k;
}

ElementSet image_of(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & s)
{
    ElementSet out(a.size());
    for (auto x : s.members())
        out.insert(sigma[x]);
    return out;
}

ElementSet preimage_of(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & s)
{
    ElementSet out(a.size());
    for (auto x : a.elements())
        if (s.contains(sigma[x]))
            out.insert(x);
    return out;
}

KernelReport kernel_and_faithfulness(const FiniteBLAlgebra & a, const StateOperator & op)
{
    KernelReport r;
    r.kernel = kernel(a, op.map());
    r.faithful = r.kernel.size() == 1;
    const auto rad = radical(a);
    r.radical_faithful = true;
    for (auto x : a.elements())
        if (rad.contains(op(x)) && ! rad.contains(x)) {
            r.radical_faithful = false;
            r.radical_witness = x;
            break;
        }
    return r;
}

bool is_state_filter(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & f)
{
    if (! is_filter(a, f))
        return false;
    for (auto x : f.members())
        if (! f.contains(sigma[x]))
            return false;
    return true;
}

std::vector<ElementSet> state_filters(const FiniteBLAlgebra & a, std::span<const Element> sigma)
{
    std::vector<ElementSet> out;
    for (auto & f : all_filters(a))
        if (is_state_filter(a, sigma, f))
            out.push_back(f);
    return out;
}

ElementSet state_filter_generated(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & x)
{
    if (x.empty())
        throw std::invalid_argument("state_filter_generated needs a nonempty generating set");
    ElementSet gens(a.size());
    for (auto e : x.members())
        gens.insert(a.prod(e, sigma[e]));
    return filter_generated(a, gens);
}

ElementSet state_filter_closure(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & x)
{
    ElementSet s = x;
    s.insert(a.top());
    for (bool grew = true; grew;) {
        grew = false;
        auto add = [&](Element e) {
            if (! s.contains(e)) {
                s.insert(e);
                grew = true;
            }
        };
        const auto m = s.members();
        for (auto p : m) {
            add(sigma[p]);
            for (auto q : m)
                add(a.prod(p, q));
            for (auto q : a.elements())
                if (a.leq(p, q))
                    add(q);
        }
    }
    return s;
}

ElementSet state_filter_generated_ext(const FiniteBLAlgebra & a, std::span<const Element> sigma, const ElementSet & f,
    Element x)
{
    if (! is_state_filter(a, sigma, f))
        throw NotAStateFilter("set " + a.set_to_string(f) + " is not a state filter");
    const auto base = a.prod(x, sigma[x]);
    ElementSet lows(a.size());
    for (auto i : f.members())
        for (auto p : a.powers(base))
            lows.insert(a.prod(i, p));
    ElementSet out(a.size());
    for (auto l : lows.members())
        out = out | a.upset(l);
    return out;
}

std::vector<ElementSet> maximal_state_filters(const FiniteBLAlgebra & a, std::span<const Element> sigma)
{
    std::vector<ElementSet> proper;
    for (auto & f : state_filters(a, sigma))
        if (! f.contains(a.bottom()))
            proper.push_back(f);
    std::vector<ElementSet> out;
    for (const auto & f : proper)
        if (std::none_of(proper.begin(), proper.end(),
                [&](const ElementSet & g) { return g != f && f.is_subset_of(g); }))
            out.push_back(f);
    return out;
}

bool satisfies_state_maximality_criterion(const FiniteBLAlgebra & a, std::span<const Element> sigma,
    const ElementSet & f)
{
    for (auto x : a.elements())
        if (! f.contains(x) && ! f.contains(a.neg(a.powers(sigma[x]).back())))
            return false;
    return true;
}

ElementSet rad_sigma(const FiniteBLAlgebra & a, std::span<const Element> sigma)
{
    auto r = ElementSet::full(a.size());
    for (const auto & m : maximal_state_filters(a, sigma))
        r = r & m;
    return r;
}

Subalgebra image_subalgebra(const FiniteBLAlgebra & a, const StateOperator & op)
{
    ElementSet fixed(a.size());
    for (auto x : a.elements())
        if (op(x) == x)
            fixed.insert(x);
    return subalgebra(a, fixed);
}

StateAlgebraClassification classify_state_algebra(const FiniteBLAlgebra & a, const StateOperator & op)
{
    StateAlgebraClassification c{
        .ssbl_simple = {},
        .sssbl_semisimple = {},
        .radical_faithful = {},
        .ker = kernel(a, op.map()),
        .rad_sigma = rad_sigma(a, op.map()),
        .maximal_state_filters = maximal_state_filters(a, op.map()),
        .image = image_subalgebra(a, op),
        .algebra = classify_algebra(a),
        .image_algebra = {},
        .ker_maximal = false,
    };
    c.image_algebra = classify_algebra(c.image.algebra);
    c.ssbl_simple.holds = c.image_algebra.simple.holds;
    if (! c.image_algebra.semisimple.holds)
        c.sssbl_semisimple = {false, c.image.embedding[*c.image_algebra.semisimple.witness]};
    const auto kr = kernel_and_faithfulness(a, op);
    c.radical_faithful = {kr.radical_faithful, kr.radical_witness};
    c.ker_maximal = std::find(c.algebra.maximal_filters.begin(), c.algebra.maximal_filters.end(), c.ker)
        != c.algebra.maximal_filters.end();
    return c;
}

MVReport mv_equivalence_check(const FiniteBLAlgebra & a, std::span<const Element> map)
{
    for (auto x : a.elements())
        if (a.neg(a.neg(x)) != x)
            throw NotMV("element " + a.label(x) + " is not equal to its double negation");
    const auto n = a.size();
    const auto & s = map;
    MVReport r;
    auto fail = [&](std::string law, std::vector<Element> w) {
        if (! r.mv_failure)
            r.mv_failure = LawFailure{std::move(law), std::move(w)};
    };
    if (s[a.top()] != a.top())
        fail("(1)MV", {a.top()});
    for (Element x = 0; x < n; ++x)
        if (s[a.neg(x)] != a.neg(s[x]))
            fail("(2)MV", {x});
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (s[a.oplus(x, y)] != a.oplus(s[x], s[a.ominus(y, a.prod(x, y))]))
                fail("(3)MV", {x, y});
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            const auto p = a.oplus(s[x], s[y]);
            if (s[p] != p)
                fail("(4)MV", {x, y});
        }
    r.mv_axioms = ! r.mv_failure;
    const auto op = verify_operator(a, std::vector<Element>(map.begin(), map.end()));
    r.state = op.is_state();
    r.agree = r.mv_axioms == r.state;
    r.strong_if_state = ! op.is_state() || op.is_strong();
    if (op.is_state())
        for (Element x = 0; x < n && r.additive; ++x)
            for (Element y = 0; y < n; ++y)
                if (a.orthogonal(x, y) && s[a.partial_sum(x, y)] != a.partial_sum(s[x], s[y])) {
                    r.additive = false;
                    r.additivity_witness = std::vector{x, y};
                    break;
                }
    return r;
}

} // namespace blstate
