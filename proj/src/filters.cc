#include <blstate/filters.hh>

#include <algorithm>

namespace blstate {

namespace {

    /// Some power x^n has its negation in `s`. Powers only decrease, so the
    /// last power of the cycle is the one to test.
    bool some_power_neg_in(const FiniteBLAlgebra & a, Element x, const ElementSet & s)
    {
        return s.contains(a.neg(a.powers(x).back()));
    }

    bool is_proper(const FiniteBLAlgebra & a, const ElementSet & f) { return ! f.contains(a.bottom()); }

} // namespace

bool is_filter(const FiniteBLAlgebra & a, const ElementSet & s)
{
    if (s.universe() != a.size() || ! s.contains(a.top()))
        return false;
    const auto m = s.members();
    for (auto x : m) {
        for (auto y : m)
            if (! s.contains(a.prod(x, y)))
                return false;
        for (auto y : a.elements())
            if (a.leq(x, y) && ! s.contains(y))
                return false;
    }
    return true;
}

std::vector<ElementSet> filters_by_subsets(const FiniteBLAlgebra & a)
{
    const auto n = a.size();
    if (n > 24)
        throw std::invalid_argument("subset scan limited to 24 elements");
    std::vector<ElementSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (! (mask >> a.top() & 1))
            continue;
        ElementSet s(n);
        for (Element x = 0; x < n; ++x)
            if (mask >> x & 1)
                s.insert(x);
        if (is_filter(a, s))
            out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementSet> filters_by_idempotents(const FiniteBLAlgebra & a)
{
    std::vector<ElementSet> out;
    for (auto x : a.elements())
        if (a.is_idempotent(x))
            out.push_back(a.upset(x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ElementSet> all_filters(const FiniteBLAlgebra & a)
{
    return a.size() <= 16 ? filters_by_subsets(a) : filters_by_idempotents(a);
}

ElementSet filter_generated(const FiniteBLAlgebra & a, const ElementSet & generators)
{
    if (generators.empty())
        throw std::invalid_argument("filter_generated needs a nonempty generating set");
    ElementSet s = generators;
    s.insert(a.top());
    for (bool grew = true; grew;) {
        grew = false;
        const auto m = s.members();
        for (auto x : m)
            for (auto y : m)
                if (auto p = a.prod(x, y); ! s.contains(p)) {
                    s.insert(p);
                    grew = true;
                }
    }
    ElementSet up(a.size());
    for (auto x : s.members())
        up = up | a.upset(x);
    return up;
}

std::vector<ElementSet> maximal_filters(const FiniteBLAlgebra & a)
{
    std::vector<ElementSet> proper;
    for (auto & f : all_filters(a))
        if (is_proper(a, f))
            proper.push_back(f);
    std::vector<ElementSet> out;
    for (const auto & f : proper) {
        const bool dominated = std::any_of(proper.begin(), proper.end(),
            [&](const ElementSet & g) { return g != f && f.is_subset_of(g); });
        if (! dominated)
            out.push_back(f);
    }
    return out;
}

bool satisfies_maximality_criterion(const FiniteBLAlgebra & a, const ElementSet & f)
{
    for (auto x : a.elements())
        if (! f.contains(x) && ! some_power_neg_in(a, x, f))
            return false;
    return true;
}

ElementSet radical(const FiniteBLAlgebra & a)
{
    auto r = ElementSet::full(a.size());
    for (const auto & m : maximal_filters(a))
        r = r & m;
    return r;
}

ElementSet radical_by_formula(const FiniteBLAlgebra & a)
{
    ElementSet r(a.size());
    for (auto x : a.elements()) {
        const auto ps = a.powers(x);
        if (std::all_of(ps.begin(), ps.end(), [&](Element p) { return a.leq(a.neg(p), x); }))
            r.insert(x);
    }
    return r;
}

ElementSet negations(const FiniteBLAlgebra & a, const ElementSet & s)
{
    ElementSet out(a.size());
    for (auto x : s.members())
        out.insert(a.neg(x));
    return out;
}

bool is_primary(const FiniteBLAlgebra & a, const ElementSet & p)
{
    if (! is_proper(a, p))
        return false;
    for (auto x : a.elements())
        for (auto y : a.elements())
            if (p.contains(a.neg(a.prod(x, y))) && ! some_power_neg_in(a, x, p) && ! some_power_neg_in(a, y, p))
                return false;
    return true;
}

std::vector<ElementSet> primary_filters(const FiniteBLAlgebra & a)
{
    std::vector<ElementSet> out;
    for (auto & f : all_filters(a))
        if (is_primary(a, f))
            out.push_back(f);
    return out;
}

AlgebraClassification classify_algebra(const FiniteBLAlgebra & a)
{
    AlgebraClassification c;
    const auto filters = all_filters(a);
    c.filter_count = filters.size();
    c.maximal_filters = maximal_filters(a);
    c.radical = radical(a);
    c.radical_by_formula = radical_by_formula(a);
    c.radical_neg = negations(a, c.radical);
    c.primary_filters = primary_filters(a);

    c.simple.holds = filters.size() == 2;
    for (auto x : c.radical.members())
        if (x != a.top()) {
            c.semisimple = {false, x};
            break;
        }
    c.local.holds = c.maximal_filters.size() == 1;
    for (auto x : a.elements())
        if (! c.radical.contains(x) && ! c.radical_neg.contains(x)) {
            c.perfect = {false, x};
            break;
        }
    for (auto x : a.elements())
        if (x != a.top() && ! a.ord(x).is_finite()) {
            c.locally_finite = {false, x};
            break;
        }
    for (auto x : a.elements())
        if (! a.ord(x).is_finite() && ! a.ord(a.neg(x)).is_finite()) {
            c.local_by_order = {false, x};
            break;
        }
    return c;
}

Irreducibility subdirectly_irreducible(const FiniteBLAlgebra & a, std::span<const Element> sigma)
{
    std::vector<ElementSet> nontrivial;
    const ElementSet trivial(a.size(), {a.top()});
    for (auto & f : all_filters(a)) {
        if (f == trivial)
            continue;
        if (! sigma.empty()) {
            const auto m = f.members();
            if (! std::all_of(m.begin(), m.end(), [&](Element x) { return f.contains(sigma[x]); }))
                continue;
        }
        nontrivial.push_back(f);
    }
    for (const auto & f : nontrivial)
        if (std::all_of(nontrivial.begin(), nontrivial.end(), [&](const ElementSet & g) { return f.is_subset_of(g); }))
            return {true, f};
    return {};
}

} // namespace blstate
