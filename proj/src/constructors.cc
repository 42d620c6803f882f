#include <blstate/constructors.hh>
#include <blstate/filters.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace blstate {

NonLinearSummand::NonLinearSummand(std::size_t i) :
    std::runtime_error("ordinal summand " + std::to_string(i) + " is not linearly ordered"), index(i)
{
}

namespace {

    OperationTables blank(std::size_t n)
    {
        OperationTables t;
        t.labels.resize(n);
        t.meet.assign(n * n, 0);
        t.join.assign(n * n, 0);
        t.prod.assign(n * n, 0);
        t.impl.assign(n * n, 0);
        return t;
    }

    /// Tables of `a` with element old → perm[old].
    FiniteBLAlgebra relabel(const FiniteBLAlgebra & a, const std::vector<Element> & perm)
    {
        const auto n = a.size();
        auto t = blank(n);
        for (auto x : a.elements()) {
            t.labels[perm[x]] = a.label(x);
            for (auto y : a.elements()) {
                const auto k = perm[x] * n + perm[y];
                t.meet[k] = perm[a.meet(x, y)];
                t.join[k] = perm[a.join(x, y)];
                t.prod[k] = perm[a.prod(x, y)];
                t.impl[k] = perm[a.impl(x, y)];
            }
        }
        t.bottom = perm[a.bottom()];
        t.top = perm[a.top()];
        return seal(std::move(t));
    }

    FiniteBLAlgebra binary_ordinal_sum(const FiniteBLAlgebra & lower, const FiniteBLAlgebra & upper)
    {
        // lower is a chain; list its non-top elements bottom-up
        std::vector<Element> low;
        for (auto x : lower.elements())
            if (x != lower.top())
                low.push_back(x);
        std::sort(low.begin(), low.end(), [&](Element x, Element y) { return lower.lt(x, y); });
        std::vector<Element> up;
        for (auto x : upper.elements())
            if (x != upper.top())
                up.push_back(x);

        const auto n = low.size() + up.size() + 1;
        const Element top = static_cast<Element>(n - 1);
        std::vector<Element> from_low(lower.size()), from_up(upper.size());
        for (std::size_t i = 0; i < low.size(); ++i)
            from_low[low[i]] = static_cast<Element>(i);
        for (std::size_t j = 0; j < up.size(); ++j)
            from_up[up[j]] = static_cast<Element>(low.size() + j);
        from_low[lower.top()] = top;
        from_up[upper.top()] = top;

        // side: 0 = lower summand without top, 1 = upper summand without top, 2 = shared top
        auto side = [&](Element u) { return u == top ? 2 : (u < low.size() ? 0 : 1); };
        auto orig_low = [&](Element u) { return u == top ? lower.top() : low[u]; };
        auto orig_up = [&](Element u) { return u == top ? upper.top() : up[u - low.size()]; };

        auto t = blank(n);
        std::set<std::string> used;
        for (std::size_t i = 0; i < low.size(); ++i) {
            t.labels[i] = lower.label(low[i]);
            used.insert(t.labels[i]);
        }
        for (std::size_t j = 0; j < up.size(); ++j) {
            std::string l = upper.label(up[j]);
            while (used.contains(l))
                l += "'";
            used.insert(l);
            t.labels[low.size() + j] = l;
        }
        {
            std::string l = upper.label(upper.top());
            while (used.contains(l))
                l += "'";
            t.labels[top] = l;
        }

        for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v) {
                const auto k = u * n + v;
                const int su = side(u), sv = side(v);
                if (su != 1 && sv != 1) {
                    // both in the lower summand (the shared top counts as its top)
                    auto x = orig_low(u), y = orig_low(v);
                    t.meet[k] = from_low[lower.meet(x, y)];
                    t.join[k] = from_low[lower.join(x, y)];
                    t.prod[k] = from_low[lower.prod(x, y)];
                    t.impl[k] = from_low[lower.impl(x, y)];
                } else if (su != 0 && sv != 0) {
                    auto x = orig_up(u), y = orig_up(v);
                    t.meet[k] = from_up[upper.meet(x, y)];
                    t.join[k] = from_up[upper.join(x, y)];
                    t.prod[k] = from_up[upper.prod(x, y)];
                    t.impl[k] = from_up[upper.impl(x, y)];
                } else if (su == 0) {
                    // u in lower \ {1}, v in upper \ {1}
                    t.meet[k] = u;
                    t.join[k] = v;
                    t.prod[k] = u;
                    t.impl[k] = top;
                } else {
                    // u in upper \ {1}, v in lower \ {1}
                    t.meet[k] = v;
                    t.join[k] = u;
                    t.prod[k] = v;
                    t.impl[k] = v;
                }
            }
        t.bottom = low.empty() ? from_up[upper.bottom()] : 0;
        t.top = top;
        return seal(std::move(t));
    }

    /// Cheap isomorphism invariant of a single element.
    std::tuple<ExtendedNat, bool, std::size_t, std::size_t> profile(const FiniteBLAlgebra & a, Element x)
    {
        std::size_t below = 0, above = 0;
        for (auto y : a.elements()) {
            below += a.leq(y, x);
            above += a.leq(x, y);
        }
        return {a.ord(x), a.is_idempotent(x), below, above};
    }

    std::optional<std::vector<Element>> search_isomorphism(const FiniteBLAlgebra & a, const FiniteBLAlgebra & b,
        const std::function<bool(const std::vector<Element> &, const std::vector<bool> &, Element)> & extra)
    {
        const auto n = a.size();
        if (n != b.size())
            return std::nullopt;
        std::vector<decltype(profile(a, 0))> pa(n), pb(n);
        for (Element x = 0; x < n; ++x) {
            pa[x] = profile(a, x);
            pb[x] = profile(b, x);
        }
        std::vector<Element> f(n, 0);
        std::vector<bool> assigned(n, false), used(n, false);

        auto consistent = [&](Element x) {
            for (Element y = 0; y < n; ++y) {
                if (! assigned[y])
                    continue;
                for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
                    auto check = [&](Element r, Element s) { return ! assigned[r] || f[r] == s; };
                    if (! check(a.prod(p, q), b.prod(f[p], f[q])) || ! check(a.impl(p, q), b.impl(f[p], f[q]))
                        || ! check(a.meet(p, q), b.meet(f[p], f[q])) || ! check(a.join(p, q), b.join(f[p], f[q])))
                        return false;
                    // also check the reverse direction through results already placed
                    if (a.leq(p, q) != b.leq(f[p], f[q]))
                        return false;
                }
            }
            return extra(f, assigned, x);
        };

        std::function<bool(Element)> go = [&](Element x) -> bool {
            if (x == n)
                return true;
            for (Element y = 0; y < n; ++y) {
                if (used[y] || pa[x] != pb[y])
                    continue;
                f[x] = y;
                assigned[x] = used[y] = true;
                if (consistent(x) && go(x + 1))
                    return true;
                assigned[x] = used[y] = false;
            }
            return false;
        };
        if (! go(0))
            return std::nullopt;
        // full check: every result image must agree
        for (auto x : a.elements())
            for (auto y : a.elements())
                if (f[a.prod(x, y)] != b.prod(f[x], f[y]) || f[a.impl(x, y)] != b.impl(f[x], f[y])
                    || f[a.meet(x, y)] != b.meet(f[x], f[y]) || f[a.join(x, y)] != b.join(f[x], f[y]))
                    return std::nullopt;
        return f;
    }

} // namespace

FiniteBLAlgebra mv_chain(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("mv_chain needs n >= 1");
    const auto m = n + 1;
    auto t = blank(m);
    t.meet = chain_meet(m);
    t.join = chain_join(m);
    for (Element i = 0; i < m; ++i) {
        t.labels[i] = std::to_string(i);
        for (Element j = 0; j < m; ++j) {
            const long s = long(i) + long(j) - long(n);
            t.prod[i * m + j] = static_cast<Element>(std::max(s, 0L));
            t.impl[i * m + j] = static_cast<Element>(std::min<long>(long(n) - long(i) + long(j), long(n)));
        }
    }
    t.bottom = 0;
    t.top = static_cast<Element>(n);
    return seal(std::move(t));
}

FiniteBLAlgebra godel_chain(std::size_t elements)
{
    if (elements < 2)
        throw std::invalid_argument("godel_chain needs at least 2 elements");
    const auto n = elements;
    auto t = blank(n);
    t.meet = chain_meet(n);
    t.join = chain_join(n);
    t.prod = chain_meet(n);
    for (Element i = 0; i < n; ++i) {
        t.labels[i] = i == 0 ? "0" : (i + 1 == n ? "1" : "c" + std::to_string(i));
        for (Element j = 0; j < n; ++j)
            t.impl[i * n + j] = i <= j ? Element(n - 1) : j;
    }
    t.bottom = 0;
    t.top = static_cast<Element>(n - 1);
    return seal(std::move(t));
}

FiniteBLAlgebra direct_product(const FiniteBLAlgebra & a, const FiniteBLAlgebra & b)
{
    const auto na = a.size(), nb = b.size(), n = na * nb;
    auto t = blank(n);
    auto idx = [nb](Element x, Element y) { return static_cast<Element>(x * nb + y); };
    for (auto x1 : a.elements())
        for (auto y1 : b.elements()) {
            const auto u = idx(x1, y1);
            t.labels[u] = "(" + a.label(x1) + "," + b.label(y1) + ")";
            for (auto x2 : a.elements())
                for (auto y2 : b.elements()) {
                    const auto k = u * n + idx(x2, y2);
                    t.meet[k] = idx(a.meet(x1, x2), b.meet(y1, y2));
                    t.join[k] = idx(a.join(x1, x2), b.join(y1, y2));
                    t.prod[k] = idx(a.prod(x1, x2), b.prod(y1, y2));
                    t.impl[k] = idx(a.impl(x1, x2), b.impl(y1, y2));
                }
        }
    t.bottom = idx(a.bottom(), b.bottom());
    t.top = idx(a.top(), b.top());
    return seal(std::move(t));
}

FiniteBLAlgebra ordinal_sum(const std::vector<FiniteBLAlgebra> & summands)
{
    if (summands.empty())
        throw std::invalid_argument("ordinal_sum needs at least one summand");
    for (std::size_t i = 0; i + 1 < summands.size(); ++i)
        if (! summands[i].is_linear())
            throw NonLinearSummand(i);
    FiniteBLAlgebra acc = summands.front();
    for (std::size_t i = 1; i < summands.size(); ++i)
        acc = binary_ordinal_sum(acc, summands[i]);
    return acc;
}

StateAlgebra four_element_example()
{
    OperationTables t;
    t.labels = {"0", "a", "b", "1"};
    t.meet = chain_meet(4);
    t.join = chain_join(4);
    // clang-format off
    t.prod = {0, 0, 0, 0,
              0, 0, 1, 1,
              0, 1, 2, 2,
              0, 1, 2, 3};
    t.impl = {3, 3, 3, 3,
              1, 3, 3, 3,
              0, 1, 3, 3,
              0, 1, 2, 3};
    // clang-format on
    t.bottom = 0;
    t.top = 3;
    auto a = seal(std::move(t));
    auto op = verify_operator(a, {0, 1, 3, 3});
    return {std::move(a), std::move(op)};
}

Quotient quotient_by_filter(const FiniteBLAlgebra & a, const ElementSet & filter)
{
    if (! is_filter(a, filter))
        throw NotAFilter("set " + filter.to_string() + " is not a filter");
    const auto n = a.size();
    constexpr Element unset = ~Element{0};
    std::vector<Element> cls(n, unset);
    std::vector<Element> reps;
    for (auto x : a.elements()) {
        if (cls[x] != unset)
            continue;
        const auto c = static_cast<Element>(reps.size());
        reps.push_back(x);
        for (auto y : a.elements())
            if (filter.contains(a.dist(x, y)))
                cls[y] = c;
    }
    const auto m = reps.size();
    auto t = blank(m);
    for (Element c = 0; c < m; ++c) {
        ElementSet members(n);
        for (auto x : a.elements())
            if (cls[x] == c)
                members.insert(x);
        t.labels[c] = a.set_to_string(members);
        for (Element d = 0; d < m; ++d) {
            const auto k = c * m + d;
            t.meet[k] = cls[a.meet(reps[c], reps[d])];
            t.join[k] = cls[a.join(reps[c], reps[d])];
            t.prod[k] = cls[a.prod(reps[c], reps[d])];
            t.impl[k] = cls[a.impl(reps[c], reps[d])];
        }
    }
    t.bottom = cls[a.bottom()];
    t.top = cls[a.top()];
    return {seal(std::move(t)), std::move(cls)};
}

Subalgebra subalgebra(const FiniteBLAlgebra & a, const ElementSet & members)
{
    auto emb = members.members();
    const auto m = emb.size();
    constexpr Element unset = ~Element{0};
    std::vector<Element> index(a.size(), unset);
    for (Element i = 0; i < m; ++i)
        index[emb[i]] = i;
    auto at = [&](Element x) {
        if (index[x] == unset)
            throw std::invalid_argument("subset " + a.set_to_string(members) + " is not closed under the operations");
        return index[x];
    };
    auto t = blank(m);
    for (Element i = 0; i < m; ++i) {
        t.labels[i] = a.label(emb[i]);
        for (Element j = 0; j < m; ++j) {
            const auto k = i * m + j;
            t.meet[k] = at(a.meet(emb[i], emb[j]));
            t.join[k] = at(a.join(emb[i], emb[j]));
            t.prod[k] = at(a.prod(emb[i], emb[j]));
            t.impl[k] = at(a.impl(emb[i], emb[j]));
        }
    }
    t.bottom = at(a.bottom());
    t.top = at(a.top());
    return {seal(std::move(t)), std::move(emb)};
}

bool is_homomorphism(const FiniteBLAlgebra & s, const FiniteBLAlgebra & t, const std::vector<Element> & h)
{
    if (h.size() != s.size())
        return false;
    for (auto x : h)
        if (x >= t.size())
            return false;
    if (h[s.bottom()] != t.bottom() || h[s.top()] != t.top())
        return false;
    for (auto x : s.elements())
        for (auto y : s.elements())
            if (h[s.prod(x, y)] != t.prod(h[x], h[y]) || h[s.impl(x, y)] != t.impl(h[x], h[y])
                || h[s.meet(x, y)] != t.meet(h[x], h[y]) || h[s.join(x, y)] != t.join(h[x], h[y]))
                return false;
    return true;
}

Homomorphism make_homomorphism(const FiniteBLAlgebra & source, const FiniteBLAlgebra & target, std::vector<Element> map)
{
    if (! is_homomorphism(source, target, map))
        throw NotAHomomorphism("map does not preserve the BL operations");
    return {std::move(map)};
}

StateAlgebra diagonal_operator(const FiniteBLAlgebra & a, int which)
{
    if (which != 1 && which != 2)
        throw std::invalid_argument("diagonal_operator: which must be 1 or 2");
    auto p = direct_product(a, a);
    const auto n = static_cast<Element>(a.size());
    std::vector<Element> map(p.size());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            const Element keep = which == 1 ? x : y;
            map[x * n + y] = keep * n + keep;
        }
    auto op = verify_operator(p, std::move(map));
    return {std::move(p), std::move(op)};
}

StateAlgebra sigma_h(const FiniteBLAlgebra & b, const FiniteBLAlgebra & c, const Homomorphism & h)
{
    if (! is_homomorphism(b, c, h.map))
        throw NotAHomomorphism("sigma_h needs a homomorphism B -> C");
    auto p = direct_product(b, c);
    const auto nc = static_cast<Element>(c.size());
    std::vector<Element> map(p.size());
    for (auto x : b.elements())
        for (auto y : c.elements())
            map[x * nc + y] = x * nc + h.map[x];
    auto op = verify_operator(p, std::move(map));
    return {std::move(p), std::move(op)};
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteBLAlgebra & a, const FiniteBLAlgebra & b)
{
    return search_isomorphism(a, b, [](auto &, auto &, Element) { return true; });
}

std::optional<std::vector<Element>> find_state_isomorphism(const FiniteBLAlgebra & a, const std::vector<Element> & sigma,
    const FiniteBLAlgebra & b, const std::vector<Element> & tau)
{
    if (sigma.size() != a.size() || tau.size() != b.size())
        return std::nullopt;
    return search_isomorphism(a, b, [&](const std::vector<Element> & f, const std::vector<bool> & assigned, Element x) {
        for (Element y = 0; y <= x; ++y)
            if (assigned[y] && assigned[sigma[y]] && f[sigma[y]] != tau[f[y]])
                return false;
        return true;
    });
}

FiniteBLAlgebra canonical_chain(const FiniteBLAlgebra & chain)
{
    if (! chain.is_linear())
        throw std::invalid_argument("canonical_chain needs a chain");
    std::vector<Element> perm(chain.size());
    for (auto x : chain.elements()) {
        Element below = 0;
        for (auto y : chain.elements())
            below += chain.lt(y, x);
        perm[x] = below;
    }
    return relabel(chain, perm);
}

} // namespace blstate
