#include <blstate/operator.hh>

#include <functional>

namespace blstate {

std::string_view to_string(OperatorClass c)
{
    switch (c) {
    case OperatorClass::none:
        return "none";
    case OperatorClass::state:
        return "state";
    case OperatorClass::strong:
        return "strong";
    case OperatorClass::morphism:
        return "morphism";
    }
    return "?";
}

OperatorClass OperatorVerdict::operator_class() const
{
    if (morphism)
        return OperatorClass::morphism;
    if (strong)
        return OperatorClass::strong;
    if (state)
        return OperatorClass::state;
    return OperatorClass::none;
}

namespace {

    using Unary = std::function<bool(Element)>;
    using Binary = std::function<bool(Element, Element)>;

    struct Law {
        std::string name;
        Unary unary;   // set for one-variable laws
        Binary binary; // set for two-variable laws
    };

    std::optional<LawFailure> first_failure(const Law & law, std::size_t n)
    {
        if (law.unary) {
            for (Element x = 0; x < n; ++x)
                if (! law.unary(x))
                    return LawFailure{law.name, {x}};
            return std::nullopt;
        }
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                if (! law.binary(x, y))
                    return LawFailure{law.name, {x, y}};
        return std::nullopt;
    }

    std::optional<LawFailure> first_failure(const std::vector<const Law *> & laws, std::size_t n)
    {
        for (auto * l : laws)
            if (auto f = first_failure(*l, n))
                return f;
        return std::nullopt;
    }

} // namespace

StateOperator verify_operator(const FiniteBLAlgebra & a, std::vector<Element> map)
{
    const auto n = a.size();
    if (map.size() != n)
        throw std::invalid_argument("operator map has " + std::to_string(map.size()) + " entries, expected "
            + std::to_string(n));
    for (auto v : map)
        if (v >= n)
            throw std::invalid_argument("operator map value " + std::to_string(v) + " out of range");

    const auto & s = map;
    const Law l1{"(1)", [&](Element x) { return x != a.bottom() || s[x] == a.bottom(); }, {}};
    const Law l2{"(2)", {}, [&](Element x, Element y) { return s[a.impl(x, y)] == a.impl(s[x], s[a.meet(x, y)]); }};
    const Law l3{"(3)", {},
        [&](Element x, Element y) { return s[a.prod(x, y)] == a.prod(s[x], s[a.impl(x, a.prod(x, y))]); }};
    const Law l3s{"(3')", {},
        [&](Element x, Element y) { return s[a.prod(x, y)] == a.prod(s[x], s[a.join(a.neg(x), y)]); }};
    const Law l4{"(4)", {}, [&](Element x, Element y) {
                     const auto p = a.prod(s[x], s[y]);
                     return s[p] == p;
                 }};
    const Law l5{"(5)", {}, [&](Element x, Element y) {
                     const auto p = a.impl(s[x], s[y]);
                     return s[p] == p;
                 }};
    const Law l6{"(6)", {}, [&](Element x, Element y) { return s[a.prod(x, y)] == a.prod(s[x], s[y]); }};
    const Law l7{"(7)", {}, [&](Element x, Element y) { return s[a.impl(x, y)] == a.impl(s[x], s[y]); }};

    OperatorVerdict v;
    v.state_failure = first_failure({&l1, &l2, &l3, &l4, &l5}, n);
    v.strong_failure = first_failure({&l1, &l2, &l3s, &l4, &l5}, n);
    v.morphism_failure = first_failure({&l1, &l2, &l4, &l5, &l6}, n);
    v.impl_failure = first_failure(l7, n);
    v.state = ! v.state_failure;
    v.strong = ! v.strong_failure;
    v.morphism = ! v.morphism_failure;
    v.preserves_impl = ! v.impl_failure;
    v.class_chain_consistent = (! v.morphism || v.strong) && (! v.strong || v.state);

    if (! v.state) {
        const Law ca{"(a)", [&](Element x) { return x != a.top() || s[x] == a.top(); }, {}};
        const Law cb{"(b)", [&](Element x) { return s[a.neg(x)] == a.neg(s[x]); }, {}};
        const Law cc{"(c)", {}, [&](Element x, Element y) { return ! a.leq(x, y) || a.leq(s[x], s[y]); }};
        const Law cd{"(d)", {}, [&](Element x, Element y) { return a.leq(a.prod(s[x], s[y]), s[a.prod(x, y)]); }};
        const Law cj{"(j)", [&](Element x) { return s[s[x]] == s[x]; }, {}};
        const std::vector<const Law *> laws{&ca, &cb, &cc, &cd, &cj};
        // diagonal instances of every law first, then the full scan
        for (auto * l : laws) {
            for (Element x = 0; x < n && ! v.consequence_failure; ++x) {
                const bool ok = l->unary ? l->unary(x) : l->binary(x, x);
                if (! ok)
                    v.consequence_failure = LawFailure{l->name, l->unary ? std::vector{x} : std::vector{x, x}};
            }
            if (v.consequence_failure)
                break;
        }
        if (! v.consequence_failure)
            v.consequence_failure = first_failure(laws, n);
    }
    return {std::move(map), std::move(v)};
}

StateOperator identity_operator(const FiniteBLAlgebra & a)
{
    std::vector<Element> map(a.size());
    for (auto x : a.elements())
        map[x] = x;
    return verify_operator(a, std::move(map));
}

} // namespace blstate
