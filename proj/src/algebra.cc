#include <blstate/algebra.hh>

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

namespace blstate {

namespace {

    /// Read-only view used while the tables are still unverified.
    struct Tables {
        const OperationTables & t;
        std::size_t n;

        Element meet(Element a, Element b) const { return t.meet[a * n + b]; }
        Element join(Element a, Element b) const { return t.join[a * n + b]; }
        Element prod(Element a, Element b) const { return t.prod[a * n + b]; }
        Element impl(Element a, Element b) const { return t.impl[a * n + b]; }
        bool leq(Element a, Element b) const { return meet(a, b) == a; }
    };

    using LawFn = std::function<bool(const Tables &, std::span<const Element>)>;

    struct Law {
        Axiom axiom;
        std::string_view name;
        unsigned arity;
        LawFn holds;
    };

    const std::vector<Law> & laws()
    {
        static const std::vector<Law> all = {
            {Axiom::lattice, "meet-commutativity", 2,
                [](const Tables & t, auto v) { return t.meet(v[0], v[1]) == t.meet(v[1], v[0]); }},
            {Axiom::lattice, "join-commutativity", 2,
                [](const Tables & t, auto v) { return t.join(v[0], v[1]) == t.join(v[1], v[0]); }},
            {Axiom::lattice, "meet-associativity", 3,
                [](const Tables & t, auto v) {
                    return t.meet(t.meet(v[0], v[1]), v[2]) == t.meet(v[0], t.meet(v[1], v[2]));
                }},
            {Axiom::lattice, "join-associativity", 3,
                [](const Tables & t, auto v) {
                    return t.join(t.join(v[0], v[1]), v[2]) == t.join(v[0], t.join(v[1], v[2]));
                }},
            {Axiom::lattice, "meet-absorption", 2,
                [](const Tables & t, auto v) { return t.meet(v[0], t.join(v[0], v[1])) == v[0]; }},
            {Axiom::lattice, "join-absorption", 2,
                [](const Tables & t, auto v) { return t.join(v[0], t.meet(v[0], v[1])) == v[0]; }},
            {Axiom::lattice, "order-consistency", 2,
                [](const Tables & t, auto v) { return (t.meet(v[0], v[1]) == v[0]) == (t.join(v[0], v[1]) == v[1]); }},
            {Axiom::lattice, "bottom-least", 1,
                [](const Tables & t, auto v) { return t.meet(t.t.bottom, v[0]) == t.t.bottom; }},
            {Axiom::lattice, "top-greatest", 1,
                [](const Tables & t, auto v) { return t.meet(v[0], t.t.top) == v[0]; }},
            {Axiom::monoid, "prod-commutativity", 2,
                [](const Tables & t, auto v) { return t.prod(v[0], v[1]) == t.prod(v[1], v[0]); }},
            {Axiom::monoid, "prod-associativity", 3,
                [](const Tables & t, auto v) {
                    return t.prod(t.prod(v[0], v[1]), v[2]) == t.prod(v[0], t.prod(v[1], v[2]));
                }},
            {Axiom::monoid, "prod-identity", 1, [](const Tables & t, auto v) { return t.prod(v[0], t.t.top) == v[0]; }},
            // c ≤ a → b  iff  a ⊙ c ≤ b, witness (a, b, c)
            {Axiom::adjointness, "adjointness", 3,
                [](const Tables & t, auto v) {
                    return t.leq(v[2], t.impl(v[0], v[1])) == t.leq(t.prod(v[0], v[2]), v[1]);
                }},
            {Axiom::divisibility, "divisibility", 2,
                [](const Tables & t, auto v) { return t.meet(v[0], v[1]) == t.prod(v[0], t.impl(v[0], v[1])); }},
            {Axiom::prelinearity, "prelinearity", 2,
                [](const Tables & t, auto v) { return t.join(t.impl(v[0], v[1]), t.impl(v[1], v[0])) == t.t.top; }},
        };
        return all;
    }

    std::optional<AxiomViolation> check_shape(const OperationTables & t)
    {
        const auto n = t.labels.size();
        auto fail = [](std::string law, std::vector<Element> w = {}) {
            return AxiomViolation{Axiom::shape, std::move(law), std::move(w)};
        };
        if (n == 0)
            return fail("empty-carrier");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (t.labels[i] == t.labels[j])
                    return fail("distinct-labels", {Element(i), Element(j)});
        const std::array<std::pair<std::string_view, const std::vector<Element> *>, 4> named = {
            {{"meet", &t.meet}, {"join", &t.join}, {"prod", &t.prod}, {"impl", &t.impl}}};
        for (auto & [name, table] : named) {
            if (table->size() != n * n)
                return fail(std::string(name) + "-size");
            for (std::size_t k = 0; k < table->size(); ++k)
                if ((*table)[k] >= n)
                    return fail(std::string(name) + "-range", {Element(k / n), Element(k % n)});
        }
        if (t.bottom >= n || t.top >= n)
            return fail("constant-range");
        return std::nullopt;
    }

    /// Calls f on every tuple of the given arity in lexicographic order;
    /// stops and returns the tuple when f returns false.
    std::optional<std::vector<Element>> first_failure(std::size_t n, unsigned arity,
        const std::function<bool(std::span<const Element>)> & f)
    {
        std::vector<Element> v(arity, 0);
        while (true) {
            if (! f(v))
                return v;
            int i = int(arity) - 1;
            while (i >= 0 && v[i] + 1 == n) {
                v[i] = 0;
                --i;
            }
            if (i < 0)
                return std::nullopt;
            ++v[i];
        }
    }

} // namespace

std::string_view to_string(Axiom a)
{
    switch (a) {
    case Axiom::shape: return "shape";
    case Axiom::lattice: return "lattice";
    case Axiom::monoid: return "monoid";
    case Axiom::adjointness: return "adjointness";
    case Axiom::divisibility: return "divisibility";
    case Axiom::prelinearity: return "prelinearity";
    }
    return "unknown";
}

std::strong_ordering ExtendedNat::operator<=>(const ExtendedNat & o) const
{
    if (is_finite() && o.is_finite())
        return *value_ <=> *o.value_;
    if (is_finite())
        return std::strong_ordering::less;
    if (o.is_finite())
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExtendedNat::to_string() const { return is_finite() ? std::to_string(*value_) : "inf"; }

namespace {
    std::string describe(const AxiomViolation & v)
    {
        std::ostringstream os;
        os << "axiom violation: " << to_string(v.axiom) << " (" << v.law << ") at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            os << (i ? "," : "") << v.witness[i];
        os << ")";
        return os.str();
    }
} // namespace

ValidationError::ValidationError(AxiomViolation v) : std::runtime_error(describe(v)), violation_(std::move(v)) {}

NoResiduum::NoResiduum(Element a_, Element b_) :
    std::runtime_error("no residuum for (" + std::to_string(a_) + "," + std::to_string(b_) + ")"), a(a_), b(b_)
{
}

Element FiniteBLAlgebra::pow(Element x, std::size_t k) const
{
    Element r = top();
    for (std::size_t i = 0; i < k; ++i)
        r = prod(r, x);
    return r;
}

std::vector<Element> FiniteBLAlgebra::powers(Element x) const
{
    std::vector<Element> out{x};
    while (true) {
        auto next = prod(out.back(), x);
        if (next == out.back())
            return out;
        out.push_back(next);
    }
}

ExtendedNat FiniteBLAlgebra::ord(Element x) const
{
    auto ps = powers(x);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i] == bottom())
            return ExtendedNat(i + 1);
    return ExtendedNat::infinity();
}

bool FiniteBLAlgebra::is_linear() const
{
    for (auto a : elements())
        for (auto b : elements())
            if (! comparable(a, b))
                return false;
    return true;
}

ElementSet FiniteBLAlgebra::upset(Element a) const
{
    ElementSet s(size());
    for (auto z : elements())
        if (leq(a, z))
            s.insert(z);
    return s;
}

Element FiniteBLAlgebra::element(std::string_view label) const
{
    for (auto e : elements())
        if (t_.labels[e] == label)
            return e;
    throw std::out_of_range("no element labelled '" + std::string(label) + "'");
}

std::string FiniteBLAlgebra::set_to_string(const ElementSet & s) const
{
    std::string out = "{";
    bool first = true;
    for (auto m : s.members()) {
        if (! first)
            out += ",";
        out += label(m);
        first = false;
    }
    return out + "}";
}

bool FiniteBLAlgebra::operator==(const FiniteBLAlgebra & o) const
{
    return t_.labels == o.t_.labels && t_.meet == o.t_.meet && t_.join == o.t_.join && t_.prod == o.t_.prod
        && t_.impl == o.t_.impl && t_.bottom == o.t_.bottom && t_.top == o.t_.top;
}

std::variant<FiniteBLAlgebra, AxiomViolation> verify_bl_axioms(OperationTables tables)
{
    if (auto v = check_shape(tables))
        return *v;
    const Tables view{tables, tables.size()};
    for (const auto & law : laws()) {
        auto w = first_failure(view.n, law.arity, [&](std::span<const Element> v) { return law.holds(view, v); });
        if (w)
            return AxiomViolation{law.axiom, std::string(law.name), *w};
    }
    return FiniteBLAlgebra(std::move(tables));
}

FiniteBLAlgebra seal(OperationTables tables)
{
    auto r = verify_bl_axioms(std::move(tables));
    if (auto * v = std::get_if<AxiomViolation>(&r))
        throw ValidationError(*v);
    return std::get<FiniteBLAlgebra>(std::move(r));
}

bool law_holds_at(const OperationTables & tables, const AxiomViolation & v)
{
    if (v.axiom == Axiom::shape)
        return ! check_shape(tables).has_value();
    const Tables view{tables, tables.size()};
    for (const auto & law : laws())
        if (law.name == v.law) {
            if (v.witness.size() != law.arity)
                throw std::invalid_argument("witness arity does not match law " + v.law);
            return law.holds(view, v.witness);
        }
    throw std::invalid_argument("unknown law " + v.law);
}

std::vector<Element> residuum_from_monoid(std::size_t n, std::span<const Element> meet, std::span<const Element> prod)
{
    auto leq = [&](Element a, Element b) { return meet[a * n + b] == a; };
    std::vector<Element> impl(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            std::vector<Element> candidates;
            for (Element z = 0; z < n; ++z)
                if (leq(prod[a * n + z], b))
                    candidates.push_back(z);
            auto is_max = [&](Element m) {
                return std::all_of(candidates.begin(), candidates.end(), [&](Element z) { return leq(z, m); });
            };
            auto it = std::find_if(candidates.begin(), candidates.end(), is_max);
            if (it == candidates.end())
                throw NoResiduum(a, b);
            impl[a * n + b] = *it;
        }
    return impl;
}

std::vector<Element> chain_meet(std::size_t n)
{
    std::vector<Element> t(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            t[a * n + b] = std::min(a, b);
    return t;
}

std::vector<Element> chain_join(std::size_t n)
{
    std::vector<Element> t(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            t[a * n + b] = std::max(a, b);
    return t;
}

void infer_bounds(OperationTables & t)
{
    const auto n = t.size();
    if (t.meet.size() != n * n)
        return;
    for (Element c = 0; c < n; ++c) {
        bool least = true, greatest = true;
        for (Element x = 0; x < n; ++x) {
            least = least && t.meet[c * n + x] == c;
            greatest = greatest && t.meet[x * n + c] == x;
        }
        if (least)
            t.bottom = c;
        if (greatest)
            t.top = c;
    }
}

std::variant<Element, ExtendedNat> derived(const FiniteBLAlgebra & a, DerivedOp op, std::span<const Element> args,
    std::size_t exponent)
{
    const std::size_t need = (op == DerivedOp::oplus || op == DerivedOp::ominus || op == DerivedOp::dist) ? 2 : 1;
    if (args.size() != need)
        throw std::invalid_argument("wrong number of arguments for derived operation");
    for (auto x : args)
        if (x >= a.size())
            throw std::out_of_range("element index out of range");
    switch (op) {
    case DerivedOp::neg: return a.neg(args[0]);
    case DerivedOp::oplus: return a.oplus(args[0], args[1]);
    case DerivedOp::ominus: return a.ominus(args[0], args[1]);
    case DerivedOp::dist: return a.dist(args[0], args[1]);
    case DerivedOp::pow: return a.pow(args[0], exponent);
    case DerivedOp::ord: return a.ord(args[0]);
    }
    throw std::logic_error("unhandled derived operation");
}

VarietyFlags classify_variety(const FiniteBLAlgebra & a)
{
    VarietyFlags f;
    auto fail = [](IdentityCheck & c, std::vector<Element> w) {
        if (c.holds) {
            c.holds = false;
            c.witness = std::move(w);
        }
    };
    for (auto x : a.elements()) {
        if (a.neg(a.neg(x)) != x)
            fail(f.is_mv, {x});
        if (a.prod(x, x) != x)
            fail(f.is_godel, {x});
        for (auto y : a.elements()) {
            if (! a.comparable(x, y))
                fail(f.is_linear, {x, y});
            if (a.impl(x, a.prod(x, y)) != a.join(a.neg(x), y))
                fail(f.mv_or_product_identity, {x, y});
        }
    }
    return f;
}

} // namespace blstate
