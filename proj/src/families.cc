#include <blstate/constructors.hh>
#include <blstate/families.hh>

namespace blstate {

namespace {

    FiniteBLAlgebra build_comet(std::size_t base, const std::vector<std::size_t> & factors)
    {
        if (factors.empty())
            throw ShapeMismatch("comet needs at least one factor");
        FiniteBLAlgebra top = mv_chain(factors.front());
        for (std::size_t i = 1; i < factors.size(); ++i)
            top = direct_product(top, mv_chain(factors[i]));
        if (base == 0)
            return top;
        return ordinal_sum({mv_chain(base), top});
    }

    void require_godel_chain(const FiniteBLAlgebra & a)
    {
        if (! a.is_linear())
            throw ShapeMismatch("expected a linearly ordered algebra");
        for (auto x : a.elements())
            if (! a.is_idempotent(x))
                throw ShapeMismatch("expected a Gödel chain, " + a.label(x) + " is not idempotent");
    }

} // namespace

Comet::Comet(std::size_t base, std::vector<std::size_t> factors) :
    base_(base), factors_(std::move(factors)), algebra_(build_comet(base_, factors_))
{
}

Element Comet::embed(const std::vector<std::size_t> & coordinates) const
{
    if (coordinates.size() != factors_.size())
        throw ShapeMismatch("expected " + std::to_string(factors_.size()) + " coordinates");
    std::size_t t = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (coordinates[i] > factors_[i])
            throw ShapeMismatch("coordinate " + std::to_string(i) + " out of range");
        t = t * (factors_[i] + 1) + coordinates[i];
    }
    return static_cast<Element>(base_ + t);
}

std::vector<std::size_t> Comet::coordinates(Element x) const
{
    if (! in_top_summand(x))
        throw ShapeMismatch("element " + algebra_.label(x) + " lies in the base chain");
    std::size_t t = x - base_;
    std::vector<std::size_t> out(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        out[i] = t % (factors_[i] + 1);
        t /= factors_[i] + 1;
    }
    return out;
}

StateOperator sigma_J(const Comet & c, const std::vector<std::size_t> & j)
{
    for (auto i : j)
        if (i >= c.factors().size())
            throw ShapeMismatch("factor index " + std::to_string(i) + " out of range");
    const auto & a = c.algebra();
    std::vector<Element> map(a.size());
    for (auto x : a.elements()) {
        if (! c.in_top_summand(x)) {
            map[x] = x;
            continue;
        }
        auto coords = c.coordinates(x);
        for (auto i : j)
            coords[i] = c.factors()[i];
        map[x] = c.embed(coords);
    }
    return verify_operator(a, std::move(map));
}

SigmaA sigma_a(const Comet & c, Element a_elem)
{
    const auto & a = c.algebra();
    if (a_elem >= a.size() || ! c.in_top_summand(a_elem) || ! a.is_idempotent(a_elem))
        throw ShapeMismatch("sigma_a needs an idempotent of the top summand");
    const auto zero1 = c.bottom_of_top();
    const auto a_star = c.star(a_elem);
    std::vector<Element> map(a.size());
    bool covers = true;
    for (auto x : a.elements()) {
        if (! c.in_top_summand(x))
            map[x] = x;
        else if (a.leq(a_elem, x))
            map[x] = a.top();
        else if (a.leq(x, a_star))
            map[x] = zero1;
        else {
            map[x] = x;
            covers = false;
        }
    }
    return {verify_operator(a, std::move(map)), a_elem, a_star, covers};
}

StateOperator godel_sigma_lower(const FiniteBLAlgebra & chain, Element a)
{
    require_godel_chain(chain);
    std::vector<Element> map(chain.size());
    for (auto x : chain.elements())
        map[x] = chain.leq(x, a) ? x : chain.top();
    return verify_operator(chain, std::move(map));
}

StateOperator godel_sigma_upper(const FiniteBLAlgebra & chain, Element a)
{
    require_godel_chain(chain);
    if (a == chain.bottom())
        throw ShapeMismatch("the upper family is defined for a ≠ 0");
    std::vector<Element> map(chain.size());
    for (auto x : chain.elements())
        map[x] = chain.lt(x, a) ? x : chain.top();
    return verify_operator(chain, std::move(map));
}

} // namespace blstate
