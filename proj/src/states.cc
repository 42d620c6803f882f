#include "exact_linear.hh"

#include <blstate/constructors.hh>
#include <blstate/filters.hh>
#include <blstate/operators.hh>
#include <blstate/states.hh>

#include <algorithm>
#include <random>

namespace blstate {

std::string to_string(const Rational & r)
{
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view t) {
        std::size_t i = t.starts_with('-') ? 1 : 0;
        if (i == t.size() || ! std::all_of(t.begin() + i, t.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return boost::multiprecision::cpp_int(std::string(t));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    const auto num = parse_int(text.substr(0, slash));
    const auto den = parse_int(text.substr(slash + 1));
    if (den <= 0)
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const StateValues & s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(s[i]);
    }
    return out + ")";
}

StateVerdict check_state(const FiniteBLAlgebra & a, std::span<const Rational> s)
{
    if (s.size() != a.size())
        throw std::invalid_argument("state has " + std::to_string(s.size()) + " values, expected "
            + std::to_string(a.size()));
    const auto n = a.size();
    const Rational zero(0), one(1);
    StateVerdict v;
    for (Element x = 0; x < n; ++x)
        if (s[x] < zero || s[x] > one) {
            v.in_range = false;
            v.range_witness = x;
            break;
        }

    auto first_pair = [&](auto && holds) -> std::optional<std::vector<Element>> {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                if (! holds(x, y))
                    return std::vector{x, y};
        return std::nullopt;
    };
    auto bounds_witness = [&]() -> std::optional<std::vector<Element>> {
        if (s[a.bottom()] != zero)
            return std::vector{a.bottom()};
        if (s[a.top()] != one)
            return std::vector{a.top()};
        return std::nullopt;
    };

    v.bosbach_witness = bounds_witness();
    if (! v.bosbach_witness)
        v.bosbach_witness = first_pair([&](Element x, Element y) {
            return s[x] + s[a.impl(x, y)] == s[y] + s[a.impl(y, x)];
        });
    v.bosbach = v.in_range && ! v.bosbach_witness;

    v.riecan_witness = bounds_witness();
    if (! v.riecan_witness)
        v.riecan_witness = first_pair([&](Element x, Element y) {
            return ! a.orthogonal(x, y) || s[a.partial_sum(x, y)] == s[x] + s[y];
        });
    v.riecan = v.in_range && ! v.riecan_witness;
    v.bosbach_riecan_agree = v.bosbach == v.riecan;

    if (s[a.bottom()] != zero)
        v.morphism_witness = std::vector{a.bottom()};
    else
        v.morphism_witness = first_pair([&](Element x, Element y) {
            return s[a.impl(x, y)] == std::min<Rational>(one - s[x] + s[y], one);
        });
    v.state_morphism = v.in_range && ! v.morphism_witness;

    v.max_on_joins = ! first_pair([&](Element x, Element y) { return s[a.join(x, y)] == std::max<Rational>(s[x], s[y]); });
    v.lukasiewicz_product = ! first_pair([&](Element x, Element y) {
        return s[a.prod(x, y)] == std::max<Rational>(s[x] + s[y] - one, zero);
    });
    ElementSet ker(n);
    for (Element x = 0; x < n; ++x)
        if (s[x] == one)
            ker.insert(x);
    const auto maxes = maximal_filters(a);
    v.kernel_maximal = std::find(maxes.begin(), maxes.end(), ker) != maxes.end();

    const bool state = v.bosbach;
    v.extremal = state && v.state_morphism;
    if (state)
        v.criteria_agree = v.state_morphism == v.max_on_joins && v.max_on_joins == v.lukasiewicz_product
            && v.lukasiewicz_product == v.kernel_maximal;
    return v;
}

std::vector<StateValues> extremal_states(const FiniteBLAlgebra & a)
{
    std::vector<StateValues> out;
    for (const auto & f : maximal_filters(a)) {
        const auto q = quotient_by_filter(a, f);
        if (! q.algebra.is_linear())
            throw std::logic_error("quotient by a maximal filter is not a chain");
        const auto k = q.algebra.size() - 1;
        std::vector<std::size_t> rank(q.algebra.size(), 0);
        for (auto c : q.algebra.elements())
            for (auto d : q.algebra.elements())
                rank[c] += q.algebra.lt(d, c);
        StateValues s(a.size());
        for (auto x : a.elements())
            s[x] = Rational(rank[q.projection[x]], k);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<StateValues> state_polytope_vertices(const FiniteBLAlgebra & a,
    std::span<const std::pair<Element, Element>> tied)
{
    const auto n = a.size();
    std::vector<detail::Row> rows;
    auto row = [&] { return detail::Row(n + 1, Rational(0)); };
    {
        auto r = row();
        r[a.bottom()] += 1;
        rows.push_back(r);
        r = row();
        r[a.top()] += 1;
        r[n] = 1;
        rows.push_back(r);
    }
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y) {
            auto r = row();
            r[x] += 1;
            r[a.impl(x, y)] += 1;
            r[y] -= 1;
            r[a.impl(y, x)] -= 1;
            rows.push_back(std::move(r));
        }
    for (auto [x, y] : tied) {
        auto r = row();
        r[x] += 1;
        r[y] -= 1;
        rows.push_back(std::move(r));
    }
    auto space = detail::solve_affine(std::move(rows), n);
    if (! space)
        return {};
    std::vector<detail::Bound> bounds;
    for (std::size_t x = 0; x < n; ++x) {
        bounds.push_back({x, Rational(0), true});
        bounds.push_back({x, Rational(1), false});
    }
    return detail::vertices(*space, bounds);
}

std::optional<std::vector<Rational>> hull_coefficients(std::span<const StateValues> generators, const StateValues & s)
{
    const auto k = generators.size();
    if (k == 0)
        return std::nullopt;
    std::vector<detail::Row> rows;
    for (std::size_t x = 0; x < s.size(); ++x) {
        detail::Row r(k + 1);
        for (std::size_t i = 0; i < k; ++i)
            r[i] = generators[i].at(x);
        r[k] = s[x];
        rows.push_back(std::move(r));
    }
    detail::Row sum(k + 1, Rational(1));
    rows.push_back(std::move(sum));
    auto space = detail::solve_affine(std::move(rows), k);
    if (! space)
        return std::nullopt;
    std::vector<detail::Bound> bounds;
    for (std::size_t i = 0; i < k; ++i)
        bounds.push_back({i, Rational(0), true});
    auto v = detail::vertices(*space, bounds, true);
    if (v.empty())
        return std::nullopt;
    return v.front();
}

StateValues mix(std::span<const StateValues> generators, std::span<const Rational> weights)
{
    if (generators.empty() || generators.size() != weights.size())
        throw std::invalid_argument("mix needs one weight per generator");
    StateValues out(generators.front().size(), Rational(0));
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t x = 0; x < out.size(); ++x)
            out[x] += weights[i] * generators[i][x];
    return out;
}

bool is_sigma_compatible(std::span<const Element> sigma, std::span<const Rational> s)
{
    for (std::size_t x = 0; x < sigma.size(); ++x)
        for (std::size_t y = x + 1; y < sigma.size(); ++y)
            if (sigma[x] == sigma[y] && s[x] != s[y])
                return false;
    return true;
}

std::vector<StateValues> extremal_compatible_states(const FiniteBLAlgebra & a, std::span<const Element> sigma)
{
    std::vector<std::pair<Element, Element>> tied;
    for (auto x : a.elements())
        for (auto y : a.elements())
            if (x < y && sigma[x] == sigma[y])
                tied.emplace_back(x, y);
    return state_polytope_vertices(a, tied);
}

StateValues pull_back_state(const FiniteBLAlgebra & a, const StateOperator & op, std::span<const Rational> s)
{
    const auto image = image_subalgebra(a, op);
    if (s.size() != image.algebra.size() || ! check_state(image.algebra, s).bosbach)
        throw NotAState("values are not a state on the image subalgebra");
    std::vector<std::size_t> index(a.size(), 0);
    for (std::size_t i = 0; i < image.embedding.size(); ++i)
        index[image.embedding[i]] = i;
    StateValues out(a.size());
    for (auto x : a.elements())
        out[x] = s[index[op(x)]];
    return out;
}

StateValues restrict_to_image(const FiniteBLAlgebra & a, const StateOperator & op, std::span<const Rational> s)
{
    const auto image = image_subalgebra(a, op);
    StateValues out;
    for (auto x : image.embedding)
        out.push_back(s[x]);
    return out;
}

CorrespondenceReport sigma_compatible_correspondence(const FiniteBLAlgebra & a, const StateOperator & op,
    std::size_t samples, std::uint32_t seed)
{
    CorrespondenceReport r;
    const auto image = image_subalgebra(a, op);
    r.compatible_extremals = extremal_compatible_states(a, op.map());
    r.image_extremals = extremal_states(image.algebra);
    std::sort(r.image_extremals.begin(), r.image_extremals.end());

    std::vector<StateValues> pushed;
    r.psi_compatible = true;
    r.phi_psi_identity = true;
    for (const auto & s : r.image_extremals) {
        auto p = pull_back_state(a, op, s);
        r.psi_compatible = r.psi_compatible && is_sigma_compatible(op.map(), p) && check_state(a, p).bosbach;
        r.phi_psi_identity = r.phi_psi_identity && restrict_to_image(a, op, p) == s;
        pushed.push_back(std::move(p));
    }
    std::sort(pushed.begin(), pushed.end());
    r.psi_onto = pushed == r.compatible_extremals;

    r.psi_phi_identity = true;
    for (const auto & s : r.compatible_extremals) {
        const auto restricted = restrict_to_image(a, op, s);
        r.psi_phi_identity = r.psi_phi_identity && check_state(image.algebra, restricted).bosbach
            && pull_back_state(a, op, restricted) == s;
    }

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> weight(1, 9);
    r.convex_preserved = ! r.image_extremals.empty();
    for (std::size_t t = 0; t < samples && r.convex_preserved; ++t) {
        std::vector<Rational> w;
        Rational total(0);
        for (std::size_t i = 0; i < r.image_extremals.size(); ++i) {
            w.emplace_back(weight(rng));
            total += w.back();
        }
        for (auto & x : w)
            x /= total;
        const auto m = mix(r.image_extremals, w);
        std::vector<StateValues> pulled;
        for (const auto & s : r.image_extremals)
            pulled.push_back(pull_back_state(a, op, s));
        const auto psi_m = pull_back_state(a, op, m);
        r.convex_preserved = psi_m == mix(pulled, w) && restrict_to_image(a, op, psi_m) == m
            && is_sigma_compatible(op.map(), psi_m) && check_state(a, psi_m).bosbach;
        ++r.samples;
    }
    return r;
}

} // namespace blstate
