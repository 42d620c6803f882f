// Independent reference computations used to derive expected values.
// They work on raw tables and share no code with the library.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Table = std::vector<std::uint32_t>;

struct Raw {
    std::size_t n;
    Table meet, join, prod, impl;
    std::uint32_t bottom, top;

    std::uint32_t m(std::uint32_t a, std::uint32_t b) const { return meet[a * n + b]; }
    std::uint32_t j(std::uint32_t a, std::uint32_t b) const { return join[a * n + b]; }
    std::uint32_t p(std::uint32_t a, std::uint32_t b) const { return prod[a * n + b]; }
    std::uint32_t r(std::uint32_t a, std::uint32_t b) const { return impl[a * n + b]; }
    bool le(std::uint32_t a, std::uint32_t b) const { return m(a, b) == a; }
    std::uint32_t neg(std::uint32_t a) const { return r(a, bottom); }
};

inline Raw chain(std::size_t n, Table prod, Table impl)
{
    Raw t{n, {}, {}, std::move(prod), std::move(impl), 0, static_cast<std::uint32_t>(n - 1)};
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            t.meet.push_back(a < b ? a : b);
            t.join.push_back(a < b ? b : a);
        }
    return t;
}

/// Łukasiewicz chain with n+1 elements written out from the t-norm formula.
inline Raw lukasiewicz(std::size_t n)
{
    Table p, r;
    for (long a = 0; a <= long(n); ++a)
        for (long b = 0; b <= long(n); ++b) {
            p.push_back(static_cast<std::uint32_t>(a + b - long(n) > 0 ? a + b - long(n) : 0));
            r.push_back(static_cast<std::uint32_t>(long(n) - a + b < long(n) ? long(n) - a + b : long(n)));
        }
    return chain(n + 1, p, r);
}

/// Residuum max{z : a⊙z ≤ b} scanning the chain order downwards.
inline Table residuum_on_chain(std::size_t n, const Table & prod)
{
    Table r(n * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t z = static_cast<std::uint32_t>(n); z-- > 0;)
                if (prod[a * n + z] <= b) {
                    r[a * n + b] = z;
                    break;
                }
    return r;
}

/// Subsets (as sorted member lists) that contain top, are ⊙-closed and up-closed.
inline std::vector<std::vector<std::uint32_t>> filters(const Raw & t)
{
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t.n); ++mask) {
        auto in = [&](std::uint32_t x) { return (mask >> x & 1) != 0; };
        if (! in(t.top))
            continue;
        bool ok = true;
        for (std::uint32_t x = 0; x < t.n && ok; ++x)
            for (std::uint32_t y = 0; y < t.n && ok; ++y) {
                if (in(x) && in(y) && ! in(t.p(x, y)))
                    ok = false;
                if (in(x) && t.le(x, y) && ! in(y))
                    ok = false;
            }
        if (! ok)
            continue;
        std::vector<std::uint32_t> members;
        for (std::uint32_t x = 0; x < t.n; ++x)
            if (in(x))
                members.push_back(x);
        out.push_back(members);
    }
    return out;
}

/// Axioms (1)-(5) of a state operator, checked literally over all pairs.
inline bool is_state_operator(const Raw & t, const Table & s)
{
    if (s[t.bottom] != t.bottom)
        return false;
    for (std::uint32_t x = 0; x < t.n; ++x)
        for (std::uint32_t y = 0; y < t.n; ++y) {
            if (s[t.r(x, y)] != t.r(s[x], s[t.m(x, y)]))
                return false;
            if (s[t.p(x, y)] != t.p(s[x], s[t.r(x, t.p(x, y))]))
                return false;
            if (s[t.p(s[x], s[y])] != t.p(s[x], s[y]))
                return false;
            if (s[t.r(s[x], s[y])] != t.r(s[x], s[y]))
                return false;
        }
    return true;
}

/// Every map A → A satisfying is_state_operator, lexicographic.
inline std::vector<Table> all_state_operators(const Raw & t)
{
    std::vector<Table> out;
    Table s(t.n, 0);
    while (true) {
        if (is_state_operator(t, s))
            out.push_back(s);
        std::size_t i = t.n;
        while (i > 0) {
            if (++s[i - 1] < t.n)
                break;
            s[--i] = 0;
        }
        if (i == 0)
            return out;
    }
}

/// First (x, y) in lexicographic order where x∧y ≠ x⊙(x→y).
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> first_divisibility_failure(const Raw & t)
{
    for (std::uint32_t x = 0; x < t.n; ++x)
        for (std::uint32_t y = 0; y < t.n; ++y)
            if (t.m(x, y) != t.p(x, t.r(x, y)))
                return std::pair{x, y};
    return std::nullopt;
}

/// Bosbach condition for values given as numerators over a common denominator d.
inline bool is_bosbach(const Raw & t, const std::vector<long> & s, long d)
{
    if (s[t.bottom] != 0 || s[t.top] != d)
        return false;
    for (std::uint32_t x = 0; x < t.n; ++x)
        for (std::uint32_t y = 0; y < t.n; ++y)
            if (s[x] + s[t.r(x, y)] != s[y] + s[t.r(y, x)])
                return false;
    return true;
}

/// Riečan condition with the partial sum y⁻ → x⁻⁻, same encoding.
inline bool is_riecan(const Raw & t, const std::vector<long> & s, long d)
{
    if (s[t.bottom] != 0 || s[t.top] != d)
        return false;
    for (std::uint32_t x = 0; x < t.n; ++x)
        for (std::uint32_t y = 0; y < t.n; ++y)
            if (t.p(x, y) == t.bottom && s[t.r(t.neg(y), t.neg(t.neg(x)))] != s[x] + s[y])
                return false;
    return true;
}

} // namespace oracle
