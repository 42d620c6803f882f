#pragma once

#include <blstate/constructors.hh>

#include <vector>

namespace fixtures {

using namespace blstate;

/// Small algebras exercised by the property tests.
inline std::vector<FiniteBLAlgebra> small_algebras()
{
    std::vector<FiniteBLAlgebra> out;
    for (std::size_t n = 1; n <= 5; ++n)
        out.push_back(mv_chain(n));
    for (std::size_t n = 3; n <= 5; ++n)
        out.push_back(godel_chain(n));
    out.push_back(four_element_example().algebra);
    out.push_back(direct_product(mv_chain(1), mv_chain(1)));
    out.push_back(direct_product(mv_chain(2), mv_chain(2)));
    out.push_back(ordinal_sum({mv_chain(1), direct_product(mv_chain(1), mv_chain(1))}));
    out.push_back(ordinal_sum({mv_chain(2), godel_chain(3)}));
    out.push_back(ordinal_sum({godel_chain(2), mv_chain(1), mv_chain(2)}));
    out.push_back(direct_product(four_element_example().algebra, mv_chain(1)));
    return out;
}

inline OperationTables example_tables() { return four_element_example().algebra.tables(); }

} // namespace fixtures
