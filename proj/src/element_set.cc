#include <blstate/element_set.hh>

#include <algorithm>
#include <sstream>

namespace blstate {

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> members) : bits_(universe)
{
    for (auto m : members)
        bits_.set(m);
}

ElementSet ElementSet::full(std::size_t universe)
{
    ElementSet s(universe);
    s.bits_.set();
    return s;
}

ElementSet ElementSet::from_members(std::size_t universe, const std::vector<Element> & members)
{
    ElementSet s(universe);
    for (auto m : members)
        s.bits_.set(m);
    return s;
}

std::vector<Element> ElementSet::members() const
{
    std::vector<Element> out;
    out.reserve(bits_.count());
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
        out.push_back(static_cast<Element>(i));
    return out;
}

ElementSet ElementSet::operator&(const ElementSet & o) const
{
    ElementSet r;
    r.bits_ = bits_ & o.bits_;
    return r;
}

ElementSet ElementSet::operator|(const ElementSet & o) const
{
    ElementSet r;
    r.bits_ = bits_ | o.bits_;
    return r;
}

std::strong_ordering ElementSet::operator<=>(const ElementSet & o) const
{
    if (auto c = size() <=> o.size(); c != 0)
        return c;
    auto a = members(), b = o.members();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string ElementSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto m : members()) {
        if (! first)
            os << ',';
        os << m;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace blstate
