#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace blstate {

/// Dense index of an algebra element. Only meaningful relative to the
/// algebra it was produced by.
using Element = std::uint32_t;

/// A subset of an algebra's carrier with bit-set semantics.
///
/// Sets compare by cardinality first, then lexicographically on the
/// ascending list of members. This is the order used everywhere a list of
/// filters is reported.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : bits_(universe) {}
    ElementSet(std::size_t universe, std::initializer_list<Element> members);

    static ElementSet full(std::size_t universe);
    static ElementSet from_members(std::size_t universe, const std::vector<Element> & members);

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool contains(Element e) const { return e < bits_.size() && bits_.test(e); }
    void insert(Element e) { bits_.set(e); }
    void erase(Element e) { bits_.reset(e); }

    bool is_subset_of(const ElementSet & other) const { return bits_.is_subset_of(other.bits_); }

    std::vector<Element> members() const;

    ElementSet operator&(const ElementSet & o) const;
    ElementSet operator|(const ElementSet & o) const;

    bool operator==(const ElementSet & o) const { return bits_ == o.bits_; }
    std::strong_ordering operator<=>(const ElementSet & o) const;

    /// "{0,2,3}" using raw indices.
    std::string to_string() const;

private:
    boost::dynamic_bitset<> bits_;
};

} // namespace blstate
