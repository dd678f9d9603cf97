#ifndef HYPERHALL_ELEMENT_SUBSET_HPP
#define HYPERHALL_ELEMENT_SUBSET_HPP

#include <atomic>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace hyperhall
{

using Element = int;

/// Largest supported hypergroup order; subsets are single 64-bit words.
inline constexpr int kMaxOrder = 64;

namespace detail
{

inline std::uint64_t next_parent_token()
{
    static std::atomic<std::uint64_t> counter{0};
    return ++counter;
}

inline std::uint64_t full_mask(int order)
{
    return order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
}

} // namespace detail

/// A subset of the elements of one particular hypergroup. The parent is
/// identified by an opaque token; mixing subsets of different parents throws
/// ParentMismatch. A default-constructed subset belongs to no parent and may
/// only be compared.
class ElementSubset
{
public:
    ElementSubset() = default;

    ElementSubset(std::uint64_t token, int order, std::uint64_t bits)
      : token_(token), order_(order), bits_(bits & detail::full_mask(order))
    {
    }

    std::uint64_t token() const noexcept { return token_; }
    int order() const noexcept { return order_; }
    std::uint64_t bits() const noexcept { return bits_; }

    bool contains(Element e) const noexcept
    {
        return e >= 0 && e < order_ && ((bits_ >> e) & 1u) != 0;
    }
    int size() const noexcept { return std::popcount(bits_); }
    bool empty() const noexcept { return bits_ == 0; }

    std::vector<Element> members() const
    {
        std::vector<Element> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    /// Smallest member, or -1 when empty.
    Element first() const noexcept { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    ElementSubset with(Element e) const
    {
        return ElementSubset(token_, order_, bits_ | (std::uint64_t{1} << e));
    }

    bool is_subset_of(const ElementSubset &other) const
    {
        check_same_parent(other);
        return (bits_ & ~other.bits_) == 0;
    }

    ElementSubset operator|(const ElementSubset &other) const
    {
        check_same_parent(other);
        return ElementSubset(token_, order_, bits_ | other.bits_);
    }
    ElementSubset operator&(const ElementSubset &other) const
    {
        check_same_parent(other);
        return ElementSubset(token_, order_, bits_ & other.bits_);
    }
    ElementSubset operator-(const ElementSubset &other) const
    {
        check_same_parent(other);
        return ElementSubset(token_, order_, bits_ & ~other.bits_);
    }

    friend bool operator==(const ElementSubset &a, const ElementSubset &b) noexcept
    {
        return a.token_ == b.token_ && a.bits_ == b.bits_;
    }

    void check_same_parent(const ElementSubset &other) const
    {
        if (token_ != other.token_ || token_ == 0)
            throw Error(ErrorKind::ParentMismatch, "subsets belong to different hypergroups");
    }

private:
    std::uint64_t token_ = 0;
    int order_ = 0;
    std::uint64_t bits_ = 0;
};

/// Determinism order used everywhere subsets are listed: by size, then
/// lexicographically by the ascending member sequence.
inline bool subset_less(const ElementSubset &a, const ElementSubset &b) noexcept
{
    if (a.size() != b.size())
        return a.size() < b.size();
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    // The set owning the lowest differing element has the smaller member there.
    return ((a.bits() >> std::countr_zero(diff)) & 1u) != 0;
}

inline std::string to_string(const ElementSubset &s)
{
    std::string out = "{";
    bool first = true;
    for (Element e : s.members()) {
        if (!first)
            out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

} // namespace hyperhall

#endif // HYPERHALL_ELEMENT_SUBSET_HPP
