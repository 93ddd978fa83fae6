#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>

#include "listhom/error.hpp"

namespace listhom {

/// A subset of target vertices {0..63}, stored as a bitmask. Target graphs
/// are small by nature (the configuration count grows like n^(k-2)), so 64
/// colours is far beyond anything the layered algorithm can process.
class ColourSet {
public:
    static constexpr std::size_t capacity = 64;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Colour;
        using difference_type = std::ptrdiff_t;
        using pointer = const Colour *;
        using reference = Colour;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr Colour operator*() const { return static_cast<Colour>(std::countr_zero(rest_)); }
        constexpr iterator & operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator &) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr ColourSet() = default;

    static constexpr ColourSet from_bits(std::uint64_t bits)
    {
        ColourSet s;
        s.bits_ = bits;
        return s;
    }

    /// {0, 1, ..., k-1}
    static ColourSet first(std::size_t k)
    {
        check(k == 0 ? 0 : k - 1);
        return from_bits(k == capacity ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1));
    }

    static ColourSet of(std::initializer_list<Colour> colours)
    {
        ColourSet s;
        for (auto c : colours)
            s.insert(c);
        return s;
    }

    constexpr bool contains(Colour c) const { return c < capacity && ((bits_ >> c) & 1U); }
    void insert(Colour c)
    {
        check(c);
        bits_ |= std::uint64_t{1} << c;
    }
    void erase(Colour c)
    {
        if (c < capacity)
            bits_ &= ~(std::uint64_t{1} << c);
    }

    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }
    /// Smallest member; undefined on the empty set.
    constexpr Colour front() const { return static_cast<Colour>(std::countr_zero(bits_)); }
    constexpr bool is_subset_of(ColourSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{}; }

    constexpr ColourSet & operator&=(ColourSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr ColourSet & operator|=(ColourSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    friend constexpr ColourSet operator&(ColourSet a, ColourSet b) { return a &= b; }
    friend constexpr ColourSet operator|(ColourSet a, ColourSet b) { return a |= b; }
    friend constexpr bool operator==(ColourSet, ColourSet) = default;

private:
    static void check(Colour c)
    {
        if (c >= capacity)
            throw InvalidInput("colour " + std::to_string(c) + " exceeds the supported palette of 64");
    }

    std::uint64_t bits_ = 0;
};

} // namespace listhom
