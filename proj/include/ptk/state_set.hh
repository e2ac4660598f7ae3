#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace ptk {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;

/// Fixed-universe set of state indices backed by 64-bit blocks.
///
/// The universe size is part of the value; two sets over different
/// universes never compare equal.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe)
        : universe_(universe), blocks_((universe + 63) / 64, 0) {}
    StateSet(std::size_t universe, std::initializer_list<StateId> members) : StateSet(universe) {
        for (auto m : members) insert(m);
    }

    [[nodiscard]] std::size_t universe() const { return universe_; }

    void insert(StateId q) { blocks_[q >> 6] |= std::uint64_t{1} << (q & 63); }
    void erase(StateId q) { blocks_[q >> 6] &= ~(std::uint64_t{1} << (q & 63)); }
    [[nodiscard]] bool contains(StateId q) const {
        return q < universe_ && ((blocks_[q >> 6] >> (q & 63)) & 1U) != 0;
    }

    [[nodiscard]] bool empty() const {
        for (auto b : blocks_)
            if (b != 0) return false;
        return true;
    }
    [[nodiscard]] std::size_t size() const {
        std::size_t n = 0;
        for (auto b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
        return n;
    }

    StateSet& operator|=(const StateSet& other) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
        return *this;
    }
    StateSet& operator&=(const StateSet& other) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
        return *this;
    }
    [[nodiscard]] bool intersects(const StateSet& other) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if ((blocks_[i] & other.blocks_[i]) != 0) return true;
        return false;
    }
    [[nodiscard]] bool is_subset_of(const StateSet& other) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if ((blocks_[i] & ~other.blocks_[i]) != 0) return false;
        return true;
    }

    /// Members in increasing order.
    [[nodiscard]] std::vector<StateId> members() const {
        std::vector<StateId> out;
        for_each([&](StateId q) { out.push_back(q); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            auto b = blocks_[i];
            while (b != 0) {
                auto bit = static_cast<unsigned>(std::countr_zero(b));
                f(static_cast<StateId>(i * 64 + bit));
                b &= b - 1;
            }
        }
    }

    /// Smallest member; undefined on an empty set.
    [[nodiscard]] StateId front() const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] != 0)
                return static_cast<StateId>(i * 64 + static_cast<unsigned>(std::countr_zero(blocks_[i])));
        return 0;
    }

    friend bool operator==(const StateSet&, const StateSet&) = default;
    friend auto operator<=>(const StateSet& a, const StateSet& b) {
        if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

    [[nodiscard]] std::size_t hash() const {
        std::size_t h = universe_ * 0x9E3779B97F4A7C15ULL;
        for (auto b : blocks_) h = (h ^ static_cast<std::size_t>(b)) * 0x100000001B3ULL + (h >> 29);
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> blocks_;
};

inline StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
inline StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

} // namespace ptk

template <>
struct std::hash<ptk::StateSet> {
    std::size_t operator()(const ptk::StateSet& s) const noexcept { return s.hash(); }
};
