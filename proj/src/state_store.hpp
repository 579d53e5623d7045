#pragma once

// Bit-packed game states with an open-addressing index for deduplication.

#include <bit>
#include <cstdint>
#include <cstring>
#include <vector>

#include "hardgame/arena.hpp"

namespace hardgame::detail {

class StateCodec {
public:
    explicit StateCodec(const Level& level);

    std::size_t words() const { return words_; }
    void encode(const GameState& s, std::uint64_t* out) const;
    void decode(const std::uint64_t* in, GameState& s) const;

private:
    struct Counter {
        VertexId vertex;
        unsigned bits;
    };

    unsigned position_bits_ = 0;
    unsigned tokens_bits_ = 0;
    unsigned keys_bits_ = 0;
    std::size_t doors_ = 0;
    std::vector<EdgeId> single_use_;
    std::vector<VertexId> must_visit_;
    std::vector<Counter> token_piles_;
    std::vector<Counter> key_piles_;
    std::size_t vertices_ = 0;
    std::size_t edges_ = 0;
    std::size_t words_ = 1;
};

class StateStore {
public:
    explicit StateStore(std::size_t words);

    std::size_t size() const { return count_; }
    const std::uint64_t* at(std::uint32_t index) const { return arena_.data() + std::size_t(index) * words_; }

    /// Returns the index of `key` and whether it was newly inserted.
    std::pair<std::uint32_t, bool> insert(const std::uint64_t* key);

private:
    std::uint64_t hash(const std::uint64_t* key) const;
    void grow();

    std::size_t words_;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> arena_;
    std::vector<std::uint32_t> table_;  // index + 1, 0 = empty
    std::size_t mask_ = 0;
};

}  // namespace hardgame::detail
