#include "state_store.hpp"

#include <algorithm>
#include <numeric>

namespace hardgame::detail {

namespace {

unsigned width_for(std::uint64_t max_value) { return static_cast<unsigned>(std::bit_width(max_value)); }

class BitWriter {
public:
    explicit BitWriter(std::uint64_t* out, std::size_t words) : out_(out) { std::fill(out, out + words, 0); }

    void put(std::uint64_t value, unsigned bits) {
        if (bits == 0) return;
        const auto word = pos_ / 64, shift = pos_ % 64;
        out_[word] |= value << shift;
        if (shift + bits > 64) out_[word + 1] |= value >> (64 - shift);
        pos_ += bits;
    }

private:
    std::uint64_t* out_;
    std::size_t pos_ = 0;
};

class BitReader {
public:
    explicit BitReader(const std::uint64_t* in) : in_(in) {}

    std::uint64_t get(unsigned bits) {
        if (bits == 0) return 0;
        const auto word = pos_ / 64, shift = pos_ % 64;
        std::uint64_t v = in_[word] >> shift;
        if (shift + bits > 64) v |= in_[word + 1] << (64 - shift);
        pos_ += bits;
        return bits == 64 ? v : v & ((std::uint64_t{1} << bits) - 1);
    }

private:
    const std::uint64_t* in_;
    std::size_t pos_ = 0;
};

}  // namespace

StateCodec::StateCodec(const Level& level)
    : doors_(level.doors.size()), vertices_(level.vertices.size()), edges_(level.edges.size()) {
    position_bits_ = width_for(vertices_ ? vertices_ - 1 : 0);
    std::uint64_t tokens = level.initial_tokens, keys = level.initial_keys;
    for (const auto& v : level.vertices) {
        tokens += v.tokens;
        keys += v.keys;
        if (v.must_visit) must_visit_.push_back(v.id);
        if (v.tokens) token_piles_.push_back({v.id, width_for(v.tokens)});
        if (v.keys) key_piles_.push_back({v.id, width_for(v.keys)});
    }
    tokens_bits_ = width_for(level.token_capacity == Capacity::One ? std::min<std::uint64_t>(tokens, 1) : tokens);
    keys_bits_ = width_for(level.key_capacity == Capacity::One ? std::min<std::uint64_t>(keys, 1) : keys);
    for (const auto& e : level.edges)
        if (e.single_use) single_use_.push_back(e.id);

    std::size_t bits = position_bits_ + tokens_bits_ + keys_bits_ + doors_ + single_use_.size() + must_visit_.size();
    for (const auto& c : token_piles_) bits += c.bits;
    for (const auto& c : key_piles_) bits += c.bits;
    words_ = std::max<std::size_t>(1, (bits + 63) / 64);
}

void StateCodec::encode(const GameState& s, std::uint64_t* out) const {
    BitWriter w(out, words_);
    w.put(s.position, position_bits_);
    w.put(s.tokens_held, tokens_bits_);
    w.put(s.keys_held, keys_bits_);
    for (std::size_t d = 0; d < doors_; ++d) w.put(s.open_doors[d], 1);
    for (EdgeId e : single_use_) w.put(s.consumed_edges[e], 1);
    for (VertexId v : must_visit_) w.put(s.visited[v], 1);
    for (const auto& c : token_piles_) w.put(s.tokens_left[c.vertex], c.bits);
    for (const auto& c : key_piles_) w.put(s.keys_left[c.vertex], c.bits);
}

void StateCodec::decode(const std::uint64_t* in, GameState& s) const {
    BitReader r(in);
    s.position = static_cast<VertexId>(r.get(position_bits_));
    s.tokens_held = static_cast<std::uint32_t>(r.get(tokens_bits_));
    s.keys_held = static_cast<std::uint32_t>(r.get(keys_bits_));
    s.open_doors.resize(doors_);
    for (std::size_t d = 0; d < doors_; ++d) s.open_doors[d] = r.get(1) != 0;
    s.consumed_edges.assign(edges_, false);
    for (EdgeId e : single_use_) s.consumed_edges[e] = r.get(1) != 0;
    s.visited.assign(vertices_, false);
    for (VertexId v : must_visit_) s.visited[v] = r.get(1) != 0;
    s.tokens_left.assign(vertices_, 0);
    s.keys_left.assign(vertices_, 0);
    for (const auto& c : token_piles_) s.tokens_left[c.vertex] = static_cast<std::uint32_t>(r.get(c.bits));
    for (const auto& c : key_piles_) s.keys_left[c.vertex] = static_cast<std::uint32_t>(r.get(c.bits));
}

// ---------------------------------------------------------------------------

StateStore::StateStore(std::size_t words) : words_(words), table_(1024, 0), mask_(1023) {}

std::uint64_t StateStore::hash(const std::uint64_t* key) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < words_; ++i) {
        std::uint64_t x = key[i] + h;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        h = x ^ (x >> 31);
    }
    return h;
}

void StateStore::grow() {
    std::vector<std::uint32_t> fresh(table_.size() * 2, 0);
    const auto mask = fresh.size() - 1;
    for (std::uint32_t slot : table_) {
        if (!slot) continue;
        auto i = hash(at(slot - 1)) & mask;
        while (fresh[i]) i = (i + 1) & mask;
        fresh[i] = slot;
    }
    table_ = std::move(fresh);
    mask_ = mask;
}

std::pair<std::uint32_t, bool> StateStore::insert(const std::uint64_t* key) {
    if ((count_ + 1) * 2 > table_.size()) grow();
    auto i = hash(key) & mask_;
    while (auto slot = table_[i]) {
        if (std::equal(key, key + words_, at(slot - 1))) return {slot - 1, false};
        i = (i + 1) & mask_;
    }
    const auto index = static_cast<std::uint32_t>(count_++);
    arena_.insert(arena_.end(), key, key + words_);
    table_[i] = index + 1;
    return {index, true};
}

}  // namespace hardgame::detail
