#pragma once

#include <array>
#include <cstdint>

namespace lmck {

// Seed of one random stream. `master` is the user-facing seed; `stream`
// selects an independent substream (trial index). Both go straight into
// the Philox counter/key, so any (master, stream) pair is valid and
// streams never overlap.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;

    Seed with_stream(std::uint64_t s) const { return Seed{master, s}; }
};

// Philox4x32-10 (Salmon et al.), the usual counter-based generator.
// Layout: key = master seed, counter = (block index, stream id). Each
// block yields 128 bits.
class Philox {
public:
    explicit Philox(Seed s)
        : key_{static_cast<std::uint32_t>(s.master), static_cast<std::uint32_t>(s.master >> 32)},
          stream_{static_cast<std::uint32_t>(s.stream), static_cast<std::uint32_t>(s.stream >> 32)} {}

    std::uint64_t next_u64() {
        if (pos_ >= 4) refill();
        const std::uint64_t lo = buf_[pos_];
        const std::uint64_t hi = buf_[pos_ + 1];
        pos_ += 2;
        return lo | (hi << 32);
    }

    // Unbiased draw from [0, bound); bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // One raw block; exposed for the known-answer tests.
    static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                              const std::array<std::uint32_t, 2>& key);

private:
    void refill() {
        const std::array<std::uint32_t, 4> ctr{static_cast<std::uint32_t>(block_),
                                               static_cast<std::uint32_t>(block_ >> 32),
                                               stream_[0], stream_[1]};
        buf_ = block(ctr, key_);
        ++block_;
        pos_ = 0;
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
};

}  // namespace lmck
