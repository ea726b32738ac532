#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace levyarc {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). The key comes
// from the seed and the high counter words from the stream id, so stream k of
// seed s is the same sequence whatever order streams are consumed in.
// Satisfies UniformRandomBitGenerator.
class Philox4x32 {
public:
    using result_type = std::uint32_t;
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    Philox4x32(std::uint64_t seed, std::uint64_t stream);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    // Uniform double in (0, 1) from 53 random bits.
    double uniform();

    static Block bijection(Block counter, Key key);

private:
    Key key_;
    Block counter_;
    Block buffer_{};
    int used_ = 4;
};

}  // namespace levyarc
