#include "levyarc/random.hpp"

namespace levyarc {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      counter_{0u, 0u, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

Philox4x32::Block Philox4x32::bijection(Block x, Key k) {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, x[0], hi0, lo0);
        mulhilo(kMul1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return x;
}

Philox4x32::result_type Philox4x32::operator()() {
    if (used_ == 4) {
        buffer_ = bijection(counter_, key_);
        if (++counter_[0] == 0) ++counter_[1];
        used_ = 0;
    }
    return buffer_[used_++];
}

double Philox4x32::uniform() {
    const std::uint64_t hi = (*this)() >> 5;
    const std::uint64_t lo = (*this)() >> 6;
    // (k + 0.5) / 2^53 keeps the value strictly inside (0, 1)
    return (static_cast<double>((hi << 26) | lo) + 0.5) * 0x1.0p-53;
}

}  // namespace levyarc
