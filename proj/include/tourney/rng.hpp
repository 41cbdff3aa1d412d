#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tourney {

/**
 * Seeded random source shared by every generator and sampler.
 *
 * The engine is std::mt19937_64 seeded with the 64-bit seed directly; its
 * output sequence is fixed by the C++ standard, so streams are identical
 * across platforms and compilers. Only the raw 64-bit outputs are used (the
 * standard distributions are implementation-defined):
 *   - coin():     bits of successive outputs, least significant bit first;
 *   - below(k):   Lemire multiply-shift with rejection on the raw outputs;
 *   - unit():     top 53 bits of one output scaled by 2^-53, in [0, 1).
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  bool coin() {
    if (bits_left_ == 0) {
      buffer_ = engine_();
      bits_left_ = 64;
    }
    const bool b = buffer_ & 1U;
    buffer_ >>= 1;
    --bits_left_;
    return b;
  }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  unsigned bits_left_ = 0;
};

/// splitmix64 finaliser; used to derive independent per-block seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for the stream with the given index under a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Parses decimal or 0x-prefixed hexadecimal seeds. Throws InvalidArgument.
std::uint64_t parse_seed(std::string_view text);

}  // namespace tourney
