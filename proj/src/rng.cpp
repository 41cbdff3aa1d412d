#include "tourney/rng.hpp"

#include <charconv>
#include <string>

#include "tourney/error.hpp"

namespace tourney {

__extension__ typedef unsigned __int128 wide_t;

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::InvalidArgument, "Rng::below needs a positive bound");
  wide_t m = static_cast<wide_t>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<wide_t>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return mix64(mix64(master) ^ (index * 0xD1B54A32D192ED03ULL));
}

std::uint64_t parse_seed(std::string_view text) {
  int base = 10;
  std::string_view digits = text;
  if (digits.starts_with("0x") || digits.starts_with("0X")) {
    base = 16;
    digits.remove_prefix(2);
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw Error(Errc::InvalidArgument, "invalid seed '" + std::string(text) + "'");
  return value;
}

}  // namespace tourney
