#include "gradreveal/random.hpp"

#include <stdexcept>

namespace gradreveal {

RandomStream RandomStream::seeded(std::uint64_t seed) {
  return RandomStream(std::mt19937_64(seed));
}

RandomStream RandomStream::os_entropy() {
  return RandomStream(std::make_unique<std::random_device>());
}

bool RandomStream::is_seeded() const noexcept {
  return std::holds_alternative<std::mt19937_64>(source_);
}

std::uint64_t RandomStream::next_u64() {
  if (auto* engine = std::get_if<std::mt19937_64>(&source_)) {
    return (*engine)();
  }
  auto& device = *std::get<Device>(source_);
  static_assert(sizeof(std::random_device::result_type) >= 4);
  const std::uint64_t hi = device() & 0xffffffffu;
  const std::uint64_t lo = device() & 0xffffffffu;
  return (hi << 32) | lo;
}

std::uint64_t RandomStream::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform: bound must be positive");
  // Reject the low partial block so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

int RandomStream::digit(int lo, int hi) {
  if (lo < 0 || hi > 9 || lo > hi) throw std::invalid_argument("digit: bad range");
  return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace gradreveal
