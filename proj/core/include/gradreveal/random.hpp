#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <variant>

namespace gradreveal {

/// Source of randomness for every generation step.
///
/// Seeded streams are mt19937_64, whose output sequence is fixed by the
/// standard, and all derived draws (bounded integers, digits) use our own
/// rejection sampling rather than <random> distributions, so a seed yields
/// the same values on every conforming toolchain. Entropy streams read the
/// operating system's random device and are not reproducible.
///
/// A stream is single-owner; give each thread its own.
class RandomStream {
 public:
  static RandomStream seeded(std::uint64_t seed);
  static RandomStream os_entropy();

  RandomStream(RandomStream&&) noexcept = default;
  RandomStream& operator=(RandomStream&&) noexcept = default;

  bool is_seeded() const noexcept;

  std::uint64_t next_u64();
  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform decimal digit in [lo, hi].
  int digit(int lo = 0, int hi = 9);

 private:
  using Device = std::unique_ptr<std::random_device>;
  explicit RandomStream(std::variant<std::mt19937_64, Device> source)
      : source_(std::move(source)) {}

  std::variant<std::mt19937_64, Device> source_;
};

}  // namespace gradreveal
