#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace mdam {

//---------------------------------------------------------------------------//
/*!
 * Counter-based Philox4x32-10 generator.
 *
 * The key is derived from (seed, stream) so each chain or task owns an
 * independent stream; adding streams never perturbs existing ones.
 * Satisfies UniformRandomBitGenerator with 64-bit output.
 */
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Child generator keyed by this generator's key and `stream`.
  [[nodiscard]] Rng split(std::uint64_t stream) const noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_{};
  std::array<std::uint32_t, 4> block_{};
  int next_ = 4;
};

/// One Philox4x32 block with 10 rounds.
inline std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                 std::array<std::uint32_t, 2> key) noexcept;

/// SplitMix64 finalizer; used for key derivation.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

//---------------------------------------------------------------------------//
// INLINE DEFINITIONS
//---------------------------------------------------------------------------//

inline Rng::Rng(std::uint64_t seed, std::uint64_t stream) noexcept
    : seed_(seed), stream_(stream) {
  const std::uint64_t k = splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ull));
  key_ = {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
}

inline Rng Rng::split(std::uint64_t stream) const noexcept {
  const std::uint64_t parent =
      (static_cast<std::uint64_t>(key_[1]) << 32) | key_[0];
  return Rng(splitmix64(parent), stream);
}

inline std::array<std::uint32_t, 4> philox4x32_10(
    std::array<std::uint32_t, 4> x, std::array<std::uint32_t, 2> k) noexcept {
  constexpr std::uint32_t kM0 = 0xD2511F53u;
  constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u;
  constexpr std::uint32_t kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kW0;
      k[1] += kW1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * x[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * x[2];
    x = {static_cast<std::uint32_t>(p1 >> 32) ^ x[1] ^ k[0],
         static_cast<std::uint32_t>(p1),
         static_cast<std::uint32_t>(p0 >> 32) ^ x[3] ^ k[1],
         static_cast<std::uint32_t>(p0)};
  }
  return x;
}

inline void Rng::refill() noexcept {
  block_ = philox4x32_10(counter_, key_);
  next_ = 0;
  // 128-bit counter increment
  for (auto& c : counter_) {
    if (++c != 0) break;
  }
}

inline Rng::result_type Rng::operator()() noexcept {
  if (next_ > 2) refill();
  const std::uint64_t lo = block_[next_];
  const std::uint64_t hi = block_[next_ + 1];
  next_ += 2;
  return (hi << 32) | lo;
}

inline double Rng::uniform() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

}  // namespace mdam
