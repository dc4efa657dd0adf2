#ifndef SWINGUP_RNG_HPP_
#define SWINGUP_RNG_HPP_

#include <cstdint>
#include <random>
#include <string>

namespace swingup {

/// Deterministic random source. All distribution transforms are spelled out
/// here so a (seed, call sequence) pair reproduces bit-identically, and the
/// full stream state round-trips through checkpoints.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform index in {0, ..., n-1}. n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Standard normal via Box-Muller. Two uniforms per draw, no cached spare,
  /// so the stream state is exactly the engine state.
  double normal();

  std::string serialize() const;
  static Rng deserialize(const std::string& text);

  friend bool operator==(const Rng& a, const Rng& b) { return a.engine_ == b.engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream for a given (seed, stream id) pair.
Rng derive_stream(std::uint64_t seed, std::uint64_t stream_id);

namespace stream_id {
inline constexpr std::uint64_t kNetworkInit = 1;
inline constexpr std::uint64_t kEnv = 2;
inline constexpr std::uint64_t kWarmup = 3;
inline constexpr std::uint64_t kNoise = 4;
inline constexpr std::uint64_t kSample = 5;
inline constexpr std::uint64_t kEval = 6;
}  // namespace stream_id

}  // namespace swingup

#endif  // SWINGUP_RNG_HPP_
