#include "swingup/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace swingup {

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::uniform_index: n must be positive");
  // Scaled multiply; bias is O(n / 2^64) and irrelevant at our range sizes.
  using u128 = unsigned __int128;
  return static_cast<std::size_t>((static_cast<u128>(next_u64()) * n) >> 64);
}

double Rng::normal() {
  // u1 in (0, 1] keeps the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::string Rng::serialize() const {
  std::ostringstream out;
  out << engine_;
  return out.str();
}

Rng Rng::deserialize(const std::string& text) {
  Rng rng(0);
  std::istringstream in(text);
  in >> rng.engine_;
  if (in.fail()) throw std::invalid_argument("Rng::deserialize: malformed state string");
  return rng;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Rng derive_stream(std::uint64_t seed, std::uint64_t stream_id) {
  return Rng(splitmix64(seed ^ splitmix64(stream_id)));
}

}  // namespace swingup
