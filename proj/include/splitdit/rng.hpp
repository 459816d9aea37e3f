#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace splitdit {

/// splitmix64 finalizer; the mixing core of every deterministic draw here.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a over raw bytes.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

/// Counter-based generator: every draw is a pure function of
/// (key, stream, counter), so independent streams can be split off a single
/// root seed without shared state. Bit-portable across platforms.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key, std::uint64_t stream = 0)
      : key_(key), stream_(stream) {}

  /// Derive a child generator; children never collide with the parent stream.
  CounterRng split(std::uint64_t substream) const {
    return CounterRng(splitmix64(key_ ^ splitmix64(stream_ * 0x9e3779b97f4a7c15ULL + 1)),
                      substream);
  }

  std::uint64_t next_u64() {
    return splitmix64(key_ ^ splitmix64(stream_ + splitmix64(counter_++)));
  }

  /// Uniform in (0,1); never returns an exact endpoint.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace splitdit
