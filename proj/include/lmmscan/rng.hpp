#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>

namespace lmmscan {

// Seeded generator addressed by (seed, stream label). The same pair always
// yields the same draw sequence, and distinct labels give independent
// streams, so parallel replicate generation keyed on "<stream>/<index>" is
// reproducible regardless of scheduling.
class StreamRng {
public:
  StreamRng(std::uint64_t seed, std::string_view stream) {
    state_ = splitmix(seed ^ 0x9e3779b97f4a7c15ULL);
    // FNV-1a over the label, folded into the state.
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : stream) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    state_ = splitmix(state_ ^ h);
    state_ = splitmix(state_);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on (0,1); never returns 0 or 1.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller (no spare caching, keeps the draw
  // sequence a pure function of the counter).
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Binomial(2, p) dosage draw: two independent allele transmissions.
  int binomial2(double p) {
    return (bernoulli(p) ? 1 : 0) + (bernoulli(p) ? 1 : 0);
  }

private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t state_;
};

}  // namespace lmmscan
