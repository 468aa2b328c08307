#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace corefall {

// splitmix64 step; also usable standalone as a mixing function.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic generator used by every randomized code path. We avoid
// std::uniform_int_distribution & friends because their output is not
// pinned by the standard; identical seeds must give identical runs on
// any compiler.
class rng64 {
 public:
  explicit rng64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) {
    // multiply-shift with rejection (Lemire); unbiased and branch-light
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    std::uint64_t lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      std::uint64_t thresh = (0 - bound) % bound;
      while (lo < thresh) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // uniform double in [0, 1)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Stream derivation: one master seed, many decorrelated streams. Used so
// that e.g. trial 7 of a resilience run draws the same numbers no matter
// how trials are scheduled across threads.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(master ^ mix64(stream ^ 0x5851f42d4c957f2dULL));
}

// FNV-1a, for content-addressed stream tags ("dataset|method|budget").
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// k distinct elements of `pool`, in draw order (partial Fisher-Yates on a
// copy). pool is not required to be sorted; k <= pool.size().
inline std::vector<int> sample_without_replacement(std::vector<int> pool,
                                                   std::size_t k, rng64& rng) {
  std::vector<int> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

// in-place Fisher-Yates shuffle
template <typename T>
inline void shuffle(std::vector<T>& v, rng64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace corefall
