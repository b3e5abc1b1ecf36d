#pragma once

#include <cstdint>
#include <cmath>
#include <vector>
#include <stdexcept>

#include <splitlimit/bignum.hpp>

namespace splitlimit {

// Splittable 64-bit generator: xoshiro256** seeded through splitmix64 from a
// (seed, stream) pair.  Every replicate of an experiment gets its own stream,
// so results are reproducible independently of the worker count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
    for (auto& w : s_) w = splitmix64(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0,1) with 53 random bits
  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (0,1], safe as a log argument
  double uniform01_pos() { return ((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // exactly uniform on {0,..,n-1}
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  double exponential() { return -std::log(uniform01_pos()); }

  // Poisson(lambda) by inversion; fine for the small rates used here
  int poisson(double lambda) {
    double p = std::exp(-lambda), cdf = p;
    double target = uniform01();
    int m = 0;
    while (target > cdf) {
      ++m;
      p *= lambda / m;
      cdf += p;
      if (m > 10000) break;
    }
    return m;
  }

  // Poisson(lambda) conditioned on being >= r
  int poisson_ge(double lambda, int r) {
    double head = 0, p = std::exp(-lambda);
    for (int m = 0; m < r; ++m) {
      head += p;
      p *= lambda / (m + 1);
    }
    // p == P(X = r); tail mass 1 - head
    double target = uniform01() * (1.0 - head);
    int m = r;
    double cdf = p;
    while (target > cdf) {
      ++m;
      p *= lambda / m;
      cdf += p;
      if (m > 100000) break;
    }
    return m;
  }

  // uniform on {0,..,bound-1} for big integers
  Int uniform_bigint(const Int& bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_bigint: empty range");
    const std::size_t bits = msb(bound) + 1;
    const std::size_t words = (bits + 63) / 64;
    for (;;) {
      Int r = 0;
      for (std::size_t w = 0; w < words; ++w) {
        r <<= 64;
        r |= Int(next_u64());
      }
      r >>= (words * 64 - bits);
      if (r < bound) return r;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_int(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t s_[4];
};

}  // namespace splitlimit
