#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ftpres {

// Portable deterministic RNG (splitmix64). All sampling in this library goes
// through this type so that a seed reproduces the same bytes on every
// platform; std:: distributions are implementation-defined and avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n). Rejection sampling keeps it unbiased.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::next_below: n must be > 0");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  // Partial Fisher-Yates: the first `count` entries of `items` become a
  // uniform sample without replacement.
  template <typename T>
  void partial_shuffle(std::vector<T>& items, std::size_t count) {
    if (count > items.size()) count = items.size();
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t j = i + static_cast<std::size_t>(next_below(items.size() - i));
      std::swap(items[i], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Stable stream split: derive an independent seed from (seed, tag, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                 std::uint64_t index) {
  Rng r(seed ^ (tag * 0x9e3779b97f4a7c15ULL) ^ (index + 0x2545f4914f6cdd1dULL));
  r.next_u64();
  return r.next_u64();
}

}  // namespace ftpres
