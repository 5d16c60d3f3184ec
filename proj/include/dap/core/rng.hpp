#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dap::core {

// Deterministic RNG with stable output across platforms and library versions.
// std::mt19937 would be fine for the engine but the standard distributions are
// implementation-defined, which breaks byte-identical prediction files, so the
// few distributions needed are spelled out here (splitmix64 core).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive range [lo, hi].
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(static_cast<int64_t>(hi) - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  double normal();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_u64() % i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // Stable combine for deriving per-item streams from a run seed.
  static uint64_t mix(uint64_t a, uint64_t b);
  static uint64_t hash_string(const std::string& s);

 private:
  uint64_t state_;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace dap::core
