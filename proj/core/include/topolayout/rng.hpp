#pragma once

#include <cstdint>

namespace topolayout {

// Counter-based splittable generator. Every draw is a hash of (key, counter),
// so derived streams are independent of evaluation order and thread count.
// All distributions are implemented explicitly to keep byte-level
// reproducibility independent of the standard library.
class SplitRng {
 public:
  explicit SplitRng(uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  // Child stream for an indexed unit of work (layout j, class i, ...).
  SplitRng split(uint64_t stream) const {
    SplitRng child(0);
    child.key_ = mix(key_ ^ mix(stream + 0x632be59bd9b4e019ull));
    child.counter_ = 0;
    return child;
  }

  uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  // Uniform integer in [0, n).
  uint64_t uniform_index(uint64_t n);
  // Standard normal via Box-Muller.
  double normal();
  double normal(double mean, double sigma);
  // Poisson by inversion (chunked for large means).
  int poisson(double mean);

  static uint64_t mix(uint64_t z);

 private:
  uint64_t key_ = 0;
  uint64_t counter_ = 0;
};

}  // namespace topolayout
