#include "topolayout/rng.hpp"

#include <cmath>

namespace topolayout {

uint64_t SplitRng::mix(uint64_t z) {
  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SplitRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

uint64_t SplitRng::uniform_index(uint64_t n) {
  if (n == 0) return 0;
  // rejection-free modulo is fine at these scales; bias < 2^-64 * n
  return next_u64() % n;
}

double SplitRng::normal() {
  double u1 = uniform();
  double u2 = uniform();
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double SplitRng::normal(double mean, double sigma) { return mean + sigma * normal(); }

int SplitRng::poisson(double mean) {
  if (mean <= 0.0) return 0;
  // Knuth's product method, chunked so exp() never underflows.
  int count = 0;
  double remaining = mean;
  while (remaining > 500.0) {
    double chunk = 500.0;
    double limit = std::exp(-chunk);
    double prod = uniform();
    while (prod > limit) {
      ++count;
      prod *= uniform();
    }
    remaining -= chunk;
  }
  double limit = std::exp(-remaining);
  double prod = uniform();
  while (prod > limit) {
    ++count;
    prod *= uniform();
  }
  return count;
}

}  // namespace topolayout
