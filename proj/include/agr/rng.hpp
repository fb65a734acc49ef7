#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "agr/gaussq.hpp"

namespace agr {

// Deterministic sampler for exact values; identical seeds give identical
// streams, which the report determinism guarantee relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long int_in(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
  }

  // Small-height rational: numerator in [-h, h], denominator in [1, h].
  mpq_class rational(long h = 3) {
    mpq_class q(int_in(-h, h), int_in(1, h));
    q.canonicalize();
    return q;
  }
  mpq_class nonzero_rational(long h = 3) {
    for (;;) {
      mpq_class q = rational(h);
      if (q != 0) return q;
    }
  }

  GaussQ gauss(long h = 3) { return GaussQ(rational(h), rational(h)); }
  GaussQ nonzero_gauss(long h = 3) {
    for (;;) {
      GaussQ g = gauss(h);
      if (!g.is_zero()) return g;
    }
  }

  std::vector<GaussQ> gauss_vec(std::size_t n, long h = 3) {
    std::vector<GaussQ> v(n);
    for (auto& x : v) x = gauss(h);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace agr
