// SPDX-License-Identifier: Apache-2.0
//
// risbeam: robust transmit designs for RIS-assisted multi-user MISO downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISBEAM_RNG_HPP
#define RISBEAM_RNG_HPP

#include <cstdint>
#include <string_view>

#include "risbeam/common.hpp"

namespace risbeam {

// Deterministic stream of uniforms/gaussians. Gaussian generation is done
// explicitly (Box-Muller over our own uniforms) so that a (seed, stream)
// pair fixes every output byte independent of the standard library.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {
    // decorrelate trivially related seeds
    next_u64();
    next_u64();
  }

  std::uint64_t next_u64() {  // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform in (0,1], safe as a log argument
  double uniform_pos() { return 1.0 - uniform(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  // CSCG scalar with E|z|^2 = variance
  cxd cgaussian(double variance = 1.0) {
    const double s = std::sqrt(variance / 2.0);
    const double re = gaussian();
    const double im = gaussian();
    return {s * re, s * im};
  }

  CVec cgaussian_vector(int n, double variance = 1.0) {
    CVec v(n);
    for (int i = 0; i < n; ++i) v(i) = cgaussian(variance);
    return v;
  }

  CMat cgaussian_matrix(int rows, int cols, double variance = 1.0) {
    CMat m(rows, cols);
    for (int c = 0; c < cols; ++c)
      for (int r = 0; r < rows; ++r) m(r, c) = cgaussian(variance);
    return m;
  }

  CVec unit_modulus_vector(int n) {
    CVec v(n);
    for (int i = 0; i < n; ++i) {
      const double phase = 2.0 * kPi * uniform();
      v(i) = cxd(std::cos(phase), std::sin(phase));
    }
    return v;
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

inline std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Stream derivation used everywhere: hash(master_seed, index, purpose tag).
inline RngStream derive_stream(std::uint64_t master_seed, std::uint64_t index,
                               std::string_view purpose) {
  std::uint64_t h = hash_combine(master_seed, index);
  h = hash_combine(h, hash_tag(purpose));
  return RngStream(h);
}

}  // namespace risbeam

#endif
