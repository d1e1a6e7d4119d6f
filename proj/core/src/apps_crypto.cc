// Copyright 2026 The Gyrator Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gyrator/apps.h"
#include "gyrator/error.h"

namespace gyrator {

namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Chaining state update: each code perturbs every later keystream word.
uint64_t Mix(uint64_t state, uint64_t code) {
  return SplitMix64(state ^ SplitMix64(code + 0x632BE59BD9B4E019ull));
}

struct Quantizer {
  double min = 0.0;
  double step = 1.0;
  uint64_t top = 0;

  Quantizer(double lo, double hi, int bits) : min(lo) {
    top = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
    step = hi > lo ? (hi - lo) / static_cast<double>(top) : 1.0;
  }
  uint64_t Code(double v) const {
    const double c = std::round((v - min) / step);
    if (!(c > 0.0)) return 0;
    if (c >= static_cast<double>(top)) return top;
    return static_cast<uint64_t>(c);
  }
  double Value(uint64_t code) const { return min + static_cast<double>(code) * step; }
};

// Indices of the coefficient components that get encrypted, real part
// before imaginary part, in row-major order over the centered block.
std::vector<size_t> RegionSlots(const ComplexField& f, int region) {
  std::vector<size_t> slots;
  int r1 = f.n1(), r2 = f.n2(), b1 = 0, b2 = 0;
  if (region > 0) {
    r1 = r2 = region;
    b1 = f.m_offset() - region / 2;
    b2 = f.n_offset() - region / 2;
  }
  slots.reserve(static_cast<size_t>(r1) * r2 * 2);
  for (int m = b1; m < b1 + r1; ++m) {
    for (int n = b2; n < b2 + r2; ++n) {
      const size_t idx = static_cast<size_t>(m) * f.n2() + n;
      slots.push_back(2 * idx);
      slots.push_back(2 * idx + 1);
    }
  }
  return slots;
}

std::vector<uint64_t> Keystream(const CryptoKey& key, size_t count) {
  std::vector<uint64_t> words(count, 0);
  for (int k = 0; k < key.bits; ++k) {
    const std::vector<uint8_t> bits = LogisticBits(key.x0[k], key.r, key.burn_in, count);
    const int shift = key.bits - 1 - k;
    for (size_t i = 0; i < count; ++i) words[i] |= static_cast<uint64_t>(bits[i]) << shift;
  }
  return words;
}

struct Codes {
  std::vector<uint64_t> values;  // 2 per coefficient
};

Codes Quantize(const ComplexField& c, const QuantMeta& meta) {
  const Quantizer qr(meta.re_min, meta.re_max, meta.bits);
  const Quantizer qi(meta.im_min, meta.im_max, meta.bits);
  Codes codes;
  codes.values.resize(2 * c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    codes.values[2 * i] = qr.Code(c.data()[i].real());
    codes.values[2 * i + 1] = qi.Code(c.data()[i].imag());
  }
  return codes;
}

ComplexField Dequantize(const Codes& codes, const QuantMeta& meta, const ComplexField& shape) {
  const Quantizer qr(meta.re_min, meta.re_max, meta.bits);
  const Quantizer qi(meta.im_min, meta.im_max, meta.bits);
  ComplexField out(shape.n1(), shape.n2(), shape.dx(), shape.dy());
  for (size_t i = 0; i < out.size(); ++i) {
    out.data()[i] = Complex(qr.Value(codes.values[2 * i]), qi.Value(codes.values[2 * i + 1]));
  }
  return out;
}

QuantMeta MetaFor(const ComplexField& c, int bits) {
  QuantMeta meta;
  meta.bits = bits;
  meta.re_min = meta.im_min = std::numeric_limits<double>::infinity();
  meta.re_max = meta.im_max = -std::numeric_limits<double>::infinity();
  for (const Complex& v : c.data()) {
    meta.re_min = std::min(meta.re_min, v.real());
    meta.re_max = std::max(meta.re_max, v.real());
    meta.im_min = std::min(meta.im_min, v.imag());
    meta.im_max = std::max(meta.im_max, v.imag());
  }
  return meta;
}

}  // namespace

void ValidateCryptoKey(const CryptoKey& key, int n) {
  if (key.bits < 1 || key.bits > 32) Fail(ErrorKind::kRange, "K must lie in [1, 32]");
  if (static_cast<int>(key.x0.size()) != key.bits) {
    Fail(ErrorKind::kRange, "one initial condition per bit plane is required");
  }
  for (double x : key.x0) {
    if (!(x > 0.0 && x < 1.0) || x == 0.5) {
      Fail(ErrorKind::kWeakKey, "initial conditions must lie in (0, 1) and avoid 0.5");
    }
  }
  if (!(key.r > 0.0 && key.r <= 4.0)) Fail(ErrorKind::kRange, "r must lie in (0, 4]");
  if (key.burn_in < 0) Fail(ErrorKind::kRange, "burn-in must be nonnegative");
  if (key.region < 0 || key.region > n) Fail(ErrorKind::kRange, "region exceeds the grid");
}

std::vector<double> DeriveSeeds(int bits, uint64_t seed) {
  std::vector<double> x(bits);
  uint64_t s = seed;
  for (int k = 0; k < bits; ++k) {
    s = SplitMix64(s);
    double v = (static_cast<double>(s >> 11) + 0.5) / 9007199254740992.0;
    if (v == 0.5) v = 0.5 + 1e-9;
    x[k] = v;
  }
  return x;
}

std::vector<uint8_t> LogisticBits(double x0, double r, int burn_in, size_t count) {
  double x = x0;
  for (int i = 0; i < burn_in; ++i) x = r * x * (1.0 - x);
  std::vector<uint8_t> bits(count);
  for (size_t i = 0; i < count; ++i) {
    x = r * x * (1.0 - x);
    bits[i] = x >= 0.5 ? 1 : 0;
  }
  return bits;
}

EncryptedImage Encrypt(const ComplexField& image, const CryptoKey& key) {
  ValidateCryptoKey(key, std::min(image.n1(), image.n2()));
  const ComplexField coeffs = BackendForward(key.backend, image, key.alpha);
  EncryptedImage out;
  out.meta = MetaFor(coeffs, key.bits);
  Codes codes = Quantize(coeffs, out.meta);
  const std::vector<size_t> slots = RegionSlots(coeffs, key.region);
  const std::vector<uint64_t> words = Keystream(key, slots.size());
  const uint64_t mask = (1ull << key.bits) - 1;
  uint64_t state = 0;
  for (size_t i = 0; i < slots.size(); ++i) {
    const uint64_t plain = codes.values[slots[i]];
    codes.values[slots[i]] = (plain ^ words[i] ^ state) & mask;
    state = Mix(state, plain);
  }
  out.image = BackendInverse(key.backend, Dequantize(codes, out.meta, coeffs), key.alpha);
  out.image.set_intervals(image.dx(), image.dy());
  return out;
}

ComplexField Decrypt(const ComplexField& encrypted, const QuantMeta& meta,
                     const CryptoKey& key) {
  ValidateCryptoKey(key, std::min(encrypted.n1(), encrypted.n2()));
  if (meta.bits != key.bits) Fail(ErrorKind::kConfig, "metadata was written for another K");
  const ComplexField coeffs = BackendForward(key.backend, encrypted, key.alpha);
  Codes codes = Quantize(coeffs, meta);
  const std::vector<size_t> slots = RegionSlots(coeffs, key.region);
  const std::vector<uint64_t> words = Keystream(key, slots.size());
  const uint64_t mask = (1ull << key.bits) - 1;
  uint64_t state = 0;
  for (size_t i = 0; i < slots.size(); ++i) {
    const uint64_t plain = (codes.values[slots[i]] ^ words[i] ^ state) & mask;
    codes.values[slots[i]] = plain;
    state = Mix(state, plain);
  }
  ComplexField out = BackendInverse(key.backend, Dequantize(codes, meta, coeffs), key.alpha);
  out.set_intervals(encrypted.dx(), encrypted.dy());
  return out;
}

ComplexField QuantizeRoundTrip(const ComplexField& image, const CryptoKey& key) {
  const ComplexField coeffs = BackendForward(key.backend, image, key.alpha);
  const QuantMeta meta = MetaFor(coeffs, key.bits);
  ComplexField out =
      BackendInverse(key.backend, Dequantize(Quantize(coeffs, meta), meta, coeffs), key.alpha);
  out.set_intervals(image.dx(), image.dy());
  return out;
}

}  // namespace gyrator
