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

#ifndef GYRATOR_IO_H_
#define GYRATOR_IO_H_

#include <string>
#include <vector>

#include "gyrator/apps.h"
#include "gyrator/field.h"

namespace gyrator {

enum class PgmEmit {
  kReal,       // real part written as is (rounded, clamped)
  kMagnitude,  // |f| min-max normalized to [0, maxval]
  kPhase,      // arg f mapped linearly from [-pi, pi] to [0, maxval]
};

// Binary P5 with maxval up to 65535. Samples fill rows first; row m of the
// file becomes stored index m. Intervals default to 1.
ComplexField ReadPgm(const std::string& path);
ComplexField ParsePgm(const std::string& bytes);
void WritePgm(const std::string& path, const ComplexField& f, PgmEmit emit,
              int maxval = 255);
std::string EncodePgm(const ComplexField& f, PgmEmit emit, int maxval = 255);

// Little-endian "GYRC" container: magic, u16 version 1, u32 n1, u32 n2,
// f64 dx, f64 dy, then interleaved (re, im) f64 samples in row-major order.
inline constexpr size_t kGyrcHeaderBytes = 30;
ComplexField ReadGyrc(const std::string& path);
ComplexField ParseGyrc(const std::string& bytes);
void WriteGyrc(const std::string& path, const ComplexField& f);
std::string EncodeGyrc(const ComplexField& f);

// Reads either format, chosen by the leading magic bytes.
ComplexField ReadField(const std::string& path);

// Plain-text key shared by the watermarking and encryption tools.
struct KeyFile {
  double alpha_deg = 0.0;
  int q = 8000;
  int l = 4096;
  double k1 = 0.15;
  double k2 = 0.15;
  int bits = 16;
  double r = 3.99;
  int burn_in = 1000;
  std::string backend = "ccc";
  int region = 0;
  std::vector<double> x0;
};

std::string FormatKeyFile(const KeyFile& key);
KeyFile ParseKeyFile(const std::string& text);
KeyFile ReadKeyFile(const std::string& path);
void WriteKeyFile(const std::string& path, const KeyFile& key);

WatermarkKey ToWatermarkKey(const KeyFile& key);
CryptoKey ToCryptoKey(const KeyFile& key);

// Quantization ranges stored next to an encrypted image.
std::string FormatQuantMeta(const QuantMeta& meta);
QuantMeta ParseQuantMeta(const std::string& text);

// "<path>.intervals" with the grid size and sampling intervals.
void WriteIntervalSidecar(const std::string& image_path, const ComplexField& f);

void WriteCsv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows);

std::string ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path, const std::string& bytes);

// Exact hexadecimal image of a double's bits.
std::string DoubleToHex(double v);
double HexToDouble(const std::string& hex);

}  // namespace gyrator

#endif  // GYRATOR_IO_H_
