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

#include "gyrator/io.h"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "gyrator/error.h"

namespace gyrator {

namespace {

[[noreturn]] void FormatError(const std::string& what, size_t offset) {
  Fail(ErrorKind::kFormat, what + " at byte " + std::to_string(offset));
}

// Skips whitespace and '#' comments, then reads a decimal integer.
int ReadHeaderInt(const std::string& b, size_t* pos) {
  while (*pos < b.size()) {
    const char c = b[*pos];
    if (c == '#') {
      while (*pos < b.size() && b[*pos] != '\n') ++*pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++*pos;
    } else {
      break;
    }
  }
  const size_t start = *pos;
  long v = 0;
  while (*pos < b.size() && std::isdigit(static_cast<unsigned char>(b[*pos]))) {
    v = v * 10 + (b[*pos] - '0');
    if (v > 1000000000L) FormatError("header value too large", start);
    ++*pos;
  }
  if (*pos == start) FormatError("expected a decimal number", start);
  return static_cast<int>(v);
}

void PutU16(std::string& s, uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>(v >> 8));
}

void PutU32(std::string& s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void PutF64(std::string& s, double d) {
  uint64_t v;
  std::memcpy(&v, &d, sizeof v);
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint64_t GetLe(const std::string& s, size_t pos, int bytes) {
  uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    v |= static_cast<uint64_t>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
  }
  return v;
}

double GetF64(const std::string& s, size_t pos) {
  const uint64_t v = GetLe(s, pos, 8);
  double d;
  std::memcpy(&d, &v, sizeof d);
  return d;
}

std::string Trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int ParseInt(const std::string& v, const std::string& field) {
  try {
    size_t used = 0;
    int x = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    Fail(ErrorKind::kFormat, "bad integer for " + field + ": '" + v + "'");
  }
}

double ParseDouble(const std::string& v, const std::string& field) {
  try {
    size_t used = 0;
    double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    Fail(ErrorKind::kFormat, "bad number for " + field + ": '" + v + "'");
  }
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kFormat, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteFileBytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorKind::kFormat, "cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) Fail(ErrorKind::kFormat, "write failed for '" + path + "'");
}

ComplexField ParsePgm(const std::string& b) {
  if (b.size() < 2 || b[0] != 'P' || b[1] != '5') FormatError("missing P5 magic", 0);
  size_t pos = 2;
  const int width = ReadHeaderInt(b, &pos);
  const int height = ReadHeaderInt(b, &pos);
  const size_t maxval_at = pos;
  const int maxval = ReadHeaderInt(b, &pos);
  if (width <= 0 || height <= 0) FormatError("image dimensions must be positive", maxval_at);
  if (maxval <= 0 || maxval > 65535) FormatError("maxval must lie in [1, 65535]", maxval_at);
  if (pos >= b.size() || !std::isspace(static_cast<unsigned char>(b[pos]))) {
    FormatError("expected whitespace after maxval", pos);
  }
  ++pos;
  const int bytes = maxval > 255 ? 2 : 1;
  const size_t need = static_cast<size_t>(width) * height * bytes;
  if (b.size() - pos < need) FormatError("truncated pixel data", b.size());
  ComplexField f(height, width);
  for (int m = 0; m < height; ++m) {
    for (int n = 0; n < width; ++n) {
      unsigned v;
      if (bytes == 1) {
        v = static_cast<unsigned char>(b[pos]);
      } else {
        v = (static_cast<unsigned>(static_cast<unsigned char>(b[pos])) << 8) |
            static_cast<unsigned char>(b[pos + 1]);
      }
      pos += bytes;
      f.at(m, n) = static_cast<double>(v);
    }
  }
  return f;
}

ComplexField ReadPgm(const std::string& path) { return ParsePgm(ReadFileBytes(path)); }

std::string EncodePgm(const ComplexField& f, PgmEmit emit, int maxval) {
  if (maxval <= 0 || maxval > 65535) Fail(ErrorKind::kRange, "maxval must lie in [1, 65535]");
  std::vector<double> v(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    const Complex z = f.data()[i];
    switch (emit) {
      case PgmEmit::kReal:
        v[i] = z.real();
        break;
      case PgmEmit::kMagnitude:
        v[i] = std::abs(z);
        break;
      case PgmEmit::kPhase:
        v[i] = (std::arg(z) + M_PI) / (2.0 * M_PI) * maxval;
        break;
    }
  }
  if (emit == PgmEmit::kMagnitude) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double a = *lo, span = *hi - *lo;
    for (double& x : v) x = span > 0.0 ? (x - a) / span * maxval : 0.0;
  }
  std::string out = "P5\n" + std::to_string(f.n2()) + " " + std::to_string(f.n1()) +
                    "\n" + std::to_string(maxval) + "\n";
  for (double x : v) {
    const unsigned u = static_cast<unsigned>(std::clamp(std::round(x), 0.0, double(maxval)));
    if (maxval > 255) out.push_back(static_cast<char>(u >> 8));
    out.push_back(static_cast<char>(u & 0xff));
  }
  return out;
}

void WritePgm(const std::string& path, const ComplexField& f, PgmEmit emit, int maxval) {
  WriteFileBytes(path, EncodePgm(f, emit, maxval));
}

std::string EncodeGyrc(const ComplexField& f) {
  std::string s = "GYRC";
  PutU16(s, 1);
  PutU32(s, static_cast<uint32_t>(f.n1()));
  PutU32(s, static_cast<uint32_t>(f.n2()));
  PutF64(s, f.dx());
  PutF64(s, f.dy());
  s.reserve(kGyrcHeaderBytes + 16 * f.size());
  for (const Complex& z : f.data()) {
    PutF64(s, z.real());
    PutF64(s, z.imag());
  }
  return s;
}

ComplexField ParseGyrc(const std::string& s) {
  if (s.size() < 4 || s.compare(0, 4, "GYRC") != 0) FormatError("bad GYRC magic", 0);
  if (s.size() < kGyrcHeaderBytes) FormatError("truncated GYRC header", s.size());
  const uint64_t version = GetLe(s, 4, 2);
  if (version != 1) FormatError("unsupported GYRC version " + std::to_string(version), 4);
  const uint64_t n1 = GetLe(s, 6, 4), n2 = GetLe(s, 10, 4);
  if (n1 == 0 || n2 == 0 || n1 > 1u << 20 || n2 > 1u << 20) {
    FormatError("invalid GYRC dimensions", 6);
  }
  const double dx = GetF64(s, 14), dy = GetF64(s, 22);
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy)) {
    FormatError("invalid GYRC sampling intervals", 14);
  }
  const size_t need = kGyrcHeaderBytes + 16 * n1 * n2;
  if (s.size() < need) FormatError("truncated GYRC payload", s.size());
  if (s.size() > need) FormatError("trailing bytes after GYRC payload", need);
  ComplexField f(static_cast<int>(n1), static_cast<int>(n2), dx, dy);
  size_t pos = kGyrcHeaderBytes;
  for (Complex& z : f.data()) {
    z = Complex(GetF64(s, pos), GetF64(s, pos + 8));
    pos += 16;
  }
  return f;
}

ComplexField ReadGyrc(const std::string& path) { return ParseGyrc(ReadFileBytes(path)); }

void WriteGyrc(const std::string& path, const ComplexField& f) {
  WriteFileBytes(path, EncodeGyrc(f));
}

ComplexField ReadField(const std::string& path) {
  const std::string bytes = ReadFileBytes(path);
  if (bytes.size() >= 4 && bytes.compare(0, 4, "GYRC") == 0) return ParseGyrc(bytes);
  return ParsePgm(bytes);
}

std::string DoubleToHex(double v) {
  uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, bits);
  return buf;
}

double HexToDouble(const std::string& hex) {
  if (hex.size() != 16 ||
      hex.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
    Fail(ErrorKind::kFormat, "expected 16 hex digits, got '" + hex + "'");
  }
  const uint64_t bits = std::stoull(hex, nullptr, 16);
  double v;
  std::memcpy(&v, &bits, sizeof v);
  return v;
}

std::string FormatKeyFile(const KeyFile& key) {
  std::ostringstream o;
  o << "gyrator-key 1\n";
  o << "alpha_deg " << FormatDouble(key.alpha_deg) << "\n";
  o << "Q " << key.q << "\n";
  o << "L " << key.l << "\n";
  o << "k1 " << FormatDouble(key.k1) << "\n";
  o << "k2 " << FormatDouble(key.k2) << "\n";
  o << "K " << key.bits << "\n";
  o << "r " << FormatDouble(key.r) << "\n";
  o << "burn_in " << key.burn_in << "\n";
  o << "backend " << key.backend << "\n";
  o << "region " << key.region << "\n";
  for (double x : key.x0) o << "x0 " << DoubleToHex(x) << "\n";
  return o.str();
}

KeyFile ParseKeyFile(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || Trim(line) != "gyrator-key 1") {
    Fail(ErrorKind::kFormat, "key file must start with 'gyrator-key 1'");
  }
  KeyFile key;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    const size_t sp = line.find(' ');
    if (sp == std::string::npos) {
      Fail(ErrorKind::kFormat, "line " + std::to_string(line_no) + ": expected 'name value'");
    }
    const std::string name = line.substr(0, sp), value = Trim(line.substr(sp + 1));
    if (name == "alpha_deg") {
      key.alpha_deg = ParseDouble(value, name);
    } else if (name == "Q") {
      key.q = ParseInt(value, name);
    } else if (name == "L") {
      key.l = ParseInt(value, name);
    } else if (name == "k1") {
      key.k1 = ParseDouble(value, name);
    } else if (name == "k2") {
      key.k2 = ParseDouble(value, name);
    } else if (name == "K") {
      key.bits = ParseInt(value, name);
    } else if (name == "r") {
      key.r = ParseDouble(value, name);
    } else if (name == "burn_in") {
      key.burn_in = ParseInt(value, name);
    } else if (name == "backend") {
      key.backend = value;
    } else if (name == "region") {
      key.region = ParseInt(value, name);
    } else if (name == "x0") {
      key.x0.push_back(HexToDouble(value));
    } else {
      Fail(ErrorKind::kFormat, "line " + std::to_string(line_no) + ": unknown field '" + name + "'");
    }
  }
  return key;
}

KeyFile ReadKeyFile(const std::string& path) { return ParseKeyFile(ReadFileBytes(path)); }

void WriteKeyFile(const std::string& path, const KeyFile& key) {
  WriteFileBytes(path, FormatKeyFile(key));
}

WatermarkKey ToWatermarkKey(const KeyFile& key) {
  WatermarkKey w;
  w.alpha = Angle::Degrees(key.alpha_deg);
  w.q = key.q;
  w.l = key.l;
  w.k1 = key.k1;
  w.k2 = key.k2;
  w.backend = ParseBackend(key.backend);
  return w;
}

CryptoKey ToCryptoKey(const KeyFile& key) {
  CryptoKey c;
  c.alpha = Angle::Degrees(key.alpha_deg);
  c.bits = key.bits;
  c.x0 = key.x0;
  c.r = key.r;
  c.burn_in = key.burn_in;
  c.region = key.region;
  c.backend = ParseBackend(key.backend);
  return c;
}

std::string FormatQuantMeta(const QuantMeta& meta) {
  std::ostringstream o;
  o << "gyrator-qmeta 1\n";
  o << "K " << meta.bits << "\n";
  o << "re_min " << DoubleToHex(meta.re_min) << "\n";
  o << "re_max " << DoubleToHex(meta.re_max) << "\n";
  o << "im_min " << DoubleToHex(meta.im_min) << "\n";
  o << "im_max " << DoubleToHex(meta.im_max) << "\n";
  return o.str();
}

QuantMeta ParseQuantMeta(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || Trim(line) != "gyrator-qmeta 1") {
    Fail(ErrorKind::kFormat, "metadata must start with 'gyrator-qmeta 1'");
  }
  QuantMeta meta;
  int seen = 0;
  while (std::getline(in, line)) {
    line = Trim(line);
    if (line.empty()) continue;
    const size_t sp = line.find(' ');
    if (sp == std::string::npos) Fail(ErrorKind::kFormat, "bad metadata line '" + line + "'");
    const std::string name = line.substr(0, sp), value = Trim(line.substr(sp + 1));
    if (name == "K") {
      meta.bits = ParseInt(value, name);
    } else if (name == "re_min") {
      meta.re_min = HexToDouble(value);
    } else if (name == "re_max") {
      meta.re_max = HexToDouble(value);
    } else if (name == "im_min") {
      meta.im_min = HexToDouble(value);
    } else if (name == "im_max") {
      meta.im_max = HexToDouble(value);
    } else {
      Fail(ErrorKind::kFormat, "unknown metadata field '" + name + "'");
    }
    ++seen;
  }
  if (seen != 5) Fail(ErrorKind::kFormat, "metadata is incomplete");
  return meta;
}

void WriteIntervalSidecar(const std::string& image_path, const ComplexField& f) {
  std::ostringstream o;
  o << "n1 " << f.n1() << "\n";
  o << "n2 " << f.n2() << "\n";
  o << "du " << FormatDouble(f.dx()) << "\n";
  o << "dv " << FormatDouble(f.dy()) << "\n";
  WriteFileBytes(image_path + ".intervals", o.str());
}

void WriteCsv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream o;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) o << ",";
      o << cells[i];
    }
    o << "\n";
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  WriteFileBytes(path, o.str());
}

}  // namespace gyrator
