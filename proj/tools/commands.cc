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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gyrator/apps.h"
#include "gyrator/error.h"
#include "gyrator/hgf.h"
#include "gyrator/io.h"
#include "gyrator/oracle.h"
#include "gyrator/transforms.h"

namespace gyrator::cli {

namespace {

[[noreturn]] void Usage(const std::string& what) { Fail(ErrorKind::kUsage, what); }

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string Path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void EnsureDir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) Fail(ErrorKind::kFormat, "cannot create directory '" + dir + "': " + ec.message());
}

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// emit is mag, phase, real or gyrc; empty picks gyrc for ".gyrc" paths and
// mag otherwise.
void WriteImage(const std::string& path, const ComplexField& f, const std::string& emit) {
  std::string e = emit;
  if (e.empty()) e = EndsWith(path, ".gyrc") ? "gyrc" : "mag";
  if (e == "gyrc") {
    WriteGyrc(path, f);
  } else if (e == "mag") {
    WritePgm(path, f, PgmEmit::kMagnitude);
  } else if (e == "phase") {
    WritePgm(path, f, PgmEmit::kPhase);
  } else if (e == "real") {
    WritePgm(path, f, PgmEmit::kReal);
  } else {
    Usage("--emit must be one of mag, phase, real, gyrc");
  }
  WriteIntervalSidecar(path, f);
}

std::vector<DgtMethod> ParseMethods(const std::string& text, bool with_direct) {
  std::vector<DgtMethod> out;
  if (text == "all") {
    out = {DgtMethod::kDft, DgtMethod::kCcc, DgtMethod::kLcc, DgtMethod::kDhgf};
    if (with_direct) out.push_back(DgtMethod::kDirect);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseMethod(item));
  if (out.empty()) Usage("no methods given");
  return out;
}

std::vector<double> ImageToVector(const ComplexField& f) {
  std::vector<double> v(f.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = f.data()[i].real();
  return v;
}

ComplexField VectorToImage(const std::vector<double>& v) {
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v.size()))));
  if (static_cast<size_t>(side) * side != v.size()) {
    Fail(ErrorKind::kConfig, "L must be a perfect square to write the watermark as an image");
  }
  ComplexField f(side, side);
  for (size_t i = 0; i < v.size(); ++i) f.data()[i] = v[i];
  return f;
}

std::vector<double> ReadPattern(const std::string& path, int l) {
  std::vector<double> v = ImageToVector(ReadField(path));
  if (static_cast<int>(v.size()) != l) {
    Fail(ErrorKind::kConfig, "'" + path + "' holds " + std::to_string(v.size()) +
                                 " samples but the key has L = " + std::to_string(l));
  }
  return v;
}

WatermarkKey LoadWatermarkKey(const std::string& path, const ComplexField& host) {
  WatermarkKey key = ToWatermarkKey(ReadKeyFile(path));
  key.permutation = SortPermutation(BackendForward(key.backend, host, key.alpha));
  return key;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<double> ParseNumberList(const std::string& text) {
  std::vector<double> out;
  try {
    if (text.find(':') != std::string::npos) {
      std::stringstream ss(text);
      std::string a, b, c;
      std::getline(ss, a, ':');
      std::getline(ss, b, ':');
      std::getline(ss, c, ':');
      // Both start:step:stop and start:stop:step are in use; the step is
      // the smaller of the last two.
      const double lo = std::stod(a), x = std::stod(b), y = std::stod(c);
      const double st = std::min(x, y), hi = std::max(x, y);
      if (!(st > 0.0) || hi < lo) Usage("range '" + text + "' needs a positive step and stop >= start");
      const int count = static_cast<int>(std::floor((hi - lo) / st + 1e-9)) + 1;
      for (int i = 0; i < count; ++i) out.push_back(lo + i * st);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    }
  } catch (const std::logic_error&) {
    Usage("cannot parse number list '" + text + "'");
  }
  if (out.empty()) Usage("empty number list");
  return out;
}

std::vector<int> ParseSizeList(const std::string& text) {
  std::vector<int> out;
  for (double v : ParseNumberList(text)) {
    if (v < 1 || v != std::floor(v)) Usage("sizes must be positive integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void RunTransform(const TransformOptions& o) {
  const bool intervals = o.du != 0.0 || o.dv != 0.0;
  const DgtMethod method = o.method == "auto" ? (intervals ? DgtMethod::kLcc : DgtMethod::kCcc)
                                             : ParseMethod(o.method);
  const Angle alpha = Angle::Degrees(o.alpha_deg);
  if (intervals) {
    if (method == DgtMethod::kDft) {
      Usage("--du/--dv cannot be combined with method dft: the requirements are "
            "du * dy * n2 = dv * dx * n1 = 2 pi |sin alpha|, so alpha fixes both intervals");
    }
    if (method == DgtMethod::kCcc || method == DgtMethod::kDhgf) {
      Usage(std::string("--du/--dv cannot be combined with method ") + MethodName(method) +
            ": its output intervals equal the input intervals");
    }
    if (o.du < 0.0 || o.dv < 0.0) Usage("--du and --dv must be positive");
  }
  ComplexField g = ReadField(o.in);
  if (o.dx > 0.0 || o.dy > 0.0) {
    g.set_intervals(o.dx > 0.0 ? o.dx : g.dx(), o.dy > 0.0 ? o.dy : g.dy());
  }
  if (method == DgtMethod::kDhgf && o.pad == 0 && g.n1() != g.n2()) {
    Usage("method dhgf needs a square input; use --pad to zero-pad");
  }
  DgtOptions options;
  options.du = o.du;
  options.dv = o.dv;
  options.dispatch.fold = o.fold;

  ComplexField out;
  if (o.pad > 0) {
    if (o.pad < std::max(g.n1(), g.n2())) Usage("--pad must be at least the input size");
    // The output shape depends on the route taken; a tiny probe tells which.
    const ComplexField probe = Dgt(ComplexField(2, 3, g.dx(), g.dy()), alpha,
                                   method == DgtMethod::kDhgf ? DgtMethod::kCcc : method, options);
    const bool swapped = probe.n1() == 3;
    out = Dgt(PadCentered(g, o.pad, o.pad), alpha, method, options);
    out = PadCentered(out, swapped ? g.n2() : g.n1(), swapped ? g.n1() : g.n2());
  } else {
    out = Dgt(g, alpha, method, options);
  }
  if (!out.all_finite()) Fail(ErrorKind::kNumerical, "transform produced non-finite samples");
  WriteImage(o.out, out, o.emit);
}

void RunVerifySweep(const VerifySweepOptions& o) {
  SweepInput input;
  if (o.input == "gaussian") {
    input.kind = SweepInput::Kind::kScaledGaussian;
  } else if (o.input == "rhgf") {
    input.kind = SweepInput::Kind::kSampledRhgf;
  } else {
    Usage("unknown sweep input '" + o.input + "'");
  }
  input.s = o.s;
  input.k = o.k;
  input.l = o.l;
  input.n = o.n;
  const std::vector<double> alphas = ParseNumberList(o.alphas);
  DispatchPolicy policy = SweepDispatchPolicy();
  if (o.no_fold) policy.fold = false;
  std::vector<std::vector<std::string>> rows;
  for (DgtMethod m : ParseMethods(o.methods, false)) {
    for (const SweepRow& r : AccuracySweep(m, input, alphas, policy)) {
      rows.push_back({MethodName(m), Fmt(r.alpha_deg), Fmt(r.nrmse), r.dispatched ? "1" : "0"});
    }
  }
  WriteCsv(o.out, {"method", "alpha_deg", "nrmse", "dispatched"}, rows);
  std::printf("wrote %zu rows to %s\n", rows.size(), o.out.c_str());
}

void RunVerifyAdditivity(const VerifyAdditivityOptions& o) {
  const std::vector<double> a = ParseNumberList(o.alphas);
  if (a.size() != 2) Usage("--alphas takes exactly two angles");
  ComplexField g = o.in.empty() ? SyntheticHost(128) : ReadField(o.in);
  g.set_intervals(o.interval, o.interval);
  std::vector<std::vector<std::string>> rows;
  for (const AdditivityRow& r : CccAdditivityTrend(g, Angle::Degrees(a[0]), Angle::Degrees(a[1]),
                                                   ParseSizeList(o.sizes))) {
    rows.push_back({Fmt(a[0]), Fmt(a[1]), std::to_string(r.n), Fmt(r.interval), Fmt(r.nrmse)});
  }
  WriteCsv(o.out, {"alpha1_deg", "alpha2_deg", "n", "interval", "nrmse"}, rows);
  std::printf("wrote %zu rows to %s\n", rows.size(), o.out.c_str());
}

void RunBench(const BenchOptions& o) {
  if (o.repeats < 1) Usage("--repeats must be positive");
  const Angle alpha = Angle::Degrees(o.alpha_deg);
  std::vector<std::vector<std::string>> rows;
  for (int n : ParseSizeList(o.sizes)) {
    std::mt19937_64 rng(n);
    std::normal_distribution<double> dist;
    const double d = std::sqrt(2.0 * M_PI / n);
    ComplexField g(n, n, d, d);
    for (Complex& v : g.data()) v = Complex(dist(rng), dist(rng));
    for (DgtMethod m : ParseMethods(o.methods, true)) {
      std::string seconds;
      if (m != DgtMethod::kDirect || n <= o.direct_max) {
        if (m == DgtMethod::kDhgf) CachedHgfBasis(n);
        double best = 1e300;
        for (int r = 0; r < o.repeats; ++r) {
          const auto start = std::chrono::steady_clock::now();
          const ComplexField out = Dgt(g, alpha, m);
          best = std::min(best, Seconds(start));
          if (!out.all_finite()) Fail(ErrorKind::kNumerical, "benchmark produced non-finite samples");
        }
        seconds = Fmt(best);
      }
      char count[32];
      std::snprintf(count, sizeof(count), "%.0f", MultiplicationCount(m, n));
      rows.push_back({MethodName(m), std::to_string(n), count, seconds});
    }
  }
  WriteCsv(o.out, {"method", "n", "multiplications", "seconds"}, rows);
  std::printf("wrote %zu rows to %s\n", rows.size(), o.out.c_str());
}

void RunModes(const ModesOptions& o) {
  const DgtMethod method = ParseMethod(o.method);
  EnsureDir(o.out_dir);
  DispatchPolicy policy;
  policy.fold = true;
  std::vector<std::vector<std::string>> rows;
  for (double deg : ParseNumberList(o.alphas)) {
    const ComplexField f = ModeConvert(o.k, o.l, Angle::Degrees(deg), o.n, method, policy);
    char name[64];
    std::snprintf(name, sizeof(name), "mode_%06.2f.pgm", deg);
    WriteImage(Path(o.out_dir, name), f, "mag");
    rows.push_back({Fmt(deg), name, Fmt(RingAngularDeviation(f, method == DgtMethod::kDhgf))});
  }
  WriteCsv(Path(o.out_dir, "modes.csv"), {"alpha_deg", "file", "ring_deviation"}, rows);
  std::printf("wrote %zu panels to %s\n", rows.size(), o.out_dir.c_str());
}

void RunSampleDemo(const SampleDemoOptions& o) {
  SamplingDemoConfig config;
  config.n = o.n;
  config.dx = o.dx;
  config.alpha_deg = o.alpha_deg;
  config.radius = o.radius;
  config.seed = o.seed;
  const SamplingDemoResult r = RunSamplingDemo(config);
  EnsureDir(o.out_dir);
  WriteImage(Path(o.out_dir, "signal.pgm"), r.signal, "mag");
  WriteImage(Path(o.out_dir, "gyrator_reconstruction.pgm"), r.gyrator_reconstruction, "mag");
  WriteImage(Path(o.out_dir, "fourier_reconstruction.pgm"), r.fourier_reconstruction, "mag");
  WriteCsv(Path(o.out_dir, "sample_demo.csv"), {"pipeline", "nrmse", "du"},
           {{"gyrator", Fmt(r.gyrator_nrmse), Fmt(r.du)},
            {"fourier", Fmt(r.fourier_nrmse), Fmt(r.du)}});
  std::printf("gyrator nrmse %.3g, fourier nrmse %.3g\n", r.gyrator_nrmse, r.fourier_nrmse);
}

void RunKeygen(const KeygenOptions& o) {
  KeyFile key;
  key.alpha_deg = o.alpha_deg;
  key.bits = o.bits;
  key.backend = o.backend;
  key.region = o.region;
  key.q = o.q;
  key.l = o.l;
  key.k1 = o.k1;
  key.k2 = o.k2;
  ParseBackend(o.backend);
  if (o.bits < 1 || o.bits > 32) Usage("--bits must lie in [1, 32]");
  key.x0 = DeriveSeeds(o.bits, o.seed);
  WriteKeyFile(o.out, key);
}

void RunWatermarkEmbed(const WatermarkOptions& o) {
  const ComplexField host = ReadField(o.host);
  WatermarkKey key = ToWatermarkKey(ReadKeyFile(o.key));
  const std::vector<double> w1 = ReadPattern(o.w1, key.l), w2 = ReadPattern(o.w2, key.l);
  ComplexField out = WatermarkEmbed(host, w1, w2, key);
  if (o.noise > 0.0) out = AddGaussianNoise(out, o.noise, o.seed);
  WriteImage(o.out, out, "");
  std::printf("psnr %.2f dB\n", Psnr(host, out));
}

void RunWatermarkExtract(const WatermarkOptions& o) {
  const ComplexField host = ReadField(o.host);
  const WatermarkKey key = ToWatermarkKey(ReadKeyFile(o.key));
  const auto [w1, w2] = WatermarkExtract(ReadField(o.in), host, key);
  WriteImage(o.out_w1, VectorToImage(w1), "real");
  WriteImage(o.out_w2, VectorToImage(w2), "real");
}

void RunWatermarkDetect(const WatermarkOptions& o) {
  const ComplexField host = ReadField(o.host);
  const WatermarkKey key = LoadWatermarkKey(o.key, host);
  std::vector<std::pair<std::vector<double>, std::vector<double>>> cands;
  std::vector<std::string> names;
  if (!o.candidates.empty()) {
    std::stringstream ss(ReadFileBytes(o.candidates));
    std::string line;
    while (std::getline(ss, line)) {
      std::stringstream ls(line);
      std::string a, b;
      if (!(ls >> a)) continue;
      if (a[0] == '#') continue;
      if (!(ls >> b)) Fail(ErrorKind::kFormat, "candidate line needs two paths: '" + line + "'");
      cands.emplace_back(ReadPattern(a, key.l), ReadPattern(b, key.l));
      names.push_back(a + " " + b);
    }
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> u(0, 255);
  for (int i = 0; i < o.random; ++i) {
    std::vector<double> a(key.l), b(key.l);
    for (double& v : a) v = u(rng);
    for (double& v : b) v = u(rng);
    cands.emplace_back(std::move(a), std::move(b));
    names.push_back("random:" + std::to_string(i));
  }
  if (cands.empty()) Usage("no candidates: pass --candidates and/or --random");
  const std::vector<double> r = NormalizedResponses(ReadField(o.in), cands, key);
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < r.size(); ++i) rows.push_back({std::to_string(i), names[i], Fmt(r[i])});
  WriteCsv(o.out, {"index", "candidate", "normalized_response"}, rows);
  const size_t best = std::max_element(r.begin(), r.end()) - r.begin();
  std::printf("best %zu (%s)\n", best, names[best].c_str());
}

void RunEncrypt(const CryptOptions& o) {
  CryptoKey key = ToCryptoKey(ReadKeyFile(o.key));
  if (o.region >= 0) key.region = o.region;
  const EncryptedImage enc = Encrypt(ReadField(o.in), key);
  WriteImage(o.out, enc.image, "");
  WriteFileBytes(o.meta.empty() ? o.out + ".qmeta" : o.meta, FormatQuantMeta(enc.meta));
}

void RunDecrypt(const CryptOptions& o) {
  CryptoKey key = ToCryptoKey(ReadKeyFile(o.key));
  if (o.region >= 0) key.region = o.region;
  const QuantMeta meta = ParseQuantMeta(ReadFileBytes(o.meta.empty() ? o.in + ".qmeta" : o.meta));
  const ComplexField out = Decrypt(ReadField(o.in), meta, key);
  WriteImage(o.out, out, EndsWith(o.out, ".gyrc") ? "gyrc" : "real");
}

}  // namespace gyrator::cli
