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

// gyrator: discrete gyrator transforms and their applications from the
// command line. Exit codes: 0 success, 2 usage, 3 format, 4 singular angle,
// 5 numerical. GYRATOR_THREADS caps the worker count.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "gyrator/error.h"

namespace {

using gyrator::ErrorKind;

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kFormat:
      return 3;
    case ErrorKind::kSingularAngle:
    case ErrorKind::kSingularParameter:
      return 4;
    case ErrorKind::kNumerical:
    case ErrorKind::kConditioning:
    case ErrorKind::kInsufficientData:
      return 5;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = gyrator::cli;
  CLI::App app{"Discrete gyrator transforms, verification and applications"};
  app.require_subcommand(1);
  std::function<void()> action;

  cli::TransformOptions t;
  auto* transform = app.add_subcommand("transform", "Apply a discrete gyrator transform");
  transform->add_option("--alpha", t.alpha_deg, "Angle in degrees")->required();
  transform->add_option("--method", t.method, "direct, lcc, dft, ccc, dhgf or auto")
      ->check(CLI::IsMember({"direct", "lcc", "dft", "ccc", "dhgf", "auto"}));
  transform->add_option("--in", t.in, "Input PGM or GYRC file")->required();
  transform->add_option("--out", t.out, "Output file")->required();
  transform->add_option("--du", t.du, "Output interval along the first axis (direct, lcc)");
  transform->add_option("--dv", t.dv, "Output interval along the second axis (direct, lcc)");
  transform->add_option("--dx", t.dx, "Override the input interval along the first axis");
  transform->add_option("--dy", t.dy, "Override the input interval along the second axis");
  transform->add_option("--pad", t.pad, "Zero-pad to pad x pad, transform, crop back");
  transform->add_option("--emit", t.emit, "mag, phase, real or gyrc (default from extension)")
      ->check(CLI::IsMember({"mag", "phase", "real", "gyrc"}));
  transform->add_flag("--fold", t.fold, "Also reroute poorly conditioned angles");
  transform->callback([&] { action = [&] { cli::RunTransform(t); }; });

  auto* verify = app.add_subcommand("verify", "Accuracy and additivity experiments");
  verify->require_subcommand(1);
  cli::VerifySweepOptions vg, vr;
  vr.input = "rhgf";
  vr.n = 128;
  for (auto [name, o] : {std::pair{"gaussian", &vg}, std::pair{"rhgf", &vr}}) {
    auto* sub = verify->add_subcommand(name, std::string("NRMSE sweep on the ") + name + " input");
    if (o == &vg) sub->add_option("--s", o->s, "Gaussian scale");
    if (o == &vr) {
      sub->add_option("--k", o->k, "First order");
      sub->add_option("--l", o->l, "Second order");
    }
    sub->add_option("--n", o->n, "Grid size");
    sub->add_option("--alphas", o->alphas, "Angles: start:step:stop, start:stop:step or a,b,c");
    sub->add_option("--methods", o->methods, "all or a comma list");
    sub->add_flag("--no-fold", o->no_fold, "Only reroute near the singular angles");
    sub->add_option("--out", o->out, "CSV path")->required();
    sub->callback([&action, o] { action = [o] { cli::RunVerifySweep(*o); }; });
  }
  cli::VerifyAdditivityOptions va;
  auto* additivity = verify->add_subcommand("additivity", "CCC additivity versus grid size");
  additivity->add_option("--alphas", va.alphas, "Two angles a1,a2");
  additivity->add_option("--sizes", va.sizes, "Grid sizes");
  additivity->add_option("--in", va.in, "Test image (built-in image when absent)");
  additivity->add_option("--interval", va.interval, "Sampling interval of the test image");
  additivity->add_option("--out", va.out, "CSV path")->required();
  additivity->callback([&] { action = [&] { cli::RunVerifyAdditivity(va); }; });

  cli::BenchOptions b;
  auto* bench = app.add_subcommand("bench", "Multiplication counts and timings");
  bench->add_option("--sizes", b.sizes, "Grid sizes");
  bench->add_option("--methods", b.methods, "all or a comma list");
  bench->add_option("--alpha", b.alpha_deg, "Angle in degrees");
  bench->add_option("--repeats", b.repeats, "Timing repeats; the best is kept");
  bench->add_option("--direct-max", b.direct_max, "Largest size at which direct summation is timed");
  bench->add_option("--out", b.out, "CSV path")->required();
  bench->callback([&] { action = [&] { cli::RunBench(b); }; });

  cli::ModesOptions m;
  auto* modes = app.add_subcommand("modes", "Hermite-Gaussian mode conversion panels");
  modes->add_option("--k", m.k, "Order along x");
  modes->add_option("--l", m.l, "Order along y");
  modes->add_option("--alpha-list", m.alphas, "Angles: start:step:stop, start:stop:step or a,b,c");
  modes->add_option("--n", m.n, "Grid size");
  modes->add_option("--method", m.method, "Transform method");
  modes->add_option("--out-dir", m.out_dir, "Output directory");
  modes->callback([&] { action = [&] { cli::RunModes(m); }; });

  cli::SampleDemoOptions s;
  auto* sample = app.add_subcommand("sample-demo", "Gyrator-domain versus Fourier low-pass sampling");
  sample->add_option("--alpha", s.alpha_deg, "Angle in degrees");
  sample->add_option("--n", s.n, "Grid size");
  sample->add_option("--dx", s.dx, "Sampling interval");
  sample->add_option("--radius", s.radius, "Band radius in samples");
  sample->add_option("--seed", s.seed, "Signal seed");
  sample->add_option("--out-dir", s.out_dir, "Output directory");
  sample->callback([&] { action = [&] { cli::RunSampleDemo(s); }; });

  cli::KeygenOptions k;
  auto* keygen = app.add_subcommand("keygen", "Write a key file");
  keygen->add_option("--alpha", k.alpha_deg, "Angle in degrees");
  keygen->add_option("--bits", k.bits, "Quantization bits K");
  keygen->add_option("--seed", k.seed, "Seed for the logistic-map initial conditions");
  keygen->add_option("--backend", k.backend, "ccc, dhgf or dfrft2");
  keygen->add_option("--region", k.region, "Side of the encrypted block; 0 for all");
  keygen->add_option("--q", k.q, "Watermark rank offset Q");
  keygen->add_option("--l", k.l, "Watermark length L");
  keygen->add_option("--k1", k.k1, "Real-part strength");
  keygen->add_option("--k2", k.k2, "Imaginary-part strength");
  keygen->add_option("--out", k.out, "Key file")->required();
  keygen->callback([&] { action = [&] { cli::RunKeygen(k); }; });

  cli::WatermarkOptions we, wx, wd;
  auto* watermark = app.add_subcommand("watermark", "Transform-domain watermarking");
  watermark->require_subcommand(1);
  auto* embed = watermark->add_subcommand("embed", "Embed two watermarks");
  auto* extract = watermark->add_subcommand("extract", "Recover the watermarks with the host");
  auto* detect = watermark->add_subcommand("detect", "Rank candidate watermark sets");
  for (auto [sub, o] : {std::pair{embed, &we}, std::pair{extract, &wx}, std::pair{detect, &wd}}) {
    sub->add_option("--key", o->key, "Key file")->required();
    sub->add_option("--host", o->host, "Original host image")->required();
  }
  embed->add_option("--w1", we.w1, "Real-part watermark image")->required();
  embed->add_option("--w2", we.w2, "Imaginary-part watermark image")->required();
  embed->add_option("--out", we.out, "Watermarked image (complex; .gyrc keeps it)")->required();
  embed->add_option("--noise", we.noise, "Add real Gaussian noise of this variance");
  embed->add_option("--seed", we.seed, "Noise seed");
  extract->add_option("--in", wx.in, "Watermarked image")->required();
  extract->add_option("--out-w1", wx.out_w1, "Recovered real-part watermark")->required();
  extract->add_option("--out-w2", wx.out_w2, "Recovered imaginary-part watermark")->required();
  detect->add_option("--in", wd.in, "Suspect image")->required();
  detect->add_option("--candidates", wd.candidates, "File of 'w1 w2' image path pairs");
  detect->add_option("--random", wd.random, "Number of random candidate sets to add");
  detect->add_option("--seed", wd.seed, "Seed for random candidates");
  detect->add_option("--out", wd.out, "CSV path")->required();
  embed->callback([&] { action = [&] { cli::RunWatermarkEmbed(we); }; });
  extract->callback([&] { action = [&] { cli::RunWatermarkExtract(wx); }; });
  detect->callback([&] { action = [&] { cli::RunWatermarkDetect(wd); }; });

  cli::CryptOptions ce, cd;
  auto* crypt = app.add_subcommand("crypt", "Bit-plane image encryption");
  crypt->require_subcommand(1);
  auto* encrypt = crypt->add_subcommand("encrypt", "Encrypt an image");
  auto* decrypt = crypt->add_subcommand("decrypt", "Decrypt an image");
  for (auto [sub, o] : {std::pair{encrypt, &ce}, std::pair{decrypt, &cd}}) {
    sub->add_option("--key", o->key, "Key file")->required();
    sub->add_option("--in", o->in, "Input image")->required();
    sub->add_option("--out", o->out, "Output image")->required();
    sub->add_option("--meta", o->meta, "Quantization metadata (default <encrypted>.qmeta)");
    sub->add_option("--region", o->region, "Override the key's region");
  }
  encrypt->callback([&] { action = [&] { cli::RunEncrypt(ce); }; });
  decrypt->callback([&] { action = [&] { cli::RunDecrypt(cd); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (action) action();
  } catch (const gyrator::Error& e) {
    std::fprintf(stderr, "gyrator: %s\n", e.what());
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gyrator: %s\n", e.what());
    return 1;
  }
  return 0;
}
