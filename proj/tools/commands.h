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

#ifndef GYRATOR_TOOLS_COMMANDS_H_
#define GYRATOR_TOOLS_COMMANDS_H_

#include <string>
#include <vector>

namespace gyrator::cli {

// "a:step:b" (inclusive) or "a,b,c".
std::vector<double> ParseNumberList(const std::string& text);
std::vector<int> ParseSizeList(const std::string& text);

struct TransformOptions {
  double alpha_deg = 0.0;
  std::string method = "auto";
  std::string in;
  std::string out;
  double du = 0.0;
  double dv = 0.0;
  // Input intervals; zero keeps the file's own (1 for PGM).
  double dx = 0.0;
  double dy = 0.0;
  int pad = 0;
  std::string emit;
  bool fold = false;
};
void RunTransform(const TransformOptions& o);

struct VerifySweepOptions {
  std::string input = "gaussian";  // or "rhgf"
  double s = 0.4;
  int k = 25;
  int l = 40;
  int n = 101;
  std::string alphas = "5:175:5";
  std::string methods = "all";
  bool no_fold = false;
  std::string out;
};
void RunVerifySweep(const VerifySweepOptions& o);

struct VerifyAdditivityOptions {
  std::string alphas = "25,20";
  std::string sizes = "128,256,512";
  // Optional image; a built-in 128 x 128 test image otherwise.
  std::string in;
  double interval = 0.1567;
  std::string out;
};
void RunVerifyAdditivity(const VerifyAdditivityOptions& o);

struct BenchOptions {
  std::string sizes = "64,128,256";
  std::string methods = "all";
  double alpha_deg = 60.0;
  int repeats = 1;
  // Direct summation is only timed up to this size.
  int direct_max = 64;
  std::string out;
};
void RunBench(const BenchOptions& o);

struct ModesOptions {
  int k = 2;
  int l = 5;
  std::string alphas = "0:22.5:180";
  int n = 128;
  std::string method = "ccc";
  std::string out_dir = ".";
};
void RunModes(const ModesOptions& o);

struct SampleDemoOptions {
  double alpha_deg = 15.0;
  int n = 100;
  double dx = 0.666;
  double radius = 12.0;
  unsigned long long seed = 11;
  std::string out_dir = ".";
};
void RunSampleDemo(const SampleDemoOptions& o);

struct KeygenOptions {
  double alpha_deg = 40.0;
  int bits = 16;
  unsigned long long seed = 1;
  std::string backend = "ccc";
  int region = 0;
  int q = 8000;
  int l = 4096;
  double k1 = 0.15;
  double k2 = 0.15;
  std::string out;
};
void RunKeygen(const KeygenOptions& o);

struct WatermarkOptions {
  std::string key;
  std::string host;
  std::string in;
  std::string out;
  std::string w1;
  std::string w2;
  std::string out_w1;
  std::string out_w2;
  // Detection: text file with one "w1 w2" pair of image paths per line.
  std::string candidates;
  int random = 0;
  unsigned long long seed = 1;
  // Real Gaussian noise added after embedding.
  double noise = 0.0;
};
void RunWatermarkEmbed(const WatermarkOptions& o);
void RunWatermarkExtract(const WatermarkOptions& o);
void RunWatermarkDetect(const WatermarkOptions& o);

struct CryptOptions {
  std::string key;
  std::string in;
  std::string out;
  std::string meta;
  int region = -1;
};
void RunEncrypt(const CryptOptions& o);
void RunDecrypt(const CryptOptions& o);

}  // namespace gyrator::cli

#endif  // GYRATOR_TOOLS_COMMANDS_H_
