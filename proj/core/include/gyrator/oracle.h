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

#ifndef GYRATOR_ORACLE_H_
#define GYRATOR_ORACLE_H_

#include <string>
#include <vector>

#include "gyrator/angle.h"
#include "gyrator/field.h"
#include "gyrator/transforms.h"

namespace gyrator {

// Sample grid. With half_sample the coordinates are (m - (n - 1) / 2) * d,
// otherwise (m - floor(n / 2)) * d.
struct Grid {
  int n1 = 0;
  int n2 = 0;
  double dx = 1.0;
  double dy = 1.0;
  bool half_sample = false;
};

Grid GridOf(const ComplexField& f, bool half_sample = false);

// exp(-s (x^2 + y^2) / 2) on a grid.
ComplexField ScaledGaussian(double s, const Grid& grid);

// Gyrator transform of exp(-s (x^2 + y^2) / 2) in closed form, sampled on
// the output grid.
ComplexField GaussianGyratorClosedForm(double s, Angle alpha, const Grid& grid);

struct SweepInput {
  enum class Kind { kScaledGaussian, kSampledRhgf };
  Kind kind = Kind::kScaledGaussian;
  double s = 0.4;
  int k = 25;
  int l = 40;
  int n = 101;
};

struct SweepRow {
  double alpha_deg = 0.0;
  double nrmse = 0.0;
  bool dispatched = false;
};

// Runs one method over a list of angles (degrees) on a grid with
// interval sqrt(2 pi / n) and compares with the continuous reference.
// LCC and direct use output intervals equal to the input interval.
std::vector<SweepRow> AccuracySweep(DgtMethod method, const SweepInput& input,
                                    const std::vector<double>& alphas_deg,
                                    const DispatchPolicy& policy);

// Routing used for the accuracy experiment.
DispatchPolicy SweepDispatchPolicy();

// Real multiplication counts of each method for an N x N input.
double MultiplicationCount(DgtMethod method, int n);

struct ComplexityRow {
  int n = 0;
  double dft = 0, ccc = 0, lcc = 0, dhgf = 0, direct = 0;
  // dft < ccc < lcc < dhgf < direct.
  bool ordered = false;
};

struct ComplexityReport {
  std::vector<ComplexityRow> rows;
  // True when the chain holds for every N >= 64 in the list.
  bool ordering_holds_from_64 = false;
  std::string caveat;
};

ComplexityReport ComplexityOrderCheck(const std::vector<int>& sizes);

// Bilinear resampling of g onto an n x n centered grid of interval d. Points
// outside the support of g are zero, so a finer d upsamples and a larger n
// zero-pads.
ComplexField ResampleCentered(const ComplexField& g, int n, double d);

// NRMSE between DGT-CCC at a2 applied after a1 and DGT-CCC at a1 + a2.
double CccAdditivityError(const ComplexField& g, Angle a1, Angle a2);

struct AdditivityRow {
  int n = 0;
  double interval = 0.0;
  double nrmse = 0.0;
};

// Resamples g to each size with interval sqrt(pi / n), keeping its physical
// extent, and measures CCC additivity. With a 128 x 128 input of interval
// 0.1567 the first size reproduces the original grid.
std::vector<AdditivityRow> CccAdditivityTrend(const ComplexField& g, Angle a1, Angle a2,
                                              const std::vector<int>& sizes);

}  // namespace gyrator

#endif  // GYRATOR_ORACLE_H_
