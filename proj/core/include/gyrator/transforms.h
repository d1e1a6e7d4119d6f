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

#ifndef GYRATOR_TRANSFORMS_H_
#define GYRATOR_TRANSFORMS_H_

#include <string>

#include "gyrator/angle.h"
#include "gyrator/field.h"
#include "gyrator/hgf.h"

namespace gyrator {

enum class DgtMethod { kDirect, kLcc, kDft, kCcc, kDhgf };

const char* MethodName(DgtMethod method);
// Accepts direct, lcc, dft, ccc, dhgf. Throws a usage error otherwise.
DgtMethod ParseMethod(const std::string& name);

// Direct double summation of the discrete gyrator kernel. O(N^4); meant as
// a reference. The output is out_n1 x out_n2 (default n2 x n1) with
// intervals (du, dv). Exact multiples of pi return the input or its
// reflection. Angles within tau of those throw a singular-angle error.
ComplexField DgtDirect(const ComplexField& g, Angle alpha, double du, double dv,
                       int out_n1 = 0, int out_n2 = 0,
                       double tau = kDefaultTau);

// Chirp multiplication, linear chirp convolution, axis swap and a second
// chirp. Returns the full (3 n2 - 2) x (3 n1 - 2) field with intervals
// (du, dv); the central n2 x n1 block equals DgtDirect.
ComplexField DgtLcc(const ComplexField& g, Angle alpha, double du, double dv,
                    double tau = kDefaultTau);

// Central block of a full LCC output.
ComplexField LccCentral(const ComplexField& full);

// Inverts DgtLcc step by step. full must be the whole extended output for
// an n1 x n2 input with intervals (dx, dy).
ComplexField DgtLccInverse(const ComplexField& full, Angle alpha, int n1,
                           int n2, double dx, double dy,
                           double tau = kDefaultTau);

// Chirp multiplication, centered DFT, axis swap and a second chirp. The
// output is n2 x n1 with du = 2 pi |sin a| / (n2 dy), dv = 2 pi |sin a| /
// (n1 dx).
ComplexField DgtDft(const ComplexField& g, Angle alpha, double tau = kDefaultTau);

// Circular chirp convolution. Output intervals equal input intervals.
ComplexField DgtCcc(const ComplexField& g, Angle alpha, double tau = kDefaultTau);

struct DispatchPolicy {
  double tau = kDefaultTau;
  // Also route every angle whose replacement is better conditioned: LCC,
  // DFT and direct when |tan a| < 1, CCC when |a| > pi / 2.
  bool fold = false;
};

struct DgtOptions {
  // Output intervals for direct and LCC; zero means the input intervals.
  double du = 0.0;
  double dv = 0.0;
  // Return the full LCC field instead of its central block.
  bool lcc_full = false;
  DispatchPolicy dispatch;
  // Basis for DHGF; the process cache is used when null.
  const HgfBasis* basis = nullptr;
};

// Total DGT: applies the exact convention at multiples of pi and the
// replacement decompositions near each method's singular angles.
ComplexField Dgt(const ComplexField& g, Angle alpha, DgtMethod method,
                 const DgtOptions& options = {});

// True when Dgt would take a replacement path for this method and angle.
bool NeedsDispatch(Angle alpha, DgtMethod method, const DispatchPolicy& policy);

}  // namespace gyrator

#endif  // GYRATOR_TRANSFORMS_H_
