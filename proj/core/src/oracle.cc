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

#include "gyrator/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gyrator/error.h"
#include "gyrator/hgf.h"

namespace gyrator {

namespace {

double Coord(int i, int n, double d, bool half) {
  return (half ? i - 0.5 * (n - 1) : static_cast<double>(i - n / 2)) * d;
}

}  // namespace

Grid GridOf(const ComplexField& f, bool half_sample) {
  return Grid{f.n1(), f.n2(), f.dx(), f.dy(), half_sample};
}

ComplexField ScaledGaussian(double s, const Grid& grid) {
  if (!(s > 0.0)) Fail(ErrorKind::kRange, "scale s must be positive");
  ComplexField out(grid.n1, grid.n2, grid.dx, grid.dy);
  for (int m = 0; m < grid.n1; ++m) {
    const double x = Coord(m, grid.n1, grid.dx, grid.half_sample);
    for (int n = 0; n < grid.n2; ++n) {
      const double y = Coord(n, grid.n2, grid.dy, grid.half_sample);
      out.at(m, n) = std::exp(-0.5 * s * (x * x + y * y));
    }
  }
  return out;
}

ComplexField GaussianGyratorClosedForm(double s, Angle alpha, const Grid& grid) {
  if (!(s > 0.0)) Fail(ErrorKind::kRange, "scale s must be positive");
  const double c = std::cos(alpha.rad()), sn = std::sin(alpha.rad());
  const double den = c * c + s * s * sn * sn;
  const double amp = 1.0 / std::sqrt(den);
  const double rate = s / den;
  const double chirp = (s * s - 1.0) * std::sin(2.0 * alpha.rad()) / den;
  ComplexField out(grid.n1, grid.n2, grid.dx, grid.dy);
  for (int p = 0; p < grid.n1; ++p) {
    const double u = Coord(p, grid.n1, grid.dx, grid.half_sample);
    for (int q = 0; q < grid.n2; ++q) {
      const double v = Coord(q, grid.n2, grid.dy, grid.half_sample);
      out.at(p, q) = amp * std::exp(-0.5 * rate * (u * u + v * v)) *
                     std::polar(1.0, 0.5 * chirp * u * v);
    }
  }
  return out;
}

DispatchPolicy SweepDispatchPolicy() {
  DispatchPolicy p;
  p.fold = true;
  return p;
}

std::vector<SweepRow> AccuracySweep(DgtMethod method, const SweepInput& input,
                                    const std::vector<double>& alphas_deg,
                                    const DispatchPolicy& policy) {
  const int n = input.n;
  const double d = std::sqrt(2.0 * M_PI / n);
  // The discrete HGF basis is centered between samples.
  const bool half = method == DgtMethod::kDhgf;
  const Grid grid{n, n, d, d, half};
  ComplexField g;
  if (input.kind == SweepInput::Kind::kScaledGaussian) {
    g = ScaledGaussian(input.s, grid);
  } else {
    g = SampledRhgf(input.k, input.l, n, n, d, d, half);
  }
  DgtOptions options;
  options.dispatch = policy;
  std::vector<SweepRow> rows;
  rows.reserve(alphas_deg.size());
  for (double deg : alphas_deg) {
    const Angle a = Angle::Degrees(deg);
    const ComplexField out = Dgt(g, a, method, options);
    ComplexField ref;
    if (input.kind == SweepInput::Kind::kScaledGaussian) {
      ref = GaussianGyratorClosedForm(input.s, a, GridOf(out, half));
    } else {
      ref = SampledRhgf(input.k, input.l, out.n1(), out.n2(), out.dx(), out.dy(),
                        half);
      const Complex eig = std::polar(1.0, -a.rad() * (input.k - input.l));
      for (Complex& v : ref.data()) v *= eig;
    }
    rows.push_back({deg, Nrmse(ref, out), NeedsDispatch(a, method, policy)});
  }
  return rows;
}

double MultiplicationCount(DgtMethod method, int n) {
  if (n < 2) Fail(ErrorKind::kRange, "N must be at least 2");
  const uint64_t nn = static_cast<uint64_t>(n) * n;
  switch (method) {
    case DgtMethod::kLcc: {
      const double e = 3.0 * n - 2.0;
      return 8.0 * nn + 4.0 * e * e + 6.0 * e * e * std::log2(e * e);
    }
    case DgtMethod::kDft:
      return 8.0 * nn + 2.0 * nn * std::log2(static_cast<double>(nn));
    case DgtMethod::kCcc:
      return 12.0 * nn + 4.0 * nn * std::log2(static_cast<double>(nn));
    case DgtMethod::kDhgf: {
      const uint64_t n3 = nn * n;
      return static_cast<double>((32 * n3 + 4 * static_cast<uint64_t>(n)) / 3);
    }
    case DgtMethod::kDirect:
      return 4.0 * static_cast<double>(nn) * static_cast<double>(nn);
  }
  return 0.0;
}

ComplexityReport ComplexityOrderCheck(const std::vector<int>& sizes) {
  if (sizes.empty()) Fail(ErrorKind::kRange, "size list is empty");
  ComplexityReport report;
  report.ordering_holds_from_64 = true;
  for (int n : sizes) {
    ComplexityRow r;
    r.n = n;
    r.dft = MultiplicationCount(DgtMethod::kDft, n);
    r.ccc = MultiplicationCount(DgtMethod::kCcc, n);
    r.lcc = MultiplicationCount(DgtMethod::kLcc, n);
    r.dhgf = MultiplicationCount(DgtMethod::kDhgf, n);
    r.direct = MultiplicationCount(DgtMethod::kDirect, n);
    r.ordered = r.dft < r.ccc && r.ccc < r.lcc && r.lcc < r.dhgf && r.dhgf < r.direct;
    if (n >= 64 && !r.ordered) report.ordering_holds_from_64 = false;
    report.rows.push_back(r);
  }
  report.caveat =
      "DGT-DHGF needs fewer multiplications than DGT-LCC when N is not large "
      "enough; the counts cross between N = 64 and N = 128.";
  return report;
}

ComplexField ResampleCentered(const ComplexField& g, int n, double d) {
  if (n <= 0 || !(d > 0.0)) Fail(ErrorKind::kRange, "resample size and interval must be positive");
  ComplexField out(n, n, d, d);
  for (int m = 0; m < n; ++m) {
    const double sm = (m - n / 2) * d / g.dx() + g.m_offset();
    const int m0 = static_cast<int>(std::floor(sm));
    const double fm = sm - m0;
    for (int q = 0; q < n; ++q) {
      const double sq = (q - n / 2) * d / g.dy() + g.n_offset();
      const int q0 = static_cast<int>(std::floor(sq));
      const double fq = sq - q0;
      Complex v = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const int i = m0 + a, j = q0 + b;
          if (i < 0 || i >= g.n1() || j < 0 || j >= g.n2()) continue;
          v += (a ? fm : 1.0 - fm) * (b ? fq : 1.0 - fq) * g.at(i, j);
        }
      }
      out.at(m, q) = v;
    }
  }
  return out;
}

double CccAdditivityError(const ComplexField& g, Angle a1, Angle a2) {
  const ComplexField two = DgtCcc(DgtCcc(g, a1), a2);
  return Nrmse(DgtCcc(g, a1 + a2), two);
}

std::vector<AdditivityRow> CccAdditivityTrend(const ComplexField& g, Angle a1, Angle a2,
                                              const std::vector<int>& sizes) {
  std::vector<AdditivityRow> rows;
  for (int n : sizes) {
    AdditivityRow row;
    row.n = n;
    row.interval = std::sqrt(M_PI / n);
    row.nrmse = CccAdditivityError(ResampleCentered(g, n, row.interval), a1, a2);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gyrator
