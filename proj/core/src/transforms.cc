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

#include "gyrator/transforms.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fft.h"
#include "gyrator/error.h"
#include "gyrator/spectral.h"
#include "parallel.h"

namespace gyrator {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Shared guard for methods singular at every multiple of pi. Returns true
// when the exact convention applies and writes the result.
bool ExactKPi(const ComplexField& g, Angle alpha, double tau, const char* name,
              ComplexField* out) {
  if (alpha.is_zero()) {
    *out = g;
    return true;
  }
  if (alpha.is_pi()) {
    *out = Reflect(g);
    return true;
  }
  if (alpha.near_kpi(tau)) {
    Fail(ErrorKind::kSingularAngle,
         std::string(name) + " is singular near multiples of 180 degrees (" +
             std::to_string(alpha.deg()) + "); use the dispatching Dgt entry");
  }
  return false;
}

void Multiply(ComplexField& g, const ComplexField& chirp) {
  for (size_t i = 0; i < g.size(); ++i) g.data()[i] *= chirp.data()[i];
}

// Minimum |DFT| of the 1D chirp kernel exp(j c a^2 / 2), a in [-(n-1), n-1],
// zero-padded to length p with tap a stored at a + n - 1.
double KernelFloor(double c, int n, int p, std::vector<Complex>* spectrum) {
  std::vector<Complex> k(p);
  for (int a = -(n - 1); a <= n - 1; ++a) k[a + n - 1] = std::polar(1.0, 0.5 * c * a * a);
  internal::Fft(k, -1);
  double lo = INFINITY;
  for (const Complex& v : k) lo = std::min(lo, std::abs(v));
  if (spectrum) *spectrum = std::move(k);
  return lo;
}

// Pads to the length in [3n - 2, 2 (3n - 2)] whose kernel spectrum has the
// largest minimum magnitude.
int BestDeconvolutionLength(double c, int n) {
  const int lo = 3 * n - 2;
  int best = internal::NextSmoothSize(lo);
  double best_floor = -1.0;
  for (int p = best; p <= 2 * lo; p = internal::NextSmoothSize(p + 1)) {
    double f = KernelFloor(c, n, p, nullptr);
    if (f > best_floor) {
      best_floor = f;
      best = p;
    }
  }
  return best;
}

void Fft1dAxis(std::vector<Complex>& buf, int rows, int cols, int axis,
               const std::vector<Complex>& divisor) {
  if (axis == 1) {
    internal::ParallelFor(rows, [&](int b, int e) {
      std::vector<Complex> row(cols);
      for (int r = b; r < e; ++r) {
        Complex* p = buf.data() + static_cast<size_t>(r) * cols;
        std::copy_n(p, cols, row.begin());
        internal::Fft(row, -1);
        for (int c = 0; c < cols; ++c) row[c] /= divisor[c];
        internal::Fft(row, +1);
        for (int c = 0; c < cols; ++c) p[c] = row[c] / static_cast<double>(cols);
      }
    });
  } else {
    internal::ParallelFor(cols, [&](int b, int e) {
      std::vector<Complex> col(rows);
      for (int c = b; c < e; ++c) {
        for (int r = 0; r < rows; ++r) col[r] = buf[static_cast<size_t>(r) * cols + c];
        internal::Fft(col, -1);
        for (int r = 0; r < rows; ++r) col[r] /= divisor[r];
        internal::Fft(col, +1);
        for (int r = 0; r < rows; ++r) {
          buf[static_cast<size_t>(r) * cols + c] = col[r] / static_cast<double>(rows);
        }
      }
    });
  }
}

}  // namespace

const char* MethodName(DgtMethod method) {
  switch (method) {
    case DgtMethod::kDirect:
      return "direct";
    case DgtMethod::kLcc:
      return "lcc";
    case DgtMethod::kDft:
      return "dft";
    case DgtMethod::kCcc:
      return "ccc";
    case DgtMethod::kDhgf:
      return "dhgf";
  }
  return "unknown";
}

DgtMethod ParseMethod(const std::string& name) {
  for (DgtMethod m : {DgtMethod::kDirect, DgtMethod::kLcc, DgtMethod::kDft,
                      DgtMethod::kCcc, DgtMethod::kDhgf}) {
    if (name == MethodName(m)) return m;
  }
  Fail(ErrorKind::kUsage, "unknown method '" + name + "'");
}

ComplexField DgtDirect(const ComplexField& g, Angle alpha, double du, double dv,
                       int out_n1, int out_n2, double tau) {
  ComplexField exact;
  if (ExactKPi(g, alpha, tau, "direct summation", &exact)) return exact;
  if (out_n1 <= 0) out_n1 = g.n2();
  if (out_n2 <= 0) out_n2 = g.n1();
  const double s = std::sin(alpha.rad()), c = std::cos(alpha.rad());
  const double csc = 1.0 / s, cot = c / s;
  const double dx = g.dx(), dy = g.dy();
  const double scale = std::abs(csc) * dx * dy / kTwoPi;
  ComplexField out(out_n1, out_n2, du, dv);
  const int o1 = g.m_offset(), o2 = g.n_offset();
  const int op = out.m_offset(), oq = out.n_offset();
  internal::ParallelFor(out_n1, [&](int begin, int end) {
    for (int pi = begin; pi < end; ++pi) {
      const double p = pi - op;
      for (int qi = 0; qi < out_n2; ++qi) {
        const double q = qi - oq;
        Complex acc;
        for (int mi = 0; mi < g.n1(); ++mi) {
          const double m = mi - o1;
          for (int ni = 0; ni < g.n2(); ++ni) {
            const double n = ni - o2;
            const double phase = (p * q * du * dv + m * n * dx * dy) * cot -
                                 (p * n * du * dy + q * m * dv * dx) * csc;
            acc += std::polar(1.0, phase) * g.at(mi, ni);
          }
        }
        out.at(pi, qi) = scale * acc;
      }
    }
  }, 1);
  return out;
}

ComplexField DgtLcc(const ComplexField& g, Angle alpha, double du, double dv,
                    double tau) {
  const int n1 = g.n1(), n2 = g.n2();
  ComplexField exact;
  if (ExactKPi(g, alpha, tau, "DGT-LCC", &exact)) {
    ComplexField full = PadCentered(exact, 3 * exact.n1() - 2, 3 * exact.n2() - 2);
    return full;
  }
  const double s = std::sin(alpha.rad()), c = std::cos(alpha.rad());
  const double csc = 1.0 / s, cot = c / s;
  const double dx = g.dx(), dy = g.dy();

  ComplexField g1 = g;
  Multiply(g1, ChirpGrid(-0.5 * dv * dx * csc, -0.5 * du * dy * csc, dx * dy * cot,
                         n1, n2));
  const ComplexField kernel =
      ChirpGrid(0.5 * dv * dx * csc, 0.5 * du * dy * csc, 0.0, 2 * n1 - 1, 2 * n2 - 1);
  ComplexField g2 = LinearConvolve2(g1, kernel);
  const double scale = std::abs(csc) * dx * dy / kTwoPi;
  for (Complex& v : g2.data()) v *= scale;
  ComplexField out = Transpose(g2);
  Multiply(out, ChirpGrid(-0.5 * du * dy * csc, -0.5 * dv * dx * csc, du * dv * cot,
                          out.n1(), out.n2()));
  out.set_intervals(du, dv);
  return out;
}

ComplexField LccCentral(const ComplexField& full) {
  if ((full.n1() + 2) % 3 != 0 || (full.n2() + 2) % 3 != 0) {
    Fail(ErrorKind::kShape, "field is not a full extended LCC output");
  }
  return CentralBlock(full, (full.n1() + 2) / 3, (full.n2() + 2) / 3);
}

ComplexField DgtLccInverse(const ComplexField& full, Angle alpha, int n1,
                           int n2, double dx, double dy, double tau) {
  if (full.n1() != 3 * n2 - 2 || full.n2() != 3 * n1 - 2) {
    Fail(ErrorKind::kInsufficientData,
         "the full (3N-2) extended output is required for inversion");
  }
  if (alpha.is_exact_kpi()) {
    ComplexField center = LccCentral(full);
    ComplexField g = alpha.is_zero() ? center : Reflect(center);
    g.set_intervals(dx, dy);
    return g;
  }
  if (alpha.near_kpi(tau)) {
    Fail(ErrorKind::kSingularAngle, "DGT-LCC inverse is singular near multiples of 180 degrees");
  }
  const double s = std::sin(alpha.rad()), c = std::cos(alpha.rad());
  const double csc = 1.0 / s, cot = c / s;
  const double du = full.dx(), dv = full.dy();

  ComplexField g2 = full;
  Multiply(g2, Conj(ChirpGrid(-0.5 * du * dy * csc, -0.5 * dv * dx * csc,
                              du * dv * cot, g2.n1(), g2.n2())));
  g2 = Transpose(g2);  // (3 n1 - 2) x (3 n2 - 2)
  const double scale = std::abs(csc) * dx * dy / kTwoPi;

  const double c1 = dv * dx * csc, c2 = du * dy * csc;
  const int p1 = BestDeconvolutionLength(c1, n1);
  const int p2 = BestDeconvolutionLength(c2, n2);
  std::vector<Complex> k1, k2;
  double f1 = KernelFloor(c1, n1, p1, &k1), f2 = KernelFloor(c2, n2, p2, &k2);
  double m1 = 0, m2 = 0;
  for (const Complex& v : k1) m1 = std::max(m1, std::abs(v));
  for (const Complex& v : k2) m2 = std::max(m2, std::abs(v));
  if (f1 < 1e-12 * m1 || f2 < 1e-12 * m2) {
    Fail(ErrorKind::kConditioning, "chirp kernel spectrum has near-zero bins");
  }
  std::vector<Complex> buf(static_cast<size_t>(p1) * p2);
  for (int m = 0; m < g2.n1(); ++m) {
    for (int n = 0; n < g2.n2(); ++n) {
      buf[static_cast<size_t>(m) * p2 + n] = g2.at(m, n) / scale;
    }
  }
  // Output index t = m_c + a sits at m + (a + n - 1), so plain circular
  // deconvolution returns the input at indices [0, n).
  Fft1dAxis(buf, p1, p2, 1, k2);
  Fft1dAxis(buf, p1, p2, 0, k1);
  ComplexField g1(n1, n2, dx, dy);
  for (int m = 0; m < n1; ++m) {
    for (int n = 0; n < n2; ++n) g1.at(m, n) = buf[static_cast<size_t>(m) * p2 + n];
  }
  Multiply(g1, Conj(ChirpGrid(-0.5 * dv * dx * csc, -0.5 * du * dy * csc,
                              dx * dy * cot, n1, n2)));
  return g1;
}

ComplexField DgtDft(const ComplexField& g, Angle alpha, double tau) {
  ComplexField exact;
  if (ExactKPi(g, alpha, tau, "DGT-DFT", &exact)) return exact;
  const int n1 = g.n1(), n2 = g.n2();
  const double s = std::sin(alpha.rad()), c = std::cos(alpha.rad());
  const double cot = c / s;
  const double dx = g.dx(), dy = g.dy();
  const double du = kTwoPi * std::abs(s) / (n2 * dy);
  const double dv = kTwoPi * std::abs(s) / (n1 * dx);

  ComplexField g1 = g;
  Multiply(g1, ChirpGrid(0.0, 0.0, dx * dy * cot, n1, n2));
  ComplexField f = CenteredDft2(g1, s > 0 ? -1 : 1);
  ComplexField out = Transpose(f);
  const ComplexField chirp = ChirpGrid(0.0, 0.0, du * dv * cot, n2, n1);
  const double scale = dx * dy / kTwoPi / std::abs(s);
  for (size_t i = 0; i < out.size(); ++i) {
    out.data()[i] *= scale * chirp.data()[i];
  }
  out.set_intervals(du, dv);
  return out;
}

ComplexField DgtCcc(const ComplexField& g, Angle alpha, double tau) {
  if (alpha.is_pi()) return Reflect(g);
  if (alpha.near_odd_pi(tau)) {
    Fail(ErrorKind::kSingularAngle,
         "DGT-CCC is singular near odd multiples of 180 degrees (" +
             std::to_string(alpha.deg()) + "); use the dispatching Dgt entry");
  }
  const int n1 = g.n1(), n2 = g.n2();
  const double t = std::tan(alpha.rad() / 2), s = std::sin(alpha.rad());
  const double dx = g.dx(), dy = g.dy();
  const double dxp = kTwoPi / (n1 * dx), dyp = kTwoPi / (n2 * dy);
  const ComplexField chirp = ChirpGrid(0.0, 0.0, -dx * dy * t, n1, n2);

  ComplexField g1 = g;
  Multiply(g1, chirp);
  ComplexField f = CenteredDft2(g1, -1);
  Multiply(f, ChirpGrid(0.0, 0.0, -dxp * dyp * s, n1, n2));
  ComplexField out = CenteredDft2(f, +1);
  const double scale = 1.0 / (static_cast<double>(n1) * n2);
  for (size_t i = 0; i < out.size(); ++i) out.data()[i] *= scale * chirp.data()[i];
  out.set_intervals(dx, dy);
  return out;
}

bool NeedsDispatch(Angle alpha, DgtMethod method, const DispatchPolicy& policy) {
  if (alpha.is_exact_kpi()) return false;
  const double a = alpha.rad();
  switch (method) {
    case DgtMethod::kDirect:
    case DgtMethod::kLcc:
    case DgtMethod::kDft:
      return alpha.near_kpi(policy.tau) ||
             (policy.fold && std::abs(std::sin(a)) < std::abs(std::cos(a)));
    case DgtMethod::kCcc:
      return alpha.near_odd_pi(policy.tau) ||
             (policy.fold && std::abs(a) > M_PI / 2);
    case DgtMethod::kDhgf:
      return false;
  }
  return false;
}

ComplexField Dgt(const ComplexField& g, Angle alpha, DgtMethod method,
                 const DgtOptions& options) {
  if (method == DgtMethod::kDft && (options.du != 0.0 || options.dv != 0.0)) {
    Fail(ErrorKind::kUsage,
         "DGT-DFT fixes its output intervals: du*dy = 2pi|sin a|/n2 and "
         "dv*dx = 2pi|sin a|/n1");
  }
  if (method == DgtMethod::kDhgf) {
    if (alpha.is_zero()) return g;
    if (alpha.is_pi()) {
      // Reflection about the half-sample center.
      ComplexField out = g;
      std::reverse(out.data().begin(), out.data().end());
      return out;
    }
    if (options.basis) return DgtDhgf(g, alpha, *options.basis);
    return DgtDhgf(g, alpha, *CachedHgfBasis(g.n1()));
  }
  if (alpha.is_exact_kpi()) {
    ComplexField out = alpha.is_zero() ? g : Reflect(g);
    if (method == DgtMethod::kLcc && options.lcc_full) {
      out = PadCentered(out, 3 * out.n1() - 2, 3 * out.n2() - 2);
    }
    return out;
  }
  const double tau = options.dispatch.tau;
  if (NeedsDispatch(alpha, method, options.dispatch)) {
    if (method == DgtMethod::kCcc) {
      return DgtCcc(Reflect(g), alpha - Angle::Radians(M_PI), tau);
    }
    // DGT_a = DGT_{a - pi/2} applied to the swapped centered DFT.
    ComplexField h = Transpose(CenteredDft2(g, -1));
    const double scale = g.dx() * g.dy() / kTwoPi;
    for (Complex& v : h.data()) v *= scale;
    h.set_intervals(kTwoPi / (g.n2() * g.dy()), kTwoPi / (g.n1() * g.dx()));
    DgtOptions inner = options;
    inner.dispatch.fold = false;
    inner.dispatch.tau = 0.0;
    return Dgt(h, alpha - Angle::Radians(M_PI / 2), method, inner);
  }
  const double du = options.du != 0.0 ? options.du : g.dx();
  const double dv = options.dv != 0.0 ? options.dv : g.dy();
  switch (method) {
    case DgtMethod::kDirect:
      return DgtDirect(g, alpha, du, dv, 0, 0, tau);
    case DgtMethod::kLcc: {
      ComplexField full = DgtLcc(g, alpha, du, dv, tau);
      return options.lcc_full ? full : LccCentral(full);
    }
    case DgtMethod::kDft:
      return DgtDft(g, alpha, tau);
    case DgtMethod::kCcc:
      return DgtCcc(g, alpha, tau);
    case DgtMethod::kDhgf:
      break;
  }
  return g;
}

}  // namespace gyrator
