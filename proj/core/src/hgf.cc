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

#include "gyrator/hgf.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gyrator/error.h"
#include "parallel.h"

namespace gyrator {

namespace {

using RowMatXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMatXcd =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// d-matrices at pi/2 for every n = 2J up to some maximum, built by one pass
// of the Risbo recursion.
using Pyramid = std::vector<std::vector<double>>;

Pyramid BuildPyramid(int nmax, double beta) {
  const double p = std::cos(beta / 2), q = std::sin(beta / 2);
  Pyramid out;
  out.reserve(nmax + 1);
  out.push_back({1.0});
  for (int n = 1; n <= nmax; ++n) {
    const std::vector<double>& prev = out.back();
    const int w = n;  // previous width
    std::vector<double> cur(static_cast<size_t>(n + 1) * (n + 1));
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        double v = 0.0;
        if (a < n && b < n) v += p * std::sqrt(double(n - a) * (n - b)) * prev[a * w + b];
        if (a > 0 && b < n) v += q * std::sqrt(double(a) * (n - b)) * prev[(a - 1) * w + b];
        if (a < n && b > 0) v -= q * std::sqrt(double(n - a) * b) * prev[a * w + b - 1];
        if (a > 0 && b > 0) v += p * std::sqrt(double(a) * b) * prev[(a - 1) * w + b - 1];
        cur[a * (n + 1) + b] = v / n;
      }
    }
    out.push_back(std::move(cur));
  }
  return out;
}

std::shared_ptr<const Pyramid> HalfPiPyramid(int nmax) {
  static std::mutex mu;
  static std::shared_ptr<const Pyramid> cached;
  std::lock_guard<std::mutex> lock(mu);
  if (!cached || static_cast<int>(cached->size()) <= nmax) {
    cached = std::make_shared<const Pyramid>(BuildPyramid(nmax, M_PI / 2));
  }
  return cached;
}

// Width of shell L for an n-point basis, and the first row index it uses.
void ShellGeometry(int n, int shell, int* two_j, int* base) {
  if (shell < n) {
    *two_j = shell;
    *base = 0;
  } else {
    *two_j = 2 * (n - 1) - shell;
    *base = shell - n + 1;
  }
}

RowMatXd BasisMatrix(const HgfBasis& basis) {
  return Eigen::Map<const RowMatXd>(basis.matrix().data(), basis.n(), basis.n());
}

void CheckSquare(const ComplexField& g, const HgfBasis& basis) {
  if (g.n1() != g.n2()) {
    Fail(ErrorKind::kShape, "input must be square; zero-pad explicitly");
  }
  if (g.n1() != basis.n()) {
    Fail(ErrorKind::kShape, "input size " + std::to_string(g.n1()) +
                                " does not match basis size " +
                                std::to_string(basis.n()));
  }
}

// Computes H^T g H (forward) or H g H^T (inverse) on a complex field.
RowMatXcd Sandwich(const RowMatXd& h, const RowMatXcd& g, bool forward) {
  RowMatXd re = g.real(), im = g.imag();
  RowMatXd r2, i2;
  if (forward) {
    r2.noalias() = h.transpose() * re * h;
    i2.noalias() = h.transpose() * im * h;
  } else {
    r2.noalias() = h * re * h.transpose();
    i2.noalias() = h * im * h.transpose();
  }
  RowMatXcd out(g.rows(), g.cols());
  out.real() = r2;
  out.imag() = i2;
  return out;
}

RowMatXcd ToMatrix(const ComplexField& g) {
  return Eigen::Map<const RowMatXcd>(g.ptr(), g.n1(), g.n2());
}

ComplexField FromMatrix(const RowMatXcd& m, double dx, double dy) {
  ComplexField out(static_cast<int>(m.rows()), static_cast<int>(m.cols()), dx, dy);
  Eigen::Map<RowMatXcd>(out.ptr(), m.rows(), m.cols()) = m;
  return out;
}

double LogFactorial(int n) { return std::lgamma(n + 1.0); }

double SmallDFactorialSum(int two_j, int two_m1, int two_m2, double beta) {
  const int jpm1 = (two_j + two_m1) / 2, jmm1 = (two_j - two_m1) / 2;
  const int jpm2 = (two_j + two_m2) / 2, jmm2 = (two_j - two_m2) / 2;
  const int dm = (two_m1 - two_m2) / 2;
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  const double pre = 0.5 * (LogFactorial(jpm1) + LogFactorial(jmm1) +
                            LogFactorial(jpm2) + LogFactorial(jmm2));
  double sum = 0.0;
  for (int k = std::max(0, -dm); k <= std::min(jpm2, jmm1); ++k) {
    const double logc = pre - LogFactorial(jpm2 - k) - LogFactorial(k) -
                        LogFactorial(dm + k) - LogFactorial(jmm1 - k);
    const double sign = ((dm + k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::exp(logc) * std::pow(c, two_j - dm - 2 * k) *
           std::pow(s, dm + 2 * k);
  }
  return sum;
}

}  // namespace

HgfBasis::HgfBasis(int n, std::vector<double> columns)
    : n_(n), h_(std::move(columns)) {
  if (h_.size() != static_cast<size_t>(n) * n) {
    Fail(ErrorKind::kShape, "basis storage must be n x n");
  }
}

double HgfBasis::interval() const { return std::sqrt(2.0 * M_PI / n_); }

double HermiteFunction(int k, double x) {
  if (k < 0) Fail(ErrorKind::kRange, "order must be nonnegative");
  // Normalized recurrence with a running log scale to avoid overflow.
  double prev = 0.0, cur = 1.0, log_scale = 0.0;
  for (int i = 0; i < k; ++i) {
    double next = std::sqrt(2.0 / (i + 1)) * x * cur -
                  std::sqrt(static_cast<double>(i) / (i + 1)) * prev;
    prev = cur;
    cur = next;
    double a = std::abs(cur);
    if (a > 1e150) {
      prev /= a;
      cur /= a;
      log_scale += std::log(a);
    }
  }
  return std::pow(M_PI, -0.25) * cur * std::exp(-0.5 * x * x + log_scale);
}

std::vector<double> SampledHgf(int k, int n, double interval) {
  std::vector<double> v(n);
  double norm = 0.0;
  for (int m = 0; m < n; ++m) {
    v[m] = HermiteFunction(k, (m - 0.5 * (n - 1)) * interval);
    norm += v[m] * v[m];
  }
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
  return v;
}

HgfBasis DiscreteHgfBasis(int n) {
  if (n < 2) Fail(ErrorKind::kRange, "basis size must be at least 2");
  RowMatXd s = RowMatXd::Zero(n, n);
  const double c = 0.5 * (n - 1);
  for (int m = 0; m < n; ++m) {
    s(m, m) = 2.0 * std::cos(2.0 * M_PI * (m - c) / n) - 4.0;
    if (m + 1 < n) s(m, m + 1) = s(m + 1, m) = 1.0;
  }
  const double corner = (n - 1) % 2 == 0 ? 1.0 : -1.0;
  s(0, n - 1) = s(n - 1, 0) = corner;

  // Reflection-symmetric and antisymmetric subspaces.
  const int ne = (n + 1) / 2, no = n / 2;
  RowMatXd e = RowMatXd::Zero(n, ne), o = RowMatXd::Zero(n, no);
  const double r = std::sqrt(0.5);
  for (int i = 0; i < ne; ++i) {
    int j = n - 1 - i;
    if (i == j) {
      e(i, i) = 1.0;
    } else {
      e(i, i) = e(j, i) = r;
      o(i, i) = r;
      o(j, i) = -r;
    }
  }
  RowMatXd h(n, n);
  auto fill = [&](const RowMatXd& sub, int first_order) {
    if (sub.cols() == 0) return;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub.transpose() * s * sub);
    if (solver.info() != Eigen::Success) {
      Fail(ErrorKind::kNumerical, "eigen-solver failed for basis size " +
                                      std::to_string(n));
    }
    const Eigen::MatrixXd vecs = sub * solver.eigenvectors();
    const int count = static_cast<int>(sub.cols());
    for (int i = 0; i < count; ++i) {
      // Largest eigenvalue first gives the lowest order.
      h.col(first_order + 2 * i) = vecs.col(count - 1 - i);
    }
  };
  fill(e, 0);
  fill(o, 1);

  // Column k spans part of the DFT eigenspace of (-j)^k. Inside each of the
  // four eigenspaces, replace the commuting-matrix vectors by the sampled
  // HGFs projected onto the space and orthonormalized in order of k.
  const double interval = std::sqrt(2.0 * M_PI / n);
  for (int r = 0; r < 4 && r < n; ++r) {
    const int count = (n - 1 - r) / 4 + 1;
    Eigen::MatrixXd space(n, count), coeff(count, count);
    for (int i = 0; i < count; ++i) space.col(i) = h.col(r + 4 * i);
    for (int i = 0; i < count; ++i) {
      const std::vector<double> sk = SampledHgf(r + 4 * i, n, interval);
      const Eigen::Map<const Eigen::VectorXd> v(sk.data(), n);
      coeff.col(i) = space.transpose() * v;
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(coeff);
    const Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd& packed = qr.matrixQR();
    for (int i = 0; i < count; ++i) {
      const double sign = packed(i, i) < 0.0 ? -1.0 : 1.0;
      h.col(r + 4 * i) = sign * (space * q.col(i));
    }
  }

  for (int k = 0; k < n; ++k) {
    double dot = 0.0;
    for (int m = 0; m < n; ++m) {
      dot += h(m, k) * HermiteFunction(k, (m - c) * interval);
    }
    if (dot < 0.0) h.col(k) *= -1.0;
  }
  std::vector<double> data(h.data(), h.data() + static_cast<size_t>(n) * n);
  return HgfBasis(n, std::move(data));
}

std::shared_ptr<const HgfBasis> CachedHgfBasis(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const HgfBasis>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const HgfBasis>(DiscreteHgfBasis(n));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, basis).first->second;
}

ComplexField Hgf2(int k, int l, const HgfBasis& basis) {
  const int n = basis.n();
  if (k < 0 || l < 0 || k >= n || l >= n) {
    Fail(ErrorKind::kRange, "orders must lie in [0, N)");
  }
  ComplexField out(n, n, basis.interval(), basis.interval());
  for (int m = 0; m < n; ++m) {
    for (int q = 0; q < n; ++q) out.at(m, q) = basis(m, k) * basis(q, l);
  }
  return out;
}

double WignerSmallD(int two_j, int two_m1, int two_m2, double beta) {
  if (two_j < 0 || std::abs(two_m1) > two_j || std::abs(two_m2) > two_j ||
      (two_j - two_m1) % 2 != 0 || (two_j - two_m2) % 2 != 0) {
    Fail(ErrorKind::kRange, "invalid (J, M1, M2) combination");
  }
  if (two_j <= 24) return SmallDFactorialSum(two_j, two_m1, two_m2, beta);
  // The alternating sum loses all precision for large J.
  const std::vector<double> d = WignerSmallDMatrix(two_j, beta);
  const int a = (two_j - two_m1) / 2, b = (two_j - two_m2) / 2;
  return d[static_cast<size_t>(a) * (two_j + 1) + b];
}

std::vector<double> WignerSmallDMatrix(int two_j, double beta) {
  if (two_j < 0) Fail(ErrorKind::kRange, "J must be nonnegative");
  if (beta == M_PI / 2) return (*HalfPiPyramid(two_j))[two_j];
  return BuildPyramid(two_j, beta).back();
}

Complex WignerBigD(int two_j, int two_m1, int two_m2, double chi, double beta,
                   double gamma) {
  const double d = WignerSmallD(two_j, two_m1, two_m2, beta);
  return std::polar(1.0, -0.5 * two_m1 * chi) * d *
         std::polar(1.0, -0.5 * two_m2 * gamma);
}

ComplexField Rhgf(int k, int l, const HgfBasis& basis) {
  const int n = basis.n();
  if (k < 0 || l < 0 || k >= n || l >= n) {
    Fail(ErrorKind::kRange, "orders must lie in [0, N)");
  }
  const int shell = k + l;
  int two_j, base;
  ShellGeometry(n, shell, &two_j, &base);
  auto pyramid = HalfPiPyramid(two_j);
  const std::vector<double>& d = (*pyramid)[two_j];
  const int a = k - base;
  ComplexField out(n, n, basis.interval(), basis.interval());
  for (int i = 0; i <= two_j; ++i) {
    const double w = d[static_cast<size_t>(a) * (two_j + 1) + i];
    const int r = base + i, c = shell - r;
    for (int m = 0; m < n; ++m) {
      const double hm = w * basis(m, r);
      for (int q = 0; q < n; ++q) out.at(m, q) += hm * basis(q, c);
    }
  }
  return out;
}

ComplexField SampledRhgf(int k, int l, int n1, int n2, double dx, double dy,
                         bool half_sample) {
  if (k < 0 || l < 0) Fail(ErrorKind::kRange, "orders must be nonnegative");
  const int shell = k + l;
  auto pyramid = HalfPiPyramid(shell);
  const std::vector<double>& d = (*pyramid)[shell];
  const double c1 = half_sample ? 0.5 * (n1 - 1) : n1 / 2;
  const double c2 = half_sample ? 0.5 * (n2 - 1) : n2 / 2;
  std::vector<std::vector<double>> hx(shell + 1), hy(shell + 1);
  for (int i = 0; i <= shell; ++i) {
    hx[i].resize(n1);
    hy[i].resize(n2);
    for (int m = 0; m < n1; ++m) hx[i][m] = HermiteFunction(i, (m - c1) * dx);
    for (int q = 0; q < n2; ++q) hy[i][q] = HermiteFunction(i, (q - c2) * dy);
  }
  ComplexField out(n1, n2, dx, dy);
  for (int i = 0; i <= shell; ++i) {
    const double w = d[static_cast<size_t>(k) * (shell + 1) + i];
    for (int m = 0; m < n1; ++m) {
      const double hm = w * hx[i][m];
      for (int q = 0; q < n2; ++q) out.at(m, q) += hm * hy[shell - i][q];
    }
  }
  return out;
}

int WignerShellSet::size(int shell) const {
  int two_j, base;
  ShellGeometry(n, shell, &two_j, &base);
  return two_j + 1;
}

WignerShellSet BuildShellMatrices(int n, Angle alpha) {
  if (n < 1) Fail(ErrorKind::kRange, "basis size must be positive");
  WignerShellSet set;
  set.n = n;
  set.alpha = alpha.rad();
  set.shells.resize(2 * n - 1);
  auto pyramid = HalfPiPyramid(n - 1);
  internal::ParallelFor(
      2 * n - 1,
      [&](int begin, int end) {
        for (int shell = begin; shell < end; ++shell) {
          int two_j, base;
          ShellGeometry(n, shell, &two_j, &base);
          const int w = two_j + 1;
          Eigen::Map<const RowMatXd> d((*pyramid)[two_j].data(), w, w);
          Eigen::VectorXd cs(w), sn(w);
          for (int a = 0; a < w; ++a) {
            const double phase = (two_j - 2 * a) * alpha.rad();
            cs(a) = std::cos(phase);
            sn(a) = std::sin(phase);
          }
          RowMatXd re = d.transpose() * cs.asDiagonal() * d;
          RowMatXd im = d.transpose() * sn.asDiagonal() * d;
          std::vector<Complex>& out = set.shells[shell];
          out.resize(static_cast<size_t>(w) * w);
          for (int i = 0; i < w * w; ++i) {
            out[i] = Complex(re.data()[i], im.data()[i]);
          }
        }
      },
      4);
  return set;
}

ComplexField DgtDhgfDirect(const ComplexField& g, Angle alpha,
                           const HgfBasis& basis) {
  CheckSquare(g, basis);
  const int n = basis.n();
  const int nn = n * n;
  Eigen::MatrixXd r(nn, nn);
  Eigen::VectorXcd phase(nn);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const ComplexField f = Rhgf(k, l, basis);
      const int col = k * n + l;
      for (int i = 0; i < nn; ++i) r(i, col) = f.data()[i].real();
      phase(col) = std::polar(1.0, -alpha.rad() * (k - l));
    }
  }
  Eigen::Map<const Eigen::VectorXcd> gv(g.ptr(), nn);
  Eigen::VectorXcd coeff = r.transpose().cast<Complex>() * gv;
  Eigen::VectorXcd out = r.cast<Complex>() * phase.cwiseProduct(coeff);
  ComplexField result(n, n, g.dx(), g.dy());
  for (int i = 0; i < nn; ++i) result.data()[i] = out(i);
  return result;
}

ComplexField DgtDhgfFast(const ComplexField& g, Angle alpha,
                         const HgfBasis& basis, const WignerShellSet& shells) {
  CheckSquare(g, basis);
  const int n = basis.n();
  if (shells.n != n || static_cast<int>(shells.shells.size()) != 2 * n - 1 ||
      std::abs(std::remainder(shells.alpha - alpha.rad(), 2 * M_PI)) > 1e-12) {
    Fail(ErrorKind::kConfig, "shell set was built for a different size or angle");
  }
  const RowMatXd h = BasisMatrix(basis);
  RowMatXcd gt = Sandwich(h, ToMatrix(g), true);
  RowMatXcd mixed(n, n);
  std::vector<Complex> v, w;
  for (int shell = 0; shell < 2 * n - 1; ++shell) {
    int two_j, base;
    ShellGeometry(n, shell, &two_j, &base);
    const int sz = two_j + 1;
    v.assign(sz, Complex());
    w.assign(sz, Complex());
    for (int i = 0; i < sz; ++i) v[i] = gt(base + i, shell - base - i);
    const std::vector<Complex>& d = shells.shells[shell];
    for (int i = 0; i < sz; ++i) {
      Complex acc;
      for (int j = 0; j < sz; ++j) acc += d[static_cast<size_t>(i) * sz + j] * v[j];
      w[i] = acc;
    }
    for (int i = 0; i < sz; ++i) mixed(base + i, shell - base - i) = w[i];
  }
  return FromMatrix(Sandwich(h, mixed, false), g.dx(), g.dy());
}

ComplexField DgtDhgf(const ComplexField& g, Angle alpha, const HgfBasis& basis) {
  CheckSquare(g, basis);
  const int n = basis.n();
  const RowMatXd h = BasisMatrix(basis);
  RowMatXcd gt = Sandwich(h, ToMatrix(g), true);
  RowMatXcd mixed(n, n);
  auto pyramid = HalfPiPyramid(n - 1);
  internal::ParallelFor(
      2 * n - 1,
      [&](int begin, int end) {
        for (int shell = begin; shell < end; ++shell) {
          int two_j, base;
          ShellGeometry(n, shell, &two_j, &base);
          const int sz = two_j + 1;
          Eigen::Map<const RowMatXd> d((*pyramid)[two_j].data(), sz, sz);
          Eigen::VectorXcd v(sz);
          for (int i = 0; i < sz; ++i) v(i) = gt(base + i, shell - base - i);
          Eigen::VectorXcd t(sz);
          t.real() = d * v.real();
          t.imag() = d * v.imag();
          for (int a = 0; a < sz; ++a) {
            t(a) *= std::polar(1.0, (two_j - 2 * a) * alpha.rad());
          }
          Eigen::VectorXcd w(sz);
          w.real() = d.transpose() * t.real();
          w.imag() = d.transpose() * t.imag();
          for (int i = 0; i < sz; ++i) mixed(base + i, shell - base - i) = w(i);
        }
      },
      16);
  return FromMatrix(Sandwich(h, mixed, false), g.dx(), g.dy());
}

ComplexField Dfrft2Separable(const ComplexField& g, Angle ax, Angle ay,
                             const HgfBasis& basis) {
  CheckSquare(g, basis);
  const int n = basis.n();
  const RowMatXd h = BasisMatrix(basis);
  auto kernel = [&](Angle a) {
    Eigen::VectorXcd ph(n);
    for (int k = 0; k < n; ++k) ph(k) = std::polar(1.0, -k * a.rad());
    RowMatXcd f = h.cast<Complex>() * ph.asDiagonal() * h.transpose().cast<Complex>();
    return f;
  };
  const RowMatXcd fx = kernel(ax), fy = kernel(ay);
  RowMatXcd out = fx * ToMatrix(g) * fy.transpose();
  return FromMatrix(out, g.dx(), g.dy());
}

}  // namespace gyrator
