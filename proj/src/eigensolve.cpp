// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/eigensolve.hpp"

#include "spinsym/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace spinsym {

namespace {

// Householder reduction of the symmetric matrix held in v (row-major, n x n)
// to tridiagonal form. On return d holds the diagonal, e[1..n-1] the
// subdiagonal and v the accumulated orthogonal transformation.
void tred2(std::size_t n, std::vector<double>& v, std::vector<double>& d, std::vector<double>& e) {
  auto V = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };
  for (std::size_t j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (std::size_t k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (std::size_t k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e[1..n-1]). z, when present, holds
// one transformation column per row and is rotated along; on return row i of
// z is the eigenvector of d[i]. Eigenvalues are sorted ascending.
void tql2(std::size_t n, std::vector<double>& d, std::vector<double>& e, std::vector<std::vector<double>>* z) {
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iterations = 0;
      do {
        if (++iterations > 100) throw NonConvergence("tridiagonal QL iteration did not converge", std::abs(e[l]));
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          if (z) {
            auto& zi = (*z)[ii];
            auto& zj = (*z)[ii + 1];
            for (std::size_t k = 0; k < zi.size(); ++k) {
              const double t = zj[k];
              zj[k] = s * zi[k] + c * t;
              zi[k] = c * zi[k] - s * t;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = d[order[i]];
  d = std::move(sorted);
  if (z) {
    std::vector<std::vector<double>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = std::move((*z)[order[i]]);
    *z = std::move(rows);
  }
}

void check_dense_input(const DenseMatrix& matrix, std::size_t dense_cap) {
  if (matrix.dim() > dense_cap)
    throw ResourceLimit("dense eigensolver cap " + std::to_string(dense_cap) + " exceeded by dimension " +
                        std::to_string(matrix.dim()) + "; use the Lanczos path");
}

}  // namespace

std::vector<double> tridiagonal_eig(std::span<const double> diag, std::span<const double> off,
                                    std::vector<std::vector<double>>* vectors) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (off.size() + 1 != n) throw InvalidInput("tridiagonal off-diagonal has the wrong length");
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) e[i] = off[i - 1];
  if (vectors) {
    vectors->assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) (*vectors)[i][i] = 1.0;
  }
  tql2(n, d, e, vectors);
  return d;
}

std::vector<SpectrumEntry> dense_symmetric_eig(const DenseMatrix& matrix, std::size_t dense_cap) {
  check_dense_input(matrix, dense_cap);
  const std::size_t n = matrix.dim();
  if (n == 0) return {};
  std::vector<double> v(matrix.data().begin(), matrix.data().end());
  std::vector<double> d(n), e(n);
  tred2(n, v, d, e);
  // row i of z is column i of the accumulated transformation
  std::vector<std::vector<double>> z(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) z[i][k] = v[k * n + i];
  v.clear();
  v.shrink_to_fit();
  tql2(n, d, e, &z);

  std::vector<SpectrumEntry> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].eigenvalue = d[i];
    out[i].eigenvectors.push_back(std::move(z[i]));
  }
  return out;
}

std::vector<double> dense_symmetric_eigenvalues(const DenseMatrix& matrix, std::size_t dense_cap) {
  check_dense_input(matrix, dense_cap);
  const std::size_t n = matrix.dim();
  if (n == 0) return {};
  std::vector<double> v(matrix.data().begin(), matrix.data().end());
  std::vector<double> d(n), e(n);
  tred2(n, v, d, e);
  tql2(n, d, e, nullptr);
  return d;
}

// ---------------------------------------------------------------------------

std::vector<double> lanczos_start_vector(std::size_t dim, std::uint64_t seed) {
  std::vector<double> v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    // splitmix64 finalizer
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + i + 0x632be59bd9b4e019ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    v[i] = static_cast<double>(z >> 11) * 0x1.0p-52 - 1.0;
  }
  return v;
}

std::vector<LanczosResult> lanczos_lowest(const LinearOperator& op, std::size_t dim, std::size_t count,
                                          const LanczosOptions& options) {
  if (dim == 0) throw InvalidInput("Lanczos needs a nonempty space");
  count = std::min(count, dim);
  if (count == 0) return {};

  std::vector<std::vector<double>> krylov;
  std::vector<double> alpha, beta;
  std::vector<double> w(dim);
  auto start = lanczos_start_vector(dim, options.seed);
  scale(1.0 / norm(start), start);
  krylov.push_back(std::move(start));

  double best_residual = std::numeric_limits<double>::infinity();
  for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
    const std::size_t j = krylov.size() - 1;
    op(krylov[j], w);
    const double a = dot(krylov[j], w);
    axpy(-a, krylov[j], w);
    if (j > 0) axpy(-beta[j - 1], krylov[j - 1], w);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : krylov) axpy(-dot(q, w), q, w);
    const double b = norm(w);
    alpha.push_back(a);

    const std::size_t k = alpha.size();
    const bool exhausted = k == dim;
    const bool check = k <= 40 || k % 5 == 0 || exhausted || iteration == options.max_iterations;
    if (check) {
      std::vector<std::vector<double>> ritz_vectors;
      const auto theta = tridiagonal_eig(alpha, beta, &ritz_vectors);
      const double anorm = std::max({std::abs(theta.front()), std::abs(theta.back()), 1e-300});
      const bool invariant = b <= 1e-13 * anorm;
      const std::size_t available = std::min(count, k);
      bool converged = available == count || invariant || exhausted;
      double worst = 0.0;
      for (std::size_t i = 0; i < available; ++i) worst = std::max(worst, b * std::abs(ritz_vectors[i][k - 1]));
      converged = converged && (worst <= options.tolerance * anorm || invariant || exhausted);
      best_residual = std::min(best_residual, worst);
      if (converged) {
        std::vector<LanczosResult> results;
        std::vector<double> image(dim);
        for (std::size_t i = 0; i < available; ++i) {
          LanczosResult r;
          r.eigenvalue = theta[i];
          r.eigenvector.assign(dim, 0.0);
          for (std::size_t m = 0; m < k; ++m) axpy(ritz_vectors[i][m], krylov[m], r.eigenvector);
          scale(1.0 / norm(r.eigenvector), r.eigenvector);
          op(r.eigenvector, image);
          axpy(-r.eigenvalue, r.eigenvector, image);
          r.residual = norm(image);
          r.iterations = iteration;
          results.push_back(std::move(r));
        }
        return results;
      }
    }
    if (b <= 1e-300) break;
    beta.push_back(b);
    scale(1.0 / b, w);
    krylov.push_back(w);
  }
  throw NonConvergence("Lanczos did not converge within " + std::to_string(options.max_iterations) +
                           " iterations (best residual " + std::to_string(best_residual) + ")",
                       best_residual);
}

LanczosResult lanczos_ground(const LinearOperator& op, std::size_t dim, const LanczosOptions& options) {
  return lanczos_lowest(op, dim, 1, options).front();
}

std::vector<SpectrumEntry> group_degeneracies(const std::vector<SpectrumEntry>& eigenpairs, double tolerance) {
  std::vector<SpectrumEntry> groups;
  std::size_t begin = 0;
  while (begin < eigenpairs.size()) {
    std::size_t end = begin + 1;
    while (end < eigenpairs.size() && eigenpairs[end].eigenvalue - eigenpairs[end - 1].eigenvalue <= tolerance) ++end;
    SpectrumEntry merged;
    double sum = 0.0;
    std::vector<std::vector<double>> vectors;
    for (std::size_t i = begin; i < end; ++i) {
      sum += eigenpairs[i].eigenvalue;
      for (const auto& v : eigenpairs[i].eigenvectors) vectors.push_back(v);
    }
    merged.eigenvalue = sum / static_cast<double>(end - begin);
    merged.eigenvectors = orthonormalize(std::move(vectors));
    merged.two_s_total = eigenpairs[begin].two_s_total;
    merged.two_m = eigenpairs[begin].two_m;
    groups.push_back(std::move(merged));
    begin = end;
  }
  return groups;
}

}  // namespace spinsym
