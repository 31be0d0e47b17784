// Copyright 2026 The tensorctx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tensorctx/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tensorctx/errors.hpp"

namespace tensorctx {

Tolerance::Tolerance(double value) : eps(value) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        raise(ErrorCode::InvalidArgument,
              "tolerance must be a finite nonnegative number");
    }
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector &x, const ComplexVector &y) {
    ComplexVector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out.segment(i * y.size(), y.size()) = x(i) * y;
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) { return a.adjoint(); }

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        raise(ErrorCode::DimensionMismatch,
              "cannot compare " + std::to_string(a.rows()) + "x" +
                  std::to_string(a.cols()) + " with " +
                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    return max_abs(a - b);
}

bool is_square(const ComplexMatrix &m) noexcept { return m.rows() == m.cols(); }

bool is_finite(const ComplexMatrix &m) { return m.allFinite(); }

bool is_hermitian(const ComplexMatrix &m, double eps) {
    return is_square(m) && max_abs(m - m.adjoint()) <= eps;
}

bool is_unitary(const ComplexMatrix &m, double eps) {
    if (!is_square(m)) {
        return false;
    }
    const auto n = m.rows();
    return max_abs(m.adjoint() * m - ComplexMatrix::Identity(n, n)) <= eps;
}

void require_finite(const ComplexMatrix &m, const char *what) {
    if (!is_finite(m)) {
        raise(ErrorCode::InvalidArgument,
              std::string(what) + " contains NaN or infinite entries");
    }
}

void require_square(const ComplexMatrix &m, const char *what) {
    if (!is_square(m)) {
        raise(ErrorCode::DimensionMismatch,
              std::string(what) + " must be square, got " +
                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_unitary(const ComplexMatrix &m, const char *what, double eps) {
    require_square(m, what);
    require_finite(m, what);
    if (!is_unitary(m, eps)) {
        raise(ErrorCode::NotUnitary, std::string(what) + " is not unitary");
    }
}

std::size_t numerical_rank(const RealVector &sigma) {
    if (sigma.size() == 0) {
        return 0;
    }
    const double top = sigma.maxCoeff();
    const double cut = std::max(kRankRelativeThreshold * top, kRankAbsoluteFloor);
    return static_cast<std::size_t>((sigma.array() > cut).count());
}

Eigen::Index argmax_abs(const ComplexVector &v) {
    Eigen::Index best = 0;
    double best_abs = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        // Prefer the earliest index among entries that agree to rounding.
        const double a = std::abs(v(i));
        if (a > best_abs + 1e-12) {
            best_abs = a;
            best = i;
        }
    }
    return best;
}

Complex fix_phase(ComplexVector &v) {
    if (v.size() == 0) {
        return {1.0, 0.0};
    }
    const Complex pivot = v(argmax_abs(v));
    if (std::abs(pivot) == 0.0) {
        return {1.0, 0.0};
    }
    const Complex c = std::conj(pivot) / std::abs(pivot);
    v *= c;
    return c;
}

namespace {

// Ordering key used for degenerate clusters.
Eigen::Index pivot_index(const ComplexVector &v) { return argmax_abs(v); }

// Re-derive an orthonormal basis of span(vectors) that depends only on the
// subspace: project e_0, e_1, ... and Gram-Schmidt in index order.
std::vector<ComplexVector>
canonical_subspace_basis(const std::vector<ComplexVector> &vectors) {
    const auto rank = vectors.size();
    if (rank <= 1) {
        return vectors;
    }
    const auto n = vectors.front().size();
    ComplexMatrix basis(n, static_cast<Eigen::Index>(rank));
    for (std::size_t k = 0; k < rank; ++k) {
        basis.col(static_cast<Eigen::Index>(k)) = vectors[k];
    }
    const ComplexMatrix projector = basis * basis.adjoint();

    std::vector<ComplexVector> out;
    for (Eigen::Index i = 0; i < n && out.size() < rank; ++i) {
        ComplexVector w = projector.col(i);
        for (const auto &q : out) {
            w -= q.dot(w) * q;
        }
        for (const auto &q : out) {
            w -= q.dot(w) * q;
        }
        const double norm = w.norm();
        if (norm > 1e-6) {
            out.emplace_back(w / norm);
        }
    }
    if (out.size() != rank) {
        // Projections of the standard basis always span the subspace; reaching
        // this means the input vectors were not orthonormal.
        return vectors;
    }
    return out;
}

} // namespace

SvdResult svd(const ComplexMatrix &m) {
    require_finite(m, "svd input");
    if (m.size() == 0) {
        raise(ErrorCode::DimensionMismatch, "svd of an empty matrix");
    }
    Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeThinU |
                                                  Eigen::ComputeThinV);
    SvdResult out{solver.matrixU(), solver.singularValues(),
                  solver.matrixV()};
    if (!out.u.allFinite() || !out.v.allFinite() || !out.sigma.allFinite()) {
        raise(ErrorCode::NumericalFailure, "svd produced non-finite factors");
    }

    const auto k = out.sigma.size();
    for (Eigen::Index j = 0; j < k; ++j) {
        ComplexVector u = out.u.col(j);
        const Complex c = fix_phase(u);
        out.u.col(j) = u;
        out.v.col(j) *= c;
    }

    // Within each cluster of equal singular values order by pivot index.
    const double scale = std::max(1.0, k > 0 ? out.sigma(0) : 0.0);
    Eigen::Index start = 0;
    while (start < k) {
        Eigen::Index stop = start + 1;
        while (stop < k &&
               out.sigma(stop - 1) - out.sigma(stop) <= 1e-8 * scale) {
            ++stop;
        }
        if (stop - start > 1) {
            std::vector<Eigen::Index> order(static_cast<std::size_t>(stop - start));
            std::iota(order.begin(), order.end(), start);
            std::stable_sort(order.begin(), order.end(),
                             [&](Eigen::Index a, Eigen::Index b) {
                                 return pivot_index(out.u.col(a)) <
                                        pivot_index(out.u.col(b));
                             });
            const ComplexMatrix u_block = out.u;
            const ComplexMatrix v_block = out.v;
            const RealVector s_block = out.sigma;
            for (std::size_t t = 0; t < order.size(); ++t) {
                const auto dst = start + static_cast<Eigen::Index>(t);
                out.u.col(dst) = u_block.col(order[t]);
                out.v.col(dst) = v_block.col(order[t]);
                out.sigma(dst) = s_block(order[t]);
            }
        }
        start = stop;
    }
    return out;
}

std::vector<EigenPair> eig_hermitian(const ComplexMatrix &m, Tolerance tol) {
    require_square(m, "eig_hermitian input");
    require_finite(m, "eig_hermitian input");
    if (max_abs(m - m.adjoint()) > tol.eps) {
        raise(ErrorCode::NotHermitian,
              "matrix deviates from its adjoint by " +
                  std::to_string(max_abs(m - m.adjoint())));
    }
    // Symmetrize so rounding in the input does not leak into the solver.
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        raise(ErrorCode::NumericalFailure,
              "Hermitian eigensolver did not converge");
    }
    const RealVector values = solver.eigenvalues();
    const ComplexMatrix vectors = solver.eigenvectors();
    const auto n = values.size();

    // Solver returns ascending order; walk from the top.
    std::vector<EigenPair> out;
    out.reserve(static_cast<std::size_t>(n));
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    Eigen::Index hi = n - 1;
    while (hi >= 0) {
        Eigen::Index lo = hi;
        while (lo > 0 && values(hi) - values(lo - 1) <= 1e-8 * scale) {
            --lo;
        }
        std::vector<ComplexVector> cluster;
        for (Eigen::Index j = hi; j >= lo; --j) {
            cluster.emplace_back(vectors.col(j));
        }
        cluster = canonical_subspace_basis(cluster);
        for (auto &v : cluster) {
            fix_phase(v);
        }
        std::stable_sort(cluster.begin(), cluster.end(),
                         [](const ComplexVector &a, const ComplexVector &b) {
                             return pivot_index(a) < pivot_index(b);
                         });
        for (auto &v : cluster) {
            const double value = cluster.size() == 1
                                     ? values(hi)
                                     : std::real(v.dot(h * v));
            out.push_back({value, std::move(v)});
        }
        hi = lo - 1;
    }
    return out;
}

bool approx_eq_phase(const ComplexVector &x, const ComplexVector &y,
                     Tolerance tol) {
    if (x.size() != y.size()) {
        raise(ErrorCode::DimensionMismatch,
              "approx_eq_phase on vectors of dimension " +
                  std::to_string(x.size()) + " and " +
                  std::to_string(y.size()));
    }
    if (y.size() == 0) {
        return true;
    }
    const auto k = argmax_abs(y);
    Complex c{1.0, 0.0};
    if (std::abs(y(k)) > 0.0 && std::abs(x(k)) > 0.0) {
        const Complex ratio = x(k) / y(k);
        c = ratio / std::abs(ratio);
    }
    return (x - c * y).norm() <= tol.eps;
}

} // namespace tensorctx
