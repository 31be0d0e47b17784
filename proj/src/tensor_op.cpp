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

#include "tensorctx/tensor_op.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "tensorctx/errors.hpp"
#include "tensorctx/random.hpp"

namespace tensorctx {

namespace {

std::string shape(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_factor_vector(const ComplexVector &v, Eigen::Index dim,
                           const char *slot) {
    if (v.size() != dim) {
        raise(ErrorCode::DimensionMismatch,
              std::string(slot) + " argument has dimension " +
                  std::to_string(v.size()) + ", expected " +
                  std::to_string(dim));
    }
}

void require_factor_matrix(const ComplexMatrix &m, Eigen::Index dim,
                           const char *slot) {
    if (m.rows() != dim || m.cols() != dim) {
        raise(ErrorCode::DimensionMismatch,
              std::string(slot) + " operator is " + shape(m) + ", expected " +
                  std::to_string(dim) + "x" + std::to_string(dim));
    }
}

} // namespace

TensorType::TensorType(Eigen::Index first, Eigen::Index second)
    : d1(first), d2(second) {
    if (first <= 0 || second <= 0) {
        raise(ErrorCode::InvalidArgument,
              "tensor type dimensions must be positive");
    }
}

std::string to_string(const TensorType &type) {
    return "(" + std::to_string(type.d1) + "," + std::to_string(type.d2) +
           ")->" + std::to_string(type.target_dim());
}

TensorProductOperator::TensorProductOperator(TensorType type,
                                             ComplexMatrix twist,
                                             std::string label)
    : type_(type), twist_(std::move(twist)), label_(std::move(label)) {
    if (type_.d1 <= 0 || type_.d2 <= 0) {
        raise(ErrorCode::InvalidArgument,
              "tensor type dimensions must be positive");
    }
    const auto dim = type_.target_dim();
    if (twist_.rows() != dim || twist_.cols() != dim) {
        raise(ErrorCode::DimensionMismatch,
              "twist of '" + label_ + "' is " + shape(twist_) +
                  " but type " + to_string(type_) + " needs " +
                  std::to_string(dim) + "x" + std::to_string(dim));
    }
    require_unitary(twist_, ("twist of '" + label_ + "'").c_str());
}

ComplexVector TensorProductOperator::apply(const ComplexVector &x,
                                           const ComplexVector &y) const {
    require_factor_vector(x, type_.d1, "first");
    require_factor_vector(y, type_.d2, "second");
    return twist_ * kron(x, y);
}

ComplexMatrix TensorProductOperator::lift(const ComplexMatrix &l1,
                                          const ComplexMatrix &l2) const {
    require_factor_matrix(l1, type_.d1, "first");
    require_factor_matrix(l2, type_.d2, "second");
    return twist_ * kron(l1, l2) * twist_.adjoint();
}

ComplexMatrix TensorProductOperator::represent(const ComplexMatrix &m) const {
    require_factor_matrix(m, type_.target_dim(), "target-space");
    return twist_ * m * twist_.adjoint();
}

ComplexVector
TensorProductOperator::product_coordinates(const ComplexVector &state) const {
    require_factor_vector(state, type_.target_dim(), "target-space");
    return twist_.adjoint() * state;
}

TensorProductOperator
TensorProductOperator::relabeled(std::string label) const {
    TensorProductOperator copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

TensorProductOperator canonical(Eigen::Index d1, Eigen::Index d2,
                                std::string label) {
    const TensorType type(d1, d2);
    const auto dim = type.target_dim();
    return {type, ComplexMatrix::Identity(dim, dim), std::move(label)};
}

TensorProductOperator from_twist(const TensorProductOperator &t,
                                 const ComplexMatrix &u, std::string label) {
    const auto dim = t.type().target_dim();
    if (u.rows() != dim || u.cols() != dim) {
        raise(ErrorCode::DimensionMismatch,
              "twist is " + shape(u) + " but '" + t.label() + "' targets " +
                  std::to_string(dim) + " dimensions");
    }
    require_unitary(u, "twist");
    if (label.empty()) {
        label = t.label() + "'";
    }
    return {t.type(), u * t.twist(), std::move(label)};
}

TensorProductOperator
from_basis_images(TensorType type, const std::vector<ComplexVector> &images,
                  std::string label) {
    const auto dim = type.target_dim();
    if (static_cast<Eigen::Index>(images.size()) != dim) {
        raise(ErrorCode::WrongCount,
              "expected " + std::to_string(dim) + " basis images, got " +
                  std::to_string(images.size()));
    }
    ComplexMatrix twist(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const auto &image = images[static_cast<std::size_t>(k)];
        if (image.size() != dim) {
            raise(ErrorCode::DimensionMismatch,
                  "basis image " + std::to_string(k) + " has dimension " +
                      std::to_string(image.size()) + ", expected " +
                      std::to_string(dim));
        }
        twist.col(k) = image;
    }
    require_finite(twist, "basis images");
    if (!is_unitary(twist, kUnitarityTolerance)) {
        raise(ErrorCode::NotOrthonormal, "basis images are not orthonormal");
    }
    return {type, std::move(twist), std::move(label)};
}

ComplexVector apply(const TensorProductOperator &t, const ComplexVector &x,
                    const ComplexVector &y) {
    return t.apply(x, y);
}

ComplexMatrix lift(const TensorProductOperator &t, const ComplexMatrix &l1,
                   const ComplexMatrix &l2) {
    return t.lift(l1, l2);
}

ComplexMatrix relating_unitary(const TensorProductOperator &a,
                               const TensorProductOperator &b) {
    if (a.type() != b.type()) {
        raise(ErrorCode::TypeMismatch,
              "'" + a.label() + "' has type " + to_string(a.type()) +
                  " but '" + b.label() + "' has type " + to_string(b.type()));
    }
    return b.twist() * a.twist().adjoint();
}

AxiomReport verify_axioms(const TensorProductOperator &t, std::size_t trials,
                          std::uint64_t seed, Tolerance tol) {
    Rng rng(seed);
    const auto d1 = t.type().d1;
    const auto d2 = t.type().d2;
    AxiomReport report;
    report.trials = trials;
    report.tolerance = tol.eps;
    for (std::size_t k = 0; k < trials; ++k) {
        const ComplexVector x = random_vector(d1, rng);
        const ComplexVector x2 = random_vector(d1, rng);
        const ComplexVector y = random_vector(d2, rng);
        const ComplexVector y2 = random_vector(d2, rng);
        const Complex alpha = rng.complex_normal();
        const Complex beta = rng.complex_normal();

        const ComplexVector left =
            t.apply(alpha * x + beta * x2, y) -
            (alpha * t.apply(x, y) + beta * t.apply(x2, y));
        const ComplexVector right =
            t.apply(x, alpha * y + beta * y2) -
            (alpha * t.apply(x, y) + beta * t.apply(x, y2));
        report.bilinearity_residual =
            std::max({report.bilinearity_residual, left.norm(), right.norm()});

        const ComplexVector ux = x / x.norm();
        const ComplexVector uy = y / y.norm();
        report.norm_residual =
            std::max(report.norm_residual, std::abs(t.apply(ux, uy).norm() - 1.0));
    }
    report.max_residual =
        std::max(report.bilinearity_residual, report.norm_residual);
    report.passed = report.max_residual <= tol.eps;
    return report;
}

RelationReport verify_relation(const TensorProductOperator &a,
                               const TensorProductOperator &b, std::size_t trials,
                               std::uint64_t seed, Tolerance tol) {
    const ComplexMatrix w = relating_unitary(a, b);
    const ComplexMatrix back = relating_unitary(b, a);
    const auto d1 = a.type().d1;
    const auto d2 = a.type().d2;
    RelationReport report;
    report.trials = trials;
    report.tolerance = tol.eps;
    for (Eigen::Index i = 0; i < d1; ++i) {
        for (Eigen::Index j = 0; j < d2; ++j) {
            const ComplexVector e = ComplexVector::Unit(d1, i);
            const ComplexVector f = ComplexVector::Unit(d2, j);
            report.basis_residual = std::max(
                report.basis_residual, (w * a.apply(e, f) - b.apply(e, f)).norm());
        }
    }
    report.involution_residual =
        max_abs(w * back - ComplexMatrix::Identity(w.rows(), w.cols()));
    Rng rng(seed);
    for (std::size_t k = 0; k < trials; ++k) {
        const ComplexMatrix l1 = random_matrix(d1, d1, rng);
        const ComplexMatrix l2 = random_matrix(d2, d2, rng);
        report.lift_residual =
            std::max(report.lift_residual,
                     max_abs(b.lift(l1, l2) - w * a.lift(l1, l2) * w.adjoint()));
    }
    report.max_residual = std::max(
        {report.basis_residual, report.lift_residual, report.involution_residual});
    report.passed = report.max_residual <= tol.eps;
    return report;
}

} // namespace tensorctx
