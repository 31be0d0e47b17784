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

#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "tensorctx/numerics.hpp"
#include "tensorctx/tensor_op.hpp"

namespace tensorctx {

struct Part {
    std::string name;
    Eigen::Index dim = 0;

    friend bool operator==(const Part &, const Part &) = default;
};

/// One argument slot of a pairing operator: either a single part, or two
/// parts joined by their registered bipartite tensor operator.
struct Slot {
    std::vector<std::string> parts;
    std::optional<TensorProductOperator> op;

    [[nodiscard]] Eigen::Index dim(const std::vector<Part> &context) const;
};

/// Auxiliary tensor operator combining two slots into the global space. The
/// assignment sends (first product index m, second product index n), stored
/// at m * d_second + n, to a global basis index, where a two-part slot's
/// product index is the flat index of its operator's product basis. The
/// induced map is the tensor operator with twist
///     P = Perm(assignment) * kron(T_first^dagger, T_second^dagger).
class PairingOperator {
  public:
    /// Throws InvalidArgument when the assignment is not a bijection onto
    /// 0 .. global_dim - 1.
    PairingOperator(std::string label, std::vector<Part> context_parts,
                    Slot first, Slot second,
                    std::vector<Eigen::Index> assignment);

    [[nodiscard]] const std::string &label() const noexcept { return label_; }
    [[nodiscard]] const Slot &first() const noexcept { return first_; }
    [[nodiscard]] const Slot &second() const noexcept { return second_; }
    [[nodiscard]] const std::vector<Eigen::Index> &assignment() const noexcept {
        return assignment_;
    }
    [[nodiscard]] const std::vector<Part> &context_parts() const noexcept {
        return context_parts_;
    }
    /// The pairing as a tensor operator of type (d_first, d_second).
    [[nodiscard]] const TensorProductOperator &op() const noexcept {
        return op_;
    }
    [[nodiscard]] Eigen::Index global_dim() const noexcept {
        return op_.type().target_dim();
    }

    /// Prefix application: pairing(first_state, second_state).
    [[nodiscard]] ComplexVector apply(const ComplexVector &first_state,
                                      const ComplexVector &second_state) const;

    /// P * kron(first_op, second_op) * P^dagger. Slot operators are in the
    /// slot's reference basis.
    [[nodiscard]] ComplexMatrix lift(const ComplexMatrix &first_op,
                                     const ComplexMatrix &second_op) const;

    /// Global-basis coefficients listed in this pairing's assignment order,
    /// entry m * d_second + n being the coefficient of the global vector
    /// assigned to (m, n).
    [[nodiscard]] ComplexVector coordinates(const ComplexVector &global) const;
    [[nodiscard]] ComplexVector from_coordinates(const ComplexVector &coords) const;

  private:
    std::string label_;
    std::vector<Part> context_parts_;
    Slot first_;
    Slot second_;
    std::vector<Eigen::Index> assignment_;
    TensorProductOperator op_;
};

ComplexVector pair_apply(const PairingOperator &p,
                         const ComplexVector &pair_state,
                         const ComplexVector &third_state);

ComplexMatrix pair_lift(const PairingOperator &p, const ComplexMatrix &pair_op,
                        const ComplexMatrix &third_op);

/// Re-express coordinates listed in `from`'s order in `to`'s order. The
/// global vector is unchanged. Both pairings must come from the same
/// context (ContextMismatch).
ComplexVector rebase(const ComplexVector &coords, const PairingOperator &from,
                     const PairingOperator &to);
ComplexMatrix rebase(const ComplexMatrix &op, const PairingOperator &from,
                     const PairingOperator &to);

struct PairwiseEntry {
    std::string first;
    std::string second;
    TensorProductOperator op;
};

/// Registry of parts, the bipartite operator for each registered pair of
/// parts, and the pairing operators built from them. Global basis vectors are
/// indexed by the parts' digits in registration order (for three qubits,
/// b_ijk <-> 4i + 2j + k).
class MultipartiteContext {
  public:
    MultipartiteContext(std::vector<Part> parts,
                        std::vector<PairwiseEntry> pairwise);

    [[nodiscard]] const std::vector<Part> &parts() const noexcept { return parts_; }
    [[nodiscard]] const std::vector<PairwiseEntry> &pairwise() const noexcept {
        return pairwise_;
    }
    [[nodiscard]] const std::deque<PairingOperator> &pairings() const noexcept {
        return pairings_;
    }
    [[nodiscard]] Eigen::Index global_dim() const noexcept { return global_dim_; }

    [[nodiscard]] const Part &part(const std::string &name) const;
    /// The operator registered for {a, b}; the returned entry records the
    /// registered orientation.
    [[nodiscard]] const PairwiseEntry &pairwise_entry(const std::string &a,
                                                      const std::string &b) const;
    [[nodiscard]] const PairingOperator &pairing(const std::string &label) const;

    /// Global index of the basis vector with the given per-part digits.
    [[nodiscard]] Eigen::Index
    global_index(const std::vector<Eigen::Index> &digits) const;

    /// Adds a pairing whose assignment follows from the part digits. Slots
    /// are one part, or two parts registered as a pair (listed in either
    /// order). The slots must cover every part exactly once.
    const PairingOperator &add_pairing(const std::string &label,
                                       const std::vector<std::string> &first,
                                       const std::vector<std::string> &second);

    /// Adds a pairing with an explicit assignment table.
    const PairingOperator &
    add_pairing(const std::string &label, const std::vector<std::string> &first,
                const std::vector<std::string> &second,
                std::vector<Eigen::Index> assignment);

  private:
    Slot make_slot(const std::vector<std::string> &names) const;
    std::vector<Eigen::Index>
    derived_assignment(const Slot &first, const Slot &second) const;

    std::vector<Part> parts_;
    std::vector<PairwiseEntry> pairwise_;
    std::deque<PairingOperator> pairings_;
    Eigen::Index global_dim_ = 1;
};

/// Three-qubit context over parts (A1, A2, B) with t12 on (A1, A2), t13 on
/// (A1, B), t23 on (A2, B), and the pairings
///   "B(A1A2)": (|i> t12 |j>, |k>) -> b_ijk
///   "A2(A1B)": (|i> t13 |k>, |j>) -> b_ijk
///   "A1(A2B)": (|j> t23 |k>, |i>) -> b_ijk
MultipartiteContext standard_context_3q(const TensorProductOperator &t12,
                                        const TensorProductOperator &t13,
                                        const TensorProductOperator &t23);

} // namespace tensorctx
