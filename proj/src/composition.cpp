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

#include "tensorctx/composition.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "tensorctx/errors.hpp"

namespace tensorctx {

namespace {

const Part &find_part(const std::vector<Part> &parts, const std::string &name) {
    const auto it = std::find_if(parts.begin(), parts.end(),
                                 [&](const Part &p) { return p.name == name; });
    if (it == parts.end()) {
        throw ResolutionError("unknown part '" + name + "'");
    }
    return *it;
}

std::string join(const std::vector<std::string> &names) {
    std::string out;
    for (const auto &n : names) {
        out += n;
    }
    return out;
}

ComplexMatrix slot_twist(const Slot &slot, Eigen::Index dim) {
    if (slot.op) {
        return slot.op->twist();
    }
    return ComplexMatrix::Identity(dim, dim);
}

TensorProductOperator build_pairing_op(const std::string &label,
                                       const std::vector<Part> &parts,
                                       const Slot &first, const Slot &second,
                                       const std::vector<Eigen::Index> &assignment) {
    const auto d1 = first.dim(parts);
    const auto d2 = second.dim(parts);
    const auto dim = d1 * d2;
    if (static_cast<Eigen::Index>(assignment.size()) != dim) {
        raise(ErrorCode::WrongCount,
              "pairing '" + label + "' needs " + std::to_string(dim) +
                  " assignment entries, got " +
                  std::to_string(assignment.size()));
    }
    std::vector<bool> seen(static_cast<std::size_t>(dim), false);
    ComplexMatrix perm = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const auto target = assignment[static_cast<std::size_t>(k)];
        if (target < 0 || target >= dim || seen[static_cast<std::size_t>(target)]) {
            raise(ErrorCode::InvalidArgument,
                  "assignment of pairing '" + label +
                      "' is not a bijection onto 0.." + std::to_string(dim - 1));
        }
        seen[static_cast<std::size_t>(target)] = true;
        perm(target, k) = 1.0;
    }
    const ComplexMatrix twist =
        perm * kron(ComplexMatrix(slot_twist(first, d1).adjoint()),
                    ComplexMatrix(slot_twist(second, d2).adjoint()));
    return {TensorType(d1, d2), twist, label};
}

Eigen::Index context_dim(const std::vector<Part> &parts) {
    Eigen::Index dim = 1;
    for (const auto &p : parts) {
        dim *= p.dim;
    }
    return dim;
}

} // namespace

Eigen::Index Slot::dim(const std::vector<Part> &context) const {
    if (parts.empty() || parts.size() > 2) {
        raise(ErrorCode::InvalidArgument, "a slot holds one or two parts");
    }
    Eigen::Index d = 1;
    for (const auto &name : parts) {
        d *= find_part(context, name).dim;
    }
    if (parts.size() == 2) {
        if (!op) {
            raise(ErrorCode::InvalidArgument,
                  "two-part slot " + join(parts) + " needs a tensor operator");
        }
        if (op->type() != TensorType(find_part(context, parts[0]).dim,
                                     find_part(context, parts[1]).dim)) {
            raise(ErrorCode::TypeMismatch,
                  "operator '" + op->label() + "' does not match slot " +
                      join(parts));
        }
    }
    return d;
}

PairingOperator::PairingOperator(std::string label,
                                 std::vector<Part> context_parts, Slot first,
                                 Slot second,
                                 std::vector<Eigen::Index> assignment)
    : label_(std::move(label)), context_parts_(std::move(context_parts)),
      first_(std::move(first)), second_(std::move(second)),
      assignment_(std::move(assignment)),
      op_(build_pairing_op(label_, context_parts_, first_, second_,
                           assignment_)) {
    if (op_.type().target_dim() != context_dim(context_parts_)) {
        raise(ErrorCode::DimensionMismatch,
              "pairing '" + label_ + "' does not span the whole context");
    }
}

ComplexVector PairingOperator::apply(const ComplexVector &first_state,
                                     const ComplexVector &second_state) const {
    return op_.apply(first_state, second_state);
}

ComplexMatrix PairingOperator::lift(const ComplexMatrix &first_op,
                                    const ComplexMatrix &second_op) const {
    return op_.lift(first_op, second_op);
}

ComplexVector PairingOperator::coordinates(const ComplexVector &global) const {
    if (global.size() != global_dim()) {
        raise(ErrorCode::DimensionMismatch,
              "vector has dimension " + std::to_string(global.size()) +
                  ", context has " + std::to_string(global_dim()));
    }
    ComplexVector out(global.size());
    for (std::size_t k = 0; k < assignment_.size(); ++k) {
        out(static_cast<Eigen::Index>(k)) = global(assignment_[k]);
    }
    return out;
}

ComplexVector
PairingOperator::from_coordinates(const ComplexVector &coords) const {
    if (coords.size() != global_dim()) {
        raise(ErrorCode::DimensionMismatch,
              "coordinate list has length " + std::to_string(coords.size()) +
                  ", context has " + std::to_string(global_dim()));
    }
    ComplexVector out(coords.size());
    for (std::size_t k = 0; k < assignment_.size(); ++k) {
        out(assignment_[k]) = coords(static_cast<Eigen::Index>(k));
    }
    return out;
}

ComplexVector pair_apply(const PairingOperator &p,
                         const ComplexVector &pair_state,
                         const ComplexVector &third_state) {
    return p.apply(pair_state, third_state);
}

ComplexMatrix pair_lift(const PairingOperator &p, const ComplexMatrix &pair_op,
                        const ComplexMatrix &third_op) {
    return p.lift(pair_op, third_op);
}

namespace {

void require_same_context(const PairingOperator &from,
                          const PairingOperator &to) {
    if (from.context_parts() != to.context_parts()) {
        raise(ErrorCode::ContextMismatch,
              "pairings '" + from.label() + "' and '" + to.label() +
                  "' belong to different contexts");
    }
}

ComplexMatrix permutation_to_global(const PairingOperator &p) {
    const auto dim = p.global_dim();
    ComplexMatrix perm = ComplexMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < p.assignment().size(); ++k) {
        perm(p.assignment()[k], static_cast<Eigen::Index>(k)) = 1.0;
    }
    return perm;
}

} // namespace

ComplexVector rebase(const ComplexVector &coords, const PairingOperator &from,
                     const PairingOperator &to) {
    require_same_context(from, to);
    return to.coordinates(from.from_coordinates(coords));
}

ComplexMatrix rebase(const ComplexMatrix &op, const PairingOperator &from,
                     const PairingOperator &to) {
    require_same_context(from, to);
    const auto dim = from.global_dim();
    if (op.rows() != dim || op.cols() != dim) {
        raise(ErrorCode::DimensionMismatch, "operator does not act on the context");
    }
    const ComplexMatrix q =
        permutation_to_global(to).transpose() * permutation_to_global(from);
    return q * op * q.transpose();
}

MultipartiteContext::MultipartiteContext(std::vector<Part> parts,
                                         std::vector<PairwiseEntry> pairwise)
    : parts_(std::move(parts)), pairwise_(std::move(pairwise)) {
    if (parts_.empty()) {
        raise(ErrorCode::InvalidArgument, "a context needs at least one part");
    }
    std::set<std::string> names;
    for (const auto &p : parts_) {
        if (p.dim <= 0) {
            raise(ErrorCode::InvalidArgument,
                  "part '" + p.name + "' must have positive dimension");
        }
        if (!names.insert(p.name).second) {
            raise(ErrorCode::InvalidArgument,
                  "duplicate part name '" + p.name + "'");
        }
    }
    global_dim_ = context_dim(parts_);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto &entry : pairwise_) {
        const auto &a = find_part(parts_, entry.first);
        const auto &b = find_part(parts_, entry.second);
        if (a.name == b.name) {
            raise(ErrorCode::InvalidArgument,
                  "pair '" + a.name + a.name + "' repeats a part");
        }
        if (entry.op.type() != TensorType(a.dim, b.dim)) {
            raise(ErrorCode::TypeMismatch,
                  "operator '" + entry.op.label() + "' has type " +
                      to_string(entry.op.type()) + " but pair " + a.name +
                      b.name + " needs " +
                      to_string(TensorType(a.dim, b.dim)));
        }
        const auto key = std::minmax(a.name, b.name);
        if (!pairs.insert({key.first, key.second}).second) {
            raise(ErrorCode::InvalidArgument,
                  "pair " + a.name + b.name + " registered twice");
        }
    }
}

const Part &MultipartiteContext::part(const std::string &name) const {
    return find_part(parts_, name);
}

const PairwiseEntry &
MultipartiteContext::pairwise_entry(const std::string &a,
                                    const std::string &b) const {
    for (const auto &entry : pairwise_) {
        if ((entry.first == a && entry.second == b) ||
            (entry.first == b && entry.second == a)) {
            return entry;
        }
    }
    throw ResolutionError("no tensor operator registered for pair " + a + b);
}

const PairingOperator &
MultipartiteContext::pairing(const std::string &label) const {
    for (const auto &p : pairings_) {
        if (p.label() == label) {
            return p;
        }
    }
    throw ResolutionError("unknown pairing '" + label + "'");
}

Eigen::Index
MultipartiteContext::global_index(const std::vector<Eigen::Index> &digits) const {
    if (digits.size() != parts_.size()) {
        raise(ErrorCode::DimensionMismatch,
              "expected " + std::to_string(parts_.size()) + " digits");
    }
    Eigen::Index index = 0;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (digits[k] < 0 || digits[k] >= parts_[k].dim) {
            raise(ErrorCode::InvalidArgument,
                  "digit out of range for part '" + parts_[k].name + "'");
        }
        index = index * parts_[k].dim + digits[k];
    }
    return index;
}

Slot MultipartiteContext::make_slot(const std::vector<std::string> &names) const {
    if (names.size() == 1) {
        (void)part(names[0]);
        return Slot{names, std::nullopt};
    }
    if (names.size() == 2) {
        const auto &entry = pairwise_entry(names[0], names[1]);
        return Slot{{entry.first, entry.second}, entry.op};
    }
    raise(ErrorCode::InvalidArgument, "a slot holds one or two parts");
}

std::vector<Eigen::Index>
MultipartiteContext::derived_assignment(const Slot &first,
                                        const Slot &second) const {
    std::vector<std::string> covered = first.parts;
    covered.insert(covered.end(), second.parts.begin(), second.parts.end());
    std::vector<std::string> sorted = covered;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> all;
    for (const auto &p : parts_) {
        all.push_back(p.name);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted != all) {
        raise(ErrorCode::ContextMismatch,
              "pairing slots must cover every part exactly once");
    }

    const auto d2 = second.dim(parts_);
    std::vector<Eigen::Index> assignment(static_cast<std::size_t>(global_dim_));
    std::vector<Eigen::Index> digits(parts_.size(), 0);
    auto position = [&](const std::string &name) {
        const auto it = std::find_if(parts_.begin(), parts_.end(),
                                     [&](const Part &p) { return p.name == name; });
        return static_cast<std::size_t>(it - parts_.begin());
    };
    auto slot_index = [&](const Slot &slot) {
        Eigen::Index idx = 0;
        for (const auto &name : slot.parts) {
            const auto pos = position(name);
            idx = idx * parts_[pos].dim + digits[pos];
        }
        return idx;
    };
    for (Eigen::Index g = 0; g < global_dim_; ++g) {
        Eigen::Index rest = g;
        for (std::size_t k = parts_.size(); k-- > 0;) {
            digits[k] = rest % parts_[k].dim;
            rest /= parts_[k].dim;
        }
        const auto m = slot_index(first);
        const auto n = slot_index(second);
        assignment[static_cast<std::size_t>(m * d2 + n)] = g;
    }
    return assignment;
}

const PairingOperator &
MultipartiteContext::add_pairing(const std::string &label,
                                 const std::vector<std::string> &first,
                                 const std::vector<std::string> &second) {
    Slot a = make_slot(first);
    Slot b = make_slot(second);
    auto assignment = derived_assignment(a, b);
    return add_pairing(label, first, second, std::move(assignment));
}

const PairingOperator &
MultipartiteContext::add_pairing(const std::string &label,
                                 const std::vector<std::string> &first,
                                 const std::vector<std::string> &second,
                                 std::vector<Eigen::Index> assignment) {
    for (const auto &p : pairings_) {
        if (p.label() == label) {
            raise(ErrorCode::InvalidArgument,
                  "pairing '" + label + "' already exists");
        }
    }
    pairings_.emplace_back(label, parts_, make_slot(first), make_slot(second),
                           std::move(assignment));
    return pairings_.back();
}

MultipartiteContext standard_context_3q(const TensorProductOperator &t12,
                                        const TensorProductOperator &t13,
                                        const TensorProductOperator &t23) {
    const TensorType qubits(2, 2);
    for (const auto *t : {&t12, &t13, &t23}) {
        if (t->type() != qubits) {
            raise(ErrorCode::TypeMismatch,
                  "'" + t->label() + "' has type " + to_string(t->type()) +
                      ", expected (2,2)->4");
        }
    }
    MultipartiteContext ctx({{"A1", 2}, {"A2", 2}, {"B", 2}},
                            {{"A1", "A2", t12}, {"A1", "B", t13}, {"A2", "B", t23}});
    ctx.add_pairing("B(A1A2)", {"A1", "A2"}, {"B"});
    ctx.add_pairing("A2(A1B)", {"A1", "B"}, {"A2"});
    ctx.add_pairing("A1(A2B)", {"A2", "B"}, {"A1"});
    return ctx;
}

} // namespace tensorctx
