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

#include "tensorctx/scenario_file.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "json.hpp"
#include "tensorctx/analysis.hpp"
#include "tensorctx/errors.hpp"

namespace tensorctx {

using Json = nlohmann::ordered_json;

std::string_view to_string(DirectiveKind kind) noexcept {
    switch (kind) {
    case DirectiveKind::verify:
        return "verify";
    case DirectiveKind::schmidt:
        return "schmidt";
    case DirectiveKind::factorize:
        return "factorize";
    case DirectiveKind::run:
        return "run";
    case DirectiveKind::transform:
        return "transform";
    }
    return "unknown";
}

namespace {

bool same(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

bool same(const ComplexVector &a, const ComplexVector &b) {
    return a.size() == b.size() && (a.array() == b.array()).all();
}

bool same(const Tensor &a, const Tensor &b) {
    if (a.index() != b.index()) {
        return false;
    }
    if (const auto *v = std::get_if<ComplexVector>(&a)) {
        return same(*v, std::get<ComplexVector>(b));
    }
    return same(std::get<ComplexMatrix>(a), std::get<ComplexMatrix>(b));
}

bool same(const std::vector<ComplexVector> &a, const std::vector<ComplexVector> &b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(),
                                              [](const auto &x, const auto &y) {
                                                  return same(x, y);
                                              });
}

template <typename T>
bool same_opt(const std::optional<T> &a, const std::optional<T> &b) {
    if (a.has_value() != b.has_value()) {
        return false;
    }
    return !a || same(*a, *b);
}

} // namespace

bool operator==(const OperatorDef &a, const OperatorDef &b) {
    return a.label == b.label && a.d1 == b.d1 && a.d2 == b.d2 && same(a.twist, b.twist);
}

bool operator==(const StateDef &a, const StateDef &b) {
    return a.label == b.label && same(a.entries, b.entries);
}

bool operator==(const MatrixDef &a, const MatrixDef &b) {
    return a.label == b.label && same(a.entries, b.entries);
}

bool operator==(const Expectation &a, const Expectation &b) {
    return a.status == b.status && a.rank == b.rank && a.coefficients == b.coefficients &&
           a.factorizable == b.factorizable && same_opt(a.left, b.left) &&
           same_opt(a.right, b.right) && same_opt(a.checkpoints, b.checkpoints) &&
           same_opt(a.final_state, b.final_state) && a.outcomes == b.outcomes &&
           same_opt(a.initial, b.initial);
}

bool operator==(const Directive &a, const Directive &b) {
    return a.kind == b.kind && a.label == b.label && a.state == b.state && a.op == b.op &&
           a.target == b.target && a.circuit == b.circuit && a.frames == b.frames &&
           a.seed == b.seed && a.trials == b.trials && a.expect == b.expect;
}

bool operator==(const ScenarioFile &a, const ScenarioFile &b) {
    return a.version == b.version && a.notes == b.notes && a.operators == b.operators &&
           a.states == b.states && a.matrices == b.matrices && a.contexts == b.contexts &&
           a.circuits == b.circuits && a.directives == b.directives;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Position {
    std::size_t line = 0;
    std::size_t column = 0;
};

Position position_at(std::string_view text, std::size_t offset) {
    Position p{1, 1};
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

// First bare true/false/null outside string literals. Only meaningful on
// text that already parsed as JSON.
std::optional<std::size_t> find_literal(std::string_view text) {
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            if (c == '\\') {
                ++i;
            } else if (c == '"') {
                in_string = false;
            }
        } else if (c == '"') {
            in_string = true;
        } else if (c == 't' || c == 'f' || c == 'n') {
            return i;
        }
    }
    return std::nullopt;
}

// Where a diagnostic points: the definition's description and a string in
// the text to locate (usually its label).
struct Where {
    std::string what;
    std::string anchor;
};

class Reader {
  public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::optional<std::size_t> find(const std::string &needle, std::size_t from = 0) const {
        if (needle.empty()) {
            return std::nullopt;
        }
        const std::string quoted = Json(needle).dump();
        const auto p = text_.find(quoted, from);
        if (p == std::string_view::npos) {
            return std::nullopt;
        }
        return p;
    }

    std::string locate(const std::string &message, const std::string &anchor,
                       const std::string &after = {}) const {
        std::size_t from = 0;
        if (const auto base = find(after)) {
            from = *base;
        }
        auto off = find(anchor, from);
        if (!off) {
            off = find(anchor);
        }
        if (!off) {
            return message;
        }
        const auto pos = position_at(text_, *off);
        return "line " + std::to_string(pos.line) + ", column " +
               std::to_string(pos.column) + ": " + message;
    }

    [[noreturn]] void fail(const Where &w, const std::string &message) const {
        const std::string full = w.what.empty() ? message : w.what + ": " + message;
        const auto off = find(w.anchor);
        if (!off) {
            throw ParseError(full, 0, 0);
        }
        const auto pos = position_at(text_, *off);
        throw ParseError(full, pos.line, pos.column);
    }

    [[noreturn]] void unresolved(const Where &w, const std::string &kind,
                                 const std::string &name) const {
        throw ResolutionError(
            locate(w.what + ": unknown " + kind + " '" + name + "'", name, w.anchor));
    }

    // -- typed accessors ----------------------------------------------------

    const Json &require(const Json &obj, const char *key, const Where &w) const {
        if (!obj.contains(key)) {
            fail(w, std::string("missing key '") + key + "'");
        }
        return obj.at(key);
    }

    void allow(const Json &obj, std::initializer_list<const char *> keys,
               const Where &w) const {
        for (const auto &item : obj.items()) {
            const bool known = std::any_of(keys.begin(), keys.end(), [&](const char *k) {
                return item.key() == k;
            });
            if (!known) {
                fail({w.what, item.key()}, "unknown key '" + item.key() + "'");
            }
        }
    }

    const Json &object(const Json &j, const std::string &what, const Where &w) const {
        if (!j.is_object()) {
            fail(w, what + " must be an object");
        }
        return j;
    }

    const Json &array(const Json &j, const std::string &what, const Where &w) const {
        if (!j.is_array()) {
            fail(w, what + " must be an array");
        }
        return j;
    }

    std::string string(const Json &j, const std::string &what, const Where &w) const {
        if (!j.is_string()) {
            fail(w, what + " must be a string");
        }
        return j.get<std::string>();
    }

    std::string label(const Json &obj, const std::string &kind) const {
        const Where w{kind, kind};
        const auto s = string(require(obj, "label", w), "label", w);
        if (s.empty()) {
            fail(w, "label must not be empty");
        }
        return s;
    }

    long long integer(const Json &j, const std::string &what, const Where &w) const {
        if (!j.is_number_integer()) {
            fail(w, what + " must be an integer");
        }
        if (j.is_number_unsigned() &&
            j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
            fail(w, what + " is out of range");
        }
        return j.get<long long>();
    }

    Eigen::Index positive(const Json &j, const std::string &what, const Where &w) const {
        const auto v = integer(j, what, w);
        if (v <= 0 || v > 4096) {
            fail(w, what + " must be a positive dimension");
        }
        return static_cast<Eigen::Index>(v);
    }

    std::uint64_t seed(const Json &j, const Where &w) const {
        if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                       j.get<long long>() < 0)) {
            fail(w, "seed must be a nonnegative integer");
        }
        return j.get<std::uint64_t>();
    }

    double number(const Json &j, const std::string &what, const Where &w) const {
        if (!j.is_number()) {
            fail(w, what + " must be a number");
        }
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            fail(w, what + " must be finite");
        }
        return v;
    }

    std::vector<double> numbers(const Json &j, const std::string &what,
                                const Where &w) const {
        std::vector<double> out;
        for (const auto &e : array(j, what, w)) {
            out.push_back(number(e, what + " entry", w));
        }
        return out;
    }

    Complex complex(const Json &j, const std::string &what, const Where &w) const {
        if (!j.is_array() || j.size() != 2) {
            fail(w, what + " must be a [re, im] pair");
        }
        return {number(j[0], what, w), number(j[1], what, w)};
    }

    ComplexVector vector(const Json &j, const std::string &what, const Where &w) const {
        array(j, what, w);
        if (j.empty()) {
            fail(w, what + " must not be empty");
        }
        ComplexVector v(static_cast<Eigen::Index>(j.size()));
        for (std::size_t i = 0; i < j.size(); ++i) {
            v(static_cast<Eigen::Index>(i)) = complex(j[i], what + " entry", w);
        }
        return v;
    }

    ComplexMatrix matrix(const Json &j, const std::string &what, const Where &w) const {
        array(j, what, w);
        if (j.empty()) {
            fail(w, what + " must not be empty");
        }
        const std::size_t cols = array(j[0], what + " row", w).size();
        if (cols == 0) {
            fail(w, what + " rows must not be empty");
        }
        ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
        for (std::size_t r = 0; r < j.size(); ++r) {
            const auto &row = array(j[r], what + " row", w);
            if (row.size() != cols) {
                fail(w, what + " row " + std::to_string(r) + " has " +
                            std::to_string(row.size()) + " entries, expected " +
                            std::to_string(cols));
            }
            for (std::size_t c = 0; c < cols; ++c) {
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    complex(row[c], what + " entry", w);
            }
        }
        return m;
    }

    Tensor tensor(const Json &j, const std::string &what, const Where &w) const {
        const bool is_vector = j.is_array() && !j.empty() && j[0].is_array() &&
                               !j[0].empty() && j[0][0].is_number();
        if (is_vector) {
            return vector(j, what, w);
        }
        return matrix(j, what, w);
    }

    std::vector<std::string> strings(const Json &j, const std::string &what,
                                     const Where &w) const {
        std::vector<std::string> out;
        for (const auto &e : array(j, what, w)) {
            out.push_back(string(e, what + " entry", w));
        }
        return out;
    }

  private:
    std::string_view text_;
};

std::optional<DirectiveKind> directive_kind(const std::string &name) {
    for (auto k : {DirectiveKind::verify, DirectiveKind::schmidt, DirectiveKind::factorize,
                   DirectiveKind::run, DirectiveKind::transform}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

template <typename T>
void unique_label(const Reader &r, std::set<std::string> &seen, const T &label,
                  const std::string &kind) {
    if (!seen.insert(label).second) {
        r.fail({kind + " '" + label + "'", label}, "duplicate label");
    }
}

OperatorDef read_operator(const Reader &r, const Json &j) {
    const Where w0{"operator", "operators"};
    r.object(j, "operator", w0);
    const auto label = r.label(j, "operator");
    const Where w{"operator '" + label + "'", label};
    r.allow(j, {"label", "d1", "d2", "twist"}, w);
    OperatorDef def;
    def.label = label;
    def.d1 = r.positive(r.require(j, "d1", w), "d1", w);
    def.d2 = r.positive(r.require(j, "d2", w), "d2", w);
    def.twist = r.matrix(r.require(j, "twist", w), "twist", w);
    const auto dim = def.d1 * def.d2;
    if (def.twist.rows() != dim || def.twist.cols() != dim) {
        r.fail(w, "twist is " + std::to_string(def.twist.rows()) + "x" +
                      std::to_string(def.twist.cols()) + ", expected " +
                      std::to_string(dim) + "x" + std::to_string(dim));
    }
    return def;
}

StateDef read_state(const Reader &r, const Json &j) {
    r.object(j, "state", {"state", "states"});
    const auto label = r.label(j, "state");
    const Where w{"state '" + label + "'", label};
    r.allow(j, {"label", "entries"}, w);
    return {label, r.vector(r.require(j, "entries", w), "entries", w)};
}

MatrixDef read_matrix(const Reader &r, const Json &j) {
    r.object(j, "matrix", {"matrix", "matrices"});
    const auto label = r.label(j, "matrix");
    const Where w{"matrix '" + label + "'", label};
    r.allow(j, {"label", "entries"}, w);
    return {label, r.matrix(r.require(j, "entries", w), "entries", w)};
}

ContextDef read_context(const Reader &r, const Json &j) {
    r.object(j, "context", {"context", "contexts"});
    const auto label = r.label(j, "context");
    const Where w{"context '" + label + "'", label};
    r.allow(j, {"label", "parts", "pairwise", "pairings"}, w);
    ContextDef def;
    def.label = label;
    for (const auto &p : r.array(r.require(j, "parts", w), "parts", w)) {
        r.object(p, "part", w);
        r.allow(p, {"name", "dim"}, w);
        def.parts.push_back({r.string(r.require(p, "name", w), "part name", w),
                             r.positive(r.require(p, "dim", w), "part dim", w)});
    }
    if (j.contains("pairwise")) {
        for (const auto &p : r.array(j.at("pairwise"), "pairwise", w)) {
            r.object(p, "pairwise entry", w);
            r.allow(p, {"first", "second", "operator"}, w);
            def.pairwise.push_back({r.string(r.require(p, "first", w), "first", w),
                                    r.string(r.require(p, "second", w), "second", w),
                                    r.string(r.require(p, "operator", w), "operator", w)});
        }
    }
    if (j.contains("pairings")) {
        for (const auto &p : r.array(j.at("pairings"), "pairings", w)) {
            r.object(p, "pairing", w);
            const auto plabel = r.label(p, "pairing");
            const Where pw{w.what + ", pairing '" + plabel + "'", plabel};
            r.allow(p, {"label", "first", "second", "assignment"}, pw);
            PairingDef pd;
            pd.label = plabel;
            pd.first = r.strings(r.require(p, "first", pw), "first", pw);
            pd.second = r.strings(r.require(p, "second", pw), "second", pw);
            if (p.contains("assignment")) {
                std::vector<Eigen::Index> a;
                for (const auto &e : r.array(p.at("assignment"), "assignment", pw)) {
                    const auto v = r.integer(e, "assignment entry", pw);
                    if (v < 0) {
                        r.fail(pw, "assignment entries must be nonnegative");
                    }
                    a.push_back(static_cast<Eigen::Index>(v));
                }
                pd.assignment = std::move(a);
            }
            def.pairings.push_back(std::move(pd));
        }
    }
    return def;
}

CircuitDef read_circuit(const Reader &r, const Json &j) {
    r.object(j, "circuit", {"circuit", "circuits"});
    const auto label = r.label(j, "circuit");
    const Where w{"circuit '" + label + "'", label};
    r.allow(j, {"label", "frames", "initial", "gates"}, w);
    CircuitDef def;
    def.label = label;
    for (const auto &f : r.array(r.require(j, "frames", w), "frames", w)) {
        r.object(f, "frame", w);
        r.allow(f, {"name", "operator", "context", "pairing"}, w);
        FrameDef fd;
        fd.name = r.string(r.require(f, "name", w), "frame name", w);
        if (f.contains("operator")) {
            if (f.contains("context") || f.contains("pairing")) {
                r.fail(w, "frame '" + fd.name + "' names both an operator and a pairing");
            }
            fd.op = r.string(f.at("operator"), "operator", w);
        } else {
            fd.context = r.string(r.require(f, "context", w), "context", w);
            fd.pairing = r.string(r.require(f, "pairing", w), "pairing", w);
        }
        def.frames.push_back(std::move(fd));
    }
    def.initial = r.string(r.require(j, "initial", w), "initial", w);
    if (j.contains("gates")) {
        for (const auto &g : r.array(j.at("gates"), "gates", w)) {
            r.object(g, "gate", w);
            r.allow(g, {"kind", "label", "frame", "factors", "condition"}, w);
            GateDef gd;
            if (g.contains("kind")) {
                const auto kind = r.string(g.at("kind"), "kind", w);
                if (kind == "unitary") {
                    gd.kind = GateKind::unitary;
                } else if (kind == "measurement") {
                    gd.kind = GateKind::measurement;
                } else {
                    r.fail({w.what, kind}, "gate kind must be 'unitary' or 'measurement'");
                }
            }
            if (g.contains("label")) {
                gd.label = r.string(g.at("label"), "gate label", w);
            }
            gd.frame = r.string(r.require(g, "frame", w), "frame", w);
            gd.factors = r.strings(r.require(g, "factors", w), "factors", w);
            if (gd.factors.empty() || gd.factors.size() > 2) {
                r.fail(w, "a gate has one or two factors");
            }
            if (g.contains("condition")) {
                const auto &c = r.object(g.at("condition"), "condition", w);
                r.allow(c, {"measurement", "outcome"}, w);
                const auto m = r.integer(r.require(c, "measurement", w), "measurement", w);
                if (m < 0) {
                    r.fail(w, "condition measurement must be nonnegative");
                }
                gd.condition = Condition{static_cast<std::size_t>(m),
                                         r.number(r.require(c, "outcome", w), "outcome", w)};
            }
            def.gates.push_back(std::move(gd));
        }
    }
    return def;
}

Expectation read_expectation(const Reader &r, const Json &j, DirectiveKind kind,
                             const Where &w) {
    r.object(j, "expect", w);
    Expectation e;
    switch (kind) {
    case DirectiveKind::verify:
        r.allow(j, {"status"}, w);
        if (j.contains("status")) {
            e.status = r.string(j.at("status"), "status", w);
            if (*e.status != "pass" && *e.status != "fail") {
                r.fail(w, "status must be 'pass' or 'fail'");
            }
        }
        break;
    case DirectiveKind::schmidt:
        r.allow(j, {"rank", "coefficients"}, w);
        if (j.contains("rank")) {
            e.rank = r.integer(j.at("rank"), "rank", w);
        }
        if (j.contains("coefficients")) {
            e.coefficients = r.numbers(j.at("coefficients"), "coefficients", w);
        }
        break;
    case DirectiveKind::factorize:
        r.allow(j, {"factorizable", "left", "right"}, w);
        if (j.contains("factorizable")) {
            e.factorizable = r.string(j.at("factorizable"), "factorizable", w);
            if (*e.factorizable != "yes" && *e.factorizable != "no") {
                r.fail(w, "factorizable must be 'yes' or 'no'");
            }
        }
        if (j.contains("left")) {
            e.left = r.tensor(j.at("left"), "left", w);
        }
        if (j.contains("right")) {
            e.right = r.tensor(j.at("right"), "right", w);
        }
        break;
    case DirectiveKind::run:
        r.allow(j, {"checkpoints", "final", "outcomes"}, w);
        if (j.contains("checkpoints")) {
            std::vector<ComplexVector> cps;
            for (const auto &c : r.array(j.at("checkpoints"), "checkpoints", w)) {
                cps.push_back(r.vector(c, "checkpoint", w));
            }
            e.checkpoints = std::move(cps);
        }
        if (j.contains("final")) {
            e.final_state = r.vector(j.at("final"), "final", w);
        }
        if (j.contains("outcomes")) {
            e.outcomes = r.numbers(j.at("outcomes"), "outcomes", w);
        }
        break;
    case DirectiveKind::transform:
        r.allow(j, {"initial"}, w);
        if (j.contains("initial")) {
            e.initial = r.vector(j.at("initial"), "initial", w);
        }
        break;
    }
    return e;
}

Directive read_directive(const Reader &r, const Json &j, std::size_t index) {
    const Where w0{"directive " + std::to_string(index), "directives"};
    r.object(j, "directive", w0);
    const auto command = r.string(r.require(j, "command", w0), "command", w0);
    const auto kind = directive_kind(command);
    if (!kind) {
        r.fail({w0.what, command}, "unknown command '" + command + "'");
    }
    Directive d;
    d.kind = *kind;
    if (j.contains("label")) {
        d.label = r.string(j.at("label"), "label", w0);
    }
    const Where w{"directive " + std::to_string(index) + " (" + command + ")",
                  d.label.empty() ? command : d.label};
    switch (d.kind) {
    case DirectiveKind::verify:
        r.allow(j, {"command", "label", "operator", "trials", "seed", "expect"}, w);
        d.op = r.string(r.require(j, "operator", w), "operator", w);
        if (j.contains("trials")) {
            d.trials = r.integer(j.at("trials"), "trials", w);
            if (*d.trials <= 0) {
                r.fail(w, "trials must be positive");
            }
        }
        break;
    case DirectiveKind::schmidt:
        r.allow(j, {"command", "label", "state", "operator", "expect"}, w);
        d.state = r.string(r.require(j, "state", w), "state", w);
        d.op = r.string(r.require(j, "operator", w), "operator", w);
        break;
    case DirectiveKind::factorize:
        r.allow(j, {"command", "label", "target", "operator", "expect"}, w);
        d.target = r.string(r.require(j, "target", w), "target", w);
        d.op = r.string(r.require(j, "operator", w), "operator", w);
        break;
    case DirectiveKind::run:
        r.allow(j, {"command", "label", "circuit", "seed", "expect"}, w);
        d.circuit = r.string(r.require(j, "circuit", w), "circuit", w);
        break;
    case DirectiveKind::transform:
        r.allow(j, {"command", "label", "circuit", "frames", "expect"}, w);
        d.circuit = r.string(r.require(j, "circuit", w), "circuit", w);
        for (const auto &item : r.object(r.require(j, "frames", w), "frames", w).items()) {
            d.frames[item.key()] = r.string(item.value(), "frame operator", w);
        }
        if (d.frames.empty()) {
            r.fail(w, "frames must name at least one frame");
        }
        if (d.label.empty()) {
            r.fail(w, "transform needs a label for the new circuit");
        }
        break;
    }
    if (j.contains("seed")) {
        d.seed = r.seed(j.at("seed"), w);
    }
    if (j.contains("expect")) {
        d.expect = read_expectation(r, j.at("expect"), d.kind, w);
    }
    return d;
}

// Checks that every reference names something defined earlier in the file
// (or produced by an earlier directive).
void resolve(const Reader &r, const ScenarioFile &s) {
    std::set<std::string> ops;
    std::set<std::string> states;
    std::set<std::string> matrices;
    std::map<std::string, std::set<std::string>> pairings; // context -> labels
    std::map<std::string, std::set<std::string>> frames;   // circuit -> names

    std::set<std::string> seen;
    for (const auto &o : s.operators) {
        unique_label(r, seen, o.label, "operator");
        ops.insert(o.label);
    }
    seen.clear();
    for (const auto &st : s.states) {
        unique_label(r, seen, st.label, "state");
        states.insert(st.label);
    }
    seen.clear();
    for (const auto &m : s.matrices) {
        unique_label(r, seen, m.label, "matrix");
        matrices.insert(m.label);
    }
    seen.clear();
    for (const auto &c : s.contexts) {
        unique_label(r, seen, c.label, "context");
        const Where w{"context '" + c.label + "'", c.label};
        std::set<std::string> parts;
        for (const auto &p : c.parts) {
            parts.insert(p.name);
        }
        for (const auto &p : c.pairwise) {
            if (!ops.count(p.op)) {
                r.unresolved(w, "operator", p.op);
            }
            for (const auto &name : {p.first, p.second}) {
                if (!parts.count(name)) {
                    r.unresolved(w, "part", name);
                }
            }
        }
        auto &labels = pairings[c.label];
        for (const auto &p : c.pairings) {
            if (!labels.insert(p.label).second) {
                r.fail({w.what, p.label}, "duplicate pairing '" + p.label + "'");
            }
            for (const auto *side : {&p.first, &p.second}) {
                for (const auto &name : *side) {
                    if (!parts.count(name)) {
                        r.unresolved(w, "part", name);
                    }
                }
            }
        }
    }
    seen.clear();
    for (const auto &c : s.circuits) {
        unique_label(r, seen, c.label, "circuit");
        const Where w{"circuit '" + c.label + "'", c.label};
        auto &names = frames[c.label];
        for (const auto &f : c.frames) {
            if (!names.insert(f.name).second) {
                r.fail({w.what, f.name}, "duplicate frame '" + f.name + "'");
            }
            if (!f.op.empty()) {
                if (!ops.count(f.op)) {
                    r.unresolved(w, "operator", f.op);
                }
            } else {
                const auto it = pairings.find(f.context);
                if (it == pairings.end()) {
                    r.unresolved(w, "context", f.context);
                }
                if (!it->second.count(f.pairing)) {
                    r.unresolved(w, "pairing", f.pairing);
                }
            }
        }
        if (!states.count(c.initial)) {
            r.unresolved(w, "state", c.initial);
        }
        for (const auto &g : c.gates) {
            if (!names.count(g.frame)) {
                r.unresolved(w, "frame", g.frame);
            }
            for (const auto &f : g.factors) {
                if (!matrices.count(f)) {
                    r.unresolved(w, "matrix", f);
                }
            }
        }
    }

    for (std::size_t i = 0; i < s.directives.size(); ++i) {
        const auto &d = s.directives[i];
        const Where w{"directive " + std::to_string(i) + " (" +
                          std::string(to_string(d.kind)) + ")",
                      d.label.empty() ? std::string(to_string(d.kind)) : d.label};
        const auto need_op = [&] {
            if (!ops.count(d.op)) {
                r.unresolved(w, "operator", d.op);
            }
        };
        switch (d.kind) {
        case DirectiveKind::verify:
            need_op();
            break;
        case DirectiveKind::schmidt:
            need_op();
            if (!states.count(d.state)) {
                r.unresolved(w, "state", d.state);
            }
            break;
        case DirectiveKind::factorize: {
            need_op();
            const bool is_state = states.count(d.target) > 0;
            if (!is_state && !matrices.count(d.target)) {
                r.unresolved(w, "state or matrix", d.target);
            }
            if (!d.label.empty()) {
                auto &into = is_state ? states : matrices;
                into.insert(d.label + ".left");
                into.insert(d.label + ".right");
            }
            break;
        }
        case DirectiveKind::run:
            if (!frames.count(d.circuit)) {
                r.unresolved(w, "circuit", d.circuit);
            }
            if (!d.label.empty()) {
                states.insert(d.label + ".final");
            }
            break;
        case DirectiveKind::transform: {
            const auto it = frames.find(d.circuit);
            if (it == frames.end()) {
                r.unresolved(w, "circuit", d.circuit);
            }
            for (const auto &[frame, op] : d.frames) {
                if (!it->second.count(frame)) {
                    r.unresolved(w, "frame", frame);
                }
                if (!ops.count(op)) {
                    r.unresolved(w, "operator", op);
                }
            }
            if (frames.count(d.label)) {
                r.fail(w, "circuit '" + d.label + "' already exists");
            }
            frames[d.label] = it->second;
            break;
        }
        }
    }
}

} // namespace

ScenarioFile parse_scenario(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        const auto byte = e.byte == 0 ? 0 : e.byte - 1;
        const auto pos = position_at(text, byte);
        std::string msg = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] parse error at ..." prefix.
        if (const auto p = msg.find(": "); p != std::string::npos) {
            msg = msg.substr(p + 2);
        }
        throw ParseError("malformed JSON: " + msg, pos.line, pos.column);
    }
    if (const auto lit = find_literal(text)) {
        const auto pos = position_at(text, *lit);
        throw ParseError("booleans and null are not allowed", pos.line, pos.column);
    }

    const Reader r(text);
    const Where top{"scenario", "version"};
    if (!root.is_object()) {
        throw ParseError("scenario must be a JSON object", 1, 1);
    }
    r.allow(root,
            {"version", "notes", "operators", "states", "matrices", "contexts", "circuits",
             "directives"},
            top);
    ScenarioFile s;
    s.version = r.integer(r.require(root, "version", top), "version", top);
    if (s.version != kScenarioVersion) {
        r.fail(top, "unsupported version " + std::to_string(s.version));
    }
    if (root.contains("notes")) {
        s.notes = r.string(root.at("notes"), "notes", top);
    }
    const auto section = [&](const char *key) -> const Json * {
        if (!root.contains(key)) {
            return nullptr;
        }
        return &r.array(root.at(key), key, {"scenario", key});
    };
    if (const auto *a = section("operators")) {
        for (const auto &j : *a) {
            s.operators.push_back(read_operator(r, j));
        }
    }
    if (const auto *a = section("states")) {
        for (const auto &j : *a) {
            s.states.push_back(read_state(r, j));
        }
    }
    if (const auto *a = section("matrices")) {
        for (const auto &j : *a) {
            s.matrices.push_back(read_matrix(r, j));
        }
    }
    if (const auto *a = section("contexts")) {
        for (const auto &j : *a) {
            s.contexts.push_back(read_context(r, j));
        }
    }
    if (const auto *a = section("circuits")) {
        for (const auto &j : *a) {
            s.circuits.push_back(read_circuit(r, j));
        }
    }
    if (const auto *a = section("directives")) {
        for (std::size_t i = 0; i < a->size(); ++i) {
            s.directives.push_back(read_directive(r, (*a)[i], i));
        }
    }
    resolve(r, s);
    return s;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexVector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(to_json(v(i)));
    }
    return out;
}

Json to_json(const ComplexMatrix &m) {
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const Tensor &t) {
    return std::visit([](const auto &v) { return to_json(v); }, t);
}

Json to_json(const Expectation &e) {
    Json j = Json::object();
    if (e.status) {
        j["status"] = *e.status;
    }
    if (e.rank) {
        j["rank"] = *e.rank;
    }
    if (e.coefficients) {
        j["coefficients"] = *e.coefficients;
    }
    if (e.factorizable) {
        j["factorizable"] = *e.factorizable;
    }
    if (e.left) {
        j["left"] = to_json(*e.left);
    }
    if (e.right) {
        j["right"] = to_json(*e.right);
    }
    if (e.checkpoints) {
        Json cps = Json::array();
        for (const auto &c : *e.checkpoints) {
            cps.push_back(to_json(c));
        }
        j["checkpoints"] = std::move(cps);
    }
    if (e.final_state) {
        j["final"] = to_json(*e.final_state);
    }
    if (e.outcomes) {
        j["outcomes"] = *e.outcomes;
    }
    if (e.initial) {
        j["initial"] = to_json(*e.initial);
    }
    return j;
}

Json to_json(const Directive &d) {
    Json j = Json::object();
    j["command"] = std::string(to_string(d.kind));
    if (!d.label.empty()) {
        j["label"] = d.label;
    }
    if (!d.state.empty()) {
        j["state"] = d.state;
    }
    if (!d.target.empty()) {
        j["target"] = d.target;
    }
    if (!d.op.empty()) {
        j["operator"] = d.op;
    }
    if (!d.circuit.empty()) {
        j["circuit"] = d.circuit;
    }
    if (!d.frames.empty()) {
        Json f = Json::object();
        for (const auto &[k, v] : d.frames) {
            f[k] = v;
        }
        j["frames"] = std::move(f);
    }
    if (d.trials) {
        j["trials"] = *d.trials;
    }
    if (d.seed) {
        j["seed"] = *d.seed;
    }
    if (d.expect) {
        j["expect"] = to_json(*d.expect);
    }
    return j;
}

} // namespace

std::string serialize_scenario(const ScenarioFile &s) {
    Json root = Json::object();
    root["version"] = s.version;
    if (!s.notes.empty()) {
        root["notes"] = s.notes;
    }
    if (!s.operators.empty()) {
        Json a = Json::array();
        for (const auto &o : s.operators) {
            a.push_back({{"label", o.label},
                         {"d1", static_cast<long long>(o.d1)},
                         {"d2", static_cast<long long>(o.d2)},
                         {"twist", to_json(o.twist)}});
        }
        root["operators"] = std::move(a);
    }
    if (!s.states.empty()) {
        Json a = Json::array();
        for (const auto &st : s.states) {
            a.push_back({{"label", st.label}, {"entries", to_json(st.entries)}});
        }
        root["states"] = std::move(a);
    }
    if (!s.matrices.empty()) {
        Json a = Json::array();
        for (const auto &m : s.matrices) {
            a.push_back({{"label", m.label}, {"entries", to_json(m.entries)}});
        }
        root["matrices"] = std::move(a);
    }
    if (!s.contexts.empty()) {
        Json a = Json::array();
        for (const auto &c : s.contexts) {
            Json parts = Json::array();
            for (const auto &p : c.parts) {
                parts.push_back({{"name", p.name}, {"dim", static_cast<long long>(p.dim)}});
            }
            Json pairwise = Json::array();
            for (const auto &p : c.pairwise) {
                pairwise.push_back(
                    {{"first", p.first}, {"second", p.second}, {"operator", p.op}});
            }
            Json pairings = Json::array();
            for (const auto &p : c.pairings) {
                Json pj = {{"label", p.label}, {"first", p.first}, {"second", p.second}};
                if (p.assignment) {
                    Json assignment = Json::array();
                    for (auto v : *p.assignment) {
                        assignment.push_back(static_cast<long long>(v));
                    }
                    pj["assignment"] = std::move(assignment);
                }
                pairings.push_back(std::move(pj));
            }
            Json cj = {{"label", c.label}, {"parts", std::move(parts)}};
            if (!c.pairwise.empty()) {
                cj["pairwise"] = std::move(pairwise);
            }
            if (!c.pairings.empty()) {
                cj["pairings"] = std::move(pairings);
            }
            a.push_back(std::move(cj));
        }
        root["contexts"] = std::move(a);
    }
    if (!s.circuits.empty()) {
        Json a = Json::array();
        for (const auto &c : s.circuits) {
            Json frames = Json::array();
            for (const auto &f : c.frames) {
                Json fj = {{"name", f.name}};
                if (!f.op.empty()) {
                    fj["operator"] = f.op;
                } else {
                    fj["context"] = f.context;
                    fj["pairing"] = f.pairing;
                }
                frames.push_back(std::move(fj));
            }
            Json gates = Json::array();
            for (const auto &g : c.gates) {
                Json gj = {{"kind", g.kind == GateKind::unitary ? "unitary" : "measurement"}};
                if (!g.label.empty()) {
                    gj["label"] = g.label;
                }
                gj["frame"] = g.frame;
                gj["factors"] = g.factors;
                if (g.condition) {
                    gj["condition"] = {
                        {"measurement", static_cast<long long>(g.condition->measurement)},
                        {"outcome", g.condition->outcome}};
                }
                gates.push_back(std::move(gj));
            }
            Json cj = {{"label", c.label}, {"frames", std::move(frames)}, {"initial", c.initial}};
            if (!c.gates.empty()) {
                cj["gates"] = std::move(gates);
            }
            a.push_back(std::move(cj));
        }
        root["circuits"] = std::move(a);
    }
    if (!s.directives.empty()) {
        Json a = Json::array();
        for (const auto &d : s.directives) {
            a.push_back(to_json(d));
        }
        root["directives"] = std::move(a);
    }
    return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Workspace and directives

namespace {

[[noreturn]] void rethrow_in(const Error &e, const std::string &where) {
    std::string message = e.what();
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    if (message.rfind(prefix, 0) == 0) {
        message = message.substr(prefix.size());
    }
    throw Error(e.code(), where + ": " + message);
}

} // namespace

Workspace build_workspace(const ScenarioFile &s) {
    Workspace ws;
    for (const auto &o : s.operators) {
        try {
            ws.operators.emplace(o.label, TensorProductOperator(TensorType(o.d1, o.d2),
                                                                o.twist, o.label));
        } catch (const Error &e) {
            rethrow_in(e, "operator '" + o.label + "'");
        }
    }
    for (const auto &st : s.states) {
        ws.states.emplace(st.label, st.entries);
    }
    for (const auto &m : s.matrices) {
        ws.matrices.emplace(m.label, m.entries);
    }
    for (const auto &c : s.contexts) {
        try {
            std::vector<PairwiseEntry> pairwise;
            for (const auto &p : c.pairwise) {
                pairwise.push_back({p.first, p.second, ws.operators.at(p.op)});
            }
            MultipartiteContext ctx(c.parts, std::move(pairwise));
            for (const auto &p : c.pairings) {
                if (p.assignment) {
                    ctx.add_pairing(p.label, p.first, p.second, *p.assignment);
                } else {
                    ctx.add_pairing(p.label, p.first, p.second);
                }
            }
            ws.contexts.emplace(c.label, std::move(ctx));
        } catch (const Error &e) {
            rethrow_in(e, "context '" + c.label + "'");
        }
    }
    for (const auto &c : s.circuits) {
        try {
            std::vector<Frame> frames;
            for (const auto &f : c.frames) {
                if (!f.op.empty()) {
                    frames.push_back({f.name, ws.operators.at(f.op)});
                } else {
                    frames.push_back(
                        {f.name, ws.contexts.at(f.context).pairing(f.pairing).op()});
                }
            }
            std::vector<Gate> gates;
            for (const auto &g : c.gates) {
                std::vector<ComplexMatrix> factors;
                for (const auto &f : g.factors) {
                    factors.push_back(ws.matrices.at(f));
                }
                gates.push_back({g.kind, g.label, g.frame, std::move(factors), g.condition});
            }
            ws.circuits.emplace(c.label, Circuit(c.label, std::move(frames),
                                                 ws.states.at(c.initial), std::move(gates)));
        } catch (const Error &e) {
            rethrow_in(e, "circuit '" + c.label + "'");
        }
    }
    return ws;
}

namespace {

constexpr long long kDefaultTrials = 100;

void expect_tensor(ReportSection &s, const std::string &what, const Tensor &want,
                   const Tensor &got, Tolerance tol) {
    if (want.index() != got.index()) {
        s.check(false, what + " has the wrong kind");
        return;
    }
    if (const auto *v = std::get_if<ComplexVector>(&want)) {
        const auto &g = std::get<ComplexVector>(got);
        s.check(v->size() == g.size() && approx_eq_phase(g, *v, tol), what + " mismatch");
        return;
    }
    const auto &m = std::get<ComplexMatrix>(want);
    const auto &g = std::get<ComplexMatrix>(got);
    s.check(m.rows() == g.rows() && m.cols() == g.cols() && max_abs_diff(m, g) <= tol.eps,
            what + " mismatch");
}

void run_verify(const Directive &d, Workspace &ws, ReportSection &s, std::uint64_t seed,
                Tolerance tol) {
    const auto &op = ws.operators.at(d.op);
    const auto trials = static_cast<std::size_t>(d.trials.value_or(kDefaultTrials));
    const auto axioms = verify_axioms(op, trials, seed, tol);
    s.add("operator", op.label())
        .add("type", to_string(op.type()))
        .add("trials", static_cast<long long>(trials))
        .add("bilinearity_residual", axioms.bilinearity_residual)
        .add("norm_residual", axioms.norm_residual)
        .add("axioms", std::string(axioms.passed ? "pass" : "fail"));
    bool passed = axioms.passed;
    for (const auto &[label, other] : ws.operators) {
        if (label == d.op || other.type() != op.type()) {
            continue;
        }
        const auto rel = verify_relation(op, other, trials, seed);
        s.add("relation[" + label + "].max_residual", rel.max_residual);
        passed = passed && rel.passed;
    }
    s.add("status", std::string(passed ? "pass" : "fail"));
    const std::string want = d.expect && d.expect->status ? *d.expect->status : "pass";
    s.check(passed == (want == "pass"), "expected " + want);
}

void run_schmidt(const Directive &d, Workspace &ws, ReportSection &s, Tolerance tol) {
    const auto sd = schmidt(ws.states.at(d.state), ws.operators.at(d.op));
    s.add("state", d.state)
        .add("operator", d.op)
        .add("rank", static_cast<long long>(sd.rank))
        .add("coefficients", sd.coefficients);
    for (std::size_t k = 0; k < sd.rank; ++k) {
        s.add("left[" + std::to_string(k) + "]", sd.left_vectors[k]);
        s.add("right[" + std::to_string(k) + "]", sd.right_vectors[k]);
    }
    if (!d.expect) {
        return;
    }
    const auto &e = *d.expect;
    if (e.rank) {
        s.check(static_cast<long long>(sd.rank) == *e.rank,
                "rank " + std::to_string(sd.rank) + ", expected " + std::to_string(*e.rank));
    }
    if (e.coefficients) {
        const auto &want = *e.coefficients;
        bool ok = want.size() <= static_cast<std::size_t>(sd.coefficients.size());
        for (Eigen::Index k = 0; ok && k < sd.coefficients.size(); ++k) {
            const auto uk = static_cast<std::size_t>(k);
            const double w = uk < want.size() ? want[uk] : 0.0;
            ok = std::abs(sd.coefficients(k) - w) <= tol.eps;
        }
        s.check(ok, "coefficients mismatch");
    }
}

void run_factorize(const Directive &d, Workspace &ws, ReportSection &s, Tolerance tol) {
    const auto &op = ws.operators.at(d.op);
    s.add("target", d.target).add("operator", d.op);
    std::optional<std::pair<Tensor, Tensor>> factors;
    if (const auto it = ws.states.find(d.target); it != ws.states.end()) {
        if (const auto f = factorize_state(it->second, op)) {
            s.add("residual", (op.apply(f->first, f->second) - it->second).norm());
            factors.emplace(f->first, f->second);
            if (!d.label.empty()) {
                ws.states.insert_or_assign(d.label + ".left", f->first);
                ws.states.insert_or_assign(d.label + ".right", f->second);
            }
        }
    } else if (const auto f = factorize_operator(ws.matrices.at(d.target), op)) {
        s.add("residual", f->residual);
        factors.emplace(f->left, f->right);
        if (!d.label.empty()) {
            ws.matrices.insert_or_assign(d.label + ".left", f->left);
            ws.matrices.insert_or_assign(d.label + ".right", f->right);
        }
    }
    s.add("factorizable", std::string(factors ? "yes" : "no"));
    if (factors) {
        const auto add = [&](const char *key, const Tensor &t) {
            std::visit([&](const auto &v) { s.add(key, v); }, t);
        };
        add("left", factors->first);
        add("right", factors->second);
    }
    if (!d.expect) {
        return;
    }
    const auto &e = *d.expect;
    if (e.factorizable) {
        s.check((*e.factorizable == "yes") == factors.has_value(),
                "expected factorizable=" + *e.factorizable);
    }
    if (e.left || e.right) {
        if (!factors) {
            s.check(false, "no factors to compare");
            return;
        }
        if (e.left) {
            expect_tensor(s, "left", *e.left, factors->first, tol);
        }
        if (e.right) {
            expect_tensor(s, "right", *e.right, factors->second, tol);
        }
    }
}

void run_circuit(const Directive &d, Workspace &ws, ReportSection &s, std::uint64_t seed,
                 Tolerance tol) {
    const auto &c = ws.circuits.at(d.circuit);
    const auto trace = simulate(c, seed, tol);
    s.add("circuit", d.circuit).add("seed", static_cast<long long>(seed));
    for (std::size_t k = 0; k < trace.checkpoints.size(); ++k) {
        const auto key = "checkpoint[" + std::to_string(k) + "]";
        s.add(key + ".label", trace.checkpoints[k].label);
        s.add(key + ".state", trace.checkpoints[k].state);
    }
    std::vector<double> outcomes;
    for (std::size_t k = 0; k < trace.measurement_records.size(); ++k) {
        const auto &rec = trace.measurement_records[k];
        const auto key = "measurement[" + std::to_string(k) + "]";
        s.add(key + ".gate", rec.gate)
            .add(key + ".outcome", rec.result.outcome)
            .add(key + ".probability", rec.result.probability);
        outcomes.push_back(rec.result.outcome);
    }
    const ComplexVector &final_state = trace.checkpoints.back().state;
    s.add("final", final_state);
    if (!d.label.empty()) {
        ws.states.insert_or_assign(d.label + ".final", final_state);
    }
    if (!d.expect) {
        return;
    }
    const auto &e = *d.expect;
    if (e.checkpoints) {
        s.check(e.checkpoints->size() <= trace.checkpoints.size(), "too many checkpoints");
        for (std::size_t k = 0; k < e.checkpoints->size() && k < trace.checkpoints.size();
             ++k) {
            const auto &want = (*e.checkpoints)[k];
            const auto &got = trace.checkpoints[k].state;
            s.check(want.size() == got.size() && approx_eq_phase(got, want, tol),
                    "checkpoint " + std::to_string(k) + " mismatch");
        }
    }
    if (e.final_state) {
        s.check(e.final_state->size() == final_state.size() &&
                    approx_eq_phase(final_state, *e.final_state, tol),
                "final state mismatch");
    }
    if (e.outcomes) {
        bool ok = e.outcomes->size() == outcomes.size();
        for (std::size_t k = 0; ok && k < outcomes.size(); ++k) {
            ok = std::abs(outcomes[k] - (*e.outcomes)[k]) <= tol.eps;
        }
        s.check(ok, "outcomes mismatch");
    }
}

void run_transform(const Directive &d, Workspace &ws, ReportSection &s, Tolerance tol) {
    const auto &c = ws.circuits.at(d.circuit);
    std::map<std::string, TensorProductOperator> ops;
    for (const auto &[frame, op] : d.frames) {
        ops.emplace(frame, ws.operators.at(op));
        s.add("frame[" + frame + "]", op);
    }
    const Circuit moved = transform_circuit(c, ops);
    Circuit renamed(d.label, moved.frames(), moved.initial_state(), moved.gates());
    s.add("circuit", d.label).add("initial", renamed.initial_state());
    for (std::size_t k = 0; k < renamed.gates().size(); ++k) {
        s.add("gate[" + std::to_string(k) + "]",
              renamed.effective_matrix(renamed.gates()[k]));
    }
    if (d.expect && d.expect->initial) {
        const auto &want = *d.expect->initial;
        s.check(want.size() == renamed.initial_state().size() &&
                    approx_eq_phase(renamed.initial_state(), want, tol),
                "initial state mismatch");
    }
    ws.circuits.insert_or_assign(d.label, std::move(renamed));
}

} // namespace

Report run_directives(const ScenarioFile &s, Workspace &ws, const RunOptions &options) {
    Report report;
    for (std::size_t i = 0; i < s.directives.size(); ++i) {
        const auto &d = s.directives[i];
        const std::string name =
            d.label.empty() ? std::string(to_string(d.kind)) + "." + std::to_string(i)
                            : d.label;
        auto &section = report.section(name);
        const auto seed = d.seed.value_or(options.seed);
        try {
            switch (d.kind) {
            case DirectiveKind::verify:
                run_verify(d, ws, section, seed, options.tolerance);
                break;
            case DirectiveKind::schmidt:
                run_schmidt(d, ws, section, options.tolerance);
                break;
            case DirectiveKind::factorize:
                run_factorize(d, ws, section, options.tolerance);
                break;
            case DirectiveKind::run:
                run_circuit(d, ws, section, seed, options.tolerance);
                break;
            case DirectiveKind::transform:
                run_transform(d, ws, section, options.tolerance);
                break;
            }
        } catch (const Error &e) {
            rethrow_in(e, "directive " + std::to_string(i) + " (" + name + ")");
        }
    }
    return report;
}

ScenarioFile circuit_to_scenario(const Circuit &c, const std::string &label) {
    ScenarioFile s;
    s.notes = "circuit '" + label + "'";
    CircuitDef def;
    def.label = label;
    for (const auto &f : c.frames()) {
        const std::string op_label = label + "/" + f.name;
        s.operators.push_back({op_label, f.op.type().d1, f.op.type().d2, f.op.twist()});
        def.frames.push_back({f.name, op_label, {}, {}});
    }
    def.initial = label + "/initial";
    s.states.push_back({def.initial, c.initial_state()});
    for (std::size_t k = 0; k < c.gates().size(); ++k) {
        const auto &g = c.gates()[k];
        GateDef gd{g.kind, g.label, g.frame, {}, g.condition};
        for (std::size_t f = 0; f < g.factors.size(); ++f) {
            const std::string m_label =
                label + "/gate" + std::to_string(k) + "/factor" + std::to_string(f);
            s.matrices.push_back({m_label, g.factors[f]});
            gd.factors.push_back(m_label);
        }
        def.gates.push_back(std::move(gd));
    }
    s.circuits.push_back(std::move(def));
    return s;
}

} // namespace tensorctx
