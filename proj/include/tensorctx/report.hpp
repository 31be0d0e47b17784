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

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "tensorctx/numerics.hpp"

namespace tensorctx {

enum class OutputFormat { text, machine };

/// Parses "text" or "machine".
std::optional<OutputFormat> parse_output_format(const std::string &name);

using ReportValue = std::variant<std::string, long long, double, Complex, RealVector,
                                 ComplexVector, ComplexMatrix>;

struct ReportItem {
    std::string key;
    ReportValue value;
};

/// Output of one directive or demo step. `passed` is set only when the step
/// carried an expectation.
struct ReportSection {
    std::string name;
    std::vector<ReportItem> items;
    std::optional<bool> passed;
    std::string detail;

    ReportSection &add(std::string key, ReportValue value);
    /// Folds a check into `passed` (a single failure makes it false).
    ReportSection &check(bool ok, const std::string &what = {});
};

struct Report {
    std::vector<ReportSection> sections;

    ReportSection &section(std::string name);
    [[nodiscard]] bool ok() const noexcept;
    /// 0 when every section with an expectation passed, 1 otherwise.
    [[nodiscard]] int exit_status() const noexcept;
};

/// re+imi with 17 significant digits, e.g. "0.70710678118654757+0i".
std::string format_complex_machine(Complex z);
std::string format_real_machine(double x);

void write_report(std::ostream &out, const Report &report, OutputFormat format);

} // namespace tensorctx
