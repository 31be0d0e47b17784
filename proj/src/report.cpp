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

#include "tensorctx/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace tensorctx {

std::optional<OutputFormat> parse_output_format(const std::string &name) {
    if (name == "text") {
        return OutputFormat::text;
    }
    if (name == "machine") {
        return OutputFormat::machine;
    }
    return std::nullopt;
}

ReportSection &ReportSection::add(std::string key, ReportValue value) {
    items.push_back({std::move(key), std::move(value)});
    return *this;
}

ReportSection &ReportSection::check(bool ok, const std::string &what) {
    passed = passed.value_or(true) && ok;
    if (!ok && !what.empty()) {
        detail += detail.empty() ? what : "; " + what;
    }
    return *this;
}

ReportSection &Report::section(std::string name) {
    sections.push_back({std::move(name), {}, std::nullopt, {}});
    return sections.back();
}

bool Report::ok() const noexcept {
    for (const auto &s : sections) {
        if (s.passed && !*s.passed) {
            return false;
        }
    }
    return true;
}

int Report::exit_status() const noexcept { return ok() ? 0 : 1; }

std::string format_real_machine(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex_machine(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

namespace {

// Display rounding only; values are never compared in this form.
std::string display(double x) {
    if (std::abs(x) < 5e-13) {
        x = 0.0;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string display(Complex z) {
    const bool re0 = std::abs(z.real()) < 5e-13;
    const bool im0 = std::abs(z.imag()) < 5e-13;
    if (im0) {
        return display(z.real());
    }
    if (re0) {
        return display(z.imag()) + "i";
    }
    std::string im = display(z.imag());
    if (im.front() != '-') {
        im = "+" + im;
    }
    return display(z.real()) + im + "i";
}

template <typename Vec> std::string display_list(const Vec &v) {
    std::string s = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + display(v(i));
    }
    return s + "]";
}

void write_text(std::ostream &out, const ReportSection &s) {
    out << "== " << s.name << " ==\n";
    for (const auto &item : s.items) {
        out << "  " << item.key << ": ";
        std::visit(
            [&](const auto &v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::string>) {
                    out << v << '\n';
                } else if constexpr (std::is_same_v<T, long long>) {
                    out << v << '\n';
                } else if constexpr (std::is_same_v<T, double> ||
                                     std::is_same_v<T, Complex>) {
                    out << display(v) << '\n';
                } else if constexpr (std::is_same_v<T, ComplexMatrix>) {
                    out << '\n';
                    for (Eigen::Index r = 0; r < v.rows(); ++r) {
                        out << "    " << display_list(ComplexVector(v.row(r).transpose()))
                            << '\n';
                    }
                } else {
                    out << display_list(v) << '\n';
                }
            },
            item.value);
    }
    if (s.passed) {
        out << "  result: " << (*s.passed ? "PASS" : "FAIL");
        if (!s.detail.empty()) {
            out << " (" << s.detail << ")";
        }
        out << '\n';
    }
}

void write_machine(std::ostream &out, const ReportSection &s) {
    const std::string prefix = s.name + ".";
    for (const auto &item : s.items) {
        const std::string key = prefix + item.key;
        std::visit(
            [&](const auto &v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::string>) {
                    out << key << '=' << v << '\n';
                } else if constexpr (std::is_same_v<T, long long>) {
                    out << key << '=' << v << '\n';
                } else if constexpr (std::is_same_v<T, double>) {
                    out << key << '=' << format_real_machine(v) << '\n';
                } else if constexpr (std::is_same_v<T, Complex>) {
                    out << key << '=' << format_complex_machine(v) << '\n';
                } else if constexpr (std::is_same_v<T, RealVector>) {
                    for (Eigen::Index i = 0; i < v.size(); ++i) {
                        out << key << '[' << i << "]=" << format_real_machine(v(i))
                            << '\n';
                    }
                } else if constexpr (std::is_same_v<T, ComplexVector>) {
                    for (Eigen::Index i = 0; i < v.size(); ++i) {
                        out << key << '[' << i << "]=" << format_complex_machine(v(i))
                            << '\n';
                    }
                } else {
                    for (Eigen::Index r = 0; r < v.rows(); ++r) {
                        for (Eigen::Index c = 0; c < v.cols(); ++c) {
                            out << key << '[' << r << "][" << c
                                << "]=" << format_complex_machine(v(r, c)) << '\n';
                        }
                    }
                }
            },
            item.value);
    }
    if (s.passed) {
        out << prefix << "status=" << (*s.passed ? "pass" : "fail") << '\n';
        if (!s.detail.empty()) {
            out << prefix << "detail=" << s.detail << '\n';
        }
    }
}

} // namespace

void write_report(std::ostream &out, const Report &report, OutputFormat format) {
    for (const auto &s : report.sections) {
        if (format == OutputFormat::text) {
            write_text(out, s);
        } else {
            write_machine(out, s);
        }
    }
    if (format == OutputFormat::machine) {
        out << "exit_status=" << report.exit_status() << '\n';
    }
}

} // namespace tensorctx
