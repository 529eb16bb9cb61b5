// Copyright 2026 The phasekit Authors
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

#include "phasekit/oracles.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "phasekit/errors.hpp"
#include "phasekit/rng.hpp"

namespace phasekit {

FunctionTable::FunctionTable(std::size_t modulus, std::vector<std::size_t> values)
    : modulus_(modulus), values_(std::move(values)) {
    if (modulus_ == 0) {
        throw std::domain_error("function table modulus must be >= 1");
    }
    if (values_.empty()) {
        throw std::domain_error("function table needs at least one entry");
    }
    for (std::size_t x = 0; x < values_.size(); ++x) {
        if (values_[x] >= modulus_) {
            throw std::domain_error("f(" + std::to_string(x) + ") = " + std::to_string(values_[x]) +
                                    " is not below modulus " + std::to_string(modulus_));
        }
    }
}

RealFunctionTable::RealFunctionTable(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::domain_error("function table needs at least one entry");
    }
    for (std::size_t x = 0; x < values_.size(); ++x) {
        if (!(values_[x] >= 0.0 && values_[x] < 1.0)) {
            throw std::domain_error("f(" + std::to_string(x) + ") is outside [0, 1)");
        }
    }
}

StateVector apply_oracle(const StateVector &state, std::string_view control, std::string_view ancilla,
                         const FunctionTable &f, OracleSign sign) {
    const auto &layout = state.layout();
    const std::size_t cpos = layout.position(control);
    const std::size_t apos = layout.position(ancilla);
    if (cpos == apos) {
        throw std::domain_error("control and ancilla must be different segments");
    }
    const std::size_t n = layout.segment(cpos).dim;
    const std::size_t m = layout.segment(apos).dim;
    if (n != f.domain_size() || m != f.modulus()) {
        throw std::domain_error("oracle table is " + std::to_string(f.domain_size()) + " -> Z_" +
                                std::to_string(f.modulus()) + " but segments have dims " + std::to_string(n) + " and " +
                                std::to_string(m));
    }
    const std::size_t cstride = layout.stride(cpos);
    const std::size_t astride = layout.stride(apos);
    // Per control value, the ancilla shift in [0, M).
    std::vector<std::size_t> shift(n);
    for (std::size_t x = 0; x < n; ++x) {
        shift[x] = sign == OracleSign::Forward ? f(x) : (m - f(x)) % m;
    }
    const auto in = state.amplitudes();
    std::vector<Complex> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        const std::size_t x = (i / cstride) % n;
        const std::size_t y = (i / astride) % m;
        std::size_t y2 = y + shift[x];
        if (y2 >= m) {
            y2 -= m;
        }
        out[i + y2 * astride - y * astride] = in[i];
    }
    return StateVector(layout, std::move(out));
}

Matrix oracle_matrix(const RegisterLayout &layout, std::string_view control, std::string_view ancilla,
                     const FunctionTable &f, OracleSign sign) {
    const std::size_t dim = layout.total_dim();
    if (dim > 4096) {
        throw std::domain_error("oracle_matrix is for cross-checks on layouts of at most 4096 states");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix u = Matrix::Zero(d, d);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Complex> e(dim);
        e[col] = 1.0;
        const auto out = apply_oracle(StateVector(layout, std::move(e)), control, ancilla, f, sign);
        for (std::size_t row = 0; row < dim; ++row) {
            u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = out[row];
        }
    }
    return u;
}

FunctionTable quantize(const RealFunctionTable &rf, unsigned bits) {
    if (bits == 0 || bits > 62) {
        throw std::domain_error("quantize needs 1 <= bits <= 62");
    }
    const std::size_t m = std::size_t{1} << bits;
    const double scale = std::ldexp(1.0, static_cast<int>(bits));
    std::vector<std::size_t> values(rf.domain_size());
    for (std::size_t x = 0; x < values.size(); ++x) {
        const auto q = static_cast<std::size_t>(std::floor(rf(x) * scale));
        values[x] = q >= m ? m - 1 : q;
    }
    return FunctionTable(m, std::move(values));
}

FunctionTable delta_table(std::size_t domain_size, std::size_t marked) {
    if (marked >= domain_size) {
        throw std::domain_error("delta_table: marked index " + std::to_string(marked) + " not below N = " +
                                std::to_string(domain_size));
    }
    std::vector<std::size_t> values(domain_size, 0);
    values[marked] = 1;
    return FunctionTable(2, std::move(values));
}

FunctionTable random_table(std::size_t domain_size, std::size_t modulus, std::uint64_t seed) {
    if (domain_size == 0 || modulus == 0) {
        throw std::domain_error("random_table needs N, M >= 1");
    }
    Rng rng(seed);
    std::vector<std::size_t> values(domain_size);
    for (auto &v : values) {
        v = static_cast<std::size_t>(rng.below(modulus));
    }
    return FunctionTable(modulus, std::move(values));
}

RealFunctionTable random_real_table(std::size_t domain_size, std::uint64_t seed) {
    if (domain_size == 0) {
        throw std::domain_error("random_real_table needs N >= 1");
    }
    Rng rng(seed);
    std::vector<double> values(domain_size);
    for (auto &v : values) {
        v = rng.uniform();
    }
    return RealFunctionTable(std::move(values));
}

// ---------------------------------------------------------------- text format

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const std::size_t nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        std::size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) {
                ++pos;
            }
            const std::size_t start = pos;
            while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) {
                ++pos;
            }
            if (pos > start) {
                line.fields.push_back(raw.substr(start, pos - start));
            }
        }
        if (!line.fields.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

std::size_t parse_count(std::string_view field, std::size_t line, const char *what) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                                   std::string(field) + "'");
    }
    return v;
}

double parse_real(std::string_view field, std::size_t line) {
    // from_chars for double is missing from older libstdc++; strtod on a copy is fine here.
    const std::string copy(field);
    char *end = nullptr;
    const double v = std::strtod(copy.c_str(), &end);
    if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(v)) {
        throw ParseError(line, "expected a decimal value, got '" + copy + "'");
    }
    return v;
}

struct Header {
    std::size_t domain_size;
    std::optional<std::size_t> modulus;  // empty for "real"
};

Header parse_header(const std::vector<Line> &lines) {
    if (lines.empty()) {
        throw ParseError(0, "empty function table");
    }
    const auto &h = lines.front();
    if (h.fields.size() != 2) {
        throw ParseError(h.number, "header must be 'N M' or 'N real'");
    }
    Header out{parse_count(h.fields[0], h.number, "N"), std::nullopt};
    if (out.domain_size == 0) {
        throw ParseError(h.number, "N must be >= 1");
    }
    if (h.fields[1] != "real") {
        out.modulus = parse_count(h.fields[1], h.number, "M");
        if (*out.modulus == 0) {
            throw ParseError(h.number, "M must be >= 1");
        }
    }
    return out;
}

// Validates the row structure shared by both table kinds and calls `store(x, field, line)`.
template <typename Store>
void parse_rows(const std::vector<Line> &lines, std::size_t domain_size, Store store) {
    std::vector<std::size_t> seen_at(domain_size, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto &line = lines[i];
        if (line.fields.size() != 2) {
            throw ParseError(line.number, "expected 'x value'");
        }
        const std::size_t x = parse_count(line.fields[0], line.number, "x");
        if (x >= domain_size) {
            throw ParseError(line.number, "x = " + std::to_string(x) + " is not below N = " + std::to_string(domain_size));
        }
        if (seen_at[x] != 0) {
            throw ParseError(line.number,
                             "duplicate row for x = " + std::to_string(x) + " (first on line " +
                                 std::to_string(seen_at[x]) + ")");
        }
        seen_at[x] = line.number;
        store(x, line.fields[1], line.number);
    }
    for (std::size_t x = 0; x < domain_size; ++x) {
        if (seen_at[x] == 0) {
            throw ParseError(lines.back().number, "missing row for x = " + std::to_string(x));
        }
    }
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

FunctionTable parse_table(std::string_view text) {
    const auto lines = tokenize(text);
    const auto header = parse_header(lines);
    if (!header.modulus) {
        throw ParseError(lines.front().number, "real-valued table where an integer table was expected");
    }
    const std::size_t m = *header.modulus;
    std::vector<std::size_t> values(header.domain_size);
    parse_rows(lines, header.domain_size, [&](std::size_t x, std::string_view field, std::size_t line) {
        const std::size_t y = parse_count(field, line, "y");
        if (y >= m) {
            throw ParseError(line, "value " + std::to_string(y) + " is not below M = " + std::to_string(m));
        }
        values[x] = y;
    });
    return FunctionTable(m, std::move(values));
}

RealFunctionTable parse_real_table(std::string_view text) {
    const auto lines = tokenize(text);
    const auto header = parse_header(lines);
    if (header.modulus) {
        throw ParseError(lines.front().number, "header must be 'N real' for a real-valued table");
    }
    std::vector<double> values(header.domain_size);
    parse_rows(lines, header.domain_size, [&](std::size_t x, std::string_view field, std::size_t line) {
        const double v = parse_real(field, line);
        if (!(v >= 0.0 && v < 1.0)) {
            throw ParseError(line, "value " + std::string(field) + " is outside [0, 1)");
        }
        values[x] = v;
    });
    return RealFunctionTable(std::move(values));
}

std::string serialize_table(const FunctionTable &f) {
    std::ostringstream out;
    out << f.domain_size() << ' ' << f.modulus() << '\n';
    for (std::size_t x = 0; x < f.domain_size(); ++x) {
        out << x << ' ' << f(x) << '\n';
    }
    return out.str();
}

std::string serialize_table(const RealFunctionTable &f) {
    std::ostringstream out;
    out << f.domain_size() << " real\n";
    for (std::size_t x = 0; x < f.domain_size(); ++x) {
        out << x << ' ' << format_real(f(x)) << '\n';
    }
    return out.str();
}

FunctionTable load_table(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, path.string() + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_table(buf.str());
    } catch (const ParseError &e) {
        throw e.in_file(path.string());
    }
}

}  // namespace phasekit
