/*
 * Copyright (c) 2026, the lomac authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lomac/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lomac {

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return {buf, p};
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

bool is_missing(const std::string& field) {
    std::string t;
    for (char c : field)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    return t.empty() || t == "NaN" || t == "nan" || t == "NA";
}

double parse_value(const std::string& field, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        double v = std::stod(field, &pos);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("matrix CSV: unparsable field '" + field + "' on line " +
                                    std::to_string(line_no));
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return in;
}

}  // namespace

MaskedMatrix read_matrix_csv(std::istream& in, bool skip_header) {
    std::vector<std::vector<double>> values;
    std::vector<std::vector<bool>> mask;
    std::string line;
    std::size_t line_no = 0;
    if (skip_header && std::getline(in, line)) ++line_no;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        auto fields = split_fields(line);
        std::vector<double> row;
        std::vector<bool> obs;
        for (const auto& f : fields) {
            if (is_missing(f)) {
                row.push_back(0.0);
                obs.push_back(false);
            } else {
                row.push_back(parse_value(f, line_no));
                obs.push_back(true);
            }
        }
        if (!values.empty() && row.size() != values.front().size())
            throw std::invalid_argument("matrix CSV: ragged row on line " +
                                        std::to_string(line_no));
        values.push_back(std::move(row));
        mask.push_back(std::move(obs));
    }
    if (values.empty()) throw std::invalid_argument("matrix CSV: no rows");

    const Index m = static_cast<Index>(values.size());
    const Index n = static_cast<Index>(values.front().size());
    Eigen::MatrixXd v(m, n);
    Mask obs(m, n);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) {
            v(i, j) = values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            obs(i, j) = mask[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    return {std::move(v), std::move(obs)};
}

MaskedMatrix read_matrix_csv_file(const std::string& path, bool skip_header) {
    auto in = open_or_throw(path);
    return read_matrix_csv(in, skip_header);
}

void write_matrix_csv(std::ostream& out, const MaskedMatrix& m) {
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            if (m.observed(i, j)) out << format_double(m.value(i, j));
        }
        out << '\n';
    }
}

void write_matrix_csv_file(const std::string& path, const MaskedMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    write_matrix_csv(out, m);
}

void write_dense_csv(std::ostream& out, const Eigen::MatrixXd& m) {
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

void write_dense_csv_file(const std::string& path, const Eigen::MatrixXd& m) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    write_dense_csv(out, m);
}

Mask read_mask_csv(std::istream& in) {
    auto m = read_matrix_csv(in, false);
    Mask mask(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) mask(i, j) = m.value(i, j) != 0.0;
    return mask;
}

Mask read_mask_csv_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_mask_csv(in);
}

void write_mask_csv(std::ostream& out, const Mask& mask) {
    for (Index i = 0; i < mask.rows(); ++i) {
        for (Index j = 0; j < mask.cols(); ++j) {
            if (j) out << ',';
            out << (mask(i, j) ? '1' : '0');
        }
        out << '\n';
    }
}

void write_mask_csv_file(const std::string& path, const Mask& mask) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    write_mask_csv(out, mask);
}

}  // namespace lomac
