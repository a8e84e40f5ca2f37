// Copyright 2026 The eaqecc Authors
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

#include "eaqecc/matrix.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eaqecc {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t size) {
    Matrix m(std::move(field), size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m.set(i, i, 1);
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t.set(c, r, at(r, c));
        }
    }
    return t;
}

Matrix Matrix::conjugate(std::uint64_t power) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = field_->pow_raw(data_[i], power);
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    return multiply_transposed(*this, other.transpose());
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
    Matrix out(field_, rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j] >= cols_) {
                throw std::out_of_range("select_columns: column index out of range");
            }
            out.set(r, j, at(r, columns[j]));
        }
    }
    return out;
}

bool Matrix::is_zero() const {
    for (auto v : data_) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

bool Matrix::operator==(const Matrix& other) const {
    return field_->order() == other.field_->order() && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) {
            out << (c ? "," : "") << at(r, c);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || a.field()->order() != b.field()->order()) {
        throw std::invalid_argument("multiply_transposed: shape or field mismatch");
    }
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows(), b.rows());
    const std::size_t width = a.cols();
    auto logs = f.log_table();
    auto exps = f.exp_table();
    if (f.characteristic() == 2 && !logs.empty()) {
        // Characteristic 2 with tables: sum of antilogs, zero entries skipped.
        constexpr std::uint32_t kZero = 0xffffffffu;
        auto to_logs = [&](const Matrix& m) {
            std::vector<std::uint32_t> out(m.rows() * width);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                auto row = m.row(r);
                for (std::size_t c = 0; c < width; ++c) {
                    out[r * width + c] = row[c] == 0 ? kZero : logs[row[c]];
                }
            }
            return out;
        };
        auto la = to_logs(a);
        auto lb = to_logs(b);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const std::uint32_t* ra = la.data() + i * width;
            for (std::size_t j = 0; j < b.rows(); ++j) {
                const std::uint32_t* rb = lb.data() + j * width;
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < width; ++k) {
                    if (ra[k] != kZero && rb[k] != kZero) {
                        acc ^= exps[ra[k] + rb[k]];
                    }
                }
                out.set(i, j, acc);
            }
        }
        return out;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ra = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            auto rb = b.row(j);
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < width; ++k) {
                if (ra[k] != 0 && rb[k] != 0) {
                    acc = f.add_raw(acc, f.mul_raw(ra[k], rb[k]));
                }
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

std::size_t rank(const Matrix& m) {
    Matrix work = m;
    const Field& f = *m.field();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < work.cols() && rank < work.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < work.rows() && work.at(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == work.rows()) {
            continue;
        }
        if (pivot != rank) {
            auto a = work.row(pivot);
            auto b = work.row(rank);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto prow = work.row(rank);
        const std::uint64_t inv = f.inv_raw(prow[col]);
        for (std::size_t r = rank + 1; r < work.rows(); ++r) {
            auto row = work.row(r);
            if (row[col] == 0) {
                continue;
            }
            const std::uint64_t factor = f.mul_raw(row[col], inv);
            for (std::size_t c = col; c < work.cols(); ++c) {
                if (prow[c] != 0) {
                    row[c] = f.sub_raw(row[c], f.mul_raw(factor, prow[c]));
                }
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace eaqecc
