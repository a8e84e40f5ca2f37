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

#ifndef EAQECC_MATRIX_H
#define EAQECC_MATRIX_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eaqecc/field.h"

namespace eaqecc {

/// Dense row-major matrix over a finite field, entries packed as in Felt.
class Matrix {
  public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldPtr field, std::size_t size);

    const FieldPtr& field() const {
        return field_;
    }
    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }

    std::uint64_t at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::uint64_t v) {
        data_[r * cols_ + c] = v;
    }
    Felt get(std::size_t r, std::size_t c) const {
        return field_->element(at(r, c));
    }
    std::span<const std::uint64_t> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<std::uint64_t> row(std::size_t r) {
        return {data_.data() + r * cols_, cols_};
    }

    Matrix transpose() const;
    /// Entrywise x -> x^power.
    Matrix conjugate(std::uint64_t power) const;
    Matrix operator*(const Matrix& other) const;
    Matrix select_columns(std::span<const std::size_t> columns) const;
    bool is_zero() const;
    bool operator==(const Matrix& other) const;

    /// `[[a,b,...],[...]]`
    std::string to_string() const;

  private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> data_;
};

/// A * B^T, computed row against row. Both must have the same column count.
Matrix multiply_transposed(const Matrix& a, const Matrix& b);

/// Rank by Gaussian elimination.
std::size_t rank(const Matrix& m);

}  // namespace eaqecc

#endif  // EAQECC_MATRIX_H
