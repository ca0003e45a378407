/*
* Copyright 2026 The mrgrid Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#pragma once

#include "mrgrid/galois.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mrgrid {

// Dense row-major matrix over a finite field. Value type; every operation
// works on its own copy.
class Matrix {
public:
	Matrix() = default;
	Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
	Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data);

	static Matrix identity(FieldPtr field, std::size_t n);
	static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows);

	const FieldPtr& field() const { return field_; }
	const Field& gf() const { return *field_; }
	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool empty() const { return rows_ == 0 || cols_ == 0; }

	Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
	Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
	const std::vector<Element>& data() const { return data_; }

	Matrix transpose() const;
	Matrix select_columns(std::span<const std::size_t> cols) const;
	Matrix operator*(const Matrix& rhs) const;
	std::vector<Element> apply(std::span<const Element> x) const;
	bool is_zero() const;

	// Reduced row echelon form in place; returns pivot columns. Pivots are the
	// first nonzero entry scanning columns left to right.
	std::vector<std::size_t> reduce();

	bool operator==(const Matrix& o) const;

private:
	void check_same_field(const Matrix& o) const;

	FieldPtr field_;
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Element> data_;
};

std::size_t rank(const Matrix& m);

// Unique x with M x = rhs. Throws RankDeficient when the column rank is below
// cols, Inconsistent when no solution exists.
std::vector<Element> solve_unique(const Matrix& m, std::span<const Element> rhs);

// Rows of the result form a basis of {x : M x = 0}.
Matrix null_space_basis(const Matrix& m);

inline constexpr std::size_t kMaxSubsetCols = 64;
inline constexpr std::size_t kMaxSubsetWidth = 6;

// True iff every w columns of M are linearly independent. Enumerates all
// column subsets; guarded to cols <= 64 and w <= 6 (ResourceGuard).
bool every_w_columns_independent(const Matrix& m, std::size_t w);

// Rank of a small dense matrix held in a caller-provided scratch buffer
// (row-major, destroyed). Used in hot loops that cannot afford allocation.
std::size_t rank_in_place(const Field& f, Element* data, std::size_t rows, std::size_t cols);

} // namespace mrgrid
