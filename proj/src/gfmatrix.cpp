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

#include "mrgrid/gfmatrix.hpp"

#include "mrgrid/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mrgrid {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
	: field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data)
	: field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data))
{
	if (data_.size() != rows_ * cols_)
		throw Error(ErrorKind::DimensionMismatch, "matrix data length does not match shape");
	for (Element e : data_)
		if (!field_->contains(e))
			throw Error(ErrorKind::InvalidArgument, "matrix entry " + std::to_string(e) + " outside " + field_->spec().to_string());
}

Matrix Matrix::identity(FieldPtr field, std::size_t n)
{
	Matrix m(std::move(field), n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows)
{
	const std::size_t r = rows.size();
	const std::size_t c = r ? rows[0].size() : 0;
	std::vector<Element> data;
	data.reserve(r * c);
	for (const auto& row : rows) {
		if (row.size() != c)
			throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
		data.insert(data.end(), row.begin(), row.end());
	}
	return Matrix(std::move(field), r, c, std::move(data));
}

void Matrix::check_same_field(const Matrix& o) const
{
	if (!(field_->spec() == o.field_->spec()))
		throw Error(ErrorKind::MixedFields, "matrices over different fields");
}

Matrix Matrix::transpose() const
{
	Matrix t(field_, cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const
{
	Matrix s(field_, rows_, cols.size());
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t i = 0; i < cols.size(); ++i)
			s(r, i) = (*this)(r, cols[i]);
	return s;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
	check_same_field(rhs);
	if (cols_ != rhs.rows_)
		throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
	const Field& f = *field_;
	Matrix p(field_, rows_, rhs.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k) {
			const Element a = (*this)(i, k);
			if (a == 0)
				continue;
			for (std::size_t j = 0; j < rhs.cols_; ++j)
				p(i, j) = f.add(p(i, j), f.mul(a, rhs(k, j)));
		}
	return p;
}

std::vector<Element> Matrix::apply(std::span<const Element> x) const
{
	if (x.size() != cols_)
		throw Error(ErrorKind::DimensionMismatch, "vector length does not match columns");
	const Field& f = *field_;
	std::vector<Element> y(rows_, 0);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k)
			y[i] = f.add(y[i], f.mul((*this)(i, k), x[k]));
	return y;
}

bool Matrix::is_zero() const
{
	return std::all_of(data_.begin(), data_.end(), [](Element e) { return e == 0; });
}

bool Matrix::operator==(const Matrix& o) const
{
	return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
		(!field_ || !o.field_ || field_->spec() == o.field_->spec());
}

std::vector<std::size_t> Matrix::reduce()
{
	const Field& f = *field_;
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
		std::size_t p = r;
		while (p < rows_ && (*this)(p, c) == 0)
			++p;
		if (p == rows_)
			continue;
		if (p != r)
			for (std::size_t j = 0; j < cols_; ++j)
				std::swap((*this)(p, j), (*this)(r, j));
		const Element inv = f.inv((*this)(r, c));
		for (std::size_t j = c; j < cols_; ++j)
			(*this)(r, j) = f.mul((*this)(r, j), inv);
		for (std::size_t i = 0; i < rows_; ++i) {
			if (i == r)
				continue;
			const Element factor = (*this)(i, c);
			if (factor == 0)
				continue;
			for (std::size_t j = c; j < cols_; ++j)
				(*this)(i, j) = f.sub((*this)(i, j), f.mul(factor, (*this)(r, j)));
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

std::size_t rank_in_place(const Field& f, Element* data, std::size_t rows, std::size_t cols)
{
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c) {
		std::size_t p = r;
		while (p < rows && data[p * cols + c] == 0)
			++p;
		if (p == rows)
			continue;
		Element* pr = data + p * cols;
		Element* rr = data + r * cols;
		if (p != r)
			std::swap_ranges(pr + c, pr + cols, rr + c);
		const Element inv = f.inv(rr[c]);
		for (std::size_t i = r + 1; i < rows; ++i) {
			Element* ir = data + i * cols;
			if (ir[c] == 0)
				continue;
			const Element factor = f.mul(ir[c], inv);
			for (std::size_t j = c; j < cols; ++j)
				if (rr[j] != 0)
					ir[j] = f.sub(ir[j], f.mul(factor, rr[j]));
		}
		++r;
	}
	return r;
}

std::size_t rank(const Matrix& m)
{
	if (m.empty())
		return 0;
	std::vector<Element> scratch = m.data();
	return rank_in_place(m.gf(), scratch.data(), m.rows(), m.cols());
}

std::vector<Element> solve_unique(const Matrix& m, std::span<const Element> rhs)
{
	if (rhs.size() != m.rows())
		throw Error(ErrorKind::DimensionMismatch, "rhs length does not match rows");
	const std::size_t n = m.cols();
	Matrix aug(m.field(), m.rows(), n + 1);
	for (std::size_t i = 0; i < m.rows(); ++i) {
		for (std::size_t j = 0; j < n; ++j)
			aug(i, j) = m(i, j);
		if (!m.gf().contains(rhs[i]))
			throw Error(ErrorKind::InvalidArgument, "rhs entry outside field");
		aug(i, n) = rhs[i];
	}
	const auto pivots = aug.reduce();
	if (!pivots.empty() && pivots.back() == n)
		throw Error(ErrorKind::Inconsistent, "linear system has no solution");
	if (pivots.size() < n)
		throw Error(ErrorKind::RankDeficient,
			"column rank " + std::to_string(pivots.size()) + " < " + std::to_string(n));
	std::vector<Element> x(n);
	for (std::size_t i = 0; i < n; ++i)
		x[i] = aug(i, n);
	return x;
}

Matrix null_space_basis(const Matrix& m)
{
	const Field& f = m.gf();
	Matrix r = m;
	const auto pivots = r.reduce();
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : pivots)
		is_pivot[p] = true;
	std::vector<std::size_t> free_cols;
	for (std::size_t c = 0; c < m.cols(); ++c)
		if (!is_pivot[c])
			free_cols.push_back(c);
	Matrix basis(m.field(), free_cols.size(), m.cols());
	for (std::size_t k = 0; k < free_cols.size(); ++k) {
		const std::size_t fc = free_cols[k];
		basis(k, fc) = 1;
		for (std::size_t i = 0; i < pivots.size(); ++i)
			basis(k, pivots[i]) = f.neg(r(i, fc));
	}
	return basis;
}

bool every_w_columns_independent(const Matrix& m, std::size_t w)
{
	if (w == 0)
		return true;
	if (w > m.rows())
		throw Error(ErrorKind::InvalidArgument, "w exceeds the row count");
	if (m.cols() > kMaxSubsetCols || w > kMaxSubsetWidth)
		throw Error(ErrorKind::ResourceGuard, "column subset enumeration limited to cols <= 64, w <= 6");
	const std::size_t n = m.cols();
	if (w > n)
		return true;
	const Field& f = m.gf();
	std::vector<std::size_t> idx(w);
	std::iota(idx.begin(), idx.end(), 0);
	std::vector<Element> scratch(m.rows() * w);
	for (;;) {
		for (std::size_t r = 0; r < m.rows(); ++r)
			for (std::size_t i = 0; i < w; ++i)
				scratch[r * w + i] = m(r, idx[i]);
		if (rank_in_place(f, scratch.data(), m.rows(), w) < w)
			return false;
		std::size_t i = w;
		while (i > 0 && idx[i - 1] == n - w + i - 1)
			--i;
		if (i == 0)
			break;
		++idx[i - 1];
		for (std::size_t j = i; j < w; ++j)
			idx[j] = idx[j - 1] + 1;
	}
	return true;
}

} // namespace mrgrid
