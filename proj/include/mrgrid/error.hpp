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

#include <stdexcept>
#include <string>
#include <string_view>

namespace mrgrid {

enum class ErrorKind {
	InvalidArgument,
	DivisionByZero,
	MixedFields,
	ZeroHasNoLog,
	NotPrimitive,
	RankDeficient,
	Inconsistent,
	ResourceGuard,
	EmptyPattern,
	UnsupportedGlobalParities,
	Uncorrectable,
	InconsistentWord,
	DimensionMismatch,
	NotIrreducible,
	NotMds,
	MissingConstant,
	ParseError,
};

std::string_view error_name(ErrorKind kind);

// All library failures are reported through this type; kind() carries the
// module-level error name surfaced by the CLI.
class Error : public std::runtime_error {
public:
	Error(ErrorKind kind, const std::string& what);

	ErrorKind kind() const noexcept { return kind_; }
	std::string_view name() const { return error_name(kind_); }

private:
	ErrorKind kind_;
};

} // namespace mrgrid
