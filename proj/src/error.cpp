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

#include "mrgrid/error.hpp"

namespace mrgrid {

std::string_view error_name(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::InvalidArgument: return "InvalidArgument";
	case ErrorKind::DivisionByZero: return "DivisionByZero";
	case ErrorKind::MixedFields: return "MixedFields";
	case ErrorKind::ZeroHasNoLog: return "ZeroHasNoLog";
	case ErrorKind::NotPrimitive: return "NotPrimitive";
	case ErrorKind::RankDeficient: return "RankDeficient";
	case ErrorKind::Inconsistent: return "Inconsistent";
	case ErrorKind::ResourceGuard: return "ResourceGuard";
	case ErrorKind::EmptyPattern: return "EmptyPattern";
	case ErrorKind::UnsupportedGlobalParities: return "UnsupportedGlobalParities";
	case ErrorKind::Uncorrectable: return "Uncorrectable";
	case ErrorKind::InconsistentWord: return "InconsistentWord";
	case ErrorKind::DimensionMismatch: return "DimensionMismatch";
	case ErrorKind::NotIrreducible: return "NotIrreducible";
	case ErrorKind::NotMds: return "NotMds";
	case ErrorKind::MissingConstant: return "MissingConstant";
	case ErrorKind::ParseError: return "ParseError";
	}
	return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
	: std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind)
{
}

} // namespace mrgrid
