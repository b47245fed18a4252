#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "specmat/hermite.hpp"
#include "specmat/matrix.hpp"

namespace specmat::cli {

using Json = nlohmann::ordered_json;

/// Parses {"order": k, "data": [[re, im], ...]} (row-major, k*k entries;
/// bare numbers are promoted to [x, 0]). Throws ParseError.
Matrix parse_matrix_document(std::string_view text);
Matrix read_matrix_file(const std::filesystem::path& path);

/// The matrix part of a document: {"order": k, "data": [[re, im], ...]}.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& doc);

/// Serializes with every floating-point number printed at 17 significant
/// digits. Throws InvalidArgument on non-finite values. Newline-terminated.
std::string dump(const Json& doc);

/// "%.17g"
std::string format_number(double value);

/// Parses "a+bi:m,c:m2,..." into a spectrum (kept in the given order).
Spectrum parse_spectrum_flag(std::string_view text);
/// Parses "1,-2,0" into branch offsets.
std::vector<long> parse_branch_flag(std::string_view text);
/// Parses "2", "-1.5", "3i", "0.5-0.25i", "-i", "1e-3+2e-1i".
Complex parse_complex(std::string_view text);

}  // namespace specmat::cli
