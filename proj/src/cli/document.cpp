#include "specmat/cli/document.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "specmat/error.hpp"

namespace specmat::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

double finite_number(const Json& v, const char* where) {
  if (!v.is_number()) parse_fail(std::string(where) + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) parse_fail(std::string(where) + ": non-finite value");
  return d;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    parse_fail("invalid number '" + std::string(s) + "'");
  }
  return value;
}

// Coefficient in front of 'i': empty or a bare sign means 1.
double parse_imag_coefficient(std::string_view s) {
  s = trim(s);
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s);
}

void write_json(std::ostringstream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << inner << Json(it.key()).dump() << ": ";
        write_json(out, it.value(), indent + 1);
      }
      out << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      // Arrays of scalars stay on one line ([re, im] pairs, index lists).
      bool flat = true;
      for (const auto& e : v) flat = flat && !e.is_structured();
      if (v.empty()) {
        out << "[]";
      } else if (flat) {
        out << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i > 0) out << ", ";
          write_json(out, v[i], indent + 1);
        }
        out << "]";
      } else {
        out << "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i > 0) out << ",\n";
          out << inner;
          write_json(out, v[i], indent + 1);
        }
        out << "\n" << pad << "]";
      }
      return;
    }
    case Json::value_t::number_float:
      out << format_number(v.get<double>());
      return;
    default:
      out << v.dump();
      return;
  }
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, "refusing to emit a non-finite number");
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Matrix matrix_from_json(const Json& doc) {
  if (!doc.is_object()) parse_fail("matrix document must be an object");
  if (!doc.contains("order") || !doc.contains("data")) {
    parse_fail("matrix document needs \"order\" and \"data\"");
  }
  const Json& order = doc["order"];
  if (!order.is_number_integer() || order.get<long long>() < 1) {
    parse_fail("\"order\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(order.get<long long>());
  const Json& data = doc["data"];
  if (!data.is_array()) parse_fail("\"data\" must be an array");
  if (data.size() != n * n) {
    parse_fail("\"data\" has " + std::to_string(data.size()) + " entries, expected " +
               std::to_string(n * n));
  }
  std::vector<Complex> values;
  values.reserve(n * n);
  for (const auto& e : data) {
    if (e.is_number()) {
      values.emplace_back(finite_number(e, "data"), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      values.emplace_back(finite_number(e[0], "data re"), finite_number(e[1], "data im"));
    } else {
      parse_fail("each entry must be a number or a [re, im] pair");
    }
  }
  return Matrix(n, std::move(values));
}

Matrix parse_matrix_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
  return matrix_from_json(doc);
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_document(ss.str());
}

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (const auto& v : m.data()) data.push_back(Json::array({v.real(), v.imag()}));
  Json doc;
  doc["order"] = m.order();
  doc["data"] = std::move(data);
  return doc;
}

std::string dump(const Json& doc) {
  std::ostringstream out;
  write_json(out, doc, 0);
  out << "\n";
  return out.str();
}

Complex parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) parse_fail("empty complex number");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.remove_suffix(1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag_coefficient(s)};
  return {parse_real(s.substr(0, split)), parse_imag_coefficient(s.substr(split))};
}

Spectrum parse_spectrum_flag(std::string_view text) {
  std::vector<SpectrumEntry> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = trim(text.substr(start, end - start));
    const std::size_t colon = item.rfind(':');
    if (item.empty() || colon == std::string_view::npos) {
      parse_fail("spectrum entries must look like 'alpha:multiplicity'");
    }
    const std::string_view mult_text = trim(item.substr(colon + 1));
    int mult = 0;
    const auto [ptr, ec] =
        std::from_chars(mult_text.data(), mult_text.data() + mult_text.size(), mult);
    if (ec != std::errc{} || ptr != mult_text.data() + mult_text.size() || mult < 1) {
      parse_fail("invalid multiplicity '" + std::string(mult_text) + "'");
    }
    entries.push_back({parse_complex(item.substr(0, colon)), mult});
    start = end + 1;
  }
  return Spectrum(std::move(entries));
}

std::vector<long> parse_branch_flag(std::string_view text) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = trim(text.substr(start, end - start));
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      parse_fail("invalid branch offset '" + std::string(item) + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

}  // namespace specmat::cli
