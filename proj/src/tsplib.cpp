#include "oig/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace oig {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool starts_numeric(std::string_view line) {
  line = trim(line);
  if (line.empty()) return false;
  char c = line.front();
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
}

double to_double(std::string_view tok, int line) {
  std::string s(tok);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw ParseError(line, "expected a number, got '" + s + "'");
  return v;
}

std::int64_t to_int(std::string_view tok, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    // Some files write integral weights with a trailing ".0".
    double d = to_double(tok, line);
    if (d != std::floor(d)) throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return static_cast<std::int64_t>(d);
  }
  return v;
}

std::int64_t nint(double x) { return static_cast<std::int64_t>(x + 0.5); }

double geo_radians(double x) {
  constexpr double kPi = 3.141592;
  // TSPLIB reference code truncates the degree part.
  double deg = static_cast<double>(static_cast<std::int64_t>(x));
  double min = x - deg;
  return kPi * (deg + 5.0 * min / 3.0) / 180.0;
}

}  // namespace

std::string_view to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Euc2d: return "EUC_2D";
    case WeightKind::Att: return "ATT";
    case WeightKind::Explicit: return "EXPLICIT";
    case WeightKind::Geo: return "GEO";
  }
  return "?";
}

std::string_view to_string(ExplicitFormat format) {
  switch (format) {
    case ExplicitFormat::None: return "NONE";
    case ExplicitFormat::FullMatrix: return "FULL_MATRIX";
    case ExplicitFormat::UpperRow: return "UPPER_ROW";
    case ExplicitFormat::LowerDiagRow: return "LOWER_DIAG_ROW";
    case ExplicitFormat::UpperDiagRow: return "UPPER_DIAG_ROW";
  }
  return "?";
}

std::size_t explicit_weight_count(ExplicitFormat format, int dimension) {
  auto n = static_cast<std::size_t>(dimension);
  switch (format) {
    case ExplicitFormat::FullMatrix: return n * n;
    case ExplicitFormat::UpperRow: return n * (n - 1) / 2;
    case ExplicitFormat::LowerDiagRow:
    case ExplicitFormat::UpperDiagRow: return n * (n + 1) / 2;
    case ExplicitFormat::None: return 0;
  }
  return 0;
}

RawTsp parse_tsplib(std::string_view text) {
  RawTsp raw;
  bool have_dimension = false, have_kind = false, have_format = false;
  auto lines = split_lines(text);
  std::size_t li = 0;

  auto require_header = [&](int line) {
    if (!have_dimension) throw ParseError(line, "data section before DIMENSION");
    if (!have_kind) throw ParseError(line, "data section before EDGE_WEIGHT_TYPE");
  };

  while (li < lines.size()) {
    const int line_no = static_cast<int>(li) + 1;
    std::string_view line = trim(lines[li]);
    ++li;
    if (line.empty()) continue;

    std::string key, value;
    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      key = std::string(trim(line.substr(0, colon)));
      value = std::string(trim(line.substr(colon + 1)));
    } else {
      auto toks = tokens(line);
      key = std::string(toks.front());
      if (toks.size() > 1) value = std::string(trim(line.substr(toks[1].data() - line.data())));
    }

    if (key == "EOF") break;
    if (key == "NAME") {
      raw.name = value;
    } else if (key == "TYPE") {
      if (value != "TSP") throw ParseError(line_no, "unsupported TYPE '" + value + "' (only symmetric TSP)");
    } else if (key == "COMMENT" || key == "DISPLAY_DATA_TYPE" || key == "NODE_COORD_TYPE") {
      // informational
    } else if (key == "DIMENSION") {
      raw.dimension = static_cast<int>(to_int(value, line_no));
      if (raw.dimension < 3) throw ParseError(line_no, "DIMENSION must be at least 3");
      have_dimension = true;
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value == "EUC_2D") raw.weight_kind = WeightKind::Euc2d;
      else if (value == "ATT") raw.weight_kind = WeightKind::Att;
      else if (value == "EXPLICIT") raw.weight_kind = WeightKind::Explicit;
      else if (value == "GEO") raw.weight_kind = WeightKind::Geo;
      else throw ParseError(line_no, "unsupported EDGE_WEIGHT_TYPE '" + value + "'");
      have_kind = true;
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      if (value == "FULL_MATRIX") raw.explicit_format = ExplicitFormat::FullMatrix;
      else if (value == "UPPER_ROW") raw.explicit_format = ExplicitFormat::UpperRow;
      else if (value == "LOWER_DIAG_ROW") raw.explicit_format = ExplicitFormat::LowerDiagRow;
      else if (value == "UPPER_DIAG_ROW") raw.explicit_format = ExplicitFormat::UpperDiagRow;
      else if (value == "FUNCTION") raw.explicit_format = ExplicitFormat::None;
      else throw ParseError(line_no, "unsupported EDGE_WEIGHT_FORMAT '" + value + "'");
      have_format = true;
    } else if (key == "NODE_COORD_SECTION") {
      require_header(line_no);
      if (raw.weight_kind == WeightKind::Explicit)
        throw ParseError(line_no, "NODE_COORD_SECTION in an EXPLICIT instance");
      raw.coords.clear();
      while (li < lines.size() && starts_numeric(lines[li])) {
        auto toks = tokens(lines[li]);
        const int ln = static_cast<int>(li) + 1;
        if (toks.size() != 3) throw ParseError(ln, "coordinate line needs 'index x y'");
        if (static_cast<int>(raw.coords.size()) == raw.dimension)
          throw ParseError(ln, "more coordinate lines than DIMENSION " + std::to_string(raw.dimension));
        raw.coords.push_back({to_double(toks[1], ln), to_double(toks[2], ln)});
        ++li;
      }
      if (static_cast<int>(raw.coords.size()) != raw.dimension)
        throw ParseError(static_cast<int>(li) + 1,
                         "DIMENSION is " + std::to_string(raw.dimension) + " but " +
                             std::to_string(raw.coords.size()) + " coordinate lines were given");
    } else if (key == "EDGE_WEIGHT_SECTION") {
      require_header(line_no);
      if (raw.weight_kind != WeightKind::Explicit)
        throw ParseError(line_no, "EDGE_WEIGHT_SECTION in a non-EXPLICIT instance");
      if (!have_format || raw.explicit_format == ExplicitFormat::None)
        throw ParseError(line_no, "EDGE_WEIGHT_SECTION without a supported EDGE_WEIGHT_FORMAT");
      const std::size_t expected = explicit_weight_count(raw.explicit_format, raw.dimension);
      raw.weights.clear();
      while (li < lines.size() && (starts_numeric(lines[li]) || trim(lines[li]).empty())) {
        const int ln = static_cast<int>(li) + 1;
        for (auto tok : tokens(lines[li])) {
          if (raw.weights.size() == expected)
            throw ParseError(ln, "more than " + std::to_string(expected) + " edge weights for " +
                                     std::string(to_string(raw.explicit_format)));
          raw.weights.push_back(to_int(tok, ln));
        }
        ++li;
      }
      if (raw.weights.size() != expected)
        throw ParseError(static_cast<int>(li) + 1,
                         "expected " + std::to_string(expected) + " edge weights, found " +
                             std::to_string(raw.weights.size()));
    } else if (key == "DISPLAY_DATA_SECTION") {
      while (li < lines.size() && starts_numeric(lines[li])) ++li;
    } else if (key == "FIXED_EDGES_SECTION" || key == "TOUR_SECTION") {
      while (li < lines.size() && starts_numeric(lines[li])) ++li;
    } else {
      throw ParseError(line_no, "unknown keyword '" + key + "'");
    }
  }

  if (!have_dimension) throw ParseError(static_cast<int>(lines.size()), "missing DIMENSION");
  if (!have_kind) throw ParseError(static_cast<int>(lines.size()), "missing EDGE_WEIGHT_TYPE");
  if (raw.weight_kind == WeightKind::Explicit) {
    if (raw.weights.empty()) throw ParseError(static_cast<int>(lines.size()), "missing EDGE_WEIGHT_SECTION");
  } else if (raw.coords.empty()) {
    throw ParseError(static_cast<int>(lines.size()), "missing NODE_COORD_SECTION");
  }
  return raw;
}

RawTsp read_tsplib(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tsplib(ss.str());
}

std::int64_t edge_weight(const RawTsp& raw, int i, int j) {
  const int n = raw.dimension;
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("edge_weight: node index out of range");
  if (i == j) throw std::domain_error("edge_weight: i == j");

  switch (raw.weight_kind) {
    case WeightKind::Euc2d: {
      double dx = raw.coords[i][0] - raw.coords[j][0];
      double dy = raw.coords[i][1] - raw.coords[j][1];
      return nint(std::sqrt(dx * dx + dy * dy));
    }
    case WeightKind::Att: {
      double dx = raw.coords[i][0] - raw.coords[j][0];
      double dy = raw.coords[i][1] - raw.coords[j][1];
      double r = std::sqrt((dx * dx + dy * dy) / 10.0);
      std::int64_t t = nint(r);
      return static_cast<double>(t) < r ? t + 1 : t;
    }
    case WeightKind::Geo: {
      constexpr double kRadius = 6378.388;
      double lat_i = geo_radians(raw.coords[i][0]), lon_i = geo_radians(raw.coords[i][1]);
      double lat_j = geo_radians(raw.coords[j][0]), lon_j = geo_radians(raw.coords[j][1]);
      double q1 = std::cos(lon_i - lon_j);
      double q2 = std::cos(lat_i - lat_j);
      double q3 = std::cos(lat_i + lat_j);
      return static_cast<std::int64_t>(kRadius * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) + 1.0);
    }
    case WeightKind::Explicit: break;
  }

  const std::size_t a = static_cast<std::size_t>(std::min(i, j));
  const std::size_t b = static_cast<std::size_t>(std::max(i, j));
  const std::size_t nn = static_cast<std::size_t>(n);
  switch (raw.explicit_format) {
    case ExplicitFormat::FullMatrix: return raw.weights[a * nn + b];
    case ExplicitFormat::UpperRow: return raw.weights[a * (nn - 1) - a * (a - 1) / 2 + (b - a - 1)];
    case ExplicitFormat::UpperDiagRow: return raw.weights[a * nn - a * (a - 1) / 2 + (b - a)];
    case ExplicitFormat::LowerDiagRow: return raw.weights[b * (b + 1) / 2 + a];
    case ExplicitFormat::None: break;
  }
  throw std::logic_error("edge_weight: EXPLICIT instance without a weight format");
}

}  // namespace oig
