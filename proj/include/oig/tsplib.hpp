#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oig {

enum class WeightKind { Euc2d, Att, Explicit, Geo };
enum class ExplicitFormat { None, FullMatrix, UpperRow, LowerDiagRow, UpperDiagRow };

/// A symmetric TSPLIB95 instance as read from disk, before any distance
/// evaluation.
struct RawTsp {
  std::string name;
  int dimension = 0;
  WeightKind weight_kind = WeightKind::Euc2d;
  ExplicitFormat explicit_format = ExplicitFormat::None;
  std::vector<std::array<double, 2>> coords;  // coordinate kinds only
  std::vector<std::int64_t> weights;          // EXPLICIT only
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

RawTsp parse_tsplib(std::string_view text);
RawTsp read_tsplib(const std::filesystem::path& path);

/// TSPLIB-conformant integer distance between 0-based nodes i != j.
std::int64_t edge_weight(const RawTsp& raw, int i, int j);

/// Expected number of EDGE_WEIGHT_SECTION entries for a given format.
std::size_t explicit_weight_count(ExplicitFormat format, int dimension);

std::string_view to_string(WeightKind kind);
std::string_view to_string(ExplicitFormat format);

}  // namespace oig
