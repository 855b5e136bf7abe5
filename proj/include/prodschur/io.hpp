#pragma once

// Text formats shared with other tools:
//   colourings/sets: "# interval lo hi k" then one "element colour" line per
//                    ground member in increasing order (sets use colour 1);
//   sweeps:          CSV with a fixed header per command.

#include <cstdint>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace prodschur {

inline constexpr const char* tool_version = "0.3.0";

inline void write_colouring(std::ostream& os, const Colouring& c) {
  const auto& iv = c.interval();
  os << "# interval " << iv.lo() << ' ' << iv.hi() << ' ' << c.k() << '\n';
  for (Integer x = iv.lo(); x <= iv.hi(); ++x) {
    const int col = c.colour_of(x);
    if (col != 0) os << x << ' ' << col << '\n';
  }
}

inline void write_subset(std::ostream& os, const IntegerSubset& s) {
  const auto& iv = s.interval();
  os << "# interval " << iv.lo() << ' ' << iv.hi() << " 1\n";
  s.for_each([&](Integer x) { os << x << " 1\n"; });
}

/// Parses the colouring format; throws std::runtime_error with the line
/// number on malformed input.
inline Colouring read_colouring(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("colouring file line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty()) break;
  }
  std::istringstream header(line);
  std::string hash;
  std::string word;
  Integer lo = 0;
  Integer hi = 0;
  int k = 0;
  if (!(header >> hash >> word >> lo >> hi >> k) || hash != "#" || word != "interval") {
    fail("expected header '# interval lo hi k'");
  }
  Colouring c(Interval(lo, hi), k);
  for (Integer x = lo; x <= hi; ++x) c.remove(x);
  Integer prev = lo - 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    Integer x = 0;
    int col = 0;
    if (!(row >> x >> col)) fail("expected 'element colour'");
    if (x <= prev) fail("elements must be strictly increasing");
    if (!c.interval().contains(x)) fail("element outside the declared interval");
    if (col < 1 || col > k) fail("colour outside [1, k]");
    c.set(x, col);
    prev = x;
  }
  return c;
}

/// Fixed-format real for CSV cells; identical inputs give identical bytes.
inline std::string csv_real(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

/// 64-bit FNV-1a, used as the configuration digest.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

}  // namespace prodschur
