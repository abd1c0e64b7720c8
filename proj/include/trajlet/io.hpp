#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "trajlet/error.hpp"
#include "trajlet/geometry.hpp"

namespace trajlet {

/// Shortest decimal form that parses back to the identical double.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s, std::size_t line_no,
                           const char* what) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    raise(Errc::parse_error, "line " + std::to_string(line_no) + ": bad " +
                                 what + " '" + std::string(s) + "'");
  }
  return v;
}

namespace detail {

inline bool valid_field(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (c == ',' || c == ':' || c == '\n' || c == '\r') return false;
  }
  return true;
}

}  // namespace detail

/// .trj trajectory file: one record per line, `id[,label],x:y,x:y,...`,
/// UTF-8, LF line endings. See docs/file_formats.md.
inline void save_trajectories(const std::vector<Trajectory>& trajs,
                              const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "cannot open for write: " + path.string());
  for (const Trajectory& t : trajs) {
    if (!detail::valid_field(t.id)) {
      raise(Errc::io_error, "trajectory id '" + t.id + "' not representable in .trj");
    }
    if (t.label && !detail::valid_field(*t.label)) {
      raise(Errc::io_error, "label '" + *t.label + "' not representable in .trj");
    }
    out << t.id;
    if (t.label) out << ',' << *t.label;
    for (const Point& p : t.points) {
      out << ',' << format_double(p.x) << ':' << format_double(p.y);
    }
    out << '\n';
  }
  if (!out) raise(Errc::io_error, "write failed: " + path.string());
}

inline std::vector<Trajectory> load_trajectories(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open for read: " + path.string());
  std::vector<Trajectory> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (!rest.empty()) {
      const std::size_t pos = rest.find(',');
      fields.push_back(rest.substr(0, pos));
      if (pos == std::string_view::npos) break;
      rest.remove_prefix(pos + 1);
      if (rest.empty()) fields.push_back(rest);  // trailing comma -> empty field
    }

    Trajectory t;
    std::size_t idx = 0;
    if (fields.empty() || fields[0].empty()) {
      raise(Errc::parse_error, "line " + std::to_string(line_no) + ": missing id");
    }
    t.id = std::string(fields[idx++]);
    if (idx < fields.size() && fields[idx].find(':') == std::string_view::npos) {
      t.label = std::string(fields[idx++]);
    }
    for (; idx < fields.size(); ++idx) {
      const std::string_view pair = fields[idx];
      const std::size_t colon = pair.find(':');
      if (colon == std::string_view::npos || pair.find(':', colon + 1) != std::string_view::npos) {
        raise(Errc::parse_error, "line " + std::to_string(line_no) +
                                     ": malformed point '" + std::string(pair) + "'");
      }
      const double x = parse_double(pair.substr(0, colon), line_no, "x coordinate");
      const double y = parse_double(pair.substr(colon + 1), line_no, "y coordinate");
      t.points.push_back({x, y});
    }
    if (t.points.size() < 2) {
      raise(Errc::parse_error,
            "line " + std::to_string(line_no) + ": record '" + t.id +
                "' has " + std::to_string(t.points.size()) + " points, need >= 2");
    }
    out.push_back(std::move(t));
  }
  return out;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "cannot open for write: " + path.string());
  out << content;
  if (!out) raise(Errc::io_error, "write failed: " + path.string());
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open for read: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace trajlet
