#include "solvkit/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "solvkit/error.hpp"

namespace solvkit {

namespace {

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

// Parses an unsigned integer at i; advances i.
std::size_t parse_uint(std::string_view s, std::size_t& i, std::size_t offset) {
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw ParseError("expected a non-negative integer", offset + i);
  std::size_t v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + static_cast<std::size_t>(s[i] - '0');
    if (v > (std::size_t{1} << 31)) throw ParseError("integer too large", offset + i);
    ++i;
  }
  return v;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree, std::size_t offset) {
  std::size_t i = skip_space(text, 0);
  if (i < text.size() && text[i] == '(') {
    std::vector<std::vector<Point>> cycles;
    while (i < text.size()) {
      if (text[i] != '(') throw ParseError("expected '('", offset + i);
      ++i;
      std::vector<Point> cycle;
      for (;;) {
        i = skip_space(text, i);
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        const std::size_t at = i;
        const std::size_t v = parse_uint(text, i, offset);
        if (v >= degree) throw ParseError("point " + std::to_string(v) + " exceeds degree", offset + at);
        cycle.push_back(static_cast<Point>(v));
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      i = skip_space(text, i);
    }
    try {
      return Permutation::from_cycles(degree, cycles);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), offset);
    }
  }

  std::vector<Point> images;
  while (i < text.size()) {
    if (text[i] == ',') {
      i = skip_space(text, i + 1);
      continue;
    }
    images.push_back(static_cast<Point>(parse_uint(text, i, offset)));
    i = skip_space(text, i);
  }
  if (images.size() != degree)
    throw ParseError("image list has " + std::to_string(images.size()) + " entries, expected " +
                         std::to_string(degree),
                     offset);
  try {
    return Permutation(std::move(images));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), offset);
  }
}

GroupFile parse_group_text(std::string_view text) {
  GroupFile out;
  bool have_degree = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t i = skip_space(line, 0);
    if (i < line.size() && line[i] != '#') {
      const std::string_view rest = line.substr(i);
      if (rest.starts_with("degree")) {
        if (have_degree) throw ParseError("duplicate degree line", line_start + i);
        std::size_t j = skip_space(line, i + 6);
        out.degree = parse_uint(line, j, line_start);
        if (out.degree == 0) throw ParseError("degree must be positive", line_start + i);
        if (skip_space(line, j) != line.size()) throw ParseError("trailing characters", line_start + j);
        have_degree = true;
      } else if (rest.starts_with("g ") || rest == "g") {
        if (!have_degree) throw ParseError("generator before degree line", line_start + i);
        out.generators.push_back(
            parse_permutation(line.substr(i + 1), out.degree, line_start + i + 1));
      } else {
        throw ParseError("expected 'degree' or 'g'", line_start + i);
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (!have_degree) throw ParseError("missing degree line", 0);
  if (out.generators.empty()) out.generators.push_back(Permutation::identity(out.degree));
  return out;
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open group file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_text(ss.str());
}

std::string format_group_text(const GroupFile& file) {
  std::string s = "degree " + std::to_string(file.degree) + "\n";
  for (const auto& g : file.generators) {
    s += 'g';
    for (Point p : g.images()) s += ' ' + std::to_string(p);
    s += '\n';
  }
  return s;
}

void write_group_file(const std::string& path, const GroupFile& file) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write group file '" + path + "'");
  out << format_group_text(file);
}

}  // namespace solvkit
