#include "spheretri/text_format.hpp"

#include <charconv>
#include <sstream>

namespace spheretri {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string to_rotation_text(const PlaneTriangulation& t) {
  std::string s = std::to_string(t.order());
  for (VertexId v = 0; v < t.order(); ++v) {
    s += " | ";
    s += std::to_string(v);
    s += ':';
    char sep = ' ';
    for (VertexId u : t.rotation(v)) {
      s += sep;
      s += std::to_string(u);
      sep = ',';
    }
  }
  return s;
}

PlaneTriangulation parse_rotation_text(std::string_view line) {
  std::vector<std::string_view> fields;
  for (std::size_t start = 0;;) {
    const auto bar = line.find('|', start);
    fields.push_back(line.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  const int n = parse_int(fields.front(), "vertex count");
  if (n < 0 || static_cast<std::size_t>(n) != fields.size() - 1) {
    throw Error(ErrorCode::ParseError, "vertex count " + std::to_string(n) + " but " +
                                           std::to_string(fields.size() - 1) + " vertex fields");
  }
  Rotation r(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto field = fields[static_cast<std::size_t>(v) + 1];
    const auto colon = field.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "vertex field " + std::to_string(v) + " lacks ':'");
    }
    if (parse_int(field.substr(0, colon), "vertex label") != v) {
      throw Error(ErrorCode::ParseError, "vertex fields must be listed in order; expected " + std::to_string(v));
    }
    auto rest = trim(field.substr(colon + 1));
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      r[static_cast<std::size_t>(v)].push_back(parse_int(rest.substr(0, comma), "neighbour"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return PlaneTriangulation::build(std::move(r));
}

std::string to_dot(const PlaneTriangulation& t, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  // n=" << t.order() << " E=" << t.edge_count() << " F=" << t.face_count() << "\n";
  for (const auto& e : edges(t)) os << "  " << e.u << " -- " << e.v << ";\n";
  for (const auto& f : faces(t)) os << "  // face " << f.v[0] << ' ' << f.v[1] << ' ' << f.v[2] << "\n";
  os << "}\n";
  return os.str();
}

std::string coloring_text(const PlaneTriangulation& t, const EdgeColoring& c) {
  const auto es = edges(t);
  std::string s;
  for (std::size_t i = 0; i < es.size() && i < c.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(es[i].u) + "-" + std::to_string(es[i].v) + ":" + color_letter(c[i]);
  }
  return s;
}

std::string summary_text(const ColoringClassSummary& s) {
  std::string out;
  for (std::uint8_t color = 0; color < 3; ++color) {
    if (color) out += ' ';
    out += color_letter(static_cast<Color>(color));
    out += '[';
    bool first = true;
    for (const auto& comp : s.by_color[color]) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(comp.edges);
      if (comp.cycle) out += 'c';
    }
    out += ']';
  }
  return out;
}

}  // namespace spheretri
