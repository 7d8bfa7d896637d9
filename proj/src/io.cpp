#include "stolarsky/io.hpp"

#include "stolarsky/errors.hpp"

#include <charconv>
#include <cstdio>
#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace stolarsky {

std::vector<double> point_coordinates(const Point &p) {
  if (p.is_sphere()) {
    const auto v = p.vector();
    return {v.begin(), v.end()};
  }
  const auto &m = p.projector();
  const int d0 = dim(m.field());
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(p.space().embedding_dim()));
  for (int i = 0; i < m.size(); ++i)
    out.push_back(m.at(i, i)[0]);
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      for (int k = 0; k < d0; ++k)
        out.push_back(m.at(i, j)[k]);
  return out;
}

Point point_from_coordinates(const SpaceId &space, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != space.embedding_dim())
    throw std::domain_error("point_from_coordinates: " + space.name() + " needs " +
                            std::to_string(space.embedding_dim()) + " coordinates, got " +
                            std::to_string(coords.size()));
  if (space.is_sphere())
    return Point::on_sphere(space, {coords.begin(), coords.end()});
  const Field field = space.field();
  const int d0 = dim(field);
  const int size = space.n() + 1;
  HermitianMatrix m(field, size);
  std::size_t pos = 0;
  for (int i = 0; i < size; ++i)
    m.set(i, i, AlgebraElement::real(field, coords[pos++]));
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      AlgebraElement::Coeffs c{};
      for (int k = 0; k < d0; ++k)
        c[static_cast<std::size_t>(k)] = coords[pos++];
      m.set_hermitian(i, j, AlgebraElement(field, c));
    }
  return Point::projective(space, std::move(m));
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_point_set_csv(std::ostream &out, const PointSet &d, const std::string &comment) {
  out << "space," << d.space().name() << '\n';
  if (!comment.empty())
    out << "# " << comment << '\n';
  for (const auto &p : d.points()) {
    const auto c = point_coordinates(p);
    for (std::size_t k = 0; k < c.size(); ++k)
      out << (k ? "," : "") << format_double(c[k]);
    out << '\n';
  }
}

std::string point_set_to_csv(const PointSet &d) {
  std::ostringstream s;
  write_point_set_csv(s, d);
  return s.str();
}

namespace {

[[noreturn]] void fail(int line, const std::string &what) {
  throw parse_error("point set CSV, line " + std::to_string(line) + ": " + what);
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' '))
    s.pop_back();
  return s;
}

} // namespace

PointSet read_point_set_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line))
    fail(1, "missing header \"space,<name>\"");
  line = strip(line);
  if (!line.starts_with("space,"))
    fail(1, "expected header \"space,<name>\", got \"" + line + "\"");
  std::optional<SpaceId> space;
  try {
    space = SpaceId::parse(line.substr(6));
  } catch (const parse_error &e) {
    fail(1, e.what());
  }
  std::vector<Point> points;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    line = strip(line);
    if (line.empty() || line.starts_with('#'))
      continue;
    std::vector<double> coords;
    std::size_t start = 0;
    while (start <= line.size()) {
      const auto end = std::min(line.find(',', start), line.size());
      const char *first = line.data() + start;
      const char *last = line.data() + end;
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last)
        fail(number, "bad number \"" + std::string(first, last) + "\"");
      coords.push_back(v);
      start = end + 1;
    }
    try {
      points.push_back(point_from_coordinates(*space, coords));
    } catch (const std::domain_error &e) {
      fail(number, e.what());
    }
  }
  if (points.empty())
    fail(number, "no points");
  return PointSet(*space, std::move(points));
}

PointSet point_set_from_csv(const std::string &text) {
  std::istringstream s(text);
  return read_point_set_csv(s);
}

} // namespace stolarsky
