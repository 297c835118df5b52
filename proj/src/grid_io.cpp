#include "vilenkin/grid_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vilenkin {

namespace {

template <class F>
void write_cells(std::ostream& out, const F& f, int dims, bool spectrum) {
  out << "# base=" << f.base().to_string() << " resolution=" << f.base().resolution()
      << " dims=" << dims;
  if (spectrum) out << " kind=spectrum";
  out << '\n';
  char buf[64];
  for (const Complex& v : f.values()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v.real(), v.imag());
    out << buf;
  }
}

template <class F>
F read_cells(std::istream& in, const VilenkinBase& base, std::size_t& line_no) {
  F f(base);
  std::string line;
  std::size_t filled = 0;
  auto cells = f.values();
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (filled == cells.size()) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": more cells than M_N^dims");
    }
    const auto comma = line.find(',');
    try {
      std::size_t used = 0;
      const double re = std::stod(line.substr(0, comma), &used);
      double im = 0.0;
      if (comma != std::string::npos) im = std::stod(line.substr(comma + 1));
      cells[filled++] = {re, im};
    } catch (const std::logic_error&) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected re,im");
    }
  }
  if (filled != cells.size()) {
    throw std::runtime_error("expected " + std::to_string(cells.size()) + " cells, found " +
                             std::to_string(filled));
  }
  return f;
}

}  // namespace

void write_grid(std::ostream& out, const GridFunction1D& f) { write_cells(out, f, 1, false); }
void write_grid(std::ostream& out, const GridFunction2D& f) { write_cells(out, f, 2, false); }
void write_grid(std::ostream& out, const Spectrum1D& f) { write_cells(out, f, 1, true); }
void write_grid(std::ostream& out, const Spectrum2D& f) { write_cells(out, f, 2, true); }

GridData read_grid(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("#", 0) != 0) {
    throw std::runtime_error("grid file must start with a '# base=...' header");
  }
  std::map<std::string, std::string> fields;
  std::istringstream tokens(header.substr(1));
  std::string token;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw std::runtime_error("bad header field '" + token + "'");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  if (!fields.count("base") || !fields.count("resolution") || !fields.count("dims")) {
    throw std::runtime_error("header needs base, resolution and dims");
  }
  std::size_t resolution = 0;
  try {
    resolution = std::stoul(fields["resolution"]);
  } catch (const std::logic_error&) {
    throw std::runtime_error("bad resolution '" + fields["resolution"] + "'");
  }
  const auto base = VilenkinBase::parse(fields["base"], resolution);
  const bool spectrum = fields.count("kind") && fields["kind"] == "spectrum";
  if (fields.count("kind") && !spectrum) throw std::runtime_error("unknown kind " + fields["kind"]);
  std::size_t line_no = 1;
  if (fields["dims"] == "1") {
    if (spectrum) return read_cells<Spectrum1D>(in, base, line_no);
    return read_cells<GridFunction1D>(in, base, line_no);
  }
  if (fields["dims"] == "2") {
    if (spectrum) return read_cells<Spectrum2D>(in, base, line_no);
    return read_cells<GridFunction2D>(in, base, line_no);
  }
  throw std::runtime_error("dims must be 1 or 2");
}

GridData read_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_grid(in);
}

}  // namespace vilenkin
