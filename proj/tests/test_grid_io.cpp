#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "oracle.hpp"
#include "vilenkin/grid_io.hpp"

using namespace vilenkin;

TEST_CASE("grid files round trip bit for bit") {
  const auto b = VilenkinBase::parse("2,3,2");
  const GridFunction2D f(b, oracle::random_values(b.size() * b.size(), 3));
  std::stringstream io;
  write_grid(io, f);
  CHECK(io.str().rfind("# base=2,3,2 resolution=3 dims=2\n", 0) == 0);
  const auto back = read_grid(io);
  REQUIRE(std::holds_alternative<GridFunction2D>(back));
  const auto& g = std::get<GridFunction2D>(back);
  CHECK(g.base() == b);
  CHECK(oracle::max_abs(g.values(), f.values()) == 0.0);

  const Spectrum1D s(b, oracle::random_values(b.size(), 4));
  std::stringstream io2;
  write_grid(io2, s);
  CHECK(io2.str().find("kind=spectrum") != std::string::npos);
  const auto sback = read_grid(io2);
  REQUIRE(std::holds_alternative<Spectrum1D>(sback));
  CHECK(oracle::max_abs(std::get<Spectrum1D>(sback).values(), s.values()) == 0.0);
}

TEST_CASE("malformed grid files") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_grid(in);
  };
  CHECK_THROWS_AS(parse("1,0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("# base=2 dims=1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("# base=2 resolution=1 dims=3\n1,0\n2,0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("# base=2 resolution=1 dims=1\n1,0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("# base=2 resolution=1 dims=1\n1,0\n2,0\n3,0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("# base=2 resolution=1 dims=1\n1,0\nabc\n"), std::runtime_error);
  CHECK_THROWS(parse("# base=1 resolution=1 dims=1\n1,0\n"));
  const auto ok = parse("# base=2 resolution=2 dims=1\n1\n2,0.5\n3,0\n4,-1\n");
  const auto& f = std::get<GridFunction1D>(ok);
  CHECK(f(0) == Complex(1.0, 0.0));
  CHECK(f(3) == Complex(4.0, -1.0));
}
