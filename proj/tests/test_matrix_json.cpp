#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "qtwo/matrix_json.hpp"
#include "qtwo/symmatrix.hpp"
#include "qtwo/witnesses.hpp"

using qtwo::EntryMode;
using qtwo::QuadElem;
using qtwo::Rational;
using qtwo::Scale;
using qtwo::SymMatrix;

namespace {

bool same_exact(const SymMatrix& a, const SymMatrix& b) {
  if (a.order() != b.order() || a.mode() != b.mode()) return false;
  if (!(a.scale().c == b.scale().c) || a.scale().r != b.scale().r)
    return false;
  for (int i = 0; i < a.order(); ++i)
    for (int j = i; j < a.order(); ++j)
      if (a.x(i, j) != b.x(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("matrix json: exact matrices round trip bit-exactly") {
  SymMatrix m(3, EntryMode::Exact);
  m.set_scale(Scale{Rational(1, 6), 3});
  m.set_x(0, 0, QuadElem(Rational(-5, 7)));
  m.set_x(0, 1, QuadElem::sqrt_of(2) + QuadElem::term(Rational(1, 3), 30));
  m.set_x(0, 2, QuadElem());
  m.set_x(1, 1, QuadElem(4));
  m.set_x(1, 2, QuadElem::term(Rational(-2, 11), 5));
  m.set_x(2, 2, QuadElem(Rational(1, 2)) - QuadElem::sqrt_of(3));
  auto j = qtwo::matrix_to_json(m);
  CHECK(j["mode"] == "exact");
  CHECK(j["order"] == 3);
  CHECK(j["scale"]["num"] == 1);
  CHECK(j["scale"]["den"] == 6);
  CHECK(j["scale"]["rad"] == 3);
  CHECK(j["entries"].size() == 6);
  SymMatrix back = qtwo::matrix_from_json(j);
  CHECK(same_exact(m, back));
  CHECK(qtwo::matrix_to_json(back) == j);
}

TEST_CASE("matrix json: unit scale and empty field are omitted") {
  SymMatrix m = qtwo::candle_matrix(4);  // integer entries, no scale
  auto j = qtwo::matrix_to_json(m);
  CHECK_FALSE(j.contains("scale"));
  CHECK_FALSE(j.contains("field"));
  SymMatrix back = qtwo::matrix_from_json(j);
  CHECK(same_exact(m, back));
}

TEST_CASE("matrix json: field lists the primes in use") {
  SymMatrix m(2, EntryMode::Exact);
  m.set_x(0, 0, QuadElem::sqrt_of(10));
  m.set_x(0, 1, QuadElem(1));
  m.set_x(1, 1, QuadElem::term(Rational(1), 3));
  auto j = qtwo::matrix_to_json(m);
  CHECK(j["field"] == nlohmann::json::array({2, 3, 5}));
}

TEST_CASE("matrix json: float matrices round trip by value") {
  SymMatrix m(2, EntryMode::Float);
  m.set_f(0, 0, 0.12345678901234567);
  m.set_f(0, 1, -3.5e-13);
  m.set_f(1, 1, 2.0 / 3.0);
  auto j = qtwo::matrix_to_json(m);
  CHECK(j["mode"] == "float");
  SymMatrix back = qtwo::matrix_from_json(j);
  CHECK(back.f(0, 0) == m.f(0, 0));
  CHECK(back.f(0, 1) == m.f(0, 1));
  CHECK(back.f(1, 1) == m.f(1, 1));
}

TEST_CASE("matrix json: malformed documents are rejected") {
  CHECK_THROWS(qtwo::matrix_from_json(nlohmann::json::object()));
  auto j = qtwo::matrix_to_json(qtwo::complete_involution(3));
  auto short_entries = j;
  short_entries["entries"].erase(0);
  CHECK_THROWS_AS(qtwo::matrix_from_json(short_entries), std::runtime_error);
  auto bad_mode = j;
  bad_mode["mode"] = "symbolic";
  CHECK_THROWS_AS(qtwo::matrix_from_json(bad_mode), std::runtime_error);
  auto float_entry = j;
  float_entry["entries"][0] = {{"f", 0.5}};  // float entry in exact mode
  CHECK_THROWS_AS(qtwo::matrix_from_json(float_entry), std::runtime_error);
}

TEST_CASE("matrix json: file io reports the path") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qtwo_json_test";
  fs::create_directories(dir);
  fs::path file = dir / "m.json";
  auto j = qtwo::matrix_to_json(qtwo::complete_involution(5));
  qtwo::save_json_file(file.string(), j);
  CHECK(qtwo::load_json_file(file.string()) == j);
  try {
    qtwo::load_json_file((dir / "missing.json").string());
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("missing.json") != std::string::npos);
  }
  std::FILE* f = std::fopen((dir / "broken.json").string().c_str(), "w");
  std::fputs("{ not json", f);
  std::fclose(f);
  CHECK_THROWS_AS(qtwo::load_json_file((dir / "broken.json").string()),
                  std::runtime_error);
  fs::remove_all(dir);
}
