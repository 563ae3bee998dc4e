#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monograph/json_io.hpp"
#include "monograph/svg.hpp"

using namespace monograph;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("rationals cross the boundary as reduced strings") {
  CHECK(rational_to_json(Rational(2, 4)) == "1/2");
  CHECK(rational_to_json(Rational(-7)) == "-7");
  CHECK(rational_from_json(nlohmann::json("22/7")) == Rational(22, 7));
  CHECK_THROWS_AS(rational_from_json(nlohmann::json("x")), std::invalid_argument);
}

TEST_CASE("piecewise-linear functions round-trip bit-exactly") {
  PLFunction f({Rational(0), Rational(1, 3), Rational(1)},
               {Rational(-1, 2), Rational(5, 7), Rational(0)});
  nlohmann::json j = pl_to_json(f);
  CHECK(j.contains("breakpoints"));
  CHECK(j.contains("values"));
  PLFunction g = pl_from_json(j);
  CHECK(g.breakpoints() == f.breakpoints());
  CHECK(g.values() == f.values());
  CHECK(pl_to_json(g) == j);
}

TEST_CASE("peak-sum models round-trip bit-exactly") {
  PeakSumModel m = peak_build(2);
  nlohmann::json j = model_to_json(m);
  PeakSumModel back = model_from_json(j);
  CHECK(back.peaks == m.peaks);
  CHECK(back.q == m.q);
  CHECK(back.a == m.a);
  CHECK(back.b == m.b);
  CHECK(back.s == m.s);
  CHECK(back.delta == m.delta);
  CHECK(back.eps == m.eps);
  CHECK(model_to_json(back) == j);
}

TEST_CASE("certificates serialize with their witnesses") {
  PLFunction tent({Rational(0), Rational(1, 2), Rational(1)},
                  {Rational(0), Rational(1, 2), Rational(0)});
  PcCertificate cert = check_pc(tent, Rational(1, 3));
  nlohmann::json j = pc_certificate_to_json(cert);
  CHECK(j["outcome"] == "Fail");
  PcCertificate back = pc_certificate_from_json(j);
  CHECK_FALSE(back.pass);
  REQUIRE(back.witness.has_value());
  CHECK(back.witness->x == cert.witness->x);
  CHECK(back.witness->t == cert.witness->t);
  CHECK(back.witness->y == cert.witness->y);
  CHECK(back.c == Rational(1, 3));

  auto w = refute_monotone(tent, Rational(7, 10), 6);
  REQUIRE(w.has_value());
  nlohmann::json jw = witness_to_json(*w);
  WitnessTriple wb = witness_from_json(jw);
  CHECK(wb.x == w->x);
  CHECK(wb.y == w->y);
  CHECK(wb.z == w->z);
  CHECK(wb.side == w->side);
  CHECK(wb.ratio_sq == w->ratio_sq);
  CHECK(wb.ratio_lb == w->ratio_lb);
}

TEST_CASE("atomic writes leave a complete file and no temp droppings") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "monograph_io_test";
  fs::create_directories(dir);
  fs::path target = dir / "out.json";
  write_json_atomic(target.string(), nlohmann::json{{"k", "3/4"}});
  CHECK(nlohmann::json::parse(slurp(target.string()))["k"] == "3/4");
  // Overwrite works and directory holds only the final file.
  write_text_atomic(target.string(), "hello");
  CHECK(slurp(target.string()) == "hello");
  std::size_t entries = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++entries;
  }
  CHECK(entries == 1);
  fs::remove_all(dir);
}

TEST_CASE("identical drawing input yields byte-identical output") {
  SvgSeries s;
  for (int k = 0; k <= 10; ++k) s.points.push_back({k / 10.0, (k % 3) / 3.0});
  std::vector<SvgRect> rects{{0.2, 0.1, 0.3, 0.18}};
  std::vector<SvgCircle> circles{{0.5, 0.5, 0.05}};
  std::string a = render_svg({s}, rects, circles);
  std::string b = render_svg({s}, rects, circles);
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("<polyline") != std::string::npos);
  CHECK(a.find("<rect") != std::string::npos);
  CHECK(a.find("<circle") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);
  // A different input really changes the bytes.
  circles[0].r = 0.06;
  CHECK(render_svg({s}, rects, circles) != a);
}
