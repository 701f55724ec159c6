#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cevian/cli.hpp"
#include "cevian/io.hpp"
#include "cevian/svg.hpp"
#include "support.hpp"

using namespace cevian;
using cevian::testing::close;

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cevian_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<TriangleTriple> polygons_in(const std::string& svg) {
  static const std::regex poly(R"re(<polygon points="([^"]*)")re");
  std::vector<TriangleTriple> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
    std::istringstream pts((*it)[1].str());
    std::array<Complex, 3> v;
    for (auto& z : v) {
      double x, y;
      char comma;
      pts >> x >> comma >> y;
      z = {x, -y};
    }
    out.push_back(TriangleTriple::unchecked(v[0], v[1], v[2]));
  }
  return out;
}

}  // namespace

TEST_CASE("complex literals") {
  CHECK(parse_complex("0.7+0.8i") == Complex(0.7, 0.8));
  CHECK(parse_complex("1") == Complex(1.0, 0.0));
  CHECK(parse_complex(" 0.7 - 0.8 i ") == Complex(0.7, -0.8));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("2.5i") == Complex(0.0, 2.5));
  CHECK(parse_complex("1/3") == Complex(1.0 / 3.0, 0.0));
  CHECK(parse_complex("1/3-2/7i") == Complex(1.0 / 3.0, -2.0 / 7.0));
  CHECK(parse_complex("1e-3+2E2i") == Complex(1e-3, 200.0));
  for (const char* bad : {"2+", "", "i+1", "1+2", "abc", "1/0", "1++2i", "1+2i3", "0.7+0.8j"}) {
    try {
      parse_complex(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
  try {
    parse_complex("1+2x");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("triangle records") {
  const TriangleTriple t = parse_triangle_csv("0,0,1,0,0.7,0.8");
  CHECK(t == TriangleTriple::unchecked(0.0, 1.0, Complex(0.7, 0.8)));
  CHECK(parse_triangle_csv(format_triangle_csv(t)) == t);
  CHECK_THROWS_AS(parse_triangle_csv("0,0,1,0,0.7"), Error);
  CHECK_THROWS_AS(parse_triangle_csv("0,0,0,0,1,1"), Error);
  const TriangleTriple awkward = TriangleTriple::unchecked(Complex(1.0 / 3, -2.0 / 7), 1e-17, Complex(3e5, 0.1));
  CHECK(parse_triangle_csv(format_triangle_csv(awkward)) == awkward);
}

TEST_CASE("apply") {
  const Result r = run_cli({"apply", "--p", "1/3", "--q", "2/3", "--triangle", "0,0,1,0,0.7,0.8"});
  REQUIRE(r.code == cli::kExitOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 2);
  CHECK(out[1].rfind("area_ratio,0.142857142857", 0) == 0);

  // bit-for-bit agreement with the library on the same parsed inputs
  const auto op = from_pq(PQPair(parse_complex("1/3"), parse_complex("2/3")));
  const auto img = apply(op, parse_triangle_csv("0,0,1,0,0.7,0.8")).image;
  CHECK(out[0] == format_triangle_csv(img));
  CHECK(parse_triangle_csv(out[0]) == img);

  const Result napoleon = run_cli({"apply", "--eta", "0", "--etap", "-1", "--triangle", "0,0,1,0,0.7,0.8"});
  REQUIRE(napoleon.code == cli::kExitOk);
  CHECK(std::abs(fourier(parse_triangle_csv(lines(napoleon.out)[0])).psi2) < 1e-15);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"apply", "--p", "1/3", "--triangle", "0,0,1,0,0.7,0.8"}).code == cli::kExitUsage);
  CHECK(run_cli({"apply", "--p", "1/3", "--q", "1/3", "--eta", "1", "--etap", "1", "--triangle", "0,0,1,0,1,1"})
            .code == cli::kExitUsage);
  CHECK(run_cli({"apply", "--p", "2+", "--q", "1", "--triangle", "0,0,1,0,1,1"}).code == cli::kExitUsage);
  CHECK(run_cli({"apply", "--p", "1/3", "--q", "2/3", "--triangle", "0,0,1,0"}).code == cli::kExitUsage);

  const Result pole = run_cli({"apply", "--p", "2", "--q", "1/2", "--triangle", "0,0,1,0,0.7,0.8"});
  CHECK(pole.code == cli::kExitDomain);
  CHECK(pole.out.empty());
  CHECK(pole.err.find("InvalidParameters") != std::string::npos);

  CHECK(run_cli({"apply", "--p", "1/3", "--q", "2/3", "--triangle", "0,0,0,0,1,1"}).code == cli::kExitDomain);
  CHECK(run_cli({"division-points", "--n", "0"}).code == cli::kExitUsage);
  CHECK(run_cli({"verify", "--suite", "nope"}).code == cli::kExitUsage);

  const Result help = run_cli({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("division-points") != std::string::npos);
}

TEST_CASE("classify") {
  const Result r = run_cli({"classify", "--p", "0", "--q", "1/3-1/3*0i"});
  CHECK(r.code == cli::kExitUsage);

  const Complex q = (1.0 - kOmega2) / 3.0;
  const std::string q_text = format_real(q.real()) + "+" + format_real(q.imag()) + "i";
  const Result pq = run_cli({"classify", "--p", "0", "--q", q_text});
  REQUIRE(pq.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(pq.out);
  CHECK(j["regular"] == true);
  CHECK(j["normal"] == false);
  CHECK(j["collapses_moduli"] == true);
  CHECK(j["identity"] == false);

  const Result eta = run_cli({"classify", "--eta", "0", "--etap", "-1"});
  REQUIRE(eta.code == cli::kExitOk);
  const auto k = nlohmann::json::parse(eta.out);
  for (const char* flag : {"regular", "normal", "area_preserving", "identity", "cyclic", "collapses_moduli"}) {
    CHECK(j[flag] == k[flag]);
  }

  // same operator named in both charts
  for (const auto& [p, qq] : {std::pair{"1/3", "2/3"}, std::pair{"0.2+0.4i", "-1.5"}, std::pair{"1", "0.3"}}) {
    const PQPair pair(parse_complex(p), parse_complex(qq));
    const EtaPair e = eta_of(from_pq(pair));
    auto text = [](Complex z) { return format_real(z.real()) + (z.imag() < 0 ? "" : "+") + format_real(z.imag()) + "i"; };
    const auto a = nlohmann::json::parse(run_cli({"classify", "--p", p, "--q", qq}).out);
    const auto b = nlohmann::json::parse(run_cli({"classify", "--eta", text(e.eta), "--etap", text(e.etap)}).out);
    for (const char* flag : {"regular", "normal", "area_preserving", "identity", "cyclic", "collapses_moduli"}) {
      CHECK(a[flag] == b[flag]);
    }
    for (const char* key : {"eta", "etap"}) {
      CHECK(a[key]["re"].get<double>() == doctest::Approx(b[key]["re"].get<double>()).epsilon(1e-14));
      CHECK(a[key]["im"].get<double>() == doctest::Approx(b[key]["im"].get<double>()).epsilon(1e-14));
    }
  }

  const auto cyc = nlohmann::json::parse(run_cli({"classify", "--eta", "-1/2-0.8660254037844386i", "--etap",
                                                  "-1/2+0.8660254037844386i"}).out);
  CHECK(cyc["cyclic"] == true);
  CHECK(cyc["p"].is_null());
}

TEST_CASE("orbit") {
  const fs::path svg = scratch("orbit20.svg");
  const fs::path csv = scratch("orbit20.csv");
  fs::remove(svg);
  fs::remove(csv);
  const Result r = run_cli({"orbit", "--theta-x", "1/4", "--theta-y", "1/5", "--steps", "20", "--svg", svg.string(),
                            "--csv", csv.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.empty());

  const std::string doc = slurp(svg);
  const auto polys = polygons_in(doc);
  REQUIRE(polys.size() == 21);
  CHECK(close(polys.front(), polys.back(), 1e-5));
  CHECK(doc.rfind("<?xml", 0) == 0);
  CHECK(doc.find("</svg>") != std::string::npos);
  CHECK(doc.find("fill=\"none\"") != std::string::npos);

  const auto rows = lines(slurp(csv));
  REQUIRE(rows.size() == 22);
  CHECK(rows[0] == "n,re_a,im_a,re_b,im_b,re_c,im_c");
  CHECK(rows[1] == "0,0,0,1,0,0.69999999999999996,0.80000000000000004");
  const auto last = parse_triangle_csv(rows[21].substr(rows[21].find(',') + 1));
  CHECK(close(last, parse_triangle_csv("0,0,1,0,0.7,0.8"), 1e-9));

  // deterministic output
  const fs::path again = scratch("orbit20b.svg");
  run_cli({"orbit", "--theta-x", "1/4", "--theta-y", "1/5", "--steps", "20", "--svg", again.string()});
  CHECK(slurp(again) == doc);

  // default steps is the period; θy' may replace θx
  const Result by_period = run_cli({"orbit", "--theta-y", "1/7", "--theta-yp", "25/28"});
  REQUIRE(by_period.code == cli::kExitOk);
  CHECK(lines(by_period.out).size() == 30);

  const Result decimal = run_cli({"orbit", "--theta-x", "0.25", "--theta-y", "1/5"});
  CHECK(decimal.code == cli::kExitUsage);
  CHECK(decimal.err.find("rational") != std::string::npos);

  CHECK(run_cli({"orbit", "--theta-x", "1/4", "--theta-y", "1/5", "--theta-yp", "1/5"}).code == cli::kExitDomain);
}

TEST_CASE("division points") {
  const Result r = run_cli({"division-points", "--n", "3"});
  REQUIRE(r.code == cli::kExitOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == "0");
  CHECK(out[2] == "inf");
  CHECK(std::stod(out[1]) == doctest::Approx(std::sin(std::numbers::pi / 3) / std::sin(2 * std::numbers::pi / 3)));

  const auto two = lines(run_cli({"division-points", "--n", "2"}).out);
  REQUIRE(two.size() == 2);
  CHECK(std::stod(two[1]) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("verify") {
  const Result r = run_cli({"verify", "--suite", "routh"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("PASS [ 1]", 0) == 0);
  CHECK(lines(r.out).size() == 1);
  CHECK(lines(run_cli({"verify", "--suite", "torus"}).out).size() == 3);
}

TEST_CASE("svg scene") {
  const TriangleTriple eq = make_triple(1.0, kOmega, kOmega2);
  const std::vector<TriangleTriple> one{eq};
  const SvgScene scene = make_scene(one);
  REQUIRE(scene.polygons.size() == 1);
  const double pad = 0.05 * kSqrt3;  // 5% of the larger side
  CHECK(scene.viewbox.min_x == doctest::Approx(-0.5 - pad));
  CHECK(scene.viewbox.width == doctest::Approx(1.5 + 2 * pad));
  CHECK(scene.viewbox.min_y == doctest::Approx(-kSqrt3 / 2 - pad));
  CHECK(scene.viewbox.height == doctest::Approx(kSqrt3 + 2 * pad));
  const std::string doc = render_svg(scene);
  CHECK(polygons_in(doc).size() == 1);
  CHECK(render_svg(make_scene(one)) == doc);
  CHECK_THROWS(make_scene(std::vector<TriangleTriple>{}));

  // every vertex sits inside the viewbox
  const std::vector<TriangleTriple> many{eq, make_triple(0.0, 3.0, Complex(1.0, -2.0))};
  const SvgScene s2 = make_scene(many);
  for (const auto& t : many) {
    for (Complex v : t.vertices()) {
      CHECK(v.real() > s2.viewbox.min_x);
      CHECK(v.real() < s2.viewbox.min_x + s2.viewbox.width);
      CHECK(-v.imag() > s2.viewbox.min_y);
      CHECK(-v.imag() < s2.viewbox.min_y + s2.viewbox.height);
    }
  }
}
