#include "cevian/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "cevian/io.hpp"
#include "cevian/svg.hpp"
#include "cevian/torus_group.hpp"
#include "cevian/verify.hpp"

namespace cevian::cli {
namespace {

constexpr const char* kDefaultTriangle = "0,0,1,0,0.7,0.8";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operator parameters in whichever chart the user picked.
struct ParamFlags {
  std::string p, q, eta, etap;

  void attach(CLI::App* sub) {
    sub->add_option("--p", p, "cevian parameter p (complex, e.g. 1/3 or 0.5-0.2i)");
    sub->add_option("--q", q, "cevian parameter q");
    sub->add_option("--eta", eta, "eigenvalue on psi2");
    sub->add_option("--etap", etap, "eigenvalue on psi1");
  }

  bool pq_chart() const {
    const bool has_pq = !p.empty() || !q.empty();
    const bool has_eta = !eta.empty() || !etap.empty();
    if (has_pq == has_eta) throw UsageError("give the operator as either --p/--q or --eta/--etap");
    if (has_pq && (p.empty() || q.empty())) throw UsageError("--p and --q must be given together");
    if (has_eta && (eta.empty() || etap.empty())) throw UsageError("--eta and --etap must be given together");
    return has_pq;
  }

  CirculantOperator op() const {
    if (pq_chart()) return from_pq(PQPair(parse_complex(p), parse_complex(q)));
    return from_eta({parse_complex(eta), parse_complex(etap)});
  }

  /// The (p,q) coordinates as reported: the literal pair when given in that
  /// chart, otherwise the chart evaluated at (η,η').
  PqChart chart() const {
    if (pq_chart()) {
      const PQPair pq(parse_complex(p), parse_complex(q));
      return {{ChartOutcome::Determinate, pq.p()}, {ChartOutcome::Determinate, pq.q()}};
    }
    return pq_of(EtaPair{parse_complex(eta), parse_complex(etap)});
  }
};

RationalAngle parse_theta(const std::string& flag, const std::string& text) {
  try {
    return parse_rational_angle(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError,
                flag + " takes a rational angle in turns such as 1/4; decimals are not accepted (" + text + ")");
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path);
}

std::string orbit_csv(const std::vector<TriangleTriple>& path) {
  std::string s = "n,re_a,im_a,re_b,im_b,re_c,im_c\n";
  for (std::size_t n = 0; n < path.size(); ++n) s += std::to_string(n) + "," + format_triangle_csv(path[n]) + "\n";
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cevian-type triangle operators, their moduli action and orbits", "cevian"};
  app.require_subcommand(1);

  ParamFlags apply_params;
  std::string apply_triangle;
  auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a triangle");
  apply_params.attach(apply_cmd);
  apply_cmd->add_option("--triangle", apply_triangle, "re_a,im_a,re_b,im_b,re_c,im_c")->required();

  ParamFlags classify_params;
  auto* classify_cmd = app.add_subcommand("classify", "JSON report on an operator");
  classify_params.attach(classify_cmd);

  std::string theta_x, theta_y, theta_yp, orbit_triangle = kDefaultTriangle, svg_path, csv_path;
  std::optional<int> steps;
  auto* orbit_cmd = app.add_subcommand("orbit", "iterate an area-preserving operator");
  orbit_cmd->add_option("--theta-x", theta_x, "θx in turns, rational");
  orbit_cmd->add_option("--theta-y", theta_y, "θy in turns, rational")->required();
  orbit_cmd->add_option("--theta-yp", theta_yp, "θy' in turns; defaults to θy − θx");
  orbit_cmd->add_option("--triangle", orbit_triangle, "starting triangle")->capture_default_str();
  orbit_cmd->add_option("--steps", steps, "number of steps; defaults to the period")->check(CLI::NonNegativeNumber);
  orbit_cmd->add_option("--svg", svg_path, "write the orbit as SVG");
  orbit_cmd->add_option("--csv", csv_path, "write the orbit as CSV");

  long long n_points = 0;
  auto* division_cmd = app.add_subcommand("division-points", "N-division points of the torus");
  division_cmd->add_option("--n", n_points, "N")->required()->check(CLI::PositiveNumber);

  std::string suite_name = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run acceptance checks");
  verify_cmd->add_option("--suite", suite_name, "routh|napoleon|identities|torus|area|orbits|all")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (apply_cmd->parsed()) {
      const CirculantOperator op = apply_params.op();
      const TriangleTriple t = parse_triangle_csv(apply_triangle);
      const Application img = apply(op, t);
      out << format_triangle_csv(img.image) << "\n";
      out << "area_ratio," << format_real(area_shoelace(img.image) / area_shoelace(t)) << "\n";
      if (img.degenerate_output) err << "warning: image triangle is degenerate\n";
    } else if (classify_cmd->parsed()) {
      const CirculantOperator op = classify_params.op();
      out << classification_json(classify(op), classify_params.chart()).dump(2) << "\n";
    } else if (orbit_cmd->parsed()) {
      const RationalAngle y = parse_theta("--theta-y", theta_y);
      if (theta_x.empty() && theta_yp.empty()) throw UsageError("orbit needs --theta-x or --theta-yp");
      const RationalAngle yp = theta_yp.empty() ? y - parse_theta("--theta-x", theta_x)
                                                : parse_theta("--theta-yp", theta_yp);
      const RationalAngle x = theta_x.empty() ? y - yp : parse_theta("--theta-x", theta_x);
      const ApOperator ap = make_ap(x, y, yp);
      const TriangleTriple start = parse_triangle_csv(orbit_triangle);
      const auto n = steps ? static_cast<std::int64_t>(*steps) : period(ap);
      if (n > 1'000'000) throw UsageError("orbit of " + std::to_string(n) + " steps is too long; pass --steps");
      const auto path = orbit(ap, start, static_cast<int>(n));
      if (!svg_path.empty()) write_file(svg_path, render_svg(make_scene(path)));
      if (!csv_path.empty()) write_file(csv_path, orbit_csv(path));
      if (svg_path.empty() && csv_path.empty()) out << orbit_csv(path);
    } else if (division_cmd->parsed()) {
      for (const auto& t : division_points(n_points)) {
        out << (t.t().is_infinite() ? std::string("inf") : format_real(t.t().value().real())) << "\n";
      }
    } else if (verify_cmd->parsed()) {
      const auto suite = verify::parse_suite(suite_name);
      if (!suite) throw UsageError("unknown suite '" + suite_name + "'");
      bool all_passed = true;
      for (const auto& r : verify::run_suite(*suite)) {
        out << verify::format_result(r) << "\n";
        all_passed = all_passed && r.passed;
      }
      return all_passed ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace cevian::cli
