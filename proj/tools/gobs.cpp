// gobs - enumerate, scan and certify Gabor frame obstructions for B-spline
// windows. See README.md for the file formats and the exit code table.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gobs/bspline.hpp"
#include "gobs/certify.hpp"
#include "gobs/errors.hpp"
#include "gobs/io.hpp"
#include "gobs/sets.hpp"
#include "gobs/verify.hpp"
#include "gobs/zak.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitNotInH = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitUsage = 64;

struct OutputTargets {
  std::string path;    // empty: stdout (csv only)
  std::string format;  // csv | svg | both
};

std::string strip_known_ext(const std::string& p) {
  for (const char* ext : {".csv", ".svg"}) {
    if (p.size() > 4 && p.substr(p.size() - 4) == ext) return p.substr(0, p.size() - 4);
  }
  return p;
}

void emit(const OutputTargets& out, const std::string& csv, const std::string& svg) {
  const bool want_csv = out.format == "csv" || out.format == "both";
  const bool want_svg = out.format == "svg" || out.format == "both";
  if (out.path.empty()) {
    if (out.format == "both") {
      throw gobs::precondition_error("--format both requires --out");
    }
    std::cout << (want_csv ? csv : svg);
    return;
  }
  auto write_file = [](const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << body;
    if (!f) throw std::runtime_error("write failed: " + path);
  };
  if (out.format == "both") {
    std::string stem = strip_known_ext(out.path);
    write_file(stem + ".csv", csv);
    write_file(stem + ".svg", svg);
  } else if (want_csv) {
    write_file(out.path, csv);
  } else if (want_svg) {
    write_file(out.path, svg);
  }
}

gobs::Rational parse_rational_arg(const std::string& s, const char* flag) {
  try {
    return gobs::Rational::parse(s);
  } catch (const gobs::precondition_error& e) {
    throw gobs::precondition_error(std::string(flag) + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabor frame obstructions for B-spline windows"};
  app.require_subcommand(1);

  // shared option storage
  std::string a_str, b_str, b_max_str = "15", b_min_str = "0", out_path;
  std::string format = "csv";
  long long r_max = 50;
  int n = 2;
  int grid = 64;
  bool widen = false;
  std::vector<int> orders;
  long long q_cap = 60;
  int probes = 10;

  auto* enum_p = app.add_subcommand("enum-p", "enumerate the point obstruction set P");
  enum_p->add_option("--b-max", b_max_str, "largest b0 to enumerate");
  enum_p->add_option("--r-max", r_max, "largest r to enumerate (the set is infinite in r)")
      ->required();
  enum_p->add_option("--out", out_path, "output path (default: stdout)");
  enum_p->add_option("--format", format, "csv | svg | both")
      ->check(CLI::IsMember({"csv", "svg", "both"}));

  auto* enum_h = app.add_subcommand("enum-h", "enumerate the hyperbolic obstruction set H");
  std::string color_by = "ab";
  enum_h->add_option("--n", n, "B-spline order");
  enum_h->add_option("--b-max", b_max_str, "largest b0 to enumerate");
  enum_h->add_option("--b-min", b_min_str, "zoom: drop segments with b0 below this");
  enum_h->add_option("--r-max", r_max, "largest r to enumerate")->required();
  enum_h->add_option("--color-by", color_by, "SVG segment color: ab | r (log scale)")
      ->check(CLI::IsMember({"ab", "r"}));
  enum_h->add_option("--out", out_path, "output path (default: stdout)");
  enum_h->add_option("--format", format, "csv | svg | both")
      ->check(CLI::IsMember({"csv", "svg", "both"}));

  auto* scan_cmd = app.add_subcommand("scan", "sigma_min field of the Zibulski-Zeevi matrix");
  scan_cmd->add_option("--n", n, "B-spline order");
  scan_cmd->add_option("--a", a_str, "lattice parameter a, exact (p/q or decimal)")->required();
  scan_cmd->add_option("--b", b_str, "lattice parameter b, exact")->required();
  scan_cmd->add_option("--grid", grid, "grid resolution M (closed grid including 0)");
  scan_cmd->add_option("--out", out_path, "output path (default: stdout)");

  auto* certify = app.add_subcommand("certify", "non-frame certificate for (a, b)");
  certify->add_option("--n", n, "B-spline order");
  certify->add_option("--a", a_str, "lattice parameter a, exact")->required();
  certify->add_option("--b", b_str, "lattice parameter b, exact")->required();
  certify->add_option("--out", out_path, "certificate path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "run the exact property suites");
  verify->add_option("--b-max", b_max_str, "enumeration bound");
  verify->add_option("--r-max", r_max, "enumeration bound");
  verify->add_option("--n", orders, "B-spline orders for containment (repeatable)");
  verify->add_flag("--widen", widen, "debug: widen segments to mu - k (tightness probe)");
  verify->add_option("--q-cap", q_cap, "cancellation suite: largest q");
  verify->add_option("--probes", probes, "cancellation suite: probes per point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enum_p) {
      auto pts = gobs::enum_P(parse_rational_arg(b_max_str, "--b-max"), r_max);
      std::ostringstream csv, svg;
      gobs::write_enum_p_csv(csv, pts);
      gobs::write_enum_p_svg(svg, pts);
      emit({out_path, format}, csv.str(), svg.str());
      return kExitOk;
    }
    if (*enum_h) {
      auto b_min = parse_rational_arg(b_min_str, "--b-min");
      std::vector<gobs::HyperbolicSegment> segs;
      for (const auto& pt : gobs::enum_P(parse_rational_arg(b_max_str, "--b-max"), r_max)) {
        if (pt.b0 < b_min) continue;
        segs.push_back(gobs::segment_H(pt, n));
      }
      std::ostringstream csv, svg;
      gobs::write_enum_h_csv(csv, segs);
      gobs::write_enum_h_svg(svg, segs, /*tile_overlay=*/true,
                             color_by == "r" ? gobs::SegmentColor::by_r
                                             : gobs::SegmentColor::by_ab);
      emit({out_path, format}, csv.str(), svg.str());
      return kExitOk;
    }
    if (*scan_cmd) {
      auto lat = gobs::LatticeParams::create(parse_rational_arg(a_str, "--a"),
                                             parse_rational_arg(b_str, "--b"));
      gobs::ScanResult res = gobs::scan(n, lat, grid);
      std::ostringstream csv;
      gobs::write_scan_csv(csv, res);
      emit({out_path, "csv"}, csv.str(), "");
      return kExitOk;
    }
    if (*certify) {
      auto outcome = gobs::certify_nonframe(n, parse_rational_arg(a_str, "--a"),
                                            parse_rational_arg(b_str, "--b"));
      if (std::holds_alternative<gobs::NotInH>(outcome)) {
        const auto& miss = std::get<gobs::NotInH>(outcome);
        std::cerr << "not in H: " << miss.detail << " (factorizations examined: "
                  << miss.factorizations.size() << ")\n";
        return kExitNotInH;
      }
      const auto& cert = std::get<gobs::Certificate>(outcome);
      emit({out_path, "csv"}, gobs::to_record(cert), "");
      if (!cert.verified()) {
        std::cerr << "certificate failed verification: " << cert.reason << "\n";
        return kExitFail;
      }
      return kExitOk;
    }
    if (*verify) {
      gobs::VerifyOptions opt;
      opt.b_max = parse_rational_arg(b_max_str, "--b-max");
      opt.r_max = r_max;
      if (!orders.empty()) opt.orders = orders;
      opt.widen = widen;
      opt.cancellation_q_cap = q_cap;
      opt.cancellation_probes = probes;
      gobs::VerifyReport rep = gobs::run_verify_suites(opt);
      gobs::print_report(std::cout, rep);
      return rep.all_pass() ? kExitOk : kExitFail;
    }
  } catch (const gobs::infeasible_witness& e) {
    std::cerr << "infeasible witness: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const gobs::degenerate_constant& e) {
    std::cerr << "degenerate constant: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const gobs::precondition_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
