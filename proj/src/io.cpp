#include "gobs/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace gobs {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_enum_p_csv(std::ostream& os, const std::vector<ObstructionParams>& pts) {
  os << "a,b,ab,mu,r,k,p,q,a_dec,b_dec,ab_dec\n";
  for (const auto& pt : pts) {
    Rational ab(pt.p, pt.q);
    os << pt.a0.to_string() << ',' << pt.b0.to_string() << ',' << ab.to_string() << ','
       << pt.mu << ',' << pt.r << ',' << pt.k << ',' << pt.p << ',' << pt.q << ','
       << format_double(pt.a0.to_double()) << ',' << format_double(pt.b0.to_double()) << ','
       << format_double(ab.to_double()) << '\n';
  }
}

void write_enum_h_csv(std::ostream& os, const std::vector<HyperbolicSegment>& segs) {
  os << "mu,r,k,p,q,n,b0,b_lo,b_hi,half_width,ab,b0_dec,b_lo_dec,b_hi_dec,ab_dec\n";
  for (const auto& s : segs) {
    os << s.center.mu << ',' << s.center.r << ',' << s.center.k << ',' << s.center.p << ','
       << s.center.q << ',' << s.n << ',' << s.center.b0.to_string() << ','
       << s.b_lo.to_string() << ',' << s.b_hi.to_string() << ',' << s.half_width.to_string()
       << ',' << s.ab.to_string() << ',' << format_double(s.center.b0.to_double()) << ','
       << format_double(s.b_lo.to_double()) << ',' << format_double(s.b_hi.to_double()) << ','
       << format_double(s.ab.to_double()) << '\n';
  }
}

void write_scan_csv(std::ostream& os, const ScanResult& res) {
  os << "# rows: x = i/M, columns: gamma = j/M, M = " << res.M << ", argmin x = "
     << res.argmin_i << "/" << res.M << ", gamma = " << res.argmin_j << "/" << res.M
     << ", sigma_min = " << format_double(res.min) << "\n";
  for (int i = 0; i < res.M; ++i) {
    for (int j = 0; j < res.M; ++j) {
      if (j) os << ',';
      os << format_double(res.values[static_cast<size_t>(i) * res.M + j]);
    }
    os << '\n';
  }
}

namespace {

struct Frame {
  // data ranges
  double a_lo, a_hi, b_lo, b_hi;
  static constexpr double kW = 840.0, kH = 640.0, kPad = 40.0;

  double sx(double a) const {
    double span = a_hi - a_lo;
    if (span <= 0.0) span = 1.0;
    return kPad + (a - a_lo) / span * (kW - 2 * kPad);
  }
  double sy(double b) const {
    double span = b_hi - b_lo;
    if (span <= 0.0) span = 1.0;
    return kH - kPad - (b - b_lo) / span * (kH - 2 * kPad);
  }
};

// density in (1/2, 1) -> blue..red hue
std::string density_color(double ab) {
  double t = std::clamp((ab - 0.5) / 0.5, 0.0, 1.0);
  int hue = static_cast<int>(240.0 * (1.0 - t));
  return "hsl(" + std::to_string(hue) + ",85%,45%)";
}

// r in [2, r_hi] on a log scale -> blue..red hue
std::string log_r_color(long long r, long long r_hi) {
  double t = r_hi > 2 ? std::log(static_cast<double>(r) / 2.0) /
                            std::log(static_cast<double>(r_hi) / 2.0)
                      : 0.0;
  int hue = static_cast<int>(240.0 * (1.0 - std::clamp(t, 0.0, 1.0)));
  return "hsl(" + std::to_string(hue) + ",85%,45%)";
}

void svg_open(std::ostream& os) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 840 640\">\n";
  os << "<rect width=\"840\" height=\"640\" fill=\"white\"/>\n";
}

void svg_tiles(std::ostream& os, const Frame& f) {
  long long n_lo = std::max<long long>(2, static_cast<long long>(std::floor(f.b_lo)));
  long long n_hi = static_cast<long long>(std::ceil(f.b_hi));
  for (long long N = n_lo; N <= n_hi; ++N) {
    for (int curve = 0; curve < 2; ++curve) {
      os << "<polyline class=\"tile\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.6\" "
            "stroke-dasharray=\"4 3\" points=\"";
      const int steps = 64;
      bool any = false;
      for (int t = 0; t <= steps; ++t) {
        double a = f.a_lo + (f.a_hi - f.a_lo) * t / steps;
        if (a <= 0.0) continue;
        // b(1-a) = N and b(1+a) = N+1
        double b = curve == 0 ? static_cast<double>(N) / (1.0 - a)
                              : static_cast<double>(N + 1) / (1.0 + a);
        if (!(b >= f.b_lo && b <= f.b_hi)) continue;
        os << format_double(f.sx(a)) << ',' << format_double(f.sy(b)) << ' ';
        any = true;
      }
      os << "\"/>\n";
      (void)any;
    }
  }
}

}  // namespace

void write_enum_p_svg(std::ostream& os, const std::vector<ObstructionParams>& pts) {
  Frame f{0.0, 0.4, 2.0, 2.5, };
  for (const auto& pt : pts) {
    f.a_hi = std::max(f.a_hi, pt.a0.to_double() * 1.1);
    f.b_hi = std::max(f.b_hi, pt.b0.to_double() + 0.5);
  }
  svg_open(os);
  for (const auto& pt : pts) {
    double ab = static_cast<double>(pt.p) / static_cast<double>(pt.q);
    os << "<circle class=\"pt\" cx=\"" << format_double(f.sx(pt.a0.to_double())) << "\" cy=\""
       << format_double(f.sy(pt.b0.to_double())) << "\" r=\"2\" fill=\"" << density_color(ab)
       << "\"/>\n";
  }
  os << "</svg>\n";
}

void write_enum_h_svg(std::ostream& os, const std::vector<HyperbolicSegment>& segs,
                      bool tile_overlay, SegmentColor color) {
  Frame f{0.0, 0.4, 2.0, 2.5};
  long long r_hi = 2;
  for (const auto& s : segs) {
    f.a_hi = std::max(f.a_hi, (s.ab / s.b_lo).to_double() * 1.1);
    f.b_hi = std::max(f.b_hi, s.b_hi.to_double() + 0.5);
    r_hi = std::max(r_hi, s.center.r);
  }
  svg_open(os);
  if (tile_overlay) svg_tiles(os, f);
  for (const auto& s : segs) {
    std::string stroke = color == SegmentColor::by_ab
                             ? density_color(s.ab.to_double())
                             : log_r_color(s.center.r, r_hi);
    os << "<polyline class=\"seg\" fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"1.2\" points=\"";
    const int steps = 16;
    for (int t = 0; t <= steps; ++t) {
      Rational b = s.b_lo + (s.b_hi - s.b_lo) * Rational(t, steps);
      Rational a = s.ab / b;
      os << format_double(f.sx(a.to_double())) << ',' << format_double(f.sy(b.to_double()));
      if (t != steps) os << ' ';
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace gobs
