#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "aztec/asymptotics.hpp"
#include "aztec/errors.hpp"
#include "aztec/format.hpp"
#include "aztec/render.hpp"

namespace aztec::render {

using regions::Domino;
using regions::Klass;
using regions::Orientation;
using regions::PolarLabel;

namespace {

int klass_slot(Klass k) {
  switch (k) {
    case Klass::north: return 0;
    case Klass::south: return 1;
    case Klass::east: return 2;
    case Klass::west: return 3;
  }
  return 0;
}

bool valid_color(const std::string& c) {
  if (c.size() != 4 && c.size() != 7) return false;
  if (c[0] != '#') return false;
  return std::all_of(c.begin() + 1, c.end(), [](char ch) { return std::isxdigit(static_cast<unsigned char>(ch)); });
}

}  // namespace

std::array<std::string, 4> parse_palette(const std::string& text, std::array<std::string, 4> base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() < 3 || item[1] != '=') throw DomainError("palette entry must look like N=#rrggbb: " + item);
    const std::string color = item.substr(2);
    if (!valid_color(color)) throw DomainError("bad palette color: " + color);
    base[klass_slot(regions::klass_from_letter(item[0]))] = color;
  }
  return base;
}

void write_svg(std::ostream& os, const regions::Tiling& t, const SvgOptions& opts) {
  if (!(opts.scale > 0.0)) throw DomainError("scale must be positive");
  const auto& r = t.region();
  const double s = opts.scale;
  const double pad = s;
  const long x0 = r.imin(), y1 = r.jmin() + r.height();
  const double w = r.width() * s + 2 * pad, h = r.height() * s + 2 * pad;
  auto px = [&](double x) { return pad + (x - x0) * s; };
  auto py = [&](double y) { return pad + (y1 - y) * s; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- " << output_header().substr(2) << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_real(w) << "\" height=\"" << format_real(h)
     << "\" viewBox=\"0 0 " << format_real(w) << ' ' << format_real(h) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto ds = t.dominos();
  std::vector<PolarLabel> labels;
  if (opts.polar) labels = regions::polar_classify(t);
  os << "<g stroke=\"#222\" stroke-width=\"" << format_real(std::max(0.5, s / 20)) << "\">\n";
  const double inset = s * 0.06, round = s * 0.25;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const Domino& d = ds[k];
    const bool horiz = d.orient == Orientation::horizontal;
    const double dx = horiz ? 2 : 1, dy = horiz ? 1 : 2;
    const Klass kl = regions::classify(d, r);
    double opacity = 1.0;
    if (opts.polar && labels[k] == PolarLabel::temperate) opacity = 0.35;
    os << "<rect x=\"" << format_real(px(d.anchor.i) + inset) << "\" y=\"" << format_real(py(d.anchor.j + dy) + inset)
       << "\" width=\"" << format_real(dx * s - 2 * inset) << "\" height=\"" << format_real(dy * s - 2 * inset)
       << "\" rx=\"" << format_real(round) << "\" fill=\"" << opts.palette[klass_slot(kl)] << '"';
    if (opacity < 1.0) os << " fill-opacity=\"" << format_real(opacity) << '"';
    os << "/>\n";
  }
  os << "</g>\n";

  const auto n = r.order_hint();
  if (opts.heights) {
    const auto hf = regions::height_from_tiling(t);
    long lo = 0, hi = 1;
    for (const auto& [v, val] : hf.entries()) {
      lo = std::min(lo, val);
      hi = std::max(hi, val);
    }
    os << "<g>\n";
    for (const auto& [v, val] : hf.entries()) {
      const int g = static_cast<int>(std::lround(230.0 * (val - lo) / static_cast<double>(hi - lo)));
      os << "<circle cx=\"" << format_real(px(v.x)) << "\" cy=\"" << format_real(py(v.y)) << "\" r=\""
         << format_real(s * 0.15) << "\" fill=\"rgb(" << g << ',' << g << ',' << g << ")\"/>\n";
      if (r.width() <= 24)
        os << "<text x=\"" << format_real(px(v.x) + s * 0.12) << "\" y=\"" << format_real(py(v.y) - s * 0.12)
           << "\" font-size=\"" << format_real(s * 0.3) << "\">" << val << "</text>\n";
    }
    os << "</g>\n";
  }
  if (n) {
    const double nd = static_cast<double>(*n);
    if (opts.overlay) {
      const double p = opts.bias.value_or(0.5);
      // x^2/p + y^2/(1-p) = 1 in units of n, centred at the origin
      os << "<ellipse cx=\"" << format_real(px(0)) << "\" cy=\"" << format_real(py(0)) << "\" rx=\""
         << format_real(std::sqrt(p) * nd * s) << "\" ry=\"" << format_real(std::sqrt(1 - p) * nd * s)
         << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << format_real(std::max(1.0, s / 8))
         << "\" stroke-dasharray=\"" << format_real(s / 2) << "\"/>\n";
    }
    if (opts.levels) {
      os << "<g fill=\"black\">\n";
      for (double lev : {0.1, 0.25, 0.4}) {
        for (const auto& pt : asym::level_curve(lev).sample(400))
          os << "<circle cx=\"" << format_real(px(pt.x * nd)) << "\" cy=\"" << format_real(py(pt.y * nd))
             << "\" r=\"" << format_real(std::max(0.6, s / 12)) << "\"/>\n";
      }
      os << "</g>\n";
    }
  }
  os << "</svg>\n";
}

}  // namespace aztec::render
