#include "tropline/svg.hpp"

#include <algorithm>

namespace tropline::svg {

namespace {

constexpr int kCanvas = 640;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b"};

struct Box {
  Rational minx, miny, maxx, maxy;
};

void grow(std::optional<Box>& box, const QPoint& p) {
  if (!box) {
    box = Box{p.x, p.y, p.x, p.y};
    return;
  }
  box->minx = std::min(box->minx, p.x);
  box->maxx = std::max(box->maxx, p.x);
  box->miny = std::min(box->miny, p.y);
  box->maxy = std::max(box->maxy, p.y);
}

struct ClippedEdge {
  QPoint a, b;
};

// Exact Liang-Barsky against the box; returns the drawn portion, if any.
std::optional<ClippedEdge> clip_edge(const PlanarComplex& C,
                                     const PlanarComplex::Edge& e,
                                     const Box& box) {
  std::optional<Rational> lo, hi;
  switch (e.kind) {
    case PlanarComplex::Edge::Kind::Segment:
      lo = Rational(0);
      hi = e.length;
      break;
    case PlanarComplex::Edge::Kind::Ray:
      lo = Rational(0);
      break;
    case PlanarComplex::Edge::Kind::Line:
      break;
  }
  (void)C;
  auto tighten = [&](const Rational& d, const Rational& von, const Rational& bis) {
    // von <= base + s*d <= bis along one axis
    if (d == 0) return von <= bis;  // caller checks the constant coordinate
    const Rational s1 = von / d, s2 = bis / d;
    const Rational a = std::min(s1, s2), b = std::max(s1, s2);
    if (!lo || a > *lo) lo = a;
    if (!hi || b < *hi) hi = b;
    return true;
  };
  const Rational dx(e.dir[0]), dy(e.dir[1]);
  if (dx == 0) {
    if (e.base.x < box.minx || e.base.x > box.maxx) return std::nullopt;
  } else {
    tighten(dx, box.minx - e.base.x, box.maxx - e.base.x);
  }
  if (dy == 0) {
    if (e.base.y < box.miny || e.base.y > box.maxy) return std::nullopt;
  } else {
    tighten(dy, box.miny - e.base.y, box.maxy - e.base.y);
  }
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  auto at = [&](const Rational& s) {
    return QPoint{e.base.x + s * dx, e.base.y + s * dy};
  };
  return ClippedEdge{at(*lo), at(*hi)};
}

}  // namespace

std::string to_decimal(const Rational& r, int places) {
  Int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Int num = numerator(r) * scale;
  const Int den = denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  Int q = num / den;
  const Int rem = num % den;
  if (2 * rem >= den) q += 1;
  const Int whole = q / scale;
  const Int frac = q % scale;
  std::string fdigits = frac.str();
  fdigits.insert(fdigits.begin(), places - fdigits.size(), '0');
  std::string out = negative && (whole != 0 || frac != 0) ? "-" : "";
  out += whole.str() + "." + fdigits;
  return out;
}

std::string emit_svg(const Scene& scene) {
  bool any = !scene.marks.empty();
  for (const auto& c : scene.curves) any = any || !c.complex.edges.empty();
  if (!any) throw EmptyScene("nothing to draw");

  Box box;
  if (scene.viewbox) {
    box = Box{(*scene.viewbox)[0], (*scene.viewbox)[1], (*scene.viewbox)[2],
              (*scene.viewbox)[3]};
    if (box.minx >= box.maxx || box.miny >= box.maxy)
      throw InvalidArgument("empty view box");
  } else {
    std::optional<Box> grown;
    for (const auto& c : scene.curves) {
      for (const auto& v : c.complex.vertices) grow(grown, v);
      for (const auto& e : c.complex.edges) grow(grown, e.base);
    }
    for (const auto& m : scene.marks) grow(grown, m.point);
    box = *grown;
    Rational spanx = box.maxx - box.minx;
    Rational spany = box.maxy - box.miny;
    if (spanx == 0) spanx = 2;
    if (spany == 0) spany = 2;
    const Rational mx = spanx / 5, my = spany / 5;  // 20% margin
    box.minx -= mx;
    box.maxx += mx;
    box.miny -= my;
    box.maxy += my;
  }

  const Rational spanx = box.maxx - box.minx;
  const Rational spany = box.maxy - box.miny;
  auto px = [&](const Rational& x) {
    return to_decimal((x - box.minx) / spanx * kCanvas);
  };
  auto py = [&](const Rational& y) {
    return to_decimal((box.maxy - y) / spany * kCanvas);
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kCanvas) + "\" height=\"" + std::to_string(kCanvas) +
         "\" viewBox=\"0 0 " + std::to_string(kCanvas) + " " +
         std::to_string(kCanvas) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t ci = 0; ci < scene.curves.size(); ++ci) {
    const auto& curve = scene.curves[ci];
    const char* color = kPalette[ci % (sizeof(kPalette) / sizeof(*kPalette))];
    out += "  <g stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" fill=\"none\" data-label=\"" + curve.label +
           "\">\n";
    for (const auto& e : curve.complex.edges) {
      const auto clipped = clip_edge(curve.complex, e, box);
      if (!clipped) continue;
      out += "    <line x1=\"" + px(clipped->a.x) + "\" y1=\"" +
             py(clipped->a.y) + "\" x2=\"" + px(clipped->b.x) + "\" y2=\"" +
             py(clipped->b.y) + "\" data-base=\"" + to_string(e.base.x) + "," +
             to_string(e.base.y) + "\" data-dir=\"" + e.dir[0].str() + "," +
             e.dir[1].str() + "\" data-mult=\"" +
             std::to_string(e.multiplicity) + "\"/>\n";
    }
    for (const auto& v : curve.complex.vertices) {
      out += "    <circle cx=\"" + px(v.x) + "\" cy=\"" + py(v.y) +
             "\" r=\"3\" fill=\"" + std::string(color) + "\" stroke=\"none\"" +
             " data-exact=\"" + to_string(v.x) + "," + to_string(v.y) +
             "\"/>\n";
    }
    out += "  </g>\n";
  }

  for (const auto& m : scene.marks) {
    out += "  <circle cx=\"" + px(m.point.x) + "\" cy=\"" + py(m.point.y) +
           "\" r=\"4\" fill=\"black\" data-exact=\"" + to_string(m.point.x) +
           "," + to_string(m.point.y) + "\"/>\n";
    if (!m.label.empty()) {
      out += "  <text x=\"" + px(m.point.x) + "\" y=\"" + py(m.point.y) +
             "\" dx=\"6\" dy=\"-6\" font-size=\"12\">" + m.label + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tropline::svg
