#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tropline/tropcurve.hpp"

namespace tropline::svg {

struct Scene {
  struct Curve {
    PlanarComplex complex;
    std::string label;
  };
  struct Mark {
    QPoint point;
    std::string label;
  };

  std::vector<Curve> curves;
  std::vector<Mark> marks;
  // minx, miny, maxx, maxy; computed from the content with a 20% margin
  // when absent
  std::optional<std::array<Rational, 4>> viewbox;
};

// Deterministic SVG 1.1: fixed 6-decimal rendering, exact coordinates kept
// in data-* attributes. Throws EmptyScene when there is nothing to draw.
std::string emit_svg(const Scene& scene);

// Exact decimal rendering of a rational (round half away from zero).
std::string to_decimal(const Rational& r, int places = 6);

}  // namespace tropline::svg
