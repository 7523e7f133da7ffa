#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropline/json_io.hpp"

namespace tropline {

// Validated CLI input document: one field context, named polynomials, lines
// and points, and free-form command parameters. Loading runs all declared
// substitution checks and is side-effect-free.
struct Scene {
  ContextPtr ctx;
  std::map<std::string, KPolynomial> polynomials;
  std::map<std::string, KPolynomial> lines;
  struct NamedPoint {
    KPoint coords;
    std::vector<std::string> on;  // names of lines/polynomials it must lie on
  };
  std::map<std::string, NamedPoint> points;
  io::json params;  // everything else, kept verbatim

  // Resolves a name against lines first, then polynomials.
  const KPolynomial* find_polynomial(const std::string& name) const;
};

// Parses and validates. JSON syntax errors become ParseError with line and
// column; failed incidence checks become ValidationError naming the point
// and the entry it misses.
Scene load_scene(const std::string& text);
Scene load_scene_json(const io::json& j);

}  // namespace tropline
