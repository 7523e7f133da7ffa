#include "tropline/scene.hpp"

namespace tropline {

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

const KPolynomial* Scene::find_polynomial(const std::string& name) const {
  if (auto it = lines.find(name); it != lines.end()) return &it->second;
  if (auto it = polynomials.find(name); it != polynomials.end())
    return &it->second;
  return nullptr;
}

Scene load_scene(const std::string& text) {
  io::json j;
  try {
    j = io::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte ? e.byte - 1 : 0);
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + e.what());
  }
  return load_scene_json(j);
}

Scene load_scene_json(const io::json& j) {
  if (!j.is_object()) throw ParseError("scene must be a JSON object");
  Scene scene;
  scene.ctx = j.contains("context") ? io::decode_context(j.at("context"))
                                    : FieldContext::rationals();
  if (j.contains("polynomials")) {
    const auto& polys = j.at("polynomials");
    if (!polys.is_object()) throw ParseError("\"polynomials\" must be an object");
    for (const auto& [name, val] : polys.items())
      scene.polynomials.emplace(name, io::decode_polynomial(val, scene.ctx));
  }
  if (j.contains("lines")) {
    const auto& lines = j.at("lines");
    if (lines.is_object()) {
      for (const auto& [name, val] : lines.items())
        scene.lines.emplace(name, io::decode_polynomial(val, scene.ctx));
    } else if (lines.is_array()) {
      int idx = 0;
      for (const auto& val : lines)
        scene.lines.emplace("L" + std::to_string(idx++),
                            io::decode_polynomial(val, scene.ctx));
    } else {
      throw ParseError("\"lines\" must be an object or an array");
    }
  }
  if (j.contains("points")) {
    const auto& points = j.at("points");
    if (!points.is_object()) throw ParseError("\"points\" must be an object");
    for (const auto& [name, val] : points.items()) {
      if (!val.is_object() || !val.contains("coords"))
        throw ParseError("point \"" + name + "\" must have \"coords\"");
      Scene::NamedPoint np;
      np.coords = io::decode_point(val.at("coords"), scene.ctx);
      if (val.contains("on")) {
        if (!val.at("on").is_array())
          throw ParseError("point \"" + name + "\": \"on\" must be an array");
        for (const auto& ref : val.at("on")) {
          if (!ref.is_string())
            throw ParseError("point \"" + name + "\": \"on\" entries are names");
          np.on.push_back(ref.get<std::string>());
        }
      }
      scene.points.emplace(name, std::move(np));
    }
  }
  for (const auto& key :
       {"context", "polynomials", "lines", "points"})
    (void)key;
  scene.params = io::json::object();
  for (const auto& [key, val] : j.items()) {
    if (key == "context" || key == "polynomials" || key == "lines" ||
        key == "points")
      continue;
    scene.params[key] = val;
  }

  // declared incidences verified at load time
  for (const auto& [name, np] : scene.points) {
    for (const auto& ref : np.on) {
      const KPolynomial* poly = scene.find_polynomial(ref);
      if (!poly)
        throw ValidationError("point \"" + name + "\" references missing \"" +
                              ref + "\"");
      if (static_cast<int>(np.coords.size()) != poly->variables())
        throw ValidationError("point \"" + name + "\" has wrong dimension for \"" +
                              ref + "\"");
      if (!substitute_poly(*poly, np.coords).is_zero())
        throw ValidationError("point \"" + name + "\" is not on \"" + ref + "\"");
    }
  }
  return scene;
}

}  // namespace tropline
