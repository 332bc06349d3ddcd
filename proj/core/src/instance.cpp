#include "fixcirc/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace fixcirc {

namespace {

using Json = nlohmann::ordered_json;

std::string format_axiom_failure(const MetricSpace& space,
                                 const AxiomViolation& v) {
  std::ostringstream os;
  os << "metric axiom '" << v.axiom << "' violated on (" << space.label(v.a)
     << ", " << space.label(v.b);
  if (v.axiom == "triangle") os << ", " << space.label(v.c);
  os << ")";
  return os.str();
}

MultivaluedMap parse_map(const MetricSpace& space, const Json& map_json) {
  if (!map_json.is_object()) throw SchemaError("'map' must be an object");
  std::vector<PointSet> images;
  images.reserve(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    const std::string& label = space.label(x);
    auto it = map_json.find(label);
    if (it == map_json.end())
      throw SchemaError("map is not total: missing image for '" + label + "'");
    if (!it->is_array() || it->empty())
      throw SchemaError("image of '" + label + "' must be a nonempty array");
    std::vector<PointId> ids;
    for (const auto& entry : *it) {
      if (!entry.is_string())
        throw SchemaError("image labels must be strings");
      auto p = space.find(entry.get<std::string>());
      if (!p)
        throw SchemaError("dangling image label '" + entry.get<std::string>() +
                          "' for point '" + label + "'");
      ids.push_back(*p);
    }
    images.emplace_back(std::move(ids));
  }
  for (auto it = map_json.begin(); it != map_json.end(); ++it)
    if (!space.find(it.key()))
      throw SchemaError("map entry for unknown point '" + it.key() + "'");
  return MultivaluedMap(space, std::move(images));
}

Instance parse_json(const Json& doc, std::string name) {
  if (!doc.is_object()) throw SchemaError("instance must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (key != "kind" && key != "points" && key != "distances" &&
        key != "map" && key != "meta")
      throw SchemaError("unknown top-level field '" + key + "'");
  }
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw SchemaError("missing 'kind'");
  const std::string kind = doc["kind"].get<std::string>();
  if (!doc.contains("points")) throw SchemaError("missing 'points'");
  if (!doc.contains("map")) throw SchemaError("missing 'map'");

  if (doc.contains("meta")) {
    const auto& meta = doc["meta"];
    if (!meta.is_object()) throw SchemaError("'meta' must be an object");
    if (meta.contains("name") && meta["name"].is_string())
      name = meta["name"].get<std::string>();
  }

  if (kind == "matrix") {
    const auto& pts = doc["points"];
    if (!pts.is_array() || pts.empty())
      throw SchemaError("matrix 'points' must be a nonempty array of labels");
    std::vector<std::string> labels;
    for (const auto& p : pts) {
      if (!p.is_string()) throw SchemaError("point labels must be strings");
      labels.push_back(p.get<std::string>());
    }
    if (!doc.contains("distances") || !doc["distances"].is_array())
      throw SchemaError("matrix kind needs a 'distances' array");
    const std::size_t n = labels.size();
    std::vector<double> d;
    for (const auto& v : doc["distances"]) {
      if (!v.is_number()) throw SchemaError("distances must be numbers");
      d.push_back(v.get<double>());
    }
    if (d.size() != n * n)
      throw SchemaError("'distances' must hold " + std::to_string(n * n) +
                        " row-major entries");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (d[i * n + j] != d[j * n + i])
          throw SchemaError("asymmetric distance entry at (" + labels[i] +
                            ", " + labels[j] + ")");
    MetricSpace space = MetricSpace::from_matrix(std::move(labels), std::move(d));
    AxiomReport axioms = space.validate();
    if (!axioms.pass)
      throw MetricAxiomError(format_axiom_failure(space, axioms.violations[0]));
    MultivaluedMap map = parse_map(space, doc["map"]);
    return Instance{std::move(space), std::move(map), std::move(name), {}};
  }

  if (kind == "complex") {
    if (doc.contains("distances"))
      throw SchemaError("complex kind must not carry 'distances'");
    const auto& pts = doc["points"];
    if (!pts.is_object() || pts.empty())
      throw SchemaError(
          "complex 'points' must be a nonempty object label -> [re, im]");
    std::vector<std::string> labels;
    std::vector<std::complex<double>> coords;
    for (auto it = pts.begin(); it != pts.end(); ++it) {
      const auto& c = it.value();
      if (!c.is_array() || c.size() != 2 || !c[0].is_number() ||
          !c[1].is_number())
        throw SchemaError("coordinate of '" + it.key() +
                          "' must be [re, im]");
      labels.push_back(it.key());
      coords.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    MetricSpace space =
        MetricSpace::from_complex(std::move(labels), std::move(coords));
    MultivaluedMap map = parse_map(space, doc["map"]);
    return Instance{std::move(space), std::move(map), std::move(name), {}};
  }

  throw SchemaError("unknown kind '" + kind + "' (expected matrix|complex)");
}

// Curated radius list for the builtin coordinate instances: all realized
// pair distances, deduplicated at the equality tolerance.
std::vector<double> coordinate_radius_list(const MetricSpace& space) {
  std::vector<double> all;
  all.reserve(space.size() * (space.size() + 1) / 2);
  for (PointId a = 0; a < space.size(); ++a)
    for (PointId b = a; b < space.size(); ++b)
      all.push_back(space.distance(a, b));
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double r : all)
    if (out.empty() || !space.distances_equal(out.back(), r)) out.push_back(r);
  return out;
}

std::string int_complex_label(int re, int im) {
  std::string s;
  if (im == 0) return std::to_string(re);
  std::string im_part;
  if (im == 1) im_part = "i";
  else if (im == -1) im_part = "-i";
  else im_part = std::to_string(im) + "i";
  if (re == 0) return im_part;
  s = std::to_string(re);
  if (im > 0) s += "+";
  return s + im_part;
}

Instance build_example2() {
  std::vector<std::string> labels;
  std::vector<std::complex<double>> coords;
  auto add = [&](std::string label, std::complex<double> c) {
    labels.push_back(std::move(label));
    coords.push_back(c);
  };

  // Integer grid strictly inside |x| < 4 (includes the four on-axis
  // points of the circle |x| = 3).
  for (int re = -3; re <= 3; ++re)
    for (int im = -3; im <= 3; ++im)
      if (re * re + im * im < 16) add(int_complex_label(re, im), {double(re), double(im)});

  // Ring sample 3 e^{i k pi / 8}; k in {0,4,8,12} already appears in the
  // grid as 3, 3i, -3, -3i.
  const double pi = std::acos(-1.0);
  for (int k = 0; k < 16; ++k) {
    if (k % 4 == 0) continue;
    const double theta = k * pi / 8.0;
    add("ring" + std::to_string(k),
        {3.0 * std::cos(theta), 3.0 * std::sin(theta)});
  }

  // Real chain 4..12 so the x+1,x+2,x+3 images of the displaced points
  // 4..9 stay inside the sample.
  for (int v = 4; v <= 12; ++v) add(std::to_string(v), {double(v), 0.0});

  MetricSpace space = MetricSpace::from_complex(labels, coords);

  std::vector<PointSet> images;
  images.reserve(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    const double mod = std::abs(space.coordinate(x));
    if (mod >= 4.0 && mod <= 9.0) {
      // Chain point v in 4..9: image {v+1, v+2, v+3}.
      std::vector<PointId> img;
      const int v = static_cast<int>(std::lround(space.coordinate(x).real()));
      for (int delta = 1; delta <= 3; ++delta)
        img.push_back(space.require(std::to_string(v + delta)));
      images.emplace_back(std::move(img));
    } else {
      // Interior points map to themselves; so do the chain tails
      // 10..12, which keeps the sample closed under the map.
      images.emplace_back(std::vector<PointId>{x});
    }
  }
  MultivaluedMap map(space, std::move(images));
  std::vector<double> radii = coordinate_radius_list(space);
  return Instance{std::move(space), std::move(map), "example2",
                  std::move(radii)};
}

std::string decimal_label(int tenths) {
  // -20 -> "-2", -19 -> "-1.9", 0 -> "0"
  if (tenths == 0) return "0";
  std::string s = tenths < 0 ? "-" : "";
  int a = std::abs(tenths);
  s += std::to_string(a / 10);
  if (a % 10 != 0) s += "." + std::to_string(a % 10);
  return s;
}

}  // namespace

Instance builtin_example1(int n_max) {
  if (n_max < 1) throw ParameterError("example1 truncation must be >= 1");
  std::vector<std::string> labels;
  std::vector<std::complex<double>> coords;

  // [-2, 0] sampled at step 0.1; the exact points -2, -1, 0 are grid
  // members.
  for (int t = -20; t <= 0; ++t) {
    labels.push_back(decimal_label(t));
    coords.emplace_back(static_cast<double>(t) / 10.0, 0.0);
  }
  // x_n = 1 + 1/n, n = 1..n_max.
  for (int n = 1; n <= n_max; ++n) {
    labels.push_back("x" + std::to_string(n));
    coords.emplace_back(1.0 + 1.0 / static_cast<double>(n), 0.0);
  }

  MetricSpace space = MetricSpace::from_complex(labels, coords);

  std::vector<PointSet> images;
  images.reserve(space.size());
  const PointId minus_one = space.require("-1");
  for (PointId x = 0; x < space.size(); ++x) {
    const std::string& label = space.label(x);
    if (label[0] == 'x') {
      const int n = std::stoi(label.substr(1));
      std::vector<PointId> img{minus_one};
      for (int k = 1; k < n; ++k)
        img.push_back(space.require("x" + std::to_string(k)));
      images.emplace_back(std::move(img));
    } else {
      images.emplace_back(std::vector<PointId>{x});  // |x+1| <= 1 branch
    }
  }
  MultivaluedMap map(space, std::move(images));
  std::vector<double> radii = coordinate_radius_list(space);
  return Instance{std::move(space), std::move(map), "example1",
                  std::move(radii)};
}

bool is_builtin_instance(std::string_view id) {
  return id == "example1" || id == "example2" || id == "example3";
}

Instance builtin_instance(std::string_view id) {
  if (id == "example1") return builtin_example1(20);
  if (id == "example2") return build_example2();
  if (id == "example3") {
    Instance inst = build_example2();
    inst.name = "example3";
    return inst;
  }
  throw ParameterError("unknown builtin instance '" + std::string(id) + "'");
}

Instance parse_instance_text(std::string_view text, std::string name) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return parse_json(doc, std::move(name));
}

Instance parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open instance file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path.stem().string());
}

Instance load_instance(std::string_view path_or_builtin) {
  if (is_builtin_instance(path_or_builtin))
    return builtin_instance(path_or_builtin);
  return parse_instance(std::filesystem::path(std::string(path_or_builtin)));
}

}  // namespace fixcirc
