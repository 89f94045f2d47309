#include "rstab/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace rstab::io {

namespace {

Coord as_coord(const Json& j, const char* what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<Coord>::max())) {
      throw ParseError(std::string(what) + " out of 64-bit range");
    }
    return j.get<Coord>();
  }
  throw ParseError(std::string(what) + " must be an integer");
}

std::size_t as_count(const Json& j, const char* what) {
  const Coord v = as_coord(j, what);
  if (v < 0) throw ParseError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<Coord> coords(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Coord> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_coord(v, what));
  return out;
}

Json sorted(std::vector<Coord> v) {
  normalize_positions(v);
  return Json(v);
}

}  // namespace

Json to_json(const Instance& inst) {
  Json rects = Json::array();
  for (const Rect& r : inst.rects()) rects.push_back({r.x1, r.x2, r.y1, r.y2});
  Json j;
  j["rects"] = std::move(rects);
  j["hlines"] = inst.hlines();
  j["vlines"] = inst.vlines();
  return j;
}

Json to_json(const Solution& sol) {
  Json j;
  j["hlines"] = sol.hlines();
  j["vlines"] = sol.vlines();
  return j;
}

Json to_json(const reduction::MCGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json j;
  j["k"] = g.k();
  j["r"] = g.r();
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const reduction::MCClique& c) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < c.chosen.size(); ++i) {
    if (c.chosen[i]) pairs.push_back({i + 1, *c.chosen[i]});
  }
  Json j;
  j["clique"] = std::move(pairs);
  return j;
}

Json to_json(const gen::PlantedWitness& w) {
  Json j;
  j["hstar"] = sorted(w.hstar);
  j["vstar"] = sorted(w.vstar);
  return j;
}

Instance instance_from_json(const Json& j) {
  const Json& rj = field(j, "rects");
  if (!rj.is_array()) throw ParseError("\"rects\" must be an array");
  std::vector<Rect> rects;
  rects.reserve(rj.size());
  for (const auto& r : rj) {
    if (!r.is_array() || r.size() != 4) {
      throw ParseError("each rectangle must be [x1, x2, y1, y2]");
    }
    Rect rect{as_coord(r[0], "x1"), as_coord(r[1], "x2"), as_coord(r[2], "y1"),
              as_coord(r[3], "y2")};
    if (!rect.valid()) throw ParseError("rectangle with inverted extent");
    rects.push_back(rect);
  }
  return Instance(std::move(rects), coords(field(j, "hlines"), "hlines"),
                  coords(field(j, "vlines"), "vlines"));
}

Solution solution_from_json(const Json& j) {
  return Solution(coords(field(j, "hlines"), "hlines"),
                  coords(field(j, "vlines"), "vlines"));
}

reduction::MCGraph graph_from_json(const Json& j) {
  const std::size_t k = as_count(field(j, "k"), "k");
  const std::size_t r = as_count(field(j, "r"), "r");
  if (k == 0 || r == 0) throw ParseError("k and r must be positive");
  reduction::MCGraph g(k, r);
  const Json& ej = field(j, "edges");
  if (!ej.is_array()) throw ParseError("\"edges\" must be an array");
  for (const auto& e : ej) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be [u, v]");
    const std::size_t u = as_count(e[0], "edge endpoint");
    const std::size_t v = as_count(e[1], "edge endpoint");
    try {
      g.add_edge(u, v);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what());
    }
  }
  return g;
}

reduction::MCClique clique_from_json(const Json& j, std::size_t k) {
  reduction::MCClique c;
  c.chosen.assign(k, std::nullopt);
  const Json& pj = field(j, "clique");
  if (!pj.is_array()) throw ParseError("\"clique\" must be an array");
  for (const auto& p : pj) {
    if (!p.is_array() || p.size() != 2) {
      throw ParseError("each clique entry must be [part, index]");
    }
    const std::size_t part = as_count(p[0], "part");
    const std::size_t index = as_count(p[1], "index");
    if (part < 1 || part > k) throw ParseError("clique part out of range");
    if (c.chosen[part - 1]) throw ParseError("clique lists a part twice");
    c.chosen[part - 1] = index;
  }
  return c;
}

Json to_json(const StripTable& t) {
  Json strips = Json::array();
  for (const Interval& s : t.strips) strips.push_back({s.lo, s.hi});
  Json j;
  j["k"] = t.graph.k();
  j["r"] = t.graph.r();
  j["doubled"] = t.doubled;
  j["strips"] = std::move(strips);
  j["force"] = t.force_count;
  j["adjacency"] = t.adjacency_count;
  j["equality"] = t.equality_count;
  j["graph"] = to_json(t.graph);
  return j;
}

StripTable strip_table_from_json(const Json& j) {
  StripTable t;
  t.graph = graph_from_json(field(j, "graph"));
  if (as_count(field(j, "k"), "k") != t.graph.k() ||
      as_count(field(j, "r"), "r") != t.graph.r()) {
    throw ParseError("strip table k/r disagree with the embedded graph");
  }
  const Json& dj = field(j, "doubled");
  if (!dj.is_boolean()) throw ParseError("\"doubled\" must be a boolean");
  t.doubled = dj.get<bool>();
  const Json& sj = field(j, "strips");
  if (!sj.is_array() || sj.size() != 2 * t.graph.k()) {
    throw ParseError("\"strips\" must list 2k ranges");
  }
  for (const auto& s : sj) {
    if (!s.is_array() || s.size() != 2) throw ParseError("each strip must be [lo, hi]");
    t.strips.push_back({as_coord(s[0], "strip bound"), as_coord(s[1], "strip bound")});
  }
  t.force_count = as_count(field(j, "force"), "force");
  t.adjacency_count = as_count(field(j, "adjacency"), "adjacency");
  t.equality_count = as_count(field(j, "equality"), "equality");
  return t;
}

std::vector<gen::ColoredPoint> read_points_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<gen::ColoredPoint> pts;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (header) {
      header = false;
      if (line.find_first_not_of("0123456789-+, \t") != std::string::npos) continue;
    }
    std::istringstream row(line);
    std::string cell;
    std::vector<long long> vals;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stoll(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw 0;
      } catch (...) {
        throw ParseError("line " + std::to_string(lineno) + ": bad integer \"" +
                         cell + "\"");
      }
    }
    if (vals.size() != 3) {
      throw ParseError("line " + std::to_string(lineno) + ": expected x,y,color");
    }
    pts.push_back({vals[0], vals[1], static_cast<int>(vals[2])});
  }
  return pts;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace rstab::io
