#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "outfk/equivariant_graph.hpp"
#include "outfk/error.hpp"
#include "outfk/modp.hpp"

namespace outfk {

std::string to_json(const EquivariantGraph& g) {
  // One half-edge per line; the arrays are short enough to sit on one line.
  auto array = [](const std::vector<int>& xs) { return nlohmann::json(xs).dump(); };
  std::string out = "{\n  \"p\": " + std::to_string(g.p()) + ",\n  \"vertices\": " + std::to_string(g.vertex_count()) +
                    ",\n  \"half_edges\": [\n";
  for (int h = 0; h < g.half_edge_count(); ++h) {
    out += "    {\"id\": " + std::to_string(h) + ", \"partner\": " + std::to_string(g.partner(h)) +
           ", \"vertex\": " + std::to_string(g.vertex_of(h)) + "}" + (h + 1 < g.half_edge_count() ? ",\n" : "\n");
  }
  out += "  ],\n  \"vertex_action\": " + array(g.vertex_action()) + ",\n  \"half_edge_action\": " +
         array(g.half_edge_action()) + "\n}\n";
  return out;
}

EquivariantGraph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("graph file is not valid JSON: ") + e.what());
  }
  try {
    const int p = doc.at("p").get<int>();
    const int vertices = doc.at("vertices").get<int>();
    const auto& items = doc.at("half_edges");
    const int count = static_cast<int>(items.size());
    std::vector<int> partner(count, -1), vertex_of(count, -1);
    std::vector<char> seen(count, 0);
    for (const auto& item : items) {
      const int id = item.at("id").get<int>();
      if (id < 0 || id >= count || seen[id]) {
        throw Error(ErrorKind::ParseError, "half-edge ids must be 0.." + std::to_string(count - 1) + " without repeats");
      }
      seen[id] = 1;
      partner[id] = item.at("partner").get<int>();
      vertex_of[id] = item.at("vertex").get<int>();
    }
    return EquivariantGraph(p, vertices, std::move(partner), std::move(vertex_of),
                            doc.at("vertex_action").get<std::vector<int>>(),
                            doc.at("half_edge_action").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed graph file: ") + e.what());
  }
}

EquivariantGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open graph file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return graph_from_json(text.str());
}

namespace {

// v_i = i, w_i = p + i; a cycle on the v_i, spokes v_i -> w_i, a loop at each w_i.
EquivariantGraph two_orbit_graph(int p) {
  const int n_half = 6 * p;
  std::vector<int> partner(n_half), vertex_of(n_half), half_action(n_half), vertex_action(2 * p);
  for (int i = 0; i < p; ++i) {
    vertex_action[i] = (i + 1) % p;
    vertex_action[p + i] = p + (i + 1) % p;
  }
  const int starts[3][2] = {{0, 0}, {0, 1}, {1, 1}};
  for (int o = 0; o < 3; ++o) {
    for (int i = 0; i < p; ++i) {
      const int tail = 2 * p * o + 2 * i;
      partner[tail] = tail + 1;
      partner[tail + 1] = tail;
      vertex_of[tail] = starts[o][0] * p + i;
      vertex_of[tail + 1] = starts[o][1] * p + (o == 0 ? (i + 1) % p : i);
      half_action[tail] = 2 * p * o + 2 * ((i + 1) % p);
      half_action[tail + 1] = half_action[tail] + 1;
    }
  }
  return EquivariantGraph(p, 2 * p, std::move(partner), std::move(vertex_of), std::move(vertex_action),
                          std::move(half_action));
}

// p petals at one vertex (or p edges between two vertices), rotated by f.
EquivariantGraph rotation_graph(int p, bool theta) {
  const int vertices = theta ? 2 : 1;
  std::vector<int> partner(2 * p), vertex_of(2 * p), half_action(2 * p), vertex_action(vertices);
  for (int v = 0; v < vertices; ++v) vertex_action[v] = v;
  for (int i = 0; i < p; ++i) {
    partner[2 * i] = 2 * i + 1;
    partner[2 * i + 1] = 2 * i;
    vertex_of[2 * i] = 0;
    vertex_of[2 * i + 1] = theta ? 1 : 0;
    half_action[2 * i] = 2 * ((i + 1) % p);
    half_action[2 * i + 1] = half_action[2 * i] + 1;
  }
  return EquivariantGraph(p, vertices, std::move(partner), std::move(vertex_of), std::move(vertex_action),
                          std::move(half_action));
}

}  // namespace

EquivariantGraph demo_graph(std::string_view name) {
  const std::string text(name);
  std::smatch m;
  if (std::regex_match(text, m, std::regex(R"(canonical_p(\d+)_k(\d+))"))) {
    return canonical_graph(std::stoi(m[1]), std::stoi(m[2]));
  }
  if (std::regex_match(text, m, std::regex(R"(two_orbit_p(\d+))"))) {
    const int p = std::stoi(m[1]);
    require_prime(p);
    return two_orbit_graph(p);
  }
  if (std::regex_match(text, m, std::regex(R"((rose|theta)_rotation_p(\d+))"))) {
    const int p = std::stoi(m[2]);
    require_prime(p);
    return rotation_graph(p, m[1] == "theta");
  }
  if (std::regex_match(text, m, std::regex(R"(scrambled_p(\d+)_k(\d+)_s(\d+))"))) {
    const int p = std::stoi(m[1]);
    const int k = std::stoi(m[2]);
    std::mt19937_64 rng(std::stoull(m[3]));
    return scrambled_graph(p, k, 4 * (k + 1), 3, rng);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown demo graph '" + text +
                                              "' (try canonical_p3_k2, two_orbit_p3, rose_rotation_p5, "
                                              "theta_rotation_p3, scrambled_p5_k2_s7)");
}

}  // namespace outfk
