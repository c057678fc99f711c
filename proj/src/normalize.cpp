#include <algorithm>
#include <deque>

#include "outfk/equivariant_graph.hpp"
#include "outfk/error.hpp"
#include "outfk/modp.hpp"

namespace outfk {

namespace {

// Shortest path from `from` to `to` as a list of half-edges; neighbours are
// explored in increasing half-edge order.
std::vector<int> shortest_path(const EquivariantGraph& g, int from, int to) {
  std::vector<int> parent(g.vertex_count(), -2);
  parent[from] = -1;
  std::deque<int> queue{from};
  while (!queue.empty() && parent[to] == -2) {
    const int u = queue.front();
    queue.pop_front();
    for (int h : g.half_edges_at(u)) {
      const int w = g.terminal(h);
      if (parent[w] == -2) {
        parent[w] = h;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; parent[v] != -1; v = g.initial(parent[v])) path.push_back(parent[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

// For a graph with one vertex orbit: position[w] = i with w = f^i(v).
std::vector<int> positions_from(const EquivariantGraph& g, int v) {
  std::vector<int> position(g.vertex_count(), -1);
  int w = v;
  for (int i = 0; i < g.p(); ++i, w = g.act_vertex(w)) position[w] = i;
  return position;
}

// The translate of h that starts at f^i(v).
int translate_starting_at(const EquivariantGraph& g, int h, int vertex) {
  int x = h;
  for (int i = 0; i < g.p(); ++i, x = g.act(x)) {
    if (g.initial(x) == vertex) return x;
  }
  throw Error(ErrorKind::InvalidGraph, "EquivarianceViolation", "no translate of the edge starts at the vertex");
}

int vertex_at(const EquivariantGraph& g, int v, int position) {
  for (int i = 0; i < position; ++i) v = g.act_vertex(v);
  return v;
}

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  throw Error(ErrorKind::InvalidArgument, "not invertible mod p");
}

int mod(int a, int p) { return ((a % p) + p) % p; }

class Normalizer {
 public:
  explicit Normalizer(const EquivariantGraph& g) : graph_(g) {}

  NormalizationResult run() {
    collapse_to_one_orbit();
    const int cycle = build_cycle();
    if (graph_.edge_orbit_count() > 1) slide_into_loops(cycle);

    NormalForm form;
    form.p = graph_.p();
    form.loops_per_vertex = graph_.edge_orbit_count() - 1;
    form.rank = rank(graph_);
    form.cycle_step = cycle_step_;
    if (form.loops_per_vertex > 0 && !is_normal_form(graph_)) {
      throw Error(ErrorKind::InvalidGraph, "normalization did not reach the normal form");
    }
    return {form, moves_, graph_, path_slides_, cycle_slides_, max_loop_slides_};
  }

 private:
  void do_collapse(int h) {
    graph_ = collapse_orbit(graph_, {h});
    moves_.push_back({MoveKind::Collapse, h, -1});
  }

  void do_slide(int s, int t) {
    graph_ = slide(graph_, {s}, {t});
    moves_.push_back({MoveKind::Slide, s, t});
  }

  void collapse_to_one_orbit() {
    while (graph_.vertex_orbit_count() > 1) {
      const auto ids = graph_.vertex_orbit_ids();
      int chosen = -1;
      for (int h = 0; h < graph_.half_edge_count() && chosen == -1; ++h) {
        if (ids[graph_.initial(h)] != ids[graph_.terminal(h)]) chosen = h;
      }
      // A connected graph with several vertex orbits always has such an edge,
      // and an edge between distinct orbits spans a forest.
      do_collapse(chosen);
    }
  }

  // Returns a half-edge running from vertex 0 to f(vertex 0).
  int build_cycle() {
    const int p = graph_.p();
    const int v = 0;
    while (true) {
      const auto path = shortest_path(graph_, v, graph_.act_vertex(v));
      if (path.size() == 1) return path.front();
      const auto ids = graph_.edge_orbit_ids();
      bool mixed = false;
      bool shortened = false;
      for (std::size_t i = 0; i + 1 < path.size() && !shortened; ++i) {
        const int s = path[i];
        const int t = path[i + 1];
        if (ids[s] == ids[t]) continue;
        mixed = true;
        // Either pull the end of s forward along t, or the start of t back
        // along s; keep the first that shortens the path.
        for (const auto& [a, b] : {std::pair{s, t}, std::pair{graph_.partner(t), graph_.partner(s)}}) {
          const EquivariantGraph trial = slide(graph_, {a}, {b});
          if (shortest_path(trial, v, trial.act_vertex(v)).size() < path.size()) {
            graph_ = trial;
            moves_.push_back({MoveKind::Slide, a, b});
            ++path_slides_;
            shortened = true;
            break;
          }
        }
      }
      if (shortened) continue;
      if (mixed) throw Error(ErrorKind::InvalidGraph, "no slide shortens the path from v to f(v)");

      // The whole path lies in one orbit, which is therefore a p-cycle
      // joining f^i(v) to f^(i+j)(v).
      const int e = path.front();
      const auto position = positions_from(graph_, v);
      const int j = position[graph_.terminal(e)];
      int d = -1;
      for (int h : graph_.half_edges_at(v)) {
        if (ids[h] != ids[e]) {
          d = h;
          break;
        }
      }
      if (d == -1) {
        cycle_step_ = std::min(j, p - j);
        return e;
      }
      int m = position[graph_.terminal(d)];
      const int forward = mod((1 - m) * inverse_mod(j, p), p);
      const bool go_forward = forward <= p - forward;
      const int steps = go_forward ? forward : p - forward;
      for (int i = 0; i < steps; ++i) {
        const int here = vertex_at(graph_, v, m);
        int along;
        if (go_forward) {
          along = translate_starting_at(graph_, e, here);
          m = mod(m + j, p);
        } else {
          along = graph_.partner(translate_starting_at(graph_, e, vertex_at(graph_, v, mod(m - j, p))));
          m = mod(m - j, p);
        }
        do_slide(d, along);
        ++cycle_slides_;
      }
      return d;
    }
  }

  void slide_into_loops(int cycle) {
    const int p = graph_.p();
    const int v = 0;
    const auto ids = graph_.edge_orbit_ids();
    const auto position = positions_from(graph_, v);
    const int orbit_count = graph_.edge_orbit_count();
    for (int orbit = 0; orbit < orbit_count; ++orbit) {
      if (orbit == ids[cycle]) continue;
      int h = -1;
      for (int x : graph_.half_edges_at(v)) {
        if (ids[x] == orbit) {
          h = x;
          break;
        }
      }
      int m = position[graph_.terminal(h)];
      const bool backward = m <= p - m;
      const int steps = backward ? m : p - m;
      for (int i = 0; i < steps; ++i) {
        int along;
        if (backward) {
          along = graph_.partner(translate_starting_at(graph_, cycle, vertex_at(graph_, v, mod(m - 1, p))));
          m = mod(m - 1, p);
        } else {
          along = translate_starting_at(graph_, cycle, vertex_at(graph_, v, m));
          m = mod(m + 1, p);
        }
        do_slide(h, along);
      }
      max_loop_slides_ = std::max(max_loop_slides_, steps);
    }
  }

  EquivariantGraph graph_;
  std::vector<Move> moves_;
  int path_slides_ = 0;
  int cycle_slides_ = 0;
  int max_loop_slides_ = 0;
  int cycle_step_ = 1;
};

}  // namespace

NormalizationResult normalize(const EquivariantGraph& g) {
  require_valid(g);
  if (g.p() < 2) throw Error(ErrorKind::InvalidArgument, "normalization needs a non-trivial action");
  require_prime(g.p(), "graph action order");
  return Normalizer(g).run();
}

bool is_normal_form(const EquivariantGraph& g) {
  if (!validate(g).ok() || g.p() < 2) return false;
  if (g.vertex_orbit_count() != 1) return false;
  const auto ids = g.edge_orbit_ids();
  int cycle_orbit = -1;
  for (int h = 0; h < g.half_edge_count(); ++h) {
    if (g.initial(h) == g.terminal(h)) continue;
    if (cycle_orbit != -1 && ids[h] != cycle_orbit) return false;
    cycle_orbit = ids[h];
  }
  if (cycle_orbit == -1) return false;
  for (int h = 0; h < g.half_edge_count(); ++h) {
    if (ids[h] != cycle_orbit) continue;
    if (g.terminal(h) != g.act_vertex(g.initial(h)) && g.initial(h) != g.act_vertex(g.terminal(h))) return false;
  }
  return true;
}

EquivariantGraph scrambled_graph(int p, int k, int slides, int expansions, std::mt19937_64& rng) {
  EquivariantGraph g = canonical_graph(p, k);
  auto pick = [&rng](std::size_t n) { return static_cast<int>(rng() % n); };
  for (int i = 0; i < slides && g.edge_orbit_count() > 1; ++i) {
    const int s = pick(g.half_edge_count());
    const auto ids = g.edge_orbit_ids();
    std::vector<int> candidates;
    for (int t : g.half_edges_at(g.terminal(s))) {
      if (ids[t] != ids[s]) candidates.push_back(t);
    }
    if (candidates.empty()) continue;
    g = slide(g, {s}, {candidates[pick(candidates.size())]});
  }
  for (int i = 0; i < expansions; ++i) {
    const int v = pick(g.vertex_count());
    std::vector<int> moved;
    for (int h : g.half_edges_at(v)) {
      if (rng() % 2 == 0) moved.push_back(h);
    }
    g = expand(g, v, moved);
  }

  // Random relabelling so the input carries no trace of its construction.
  std::vector<int> vertex_label(g.vertex_count()), half_label(g.half_edge_count());
  for (int i = 0; i < g.vertex_count(); ++i) vertex_label[i] = i;
  for (int i = 0; i < g.half_edge_count(); ++i) half_label[i] = i;
  for (int i = g.vertex_count() - 1; i > 0; --i) std::swap(vertex_label[i], vertex_label[pick(i + 1)]);
  for (int i = g.half_edge_count() - 1; i > 0; --i) std::swap(half_label[i], half_label[pick(i + 1)]);
  std::vector<int> partner(g.half_edge_count()), vertex_of(g.half_edge_count()), half_action(g.half_edge_count());
  std::vector<int> vertex_action(g.vertex_count());
  for (int h = 0; h < g.half_edge_count(); ++h) {
    partner[half_label[h]] = half_label[g.partner(h)];
    vertex_of[half_label[h]] = vertex_label[g.vertex_of(h)];
    half_action[half_label[h]] = half_label[g.act(h)];
  }
  for (int v = 0; v < g.vertex_count(); ++v) vertex_action[vertex_label[v]] = vertex_label[g.act_vertex(v)];
  return EquivariantGraph(p, g.vertex_count(), std::move(partner), std::move(vertex_of), std::move(vertex_action),
                          std::move(half_action));
}

}  // namespace outfk
