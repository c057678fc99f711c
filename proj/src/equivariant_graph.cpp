#include "outfk/equivariant_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "outfk/error.hpp"
#include "outfk/modp.hpp"

namespace outfk {

namespace {

bool is_permutation_of_range(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int x : perm) {
    if (x < 0 || static_cast<std::size_t>(x) >= perm.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

[[noreturn]] void structure_error(const std::string& detail) {
  throw Error(ErrorKind::InvalidGraph, "StructureViolation", detail);
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

EquivariantGraph::EquivariantGraph(int p, int vertex_count, std::vector<int> partner,
                                   std::vector<int> vertex_of, std::vector<int> vertex_action,
                                   std::vector<int> half_edge_action)
    : p_(p),
      vertex_count_(vertex_count),
      partner_(std::move(partner)),
      vertex_of_(std::move(vertex_of)),
      vertex_action_(std::move(vertex_action)),
      half_edge_action_(std::move(half_edge_action)) {
  if (p_ < 1) structure_error("p must be positive");
  if (vertex_count_ < 0) structure_error("negative vertex count");
  const auto h = partner_.size();
  if (vertex_of_.size() != h || half_edge_action_.size() != h) {
    structure_error("half-edge arrays have different lengths");
  }
  if (vertex_action_.size() != static_cast<std::size_t>(vertex_count_)) {
    structure_error("vertex action has the wrong length");
  }
  for (std::size_t i = 0; i < h; ++i) {
    if (partner_[i] < 0 || static_cast<std::size_t>(partner_[i]) >= h) structure_error("partner out of range");
    if (vertex_of_[i] < 0 || vertex_of_[i] >= vertex_count_) structure_error("vertex out of range");
    if (half_edge_action_[i] < 0 || static_cast<std::size_t>(half_edge_action_[i]) >= h) {
      structure_error("half-edge action out of range");
    }
  }
  for (int v : vertex_action_) {
    if (v < 0 || v >= vertex_count_) structure_error("vertex action out of range");
  }
}

EquivariantGraph EquivariantGraph::without_action(int vertex_count, std::vector<int> partner,
                                                  std::vector<int> vertex_of) {
  std::vector<int> vertex_action(vertex_count);
  std::iota(vertex_action.begin(), vertex_action.end(), 0);
  std::vector<int> half_edge_action(partner.size());
  std::iota(half_edge_action.begin(), half_edge_action.end(), 0);
  return EquivariantGraph(1, vertex_count, std::move(partner), std::move(vertex_of),
                          std::move(vertex_action), std::move(half_edge_action));
}

std::vector<int> EquivariantGraph::half_edges_at(int v) const {
  std::vector<int> out;
  for (int h = 0; h < half_edge_count(); ++h) {
    if (vertex_of_[h] == v) out.push_back(h);
  }
  return out;
}

std::vector<int> EquivariantGraph::half_edge_orbit(int h) const {
  std::vector<int> orbit{h};
  for (int x = act(h); x != h && static_cast<int>(orbit.size()) <= half_edge_count(); x = act(x)) {
    orbit.push_back(x);
  }
  return orbit;
}

std::vector<int> EquivariantGraph::vertex_orbit_ids() const {
  std::vector<int> ids(vertex_count_, -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    if (ids[v] != -1) continue;
    for (int x = v; ids[x] == -1; x = vertex_action_[x]) ids[x] = next;
    ++next;
  }
  return ids;
}

int EquivariantGraph::vertex_orbit_count() const {
  const auto ids = vertex_orbit_ids();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::vector<int> EquivariantGraph::edge_orbit_ids() const {
  std::vector<int> ids(half_edge_count(), -1);
  int next = 0;
  for (int h = 0; h < half_edge_count(); ++h) {
    if (ids[h] != -1) continue;
    std::deque<int> queue{h};
    ids[h] = next;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : {partner_[x], half_edge_action_[x]}) {
        if (ids[y] == -1) {
          ids[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return ids;
}

int EquivariantGraph::edge_orbit_count() const {
  const auto ids = edge_orbit_ids();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::string_view violation_name(Violation v) {
  switch (v) {
    case Violation::StructureViolation: return "StructureViolation";
    case Violation::InvolutionViolation: return "InvolutionViolation";
    case Violation::ActionOrderViolation: return "ActionOrderViolation";
    case Violation::EquivarianceViolation: return "EquivarianceViolation";
    case Violation::FreenessViolation: return "FreenessViolation";
    case Violation::ConnectivityViolation: return "ConnectivityViolation";
  }
  return "?";
}

bool ValidationReport::has(Violation v) const {
  return std::any_of(issues.begin(), issues.end(), [v](const auto& i) { return i.violation == v; });
}

ValidationReport validate(const EquivariantGraph& g) {
  ValidationReport report;
  auto add = [&report](Violation v, std::string detail) { report.issues.push_back({v, std::move(detail)}); };
  const int n_half = g.half_edge_count();

  if (!is_permutation_of_range(g.vertex_action())) add(Violation::StructureViolation, "vertex action is not a permutation");
  if (!is_permutation_of_range(g.half_edge_action())) {
    add(Violation::StructureViolation, "half-edge action is not a permutation");
  }
  if (!report.ok()) return report;

  for (int h = 0; h < n_half; ++h) {
    if (g.partner(h) == h || g.partner(g.partner(h)) != h) {
      add(Violation::InvolutionViolation, "half-edge " + std::to_string(h) + " has no proper partner");
      return report;
    }
  }

  for (int v = 0; v < g.vertex_count(); ++v) {
    int x = v;
    for (int i = 0; i < g.p(); ++i) x = g.act_vertex(x);
    if (x != v) {
      add(Violation::ActionOrderViolation, "f^p moves vertex " + std::to_string(v));
      break;
    }
  }
  for (int h = 0; h < n_half; ++h) {
    int x = h;
    for (int i = 0; i < g.p(); ++i) x = g.act(x);
    if (x != h) {
      add(Violation::ActionOrderViolation, "f^p moves half-edge " + std::to_string(h));
      break;
    }
  }

  for (int h = 0; h < n_half; ++h) {
    if (g.partner(g.act(h)) != g.act(g.partner(h))) {
      add(Violation::EquivarianceViolation, "f does not commute with reversal at half-edge " + std::to_string(h));
      break;
    }
    if (g.vertex_of(g.act(h)) != g.act_vertex(g.vertex_of(h))) {
      add(Violation::EquivarianceViolation, "f does not commute with attachment at half-edge " + std::to_string(h));
      break;
    }
  }

  if (g.p() > 1) {
    bool free = true;
    for (int v = 0; v < g.vertex_count() && free; ++v) {
      int x = v;
      for (int k = 1; k < g.p(); ++k) {
        x = g.act_vertex(x);
        if (x == v) {
          add(Violation::FreenessViolation, "f^" + std::to_string(k) + " fixes vertex " + std::to_string(v));
          free = false;
          break;
        }
      }
    }
    for (int h = 0; h < n_half && free; ++h) {
      int x = h;
      for (int k = 1; k < g.p(); ++k) {
        x = g.act(x);
        if (x == h || x == g.partner(h)) {
          add(Violation::FreenessViolation, "f^" + std::to_string(k) + " fixes or inverts the edge at half-edge " +
                                                std::to_string(h));
          free = false;
          break;
        }
      }
    }
  }

  if (g.vertex_count() == 0) {
    add(Violation::ConnectivityViolation, "graph has no vertices");
  } else {
    std::vector<std::vector<int>> adjacency(g.vertex_count());
    for (int h = 0; h < n_half; ++h) adjacency[g.vertex_of(h)].push_back(g.terminal(h));
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adjacency[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    if (reached != g.vertex_count()) {
      add(Violation::ConnectivityViolation,
          std::to_string(g.vertex_count() - reached) + " vertices unreachable from vertex 0");
    }
  }
  return report;
}

void require_valid(const EquivariantGraph& g) {
  const auto report = validate(g);
  if (!report.ok()) {
    const auto& first = report.issues.front();
    throw Error(ErrorKind::InvalidGraph, std::string(violation_name(first.violation)), first.detail);
  }
}

int rank(const EquivariantGraph& g) { return g.edge_count() - g.vertex_count() + 1; }

bool has_fixed_vertex(const EquivariantGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    int x = v;
    for (int k = 1; k < g.p(); ++k) {
      x = g.act_vertex(x);
      if (x == v) return true;
    }
  }
  return false;
}

EquivariantGraph collapse_orbit(const EquivariantGraph& g, EdgeOrbitRef e) {
  require_valid(g);
  if (e.half_edge < 0 || e.half_edge >= g.half_edge_count()) {
    throw Error(ErrorKind::InvalidArgument, "half-edge " + std::to_string(e.half_edge) + " out of range");
  }
  const auto orbit = g.half_edge_orbit(e.half_edge);
  UnionFind classes(g.vertex_count());
  std::vector<char> removed(g.half_edge_count(), 0);
  for (int h : orbit) {
    if (!classes.unite(g.initial(h), g.terminal(h))) {
      throw Error(ErrorKind::NotAForest, "edge orbit of half-edge " + std::to_string(e.half_edge) +
                                             (g.initial(h) == g.terminal(h) ? " contains a loop" : " contains a cycle"));
    }
    removed[h] = removed[g.partner(h)] = 1;
  }

  std::vector<int> new_vertex(g.vertex_count(), -1);
  std::vector<int> class_index(g.vertex_count(), -1);
  int vertices = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int root = classes.find(v);
    if (class_index[root] == -1) class_index[root] = vertices++;
    new_vertex[v] = class_index[root];
  }
  std::vector<int> new_half(g.half_edge_count(), -1);
  int halves = 0;
  for (int h = 0; h < g.half_edge_count(); ++h) {
    if (!removed[h]) new_half[h] = halves++;
  }

  std::vector<int> partner(halves), vertex_of(halves), half_action(halves), vertex_action(vertices);
  for (int h = 0; h < g.half_edge_count(); ++h) {
    if (removed[h]) continue;
    partner[new_half[h]] = new_half[g.partner(h)];
    vertex_of[new_half[h]] = new_vertex[g.vertex_of(h)];
    half_action[new_half[h]] = new_half[g.act(h)];
  }
  for (int v = 0; v < g.vertex_count(); ++v) vertex_action[new_vertex[v]] = new_vertex[g.act_vertex(v)];
  return EquivariantGraph(g.p(), vertices, std::move(partner), std::move(vertex_of), std::move(vertex_action),
                          std::move(half_action));
}

EquivariantGraph expand(const EquivariantGraph& g, int v, const std::vector<int>& moved) {
  require_valid(g);
  if (v < 0 || v >= g.vertex_count()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  std::vector<char> is_moved(g.half_edge_count(), 0);
  for (int h : moved) {
    if (h < 0 || h >= g.half_edge_count() || g.vertex_of(h) != v || is_moved[h]) {
      throw Error(ErrorKind::InvalidArgument, "expansion half-edges must be distinct half-edges at the vertex");
    }
    is_moved[h] = 1;
  }
  const int p = g.p();
  const int n_vertex = g.vertex_count();
  const int n_half = g.half_edge_count();

  std::vector<int> partner = g.partners();
  std::vector<int> vertex_of = g.vertex_assignment();
  std::vector<int> vertex_action = g.vertex_action();
  std::vector<int> half_action = g.half_edge_action();
  partner.resize(n_half + 2 * p);
  vertex_of.resize(n_half + 2 * p);
  half_action.resize(n_half + 2 * p);
  vertex_action.resize(n_vertex + p);

  int orbit_vertex = v;
  std::vector<int> translates = moved;
  for (int k = 0; k < p; ++k) {
    const int tail = n_half + 2 * k;
    const int head = tail + 1;
    partner[tail] = head;
    partner[head] = tail;
    vertex_of[tail] = orbit_vertex;
    vertex_of[head] = n_vertex + k;
    half_action[tail] = n_half + 2 * ((k + 1) % p);
    half_action[head] = half_action[tail] + 1;
    vertex_action[n_vertex + k] = n_vertex + (k + 1) % p;
    for (int& h : translates) {
      vertex_of[h] = n_vertex + k;
      h = g.act(h);
    }
    orbit_vertex = g.act_vertex(orbit_vertex);
  }
  return EquivariantGraph(p, n_vertex + p, std::move(partner), std::move(vertex_of), std::move(vertex_action),
                          std::move(half_action));
}

namespace {

void check_slide(const EquivariantGraph& g, EdgeOrbitRef s, EdgeOrbitRef t) {
  require_valid(g);
  for (int h : {s.half_edge, t.half_edge}) {
    if (h < 0 || h >= g.half_edge_count()) {
      throw Error(ErrorKind::InvalidArgument, "half-edge " + std::to_string(h) + " out of range");
    }
  }
  if (g.vertex_orbit_count() != 1) {
    throw Error(ErrorKind::NotSingleVertexOrbit, "slides need a single orbit of vertices");
  }
  const auto ids = g.edge_orbit_ids();
  if (ids[s.half_edge] == ids[t.half_edge]) {
    throw Error(ErrorKind::SameOrbit, "half-edges " + std::to_string(s.half_edge) + " and " +
                                          std::to_string(t.half_edge) + " lie in the same edge orbit");
  }
  if (g.terminal(s.half_edge) != g.initial(t.half_edge)) {
    throw Error(ErrorKind::NotComposable, "terminal vertex of " + std::to_string(s.half_edge) +
                                              " is not the initial vertex of " + std::to_string(t.half_edge));
  }
}

}  // namespace

EquivariantGraph slide(const EquivariantGraph& g, EdgeOrbitRef s, EdgeOrbitRef t) {
  check_slide(g, s, t);
  std::vector<int> vertex_of = g.vertex_assignment();
  int sk = s.half_edge;
  int tk = t.half_edge;
  for (int k = 0; k < g.p(); ++k) {
    vertex_of[g.partner(sk)] = g.terminal(tk);
    sk = g.act(sk);
    tk = g.act(tk);
  }
  return EquivariantGraph(g.p(), g.vertex_count(), g.partners(), std::move(vertex_of), g.vertex_action(),
                          g.half_edge_action());
}

EquivariantGraph slide_by_expansion_collapse(const EquivariantGraph& g, EdgeOrbitRef s, EdgeOrbitRef t) {
  check_slide(g, s, t);
  // Pull the end of s and the start of t onto a new vertex, joined to the
  // old one by a new edge t'. Collapsing t then leaves t' in its place and
  // s ending at terminal(t).
  const int v = g.terminal(s.half_edge);
  const EquivariantGraph expanded = expand(g, v, {g.partner(s.half_edge), t.half_edge});
  return collapse_orbit(expanded, {t.half_edge});
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const EquivariantGraph& a, const EquivariantGraph& b)
      : a_(a), b_(b), inverse_a_(a.half_edge_count()), inverse_b_(b.half_edge_count()),
        degree_a_(a.vertex_count(), 0), degree_b_(b.vertex_count(), 0) {
    for (int h = 0; h < a.half_edge_count(); ++h) {
      inverse_a_[a.act(h)] = h;
      ++degree_a_[a.vertex_of(h)];
    }
    for (int h = 0; h < b.half_edge_count(); ++h) {
      inverse_b_[b.act(h)] = h;
      ++degree_b_[b.vertex_of(h)];
    }
  }

  bool run() {
    State start{std::vector<int>(a_.half_edge_count(), -1), std::vector<int>(b_.half_edge_count(), -1),
                std::vector<int>(a_.vertex_count(), -1), std::vector<int>(b_.vertex_count(), -1)};
    return search(start);
  }

 private:
  struct State {
    std::vector<int> half, half_inverse, vertex, vertex_inverse;
  };

  bool assign(State& st, int x0, int y0) const {
    std::deque<std::pair<int, int>> queue{{x0, y0}};
    while (!queue.empty()) {
      const auto [x, y] = queue.front();
      queue.pop_front();
      if (st.half[x] == y) continue;
      if (st.half[x] != -1 || st.half_inverse[y] != -1) return false;
      const int vx = a_.vertex_of(x);
      const int vy = b_.vertex_of(y);
      if (st.vertex[vx] == -1) {
        if (st.vertex_inverse[vy] != -1 || degree_a_[vx] != degree_b_[vy]) return false;
        st.vertex[vx] = vy;
        st.vertex_inverse[vy] = vx;
      } else if (st.vertex[vx] != vy) {
        return false;
      }
      st.half[x] = y;
      st.half_inverse[y] = x;
      queue.emplace_back(a_.partner(x), b_.partner(y));
      queue.emplace_back(a_.act(x), b_.act(y));
      queue.emplace_back(inverse_a_[x], inverse_b_[y]);
    }
    return true;
  }

  bool verify(const State& st) const {
    for (int h = 0; h < a_.half_edge_count(); ++h) {
      const int y = st.half[h];
      if (b_.partner(y) != st.half[a_.partner(h)]) return false;
      if (b_.act(y) != st.half[a_.act(h)]) return false;
      if (b_.vertex_of(y) != st.vertex[a_.vertex_of(h)]) return false;
    }
    for (int v = 0; v < a_.vertex_count(); ++v) {
      if (st.vertex[v] == -1 || b_.act_vertex(st.vertex[v]) != st.vertex[a_.act_vertex(v)]) return false;
    }
    return true;
  }

  bool search(const State& st) const {
    int next = -1;
    for (int h = 0; h < a_.half_edge_count(); ++h) {
      if (st.half[h] == -1 && (next == -1 || st.vertex[a_.vertex_of(h)] != -1)) {
        next = h;
        if (st.vertex[a_.vertex_of(h)] != -1) break;
      }
    }
    if (next == -1) {
      // Every half-edge is matched; isolated vertices are matched here.
      State done = st;
      for (int v = 0; v < a_.vertex_count(); ++v) {
        if (done.vertex[v] != -1) continue;
        auto it = std::find(done.vertex_inverse.begin(), done.vertex_inverse.end(), -1);
        if (it == done.vertex_inverse.end()) return false;
        done.vertex[v] = static_cast<int>(it - done.vertex_inverse.begin());
        *it = v;
      }
      return verify(done);
    }
    const int image_vertex = st.vertex[a_.vertex_of(next)];
    for (int y = 0; y < b_.half_edge_count(); ++y) {
      if (st.half_inverse[y] != -1) continue;
      if (image_vertex != -1 && b_.vertex_of(y) != image_vertex) continue;
      State trial = st;
      if (assign(trial, next, y) && search(trial)) return true;
    }
    return false;
  }

  const EquivariantGraph& a_;
  const EquivariantGraph& b_;
  std::vector<int> inverse_a_, inverse_b_;
  std::vector<int> degree_a_, degree_b_;
};

}  // namespace

bool equivariantly_isomorphic(const EquivariantGraph& a, const EquivariantGraph& b) {
  if (a.p() != b.p() || a.vertex_count() != b.vertex_count() || a.half_edge_count() != b.half_edge_count()) {
    return false;
  }
  auto degrees = [](const EquivariantGraph& g) {
    std::vector<int> d(g.vertex_count(), 0);
    for (int h = 0; h < g.half_edge_count(); ++h) ++d[g.vertex_of(h)];
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  return IsomorphismSearch(a, b).run();
}

EquivariantGraph canonical_graph(int p, int k, int cycle_step) {
  require_prime(p);
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative loop count");
  if (((cycle_step % p) + p) % p == 0) throw Error(ErrorKind::InvalidArgument, "cycle step must be non-zero mod p");
  const int step = ((cycle_step % p) + p) % p;
  const int orbits = k + 1;
  const int n_half = 2 * p * orbits;
  std::vector<int> partner(n_half), vertex_of(n_half), half_action(n_half), vertex_action(p);
  for (int i = 0; i < p; ++i) vertex_action[i] = (i + 1) % p;
  for (int o = 0; o < orbits; ++o) {
    const int base = 2 * p * o;
    for (int i = 0; i < p; ++i) {
      const int tail = base + 2 * i;
      partner[tail] = tail + 1;
      partner[tail + 1] = tail;
      vertex_of[tail] = i;
      vertex_of[tail + 1] = o == 0 ? (i + step) % p : i;
      half_action[tail] = base + 2 * ((i + 1) % p);
      half_action[tail + 1] = half_action[tail] + 1;
    }
  }
  return EquivariantGraph(p, p, std::move(partner), std::move(vertex_of), std::move(vertex_action),
                          std::move(half_action));
}

std::string to_string(const Move& move) {
  if (move.kind == MoveKind::Collapse) return "collapse " + std::to_string(move.edge);
  return "slide " + std::to_string(move.edge) + " along " + std::to_string(move.along);
}

EquivariantGraph apply_move(const EquivariantGraph& g, const Move& move) {
  if (move.kind == MoveKind::Collapse) return collapse_orbit(g, {move.edge});
  return slide(g, {move.edge}, {move.along});
}

EquivariantGraph replay(const EquivariantGraph& g, const std::vector<Move>& moves) {
  require_valid(g);
  EquivariantGraph current = g;
  for (const auto& move : moves) {
    current = apply_move(current, move);
    require_valid(current);
  }
  return current;
}

}  // namespace outfk
