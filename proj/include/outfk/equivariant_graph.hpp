#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace outfk {

/// A finite graph with an automorphism f of order dividing p, stored on
/// half-edges. Half-edge h points away from vertex vertex_of(h); its partner
/// is the other end of the same geometric edge. Read as an oriented edge, h
/// runs from initial(h) = vertex_of(h) to terminal(h) = vertex_of(partner(h)).
///
/// Construction only checks that indices are in range; everything else is
/// reported by validate().
class EquivariantGraph {
 public:
  EquivariantGraph(int p, int vertex_count, std::vector<int> partner, std::vector<int> vertex_of,
                   std::vector<int> vertex_action, std::vector<int> half_edge_action);

  /// A graph with the trivial action (p = 1).
  static EquivariantGraph without_action(int vertex_count, std::vector<int> partner,
                                         std::vector<int> vertex_of);

  int p() const noexcept { return p_; }
  int vertex_count() const noexcept { return vertex_count_; }
  int half_edge_count() const noexcept { return static_cast<int>(partner_.size()); }
  int edge_count() const noexcept { return half_edge_count() / 2; }

  int partner(int h) const { return partner_.at(h); }
  int vertex_of(int h) const { return vertex_of_.at(h); }
  int initial(int h) const { return vertex_of(h); }
  int terminal(int h) const { return vertex_of(partner(h)); }
  int act_vertex(int v) const { return vertex_action_.at(v); }
  int act(int h) const { return half_edge_action_.at(h); }

  const std::vector<int>& partners() const noexcept { return partner_; }
  const std::vector<int>& vertex_assignment() const noexcept { return vertex_of_; }
  const std::vector<int>& vertex_action() const noexcept { return vertex_action_; }
  const std::vector<int>& half_edge_action() const noexcept { return half_edge_action_; }

  /// Half-edges at v in increasing index order.
  std::vector<int> half_edges_at(int v) const;

  /// Orbit of half-edge h under f, in the order h, f(h), f^2(h), ...
  std::vector<int> half_edge_orbit(int h) const;

  /// Orbit index of every vertex; orbits are numbered by smallest member.
  std::vector<int> vertex_orbit_ids() const;
  int vertex_orbit_count() const;

  /// Orbit index of every geometric edge orbit, stored per half-edge (both
  /// ends of an edge and all translates share the index).
  std::vector<int> edge_orbit_ids() const;
  int edge_orbit_count() const;

  friend bool operator==(const EquivariantGraph&, const EquivariantGraph&) = default;

 private:
  int p_;
  int vertex_count_;
  std::vector<int> partner_;
  std::vector<int> vertex_of_;
  std::vector<int> vertex_action_;
  std::vector<int> half_edge_action_;
};

enum class Violation {
  StructureViolation,    // actions are not permutations
  InvolutionViolation,   // partner is not a fixed-point-free involution
  ActionOrderViolation,  // f^p != id
  EquivarianceViolation, // f does not commute with partner / vertex_of
  FreenessViolation,     // a non-trivial power fixes a vertex or inverts an edge
  ConnectivityViolation,
};

std::string_view violation_name(Violation v);

struct ValidationIssue {
  Violation violation;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
  bool has(Violation v) const;
};

ValidationReport validate(const EquivariantGraph& g);

/// Throws Error(InvalidGraph) named after the first violation.
void require_valid(const EquivariantGraph& g);

/// Number of geometric edges minus vertices plus one.
int rank(const EquivariantGraph& g);

/// True iff some non-trivial power of f fixes a vertex.
bool has_fixed_vertex(const EquivariantGraph& g);

/// An edge orbit named by a representative half-edge, which also fixes the
/// orientation: the orbit is {f^k(half_edge)}.
struct EdgeOrbitRef {
  int half_edge = 0;
};

/// Contracts every edge in the orbit of e at once. Throws NotAForest unless
/// the orbit's edges span a forest.
EquivariantGraph collapse_orbit(const EquivariantGraph& g, EdgeOrbitRef e);

/// Equivariant expansion at the orbit of v: a new vertex v' is added for
/// every translate of v, the half-edges in `moved` (all at v) are carried
/// over to v', and a new edge orbit runs from v to v'. New half-edges are
/// appended with the tail of the new edge at v first.
EquivariantGraph expand(const EquivariantGraph& g, int v, const std::vector<int>& moved);

/// Equivariant slide of s along t, with terminal(s) == initial(t): every
/// translate f^k(s) has its terminal end moved to terminal(f^k(t)).
/// Throws NotSingleVertexOrbit, SameOrbit or NotComposable.
EquivariantGraph slide(const EquivariantGraph& g, EdgeOrbitRef s, EdgeOrbitRef t);

/// The same slide obtained as an expansion followed by a collapse.
EquivariantGraph slide_by_expansion_collapse(const EquivariantGraph& g, EdgeOrbitRef s, EdgeOrbitRef t);

/// Isomorphism of graphs commuting with the two actions.
bool equivariantly_isomorphic(const EquivariantGraph& a, const EquivariantGraph& b);

/// The rotation by 2*pi/p of a p-cycle carrying k loops at every vertex.
/// cycle_step s joins v_i to v_{i+s}; s = 1 is the standard form.
EquivariantGraph canonical_graph(int p, int k, int cycle_step = 1);

struct NormalForm {
  int p = 0;
  int loops_per_vertex = 0;
  int rank = 0;
  int cycle_step = 1;  // always 1 when loops_per_vertex > 0
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

enum class MoveKind { Collapse, Slide };

struct Move {
  MoveKind kind = MoveKind::Collapse;
  int edge = 0;   // collapsed orbit, or the sliding orbit s
  int along = -1; // t for slides
};

std::string to_string(const Move& move);

struct NormalizationResult {
  NormalForm form;
  std::vector<Move> moves;
  EquivariantGraph graph;
  int path_slides = 0;
  int cycle_slides = 0;
  int max_loop_slides_per_orbit = 0;
};

/// Collapses to one vertex orbit, builds an edge from v to f(v) by slides,
/// then slides every other orbit along that cycle until it is a loop.
NormalizationResult normalize(const EquivariantGraph& g);

/// Checks that g is literally in normal form: one vertex orbit, one orbit
/// joining each v to f(v), every other edge a loop.
bool is_normal_form(const EquivariantGraph& g);

EquivariantGraph apply_move(const EquivariantGraph& g, const Move& move);

/// Applies the moves in order, validating after every step.
EquivariantGraph replay(const EquivariantGraph& g, const std::vector<Move>& moves);

/// Valid random input: canonical_graph(p, k) followed by `slides` random
/// slides and `expansions` random expansions.
EquivariantGraph scrambled_graph(int p, int k, int slides, int expansions, std::mt19937_64& rng);

// Graph file format (JSON):
//   { "p": 3, "vertices": 3,
//     "half_edges": [ {"id": 0, "partner": 1, "vertex": 0}, ... ],
//     "vertex_action": [1, 2, 0],
//     "half_edge_action": [ ... ] }
std::string to_json(const EquivariantGraph& g);
EquivariantGraph graph_from_json(std::string_view text);
EquivariantGraph load_graph(const std::filesystem::path& path);

/// Built-in graphs: canonical_p<P>_k<K>, two_orbit_p<P>, rose_rotation_p<P>,
/// theta_rotation_p<P>, scrambled_p<P>_k<K>_s<SEED>.
EquivariantGraph demo_graph(std::string_view name);

}  // namespace outfk
