#include <doctest.h>

#include <functional>
#include <random>

#include "outfk/equivariant_graph.hpp"
#include "outfk/error.hpp"

using namespace outfk;

namespace {

std::string error_name_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  FAIL("no error thrown");
  return {};
}

// One vertex orbit v_0..v_{p-1}; orbit o holds the edges v_i -> v_{i+jumps[o]}.
// Edge (o, i) owns half-edges 2(o p + i) (tail) and 2(o p + i) + 1 (head).
EquivariantGraph jump_graph(int p, const std::vector<int>& jumps) {
  const int n_half = 2 * p * static_cast<int>(jumps.size());
  std::vector<int> partner(n_half), vertex_of(n_half), half_action(n_half), vertex_action(p);
  for (int i = 0; i < p; ++i) vertex_action[i] = (i + 1) % p;
  for (std::size_t o = 0; o < jumps.size(); ++o) {
    for (int i = 0; i < p; ++i) {
      const int tail = 2 * (static_cast<int>(o) * p + i);
      partner[tail] = tail + 1;
      partner[tail + 1] = tail;
      vertex_of[tail] = i;
      vertex_of[tail + 1] = (i + jumps[o]) % p;
      half_action[tail] = 2 * (static_cast<int>(o) * p + (i + 1) % p);
      half_action[tail + 1] = half_action[tail] + 1;
    }
  }
  return EquivariantGraph(p, p, std::move(partner), std::move(vertex_of), std::move(vertex_action),
                          std::move(half_action));
}

// Multisets of jumps of the given size, as non-decreasing sequences.
void for_each_multiset(int p, int size, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(current.size()) == size) {
      visit(current);
      return;
    }
    for (int j = from; j < p; ++j) {
      current.push_back(j);
      rec(j);
      current.pop_back();
    }
  };
  rec(0);
}

}  // namespace

TEST_CASE("demo graphs validate") {
  CHECK(validate(canonical_graph(3, 2)).ok());
  CHECK(validate(canonical_graph(2, 0)).ok());
  CHECK(validate(canonical_graph(5, 1, 2)).ok());
  CHECK(validate(demo_graph("two_orbit_p5")).ok());
  CHECK(validate(demo_graph("scrambled_p5_k2_s7")).ok());
  CHECK(rank(canonical_graph(3, 2)) == 7);
  CHECK(rank(demo_graph("two_orbit_p3")) == 4);
  CHECK(is_normal_form(canonical_graph(7, 3)));
  CHECK_FALSE(is_normal_form(demo_graph("two_orbit_p3")));
}

TEST_CASE("validation catches each invariant") {
  const auto rose = demo_graph("rose_rotation_p5");
  CHECK(validate(rose).has(Violation::FreenessViolation));
  CHECK(has_fixed_vertex(rose));
  CHECK(has_fixed_vertex(demo_graph("theta_rotation_p3")));
  CHECK_FALSE(has_fixed_vertex(canonical_graph(3, 1)));
  CHECK(error_name_of([&] { require_valid(rose); }) == "FreenessViolation");

  // partner not an involution
  CHECK(validate(EquivariantGraph(2, 2, {1, 2, 3, 0}, {0, 1, 1, 0}, {1, 0}, {2, 3, 0, 1}))
            .has(Violation::InvolutionViolation));
  // f^3 != id at p = 3
  {
    const auto g = canonical_graph(3, 0);
    auto va = g.vertex_action();
    CHECK(validate(EquivariantGraph(2, g.vertex_count(), g.partners(), g.vertex_assignment(), va,
                                    g.half_edge_action()))
              .has(Violation::ActionOrderViolation));
  }
  // vertex action not a permutation
  CHECK(validate(EquivariantGraph(2, 2, {1, 0, 3, 2}, {0, 1, 1, 0}, {0, 0}, {2, 3, 0, 1}))
            .has(Violation::StructureViolation));
  // half-edge action disagrees with vertex action
  CHECK(validate(EquivariantGraph(2, 2, {1, 0, 3, 2}, {0, 1, 1, 0}, {1, 0}, {3, 2, 1, 0}))
            .has(Violation::EquivarianceViolation));
  // two disjoint loops swapped by f
  CHECK(validate(EquivariantGraph(2, 2, {1, 0, 3, 2}, {0, 0, 1, 1}, {1, 0}, {2, 3, 0, 1}))
            .has(Violation::ConnectivityViolation));
  CHECK(error_name_of([] { return EquivariantGraph(2, 1, {1, 5}, {0, 0}, {0}, {0, 1}); }) == "StructureViolation");
}

TEST_CASE("collapse") {
  const auto g = demo_graph("two_orbit_p3");
  // orbit 1 holds the spokes v_i -> w_i
  const auto c = collapse_orbit(g, {6});
  CHECK(validate(c).ok());
  CHECK(c.vertex_count() == 3);
  CHECK(rank(c) == rank(g));
  CHECK(c.vertex_orbit_count() == 1);
  CHECK(error_name_of([&] { return collapse_orbit(g, {0}); }) == "NotAForest");   // the cycle
  CHECK(error_name_of([&] { return collapse_orbit(g, {12}); }) == "NotAForest");  // loops
}

TEST_CASE("slide errors") {
  const auto g = jump_graph(3, {1, 0});
  CHECK(error_name_of([&] { return slide(g, {6}, {8}); }) == "SameOrbit");
  // terminal(6) = v_0, initial(1) = v_1
  CHECK(error_name_of([&] { return slide(g, {6}, {1}); }) == "NotComposable");
  CHECK(error_name_of([&] { return slide(demo_graph("two_orbit_p3"), {12}, {0}); }) == "NotSingleVertexOrbit");
}

TEST_CASE("slide then slide back") {
  const auto g = jump_graph(5, {1, 0});
  // s = half-edge 10, the loop at v_0; t runs from v_0 to v_1
  const int t = 0;
  REQUIRE(g.terminal(10) == g.initial(t));
  const auto moved = slide(g, {10}, {t});
  CHECK(validate(moved).ok());
  CHECK(moved.terminal(10) == 1);
  CHECK(equivariantly_isomorphic(moved, jump_graph(5, {1, 1})));
  CHECK(rank(moved) == rank(g));
  CHECK_FALSE(equivariantly_isomorphic(moved, g));
  const auto back = slide(moved, {10}, {g.partner(t)});
  CHECK(back == g);
}

TEST_CASE("slide equals expansion then collapse on every small configuration") {
  int configurations = 0;
  int compared = 0;
  for (int p : {2, 3}) {
    for (int orbits = 1; orbits <= 4; ++orbits) {
      for_each_multiset(p, orbits, [&](const std::vector<int>& jumps) {
        const auto g = jump_graph(p, jumps);
        if (!validate(g).ok()) return;
        ++configurations;
        const auto ids = g.edge_orbit_ids();
        for (int s = 0; s < g.half_edge_count(); ++s) {
          for (int t = 0; t < g.half_edge_count(); ++t) {
            if (ids[s] == ids[t] || g.terminal(s) != g.initial(t)) continue;
            CAPTURE(p);
            CAPTURE(s);
            CAPTURE(t);
            const auto direct = slide(g, {s}, {t});
            const auto composite = slide_by_expansion_collapse(g, {s}, {t});
            CHECK(validate(direct).ok());
            CHECK(rank(direct) == rank(g));
            CHECK(equivariantly_isomorphic(direct, composite));
            ++compared;
          }
        }
      });
    }
  }
  // p = 2 and p = 3 disconnected configurations are the all-loop ones
  CHECK(configurations == (2 + 3 + 4 + 5 - 4) + (3 + 6 + 10 + 15 - 4));
  CHECK(compared > 1000);
}

TEST_CASE("isomorphism search") {
  CHECK(equivariantly_isomorphic(jump_graph(5, {1, 0}), canonical_graph(5, 1)));
  CHECK(equivariantly_isomorphic(jump_graph(5, {2, 0}), jump_graph(5, {3, 0})));
  CHECK_FALSE(equivariantly_isomorphic(jump_graph(5, {1, 0}), jump_graph(5, {2, 0})));
  CHECK_FALSE(equivariantly_isomorphic(canonical_graph(5, 1), canonical_graph(5, 2)));
  CHECK_FALSE(equivariantly_isomorphic(canonical_graph(3, 1), canonical_graph(5, 1)));
}

TEST_CASE("expand then collapse is the identity up to isomorphism") {
  std::mt19937_64 rng(17);
  for (int p : {2, 3, 5}) {
    for (int i = 0; i < 20; ++i) {
      const auto g = scrambled_graph(p, 2, 5, 1, rng);
      const int v = static_cast<int>(rng() % g.vertex_count());
      std::vector<int> moved;
      for (int h : g.half_edges_at(v)) {
        if (rng() % 2) moved.push_back(h);
      }
      const auto e = expand(g, v, moved);
      CHECK(validate(e).ok());
      CHECK(rank(e) == rank(g));
      CHECK(e.vertex_count() == g.vertex_count() + p);
      const auto c = collapse_orbit(e, {g.half_edge_count()});
      CHECK(equivariantly_isomorphic(c, g));
    }
  }
}

TEST_CASE("normalize random graphs") {
  std::mt19937_64 rng(20240601);
  for (int p : {2, 3, 5, 7}) {
    for (int i = 0; i < 200; ++i) {
      const int k = static_cast<int>(rng() % (28 / p + 1));
      const auto g = scrambled_graph(p, k, static_cast<int>(rng() % 25), static_cast<int>(rng() % 5), rng);
      CAPTURE(p);
      CAPTURE(i);
      REQUIRE(validate(g).ok());
      REQUIRE(rank(g) <= 29);
      const auto result = normalize(g);
      CHECK(result.form.loops_per_vertex == (rank(g) - 1) / p);
      CHECK(result.form.loops_per_vertex == k);
      CHECK(result.form.rank == rank(g));
      CHECK(is_normal_form(result.graph));
      CHECK(equivariantly_isomorphic(result.graph, canonical_graph(p, k, result.form.cycle_step)));
      CHECK(result.max_loop_slides_per_orbit <= p / 2);
      EquivariantGraph current = g;
      for (const auto& move : result.moves) {
        current = apply_move(current, move);
        CHECK(validate(current).ok());
        CHECK(rank(current) == rank(g));
      }
      CHECK(current == result.graph);
      CHECK(replay(g, result.moves) == result.graph);
    }
  }
}

TEST_CASE("normalize canonical input makes no moves") {
  const auto r = normalize(canonical_graph(3, 2));
  CHECK(r.moves.empty());
  CHECK(r.form == NormalForm{3, 2, 7, 1});
  CHECK(normalize(canonical_graph(5, 0, 2)).form.cycle_step == 2);
  CHECK(error_name_of([] { return normalize(demo_graph("rose_rotation_p3")); }) == "FreenessViolation");
}

TEST_CASE("graph json round trip") {
  std::mt19937_64 rng(3);
  for (int p : {2, 3, 5}) {
    const auto g = scrambled_graph(p, 1, 6, 2, rng);
    CHECK(graph_from_json(to_json(g)) == g);
  }
  CHECK(error_name_of([] { return graph_from_json("{"); }) == "ParseError");
  CHECK(error_name_of([] { return graph_from_json(R"({"p": 2})"); }) == "ParseError");
  CHECK(error_name_of([] { return demo_graph("nope"); }) == "InvalidArgument");
  CHECK(error_name_of([] { return demo_graph("canonical_p4_k1"); }) == "NotPrime");
}

TEST_CASE("moves render") {
  CHECK(to_string(Move{MoveKind::Collapse, 4, -1}) == "collapse 4");
  CHECK(to_string(Move{MoveKind::Slide, 2, 6}) == "slide 2 along 6");
}
