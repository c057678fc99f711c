#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "expected.hpp"
#include "outfk/classes.hpp"
#include "outfk/cli.hpp"
#include "outfk/equivariant_graph.hpp"
#include "outfk/error.hpp"
#include "outfk/orbits.hpp"
#include "outfk/tate.hpp"

using namespace outfk;

namespace {

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    if (!ok) ++failed_;
  }
  int total() const { return total_; }
  int failed() const { return failed_; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

bool is(const Dimension& d, std::int64_t v) { return d.known() && *d.value == v; }

std::vector<int> primes_between(int lo, int hi) {
  std::vector<int> out;
  for (int p = lo; p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::string at(int n, int p) { return "(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")"; }

void fixed_point_tables(Criterion& c) {
  for (int p : expected::kFixedPrimes) {
    for (auto kind : kAllKinds) {
      for (const auto& row : stabiliser_table_rows(kind, p)) {
        for (const auto& want : expected::kFixedRows) {
          if (want.kind != kind || want.word != row.word) continue;
          c.check(fixed_points(row.matrix).count == expected::fixed_count(want, p),
                  std::string(kind_name(kind)) + " " + row.word + " p=" + std::to_string(p));
        }
      }
    }
  }
}

void orbit_counts(Criterion& c) {
  for (int p : primes_between(2, 97)) {
    for (auto kind : kAllKinds) {
      const auto r = orbit_report(kind, p);
      c.check(r.orbit_count == r.brute_force_count && r.orbit_count == r.closed_form,
              std::string(kind_name(kind)) + " p=" + std::to_string(p));
    }
  }
  c.check(orbit_closed_form(StabiliserKind::Edge, 2) == 2 && orbit_closed_form(StabiliserKind::RoseVertex, 2) == 2 &&
              orbit_closed_form(StabiliserKind::ThetaVertex, 2) == 1,
          "p=2 special values");
  c.check(orbit_closed_form(StabiliserKind::Edge, 3) == 3 && orbit_closed_form(StabiliserKind::RoseVertex, 3) == 2 &&
              orbit_closed_form(StabiliserKind::ThetaVertex, 3) == 2,
          "p=3 special values");
  for (int p : primes_between(5, 97)) {
    c.check(orbit_closed_form(StabiliserKind::Edge, p) == (p - 1) * (p + 3) / 4 &&
                orbit_closed_form(StabiliserKind::RoseVertex, p) == (p - 1) * (p + 5) / 8 &&
                orbit_closed_form(StabiliserKind::ThetaVertex, p) == (p - 1) * (p + 7) / 12,
            "closed forms p=" + std::to_string(p));
  }
}

void betti_numbers(Criterion& c) {
  for (int p : primes_between(5, 97)) {
    c.check(quotient_summary(p).betti_one == (p - 7) * (p - 5) / 24, "p=" + std::to_string(p));
  }
  for (int p : {2, 3, 5, 7}) c.check(quotient_summary(p).betti_one == 0, "zero at p=" + std::to_string(p));
  c.check(quotient_summary(11).betti_one == 1, "p=11");
  c.check(quotient_summary(13).betti_one == 2, "p=13");
}

void rank_p_plus_one(Criterion& c) {
  for (int p : {5, 7, 11, 13, 17, 19, 23}) {
    const auto r = tate_k(p, p + 1);
    const std::int64_t odd = p >= 11 ? static_cast<std::int64_t>(p - 7) * (p - 5) / 24 : 0;
    c.check(is(r.even, 4) && is(r.odd, odd), at(p + 1, p));
  }
}

void table_four(Criterion& c) {
  const auto doc = emit_table(4);
  for (const auto& e : expected::kTateTable) {
    const auto& cell = doc.cell(e.n, e.p);
    c.check(is(cell.even, e.even) && is(cell.odd, e.odd), at(e.n, e.p));
  }
  const auto& open = doc.cell(11, 7);
  c.check(open.status == CellStatus::Unknown && !open.even.known() &&
              open.even.blocker == "F4SemidirectAutF4_Z2invariants",
          "unknown cell " + at(11, 7));
}

void table_five(Criterion& c) {
  const auto doc = emit_table(5);
  for (const auto& e : expected::kRationalTable) {
    const auto r = rational_k(e.p, e.n);
    const auto& cell = doc.cell(e.n, e.p);
    c.check(is(r.even, e.even) && is(r.odd, e.odd) && is(cell.even, e.even) && is(cell.odd, e.odd), at(e.n, e.p));
  }
}

void examples(Criterion& c) {
  const auto [two, three] = example_sl3();
  c.check(is(two.even, 4) && is(two.odd, 0), "sl3 p=2");
  c.check(is(three.even, 2) && is(three.odd, 0), "sl3 p=3");
  for (int p : {5, 7, 11, 13}) {
    for (std::int64_t h : {1, 2, 3}) {
      const auto gl = example_gl(p, h);
      const std::int64_t want = h * (std::int64_t{1} << ((p - 5) / 2));
      c.check(is(gl.even, want) && is(gl.odd, want) && gl.euler_char == 0, "gl p=" + std::to_string(p));
      const auto sp = example_sp(p, h);
      c.check(is(sp.even, h * (std::int64_t{1} << ((p - 1) / 2))) && is(sp.odd, 0), "sp p=" + std::to_string(p));
    }
    c.check(is(example_mcg(p).even, static_cast<std::int64_t>(p + 1) * (p - 1) / 6), "mcg p=" + std::to_string(p));
  }
  for (int p : {3, 5, 7, 11}) {
    const auto a = example_amalgam(p);
    c.check(is(a.even, 1) && is(a.odd, p - 2) && a.euler_char == 3 - p, "amalgam p=" + std::to_string(p));
  }
}

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

void graph_properties(Criterion& c) {
  std::mt19937_64 rng(20240601);
  for (int p : {2, 3, 5, 7}) {
    for (int i = 0; i < 200; ++i) {
      const int k = static_cast<int>(rng() % (28 / p + 1));
      const auto g = scrambled_graph(p, k, static_cast<int>(rng() % 25), static_cast<int>(rng() % 5), rng);
      const std::string what = "random graph p=" + std::to_string(p) + " #" + std::to_string(i);
      c.check(validate(g).ok() && rank(g) <= 29, what + " valid");
      const auto result = normalize(g);
      c.check(result.form.loops_per_vertex == (rank(g) - 1) / p, what + " k");
      EquivariantGraph current = g;
      bool steps_ok = true;
      for (const auto& move : result.moves) {
        current = apply_move(current, move);
        steps_ok = steps_ok && validate(current).ok() && rank(current) == rank(g);
      }
      c.check(steps_ok && current == result.graph, what + " replay");
    }
  }
  for (int p : {2, 3}) {
    std::vector<int> jumps;
    std::function<void(int)> rec = [&](int from) {
      if (!jumps.empty()) {
        const auto g = jump_graph(p, jumps);
        if (validate(g).ok()) {
          const auto ids = g.edge_orbit_ids();
          for (int s = 0; s < g.half_edge_count(); ++s) {
            for (int t = 0; t < g.half_edge_count(); ++t) {
              if (ids[s] == ids[t] || g.terminal(s) != g.initial(t)) continue;
              c.check(equivariantly_isomorphic(slide(g, {s}, {t}), slide_by_expansion_collapse(g, {s}, {t})),
                      "slide agreement p=" + std::to_string(p));
            }
          }
        }
      }
      if (jumps.size() == 4) return;
      for (int j = from; j < p; ++j) {
        jumps.push_back(j);
        rec(j);
        jumps.pop_back();
      }
    };
    rec(0);
  }
}

void pipeline(Criterion& c) {
  for (int p : primes_between(5, 97)) {
    c.check(is(tate_k(p, p + 1).odd, quotient_summary(p).betti_one), "p=" + std::to_string(p));
  }
}

void determinism(Criterion& c) {
  auto invoke = [](const std::vector<std::string>& args, std::string& text) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    text = out.str() + "\x1f" + err.str();
    return code;
  };
  std::string text;
  c.check(invoke({"selftest", "--max-p", "31"}, text) == kExitOk, "selftest --max-p 31");
  for (const auto& args : expected::kDocumentedCommands) {
    for (const char* format : {"text", "records"}) {
      std::vector<std::string> full{"--format", format};
      full.insert(full.end(), args.begin(), args.end());
      std::string first, second;
      const int a = invoke(full, first);
      const int b = invoke(full, second);
      c.check(a == b && first == second, args.front() + " " + format);
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"fixed-point counts of the stabiliser tables", fixed_point_tables},
      {"orbit counts: burnside = brute force = closed form, p <= 97", orbit_counts},
      {"quotient betti number (p-7)(p-5)/24", betti_numbers},
      {"tate_k(p, p+1) = (4, (p-7)(p-5)/24)", rank_p_plus_one},
      {"Farrell-Tate table (table 4) reproduction", table_four},
      {"rationalised table (table 5) reproduction", table_five},
      {"example families", examples},
      {"equivariant graph properties", graph_properties},
      {"pipeline: odd dimension = quotient betti number", pipeline},
      {"CLI determinism and selftest", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    std::string crash;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const bool ok = crash.empty() && c.failed() == 0 && c.total() > 0;
    if (!ok) ++failures;
    std::printf("%s %zu. %s (%d/%d)", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), c.total() - c.failed(),
                c.total());
    if (!crash.empty()) std::printf(" exception: %s", crash.c_str());
    if (!c.first_failure().empty()) std::printf(" first failure: %s", c.first_failure().c_str());
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
