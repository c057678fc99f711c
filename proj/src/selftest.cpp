#include "outfk/selftest.hpp"

#include <algorithm>
#include <random>

#include "outfk/equivariant_graph.hpp"
#include "outfk/error.hpp"
#include "outfk/modp.hpp"
#include "outfk/orbits.hpp"
#include "outfk/tate.hpp"

namespace outfk {

bool SelftestReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.failed == 0; });
}

namespace {

struct ExpectedCell {
  int n, p;
  std::int64_t even, odd;
};

constexpr ExpectedCell kTable4[] = {
    {2, 2, 4, 0},  {2, 3, 1, 0}, {3, 3, 2, 0}, {4, 5, 1, 0}, {5, 5, 2, 0},  {6, 5, 4, 0},
    {6, 7, 1, 0},  {7, 5, 3, 0}, {7, 7, 2, 0}, {8, 5, 7, 0}, {8, 7, 4, 0},  {9, 7, 3, 0},
    {10, 7, 6, 0}, {10, 11, 1, 0}, {11, 11, 2, 0}, {12, 11, 4, 1},
};

constexpr ExpectedCell kTable5[] = {
    {2, 2, 5, 0}, {2, 3, 2, 0}, {2, 5, 1, 0}, {2, 7, 1, 0}, {3, 3, 3, 0}, {3, 5, 1, 0}, {3, 7, 1, 0}, {4, 5, 3, 0},
    {4, 7, 2, 0}, {5, 5, 3, 0}, {5, 7, 1, 0}, {6, 5, 6, 0}, {6, 7, 3, 0}, {7, 5, 5, 1}, {7, 7, 4, 1},
};

class Recorder {
 public:
  explicit Recorder(std::string name) { check_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    if (ok) {
      ++check_.passed;
    } else {
      ++check_.failed;
      if (check_.failures.size() < 5) check_.failures.push_back(what);
    }
  }

  template <typename F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }

  SelftestCheck take() { return std::move(check_); }

 private:
  SelftestCheck check_;
};

std::vector<int> primes_up_to(int max_p) {
  std::vector<int> out;
  for (int p = 2; p <= max_p; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::string at(int p) { return "p=" + std::to_string(p); }
std::string at(int n, int p) { return "n=" + std::to_string(n) + " p=" + std::to_string(p); }

bool matches(const Dimension& d, std::int64_t v) { return d.known() && *d.value == v; }

}  // namespace

SelftestReport run_selftest(int max_p, const Registry& registry) {
  if (max_p < 2) throw Error(ErrorKind::InvalidArgument, "max-p must be at least 2");
  SelftestReport report;
  report.max_p = max_p;
  const auto primes = primes_up_to(max_p);

  {
    Recorder r("stabiliser group orders");
    for (int p : primes) {
      for (auto kind : kAllKinds) {
        r.guarded(at(p), [&] {
          const std::size_t order = stabiliser_group(kind, p).order();
          const auto generic = static_cast<std::size_t>(generic_stabiliser_order(kind));
          r.expect(p >= 5 ? order == generic : generic % order == 0, std::string(kind_name(kind)) + " " + at(p));
        });
      }
    }
    report.checks.push_back(r.take());
  }
  {
    Recorder r("orbit counts: burnside = brute force = closed form");
    for (int p : primes) {
      for (auto kind : kAllKinds) {
        r.guarded(at(p), [&] {
          const auto rep = orbit_report(kind, p);
          r.expect(rep.match && rep.orbit_count == rep.brute_force_count && rep.orbit_count == rep.closed_form,
                   std::string(kind_name(kind)) + " " + at(p));
        });
      }
    }
    report.checks.push_back(r.take());
  }
  {
    Recorder r("quotient betti number = (p-7)(p-5)/24");
    for (int p : primes) {
      r.guarded(at(p), [&] {
        const auto q = quotient_summary(p);
        const std::int64_t expected = p >= 5 ? static_cast<std::int64_t>(p - 7) * (p - 5) / 24 : 0;
        r.expect(q.betti_one == expected, at(p));
      });
    }
    report.checks.push_back(r.take());
  }
  {
    Recorder r("tate_k(p, p+1) = (4, betti_one)");
    for (int p : primes) {
      if (p < 5) continue;
      r.guarded(at(p), [&] {
        const auto t = tate_k(p, p + 1, registry);
        const auto q = quotient_summary(p);
        r.expect(matches(t.even, 4) && matches(t.odd, q.betti_one), at(p));
        r.expect(t.weak_duality == (p < 11), "weak duality " + at(p));
        const auto rest = tate_k_filtered(p, p + 1, {ClassKind::Phi}, registry);
        r.expect(matches(rest.even, 3) && matches(rest.odd, 0), "without Phi " + at(p));
      });
    }
    report.checks.push_back(r.take());
  }
  {
    Recorder r("weak duality for n in {p-1, p, p+2, p+3}");
    for (int p : primes) {
      if (p < 5) continue;
      for (int n : {p - 1, p, p + 2, p + 3}) {
        if (!classes_supported(p, n)) continue;
        r.guarded(at(n, p), [&] {
          const auto t = tate_k(p, n, registry);
          r.expect(!t.odd.known() || *t.odd.value == 0, at(n, p));
        });
      }
    }
    report.checks.push_back(r.take());
  }
  {
    Recorder r("table 4 cells");
    r.guarded("emit", [&] {
      const TableDoc doc = emit_table(4, registry);
      for (const auto& e : kTable4) {
        const auto& c = doc.cell(e.n, e.p);
        r.expect(matches(c.even, e.even) && matches(c.odd, e.odd), at(e.n, e.p));
      }
      const auto& open = doc.cell(11, 7);
      r.expect(open.status == CellStatus::Unknown && open.even.blocker == "F4SemidirectAutF4_Z2invariants" &&
                   open.even.known_part == 5 && open.odd.known_part == 1,
               "open cell n=11 p=7");
    });
    report.checks.push_back(r.take());
  }
  {
    Recorder r("table 5 cells");
    r.guarded("emit", [&] {
      const TableDoc doc = emit_table(5, registry);
      for (const auto& e : kTable5) {
        const auto& c = doc.cell(e.n, e.p);
        r.expect(matches(c.even, e.even) && matches(c.odd, e.odd), at(e.n, e.p));
      }
    });
    report.checks.push_back(r.take());
  }
  {
    Recorder r("example families");
    r.guarded("sl3", [&] {
      const auto [two, three] = example_sl3();
      r.expect(matches(two.even, 4) && matches(two.odd, 0), "sl3 p=2");
      r.expect(matches(three.even, 2) && matches(three.odd, 0), "sl3 p=3");
    });
    for (int p : primes) {
      if (p < 3) continue;
      r.guarded(at(p), [&] {
        const auto a = example_amalgam(p);
        r.expect(matches(a.even, 1) && matches(a.odd, p - 2) && a.euler_char == 3 - p, "amalgam " + at(p));
        if (p < 5) return;
        for (std::int64_t h = 1; h <= 3; ++h) {
          const auto gl = example_gl(p, h);
          const std::int64_t expected = h * (std::int64_t{1} << ((p - 5) / 2));
          r.expect(matches(gl.even, expected) && matches(gl.odd, expected) && gl.euler_char == 0, "gl " + at(p));
          const auto sp = example_sp(p, h);
          r.expect(matches(sp.even, h * (std::int64_t{1} << ((p - 1) / 2))) && matches(sp.odd, 0), "sp " + at(p));
        }
        const auto mcg = example_mcg(p);
        r.expect(matches(mcg.even, static_cast<std::int64_t>(p + 1) * (p - 1) / 6) && matches(mcg.odd, 0),
                 "mcg " + at(p));
      });
    }
    report.checks.push_back(r.take());
  }
  {
    Recorder r("random equivariant graphs normalize");
    std::mt19937_64 rng(20240601);
    for (int p : {2, 3, 5, 7}) {
      for (int i = 0; i < 25; ++i) {
        const int k = static_cast<int>(rng() % (28 / p + 1));
        r.guarded(at(p), [&] {
          const auto g = scrambled_graph(p, k, static_cast<int>(rng() % 20), static_cast<int>(rng() % 4), rng);
          const auto result = normalize(g);
          const EquivariantGraph end = replay(g, result.moves);
          r.expect(validate(g).ok() && result.form.loops_per_vertex == (rank(g) - 1) / p &&
                       result.form.loops_per_vertex == k && end == result.graph,
                   at(p) + " k=" + std::to_string(k));
        });
      }
    }
    report.checks.push_back(r.take());
  }
  return report;
}

}  // namespace outfk
