#include <doctest.h>

#include "outfk/error.hpp"
#include "outfk/poincare.hpp"

using namespace outfk;

namespace {

PoincareSeries series(std::map<int, std::int64_t> dims) { return PoincareSeries(dims); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

// Brute force over a basis: pairs (a, b) of basis vectors of H^i x H^j,
// counting swap orbits with the Koszul sign.
std::int64_t invariant_dim(const PoincareSeries& s, int degree) {
  std::int64_t count = 0;
  for (const auto& [i, di] : s.dims()) {
    const int j = degree - i;
    if (j < i) continue;
    const std::int64_t dj = s.dim(j);
    if (i < j) {
      count += di * dj;
    } else if (i % 2 == 0) {
      count += di * (di + 1) / 2;
    } else {
      count += di * (di - 1) / 2;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("series basics") {
  CHECK(PoincareSeries::point().to_string() == "{0:1}");
  CHECK(PoincareSeries().max_degree() == -1);
  CHECK(series({{0, 1}, {3, 0}}).max_degree() == 0);
  CHECK(kind_of([] { return series({{-1, 1}}); }) == ErrorKind::InvalidArgument);
  CHECK(exterior_algebra(3) == series({{0, 1}, {1, 3}, {2, 3}, {3, 1}}));
  CHECK(even_odd_totals(exterior_algebra(4)) == EvenOdd{8, 8});
}

TEST_CASE("kunneth matches the totals rule") {
  const std::vector<PoincareSeries> samples = {
      PoincareSeries::point(), series({{0, 1}, {4, 1}}), series({{0, 1}, {7, 1}}), series({{0, 1}, {1, 3}}),
      exterior_algebra(2), series({{0, 1}, {8, 1}, {11, 1}})};
  for (const auto& x : samples) {
    for (const auto& y : samples) {
      const auto xy = kunneth(x, y);
      CHECK(xy == kunneth(y, x));
      CHECK(even_odd_totals(xy) == combine_totals(even_odd_totals(x), even_odd_totals(y)));
    }
    CHECK(kunneth(x, PoincareSeries::point()) == x);
  }
}

TEST_CASE("symmetric square against a basis count") {
  const std::vector<PoincareSeries> samples = {PoincareSeries::point(), series({{0, 1}, {4, 1}}),
                                               series({{0, 1}, {7, 1}}), series({{0, 1}, {1, 3}, {2, 2}}),
                                               exterior_algebra(3)};
  for (const auto& s : samples) {
    const auto sq = symmetric_square(s);
    for (int d = 0; d <= 2 * std::max(0, s.max_degree()); ++d) {
      CAPTURE(d);
      CHECK(sq.dim(d) == invariant_dim(s, d));
    }
  }
  // Q[x4]: invariants 1, x+x', x x'
  CHECK(symmetric_square(series({{0, 1}, {4, 1}})) == series({{0, 1}, {4, 1}, {8, 1}}));
  // odd class squares to zero under the sign
  CHECK(symmetric_square(series({{0, 1}, {7, 1}})) == series({{0, 1}, {7, 1}}));
}

TEST_CASE("expressions") {
  const auto expr = GroupExpr::product({GroupExpr::finite(), GroupExpr::free_group(2), GroupExpr::registry("AutF4")});
  CHECK(expr.to_string() == "finite x F2 x AutF4");
  CHECK(GroupExpr::symmetric_square(GroupExpr::registry("AutF4")).to_string() == "(AutF4)^2|xZ/2");
  CHECK(kind_of([] { return GroupExpr::free_group(-1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { return GroupExpr::registry(""); }) == ErrorKind::InvalidArgument);

  const Registry& reg = default_registry();
  CHECK(series_of(expr, reg) == series({{0, 1}, {1, 2}, {4, 1}, {5, 2}}));
  const auto result = evaluate(expr, reg);
  CHECK(result.citations.size() == 1);
  CHECK(series_of(GroupExpr::free_abelian(2), reg) == series({{0, 1}, {1, 2}, {2, 1}}));
}

TEST_CASE("unknown entries poison the expression") {
  const Registry& reg = default_registry();
  const auto blocked = GroupExpr::product({GroupExpr::free_group(1), GroupExpr::registry("F4SemidirectAutF4_Z2invariants")});
  const auto r = evaluate(blocked, reg);
  CHECK_FALSE(r.known());
  CHECK(r.blocker == "F4SemidirectAutF4_Z2invariants");
  CHECK(kind_of([&] { return series_of(blocked, reg); }) == ErrorKind::UnknownCohomology);
  CHECK(evaluate(GroupExpr::registry("NoSuchGroup"), reg).blocker == "NoSuchGroup");
}

TEST_CASE("registry contents") {
  const Registry& reg = default_registry();
  CHECK(reg.lookup("AutF4").series == series({{0, 1}, {4, 1}}));
  CHECK(reg.lookup("AutF5").series == series({{0, 1}, {7, 1}}));
  CHECK(reg.lookup("OutF7").series == series({{0, 1}, {8, 1}, {11, 1}}));
  CHECK(reg.lookup("OutF4").conventional_degrees);
  CHECK(reg.lookup("OutF6").conventional_degrees);
  CHECK(reg.lookup("F4SemidirectAutF4_Z2invariants").status == EntryStatus::Unknown);
  for (const auto& e : reg.entries()) {
    CHECK_FALSE(e.citation.empty());
    CHECK(e.series.has_value() == (e.status == EntryStatus::Known));
  }
  CHECK(kind_of([&] { return reg.lookup("Nope"); }) == ErrorKind::NoSuchEntry);
}

TEST_CASE("registry parse errors") {
  auto err = [](std::string_view text) { return kind_of([&] { return Registry::parse(text); }); };
  CHECK(err("not json") == ErrorKind::RegistryDataError);
  CHECK(err(R"({"entries": []})") == ErrorKind::RegistryDataError);
  CHECK(err(R"({"version": 1, "entries": [{"name": "A", "status": "maybe", "citation": "c"}]})") ==
        ErrorKind::RegistryDataError);
  CHECK(err(R"({"version": 1, "entries": [{"name": "A", "status": "known", "dims": [[2, 1]], "citation": "c"}]})") ==
        ErrorKind::RegistryDataError);
  CHECK(err(R"({"version": 1, "entries": [{"name": "A", "status": "known", "dims": [[0, 1], [0, 2]], "citation": "c"}]})") ==
        ErrorKind::RegistryDataError);
  CHECK(err(R"({"version": 1, "entries": [{"name": "A", "status": "unknown", "dims": [[0, 1]], "citation": "c"}]})") ==
        ErrorKind::RegistryDataError);
  CHECK(err(R"({"version": 1, "entries": [{"name": "A", "status": "unknown", "citation": "c"},
                                         {"name": "A", "status": "unknown", "citation": "d"}]})") ==
        ErrorKind::RegistryDataError);
  const auto ok = Registry::parse(R"({"version": 2, "entries": [{"name": "B", "status": "unknown", "citation": "c"},
                                                                {"name": "A", "status": "known", "dims": [[0, 1]], "citation": "c"}]})");
  CHECK(ok.version() == 2);
  CHECK(ok.entries().front().name == "A");
  CHECK(kind_of([] { return Registry::load("/nonexistent/registry.json"); }) == ErrorKind::RegistryDataError);
}
