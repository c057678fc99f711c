#include "outfk/orbits.hpp"

#include <algorithm>
#include <deque>

#include "outfk/error.hpp"

namespace outfk {

int fixed_space_dimension(const Mat2P& m) {
  const int p = m.modulus();
  const ModP a = m.entry(0, 0) - ModP(1, p);
  const ModP b = m.entry(0, 1);
  const ModP c = m.entry(1, 0);
  const ModP d = m.entry(1, 1) - ModP(1, p);
  const ModP zero(0, p);
  if (a == zero && b == zero && c == zero && d == zero) return 2;
  return (a * d - b * c) == zero ? 1 : 0;
}

FixedPointReport fixed_points(const Mat2P& m, bool list_solutions) {
  const int p = m.modulus();
  FixedPointReport report{m, 0, std::nullopt};
  std::vector<Vec2> solutions;
  for (int l = 0; l < p; ++l) {
    for (int mm = 0; mm < p; ++mm) {
      if (l == 0 && mm == 0) continue;
      const auto image = m.apply(l, mm);
      if (image[0] == l && image[1] == mm) {
        ++report.count;
        if (list_solutions) solutions.push_back({l, mm});
      }
    }
  }
  std::int64_t expected = 1;
  for (int i = 0; i < fixed_space_dimension(m); ++i) expected *= p;
  if (report.count != expected - 1) {
    throw Error(ErrorKind::InvalidArgument, "fixed point count disagrees with kernel dimension for " +
                                                m.to_string());
  }
  if (list_solutions) report.solutions = std::move(solutions);
  return report;
}

std::int64_t burnside_orbit_count(const MatrixGroup& group) {
  std::int64_t total = 0;
  for (const auto& g : group.elements()) total += fixed_points(g).count;
  const auto order = static_cast<std::int64_t>(group.order());
  if (total % order != 0) {
    throw Error(ErrorKind::NonIntegralOrbitCount,
                "fixed point sum " + std::to_string(total) + " not divisible by " + std::to_string(order));
  }
  return total / order;
}

std::vector<std::vector<Vec2>> enumerate_orbits(const MatrixGroup& group) {
  const int p = group.modulus();
  std::vector<char> visited(static_cast<std::size_t>(p) * p, 0);
  auto index = [p](int l, int m) { return static_cast<std::size_t>(l) * p + m; };

  std::vector<std::vector<Vec2>> orbits;
  for (int l = 0; l < p; ++l) {
    for (int m = 0; m < p; ++m) {
      if ((l == 0 && m == 0) || visited[index(l, m)]) continue;
      std::vector<Vec2> orbit;
      std::deque<Vec2> queue{{l, m}};
      visited[index(l, m)] = 1;
      while (!queue.empty()) {
        const Vec2 v = queue.front();
        queue.pop_front();
        orbit.push_back(v);
        for (const auto& g : group.elements()) {
          const auto w = g.apply(v.l, v.m);
          if (!visited[index(w[0], w[1])]) {
            visited[index(w[0], w[1])] = 1;
            queue.push_back({w[0], w[1]});
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
  }
  return orbits;
}

std::int64_t orbit_closed_form(StabiliserKind kind, int p) {
  require_prime(p);
  const std::int64_t q = p;
  switch (kind) {
    case StabiliserKind::Edge:
      if (p == 2) return 2;
      if (p == 3) return 3;
      return (q - 1) * (q + 3) / 4;
    case StabiliserKind::RoseVertex:
      if (p == 2 || p == 3) return 2;
      return (q - 1) * (q + 5) / 8;
    case StabiliserKind::ThetaVertex:
      if (p == 2) return 1;
      if (p == 3) return 2;
      return (q - 1) * (q + 7) / 12;
  }
  return 0;
}

OrbitReport orbit_report(StabiliserKind kind, int p) {
  const MatrixGroup group = stabiliser_group(kind, p);
  OrbitReport report{kind, p, group.order(), {}, 0, 0, 0, false};
  for (const auto& g : group.elements()) {
    report.per_element_counts.emplace_back(g, fixed_points(g).count);
  }
  report.orbit_count = burnside_orbit_count(group);
  report.brute_force_count = static_cast<std::int64_t>(enumerate_orbits(group).size());
  report.closed_form = orbit_closed_form(kind, p);
  report.match = report.orbit_count == report.closed_form &&
                 report.brute_force_count == report.orbit_count;
  return report;
}

std::vector<StabiliserTableRow> stabiliser_table_rows(StabiliserKind kind, int p) {
  require_prime(p);
  const Mat2P t = tau(p);
  std::vector<StabiliserTableRow> rows;
  auto rotations = [&](const Mat2P& sigma, const std::string& name, int order) {
    for (int k = 0; k < order; ++k) {
      std::string word = k == 0 ? "Id" : (k == 1 ? name : name + "^" + std::to_string(k));
      rows.push_back({word, mat_pow(sigma, k)});
    }
    for (int k = 0; k < order; ++k) {
      std::string word = k == 0 ? "tau" : (k == 1 ? "tau " + name : "tau " + name + "^" + std::to_string(k));
      rows.push_back({word, mat_mul(mat_pow(sigma, k), t)});
    }
  };
  switch (kind) {
    case StabiliserKind::Edge:
      // Table order: Id, sigma_e, tau, tau sigma_e.
      rows.push_back({"Id", Mat2P::identity(p)});
      rows.push_back({"sigma_e", sigma_e(p)});
      rows.push_back({"tau", t});
      rows.push_back({"tau sigma_e", mat_mul(sigma_e(p), t)});
      break;
    case StabiliserKind::RoseVertex: rotations(sigma_r(p), "sigma_r", 4); break;
    case StabiliserKind::ThetaVertex: rotations(sigma_t(p), "sigma_t", 6); break;
  }
  return rows;
}

QuotientGraphSummary quotient_summary(int p) {
  require_prime(p);
  QuotientGraphSummary s;
  s.p = p;
  s.rose_orbits = burnside_orbit_count(stabiliser_group(StabiliserKind::RoseVertex, p));
  s.theta_orbits = burnside_orbit_count(stabiliser_group(StabiliserKind::ThetaVertex, p));
  s.vertex_orbits = s.rose_orbits + s.theta_orbits;
  s.edge_orbits = burnside_orbit_count(stabiliser_group(StabiliserKind::Edge, p));
  // The spine of CV_2 is a tree and the quotient is connected.
  s.betti_one = s.edge_orbits - s.vertex_orbits + 1;
  if (s.betti_one < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative first Betti number for p = " + std::to_string(p));
  }
  return s;
}

}  // namespace outfk
