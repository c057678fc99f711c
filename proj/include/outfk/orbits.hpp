#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "outfk/modp.hpp"

namespace outfk {

/// A non-trivial map F_2 -> Z/p, recorded as the images (l, m) of the basis.
struct Vec2 {
  int l = 0;
  int m = 0;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

struct FixedPointReport {
  Mat2P matrix;
  std::int64_t count = 0;
  std::optional<std::vector<Vec2>> solutions;
};

/// Dimension over Z/p of ker(M - I).
int fixed_space_dimension(const Mat2P& m);

/// Counts non-zero v with Mv = v by enumeration and cross-checks against
/// p^dim ker(M - I) - 1.
FixedPointReport fixed_points(const Mat2P& m, bool list_solutions = false);

/// (1/|G|) sum_g |Fix(g)| on the non-zero vectors of (Z/p)^2, in exact
/// integers. Throws NonIntegralOrbitCount if the sum is not divisible.
std::int64_t burnside_orbit_count(const MatrixGroup& group);

/// Explicit orbit partition of the p^2 - 1 non-zero vectors. Each orbit is
/// sorted; orbits are ordered by their smallest vector.
std::vector<std::vector<Vec2>> enumerate_orbits(const MatrixGroup& group);

/// Closed forms for the number of orbits, including the p = 2, 3 values.
std::int64_t orbit_closed_form(StabiliserKind kind, int p);

struct OrbitReport {
  StabiliserKind kind;
  int p = 0;
  std::size_t group_order = 0;
  std::vector<std::pair<Mat2P, std::int64_t>> per_element_counts;
  std::int64_t orbit_count = 0;        // Burnside
  std::int64_t brute_force_count = 0;  // explicit partition
  std::int64_t closed_form = 0;
  bool match = false;
};

OrbitReport orbit_report(StabiliserKind kind, int p);

/// One row of the stabiliser tables: a word in the generators together with
/// the matrix of its action on (l, m). Because precomposition reverses the
/// order of composition, the word "tau sigma^k" acts as sigma^k * tau.
struct StabiliserTableRow {
  std::string word;
  Mat2P matrix;
};

std::vector<StabiliserTableRow> stabiliser_table_rows(StabiliserKind kind, int p);

/// Orbit counts of C<Phi> acting on the reduced spine of CV_2 for n = p + 1.
struct QuotientGraphSummary {
  int p = 0;
  std::int64_t rose_orbits = 0;
  std::int64_t theta_orbits = 0;
  std::int64_t vertex_orbits = 0;
  std::int64_t edge_orbits = 0;
  std::int64_t betti_one = 0;
};

QuotientGraphSummary quotient_summary(int p);

}  // namespace outfk
