#include <doctest.h>

#include <set>

#include "outfk/error.hpp"
#include "outfk/modp.hpp"

using namespace outfk;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-3));
  CHECK_FALSE(is_prime(91));
  CHECK(kind_of([] { require_prime(4); }) == ErrorKind::NotPrime);
}

TEST_CASE("residues reduce into [0, p)") {
  CHECK(ModP(-1, 5).value() == 4);
  CHECK(ModP(12, 5).value() == 2);
  CHECK((ModP(3, 7) * ModP(5, 7)).value() == 1);
  CHECK((-ModP(0, 7)).value() == 0);
  CHECK(kind_of([] { return ModP(1, 6); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { return ModP(1, 5) + ModP(1, 7); }) == ErrorKind::ModulusMismatch);
}

TEST_CASE("matrices") {
  CHECK(kind_of([] { return Mat2P(1, 2, 2, 4, 5); }) == ErrorKind::SingularMatrix);
  CHECK(kind_of([] { return mat_mul(tau(5), tau(7)); }) == ErrorKind::ModulusMismatch);
  CHECK(kind_of([] { return mat_pow(tau(5), -1); }) == ErrorKind::InvalidArgument);
  const Mat2P m(2, 1, 1, 1, 7);
  CHECK(m.apply(1, 1) == std::array<int, 2>{3, 2});
  CHECK(m.to_string() == "[[2,1],[1,1]] mod 7");
  CHECK(Mat2P(-1, 0, 0, -1, 5) == sigma_e(5));
}

TEST_CASE("generator relations for every prime up to 31") {
  for (int p = 2; p <= 31; ++p) {
    if (!is_prime(p)) continue;
    CAPTURE(p);
    CHECK(mat_pow(tau(p), 2).is_identity());
    CHECK(mat_pow(sigma_r(p), 2) == sigma_e(p));
    CHECK(mat_pow(sigma_t(p), 3) == sigma_e(p));
    CHECK(mat_pow(sigma_t(p), 6).is_identity());
    CHECK(mat_pow(sigma_r(p), 4).is_identity());
    // tau conjugates the rotation to its inverse
    CHECK(mat_mul(mat_mul(tau(p), sigma_r(p)), tau(p)) == mat_pow(sigma_r(p), 3));
    CHECK(mat_mul(mat_mul(tau(p), sigma_t(p)), tau(p)) == mat_pow(sigma_t(p), 5));
  }
}

TEST_CASE("stabiliser orders") {
  for (int p : {5, 7, 11, 13, 97}) {
    CHECK(stabiliser_group(StabiliserKind::Edge, p).order() == 4);
    CHECK(stabiliser_group(StabiliserKind::RoseVertex, p).order() == 8);
    CHECK(stabiliser_group(StabiliserKind::ThetaVertex, p).order() == 12);
  }
  // -I = I and sigma_r = tau mod 2
  CHECK(stabiliser_group(StabiliserKind::Edge, 2).order() == 2);
  CHECK(stabiliser_group(StabiliserKind::RoseVertex, 2).order() == 2);
  CHECK(stabiliser_group(StabiliserKind::ThetaVertex, 2).order() == 6);
  CHECK(stabiliser_group(StabiliserKind::ThetaVertex, 3).order() == 12);
  CHECK(generic_stabiliser_order(StabiliserKind::ThetaVertex) == 12);
}

TEST_CASE("closure is a group and idempotent") {
  for (int p : {2, 3, 5, 7}) {
    for (auto kind : kAllKinds) {
      const auto g = stabiliser_group(kind, p);
      CHECK(g.elements().front().is_identity());
      std::set<Mat2P> seen(g.elements().begin(), g.elements().end());
      CHECK(seen.size() == g.order());
      for (const auto& x : g.elements()) {
        const int det = x.determinant();
        CHECK((det == 1 || det == p - 1));
        for (const auto& y : g.elements()) CHECK(g.contains(mat_mul(x, y)));
      }
      const auto again = group_closure(g.elements());
      CHECK(std::set<Mat2P>(again.elements().begin(), again.elements().end()) == seen);
    }
  }
}

TEST_CASE("closure errors") {
  const std::vector<Mat2P> none;
  CHECK(kind_of([&] { return group_closure(none); }) == ErrorKind::InvalidArgument);
  const std::vector<Mat2P> mixed{tau(5), tau(7)};
  CHECK(kind_of([&] { return group_closure(mixed); }) == ErrorKind::ModulusMismatch);
  const std::vector<Mat2P> big{Mat2P(1, 1, 0, 1, 7), Mat2P(1, 0, 1, 1, 7)};
  CHECK(kind_of([&] { return group_closure(big, 100); }) == ErrorKind::ClosureExceedsBound);
  CHECK(group_closure(big).order() == 336);  // SL_2(F_7)
}

TEST_CASE("kind names") {
  for (auto kind : kAllKinds) CHECK(parse_kind(kind_name(kind)) == kind);
  CHECK(kind_of([] { return parse_kind("square"); }) == ErrorKind::InvalidArgument);
}
