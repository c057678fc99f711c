#include <doctest.h>

#include "outfk/classes.hpp"
#include "outfk/error.hpp"

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

std::vector<std::string> labels(const ClassList& list) {
  std::vector<std::string> out;
  for (const auto& c : list.classes) out.push_back(c.label);
  return out;
}

}  // namespace

TEST_CASE("class lists in the covered range") {
  CHECK(labels(order_p_classes(5, 4)) == std::vector<std::string>{"theta_00"});
  CHECK(labels(order_p_classes(5, 5)) == std::vector<std::string>{"R_5", "theta_01"});
  CHECK(labels(order_p_classes(5, 6)) == std::vector<std::string>{"R_5", "theta_02", "theta_11", "Phi"});
  CHECK(labels(order_p_classes(5, 7)) == std::vector<std::string>{"R_5", "theta_03", "theta_12"});
  CHECK(labels(order_p_classes(5, 8)) ==
        std::vector<std::string>{"R_5", "theta_04", "theta_13", "theta_22", "Delta"});
  CHECK(order_p_classes(7, 3).classes.empty());
  CHECK(order_p_classes(7, 3).complete);
}

TEST_CASE("class counts follow the enumeration rule") {
  for (int p : {3, 5, 7, 11, 13}) {
    for (int n = p - 1; n <= 2 * p - 3; ++n) {
      if (n < 2) continue;
      CAPTURE(p);
      CAPTURE(n);
      const auto list = order_p_classes(p, n);
      int thetas = 0;
      const int loops = n - p + 1;
      for (int s = 0; s <= loops; ++s) {
        if (s <= loops - s) ++thetas;
      }
      const std::size_t expected = (n >= p ? 1 : 0) + thetas + (n == p + 1 ? 1 : 0);
      CHECK(list.classes.size() == expected);
      for (const auto& c : list.classes) {
        CHECK(c.p == p);
        CHECK(c.n == n);
        CHECK_FALSE(c.citation.empty());
        CHECK(c.centraliser == centraliser_of(c));
        if (c.kind == ClassKind::Theta) {
          CHECK(c.s <= c.t);
          CHECK(c.s + c.t == loops);
        }
      }
    }
  }
}

TEST_CASE("centraliser models") {
  const auto list = order_p_classes(7, 11);
  CHECK(list.classes.front().centraliser.to_string() == "finite x F4SemidirectAutF4_Z2invariants");
  CHECK(order_p_classes(5, 8).classes.back().centraliser.to_string() == "DeltaCentralizer");
  CHECK(order_p_classes(11, 12).classes.back().centraliser.to_string() == "finite x F1");
  CHECK(order_p_classes(5, 8).classes[3].centraliser.to_string() == "finite x (AutF2)^2|xZ/2");
  CHECK(order_p_classes(5, 7).classes[1].centraliser.to_string() == "finite x finite x AutF3");
}

TEST_CASE("out of range") {
  CHECK(kind_of([] { return order_p_classes(5, 9); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { return order_p_classes(2, 3); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { return order_p_classes(7, 12); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { return order_p_classes(5, 1); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { return order_p_classes(6, 4); }) == ErrorKind::NotPrime);
  CHECK_FALSE(classes_supported(5, 9));
  CHECK(classes_supported(5, 8));
  CHECK(classes_supported(2, 2));
  CHECK_FALSE(classes_supported(4, 4));
}

TEST_CASE("prime-power classes of GL_2(Z)") {
  const auto two = amalgam_prime_power_classes(2);
  CHECK(two.size() == 4);
  int of_order_two = 0, of_order_four = 0;
  for (const auto& c : two) {
    if (c.order == 2) ++of_order_two;
    if (c.order == 4) ++of_order_four;
  }
  CHECK(of_order_two == 3);
  CHECK(of_order_four == 1);
  CHECK(amalgam_prime_power_classes(3).size() == 1);
  CHECK(amalgam_prime_power_classes(5).empty());
  const auto list = order_p_classes(2, 2);
  CHECK(list.classes.size() == 4);
  int full = 0;
  for (const auto& c : list.classes) {
    CHECK(c.kind == ClassKind::TwoPower);
    if (c.centraliser == GroupExpr::registry("OutF2")) ++full;
  }
  CHECK(full == 1);
}
