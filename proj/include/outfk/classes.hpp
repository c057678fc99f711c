#pragma once

#include <string>
#include <vector>

#include "outfk/modp.hpp"
#include "outfk/poincare.hpp"

namespace outfk {

enum class ClassKind { Rose, Theta, Phi, Delta, TwoPower };

std::string_view class_kind_name(ClassKind kind);

/// A conjugacy class of finite-order elements of Out(F_n).
struct ConjClassDescriptor {
  ClassKind kind = ClassKind::Rose;
  int p = 0;
  int n = 0;
  int l = 0;  // Rose: number of rotated petals
  int s = 0;  // Theta: loops at the two vertices, s <= t
  int t = 0;
  std::string label;
  GroupExpr centraliser = GroupExpr::finite();
  std::string citation;
  std::string note;
};

struct ClassList {
  int p = 0;
  int n = 0;
  std::vector<ConjClassDescriptor> classes;
  bool complete = false;
  std::string citation;
};

/// True iff order_p_classes(p, n) succeeds.
bool classes_supported(int p, int n);

/// Order-p classes of Out(F_n) for p >= 3 and n <= 2p - 3, plus (5, 8) and
/// the 2-power classes of Out(F_2) at p = 2. Below n = p - 1 there is no
/// p-torsion and the list is empty. Throws OutOfRange elsewhere.
ClassList order_p_classes(int p, int n);

/// Rational model of the centraliser of the class.
GroupExpr centraliser_of(const ConjClassDescriptor& c);

/// A conjugacy class of non-trivial elements of prime-power order in
/// GL_2(Z) = D_4 *_{D_2} D_6, found by fusing vertex-group classes along
/// the edge group.
struct AmalgamClass {
  int order = 0;
  Mat2P representative;
  std::string label;
};

/// Classes of elements whose order is a non-trivial power of `prime`.
std::vector<AmalgamClass> amalgam_prime_power_classes(int prime);

}  // namespace outfk
