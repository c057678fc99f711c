#include "outfk/classes.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "outfk/error.hpp"
#include "outfk/orbits.hpp"

namespace outfk {

namespace {

constexpr const char* kThetaCitation =
    "Krstic-Vogtmann 1993: C<theta_st> = Z/p x Aut(F_s) x Aut(F_t), with a swap of the factors when s = t";
constexpr const char* kRoseCitation =
    "Krstic-Vogtmann 1993: C<R_p> = Z/p x (F_k |x Aut(F_k)) |x Z/2 with k = n - p fixed petals";
constexpr const char* kPhiCitation =
    "C<Phi> maps with finite kernel onto a finite-index subgroup of Out(F_2), namely the fundamental group of the "
    "quotient of the reduced spine of CV_2 by the subgroup fixing a non-trivial map F_2 -> Z/p";
constexpr const char* kDeltaCitation = "Glover-Henn 2010: the diagonal order-5 class of Out(F_8)";
constexpr const char* kAmalgamCitation = "Nielsen 1924: Out(F_2) = GL_2(Z) = D_4 *_{D_2} D_6";

GroupExpr aut_factor(int k) {
  if (k == 0) return GroupExpr::finite();
  return GroupExpr::registry("AutF" + std::to_string(k));
}

std::string pad2(int s, int t) { return std::to_string(s) + std::to_string(t); }

ConjClassDescriptor make(ClassKind kind, int p, int n, std::string label, std::string citation) {
  ConjClassDescriptor c;
  c.kind = kind;
  c.p = p;
  c.n = n;
  c.label = std::move(label);
  c.citation = std::move(citation);
  return c;
}

ConjClassDescriptor rose(int p, int n) {
  auto c = make(ClassKind::Rose, p, n, "R_" + std::to_string(p), kRoseCitation);
  c.l = p;
  c.centraliser = centraliser_of(c);
  return c;
}

ConjClassDescriptor theta(int p, int n, int s, int t) {
  auto c = make(ClassKind::Theta, p, n, "theta_" + pad2(s, t), kThetaCitation);
  c.s = s;
  c.t = t;
  if (s != t) c.note = "theta_" + pad2(t, s) + " is conjugate to it in Out(F_n) but not in Aut(F_n)";
  c.centraliser = centraliser_of(c);
  return c;
}

std::string lift_label(const Mat2P& m) {
  auto lift = [&m](int x) { return x > m.modulus() / 2 ? x - m.modulus() : x; };
  return "[[" + std::to_string(lift(m.a())) + "," + std::to_string(lift(m.b())) + "],[" + std::to_string(lift(m.c())) +
         "," + std::to_string(lift(m.d())) + "]]";
}

int element_order(const Mat2P& m) {
  Mat2P x = m;
  int order = 1;
  while (!x.is_identity()) {
    x = mat_mul(x, m);
    ++order;
  }
  return order;
}

bool is_power_of(int order, int prime) {
  if (order < prime) return false;
  while (order % prime == 0) order /= prime;
  return order == 1;
}

Mat2P inverse_in(const Mat2P& m) { return mat_pow(m, element_order(m) - 1); }

// Conjugacy classes of a finite matrix group, each sorted, listed by smallest member.
std::vector<std::vector<Mat2P>> conjugacy_classes(const MatrixGroup& g) {
  std::vector<std::vector<Mat2P>> classes;
  std::vector<char> done(g.order(), 0);
  const auto& elements = g.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (done[i]) continue;
    std::vector<Mat2P> cls;
    for (const auto& x : elements) {
      const Mat2P y = mat_mul(mat_mul(x, elements[i]), inverse_in(x));
      if (std::find(cls.begin(), cls.end(), y) == cls.end()) cls.push_back(y);
    }
    for (const auto& y : cls) {
      done[std::find(elements.begin(), elements.end(), y) - elements.begin()] = 1;
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

std::string_view class_kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::Rose: return "rose";
    case ClassKind::Theta: return "theta";
    case ClassKind::Phi: return "phi";
    case ClassKind::Delta: return "delta";
    case ClassKind::TwoPower: return "two-power";
  }
  return "?";
}

GroupExpr centraliser_of(const ConjClassDescriptor& c) {
  switch (c.kind) {
    case ClassKind::Rose: {
      const int k = c.n - c.l;
      if (k < 0) throw Error(ErrorKind::InvalidArgument, "rose class with more petals than the rank");
      if (k == 0) return GroupExpr::finite();
      if (k == 4) return GroupExpr::product({GroupExpr::finite(), GroupExpr::registry("F4SemidirectAutF4_Z2invariants")});
      return GroupExpr::product(
          {GroupExpr::finite(), GroupExpr::registry("RoseCentralizerCore_n=l+" + std::to_string(k))});
    }
    case ClassKind::Theta:
      if (c.s == c.t) return GroupExpr::product({GroupExpr::finite(), GroupExpr::symmetric_square(aut_factor(c.s))});
      return GroupExpr::product({GroupExpr::finite(), aut_factor(c.s), aut_factor(c.t)});
    case ClassKind::Phi:
      return GroupExpr::product({GroupExpr::finite(), GroupExpr::free_group(quotient_summary(c.p).betti_one)});
    case ClassKind::Delta: return GroupExpr::registry("DeltaCentralizer");
    case ClassKind::TwoPower:
      return c.label == "[[-1,0],[0,-1]]" ? GroupExpr::registry("OutF2") : GroupExpr::finite();
  }
  return GroupExpr::finite();
}

bool classes_supported(int p, int n) {
  if (!is_prime(p) || n < 2) return false;
  if (p == 2) return n == 2;
  return n <= 2 * p - 3 || (p == 5 && n == 8);
}

ClassList order_p_classes(int p, int n) {
  require_prime(p);
  if (n < 2) throw Error(ErrorKind::OutOfRange, "n = " + std::to_string(n) + " is below 2");
  ClassList list;
  list.p = p;
  list.n = n;
  list.complete = true;

  if (p == 2) {
    if (n != 2) {
      throw Error(ErrorKind::OutOfRange, "at p = 2 only n = 2 is covered; got n = " + std::to_string(n));
    }
    list.citation = kAmalgamCitation;
    for (const auto& a : amalgam_prime_power_classes(2)) {
      auto c = make(ClassKind::TwoPower, p, n, a.label, kAmalgamCitation);
      c.note = "order " + std::to_string(a.order);
      c.centraliser = centraliser_of(c);
      list.classes.push_back(std::move(c));
    }
    return list;
  }

  if (n < p - 1) {
    list.citation = "Out(F_n) has no elements of order p when n < p - 1";
    return list;
  }
  const bool special = p == 5 && n == 8;
  if (n > 2 * p - 3 && !special) {
    throw Error(ErrorKind::OutOfRange, "n = " + std::to_string(n) + " exceeds 2p - 3 = " + std::to_string(2 * p - 3) +
                                           " and is not a covered special case");
  }
  list.citation = special ? kDeltaCitation
                          : "order-p classes of Out(F_n) for p - 1 <= n <= 2p - 3: R_p, theta_st with s + t = n - p + 1, "
                            "and Phi when n = p + 1";
  if (n >= p) list.classes.push_back(rose(p, n));
  const int loops = n - p + 1;
  for (int s = 0; 2 * s <= loops; ++s) list.classes.push_back(theta(p, n, s, loops - s));
  if (n == p + 1) {
    auto c = make(ClassKind::Phi, p, n, "Phi", kPhiCitation);
    c.note = "no order-p lift to Aut(F_n)";
    c.centraliser = centraliser_of(c);
    list.classes.push_back(std::move(c));
  }
  if (special) {
    auto c = make(ClassKind::Delta, p, n, "Delta", kDeltaCitation);
    c.note = "diagonal element in Out(F_4) x Out(F_4)";
    c.centraliser = centraliser_of(c);
    list.classes.push_back(std::move(c));
  }
  return list;
}

std::vector<AmalgamClass> amalgam_prime_power_classes(int prime) {
  require_prime(prime, "prime");
  // Reduction mod 7 is faithful on the finite subgroups of GL_2(Z).
  constexpr int kModulus = 7;
  const MatrixGroup d4 = stabiliser_group(StabiliserKind::RoseVertex, kModulus);
  const MatrixGroup d6 = stabiliser_group(StabiliserKind::ThetaVertex, kModulus);
  const MatrixGroup d2 = stabiliser_group(StabiliserKind::Edge, kModulus);

  const std::vector<std::vector<Mat2P>> vertex_classes[2] = {conjugacy_classes(d4), conjugacy_classes(d6)};
  std::vector<std::pair<int, int>> nodes;
  for (int g = 0; g < 2; ++g) {
    for (int i = 0; i < static_cast<int>(vertex_classes[g].size()); ++i) {
      if (is_power_of(element_order(vertex_classes[g][i].front()), prime)) nodes.emplace_back(g, i);
    }
  }
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto node_of = [&](int g, const Mat2P& m) {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const auto& cls = vertex_classes[nodes[k].first][nodes[k].second];
      if (nodes[k].first == g && std::find(cls.begin(), cls.end(), m) != cls.end()) return static_cast<int>(k);
    }
    return -1;
  };
  for (const auto& e : d2.elements()) {
    if (!d4.contains(e) || !d6.contains(e)) {
      throw Error(ErrorKind::InvalidArgument, "edge group is not contained in both vertex groups");
    }
    const int x = node_of(0, e);
    const int y = node_of(1, e);
    if (x >= 0 && y >= 0) parent[find(x)] = find(y);
  }

  std::vector<AmalgamClass> out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (find(static_cast<int>(k)) != static_cast<int>(k)) continue;
    std::optional<Mat2P> smallest;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (find(static_cast<int>(j)) != static_cast<int>(k)) continue;
      const Mat2P& m = vertex_classes[nodes[j].first][nodes[j].second].front();
      if (!smallest || m < *smallest) smallest = m;
    }
    out.push_back({element_order(*smallest), *smallest, lift_label(*smallest)});
  }
  std::sort(out.begin(), out.end(), [](const AmalgamClass& x, const AmalgamClass& y) {
    return x.order != y.order ? x.order < y.order : x.representative < y.representative;
  });
  return out;
}

}  // namespace outfk
