#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace outfk {

/// Trial-division primality test. Inputs in this library are small.
bool is_prime(std::int64_t n);

/// Throws Error(NotPrime) unless p is prime.
void require_prime(std::int64_t p, const char* what = "p");

/// A residue class modulo a prime p, stored in [0, p).
class ModP {
 public:
  ModP(std::int64_t value, int modulus);

  int value() const noexcept { return value_; }
  int modulus() const noexcept { return modulus_; }

  ModP operator+(ModP other) const;
  ModP operator-(ModP other) const;
  ModP operator*(ModP other) const;
  ModP operator-() const;

  friend bool operator==(const ModP&, const ModP&) = default;

 private:
  struct Unchecked {};
  ModP(int value, int modulus, Unchecked) : value_(value), modulus_(modulus) {}

  int value_;
  int modulus_;
};

/// Invertible 2x2 matrix over Z/p, row-major [[a, b], [c, d]]. Acts on the
/// column vector (l, m) by left multiplication.
class Mat2P {
 public:
  Mat2P(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int modulus);

  static Mat2P identity(int modulus);

  int a() const noexcept { return entries_[0]; }
  int b() const noexcept { return entries_[1]; }
  int c() const noexcept { return entries_[2]; }
  int d() const noexcept { return entries_[3]; }
  ModP entry(int row, int col) const;
  int modulus() const noexcept { return modulus_; }

  /// Determinant as a residue in [0, p).
  int determinant() const noexcept;
  bool is_identity() const noexcept;

  /// Image of (l, m), reduced mod p.
  std::array<int, 2> apply(int l, int m) const noexcept;

  std::string to_string() const;

  friend auto operator<=>(const Mat2P&, const Mat2P&) = default;
  friend bool operator==(const Mat2P&, const Mat2P&) = default;

 private:
  friend Mat2P mat_mul(const Mat2P& x, const Mat2P& y);
  struct Unchecked {};
  Mat2P(std::array<int, 4> entries, int modulus, Unchecked)
      : entries_(entries), modulus_(modulus) {}

  std::array<int, 4> entries_;
  int modulus_;
};

/// Matrix product x*y mod p. Throws ModulusMismatch.
Mat2P mat_mul(const Mat2P& x, const Mat2P& y);

/// x^k for k >= 0.
Mat2P mat_pow(const Mat2P& x, int k);

/// A finite group of 2x2 matrices given by generators and its full element
/// list. Elements are listed identity first, then in breadth-first order of
/// discovery by right multiplication with the generators.
class MatrixGroup {
 public:
  const std::vector<Mat2P>& generators() const noexcept { return generators_; }
  const std::vector<Mat2P>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  int modulus() const noexcept { return elements_.front().modulus(); }
  bool contains(const Mat2P& m) const;

 private:
  friend MatrixGroup group_closure(std::span<const Mat2P> generators, std::size_t bound);
  MatrixGroup(std::vector<Mat2P> generators, std::vector<Mat2P> elements)
      : generators_(std::move(generators)), elements_(std::move(elements)) {}

  std::vector<Mat2P> generators_;
  std::vector<Mat2P> elements_;
};

/// Smallest multiplicatively closed set containing the generators and the
/// identity. Throws ClosureExceedsBound once more than `bound` elements are
/// found, ModulusMismatch on mixed moduli, InvalidArgument on no generators.
MatrixGroup group_closure(std::span<const Mat2P> generators, std::size_t bound = 4096);

enum class StabiliserKind { Edge, RoseVertex, ThetaVertex };

std::string_view kind_name(StabiliserKind kind);
StabiliserKind parse_kind(std::string_view name);
inline constexpr std::array<StabiliserKind, 3> kAllKinds = {
    StabiliserKind::Edge, StabiliserKind::RoseVertex, StabiliserKind::ThetaVertex};

// Actions of the Out(F_2) stabiliser generators on Hom(F_2, Z/p) = (l, m),
// the images of the basis {a, b}.
Mat2P tau(int p);      // (l, m) -> (m, l), swaps a and b
Mat2P sigma_e(int p);  // (l, m) -> (-l, -m), inverts both generators
Mat2P sigma_r(int p);  // (l, m) -> (m, -l), a -> b -> a^-1
Mat2P sigma_t(int p);  // (l, m) -> (m, m - l), a -> b -> b a^-1

/// Edge -> <tau, sigma_e> (Klein four), RoseVertex -> <tau, sigma_r> (D4),
/// ThetaVertex -> <tau, sigma_t> (D6). For p = 2, 3 distinct words can
/// coincide as matrices and the order drops to a divisor of 4, 8, 12.
MatrixGroup stabiliser_group(StabiliserKind kind, int p);

/// Order of the group for primes p >= 5.
int generic_stabiliser_order(StabiliserKind kind);

}  // namespace outfk
