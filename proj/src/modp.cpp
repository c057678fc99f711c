#include "outfk/modp.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "outfk/error.hpp"

namespace outfk {

namespace {

int reduce(std::int64_t value, int modulus) {
  auto r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

void require_modulus(int modulus) {
  if (modulus < 2 || !is_prime(modulus)) {
    throw Error(ErrorKind::NotPrime, "modulus " + std::to_string(modulus) + " is not prime");
  }
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p, const char* what) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::NotPrime, std::string(what) + " = " + std::to_string(p) + " is not prime");
  }
}

ModP::ModP(std::int64_t value, int modulus) : value_(0), modulus_(modulus) {
  require_modulus(modulus);
  value_ = reduce(value, modulus);
}

ModP ModP::operator+(ModP other) const {
  if (other.modulus_ != modulus_) throw Error(ErrorKind::ModulusMismatch, "ModP addition");
  return {(value_ + other.value_) % modulus_, modulus_, Unchecked{}};
}

ModP ModP::operator-(ModP other) const {
  if (other.modulus_ != modulus_) throw Error(ErrorKind::ModulusMismatch, "ModP subtraction");
  return {(value_ - other.value_ + modulus_) % modulus_, modulus_, Unchecked{}};
}

ModP ModP::operator*(ModP other) const {
  if (other.modulus_ != modulus_) throw Error(ErrorKind::ModulusMismatch, "ModP product");
  return {static_cast<int>((static_cast<std::int64_t>(value_) * other.value_) % modulus_), modulus_,
          Unchecked{}};
}

ModP ModP::operator-() const { return {(modulus_ - value_) % modulus_, modulus_, Unchecked{}}; }

Mat2P::Mat2P(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int modulus)
    : entries_{}, modulus_(modulus) {
  require_modulus(modulus);
  entries_ = {reduce(a, modulus), reduce(b, modulus), reduce(c, modulus), reduce(d, modulus)};
  if (determinant() == 0) {
    throw Error(ErrorKind::SingularMatrix, "matrix " + to_string() + " is not invertible");
  }
}

Mat2P Mat2P::identity(int modulus) { return Mat2P(1, 0, 0, 1, modulus); }

ModP Mat2P::entry(int row, int col) const { return ModP(entries_[2 * row + col], modulus_); }

int Mat2P::determinant() const noexcept {
  const std::int64_t det = static_cast<std::int64_t>(entries_[0]) * entries_[3] -
                           static_cast<std::int64_t>(entries_[1]) * entries_[2];
  return reduce(det, modulus_);
}

bool Mat2P::is_identity() const noexcept {
  return entries_ == std::array<int, 4>{1 % modulus_, 0, 0, 1 % modulus_};
}

std::array<int, 2> Mat2P::apply(int l, int m) const noexcept {
  const std::int64_t x = static_cast<std::int64_t>(entries_[0]) * l + static_cast<std::int64_t>(entries_[1]) * m;
  const std::int64_t y = static_cast<std::int64_t>(entries_[2]) * l + static_cast<std::int64_t>(entries_[3]) * m;
  return {reduce(x, modulus_), reduce(y, modulus_)};
}

std::string Mat2P::to_string() const {
  return "[[" + std::to_string(entries_[0]) + "," + std::to_string(entries_[1]) + "],[" +
         std::to_string(entries_[2]) + "," + std::to_string(entries_[3]) + "]] mod " +
         std::to_string(modulus_);
}

Mat2P mat_mul(const Mat2P& x, const Mat2P& y) {
  if (x.modulus_ != y.modulus_) {
    throw Error(ErrorKind::ModulusMismatch, "mat_mul: moduli " + std::to_string(x.modulus_) + " and " +
                                                std::to_string(y.modulus_));
  }
  const int p = x.modulus_;
  const auto& u = x.entries_;
  const auto& v = y.entries_;
  auto dot = [p](std::int64_t r0, std::int64_t c0, std::int64_t r1, std::int64_t c1) {
    return reduce(r0 * c0 + r1 * c1, p);
  };
  return Mat2P({dot(u[0], v[0], u[1], v[2]), dot(u[0], v[1], u[1], v[3]),
                dot(u[2], v[0], u[3], v[2]), dot(u[2], v[1], u[3], v[3])},
               p, Mat2P::Unchecked{});
}

Mat2P mat_pow(const Mat2P& x, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "mat_pow: negative exponent");
  Mat2P result = Mat2P::identity(x.modulus());
  for (int i = 0; i < k; ++i) result = mat_mul(result, x);
  return result;
}

bool MatrixGroup::contains(const Mat2P& m) const {
  return std::find(elements_.begin(), elements_.end(), m) != elements_.end();
}

MatrixGroup group_closure(std::span<const Mat2P> generators, std::size_t bound) {
  if (generators.empty()) {
    throw Error(ErrorKind::InvalidArgument, "group_closure needs at least one generator");
  }
  const int p = generators.front().modulus();
  for (const auto& g : generators) {
    if (g.modulus() != p) throw Error(ErrorKind::ModulusMismatch, "group_closure: mixed moduli");
  }

  std::vector<Mat2P> elements{Mat2P::identity(p)};
  std::set<Mat2P> seen(elements.begin(), elements.end());
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const Mat2P current = elements[frontier.front()];
    frontier.pop_front();
    for (const auto& g : generators) {
      Mat2P next = mat_mul(current, g);
      if (seen.insert(next).second) {
        elements.push_back(next);
        if (elements.size() > bound) {
          throw Error(ErrorKind::ClosureExceedsBound,
                      "closure exceeds bound " + std::to_string(bound));
        }
        frontier.push_back(elements.size() - 1);
      }
    }
  }
  return MatrixGroup(std::vector<Mat2P>(generators.begin(), generators.end()), std::move(elements));
}

std::string_view kind_name(StabiliserKind kind) {
  switch (kind) {
    case StabiliserKind::Edge: return "edge";
    case StabiliserKind::RoseVertex: return "rose";
    case StabiliserKind::ThetaVertex: return "theta";
  }
  return "?";
}

StabiliserKind parse_kind(std::string_view name) {
  if (name == "edge") return StabiliserKind::Edge;
  if (name == "rose") return StabiliserKind::RoseVertex;
  if (name == "theta") return StabiliserKind::ThetaVertex;
  throw Error(ErrorKind::InvalidArgument, "unknown stabiliser kind '" + std::string(name) + "'");
}

Mat2P tau(int p) { return Mat2P(0, 1, 1, 0, p); }
Mat2P sigma_e(int p) { return Mat2P(-1, 0, 0, -1, p); }
Mat2P sigma_r(int p) { return Mat2P(0, 1, -1, 0, p); }
Mat2P sigma_t(int p) { return Mat2P(0, 1, -1, 1, p); }

MatrixGroup stabiliser_group(StabiliserKind kind, int p) {
  require_prime(p);
  std::vector<Mat2P> gens{tau(p)};
  switch (kind) {
    case StabiliserKind::Edge: gens.push_back(sigma_e(p)); break;
    case StabiliserKind::RoseVertex: gens.push_back(sigma_r(p)); break;
    case StabiliserKind::ThetaVertex: gens.push_back(sigma_t(p)); break;
  }
  return group_closure(gens, 64);
}

int generic_stabiliser_order(StabiliserKind kind) {
  switch (kind) {
    case StabiliserKind::Edge: return 4;
    case StabiliserKind::RoseVertex: return 8;
    case StabiliserKind::ThetaVertex: return 12;
  }
  return 0;
}

}  // namespace outfk
