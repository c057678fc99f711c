#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace outfk {

/// Finitely supported sequence of rational (co)homology dimensions.
/// Zero entries are never stored.
class PoincareSeries {
 public:
  PoincareSeries() = default;
  explicit PoincareSeries(const std::map<int, std::int64_t>& dims);

  /// {0: 1}, the series of a rationally acyclic group.
  static PoincareSeries point();

  std::int64_t dim(int degree) const;
  /// -1 for the zero series.
  int max_degree() const;
  bool empty() const noexcept { return dims_.empty(); }
  const std::map<int, std::int64_t>& dims() const noexcept { return dims_; }

  std::string to_string() const;

  friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;

 private:
  std::map<int, std::int64_t> dims_;
};

/// Coefficient-wise convolution.
PoincareSeries kunneth(const PoincareSeries& x, const PoincareSeries& y);

/// Invariants of the factor swap on H*(G) (x) H*(G), with the Koszul sign:
/// the rational cohomology of (G x G) |x Z/2.
PoincareSeries symmetric_square(const PoincareSeries& s);

/// Exterior algebra on r degree-one generators: the series of Z^r.
PoincareSeries exterior_algebra(int r);

struct EvenOdd {
  std::int64_t even = 0;
  std::int64_t odd = 0;
  friend bool operator==(const EvenOdd&, const EvenOdd&) = default;
};

EvenOdd even_odd_totals(const PoincareSeries& s);

/// Totals of a Kunneth product from the totals of its factors.
EvenOdd combine_totals(EvenOdd x, EvenOdd y);

/// Rational model of a group, built from pieces whose cohomology is either
/// elementary or curated in the registry.
class GroupExpr {
 public:
  enum class Node { Finite, FreeGroup, FreeAbelian, Registry, Product, SymmetricSquare };

  static GroupExpr finite();
  static GroupExpr free_group(int rank);
  static GroupExpr free_abelian(int rank);
  static GroupExpr registry(std::string name);
  static GroupExpr product(std::vector<GroupExpr> factors);
  /// (G x G) |x Z/2 with Z/2 swapping the factors.
  static GroupExpr symmetric_square(GroupExpr base);

  Node node() const noexcept { return node_; }
  int rank() const noexcept { return rank_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<GroupExpr>& factors() const noexcept { return factors_; }

  std::string to_string() const;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;

 private:
  GroupExpr(Node node, int rank, std::string name, std::vector<GroupExpr> factors);

  Node node_ = Node::Finite;
  int rank_ = 0;
  std::string name_;
  std::vector<GroupExpr> factors_;
};

enum class EntryStatus { Known, Unknown };

struct RegistryEntry {
  std::string name;
  EntryStatus status = EntryStatus::Unknown;
  std::optional<PoincareSeries> series;  // present iff Known
  std::string citation;
  bool conventional_degrees = false;  // only even/odd totals are established
  std::string note;
};

/// Curated table of known rational (co)homology, loaded from a data file.
class Registry {
 public:
  static Registry parse(std::string_view json_text);
  static Registry load(const std::filesystem::path& path);

  int version() const noexcept { return version_; }
  const std::vector<RegistryEntry>& entries() const noexcept { return entries_; }

  /// Throws NoSuchEntry.
  const RegistryEntry& lookup(std::string_view name) const;
  const RegistryEntry* find(std::string_view name) const;

 private:
  int version_ = 0;
  std::vector<RegistryEntry> entries_;  // sorted by name
};

/// Environment variable overriding the registry file location.
inline constexpr const char* kRegistryEnvVar = "OUTFK_REGISTRY";

std::filesystem::path default_registry_path();

/// Loaded once on first use.
const Registry& default_registry();

/// Series of an expression, or the first registry name that blocks it.
/// Registry names that are missing or Unknown poison the whole expression.
struct SeriesResult {
  std::optional<PoincareSeries> series;
  std::string blocker;
  std::vector<std::string> citations;  // of every Known entry used

  bool known() const noexcept { return series.has_value(); }
};

SeriesResult evaluate(const GroupExpr& expr, const Registry& registry);

/// Throws UnknownCohomology naming the blocking entry.
PoincareSeries series_of(const GroupExpr& expr, const Registry& registry);

}  // namespace outfk
