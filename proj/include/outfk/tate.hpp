#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "outfk/classes.hpp"
#include "outfk/poincare.hpp"

namespace outfk {

/// A Q_p-dimension, or Unknown with the registry entry that blocks it.
/// known_part counts everything that is determined, including the degree-0
/// class of every blocked centraliser.
struct Dimension {
  std::optional<std::int64_t> value;
  std::string blocker;
  std::int64_t known_part = 0;

  static Dimension of(std::int64_t v) { return {v, {}, v}; }
  static Dimension unknown(std::string blocker, std::int64_t known_part) {
    return {std::nullopt, std::move(blocker), known_part};
  }
  bool known() const noexcept { return value.has_value(); }
  /// "4", or "unknown(5+, F4SemidirectAutF4_Z2invariants)".
  std::string to_string() const;
  friend bool operator==(const Dimension&, const Dimension&) = default;
};

struct Contribution {
  std::string label;
  std::int64_t multiplicity = 1;  // number of classes sharing this centraliser
  std::string centraliser;        // GroupExpr::to_string()
  std::optional<PoincareSeries> series;
  std::string blocker;
  std::int64_t even = 0;  // per class; already multiplied into the totals
  std::int64_t odd = 0;
  std::string class_citation;
  std::vector<std::string> citations;  // registry entries used

  bool known() const noexcept { return series.has_value(); }
};

struct TateKResult {
  int p = 0;
  std::string group_id;
  Dimension even;
  Dimension odd;
  std::optional<bool> weak_duality;
  std::optional<std::int64_t> euler_char;
  std::vector<Contribution> contributions;
};

struct RationalKResult {
  int p = 0;
  int n = 0;
  Dimension even;
  Dimension odd;
  TateKResult tate;
  std::optional<EvenOdd> group_part;  // totals of H*(Out(F_n); Q)
  std::string group_citation;
};

/// One summand of the Chern character sum: `multiplicity` classes whose
/// centralisers all have the rational model `centraliser`.
struct ClassTerm {
  std::string label;
  std::int64_t multiplicity = 1;
  GroupExpr centraliser = GroupExpr::finite();
  std::string citation;
};

/// Sums the centraliser contributions. Series of degree above max_degree
/// are rejected as registry data errors.
TateKResult assemble(int p, std::string group_id, const std::vector<ClassTerm>& terms, const Registry& registry,
                     int max_degree);

/// Farrell-Tate K-theory of Out(F_n) at p. Throws OutOfRange where the
/// classes are not known.
TateKResult tate_k(int p, int n, const Registry& registry = default_registry());

/// Same, leaving out every class of a kind listed in `drop`.
TateKResult tate_k_filtered(int p, int n, const std::vector<ClassKind>& drop,
                            const Registry& registry = default_registry());

/// Rationalised p-adic K-theory: Tate part plus H*(Out(F_n); Q).
RationalKResult rational_k(int p, int n, const Registry& registry = default_registry());

/// Throws UnknownCohomology when the odd dimension is blocked.
bool weak_duality(int p, int n, const Registry& registry = default_registry());

std::pair<TateKResult, TateKResult> example_sl3();
TateKResult example_gl(int p, std::int64_t class_number);
TateKResult example_sp(int p, std::int64_t relative_class_number);
TateKResult example_mcg(int p);
TateKResult example_amalgam(int p);

/// Class numbers of Q(zeta_p), supplied as external data.
struct ClassNumbers {
  int p = 0;
  std::int64_t h = 0;
  std::int64_t h_minus = 0;
};

class ClassNumberTable {
 public:
  static ClassNumberTable parse(std::string_view json_text);
  static ClassNumberTable load(const std::filesystem::path& path);
  std::optional<ClassNumbers> find(int p) const;
  const std::vector<ClassNumbers>& entries() const noexcept { return entries_; }

 private:
  std::vector<ClassNumbers> entries_;
};

inline constexpr const char* kClassNumbersEnvVar = "OUTFK_CLASS_NUMBERS";
std::filesystem::path default_class_numbers_path();
const ClassNumberTable& default_class_numbers();

enum class CellStatus { Known, Unknown, OutOfRange };
std::string_view cell_status_name(CellStatus status);

struct TableCell {
  int n = 0;
  int p = 0;
  CellStatus status = CellStatus::Known;
  Dimension even;
  Dimension odd;
  std::vector<std::string> citations;
};

struct TableDoc {
  int which = 0;
  std::string title;
  std::vector<int> ranks;
  std::vector<int> primes;
  std::vector<TableCell> cells;  // ordered by (n, p)
  std::vector<std::string> footnotes;

  const TableCell& cell(int n, int p) const;
};

/// 4: Farrell-Tate K-theory of Out(F_n), n = 2..12, p in {2,3,5,7,11}.
/// 5: rationalised p-adic K-theory, n = 2..7, p in {2,3,5,7}.
TableDoc emit_table(int which, const Registry& registry = default_registry());

}  // namespace outfk
