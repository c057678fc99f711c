#include "outfk/tate.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "outfk/error.hpp"
#include "outfk/modp.hpp"

#ifndef OUTFK_DEFAULT_DATA_DIR
#define OUTFK_DEFAULT_DATA_DIR "data"
#endif

namespace outfk {

std::string Dimension::to_string() const {
  if (known()) return std::to_string(*value);
  return "unknown(" + std::to_string(known_part) + "+, " + blocker + ")";
}

namespace {

const Registry& empty_registry() {
  static const Registry registry = Registry::parse(R"({"version": 1, "entries": []})");
  return registry;
}

std::int64_t checked_power_of_two(int exponent) {
  if (exponent < 0 || exponent > 62) throw Error(ErrorKind::InvalidArgument, "exponent out of range");
  return std::int64_t{1} << exponent;
}

void require_at_least(int p, int bound, const char* what) {
  require_prime(p);
  if (p < bound) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs p >= " + std::to_string(bound));
  }
}

}  // namespace

TateKResult assemble(int p, std::string group_id, const std::vector<ClassTerm>& terms, const Registry& registry,
                     int max_degree) {
  TateKResult result;
  result.p = p;
  result.group_id = std::move(group_id);
  std::int64_t even = 0;
  std::int64_t odd = 0;
  std::string blocker;
  for (const auto& term : terms) {
    Contribution c;
    c.label = term.label;
    c.multiplicity = term.multiplicity;
    c.centraliser = term.centraliser.to_string();
    c.class_citation = term.citation;
    SeriesResult series = evaluate(term.centraliser, registry);
    c.citations = series.citations;
    if (series.known()) {
      if (series.series->max_degree() > max_degree) {
        throw Error(ErrorKind::RegistryDataError, "centraliser of " + term.label + " has cohomology in degree " +
                                                      std::to_string(series.series->max_degree()) + " above " +
                                                      std::to_string(max_degree));
      }
      const EvenOdd totals = even_odd_totals(*series.series);
      c.series = series.series;
      c.even = totals.even;
      c.odd = totals.odd;
    } else {
      // H^0 of any group is Q; everything above it is open.
      c.blocker = series.blocker;
      c.even = 1;
      if (blocker.empty()) blocker = series.blocker;
    }
    even += c.multiplicity * c.even;
    odd += c.multiplicity * c.odd;
    result.contributions.push_back(std::move(c));
  }
  if (blocker.empty()) {
    result.even = Dimension::of(even);
    result.odd = Dimension::of(odd);
    result.weak_duality = odd == 0;
    result.euler_char = even - odd;
  } else {
    result.even = Dimension::unknown(blocker, even);
    result.odd = Dimension::unknown(blocker, odd);
  }
  return result;
}

namespace {

std::vector<ClassTerm> terms_of(const ClassList& list, const std::vector<ClassKind>& drop) {
  std::vector<ClassTerm> terms;
  for (const auto& c : list.classes) {
    if (std::find(drop.begin(), drop.end(), c.kind) != drop.end()) continue;
    terms.push_back({c.label, 1, c.centraliser, c.citation});
  }
  return terms;
}

}  // namespace

TateKResult tate_k_filtered(int p, int n, const std::vector<ClassKind>& drop, const Registry& registry) {
  const ClassList list = order_p_classes(p, n);
  return assemble(p, "Out(F_" + std::to_string(n) + ")", terms_of(list, drop), registry, 2 * n);
}

TateKResult tate_k(int p, int n, const Registry& registry) { return tate_k_filtered(p, n, {}, registry); }

RationalKResult rational_k(int p, int n, const Registry& registry) {
  RationalKResult result;
  result.p = p;
  result.n = n;
  result.tate = tate_k(p, n, registry);
  const std::string name = "OutF" + std::to_string(n);
  const RegistryEntry* entry = registry.find(name);
  std::int64_t group_even = 1;
  std::int64_t group_odd = 0;
  std::string blocker = result.tate.even.blocker;
  if (entry != nullptr && entry->status == EntryStatus::Known) {
    result.group_part = even_odd_totals(*entry->series);
    result.group_citation = entry->citation;
    group_even = result.group_part->even;
    group_odd = result.group_part->odd;
  } else if (blocker.empty()) {
    blocker = name;
  }
  const std::int64_t even = result.tate.even.known_part + group_even;
  const std::int64_t odd = result.tate.odd.known_part + group_odd;
  if (blocker.empty()) {
    result.even = Dimension::of(even);
    result.odd = Dimension::of(odd);
  } else {
    result.even = Dimension::unknown(blocker, even);
    result.odd = Dimension::unknown(blocker, odd);
  }
  return result;
}

bool weak_duality(int p, int n, const Registry& registry) {
  const TateKResult result = tate_k(p, n, registry);
  if (!result.weak_duality) {
    throw Error(ErrorKind::UnknownCohomology, "weak duality at p = " + std::to_string(p) + ", n = " +
                                                  std::to_string(n) + " blocked on '" + result.odd.blocker + "'");
  }
  return *result.weak_duality;
}

std::pair<TateKResult, TateKResult> example_sl3() {
  const std::string citation =
      "Tezuka-Yagita 1992, Tahara 1971: classes of finite-order elements of SL_3(Z); Soule 1978, Adem 1992: "
      "centralisers of prime-power order elements are rationally acyclic";
  std::vector<ClassTerm> two = {{"order 2", 2, GroupExpr::finite(), citation},
                                {"order 4", 2, GroupExpr::finite(), citation}};
  std::vector<ClassTerm> three = {{"order 3", 2, GroupExpr::finite(), citation}};
  return {assemble(2, "SL_3(Z)", two, empty_registry(), 0), assemble(3, "SL_3(Z)", three, empty_registry(), 0)};
}

TateKResult example_gl(int p, std::int64_t class_number) {
  require_at_least(p, 5, "GL_{p-1}(Z)");
  if (class_number < 1) throw Error(ErrorKind::InvalidArgument, "class number must be positive");
  const int units = (p - 3) / 2;
  const std::vector<ClassTerm> terms = {
      {"order p", class_number,
       GroupExpr::product({GroupExpr::finite(), GroupExpr::free_abelian(units)}),
       "Latimer-MacDuffee 1933: order-p classes correspond to ideal classes of Z[zeta_p]; Ash 1989: the "
       "centraliser is the unit group Z/p x Z/2 x Z^((p-3)/2)"}};
  return assemble(p, "GL_" + std::to_string(p - 1) + "(Z)", terms, empty_registry(), units);
}

TateKResult example_sp(int p, std::int64_t relative_class_number) {
  require_at_least(p, 5, "Sp_{p-1}(Z)");
  if (relative_class_number < 1) throw Error(ErrorKind::InvalidArgument, "relative class number must be positive");
  const std::vector<ClassTerm> terms = {
      {"order p", checked_power_of_two((p - 1) / 2) * relative_class_number, GroupExpr::finite(),
       "Sjerve-Yang 1997: 2^((p-1)/2) h^- classes of order p, each with centraliser Z/p x Z/2"}};
  return assemble(p, "Sp_" + std::to_string(p - 1) + "(Z)", terms, empty_registry(), 0);
}

TateKResult example_mcg(int p) {
  require_at_least(p, 5, "MCG(Sigma_{(p-1)/2})");
  const std::int64_t numerator = static_cast<std::int64_t>(p + 1) * (p - 1);
  if (numerator % 6 != 0) throw Error(ErrorKind::NonIntegral, "(p+1)(p-1) is not divisible by 6");
  const std::vector<ClassTerm> terms = {
      {"order p", numerator / 6, GroupExpr::finite(),
       "Xia 1990: (p+1)(p-1)/6 classes of order p, all with finite centralisers"}};
  return assemble(p, "MCG(Sigma_" + std::to_string((p - 1) / 2) + ")", terms, empty_registry(), 0);
}

TateKResult example_amalgam(int p) {
  require_at_least(p, 3, "the amalgam");
  const std::vector<ClassTerm> terms = {
      {"order p", 1, GroupExpr::product({GroupExpr::finite(), GroupExpr::free_group(p - 2)}),
       "Bass-Serre theory: one class of order p, centraliser Z/p x F_(p-2)"}};
  return assemble(p, "(Z/p |x Z/(p-1)) *_{Z/p} (Z/p |x Z/(p-1))", terms, empty_registry(), 1);
}

ClassNumberTable ClassNumberTable::parse(std::string_view json_text) {
  ClassNumberTable table;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& item : doc.at("entries")) {
      ClassNumbers c{item.at("p").get<int>(), item.at("h").get<std::int64_t>(), item.at("h_minus").get<std::int64_t>()};
      if (!is_prime(c.p) || c.h < 1 || c.h_minus < 1 || c.h % c.h_minus != 0) {
        throw Error(ErrorKind::RegistryDataError, "bad class-number entry for p = " + std::to_string(c.p));
      }
      table.entries_.push_back(c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::RegistryDataError, std::string("malformed class-number table: ") + e.what());
  }
  std::sort(table.entries_.begin(), table.entries_.end(), [](const auto& x, const auto& y) { return x.p < y.p; });
  return table;
}

ClassNumberTable ClassNumberTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::RegistryDataError, "cannot open class-number table " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::optional<ClassNumbers> ClassNumberTable::find(int p) const {
  for (const auto& c : entries_) {
    if (c.p == p) return c;
  }
  return std::nullopt;
}

std::filesystem::path default_class_numbers_path() {
  if (const char* env = std::getenv(kClassNumbersEnvVar); env && *env) return env;
  return std::filesystem::path(OUTFK_DEFAULT_DATA_DIR) / "class_numbers.json";
}

const ClassNumberTable& default_class_numbers() {
  static const ClassNumberTable table = ClassNumberTable::load(default_class_numbers_path());
  return table;
}

}  // namespace outfk
