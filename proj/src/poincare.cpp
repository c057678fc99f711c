#include "outfk/poincare.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "outfk/error.hpp"

#ifndef OUTFK_DEFAULT_DATA_DIR
#define OUTFK_DEFAULT_DATA_DIR "data"
#endif

namespace outfk {

PoincareSeries::PoincareSeries(const std::map<int, std::int64_t>& dims) {
  for (const auto& [degree, dim] : dims) {
    if (degree < 0 || dim < 0) {
      throw Error(ErrorKind::InvalidArgument, "Poincare series needs non-negative degrees and dimensions");
    }
    if (dim != 0) dims_[degree] = dim;
  }
}

PoincareSeries PoincareSeries::point() { return PoincareSeries(std::map<int, std::int64_t>{{0, 1}}); }

std::int64_t PoincareSeries::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

int PoincareSeries::max_degree() const { return dims_.empty() ? -1 : dims_.rbegin()->first; }

std::string PoincareSeries::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [degree, dim] : dims_) {
    if (!first) out += ", ";
    out += std::to_string(degree) + ":" + std::to_string(dim);
    first = false;
  }
  return out + "}";
}

PoincareSeries kunneth(const PoincareSeries& x, const PoincareSeries& y) {
  std::map<int, std::int64_t> out;
  for (const auto& [i, a] : x.dims()) {
    for (const auto& [j, b] : y.dims()) out[i + j] += a * b;
  }
  return PoincareSeries(out);
}

PoincareSeries symmetric_square(const PoincareSeries& s) {
  // dim of invariants = (trace(1) + trace(swap)) / 2 in each degree; the swap
  // only has trace on the diagonal i = j, with sign (-1)^(i*i).
  const PoincareSeries square = kunneth(s, s);
  std::map<int, std::int64_t> out;
  for (const auto& [n, total] : square.dims()) {
    std::int64_t trace = 0;
    if (n % 2 == 0) {
      const int half = n / 2;
      trace = (half % 2 == 0 ? 1 : -1) * s.dim(half);
    }
    out[n] = (total + trace) / 2;
  }
  return PoincareSeries(out);
}

PoincareSeries exterior_algebra(int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative rank");
  std::map<int, std::int64_t> dims;
  std::int64_t binom = 1;
  for (int i = 0; i <= r; ++i) {
    dims[i] = binom;
    binom = binom * (r - i) / (i + 1);
  }
  return PoincareSeries(dims);
}

EvenOdd even_odd_totals(const PoincareSeries& s) {
  EvenOdd totals;
  for (const auto& [degree, dim] : s.dims()) (degree % 2 == 0 ? totals.even : totals.odd) += dim;
  return totals;
}

EvenOdd combine_totals(EvenOdd x, EvenOdd y) {
  return {x.even * y.even + x.odd * y.odd, x.even * y.odd + x.odd * y.even};
}

GroupExpr::GroupExpr(Node node, int rank, std::string name, std::vector<GroupExpr> factors)
    : node_(node), rank_(rank), name_(std::move(name)), factors_(std::move(factors)) {}

GroupExpr GroupExpr::finite() { return GroupExpr(Node::Finite, 0, {}, {}); }

GroupExpr GroupExpr::free_group(int rank) {
  if (rank < 0) throw Error(ErrorKind::InvalidArgument, "negative free group rank");
  return GroupExpr(Node::FreeGroup, rank, {}, {});
}

GroupExpr GroupExpr::free_abelian(int rank) {
  if (rank < 0) throw Error(ErrorKind::InvalidArgument, "negative free abelian rank");
  return GroupExpr(Node::FreeAbelian, rank, {}, {});
}

GroupExpr GroupExpr::registry(std::string name) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "empty registry name");
  return GroupExpr(Node::Registry, 0, std::move(name), {});
}

GroupExpr GroupExpr::product(std::vector<GroupExpr> factors) {
  return GroupExpr(Node::Product, 0, {}, std::move(factors));
}

GroupExpr GroupExpr::symmetric_square(GroupExpr base) {
  return GroupExpr(Node::SymmetricSquare, 0, {}, {std::move(base)});
}

std::string GroupExpr::to_string() const {
  switch (node_) {
    case Node::Finite: return "finite";
    case Node::FreeGroup: return "F" + std::to_string(rank_);
    case Node::FreeAbelian: return "Z^" + std::to_string(rank_);
    case Node::Registry: return name_;
    case Node::SymmetricSquare: return "(" + factors_.front().to_string() + ")^2|xZ/2";
    case Node::Product: {
      if (factors_.empty()) return "finite";
      std::string out;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += " x ";
        out += factors_[i].to_string();
      }
      return out;
    }
  }
  return "?";
}

Registry Registry::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::RegistryDataError, std::string("registry is not valid JSON: ") + e.what());
  }
  Registry registry;
  try {
    registry.version_ = doc.at("version").get<int>();
    for (const auto& item : doc.at("entries")) {
      RegistryEntry entry;
      entry.name = item.at("name").get<std::string>();
      entry.citation = item.at("citation").get<std::string>();
      const auto status = item.at("status").get<std::string>();
      if (status == "known") {
        entry.status = EntryStatus::Known;
        std::map<int, std::int64_t> dims;
        for (const auto& pair : item.at("dims")) {
          const int degree = pair.at(0).get<int>();
          if (dims.count(degree)) {
            throw Error(ErrorKind::RegistryDataError, "duplicate degree in entry " + entry.name);
          }
          dims[degree] = pair.at(1).get<std::int64_t>();
        }
        entry.series = PoincareSeries(dims);
        if (entry.series->dim(0) < 1) {
          throw Error(ErrorKind::RegistryDataError, "entry " + entry.name + " has no degree-0 class");
        }
      } else if (status == "unknown") {
        entry.status = EntryStatus::Unknown;
        if (item.contains("dims")) {
          throw Error(ErrorKind::RegistryDataError, "unknown entry " + entry.name + " carries dims");
        }
      } else {
        throw Error(ErrorKind::RegistryDataError, "entry " + entry.name + " has status '" + status + "'");
      }
      entry.conventional_degrees = item.value("conventional_degrees", false);
      entry.note = item.value("note", std::string{});
      registry.entries_.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::RegistryDataError, std::string("malformed registry: ") + e.what());
  }
  std::sort(registry.entries_.begin(), registry.entries_.end(),
            [](const auto& x, const auto& y) { return x.name < y.name; });
  for (std::size_t i = 1; i < registry.entries_.size(); ++i) {
    if (registry.entries_[i].name == registry.entries_[i - 1].name) {
      throw Error(ErrorKind::RegistryDataError, "duplicate registry entry " + registry.entries_[i].name);
    }
  }
  return registry;
}

Registry Registry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::RegistryDataError, "cannot open registry file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

const RegistryEntry* Registry::find(std::string_view name) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), name,
                             [](const RegistryEntry& e, std::string_view n) { return e.name < n; });
  if (it == entries_.end() || it->name != name) return nullptr;
  return &*it;
}

const RegistryEntry& Registry::lookup(std::string_view name) const {
  if (const auto* entry = find(name)) return *entry;
  throw Error(ErrorKind::NoSuchEntry, "no registry entry named '" + std::string(name) + "'");
}

std::filesystem::path default_registry_path() {
  if (const char* env = std::getenv(kRegistryEnvVar); env && *env) return env;
  return std::filesystem::path(OUTFK_DEFAULT_DATA_DIR) / "registry.json";
}

const Registry& default_registry() {
  static const Registry registry = Registry::load(default_registry_path());
  return registry;
}

namespace {

void add_citation(std::vector<std::string>& citations, const std::string& c) {
  if (std::find(citations.begin(), citations.end(), c) == citations.end()) citations.push_back(c);
}

}  // namespace

SeriesResult evaluate(const GroupExpr& expr, const Registry& registry) {
  using Node = GroupExpr::Node;
  switch (expr.node()) {
    case Node::Finite: return {PoincareSeries::point(), {}, {}};
    case Node::FreeGroup: {
      std::map<int, std::int64_t> dims{{0, 1}, {1, expr.rank()}};
      return {PoincareSeries(dims), {}, {}};
    }
    case Node::FreeAbelian: return {exterior_algebra(expr.rank()), {}, {}};
    case Node::Registry: {
      const RegistryEntry* entry = registry.find(expr.name());
      if (entry == nullptr || entry->status == EntryStatus::Unknown) return {std::nullopt, expr.name(), {}};
      return {entry->series, {}, {entry->citation}};
    }
    case Node::SymmetricSquare: {
      SeriesResult base = evaluate(expr.factors().front(), registry);
      if (base.known()) base.series = symmetric_square(*base.series);
      return base;
    }
    case Node::Product: {
      SeriesResult result{PoincareSeries::point(), {}, {}};
      for (const auto& factor : expr.factors()) {
        SeriesResult part = evaluate(factor, registry);
        if (!part.known()) return {std::nullopt, part.blocker, {}};
        result.series = kunneth(*result.series, *part.series);
        for (const auto& c : part.citations) add_citation(result.citations, c);
      }
      return result;
    }
  }
  return {std::nullopt, "?", {}};
}

PoincareSeries series_of(const GroupExpr& expr, const Registry& registry) {
  SeriesResult result = evaluate(expr, registry);
  if (!result.known()) {
    throw Error(ErrorKind::UnknownCohomology,
                "cohomology of " + expr.to_string() + " blocked on '" + result.blocker + "'");
  }
  return *result.series;
}

}  // namespace outfk
