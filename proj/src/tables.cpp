#include <algorithm>

#include "outfk/classes.hpp"
#include "outfk/error.hpp"
#include "outfk/tate.hpp"

namespace outfk {

std::string_view cell_status_name(CellStatus status) {
  switch (status) {
    case CellStatus::Known: return "known";
    case CellStatus::Unknown: return "unknown";
    case CellStatus::OutOfRange: return "out-of-range";
  }
  return "?";
}

const TableCell& TableDoc::cell(int n, int p) const {
  for (const auto& c : cells) {
    if (c.n == n && c.p == p) return c;
  }
  throw Error(ErrorKind::OutOfRange, "no cell (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

namespace {

void add_unique(std::vector<std::string>& list, const std::string& item) {
  if (!item.empty() && std::find(list.begin(), list.end(), item) == list.end()) list.push_back(item);
}

std::vector<std::string> citations_of(const TateKResult& r) {
  std::vector<std::string> out;
  for (const auto& c : r.contributions) {
    add_unique(out, c.class_citation);
    for (const auto& x : c.citations) add_unique(out, x);
  }
  return out;
}

TableCell out_of_range(int n, int p) {
  return {n, p, CellStatus::OutOfRange, Dimension::unknown("out-of-range", 0), Dimension::unknown("out-of-range", 0),
          {}};
}

}  // namespace

TableDoc emit_table(int which, const Registry& registry) {
  TableDoc doc;
  doc.which = which;
  if (which == 4) {
    doc.title = "p-adic Farrell-Tate K-theory of Out(F_n)";
    for (int n = 2; n <= 12; ++n) doc.ranks.push_back(n);
    doc.primes = {2, 3, 5, 7, 11};
  } else if (which == 5) {
    doc.title = "rationalised p-adic K-theory of Out(F_n)";
    for (int n = 2; n <= 7; ++n) doc.ranks.push_back(n);
    doc.primes = {2, 3, 5, 7};
  } else {
    throw Error(ErrorKind::InvalidArgument, "table must be 4 or 5, got " + std::to_string(which));
  }

  for (int n : doc.ranks) {
    for (int p : doc.primes) {
      if (!classes_supported(p, n)) {
        doc.cells.push_back(out_of_range(n, p));
        continue;
      }
      TableCell cell{n, p, CellStatus::Known, {}, {}, {}};
      if (which == 4) {
        const TateKResult r = tate_k(p, n, registry);
        cell.even = r.even;
        cell.odd = r.odd;
        cell.citations = citations_of(r);
      } else {
        const RationalKResult r = rational_k(p, n, registry);
        cell.even = r.even;
        cell.odd = r.odd;
        cell.citations = citations_of(r.tate);
        add_unique(cell.citations, r.group_citation);
      }
      if (!cell.even.known() || !cell.odd.known()) cell.status = CellStatus::Unknown;
      doc.cells.push_back(std::move(cell));
    }
  }

  for (const auto& cell : doc.cells) {
    if (cell.status != CellStatus::Unknown) continue;
    doc.footnotes.push_back("(n=" + std::to_string(cell.n) + ", p=" + std::to_string(cell.p) + "): even " +
                            std::to_string(cell.even.known_part) + " + H^ev, odd " +
                            std::to_string(cell.odd.known_part) + " + H^odd, where H^* is the positive-degree part of '" +
                            cell.even.blocker + "', not yet computed");
  }
  doc.footnotes.push_back("out-of-range cells are outside the ranks where the order-p classes are known");
  if (which == 5) {
    doc.footnotes.push_back(
        "(n=2, p=2): the full rational K-theory of Out(F_2) is Q + Q_2^4 + Q_3; only the per-prime p-adic "
        "dimensions are tabulated, and the Q summand from H^ev(Out(F_2); Q) is not shown");
    for (const auto& entry : registry.entries()) {
      if (entry.conventional_degrees) {
        doc.footnotes.push_back(entry.name + ": " + entry.note);
      }
    }
  }
  return doc;
}

}  // namespace outfk
