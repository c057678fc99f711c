#include "outfk/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "outfk/classes.hpp"
#include "outfk/equivariant_graph.hpp"
#include "outfk/error.hpp"
#include "outfk/modp.hpp"
#include "outfk/orbits.hpp"
#include "outfk/records.hpp"
#include "outfk/selftest.hpp"
#include "outfk/tate.hpp"

#ifndef OUTFK_DEFAULT_DATA_DIR
#define OUTFK_DEFAULT_DATA_DIR "data"
#endif

namespace outfk {

namespace {

struct Options {
  std::string format = "text";
  bool no_cite = false;
  int p = 0;
  int n = 0;
  std::string kind;
  bool list = false;
  int which = 0;
  std::string input;
  std::string demo;
  std::string name;
  std::optional<std::int64_t> class_number;
  int max_p = 31;
};

// Collects either text lines or records, depending on the chosen format.
class Output {
 public:
  Output(bool records, bool cite) : records_(records), cite_(cite) {}

  bool records() const { return records_; }
  bool cite() const { return cite_; }

  void line(const std::string& text) {
    if (!records_) text_ << text << '\n';
  }
  void record(Record r) {
    if (records_) records_list_.push_back(std::move(r));
  }
  void citations(const std::vector<std::string>& list) {
    if (!cite_ || list.empty()) return;
    line("citations:");
    for (const auto& c : list) line("  - " + c);
  }

  std::string str() const { return records_ ? render_records(records_list_) : text_.str(); }

 private:
  bool records_;
  bool cite_;
  std::ostringstream text_;
  std::vector<Record> records_list_;
};

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string fit(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

void add_unique(std::vector<std::string>& list, const std::string& item) {
  if (!item.empty() && std::find(list.begin(), list.end(), item) == list.end()) list.push_back(item);
}

std::string matrix_text(const Mat2P& m) {
  return "[[" + std::to_string(m.a()) + "," + std::to_string(m.b()) + "],[" + std::to_string(m.c()) + "," +
         std::to_string(m.d()) + "]]";
}

// ---- orbits ---------------------------------------------------------------

void emit_orbits(Output& out, StabiliserKind kind, int p, bool list) {
  const OrbitReport rep = orbit_report(kind, p);
  const std::string kname(kind_name(kind));
  out.line(kname + " stabiliser at p=" + std::to_string(p) + ": group of order " + std::to_string(rep.group_order));
  out.line("  " + pad("word", 18) + pad("matrix", 20) + "fixed");
  for (const auto& row : stabiliser_table_rows(kind, p)) {
    const auto fixed = fixed_points(row.matrix);
    out.line("  " + pad(row.word, 18) + pad(matrix_text(row.matrix), 20) + std::to_string(fixed.count));
    out.record({{"type", "stabiliser-row"},
                {"kind", kname},
                {"p", std::to_string(p)},
                {"word", row.word},
                {"matrix", matrix_text(row.matrix)},
                {"fixed", std::to_string(fixed.count)}});
  }
  out.line("orbits: " + std::to_string(rep.orbit_count) + " (burnside " + std::to_string(rep.orbit_count) +
           ", brute-force " + std::to_string(rep.brute_force_count) + ", closed-form " +
           std::to_string(rep.closed_form) + ")" + (rep.match ? "" : " MISMATCH"));
  out.record({{"type", "orbits"},
              {"kind", kname},
              {"p", std::to_string(p)},
              {"group_order", std::to_string(rep.group_order)},
              {"burnside", std::to_string(rep.orbit_count)},
              {"brute_force", std::to_string(rep.brute_force_count)},
              {"closed_form", std::to_string(rep.closed_form)},
              {"match", bool_text(rep.match)}});
  if (!list) return;
  const auto orbits = enumerate_orbits(stabiliser_group(kind, p));
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    std::vector<std::string> members;
    for (const auto& v : orbits[i]) members.push_back("(" + std::to_string(v.l) + "," + std::to_string(v.m) + ")");
    out.line("  orbit " + std::to_string(i + 1) + ": " + join(members, " "));
    out.record({{"type", "orbit"},
                {"kind", kname},
                {"p", std::to_string(p)},
                {"index", std::to_string(i + 1)},
                {"members", join(members, " ")}});
  }
}

int cmd_orbits(const Options& o, Output& out) {
  if (!o.kind.empty()) {
    emit_orbits(out, parse_kind(o.kind), o.p, o.list);
    return kExitOk;
  }
  for (auto kind : kAllKinds) {
    emit_orbits(out, kind, o.p, o.list);
    out.line("");
  }
  const auto q = quotient_summary(o.p);
  out.line("quotient graph: rose orbits " + std::to_string(q.rose_orbits) + ", theta orbits " +
           std::to_string(q.theta_orbits) + ", edge orbits " + std::to_string(q.edge_orbits) + ", betti_one " +
           std::to_string(q.betti_one));
  out.record({{"type", "quotient"},
              {"p", std::to_string(o.p)},
              {"rose_orbits", std::to_string(q.rose_orbits)},
              {"theta_orbits", std::to_string(q.theta_orbits)},
              {"vertex_orbits", std::to_string(q.vertex_orbits)},
              {"edge_orbits", std::to_string(q.edge_orbits)},
              {"betti_one", std::to_string(q.betti_one)}});
  return kExitOk;
}

// ---- classes --------------------------------------------------------------

int cmd_classes(const Options& o, Output& out) {
  const ClassList list = order_p_classes(o.p, o.n);
  const std::string what = o.p == 2 ? "2-power order" : "order-" + std::to_string(o.p);
  out.line(what + " classes of Out(F_" + std::to_string(o.n) + "): " + std::to_string(list.classes.size()) +
           (list.complete ? ", complete" : ", incomplete"));
  for (const auto& c : list.classes) {
    out.line("  " + pad(c.label, 18) + pad(std::string(class_kind_name(c.kind)), 10) + "centraliser " +
             c.centraliser.to_string());
    if (!c.note.empty()) out.line("    note: " + c.note);
    if (out.cite()) out.line("    cite: " + c.citation);
    Record r{{"type", "class"},
             {"p", std::to_string(o.p)},
             {"n", std::to_string(o.n)},
             {"label", c.label},
             {"kind", std::string(class_kind_name(c.kind))},
             {"centraliser", c.centraliser.to_string()},
             {"note", c.note}};
    if (out.cite()) r.emplace_back("citation", c.citation);
    out.record(std::move(r));
  }
  Record r{{"type", "class-list"},
           {"p", std::to_string(o.p)},
           {"n", std::to_string(o.n)},
           {"count", std::to_string(list.classes.size())},
           {"complete", bool_text(list.complete)}};
  if (out.cite()) r.emplace_back("citation", list.citation);
  out.record(std::move(r));
  if (out.cite()) out.line("source: " + list.citation);
  return kExitOk;
}

// ---- tate / rational / example ---------------------------------------------

std::vector<std::string> citations_of(const TateKResult& t) {
  std::vector<std::string> out;
  for (const auto& c : t.contributions) {
    add_unique(out, c.class_citation);
    for (const auto& x : c.citations) add_unique(out, x);
  }
  return out;
}

void emit_contributions(Output& out, const TateKResult& t) {
  for (const auto& c : t.contributions) {
    const std::string label = c.multiplicity == 1 ? c.label : c.label + " (x" + std::to_string(c.multiplicity) + ")";
    const std::string series = c.known() ? c.series->to_string() : "unknown(" + c.blocker + ")";
    const std::string dims = c.known() ? "even " + std::to_string(c.even) + ", odd " + std::to_string(c.odd)
                                       : "even 1+?, odd ?";
    out.line("  " + pad(label, 18) + pad(c.centraliser, 42) + pad(series, 14) + dims);
    out.record({{"type", "contribution"},
                {"group", t.group_id},
                {"p", std::to_string(t.p)},
                {"label", c.label},
                {"multiplicity", std::to_string(c.multiplicity)},
                {"centraliser", c.centraliser},
                {"series", series},
                {"even", c.known() ? std::to_string(c.even) : "unknown"},
                {"odd", c.known() ? std::to_string(c.odd) : "unknown"}});
  }
}

void emit_tate(Output& out, const TateKResult& t) {
  out.line("Farrell-Tate K-theory of " + t.group_id + " at p=" + std::to_string(t.p));
  emit_contributions(out, t);
  out.line("even: " + t.even.to_string() + ", odd: " + t.odd.to_string());
  out.line("weak duality: " + (t.weak_duality ? yes_no(*t.weak_duality) : "unknown"));
  out.line("euler characteristic: " + (t.euler_char ? std::to_string(*t.euler_char) : "unknown"));
  Record r{{"type", "tate"},
           {"group", t.group_id},
           {"p", std::to_string(t.p)},
           {"status", t.even.known() && t.odd.known() ? "known" : "unknown"},
           {"even", t.even.to_string()},
           {"odd", t.odd.to_string()},
           {"weak_duality", t.weak_duality ? bool_text(*t.weak_duality) : "unknown"},
           {"euler", t.euler_char ? std::to_string(*t.euler_char) : "unknown"},
           {"blocker", t.even.blocker}};
  if (out.cite()) r.emplace_back("citations", join(citations_of(t), "; "));
  out.record(std::move(r));
  out.citations(citations_of(t));
}

int cmd_tate(const Options& o, Output& out) {
  const TateKResult t = tate_k(o.p, o.n);
  emit_tate(out, t);
  return t.even.known() && t.odd.known() ? kExitOk : kExitUnknown;
}

int cmd_rational(const Options& o, Output& out) {
  const RationalKResult r = rational_k(o.p, o.n);
  out.line("rationalised K-theory of Out(F_" + std::to_string(o.n) + ") at p=" + std::to_string(o.p));
  emit_contributions(out, r.tate);
  out.line("Farrell-Tate part: even " + r.tate.even.to_string() + ", odd " + r.tate.odd.to_string());
  out.line("H*(Out(F_" + std::to_string(o.n) + "); Q): " +
           (r.group_part ? "even " + std::to_string(r.group_part->even) + ", odd " + std::to_string(r.group_part->odd)
                         : std::string("unknown")));
  out.line("even: " + r.even.to_string() + ", odd: " + r.odd.to_string());
  auto cites = citations_of(r.tate);
  add_unique(cites, r.group_citation);
  Record rec{{"type", "rational"},
             {"p", std::to_string(o.p)},
             {"n", std::to_string(o.n)},
             {"status", r.even.known() && r.odd.known() ? "known" : "unknown"},
             {"even", r.even.to_string()},
             {"odd", r.odd.to_string()},
             {"tate_even", r.tate.even.to_string()},
             {"tate_odd", r.tate.odd.to_string()},
             {"group_even", r.group_part ? std::to_string(r.group_part->even) : "unknown"},
             {"group_odd", r.group_part ? std::to_string(r.group_part->odd) : "unknown"},
             {"blocker", r.even.blocker}};
  if (out.cite()) rec.emplace_back("citations", join(cites, "; "));
  out.record(std::move(rec));
  out.citations(cites);
  return r.even.known() && r.odd.known() ? kExitOk : kExitUnknown;
}

int cmd_example(const Options& o, Output& out) {
  if (o.name == "sl3") {
    const auto [two, three] = example_sl3();
    emit_tate(out, two);
    out.line("");
    emit_tate(out, three);
    return kExitOk;
  }
  if (o.name == "amalgam" || o.name == "mcg" || o.name == "gl" || o.name == "sp") {
    if (o.p == 0) throw Error(ErrorKind::InvalidArgument, "example '" + o.name + "' needs --p");
  }
  if (o.name == "amalgam") {
    emit_tate(out, example_amalgam(o.p));
  } else if (o.name == "mcg") {
    emit_tate(out, example_mcg(o.p));
  } else {
    std::int64_t h = 0;
    std::string source = "--class-number";
    if (o.class_number) {
      h = *o.class_number;
    } else {
      const auto entry = default_class_numbers().find(o.p);
      if (!entry) {
        throw Error(ErrorKind::NoSuchEntry,
                    "no class number for p = " + std::to_string(o.p) + "; pass --class-number");
      }
      h = o.name == "gl" ? entry->h : entry->h_minus;
      source = "class-number table " + default_class_numbers_path().filename().string();
    }
    out.line(std::string(o.name == "gl" ? "class number h" : "relative class number h^-") + " = " +
             std::to_string(h) + " (from " + source + ")");
    emit_tate(out, o.name == "gl" ? example_gl(o.p, h) : example_sp(o.p, h));
  }
  return kExitOk;
}

// ---- table ----------------------------------------------------------------

std::string cell_text(const TableCell& c) {
  switch (c.status) {
    case CellStatus::OutOfRange: return ".";
    case CellStatus::Unknown:
      return std::to_string(c.even.known_part) + "+?/" + std::to_string(c.odd.known_part) + "+?";
    case CellStatus::Known: return std::to_string(*c.even.value) + "/" + std::to_string(*c.odd.value);
  }
  return "?";
}

int cmd_table(const Options& o, Output& out) {
  const TableDoc doc = emit_table(o.which);
  out.line("Table " + std::to_string(doc.which) + ": " + doc.title + " (cells are even/odd Q_p-dimensions)");
  std::vector<std::size_t> width(doc.primes.size(), 0);
  for (std::size_t j = 0; j < doc.primes.size(); ++j) {
    width[j] = 2 + std::to_string(doc.primes[j]).size();
    for (int n : doc.ranks) width[j] = std::max(width[j], cell_text(doc.cell(n, doc.primes[j])).size());
  }
  std::string header = " n";
  for (std::size_t j = 0; j < doc.primes.size(); ++j) header += " | " + fit("p=" + std::to_string(doc.primes[j]), width[j]);
  out.line(header);
  for (int n : doc.ranks) {
    std::string row = (n < 10 ? " " : "") + std::to_string(n);
    for (std::size_t j = 0; j < doc.primes.size(); ++j) row += " | " + fit(cell_text(doc.cell(n, doc.primes[j])), width[j]);
    out.line(row);
  }
  out.line("legend: '.' out of range; 'a+?/b+?' known part plus uncomputed cohomology");
  for (const auto& f : doc.footnotes) out.line("note: " + f);

  std::vector<std::string> all_cites;
  for (const auto& c : doc.cells) {
    Record r{{"type", "cell"},
             {"table", std::to_string(doc.which)},
             {"n", std::to_string(c.n)},
             {"p", std::to_string(c.p)},
             {"status", std::string(cell_status_name(c.status))},
             {"even", c.even.known() ? std::to_string(*c.even.value) : "unknown"},
             {"odd", c.odd.known() ? std::to_string(*c.odd.value) : "unknown"},
             {"known_even", std::to_string(c.even.known_part)},
             {"known_odd", std::to_string(c.odd.known_part)},
             {"blocker", c.even.blocker}};
    if (out.cite()) r.emplace_back("citations", join(c.citations, "; "));
    out.record(std::move(r));
    for (const auto& x : c.citations) add_unique(all_cites, x);
  }
  for (const auto& f : doc.footnotes) out.record({{"type", "footnote"}, {"table", std::to_string(doc.which)}, {"text", f}});
  out.citations(all_cites);
  return kExitOk;
}

// ---- normalize ------------------------------------------------------------

EquivariantGraph resolve_graph(const Options& o) {
  if (!o.demo.empty()) return demo_graph(o.demo);
  const std::filesystem::path path(o.input);
  if (std::filesystem::exists(path)) return load_graph(path);
  const auto shipped = std::filesystem::path(OUTFK_DEFAULT_DATA_DIR) / "graphs" / (o.input + ".json");
  if (std::filesystem::exists(shipped)) return load_graph(shipped);
  try {
    return demo_graph(o.input);
  } catch (const Error&) {
    throw Error(ErrorKind::ParseError, "no graph file or built-in graph named '" + o.input + "'");
  }
}

int cmd_normalize(const Options& o, Output& out) {
  const EquivariantGraph g = resolve_graph(o);
  const NormalizationResult r = normalize(g);
  std::string form = "NormalForm(p=" + std::to_string(r.form.p) + ", k=" + std::to_string(r.form.loops_per_vertex);
  if (r.form.cycle_step != 1) form += ", cycle step " + std::to_string(r.form.cycle_step);
  form += ")";
  out.line(form + ", rank " + std::to_string(r.form.rank) + ", " + std::to_string(r.moves.size()) + " moves");
  out.line("input: " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
           " edges, " + std::to_string(g.vertex_orbit_count()) + " vertex orbits, " +
           std::to_string(g.edge_orbit_count()) + " edge orbits");
  for (std::size_t i = 0; i < r.moves.size(); ++i) {
    out.line("  " + std::to_string(i + 1) + ". " + to_string(r.moves[i]));
    const auto& m = r.moves[i];
    Record rec{{"type", "move"},
               {"index", std::to_string(i + 1)},
               {"kind", m.kind == MoveKind::Collapse ? "collapse" : "slide"},
               {"edge", std::to_string(m.edge)}};
    if (m.kind == MoveKind::Slide) rec.emplace_back("along", std::to_string(m.along));
    out.record(std::move(rec));
  }
  out.line("path slides " + std::to_string(r.path_slides) + ", cycle slides " + std::to_string(r.cycle_slides) +
           ", most loop slides for one orbit " + std::to_string(r.max_loop_slides_per_orbit));
  out.record({{"type", "normal-form"},
              {"p", std::to_string(r.form.p)},
              {"k", std::to_string(r.form.loops_per_vertex)},
              {"rank", std::to_string(r.form.rank)},
              {"cycle_step", std::to_string(r.form.cycle_step)},
              {"moves", std::to_string(r.moves.size())},
              {"path_slides", std::to_string(r.path_slides)},
              {"cycle_slides", std::to_string(r.cycle_slides)},
              {"max_loop_slides", std::to_string(r.max_loop_slides_per_orbit)}});
  return kExitOk;
}

// ---- selftest -------------------------------------------------------------

int cmd_selftest(const Options& o, Output& out) {
  const SelftestReport report = run_selftest(o.max_p);
  int groups_ok = 0;
  for (const auto& c : report.checks) {
    const bool ok = c.failed == 0;
    groups_ok += ok;
    out.line(std::string(ok ? "PASS " : "FAIL ") + c.name + " (passed " + std::to_string(c.passed) + ", failed " +
             std::to_string(c.failed) + ")");
    for (const auto& f : c.failures) out.line("  - " + f);
    out.record({{"type", "selftest"},
                {"check", c.name},
                {"passed", std::to_string(c.passed)},
                {"failed", std::to_string(c.failed)}});
  }
  out.line("selftest: " + std::to_string(groups_ok) + "/" + std::to_string(report.checks.size()) +
           " check groups passed (max p " + std::to_string(o.max_p) + ")");
  return report.ok() ? kExitOk : kExitSelftestFailed;
}

CLI::Validator prime_validator() {
  return CLI::Validator(
      [](std::string& value) -> std::string {
        try {
          const long long x = std::stoll(value);
          if (!is_prime(x)) return value + " is not prime";
        } catch (const std::exception&) {
          return value + " is not an integer";
        }
        return {};
      },
      "PRIME", "Prime");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Farrell-Tate K-theory of Out(F_n): orbit counts, class lists, tables and graph normal forms", "outfk"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_flag("--no-cite", o.no_cite, "Suppress citations");

  auto* orbits = app.add_subcommand("orbits", "Fixed points and orbits of the stabiliser groups");
  orbits->add_option("--p", o.p, "Prime")->required()->check(prime_validator());
  orbits->add_option("--kind", o.kind, "edge, rose or theta")->check(CLI::IsMember({"edge", "rose", "theta"}));
  orbits->add_flag("--list", o.list, "List every orbit");

  auto* classes = app.add_subcommand("classes", "Conjugacy classes of order p in Out(F_n)");
  classes->add_option("--p", o.p, "Prime")->required()->check(prime_validator());
  classes->add_option("--n", o.n, "Rank")->required()->check(CLI::Range(2, 1000));

  auto* tate = app.add_subcommand("tate", "p-adic Farrell-Tate K-theory of Out(F_n)");
  tate->add_option("--p", o.p, "Prime")->required()->check(prime_validator());
  tate->add_option("--n", o.n, "Rank")->required()->check(CLI::Range(2, 1000));

  auto* rational = app.add_subcommand("rational", "Rationalised p-adic K-theory of Out(F_n)");
  rational->add_option("--p", o.p, "Prime")->required()->check(prime_validator());
  rational->add_option("--n", o.n, "Rank")->required()->check(CLI::Range(2, 1000));

  auto* table = app.add_subcommand("table", "Emit a full table");
  table->add_option("--which", o.which, "4 (Farrell-Tate) or 5 (rationalised)")
      ->required()
      ->check(CLI::IsMember({4, 5}));

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of an equivariant graph");
  auto* input = normalize_cmd->add_option("--input", o.input, "Graph file, or the name of a shipped graph");
  auto* demo = normalize_cmd->add_option("--demo", o.demo, "Built-in graph, e.g. two_orbit_p3");
  input->excludes(demo);
  normalize_cmd->require_option(1);

  auto* example = app.add_subcommand("example", "Example families");
  example->add_option("--name", o.name, "sl3, gl, sp, mcg or amalgam")
      ->required()
      ->check(CLI::IsMember({"sl3", "gl", "sp", "mcg", "amalgam"}));
  example->add_option("--p", o.p, "Prime")->check(prime_validator());
  example->add_option("--class-number", o.class_number, "Class number h (gl) or h^- (sp)")->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "Run the invariant sweeps");
  selftest->add_option("--max-p", o.max_p, "Largest prime to sweep")->check(CLI::Range(2, 1000));

  std::vector<const char*> argv{"outfk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    err << "run with --help for the list of options\n";
    return kExitUsage;
  }

  Output output(o.format == "records", !o.no_cite);
  int code = kExitOk;
  try {
    if (*orbits) code = cmd_orbits(o, output);
    else if (*classes) code = cmd_classes(o, output);
    else if (*tate) code = cmd_tate(o, output);
    else if (*rational) code = cmd_rational(o, output);
    else if (*table) code = cmd_table(o, output);
    else if (*normalize_cmd) code = cmd_normalize(o, output);
    else if (*example) code = cmd_example(o, output);
    else if (*selftest) code = cmd_selftest(o, output);
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitDomainError;
  }
  out << output.str();
  return code;
}

}  // namespace outfk
