#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitdeg/asymptotics.hpp"
#include "orbitdeg/class_counting.hpp"
#include "orbitdeg/errors.hpp"
#include "orbitdeg/graph.hpp"
#include "orbitdeg/length_spectrum.hpp"
#include "orbitdeg/oracle.hpp"
#include "orbitdeg/walk_counting.hpp"

namespace orbitdeg::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kGridDigits = 15;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

enum class Quantity { classes, orbits, walks, mean_degeneracy, log10_mean_degeneracy, asymptotic_ratio };

struct QuantityName {
  Quantity quantity;
  const char* name;
};

constexpr QuantityName kQuantityNames[] = {
    {Quantity::classes, "classes"},
    {Quantity::orbits, "orbits"},
    {Quantity::walks, "walks"},
    {Quantity::mean_degeneracy, "mean_degeneracy"},
    {Quantity::log10_mean_degeneracy, "log10_mean_degeneracy"},
    {Quantity::asymptotic_ratio, "asymptotic_ratio"},
};

Quantity parse_quantity(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  for (const auto& q : kQuantityNames) {
    if (name == q.name) return q.quantity;
  }
  throw UsageError("unknown quantity '" + name + "'");
}

const char* quantity_name(Quantity q) {
  for (const auto& entry : kQuantityNames) {
    if (entry.quantity == q) return entry.name;
  }
  return "?";
}

struct IntRange {
  int lo = 0;
  int hi = 0;
};

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(std::string("invalid integer for ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

// "a" or "a:b", inclusive.
IntRange parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  IntRange r;
  if (colon == std::string::npos) {
    r.lo = r.hi = parse_int(text, what);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, colon), what);
    r.hi = parse_int(std::string_view(text).substr(colon + 1), what);
  }
  if (r.lo > r.hi) throw UsageError(std::string("empty range for ") + what + ": '" + text + "'");
  return r;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct GlobalOptions {
  std::string format;  // empty: per-command default
  std::uint64_t seed = 0;
  OracleCaps caps;

  Format resolve(Format fallback) const {
    if (format.empty()) return fallback;
    return format == "json" ? Format::json : Format::csv;
  }
};

struct CellValue {
  std::string exact;    // empty when the quantity has no exact form
  std::string decimal;
  bool extension = false;
};

// Evaluates one quantity. Throws UndefinedQuantityError / DomainError when
// the value does not exist at (n, V).
CellValue evaluate(Quantity q, int n, int V, const ClassCountTable& table, OrbitCountMode mode) {
  CellValue cell;
  switch (q) {
    case Quantity::classes: {
      const Integer c = table.classes(n, V);
      cell.exact = to_string(c);
      cell.decimal = to_decimal(Rational(c), kGridDigits);
      break;
    }
    case Quantity::walks: {
      const Integer w = closed_walks_complete(n, V);
      cell.exact = to_string(w);
      cell.decimal = to_decimal(Rational(w), kGridDigits);
      break;
    }
    case Quantity::orbits: {
      if (mode == OrbitCountMode::naive) {
        const Rational p = naive_orbit_count(n, V);
        cell.exact = to_string(p);
        cell.decimal = to_decimal(p, kGridDigits);
      } else {
        const OrbitCount p = cyclic_orbit_count(n, V);
        cell.exact = to_string(p.count);
        cell.decimal = to_decimal(Rational(p.count), kGridDigits);
        cell.extension = p.extension;
      }
      break;
    }
    case Quantity::mean_degeneracy: {
      const Rational d = mean_degeneracy(n, V, table, mode);
      cell.exact = to_string(d, true);
      cell.decimal = to_decimal(d, kGridDigits);
      cell.extension = mode == OrbitCountMode::exact && !is_prime(n);
      break;
    }
    case Quantity::log10_mean_degeneracy: {
      const Rational d = mean_degeneracy(n, V, table, mode);
      cell.decimal = to_decimal(Real(log10(to_real(d))), kGridDigits);
      cell.extension = mode == OrbitCountMode::exact && !is_prime(n);
      break;
    }
    case Quantity::asymptotic_ratio: {
      const AsymptoticPoint p = asymptotic_point(n, V, table);
      cell.decimal = to_decimal(p.ratio, kGridDigits);
      break;
    }
  }
  return cell;
}

int table_top(int n_max, const std::vector<Quantity>& quantities) {
  const bool needs_pair =
      std::find(quantities.begin(), quantities.end(), Quantity::asymptotic_ratio) != quantities.end();
  return needs_pair ? n_max + 1 : n_max;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out << ',';
    out << fields[i];
  }
  out << '\n';
}

// ---------------------------------------------------------------- count

struct CountArgs {
  std::string quantity;
  int n = 0;
  int V = 0;
  bool naive = false;
};

int cmd_count(const CountArgs& args, const GlobalOptions& global, std::ostream& out) {
  const Quantity q = parse_quantity(args.quantity);
  if (args.n < 1 || args.V < 1) throw UsageError("count needs --n >= 1 and --V >= 1");
  const OrbitCountMode mode = args.naive ? OrbitCountMode::naive : OrbitCountMode::exact;
  const int top = std::max(1, table_top(args.n, {q}));
  const ClassCountTable table = ClassCountTable::build(top, std::min(args.V, top));
  const CellValue cell = evaluate(q, args.n, args.V, table, mode);
  if (global.resolve(Format::csv) == Format::json) {
    json row;
    row["quantity"] = quantity_name(q);
    row["n"] = args.n;
    row["V"] = args.V;
    row["exact"] = cell.exact.empty() ? json(nullptr) : json(cell.exact);
    row["decimal"] = cell.decimal;
    row["extension"] = cell.extension;
    out << row.dump() << '\n';
  } else {
    out << "quantity,n,V,exact,decimal,extension\n";
    write_csv_row(out, {quantity_name(q), std::to_string(args.n), std::to_string(args.V), cell.exact,
                        cell.decimal, cell.extension ? "true" : "false"});
  }
  return kExitOk;
}

// ---------------------------------------------------------------- grid

struct GridArgs {
  std::string n_range;
  std::string v_range;
  std::string quantities = "classes,orbits,mean_degeneracy";
  bool naive = false;
};

int cmd_grid(const GridArgs& args, const GlobalOptions& global, std::ostream& out) {
  const IntRange nr = parse_range(args.n_range, "--n");
  const IntRange vr = parse_range(args.v_range, "--V");
  if (nr.lo < 2 || vr.lo < 2) throw UsageError("grid ranges need n >= 2 and V >= 2");
  std::vector<Quantity> quantities;
  for (const auto& name : split_list(args.quantities)) quantities.push_back(parse_quantity(name));
  if (quantities.empty()) throw UsageError("grid needs at least one quantity");
  const OrbitCountMode mode = args.naive ? OrbitCountMode::naive : OrbitCountMode::exact;

  const int top = table_top(nr.hi, quantities);
  const ClassCountTable table = ClassCountTable::build(top, std::min(vr.hi, top));

  struct Cell {
    int n;
    int V;
    std::vector<std::optional<CellValue>> values;
    bool extension = false;
  };
  std::vector<Cell> cells;
  for (int n = nr.lo; n <= nr.hi; ++n) {
    for (int V = vr.lo; V <= vr.hi; ++V) cells.push_back({n, V, {}, false});
  }

  // Cells are independent reads of the shared table; rows are written in
  // (n, V) order afterwards regardless of completion order.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      Cell& c = cells[i];
      for (Quantity q : quantities) {
        try {
          CellValue value = evaluate(q, c.n, c.V, table, mode);
          c.extension = c.extension || value.extension;
          c.values.emplace_back(std::move(value));
        } catch (const UndefinedQuantityError&) {
          c.values.emplace_back(std::nullopt);
        } catch (const DomainError&) {
          c.values.emplace_back(std::nullopt);
        }
      }
    }
  };
  const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1U, 16U);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
  }

  // Integer quantities print exactly; the rest as 15-digit decimals.
  auto field = [](Quantity q, const std::optional<CellValue>& v) -> std::string {
    if (!v) return "";
    if (q == Quantity::classes || q == Quantity::walks) return v->exact;
    if (q == Quantity::orbits && v->exact.find('/') == std::string::npos) return v->exact;
    return v->decimal;
  };

  if (global.resolve(Format::csv) == Format::json) {
    for (const Cell& c : cells) {
      json row;
      row["n"] = c.n;
      row["V"] = c.V;
      for (std::size_t k = 0; k < quantities.size(); ++k) {
        const std::string f = field(quantities[k], c.values[k]);
        row[quantity_name(quantities[k])] = f.empty() ? json(nullptr) : json(f);
      }
      row["extension"] = c.extension;
      out << row.dump() << '\n';
    }
  } else {
    std::vector<std::string> header{"n", "V"};
    for (Quantity q : quantities) header.emplace_back(quantity_name(q));
    header.emplace_back("extension");
    write_csv_row(out, header);
    for (const Cell& c : cells) {
      std::vector<std::string> row{std::to_string(c.n), std::to_string(c.V)};
      for (std::size_t k = 0; k < quantities.size(); ++k) row.push_back(field(quantities[k], c.values[k]));
      row.emplace_back(c.extension ? "true" : "false");
      write_csv_row(out, row);
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- fig3

struct Fig3Args {
  std::string v_list = "3,4";
  int n_min = 2;
  int n_max = 0;
  int n_step = 2;
};

int cmd_fig3(const Fig3Args& args, const GlobalOptions& global, std::ostream& out) {
  if (args.n_min < 2 || args.n_min % 2 != 0) throw UsageError("fig3 needs an even --n-min >= 2");
  if (args.n_step < 2 || args.n_step % 2 != 0) throw UsageError("fig3 needs an even --n-step");
  if (args.n_max < args.n_min) throw UsageError("fig3 needs --n-max >= --n-min");
  std::vector<int> vs;
  for (const auto& item : split_list(args.v_list)) vs.push_back(parse_int(item, "--V"));
  if (vs.empty()) throw UsageError("fig3 needs at least one V");
  for (int V : vs) {
    if (V < 3) throw UsageError("fig3 needs V >= 3");
  }
  std::vector<int> ns;
  for (int n = args.n_min; n <= args.n_max; n += args.n_step) ns.push_back(n);

  const bool as_json = global.resolve(Format::csv) == Format::json;
  if (!as_json) out << "V,n,exact_pair,asymptotic_pair,ratio\n";
  for (int V : vs) {
    for (const AsymptoticPoint& p : asymptotic_points(V, ns)) {
      const std::string asym = to_decimal(p.asymptotic_pair, kGridDigits);
      const std::string ratio = to_decimal(p.ratio, kGridDigits);
      if (as_json) {
        json row;
        row["V"] = p.V;
        row["n"] = p.n;
        row["exact_pair"] = to_string(p.exact_pair);
        row["asymptotic_pair"] = asym;
        row["ratio"] = ratio;
        out << row.dump() << '\n';
      } else {
        write_csv_row(out, {std::to_string(p.V), std::to_string(p.n), to_string(p.exact_pair), asym, ratio});
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string n_range;
  int V = 0;
};

json code_json(const ClassCode& code) {
  json arr = json::array();
  for (const auto& b : code.entries()) arr.push_back({b.i, b.j, b.q});
  return arr;
}

std::string code_text(const ClassCode& code) {
  std::string s;
  for (const auto& b : code.entries()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(b.i) + '-' + std::to_string(b.j) + ':' + std::to_string(b.q);
  }
  return s;
}

std::string orbit_text(const OrbitRep& orbit) {
  std::string s;
  for (Vertex v : orbit.vertices) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

int cmd_enumerate(const EnumerateArgs& args, const GlobalOptions& global, std::ostream& out) {
  const IntRange nr = parse_range(args.n_range, "--n");
  if (nr.lo < 2 || args.V < 2) throw UsageError("enumerate needs n >= 2 and V >= 2");
  const GraphSpec g = GraphSpec::complete(args.V);
  const bool as_json = global.resolve(Format::json) == Format::json;
  // Enumerate everything first so a cap error produces no partial output.
  std::vector<std::map<ClassCode, ClassMembers>> periods;
  for (int n = nr.lo; n <= nr.hi; ++n) periods.push_back(group_by_class(enumerate_orbits(g, n, global.caps)));
  if (!as_json) out << "period,code,degeneracy,example_orbit\n";
  for (int n = nr.lo; n <= nr.hi; ++n) {
    for (const auto& [code, members] : periods[static_cast<std::size_t>(n - nr.lo)]) {
      if (as_json) {
        json row;
        row["period"] = n;
        row["code"] = code_json(code);
        row["degeneracy"] = members.degeneracy;
        row["example_orbit"] = members.example.vertices;
        out << row.dump() << '\n';
      } else {
        write_csv_row(out, {std::to_string(n), code_text(code), std::to_string(members.degeneracy),
                            orbit_text(members.example)});
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  int V = 0;
  int n_max = 0;
  std::string scheme = "sqrt-primes";
};

int cmd_spectrum(const SpectrumArgs& args, const GlobalOptions& global, std::ostream& out) {
  if (args.V < 2 || args.n_max < 2) throw UsageError("spectrum needs --V >= 2 and --n-max >= 2");
  const LengthScheme scheme = parse_length_scheme(args.scheme);
  const GraphSpec g = GraphSpec::complete(args.V);
  const auto entries = build_spectrum(g, args.n_max, default_lengths(args.V, scheme, global.seed), global.caps);
  if (global.resolve(Format::json) == Format::json) {
    write_spectrum_jsonl(out, entries);
  } else {
    write_spectrum_csv(out, entries);
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degeneracy statistics of periodic orbits on complete metric graphs", "orbitdeg"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format (default: csv for tables, json for listings)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", global.seed, "Seed for random length schemes");
  app.add_option("--n-cap", global.caps.n_cap, "Largest orbit length the enumeration oracle accepts");
  app.add_option("--v-cap", global.caps.v_cap, "Largest vertex count the enumeration oracle accepts");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Single exact value");
  count_cmd->add_option("--quantity", count.quantity,
                        "classes | orbits | walks | mean-degeneracy | log10-mean-degeneracy | asymptotic-ratio")
      ->required();
  count_cmd->add_option("--n", count.n, "Orbit length (number of bonds)")->required();
  count_cmd->add_option("--V", count.V, "Number of vertices of K_V")->required();
  count_cmd->add_flag("--naive-orbits", count.naive, "Use N(n,V)/n as the orbit count for every n");

  GridArgs grid;
  auto* grid_cmd = app.add_subcommand("grid", "Table over an (n, V) range");
  grid_cmd->add_option("--n", grid.n_range, "Inclusive range a:b or single value")->required();
  grid_cmd->add_option("--V", grid.v_range, "Inclusive range a:b or single value")->required();
  grid_cmd->add_option("--quantities", grid.quantities, "Comma-separated quantities");
  grid_cmd->add_flag("--naive-orbits", grid.naive, "Use N(n,V)/n as the orbit count for every n");

  Fig3Args fig3;
  auto* fig3_cmd = app.add_subcommand("fig3", "Exact vs asymptotic class-count pairs");
  fig3_cmd->add_option("--V", fig3.v_list, "Comma-separated vertex counts (>= 3)");
  fig3_cmd->add_option("--n-max", fig3.n_max, "Largest even n")->required();
  fig3_cmd->add_option("--n-min", fig3.n_min, "Smallest even n");
  fig3_cmd->add_option("--n-step", fig3.n_step, "Even step between rows");

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Brute-force class listing");
  enumerate_cmd->add_option("--n", enumerate.n_range, "Period or inclusive range a:b")->required();
  enumerate_cmd->add_option("--V", enumerate.V, "Number of vertices of K_V")->required();

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Degenerate length spectrum");
  spectrum_cmd->add_option("--V", spectrum.V, "Number of vertices of K_V")->required();
  spectrum_cmd->add_option("--n-max", spectrum.n_max, "Largest period")->required();
  spectrum_cmd->add_option("--scheme", spectrum.scheme, "sqrt-primes | uniform-random")
      ->check(CLI::IsMember({"sqrt-primes", "uniform-random"}));

  // CLI11 consumes arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "orbitdeg: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*count_cmd) return cmd_count(count, global, out);
    if (*grid_cmd) return cmd_grid(grid, global, out);
    if (*fig3_cmd) return cmd_fig3(fig3, global, out);
    if (*enumerate_cmd) return cmd_enumerate(enumerate, global, out);
    if (*spectrum_cmd) return cmd_spectrum(spectrum, global, out);
  } catch (const UsageError& e) {
    err << "orbitdeg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UndefinedQuantityError& e) {
    err << "orbitdeg: " << e.what() << '\n';
    return kExitUndefined;
  } catch (const SizeCapError& e) {
    err << "orbitdeg: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const DomainError& e) {
    err << "orbitdeg: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace orbitdeg::cli
