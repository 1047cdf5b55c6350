#include "loops/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "loops/autotopy.hpp"
#include "loops/core.hpp"
#include "loops/enumerate.hpp"
#include "loops/isotopy.hpp"
#include "loops/props.hpp"
#include "loops/registry.hpp"

namespace loops::cli {

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

std::string witness_csv(const std::vector<int>& witness) {
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(witness[i]);
  }
  return out;
}

int cmd_check(const std::string& file, const std::string& props_csv,
              bool machine, std::ostream& out) {
  LoopTable table = read_table_file(file);
  PropertyReport report = check_properties(table, split_csv(props_csv));
  if (machine) {
    for (const auto& [name, check] : report.entries) {
      out << "property=" << name << " holds="
          << (check.holds ? "true" : "false");
      if (check.witness) out << " witness=" << witness_csv(*check.witness);
      out << "\n";
    }
  } else {
    out << file << ": order " << table.order() << "\n";
    for (const auto& [name, check] : report.entries) {
      out << "  " << std::left << std::setw(16) << name
          << (check.holds ? "true" : "false");
      if (check.witness) out << "  witness " << witness_csv(*check.witness);
      out << "\n";
    }
  }
  return report.all_hold() ? 0 : 1;
}

std::vector<LoopPredicate> build_filters(const std::vector<std::string>& names) {
  std::vector<LoopPredicate> filters;
  for (const std::string& name : names) {
    // Validate the name now so typos fail before any enumeration runs.
    if (std::find(known_property_names().begin(), known_property_names().end(),
                  name) == known_property_names().end()) {
      raise(Errc::unknown_property, "'" + name + "'");
    }
    filters.push_back(
        [name](const LoopTable& t) { return check_property(t, name).holds; });
  }
  return filters;
}

int cmd_enumerate(int n, const std::string& filter_csv, bool count_only,
                  const std::string& out_dir, bool machine, bool force,
                  std::ostream& out) {
  std::vector<LoopPredicate> filters = build_filters(split_csv(filter_csv));
  EnumerationOptions options;
  options.force_order = force;
  std::uint64_t written = 0;
  LoopSink sink;
  if (!out_dir.empty() && !count_only) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) raise(Errc::io_error, "cannot create '" + out_dir + "'");
    sink = [&](const LoopTable& t) {
      std::ostringstream name;
      name << std::setfill('0') << std::setw(6) << written << ".tbl";
      std::filesystem::path path = std::filesystem::path(out_dir) / name.str();
      std::ofstream file(path);
      if (!file) raise(Errc::io_error, "cannot write '" + path.string() + "'");
      file << write_table(t);
      ++written;
    };
  }
  std::uint64_t count = enumerate_loops(n, filters, sink, options).emitted;
  if (machine) {
    out << "count=" << count << "\n";
  } else {
    out << count << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& id, int max_order, bool machine,
               std::ostream& out) {
  std::vector<TheoremReport> reports;
  if (id == "all") {
    reports = verify_all(max_order);
  } else {
    reports.push_back(verify(id, max_order));
  }
  bool violated = false;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (machine) {
      if (i > 0) out << "\n";
      out << report_to_machine(reports[i]);
    } else {
      out << report_to_text(reports[i]);
    }
    violated = violated || reports[i].verdict == Verdict::violated;
  }
  return violated ? 1 : 0;
}

int cmd_autotopisms(const std::string& file, bool machine, std::ostream& out) {
  LoopTable table = read_table_file(file);
  std::vector<Triple> group = autotopism_group(table);
  if (machine) {
    out << "count=" << group.size() << "\n";
    for (const Triple& t : group) {
      out << "triple=" << to_string(t.u) << "|" << to_string(t.v) << "|"
          << to_string(t.w) << "\n";
    }
  } else {
    out << "autotopisms: " << group.size() << "\n";
    for (const Triple& t : group) out << to_string(t) << "\n";
  }
  return 0;
}

int cmd_isotope(const std::string& file, int a, int b, const std::string& u,
                const std::string& v, const std::string& w,
                const std::string& out_file, bool no_normalize,
                std::ostream& out) {
  LoopTable table = read_table_file(file);
  const bool triple_mode = !u.empty() || !v.empty() || !w.empty();
  QuasigroupTable square = [&] {
    if (triple_mode) {
      Triple t(parse_perm(u, table.order()), parse_perm(v, table.order()),
               parse_perm(w, table.order()));
      return isotope(table, t);
    }
    return principal_isotope(table, a, b);
  }();

  std::ostringstream text;
  text << "# " << square.origin() << "\n";
  std::optional<LoopTable> normalized;
  if (!no_normalize) normalized = normalize_to_loop(square);
  if (normalized) {
    std::optional<int> e = two_sided_identity(square);
    if (*e != 0) text << "# normalized: identity was " << *e << "\n";
    text << write_table(*normalized);
  } else {
    if (!no_normalize) text << "# no two-sided identity; left unnormalized\n";
    text << square.order() << "\n";
    for (int i = 0; i < square.order(); ++i) {
      for (int j = 0; j < square.order(); ++j) {
        if (j > 0) text << ' ';
        text << square.mul(i, j);
      }
      text << "\n";
    }
  }

  if (out_file.empty()) {
    out << text.str();
  } else {
    std::ofstream sink(out_file);
    if (!sink) raise(Errc::io_error, "cannot write '" + out_file + "'");
    sink << text.str();
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"toolkit for finite loops: property checks, exhaustive "
               "enumeration, theorem sweeps, autotopisms, isotopes"};
  app.require_subcommand(1);

  // check
  std::string check_file;
  std::string check_props;
  bool check_machine = false;
  CLI::App* check = app.add_subcommand("check", "evaluate properties of a table");
  check->add_option("file", check_file, "Cayley table file")->required();
  check->add_option("--props", check_props,
                    "comma list of properties (default: all)");
  check->add_flag("--machine", check_machine, "line-oriented key=value output");

  // enumerate
  int enum_n = 1;
  std::string enum_filter;
  bool enum_count_only = false;
  std::string enum_out;
  bool enum_machine = false;
  bool enum_force = false;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "generate all loops of one order");
  enumerate->add_option("order", enum_n, "loop order")->required();
  enumerate->add_option("--filter", enum_filter,
                        "comma list of properties every emitted table must "
                        "satisfy");
  CLI::Option* opt_count =
      enumerate->add_flag("--count", enum_count_only, "count only");
  CLI::Option* opt_out =
      enumerate->add_option("--out", enum_out, "directory for table files");
  opt_count->excludes(opt_out);
  enumerate->add_flag("--machine", enum_machine, "key=value output");
  enumerate->add_flag("--force-order", enum_force,
                      "override the enumeration order cap");

  // verify
  std::string verify_id;
  int verify_max_order = 5;
  bool verify_machine = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "sweep a registered statement (or 'all')");
  verify_cmd->add_option("id", verify_id, "statement id or 'all'")->required();
  verify_cmd->add_option("--max-order", verify_max_order,
                         "largest loop order to sweep (default 5)");
  verify_cmd->add_flag("--machine", verify_machine, "key=value output");

  // autotopisms
  std::string aut_file;
  bool aut_machine = false;
  CLI::App* autotopisms =
      app.add_subcommand("autotopisms", "list the autotopism group");
  autotopisms->add_option("file", aut_file, "Cayley table file")->required();
  autotopisms->add_flag("--machine", aut_machine, "key=value output");

  // isotope
  std::string iso_file;
  int iso_a = 0;
  int iso_b = 0;
  std::string iso_u;
  std::string iso_v;
  std::string iso_w;
  std::string iso_out;
  bool iso_no_normalize = false;
  CLI::App* iso = app.add_subcommand(
      "isotope", "construct an isotope (principal by default)");
  iso->add_option("file", iso_file, "Cayley table file")->required();
  CLI::Option* opt_a = iso->add_option("--a", iso_a, "right-division element");
  CLI::Option* opt_b = iso->add_option("--b", iso_b, "left-division element");
  CLI::Option* opt_u = iso->add_option("--u", iso_u, "first component, e.g. 2,3,0,1");
  CLI::Option* opt_v = iso->add_option("--v", iso_v, "second component");
  CLI::Option* opt_w = iso->add_option("--w", iso_w, "third component");
  opt_u->needs(opt_v);
  opt_u->needs(opt_w);
  opt_v->needs(opt_u);
  opt_w->needs(opt_u);
  opt_a->excludes(opt_u);
  opt_b->excludes(opt_u);
  iso->add_option("--out", iso_out, "output file (default stdout)");
  iso->add_flag("--no-normalize", iso_no_normalize,
                "emit the raw isotope even when it has an identity");

  std::vector<std::string> argv_strings;
  argv_strings.reserve(args.size() + 1);
  argv_strings.push_back("loops");
  argv_strings.insert(argv_strings.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_strings.size());
  for (std::string& s : argv_strings) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) {
      return cmd_check(check_file, check_props, check_machine, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(enum_n, enum_filter, enum_count_only, enum_out,
                           enum_machine, enum_force, out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_id, verify_max_order, verify_machine, out);
    }
    if (autotopisms->parsed()) {
      return cmd_autotopisms(aut_file, aut_machine, out);
    }
    if (iso->parsed()) {
      return cmd_isotope(iso_file, iso_a, iso_b, iso_u, iso_v, iso_w, iso_out,
                         iso_no_normalize, out);
    }
  } catch (const LoopError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace loops::cli
