#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hdgap/commands.hpp"

namespace {

struct RawFlags {
  std::string family;
  bool all = false;
  std::string ranks;
  std::string ks;
  std::string fit_ranks;
  std::string fit_ks;
  std::string format;
  bool decimal = false;
  int cap = 0;
  bool rows = false;
  std::string out;
  std::string config;
  std::string which;
};

void add_common(CLI::App* cmd, RawFlags& f, bool sweep) {
  cmd->add_option("--family", f.family, "Family key, display name, alias, or type letter A/B/C/D/BC");
  cmd->add_option("--rank,--ranks", f.ranks, "Rank or rank range a..b");
  cmd->add_option("--k,--ks", f.ks, "Parameter k or range a..b");
  cmd->add_option("--format", f.format, "Output format: json, csv or md");
  cmd->add_flag("--decimal", f.decimal, "Add approximate decimal columns next to exact rationals");
  cmd->add_option("--out", f.out, "Write the report to this path instead of stdout");
  cmd->add_option("--config", f.config, "JSON config file; command-line flags take precedence");
  if (sweep) {
    cmd->add_flag("--all", f.all, "Verify every catalog family");
    cmd->add_option("--fit-ranks", f.fit_ranks, "Rank range for polynomial fits");
    cmd->add_option("--fit-ks", f.fit_ks, "k range for polynomial fits");
    cmd->add_flag("--rows", f.rows, "Also emit one bound row per instance");
  }
}

hdgap::CommandOptions resolve_options(const CLI::App* cmd, const RawFlags& f) {
  hdgap::CommandOptions opt;
  if (!f.config.empty()) hdgap::apply_config(opt, f.config);
  if (!f.family.empty()) opt.family = f.family;
  opt.all = f.all;
  if (!f.ranks.empty()) opt.ranks = hdgap::parse_range(f.ranks);
  if (!f.ks.empty()) opt.ks = hdgap::parse_range(f.ks);
  if (!f.fit_ranks.empty()) opt.fit_ranks = hdgap::parse_range(f.fit_ranks);
  if (!f.fit_ks.empty()) opt.fit_ks = hdgap::parse_range(f.fit_ks);
  if (!f.format.empty()) opt.format = hdgap::parse_format(f.format);
  if (f.decimal) opt.decimal = true;
  if (cmd->get_option_no_throw("--cap") != nullptr && cmd->count("--cap") > 0) opt.cap = f.cap;
  opt.rows = f.rows;
  return opt;
}

void print_error(hdgap::ErrorKind kind, const std::string& message) {
  hdgap::Json err = hdgap::Json::object();
  err["error"] = {{"kind", std::string(hdgap::to_string(kind))}, {"message", message}};
  std::cerr << err.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root-system bounds for higher-rank symmetric spaces"};
  app.require_subcommand(1);
  RawFlags flags;

  auto* list = app.add_subcommand("list", "List the group catalog and exceptional stubs");
  list->add_option("--format", flags.format, "Output format: json, csv or md");
  list->add_flag("--decimal", flags.decimal, "Add approximate decimal columns");
  list->add_option("--out", flags.out, "Write the report to this path");
  list->add_option("--config", flags.config, "JSON config file");

  auto* table = app.add_subcommand("table", "Root data or bound tables");
  table->add_option("which", flags.which, "root-data or bounds")->required()->check(CLI::IsMember({"root-data", "bounds"}));
  add_common(table, flags, false);

  auto* bounds = app.add_subcommand("bounds", "Bound reports per group instance");
  add_common(bounds, flags, false);

  auto* verify = app.add_subcommand("verify", "Fit, certify and sweep the theorem inequality");
  add_common(verify, flags, true);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive strongly orthogonal system search");
  add_common(oracle, flags, false);
  oracle->add_option("--cap", flags.cap, "Largest rank for the exhaustive search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const CLI::App* cmd = app.get_subcommands().front();
    const hdgap::CommandOptions opt = resolve_options(cmd, flags);
    hdgap::CommandResult res;
    if (cmd == list) res = hdgap::run_list(opt);
    else if (cmd == table) res = flags.which == "root-data" ? hdgap::run_table_root_data(opt) : hdgap::run_bounds(opt, "table bounds");
    else if (cmd == bounds) res = hdgap::run_bounds(opt);
    else if (cmd == verify) res = hdgap::run_verify(opt);
    else res = hdgap::run_oracle(opt);

    const std::string text = hdgap::render(res.doc, opt.format);
    if (flags.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(flags.out, std::ios::binary);
      if (!out) {
        print_error(hdgap::ErrorKind::Domain, "cannot write '" + flags.out + "'");
        return 2;
      }
      out << text;
    }
    return res.exit_code;
  } catch (const hdgap::Error& e) {
    print_error(e.kind(), e.what());
    return hdgap::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    print_error(hdgap::ErrorKind::Invariant, e.what());
    return 3;
  }
}
