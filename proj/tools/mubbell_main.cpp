// mubbell: intermediate states of mutually unbiased quNit bases, the Bell
// functional built on them, and eavesdropping information curves, as
// reproducible CSV/JSON tables.
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 internal failure.

#include <mubbell/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

struct CliState {
  mubbell::RunConfig cfg;
  std::string out_path;
  std::string format = "csv";
  int dim = 0;
  std::string dims;
  CLI::App* sub = nullptr;
};

// "a..b", both ends inclusive
void parse_dims(const std::string& text, mubbell::RunConfig& cfg) {
  const std::size_t sep = text.find("..");
  if (sep == std::string::npos || sep == 0 || sep + 2 >= text.size())
    throw CLI::ValidationError("--dims", "expected a range of the form a..b");
  std::size_t lo_end = 0, hi_end = 0;
  try {
    cfg.dim_lo = std::stoi(text.substr(0, sep), &lo_end);
    cfg.dim_hi = std::stoi(text.substr(sep + 2), &hi_end);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--dims", "expected integers in a..b");
  }
  if (lo_end != sep || hi_end != text.size() - sep - 2)
    throw CLI::ValidationError("--dims", "expected integers in a..b");
}

void add_dim_options(CLI::App* sub, CliState& st, bool range_allowed, bool required) {
  auto* dim_opt = sub->add_option("--dim", st.dim, "dimension N of the quNit");
  if (range_allowed) {
    auto* dims_opt =
        sub->add_option("--dims", st.dims, "inclusive dimension range a..b");
    dim_opt->excludes(dims_opt);
    dims_opt->excludes(dim_opt);
    if (required) sub->require_option(1);
  } else if (required) {
    dim_opt->required();
  }
}

void add_output_options(CLI::App* sub, CliState& st) {
  sub->add_option("--format", st.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_str("csv");
  sub->add_option("--out", st.out_path, "write the table to this path instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  using Command = mubbell::RunConfig::Command;

  CLI::App app{"intermediate states of mutually unbiased quNit bases: "
               "Bell functional, eavesdropping curves, and robustness tables"};
  app.require_subcommand(1);

  struct SubSpec {
    Command command;
    const char* name;
    const char* help;
    bool range;     // accepts --dims
    bool needs_dim; // requires --dim/--dims (unless a default range is set)
  };
  const SubSpec specs[] = {
      {Command::bases, "bases", "intermediate-state family summary per dimension", true, true},
      {Command::bell, "bell", "quantum value and local bound of the Bell functional", true, true},
      {Command::lhv, "lhv", "local deterministic maximum, fast path and enumeration", true, true},
      {Command::curve, "curve", "crossing vs critical disturbance per dimension", true, false},
      {Command::noise, "noise", "uncolored and separable noise thresholds", true, true},
      {Command::efficiency, "efficiency", "detector efficiency threshold per dimension", true, true},
      {Command::info, "info", "information curves and the crossing point", false, true},
      {Command::simulate, "simulate", "Monte Carlo of intercept/resend eavesdropping", false, true},
      {Command::case3, "case3", "three-dimensional variants: real basis and basis measurements",
       false, false},
  };

  std::vector<CliState> states(std::size(specs));
  for (std::size_t i = 0; i < std::size(specs); ++i) {
    const SubSpec& spec = specs[i];
    CliState& st = states[i];
    st.cfg.command = spec.command;
    st.sub = app.add_subcommand(spec.name, spec.help);
    if (spec.command != Command::case3)
      add_dim_options(st.sub, st, spec.range, spec.needs_dim);
    if (spec.command == Command::simulate) {
      st.sub->add_option("--trials", st.cfg.trials, "number of Monte Carlo rounds")
          ->check(CLI::PositiveNumber);
      st.sub->add_option("--seed", st.cfg.seed, "random seed");
    }
    add_output_options(st.sub, st);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 2;
  }

  try {
    CliState* st = nullptr;
    for (auto& s : states)
      if (s.sub->parsed()) st = &s;
    if (st == nullptr) throw std::logic_error("no subcommand parsed");

    mubbell::RunConfig cfg = st->cfg;
    if (!st->dims.empty()) {
      parse_dims(st->dims, cfg);
    } else if (st->dim != 0) {
      cfg.dim_lo = cfg.dim_hi = st->dim;
    } else if (cfg.command == Command::curve) {
      cfg.dim_lo = 2;  // default range reproduces the disturbance comparison
      cfg.dim_hi = 25;
    }
    cfg.format = (st->format == "json") ? mubbell::RunConfig::Format::json
                                        : mubbell::RunConfig::Format::csv;

    const mubbell::Table table = mubbell::run_command(cfg);
    const std::string text = mubbell::render(table, cfg.format);
    if (st->out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(st->out_path, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot open output path " + st->out_path);
      out << text;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error[domain]: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error[domain]: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 4;
  }
}
