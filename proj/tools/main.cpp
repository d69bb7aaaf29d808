// tamari_b: command-line access to quotients, projections, Tamari lattices,
// and the enumerative statistics.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tamari_b/tamari_b.hpp"

using namespace tamari_b;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kCap = 3 };

struct Config {
  std::size_t cap = kDefaultEnumerationCap;
  std::string threads = "1";
  std::string format = "text";
  bool debug_crosschecks = false;
  std::string batch;

  EnumerationOptions options() const {
    EnumerationOptions opt;
    opt.cap = cap;
    if (threads == "auto") {
      opt.threads = std::max(1u, std::thread::hardware_concurrency());
    } else {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(threads, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != threads.size() || v < 1) {
        throw ParseError("--threads must be a positive integer or 'auto'");
      }
      opt.threads = static_cast<unsigned>(v);
    }
    return opt;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string plain(SignedPermutation const& p) {
  auto const s = to_string(p);
  return s.substr(1, s.size() - 2);
}

std::vector<int> values(SignedPermutation const& p) {
  auto const r = p.right_part();
  return {r.begin(), r.end()};
}

std::string csv_quote(std::string const& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

void require_format(Config const& cfg, std::initializer_list<char const*> allowed) {
  for (auto const* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("format '" + cfg.format + "' is not available for this command");
}

std::size_t default_cap() {
  if (char const* env = std::getenv("TAMARI_B_CAP")) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(env, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0' || v < 1) {
      throw UsageError("TAMARI_B_CAP must be a positive integer");
    }
    return static_cast<std::size_t>(v);
  }
  return kDefaultEnumerationCap;
}

// Options of one command invocation.
struct Request {
  std::string alpha;
  bool aligned = false;
  std::string perm;
  std::string dir = "down";
  std::string check;
  std::string exported;
  std::string out;
  std::string route = "subposet";
  bool witness = false;
  int max_n = 6;
  int t = 1;
  bool type_d = false;
};

int cmd_enumerate(Config const& cfg, Request const& rq, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  auto const opt = cfg.options();
  auto const a = TypeBComposition::parse(rq.alpha);
  auto const elements = rq.aligned ? enumerate_aligned(a, opt) : enumerate_quotient(a, opt);
  if (cfg.format == "json") {
    json j{{"alpha", a.to_string()}, {"aligned", rq.aligned}, {"elements", json::array()}};
    for (auto const& p : elements) j["elements"].push_back(values(p));
    out << j.dump() << "\n";
  } else {
    for (auto const& p : elements) {
      out << (cfg.format == "csv" ? csv_quote(plain(p)) : plain(p)) << "\n";
    }
  }
  return kOk;
}

int cmd_project(Config const& cfg, Request const& rq, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  auto const a = TypeBComposition::parse(rq.alpha);
  auto const p = parse_signed_permutation(rq.perm);
  require_member(a, p);
  SignedPermutation r;
  if (rq.dir == "down") {
    r = project_down(a, p);
  } else if (rq.dir == "up") {
    r = project_up(a, p);
  } else {
    throw UsageError("--dir must be 'down' or 'up'");
  }
  if (cfg.format == "json") {
    out << json{{"alpha", a.to_string()},
                {"input", values(p)},
                {"direction", rq.dir},
                {"result", values(r)}}
               .dump()
        << "\n";
  } else {
    out << (cfg.format == "csv" ? csv_quote(plain(r)) : plain(r)) << "\n";
  }
  return kOk;
}

std::vector<std::string> split_names(std::string const& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_output(std::string const& path, std::string const& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

int cmd_lattice(Config const& cfg, Request const& rq, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  auto const opt = cfg.options();
  auto const a = TypeBComposition::parse(rq.alpha);
  int code = kOk;

  if (!rq.exported.empty()) {
    TamariRoute route;
    if (rq.route == "subposet") {
      route = TamariRoute::Subposet;
    } else if (rq.route == "quotient") {
      route = TamariRoute::Quotient;
    } else {
      throw UsageError("--route must be 'subposet' or 'quotient'");
    }
    auto const tam = build_tamari(a, route, opt);
    std::string text;
    if (rq.exported == "dot") {
      text = poset_to_dot(tam.lattice.poset(),
                          [](SignedPermutation const& p) { return to_long_string(p); },
                          "Tam_B(" + a.to_string() + ")");
    } else if (rq.exported == "json") {
      auto j = poset_to_json(tam.lattice.poset(),
                             [](SignedPermutation const& p) { return plain(p); });
      j["alpha"] = a.to_string();
      text = j.dump(2) + "\n";
    } else {
      throw UsageError("--export must be 'dot' or 'json'");
    }
    write_output(rq.out, text, out);
  }

  std::string const check = rq.check.empty() && rq.exported.empty() ? "all" : rq.check;
  json report;
  std::string summary;
  if (!check.empty()) {
    VerifyOptions vopt;
    vopt.enumeration = opt;
    auto rep = verify_theorems(a, vopt);
    if (check != "all") {
      std::vector<std::pair<std::string, bool>> chosen;
      for (auto const& name : split_names(check)) {
        try {
          chosen.emplace_back(name, rep.check(name));
        } catch (DomainError const&) {
          throw UsageError("unknown check '" + name + "'");
        }
      }
      rep.checks = std::move(chosen);
    }
    if (!rep.all_passed()) code = kFailed;
    report = rep.to_json();
    summary = rep.summary();
  }
  if (rq.witness) {
    auto const w = not_sublattice_witness(a, opt);
    json jw = nullptr;
    std::string line = "no sublattice witness\n";
    if (w) {
      char const* op = w->is_meet ? "meet" : "join";
      jw = {{"first", values(w->first)},
            {"second", values(w->second)},
            {"operation", op},
            {"weak", values(w->weak)},
            {"tamari", values(w->tamari)}};
      line = std::string(op) + " of " + plain(w->first) + " and " + plain(w->second)
             + ": weak " + plain(w->weak) + ", tamari " + plain(w->tamari) + "\n";
    }
    report["alpha"] = a.to_string();
    report["sublattice_witness"] = jw;
    summary += line;
  }
  bool const to_stdout = rq.exported.empty() || !rq.out.empty();
  if (to_stdout && (!check.empty() || rq.witness)) {
    if (cfg.format == "json") {
      out << report.dump() << "\n";
    } else {
      out << summary;
    }
  }
  return code;
}

int cmd_sequence(Config const& cfg, Request const& rq, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  auto const seq = t_sequence(rq.max_n, cfg.options());
  if (cfg.format == "json") {
    out << json{{"t", seq}}.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "n,t\n";
    for (std::size_t k = 0; k < seq.size(); ++k) out << k + 1 << "," << seq[k] << "\n";
  } else {
    for (std::size_t k = 0; k < seq.size(); ++k) out << (k ? "," : "") << seq[k];
    out << "\n";
  }
  return kOk;
}

int cmd_cover_enum(Config const& cfg, Request const& rq, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  auto const a = TypeBComposition::parse(rq.alpha);
  auto const c = cover_enumerator(a, cfg.options());
  if (cfg.format == "json") {
    out << json{{"alpha", a.to_string()}, {"size", c.at_one()}, {"coefficients", c.coefficients}}
               .dump()
        << "\n";
  } else if (cfg.format == "csv") {
    out << "alpha,size,coefficients\n"
        << csv_quote(a.to_string()) << "," << c.at_one() << "," << c.to_csv() << "\n";
  } else {
    out << c.to_csv() << "\n";
  }
  return kOk;
}

int cmd_conjecture(Config const& cfg, Request const& rq, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  auto const opt = cfg.options();
  json rows = json::array();
  std::vector<std::string> lines;
  bool mismatch = false;
  if (rq.type_d) {
    if (rq.max_n < 2) throw UsageError("--type-d needs --max-n >= 2");
    if (cfg.format == "csv") lines.push_back("n,alpha,observed,predicted,match");
    for (int n = 2; n <= rq.max_n; ++n) {
      auto const rep = check_type_d_count(n, opt);
      mismatch = mismatch || !rep.matches();
      rows.push_back(rep.to_json());
      lines.push_back(cfg.format == "csv"
                          ? std::to_string(n) + "," + csv_quote(rep.alpha.to_string()) + ","
                                + std::to_string(rep.observed) + "," + rep.predicted.str() + ","
                                + (rep.matches() ? "true" : "false")
                          : rep.summary());
    }
  } else {
    if (rq.t < 0 || rq.t > rq.max_n) throw UsageError("need 0 <= --t <= --max-n");
    if (cfg.format == "csv") {
      lines.push_back("t,n,alpha,observed,predicted,observed_size,predicted_size,match");
    }
    for (int n = std::max(rq.t, 1); n <= rq.max_n; ++n) {
      auto const rep = check_conjecture_t(rq.t, n, opt);
      mismatch = mismatch || !rep.matches();
      rows.push_back(rep.to_json());
      if (cfg.format == "csv") {
        std::string pred;
        for (std::size_t k = 0; k < rep.predicted.size(); ++k) {
          pred += (k ? "," : "") + rep.predicted[k].str();
        }
        lines.push_back(std::to_string(rep.t) + "," + std::to_string(n) + ","
                        + csv_quote(rep.alpha.to_string()) + ","
                        + csv_quote(rep.observed.to_csv()) + "," + csv_quote(pred) + ","
                        + std::to_string(rep.observed.at_one()) + ","
                        + rep.predicted_size.str() + "," + (rep.matches() ? "true" : "false"));
      } else {
        lines.push_back(rep.summary());
      }
    }
  }
  if (cfg.format == "json") {
    out << json{{"reports", rows}, {"all_match", !mismatch}}.dump() << "\n";
  } else {
    for (auto const& l : lines) out << l << "\n";
    if (cfg.format == "text" && mismatch) out << "*** MISMATCH FOUND ***\n";
  }
  return kOk;
}

// Runs one command line; `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, bool allow_batch);

int run_batch(Config const& cfg, std::vector<std::string> const& globals, std::ostream& out,
              std::ostream& err) {
  std::ifstream in(cfg.batch);
  if (!in) {
    err << "error: cannot read batch file '" << cfg.batch << "'\n";
    return kUsage;
  }
  int worst = kOk;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto const first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> args = globals;
    // CLI11 splits the line, honoring quotes.
    auto parts = CLI::detail::split_up(line);
    CLI::detail::remove_quotes(parts);
    args.insert(args.end(), parts.begin(), parts.end());
    worst = std::max(worst, run(args, out, err, false));
  }
  return worst;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, bool allow_batch) {
  CLI::App app{"Type-B parabolic Tamari lattices", "tamari_b"};
  app.require_subcommand(allow_batch ? 0 : 1, 1);
  app.fallthrough();

  Config cfg;
  try {
    cfg.cap = default_cap();
  } catch (UsageError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  app.add_option("--cap", cfg.cap, "enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker threads or 'auto'");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_flag("--debug-crosschecks", cfg.debug_crosschecks,
               "enable internal cross-checks");
  if (allow_batch) {
    app.add_option("--batch", cfg.batch, "file with one command per line");
  }

  Request rq;
  auto* en = app.add_subcommand("enumerate", "list H_alpha or its aligned elements");
  en->add_option("--alpha", rq.alpha, "type-B composition")->required();
  en->add_flag("--aligned", rq.aligned, "only aligned elements");

  auto* pr = app.add_subcommand("project", "project onto a class bottom or top");
  pr->add_option("--alpha", rq.alpha, "type-B composition")->required();
  pr->add_option("--perm", rq.perm, "right part, e.g. \" -3,1,-2\"")->required();
  pr->add_option("--dir", rq.dir, "down or up");

  auto* la = app.add_subcommand("lattice", "build, verify, and export Tam_B(alpha)");
  la->add_option("--alpha", rq.alpha, "type-B composition")->required();
  la->add_option("--check", rq.check, "'all' or a comma-separated list of checks");
  la->add_option("--export", rq.exported, "dot or json");
  la->add_option("--out", rq.out, "export file");
  la->add_option("--route", rq.route, "subposet or quotient");
  la->add_flag("--witness", rq.witness, "search for a non-sublattice witness");

  auto* se = app.add_subcommand("sequence", "the sequence t_1, ..., t_max-n");
  se->add_option("--max-n", rq.max_n, "largest n");

  auto* ce = app.add_subcommand("cover-enum", "cover enumerator coefficients");
  ce->add_option("--alpha", rq.alpha, "type-B composition")->required();

  auto* co = app.add_subcommand("conjecture", "compare counts with closed forms");
  co->add_option("--t", rq.t, "first part of (t,1,...,1)");
  co->add_option("--max-n", rq.max_n, "largest n");
  co->add_flag("--type-d", rq.type_d, "check (0,1,...,1,2) against the type-D count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (cfg.debug_crosschecks) set_crosschecks(true);

  if (allow_batch && !cfg.batch.empty()) {
    if (!app.get_subcommands().empty()) {
      err << "error: --batch cannot be combined with a command\n";
      return kUsage;
    }
    std::vector<std::string> globals{"--cap", std::to_string(cfg.cap), "--threads",
                                     cfg.threads, "--format", cfg.format};
    if (cfg.debug_crosschecks) globals.push_back("--debug-crosschecks");
    return run_batch(cfg, globals, out, err);
  }
  if (app.get_subcommands().empty()) {
    err << "error: a command is required\n" << app.help();
    return kUsage;
  }

  try {
    if (en->parsed()) return cmd_enumerate(cfg, rq, out);
    if (pr->parsed()) return cmd_project(cfg, rq, out);
    if (la->parsed()) return cmd_lattice(cfg, rq, out);
    if (se->parsed()) return cmd_sequence(cfg, rq, out);
    if (ce->parsed()) return cmd_cover_enum(cfg, rq, out);
    if (co->parsed()) return cmd_conjecture(cfg, rq, out);
  } catch (CapExceeded const& e) {
    err << "error: " << e.what() << "\n";
    return kCap;
  } catch (UsageError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (DomainError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  int const code = run(std::move(args), std::cout, std::cerr, true);
  std::cout.flush();
  return code;
}
