// Command-line front end. Talks to the library only through pspace.h.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pspace/pspace.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct PosetDel {
  void operator()(pspace_poset* p) const { pspace_poset_free(p); }
};
struct SpaceDel {
  void operator()(pspace_space* s) const { pspace_space_free(s); }
};
struct DomainDel {
  void operator()(pspace_domain* d) const { pspace_domain_free(d); }
};
struct StringDel {
  void operator()(char* s) const { pspace_string_free(s); }
};
using PosetPtr = std::unique_ptr<pspace_poset, PosetDel>;
using SpacePtr = std::unique_ptr<pspace_space, SpaceDel>;
using DomainPtr = std::unique_ptr<pspace_domain, DomainDel>;
using Text = std::unique_ptr<char, StringDel>;

// Carries a library failure up to main.
struct Failure {
  pspace_status status;
  std::string message;
};

void ok_or_throw(pspace_status s) {
  if (s != PSPACE_OK) throw Failure{s, pspace_last_error()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{PSPACE_ERR_IO, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PosetPtr load_poset(const std::string& path) {
  pspace_poset* p = nullptr;
  ok_or_throw(pspace_poset_from_file(path.c_str(), &p));
  return PosetPtr(p);
}

int emit_report(char* raw, int pass) {
  Text report(raw);
  std::fputs(report.get(), stdout);
  return pass ? kOk : kFailed;
}

int cmd_build(const std::string& poset, const std::string& kind, bool dot) {
  PosetPtr p = load_poset(poset);
  pspace_space* raw = nullptr;
  ok_or_throw(pspace_build(p.get(), kind.c_str(), &raw));
  SpacePtr s(raw);
  char* out = nullptr;
  ok_or_throw(dot ? pspace_space_to_dot(s.get(), &out) : pspace_space_to_json(s.get(), &out));
  Text text(out);
  std::fputs(text.get(), stdout);
  return kOk;
}

int cmd_check(const std::string& topology) {
  const std::string json = slurp(topology);
  char* report = nullptr;
  int directed = 0;
  ok_or_throw(pspace_check_topology(json.c_str(), &report, &directed));
  return emit_report(report, directed);
}

int cmd_laws(const std::string& poset, const std::string& kind, const std::string& targets_dir) {
  PosetPtr p = load_poset(poset);
  std::vector<std::string> targets;
  if (!targets_dir.empty()) {
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(targets_dir, ec))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    if (ec) throw Failure{PSPACE_ERR_IO, "cannot list '" + targets_dir + "'"};
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Failure{PSPACE_ERR_IO, "no .json targets in '" + targets_dir + "'"};
    for (const auto& f : files) targets.push_back(slurp(f.string()));
  }
  std::vector<const char*> ptrs;
  for (const auto& t : targets) ptrs.push_back(t.c_str());
  char* report = nullptr;
  int pass = 0;
  ok_or_throw(pspace_laws(p.get(), kind.c_str(), ptrs.data(), ptrs.size(), &report, &pass));
  return emit_report(report, pass);
}

int cmd_commute(const std::string& poset) {
  PosetPtr p = load_poset(poset);
  char* report = nullptr;
  int pass = 0;
  ok_or_throw(pspace_commute(p.get(), &report, &pass));
  return emit_report(report, pass);
}

int cmd_classic(const std::string& poset, const std::string& kind) {
  PosetPtr p = load_poset(poset);
  char* report = nullptr;
  int pass = 0;
  ok_or_throw(pspace_classic(p.get(), kind.c_str(), &report, &pass));
  return emit_report(report, pass);
}

int cmd_analyze(const std::string& program, const std::string& domain, const std::string& mode, bool json) {
  pspace_domain* raw = nullptr;
  if (domain == "sign" || domain == "parity") {
    ok_or_throw(pspace_domain_builtin(domain.c_str(), &raw));
  } else {
    ok_or_throw(pspace_domain_from_json(slurp(domain).c_str(), &raw));
  }
  DomainPtr d(raw);
  const std::string src = slurp(program);
  char* text = nullptr;
  char* report = nullptr;
  ok_or_throw(pspace_analyze(d.get(), src.c_str(), mode.c_str(), &text, &report));
  Text t(text), r(report);
  std::fputs(json ? r.get() : t.get(), stdout);
  return kOk;
}

int cmd_sweep(std::size_t max_n, const std::string& suites, bool json) {
  char* summary = nullptr;
  char* report = nullptr;
  int pass = 0;
  ok_or_throw(pspace_sweep(max_n, suites.c_str(), &summary, &report, &pass));
  Text s(summary), r(report);
  std::fputs(s.get(), stdout);
  // Witnesses go to stdout whenever something failed, so failures replay.
  if (json || !pass) std::fputs(r.get(), stdout);
  return pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed powerspaces on finite posets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pspace_version());
  unsigned seed = 0;
  app.add_option("--seed", seed, "Reserved; all computations are deterministic");

  const std::vector<std::string> kinds{"lower", "upper", "convex"};
  std::string poset, kind, topology, targets_dir, program, domain, mode, suites = "all";
  bool dot = false, json = false;
  std::size_t max_n = 3;

  auto* build = app.add_subcommand("build", "Build a powerspace and print it");
  build->add_option("--poset", poset, "Poset JSON file")->required()->check(CLI::ExistingFile);
  build->add_option("--kind", kind, "lower, upper or convex")->required()->check(CLI::IsMember(kinds));
  auto* dot_flag = build->add_flag("--dot", dot, "Hasse diagram in DOT");
  build->add_flag("--json", json, "JSON dump (default)")->excludes(dot_flag);

  auto* check = app.add_subcommand("check", "Is a finite topology a directed space?");
  check->add_option("--topology", topology, "Topology JSON file")->required()->check(CLI::ExistingFile);

  auto* laws = app.add_subcommand("laws", "Semilattice laws and universal property");
  laws->add_option("--poset", poset, "Poset JSON file")->required()->check(CLI::ExistingFile);
  laws->add_option("--kind", kind, "lower, upper or convex")->required()->check(CLI::IsMember(kinds));
  laws->add_option("--targets-dir", targets_dir, "Directory of semilattice JSON targets")
      ->check(CLI::ExistingDirectory);

  auto* commute = app.add_subcommand("commute", "Isomorphism between the two composite powerspaces");
  commute->add_option("--poset", poset, "Poset JSON file")->required()->check(CLI::ExistingFile);

  auto* classic = app.add_subcommand("classic", "Compare with the classical powerdomain");
  classic->add_option("--poset", poset, "Poset JSON file")->required()->check(CLI::ExistingFile);
  classic->add_option("--kind", kind, "lower, upper or convex")->required()->check(CLI::IsMember(kinds));

  auto* analyze = app.add_subcommand("analyze", "May/must analysis of a nondeterministic program");
  analyze->add_option("--program", program, "Program file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--domain", domain, "Domain JSON file, or 'sign' / 'parity'")->required();
  analyze->add_option("--mode", mode, "may, must or convex")
      ->required()
      ->check(CLI::IsMember({"may", "must", "convex"}));
  analyze->add_flag("--json", json, "Print the verdict as JSON");

  auto* sweep = app.add_subcommand("sweep", "Run the invariant suites over all small posets");
  sweep->add_option("--max-n", max_n, "Largest base poset size")->check(CLI::Range(1, 5));
  sweep->add_option("--suite", suites, "'all' or a comma-separated list of suites");
  sweep->add_flag("--json", json, "Also print the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(poset, kind, dot);
    if (*check) return cmd_check(topology);
    if (*laws) return cmd_laws(poset, kind, targets_dir);
    if (*commute) return cmd_commute(poset);
    if (*classic) return cmd_classic(poset, kind);
    if (*analyze) return cmd_analyze(program, domain, mode, json);
    if (*sweep) return cmd_sweep(max_n, suites, json);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.status == PSPACE_ERR_ISO_FAILURE ? kFailed : kUsage;
  }
  return kUsage;
}
