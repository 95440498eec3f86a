// Command-line front end for the ortholab toolkit.
//
// Exit codes: 0 pass, 1 axiom failure, 2 input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "ortholab/ortholab.hpp"

namespace fs = std::filesystem;
using namespace ortholab;

namespace {

constexpr int kPass = 0;
constexpr int kAxiomFailure = 1;
constexpr int kInputError = 2;

nlohmann::json report_json(const VerificationReport& report, const std::vector<std::string>& names) {
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& r : report.results()) {
    nlohmann::json entry{{"id", r.id}, {"passed", r.passed}};
    if (r.witness) {
      nlohmann::json w = nlohmann::json::object();
      for (const auto& b : *r.witness) w[b.variable] = names[b.element];
      entry["witness"] = w;
    } else {
      entry["witness"] = nullptr;
    }
    axioms.push_back(entry);
  }
  nlohmann::json notes = nlohmann::json::array();
  for (const auto& n : report.notes()) notes.push_back(n);
  return {{"overall", report.overall()},
          {"conditional", report.conditional()},
          {"axioms", axioms},
          {"notes", notes}};
}

VerificationReport check_structure(const Structure& s, const std::string& profile) {
  if (const auto* l = std::get_if<BoundedLattice>(&s)) return verify_lattice_laws(*l);

  if (const auto* c = std::get_if<OrthoCandidate>(&s)) {
    auto report = verify_orthomodular_lattice(*c);
    if (profile == "thm1") report.append(sasaki_postconditions(*c, true));
    if (profile == "thm3" || profile == "thm3-proof") report.append(round_trip_check(*c));
    return report;
  }

  const auto& g = std::get<LrGroupoid>(s);
  if (profile == "core") return verify_lrg_core(g);
  if (profile == "thm1") return verify_lrg(g, AxiomProfile::sasaki_image());
  if (profile == "thm2") {
    auto report = verify_lrg(g, AxiomProfile::induces_orthomodular());
    auto induced = verify_orthomodular_lattice(negation_structure(g));
    if (!report.overall()) induced.mark_conditional();
    report.append(induced);
    return report;
  }
  auto report = verify_lrg(g, profile == "thm3" ? AxiomProfile::round_trip()
                                                : AxiomProfile::round_trip_with_divisibility());
  report.append(round_trip_check(g));
  return report;
}

void emit_report(const VerificationReport& report, const std::vector<std::string>& names,
                 const std::string& report_path) {
  const auto text = render_report(report, names);
  if (report_path.empty()) {
    std::cerr << text;
  } else {
    std::ofstream out(report_path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + report_path);
    out << text;
  }
}

std::string file_name(std::string_view kind, std::size_t n, std::size_t index) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s-n%02zu-%04zu.txt", std::string(kind).c_str(), n, index);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite orthomodular lattices and left residuated l-groupoids"};
  app.require_subcommand(1);

  std::string input, profile = "core", report_path, axiom;
  bool force = false, omod = false, ortho = false;
  std::size_t max_size = 0;
  std::uint64_t budget = kDefaultPermutationBudget;
  std::string out_dir = "enumerated";

  auto* check = app.add_subcommand("check", "Check every axiom of the selected profile");
  check->add_option("file", input, "Structure file")->required();
  check->add_option("--profile", profile, "core, thm1, thm2, thm3 or thm3-proof")
      ->check(CLI::IsMember({"core", "thm1", "thm2", "thm3", "thm3-proof"}));
  check->add_option("--report", report_path, "Write the human-readable report here instead of stderr");

  auto* build = app.add_subcommand("build", "Construct the corresponding structure");
  build->require_subcommand(1);
  auto* a_of_l = build->add_subcommand("a-of-l", "Sasaki groupoid of an orthomodular lattice");
  a_of_l->add_option("file", input, "Ortho file")->required();
  a_of_l->add_flag("--force", force, "Build even if the input is not orthomodular");
  auto* l_of_a = build->add_subcommand("l-of-a", "Orthomodular lattice induced by a groupoid");
  l_of_a->add_option("file", input, "Groupoid file")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "Round trip through the correspondence");
  roundtrip->add_option("file", input, "Ortho or groupoid file")->required();
  roundtrip->add_option("--report", report_path, "Write the human-readable report here");

  auto* enumerate = app.add_subcommand("enumerate", "Write one file per isomorphism class");
  enumerate->add_option("--max-size", max_size, "Largest carrier size (at most 9)")->required();
  enumerate->add_flag("--omod", omod, "Orthomodular lattices (ortho files)");
  enumerate->add_flag("--ortho", ortho, "All ortholattices (ortho files)");
  enumerate->add_option("--out", out_dir, "Output directory")->capture_default_str();
  enumerate->add_option("--budget", budget, "Permutation budget for canonical labeling")->capture_default_str();

  auto* witness = app.add_subcommand("witness", "First counterexample to one axiom");
  witness->add_option("file", input, "Structure file")->required();
  witness->add_option("--axiom", axiom, "Axiom id")->required();

  auto* dot = app.add_subcommand("dot", "Hasse diagram in Graphviz DOT");
  dot->add_option("file", input, "Structure file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (check->parsed()) {
      const auto s = load_structure(input);
      const auto report = check_structure(s, profile);
      const auto& names = lattice_of(s).names();
      auto j = report_json(report, names);
      j["kind"] = kind_name(s);
      j["profile"] = profile;
      std::cout << j.dump(2) << '\n';
      emit_report(report, names, report_path);
      return report.overall() ? kPass : kAxiomFailure;
    }

    if (a_of_l->parsed()) {
      const auto s = load_structure(input);
      const auto* c = std::get_if<OrthoCandidate>(&s);
      if (!c) throw Error(ErrorKind::InvalidArgument, "a-of-l needs an ortho file");
      std::cout << serialize(sasaki_groupoid(*c, force));
      return kPass;
    }

    if (l_of_a->parsed()) {
      const auto s = load_structure(input);
      const auto* g = std::get_if<LrGroupoid>(&s);
      if (!g) throw Error(ErrorKind::InvalidArgument, "l-of-a needs a groupoid file");
      std::cout << serialize(induced_oml(*g));
      return kPass;
    }

    if (roundtrip->parsed()) {
      const auto s = load_structure(input);
      VerificationReport report;
      if (const auto* c = std::get_if<OrthoCandidate>(&s))
        report = round_trip_check(*c);
      else if (const auto* g = std::get_if<LrGroupoid>(&s))
        report = round_trip_check(*g);
      else
        throw Error(ErrorKind::InvalidArgument, "roundtrip needs an ortho or groupoid file");
      const auto& names = lattice_of(s).names();
      std::cout << report_json(report, names).dump(2) << '\n';
      emit_report(report, names, report_path);
      return report.overall() ? kPass : kAxiomFailure;
    }

    if (enumerate->parsed()) {
      if (omod && ortho) throw Error(ErrorKind::InvalidArgument, "--omod and --ortho are exclusive");
      EnumerationConfig cfg;
      cfg.max_size = max_size;
      cfg.permutation_budget = budget;
      cfg.require_orthomodular = omod;
      fs::create_directories(out_dir);
      std::size_t index = 0;
      auto write = [&](std::string_view kind, std::size_t n, const std::string& text) {
        const auto path = fs::path(out_dir) / file_name(kind, n, index++);
        std::ofstream f(path);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
        f << text;
        std::cout << path.string() << '\n';
      };
      if (omod || ortho) {
        for (const auto& c : enumerate_ortholattices(cfg)) write("ortho", c.size(), serialize(c));
      } else {
        for (const auto& l : enumerate_bounded_lattices(cfg)) write("lattice", l.size(), serialize(l));
      }
      std::cerr << index << " classes written to " << out_dir << '\n';
      return kPass;
    }

    if (witness->parsed()) {
      const auto s = load_structure(input);
      const auto found = std::visit([&](const auto& v) { return find_counterexample(v, axiom); }, s);
      if (!found) {
        std::cout << "NONE\n";
        return kPass;
      }
      std::cout << render_witness(*found, lattice_of(s).names()) << '\n';
      return kAxiomFailure;
    }

    if (dot->parsed()) {
      const auto s = load_structure(input);
      if (const auto* c = std::get_if<OrthoCandidate>(&s))
        std::cout << export_dot(c->lattice(), c->comp());
      else
        std::cout << export_dot(lattice_of(s));
      return kPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::NotOrthomodular:
      case ErrorKind::HypothesisViolated:
      case ErrorKind::ConclusionViolated:
        return kAxiomFailure;
      default:
        return kInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
