// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace ortholab;

namespace {

// Tolerances.
constexpr double kGoldenSeconds = 1.0;
constexpr double kSasakiSuiteSeconds = 60.0;
constexpr double kNegativeControlSeconds = 1.0;
constexpr std::size_t kMaxViolations = 0;
constexpr std::size_t kEnumerationMax = 8;
constexpr std::size_t kInducedMax = 6;
constexpr std::size_t kOracleMax = 5;
constexpr std::size_t kMo2DotEdges = 8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(ORTHOLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string data(const std::string& name) { return testing_support::data_path(name); }

int failures = 0;

void verdict(int number, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << detail << '\n';
  failures += !ok;
}

std::set<std::pair<std::string, std::string>> dot_edges(const std::string& dot) {
  std::set<std::pair<std::string, std::string>> out;
  const std::regex edge(R"re(^\s*"([^"]+)" -> "([^"]+)";\s*$)re");
  std::istringstream in(dot);
  std::string line;
  std::smatch m;
  while (std::getline(in, line))
    if (std::regex_match(line, m, edge)) out.emplace(m[1], m[2]);
  return out;
}

std::set<std::pair<std::string, std::string>> reduction_edges(const BoundedLattice& l) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : oracle::transitive_reduction(testing_support::to_matrix(l)))
    out.emplace(l.name(ElementId(a)), l.name(ElementId(b)));
  return out;
}

// The structures fed to the Sasaki suite: fixed examples plus the CLI's
// orthomodular enumeration.
struct Corpus {
  std::vector<OrthoCandidate> structures;
  std::vector<fs::path> files;
  bool cli_ok = false;
};

Corpus build_corpus(const fs::path& dir) {
  Corpus corpus;
  corpus.structures = {catalog::mo2(), catalog::boolean2(), catalog::boolean_algebra(2),
                       catalog::boolean_algebra(3)};
  const auto r = cli("enumerate --max-size " + std::to_string(kEnumerationMax) + " --omod --out " + dir.string());
  corpus.cli_ok = r.code == 0;
  std::istringstream lines(r.out);
  std::string path;
  while (std::getline(lines, path)) {
    corpus.files.emplace_back(path);
    corpus.structures.push_back(std::get<OrthoCandidate>(load_structure(path)));
  }
  return corpus;
}

void criterion1() {
  const auto t0 = Clock::now();
  const auto r = cli("build a-of-l " + data("mo2.ortho"));
  const double elapsed = seconds_since(t0);
  std::size_t mismatches = 72;
  if (r.code == 0) {
    const auto built = std::get<LrGroupoid>(parse_structure(r.out));
    const auto golden = std::get<LrGroupoid>(load_structure(data("mo2.groupoid")));
    if (built.names() == golden.names()) {
      mismatches = 0;
      for (ElementId x = 0; x < 6; ++x)
        for (ElementId y = 0; y < 6; ++y)
          mismatches += (built.odot(x, y) != golden.odot(x, y)) + (built.imp(x, y) != golden.imp(x, y));
    }
  }
  std::ostringstream d;
  d << "MO2 build a-of-l, " << mismatches << " of 72 cells differ from the golden tables, " << elapsed << " s";
  verdict(1, mismatches == kMaxViolations && elapsed < kGoldenSeconds, d.str());
}

void criterion2(const Corpus& corpus, double enumerate_seconds) {
  const auto t0 = Clock::now();
  std::size_t violations = 0, checks = 0;
  for (const auto& c : corpus.structures) {
    const auto r = sasaki_postconditions(c);
    for (const auto& a : r.results()) {
      ++checks;
      violations += !a.passed;
    }
  }
  const double elapsed = enumerate_seconds + seconds_since(t0);
  std::ostringstream d;
  d << corpus.structures.size() << " structures (" << corpus.files.size() << " enumerated), " << checks
    << " axiom checks, " << violations << " violations, " << elapsed << " s";
  verdict(2, corpus.cli_ok && !corpus.files.empty() && violations == kMaxViolations && elapsed < kSasakiSuiteSeconds,
          d.str());
}

void criterion3(const Corpus& corpus) {
  std::size_t mismatches = 0;
  for (const auto& c : corpus.structures) {
    const auto g = sasaki_groupoid(c);
    mismatches += !round_trip_check(c).overall();
    mismatches += !round_trip_check(g).overall();
    // Bit-exact on the serialized form as well.
    mismatches += serialize(induced_oml(g)) != serialize(c);
    mismatches += serialize(sasaki_groupoid(induced_oml(g))) != serialize(g);
  }
  std::ostringstream d;
  d << 2 * corpus.structures.size() << " round trips, " << mismatches << " mismatches";
  verdict(3, mismatches == kMaxViolations, d.str());
}

void criterion4() {
  std::size_t maps = 0, kept = 0, violations = 0;
  AxiomProfile keep = AxiomProfile::core();
  keep.eq3 = true;
  // Every unary map is tried; the enumerator is not trusted to find them all.
  for (const auto& l : testing_support::lattice_corpus(kInducedMax)) {
    const std::size_t n = l.size();
    UnaryTable f(n, 0);
    while (true) {
      const OrthoCandidate c(l, f);
      if (axioms::antitony(c).passed && axioms::involution(c).passed) {
        ++maps;
        const auto g = sasaki_groupoid(c, true);
        if (verify_lrg(g, keep).overall()) {
          ++kept;
          violations += !verify_orthomodular_lattice(negation_structure(g)).overall();
        }
      }
      std::size_t i = 0;
      while (i < n && ++f[i] == n) f[i++] = 0;
      if (i == n) break;
    }
  }
  std::ostringstream d;
  d << maps << " antitone involutive maps on lattices n<=" << kInducedMax << ", " << kept
    << " groupoids kept, " << violations << " induced structures fail the orthomodular lattice axioms";
  verdict(4, kept > 0 && violations == kMaxViolations, d.str());
}

void criterion5() {
  const auto t0 = Clock::now();
  auto run = [] {
    const auto o6 = std::get<OrthoCandidate>(load_structure(data("o6.ortho")));
    const auto report = check_orthomodularity(o6);
    const auto* omod = report.find("orthomodularity-(v)");
    const auto g = sasaki_groupoid(o6, true);
    const auto adj = find_counterexample(g, "left-adjointness");
    const auto div = find_counterexample(g, "divisibility");
    std::array<std::string, 3> out;
    if (omod && !omod->passed && omod->witness && omod->witness->size() == 2)
      out[0] = render_witness(*omod->witness, o6.names());
    if (adj && adj->size() == 3) out[1] = render_witness(*adj, o6.names());
    if (div && div->size() == 2) out[2] = render_witness(*div, o6.names());
    return out;
  };
  const auto first = run();
  const auto second = run();
  const double elapsed = seconds_since(t0);
  bool ok = first == second && elapsed < kNegativeControlSeconds;
  for (const auto& w : first) ok = ok && !w.empty();
  std::ostringstream d;
  d << "O6 orthomodularity [" << first[0] << "], adjointness [" << first[1] << "], divisibility [" << first[2]
    << "], repeatable=" << (first == second ? "yes" : "no") << ", " << elapsed << " s";
  verdict(5, ok, d.str());
}

void criterion6() {
  std::size_t structures = 0, de_morgan_bad = 0, omod_bad = 0;
  auto examine = [&](const OrthoCandidate& c) {
    ++structures;
    const auto o = verify_ortholattice(c);
    const bool premises = o.passed("antitony") && o.passed("involution");
    if (premises && !(o.passed("de-morgan-join") && o.passed("de-morgan-meet"))) ++de_morgan_bad;
    if (premises && o.passed("join-complement")) {
      const auto m = check_orthomodularity(c);
      if (m.passed("orthomodularity-(v)") != m.passed("orthomodularity-(vi)")) ++omod_bad;
    }
  };
  // Every unary map on small lattices, antitone involutions up to the enumeration bound.
  for (const auto& l : testing_support::lattice_corpus(kOracleMax)) {
    const std::size_t n = l.size();
    UnaryTable f(n, 0);
    while (true) {
      examine(OrthoCandidate(l, f));
      std::size_t i = 0;
      while (i < n && ++f[i] == n) f[i++] = 0;
      if (i == n) break;
    }
  }
  for (const auto& l : testing_support::lattice_corpus(kEnumerationMax))
    for (const auto& f : enumerate_antitone_involutions(l)) examine(OrthoCandidate(l, f));
  std::ostringstream d;
  d << structures << " structures, " << de_morgan_bad << " de Morgan discrepancies, " << omod_bad
    << " (v)/(vi) discrepancies";
  verdict(6, structures > 0 && de_morgan_bad == 0 && omod_bad == 0, d.str());
}

void criterion7() {
  std::size_t mismatches = 0;
  std::ostringstream d;
  const auto& ls = testing_support::lattice_corpus(kOracleMax);
  d << "lattice classes";
  for (std::size_t n = 1; n <= kOracleMax; ++n) {
    const auto ours = std::count_if(ls.begin(), ls.end(), [&](const BoundedLattice& l) { return l.size() == n; });
    const auto theirs = oracle::lattice_classes(n);
    mismatches += std::size_t(ours) != theirs;
    d << ' ' << ours << '/' << theirs;
  }
  for (const auto& [label, frame] : {std::pair{"MO2", catalog::mo2().lattice()},
                                     std::pair{"O6", catalog::hexagon().lattice()}}) {
    const auto m = testing_support::to_matrix(frame);
    for (bool omod : {false, true}) {
      const auto ours = enumerate_orthocomplements(frame, omod).size();
      const auto theirs = oracle::orthocomplements(m, omod).size();
      mismatches += ours != theirs;
      d << ", " << label << (omod ? " omod " : " ortho ") << ours << '/' << theirs;
    }
  }
  verdict(7, mismatches == 0, d.str() + " (ours/oracle)");
}

void criterion8(const Corpus& corpus, const fs::path& dir) {
  std::vector<fs::path> files = corpus.files;
  for (const char* f : {"mo2.ortho", "o6.ortho", "boolean4.ortho", "chain2.lattice", "mo2.groupoid"})
    files.emplace_back(data(f));
  const auto lattices = cli("enumerate --max-size 7 --out " + (dir / "lattices").string());
  std::istringstream lines(lattices.out);
  std::string path;
  while (std::getline(lines, path)) files.emplace_back(path);

  std::size_t round_trip_bad = 0, dot_bad = 0;
  for (const auto& f : files) {
    const auto text = read_file(f);
    const auto s = parse_structure(text);
    const auto back = parse_structure(serialize(s));
    round_trip_bad += !(back == s) || serialize(back) != serialize(s);
    dot_bad += dot_edges(export_dot(lattice_of(s))) != reduction_edges(lattice_of(s));
  }
  const auto mo2_dot = cli("dot " + data("mo2.ortho"));
  const auto mo2_edges = dot_edges(mo2_dot.out);
  const bool mo2_ok = mo2_dot.code == 0 && mo2_edges.size() == kMo2DotEdges &&
                      mo2_edges == reduction_edges(catalog::mo2().lattice());
  std::ostringstream d;
  d << files.size() << " files, " << round_trip_bad << " round-trip failures, " << dot_bad
    << " DOT edge-set mismatches, MO2 dot has " << mo2_edges.size() << " edges";
  verdict(8, lattices.code == 0 && round_trip_bad == 0 && dot_bad == 0 && mo2_ok, d.str());
}

}  // namespace

int main() {
  const auto dir = fs::temp_directory_path() / ("ortholab-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);

  auto guarded = [](int number, const auto& body) {
    try {
      body();
    } catch (const std::exception& e) {
      verdict(number, false, std::string("exception: ") + e.what());
    }
  };

  guarded(1, criterion1);
  const auto t0 = Clock::now();
  Corpus corpus;
  guarded(2, [&] { corpus = build_corpus(dir / "omod"); });
  const double enumerate_seconds = seconds_since(t0);
  guarded(2, [&] { criterion2(corpus, enumerate_seconds); });
  guarded(3, [&] { criterion3(corpus); });
  guarded(4, criterion4);
  guarded(5, criterion5);
  guarded(6, criterion6);
  guarded(7, criterion7);
  guarded(8, [&] { criterion8(corpus, dir); });

  fs::remove_all(dir);
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << '\n';
  return failures == 0 ? 0 : 1;
}
