#pragma once

// Line-oriented structure files:
//
//   kind: ortho            # or: lattice, groupoid
//   elements: 0 a a' b b' 1
//   covers: 0<a 0<a' 0<b 0<b' a<1 a'<1 b<1 b'<1
//   comp: 0=1 a=a' b=b' 1=0 a'=a b'=b      # ortho only, total
//   odot:                                   # groupoid only, one row per
//     0: 0 0 0 0 0 0                        # left operand, columns in
//     ...                                   # `elements` order
//   imp:
//     ...
//
// `#` starts a comment; blank lines are ignored.

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ortholab/error.hpp"
#include "ortholab/order.hpp"
#include "ortholab/ortho.hpp"
#include "ortholab/residuated.hpp"

namespace ortholab {

using Structure = std::variant<BoundedLattice, OrthoCandidate, LrGroupoid>;

inline std::string_view kind_name(const Structure& s) {
  switch (s.index()) {
    case 0: return "lattice";
    case 1: return "ortho";
    default: return "groupoid";
  }
}

inline const BoundedLattice& lattice_of(const Structure& s) {
  return std::visit(
      [](const auto& v) -> const BoundedLattice& {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, BoundedLattice>)
          return v;
        else
          return v.lattice();
      },
      s);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Section {
  std::size_t line = 0;
  std::string value;
};

struct TableRow {
  std::size_t line = 0;
  std::vector<std::string> values;
};

struct RawFile {
  std::map<std::string, Section> keys;
  std::map<std::string, std::map<std::string, TableRow>> tables;
};

inline bool is_key(std::string_view k) {
  return k == "kind" || k == "elements" || k == "covers" || k == "comp" || k == "odot" || k == "imp";
}

inline RawFile scan_lines(std::string_view text) {
  RawFile raw;
  std::string current_table;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    if (trim(view).empty()) continue;
    const bool indented = std::isspace(static_cast<unsigned char>(view.front()));
    view = trim(view);
    const auto colon = view.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::SyntaxError, "expected `key: value`", lineno);
    const std::string key(trim(view.substr(0, colon)));
    const std::string_view rest = trim(view.substr(colon + 1));

    if (!indented && is_key(key)) {
      if (raw.keys.count(key)) throw Error(ErrorKind::SyntaxError, "duplicate key `" + key + "`", lineno);
      raw.keys[key] = Section{lineno, std::string(rest)};
      if (key == "odot" || key == "imp") {
        if (!rest.empty()) throw Error(ErrorKind::SyntaxError, "table rows go on following lines", lineno);
        current_table = key;
        raw.tables[key];
      } else {
        current_table.clear();
      }
      continue;
    }
    if (current_table.empty())
      throw Error(ErrorKind::SyntaxError, "unknown key `" + key + "`", lineno);
    auto& rows = raw.tables[current_table];
    if (rows.count(key))
      throw Error(ErrorKind::SyntaxError, "duplicate row `" + key + "` in " + current_table, lineno);
    rows[key] = TableRow{lineno, split_ws(rest)};
  }
  return raw;
}

inline ElementId lookup(const Poset& p, const std::string& name, std::size_t line) {
  auto idx = p.index_of(name);
  if (!idx) throw Error(ErrorKind::UnknownElement, name, line);
  return *idx;
}

inline BinOpTable read_table(const RawFile& raw, const std::string& which, const Poset& p) {
  const auto& section = raw.keys.at(which);
  const auto& rows = raw.tables.at(which);
  for (const auto& [label, row] : rows) lookup(p, label, row.line);
  const std::size_t n = p.size();
  BinOpTable table(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto it = rows.find(p.name(ElementId(x)));
    if (it == rows.end())
      throw Error(ErrorKind::TableNotTotal, which + " has no row for " + p.name(ElementId(x)), section.line);
    const auto& row = it->second;
    if (row.values.size() != n)
      throw Error(ErrorKind::TableNotTotal,
                  which + " row " + it->first + " has " + std::to_string(row.values.size()) +
                      " entries, expected " + std::to_string(n),
                  row.line);
    for (std::size_t y = 0; y < n; ++y) table(x, y) = lookup(p, row.values[y], row.line);
  }
  return table;
}

template <typename F>
auto at_line(std::size_t line, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.line()) throw;
    throw Error(e.kind(), e.detail(), line);
  }
}

}  // namespace detail

/// Parses and fully validates a structure file.
inline Structure parse_structure(std::string_view text) {
  const auto raw = detail::scan_lines(text);
  auto need = [&](const char* key) -> const detail::Section& {
    auto it = raw.keys.find(key);
    if (it == raw.keys.end()) throw Error(ErrorKind::SyntaxError, std::string("missing `") + key + ":`");
    return it->second;
  };
  auto forbid = [&](const char* key, std::string_view kind) {
    if (auto it = raw.keys.find(key); it != raw.keys.end())
      throw Error(ErrorKind::SyntaxError, std::string("`") + key + ":` is not allowed in a " +
                                              std::string(kind) + " file", it->second.line);
  };

  const auto& kind_sec = need("kind");
  const std::string kind = kind_sec.value;
  if (kind != "lattice" && kind != "ortho" && kind != "groupoid")
    throw Error(ErrorKind::SyntaxError, "unknown kind `" + kind + "`", kind_sec.line);

  const auto& elem_sec = need("elements");
  auto names = detail::split_ws(elem_sec.value);
  for (const auto& nm : names)
    if (nm.find_first_of("<=:") != std::string::npos)
      throw Error(ErrorKind::SyntaxError, "element name `" + nm + "` contains a reserved character",
                  elem_sec.line);

  std::vector<std::pair<std::string, std::string>> covers;
  std::size_t covers_line = elem_sec.line;
  if (auto it = raw.keys.find("covers"); it != raw.keys.end()) {
    covers_line = it->second.line;
    for (const auto& tok : detail::split_ws(it->second.value)) {
      const auto lt = tok.find('<');
      if (lt == std::string::npos || lt == 0 || lt + 1 == tok.size() || tok.find('<', lt + 1) != std::string::npos)
        throw Error(ErrorKind::SyntaxError, "bad cover `" + tok + "`, expected lower<upper", covers_line);
      covers.emplace_back(tok.substr(0, lt), tok.substr(lt + 1));
    }
  }
  auto poset = detail::at_line(covers_line, [&] { return poset_from_covers(names, covers); });
  auto lattice = detail::at_line(covers_line, [&] { return BoundedLattice(std::move(poset)); });

  if (kind == "lattice") {
    forbid("comp", kind);
    forbid("odot", kind);
    forbid("imp", kind);
    return lattice;
  }
  if (kind == "ortho") {
    forbid("odot", kind);
    forbid("imp", kind);
    const auto& comp_sec = need("comp");
    const auto& p = lattice.poset();
    std::vector<std::optional<ElementId>> comp(p.size());
    for (const auto& tok : detail::split_ws(comp_sec.value)) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
        throw Error(ErrorKind::SyntaxError, "bad complement `" + tok + "`, expected x=y", comp_sec.line);
      const auto x = detail::lookup(p, tok.substr(0, eq), comp_sec.line);
      const auto y = detail::lookup(p, tok.substr(eq + 1), comp_sec.line);
      if (comp[x]) throw Error(ErrorKind::SyntaxError, "complement of " + p.name(x) + " given twice", comp_sec.line);
      comp[x] = y;
    }
    UnaryTable table(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!comp[x])
        throw Error(ErrorKind::TableNotTotal, "no complement for " + p.name(ElementId(x)), comp_sec.line);
      table[x] = *comp[x];
    }
    return OrthoCandidate(std::move(lattice), std::move(table));
  }
  forbid("comp", kind);
  need("odot");
  need("imp");
  auto odot = detail::read_table(raw, "odot", lattice.poset());
  auto imp = detail::read_table(raw, "imp", lattice.poset());
  return LrGroupoid(std::move(lattice), std::move(odot), std::move(imp));
}

inline Structure load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

namespace detail {

inline void write_header(std::string& out, std::string_view kind, const BoundedLattice& l) {
  out += "kind: ";
  out += kind;
  out += "\nelements:";
  for (const auto& nm : l.names()) out += " " + nm;
  out += "\ncovers:";
  for (const auto& [lo, hi] : l.poset().covers()) out += " " + l.name(lo) + "<" + l.name(hi);
  out += '\n';
}

inline void write_table(std::string& out, std::string_view label, const BoundedLattice& l,
                        const BinOpTable& t) {
  out += label;
  out += ":\n";
  for (std::size_t x = 0; x < l.size(); ++x) {
    out += "  " + l.name(ElementId(x)) + ":";
    for (std::size_t y = 0; y < l.size(); ++y) out += " " + l.name(t(x, y));
    out += '\n';
  }
}

}  // namespace detail

/// Normalized file text: covers are the transitive reduction in row-major
/// order, complement and table rows follow element order.
inline std::string serialize(const BoundedLattice& l) {
  std::string out;
  detail::write_header(out, "lattice", l);
  return out;
}

inline std::string serialize(const OrthoCandidate& c) {
  std::string out;
  const auto& l = c.lattice();
  detail::write_header(out, "ortho", l);
  out += "comp:";
  for (std::size_t x = 0; x < l.size(); ++x) out += " " + l.name(ElementId(x)) + "=" + l.name(c.comp(ElementId(x)));
  out += '\n';
  return out;
}

inline std::string serialize(const LrGroupoid& g) {
  std::string out;
  const auto& l = g.lattice();
  detail::write_header(out, "groupoid", l);
  detail::write_table(out, "odot", l, g.odot_table());
  detail::write_table(out, "imp", l, g.imp_table());
  return out;
}

inline std::string serialize(const Structure& s) {
  return std::visit([](const auto& v) { return serialize(v); }, s);
}

}  // namespace ortholab
