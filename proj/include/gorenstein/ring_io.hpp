#pragma once

// Text ring files:
//   field Q | field Fp <p>
//   vars x, y, z
//   ideal f1, f2,
//         f3
// Blank lines and text after '#' are ignored.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gorenstein/artin_algebra.hpp"

namespace gorenstein {

struct RingFile {
  FieldSpec field;
  std::vector<std::string> vars;
  std::vector<std::string> ideal;
  std::vector<int> ideal_lines;    // source position of each generator
  std::vector<int> ideal_columns;
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline Error parse_error(int line, const std::string& what) {
  return Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace detail

/// "Q", "Fp 7", "Fp:7", "GF(7)".
inline FieldSpec parse_field(std::string s) {
  s = detail::trim(s);
  if (s == "Q" || s == "QQ") return FieldSpec::rationals();
  std::string digits;
  if (s.rfind("Fp", 0) == 0) digits = detail::trim(s.substr(2));
  else if (s.rfind("GF(", 0) == 0 && s.back() == ')') digits = s.substr(3, s.size() - 4);
  if (!digits.empty() && digits[0] == ':') digits = detail::trim(digits.substr(1));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::InvalidField, "unrecognized field '" + s + "'");
  unsigned long p = std::stoul(digits);
  if (p > 2147483647UL) throw Error(ErrorCode::InvalidField, "characteristic too large");
  return FieldSpec::prime(static_cast<std::uint32_t>(p));
}

inline RingFile parse_ring_file(const std::string& text) {
  RingFile rf;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  enum { Field, Vars, Ideal } state = Field;
  bool in_ideal = false;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::string line = detail::trim(raw);
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    std::string key = line.substr(0, sp), rest = sp == std::string::npos ? "" : detail::trim(line.substr(sp));
    if (state == Field) {
      if (key != "field") throw detail::parse_error(lineno, "expected 'field Q' or 'field Fp <p>'");
      try {
        rf.field = parse_field(rest);
      } catch (const Error& e) {
        throw detail::parse_error(lineno, e.message());
      }
      state = Vars;
    } else if (state == Vars) {
      if (key != "vars") throw detail::parse_error(lineno, "expected 'vars <comma list>'");
      if (!rest.empty())
        for (auto& v : detail::split_commas(rest)) {
          if (v.empty()) throw detail::parse_error(lineno, "empty variable name");
          rf.vars.push_back(v);
        }
      state = Ideal;
    } else {
      // generators end at a comma or at the end of a line
      std::size_t pos = 0;
      if (!in_ideal) {
        if (key != "ideal") throw detail::parse_error(lineno, "expected 'ideal <generators>'");
        pos = raw.find("ideal") + 5;
        in_ideal = true;
      }
      std::size_t begin = pos;
      auto push = [&](std::size_t end, bool at_comma) {
        std::string g = raw.substr(begin, end - begin);
        auto lead = g.find_first_not_of(" \t\r");
        if (lead == std::string::npos) {
          if (at_comma) throw detail::parse_error(lineno, "empty generator");
          return;
        }
        rf.ideal.push_back(detail::trim(g));
        rf.ideal_lines.push_back(lineno);
        rf.ideal_columns.push_back(static_cast<int>(begin + lead) + 1);
      };
      for (; pos < raw.size(); ++pos)
        if (raw[pos] == ',') {
          push(pos, true);
          begin = pos + 1;
        }
      push(raw.size(), false);
    }
  }
  if (state == Field) throw detail::parse_error(lineno, "missing 'field' line");
  if (state == Vars) throw detail::parse_error(lineno, "missing 'vars' line");
  return rf;
}

inline RingFile read_ring_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_ring_file(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

template <FieldScalar K>
IdealPresentation<K> presentation_of(const RingFile& rf) {
  auto ring = make_ring(rf.vars, rf.field);
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < rf.ideal.size(); ++i) gens.push_back(parse_polynomial<K>(ring, rf.ideal[i], rf.ideal_lines[i], rf.ideal_columns[i]));
  return IdealPresentation<K>(ring, std::move(gens));
}

template <FieldScalar K>
ArtinAlgebra<K> load_algebra(const RingFile& rf) {
  return ArtinAlgebra<K>::from_presentation(presentation_of<K>(rf));
}

inline std::string field_line(const FieldSpec& f) {
  return f.kind == FieldKind::Rationals ? "field Q" : "field Fp " + std::to_string(f.characteristic);
}

inline std::string format_ring_file(const FieldSpec& field, const std::vector<std::string>& vars,
                                    const std::vector<std::string>& gens) {
  std::string out = field_line(field) + "\nvars ";
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + vars[i];
  out += "\nideal ";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ",\n      " : "") + gens[i];
  return out + "\n";
}

template <FieldScalar K>
std::string format_ring_file(const IdealPresentation<K>& I) {
  return format_ring_file(I.ring->field, I.ring->vars, I.to_strings());
}

}  // namespace gorenstein
