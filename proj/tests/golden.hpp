// Golden standard forms and the comparison used against them.
#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbqc/clifford.hpp"
#include "mbqc/dsl.hpp"
#include "mbqc/library.hpp"
#include "mbqc/rewrite.hpp"

namespace golden {

struct Entry {
  std::string name;
  std::string rewrite;  // standard | extended | pauli
  std::string compare;  // exact | blocks
  std::string sequence;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::vector<Entry> load(const std::string& dir) {
  std::ifstream in(dir + "/goldens.txt");
  if (!in) throw std::runtime_error("cannot open " + dir + "/goldens.txt");
  std::vector<Entry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, ';')) f.push_back(trim(part));
    if (f.size() != 4) throw std::runtime_error("bad golden line: " + line);
    out.push_back({f[0], f[1], f[2], f[3]});
  }
  return out;
}

inline const Entry& find(const std::vector<Entry>& all, const std::string& name) {
  for (const auto& e : all) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("no golden named " + name);
}

/// `X(3, s[2]) M(1, 0)` -> {"X(3, s[2])", "M(1, 0)"}.
inline std::vector<std::string> split_commands(const std::string& seq) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : seq) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ' ' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// Splits a standard paper-order sequence into its correction, measurement
/// and entanglement blocks.
struct Blocks {
  std::vector<std::string> corrections, measurements, entanglements;
};

inline Blocks blocks(const std::string& seq) {
  Blocks b;
  for (const auto& c : split_commands(seq)) {
    switch (c[0]) {
      case 'E': b.entanglements.push_back(c); break;
      case 'M': b.measurements.push_back(c); break;
      default: b.corrections.push_back(c); break;
    }
  }
  return b;
}

inline bool same_multiset(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline bool matches(const Entry& e, const std::string& actual) {
  if (e.compare == "exact") return split_commands(actual) == split_commands(e.sequence);
  const Blocks want = blocks(e.sequence);
  const Blocks got = blocks(actual);
  return got.measurements == want.measurements &&
         same_multiset(got.corrections, want.corrections) &&
         same_multiset(got.entanglements, want.entanglements);
}

inline mbqc::Angle alpha() { return mbqc::Angle::pi_fraction(1, 4); }
inline mbqc::Angle beta() { return mbqc::Angle::pi_fraction(1, 3); }
inline mbqc::Angle gamma() { return mbqc::Angle::pi_fraction(1, 5); }
inline mbqc::Angle delta() { return mbqc::Angle::pi_fraction(2, 7); }

/// The wild library pattern a golden is about.
inline mbqc::Pattern source(const std::string& name) {
  namespace lib = mbqc::library;
  if (name == "teleport00") return lib::teleport({}, {});
  if (name == "teleport") return lib::teleport(alpha(), beta());
  if (name == "rx") return lib::rx(alpha());
  if (name == "rz") return lib::rz(alpha());
  if (name == "rz5") return lib::rz_euler(alpha());
  if (name == "p_half") return lib::p_half();
  if (name == "rotation") return lib::rotation(alpha(), beta(), gamma());
  if (name == "cnot") return lib::cnot();
  if (name.rfind("ghz", 0) == 0) return lib::ghz(std::stoi(name.substr(3)));
  if (name.rfind("cu", 0) == 0) return lib::controlled_u(alpha(), beta(), gamma(), delta());
  throw std::runtime_error("no source for golden " + name);
}

inline mbqc::Pattern rewritten(const Entry& e) {
  const mbqc::Pattern wild = source(e.name);
  if (e.rewrite == "extended") return mbqc::standardize_extended(wild).pattern;
  const mbqc::Pattern standard = mbqc::standardize(wild).pattern;
  if (e.rewrite == "pauli") return mbqc::pauli_eliminate(standard);
  return standard;
}

/// The golden sequence as a pattern over the same interface as `like`.
inline mbqc::Pattern as_pattern(const Entry& e, const mbqc::Pattern& like) {
  std::string ids[3];
  const std::vector<mbqc::QubitId>* lists[3] = {&like.space(), &like.inputs(), &like.outputs()};
  for (int k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < lists[k]->size(); ++i) {
      ids[k] += (i ? ", " : "") + (*lists[k])[i].label();
    }
  }
  const std::string doc = "pattern g { space: " + ids[0] + "; input: " + ids[1] +
                          "; output: " + ids[2] + "; paper_seq: " + e.sequence + "; }";
  return mbqc::dsl::parse(doc).pattern;
}

}  // namespace golden
