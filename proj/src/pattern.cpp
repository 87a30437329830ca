#include "mbqc/pattern.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mbqc {

namespace {

bool has_duplicates(std::vector<QubitId> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

std::set<QubitId> as_set(const std::vector<QubitId>& v) { return {v.begin(), v.end()}; }

std::string join(const std::vector<QubitId>& v) {
  std::string out;
  for (const auto& q : v) {
    out += (out.empty() ? "" : ",") + q.label();
  }
  return "{" + out + "}";
}

}  // namespace

Pattern::Pattern(std::vector<QubitId> space, std::vector<QubitId> inputs,
                 std::vector<QubitId> outputs, std::vector<Command> sequence)
    : space_(std::move(space)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      sequence_(std::move(sequence)) {
  std::sort(space_.begin(), space_.end());
  space_.erase(std::unique(space_.begin(), space_.end()), space_.end());
  if (has_duplicates(inputs_)) {
    throw PatternError("input list has repeated qubits");
  }
  if (has_duplicates(outputs_)) {
    throw PatternError("output list has repeated qubits");
  }
  for (const auto& q : inputs_) {
    if (!contains(q)) {
      throw PatternError("input " + q.label() + " is not in the computation space");
    }
  }
  for (const auto& q : outputs_) {
    if (!contains(q)) {
      throw PatternError("output " + q.label() + " is not in the computation space");
    }
  }
  for (std::size_t k = 0; k < sequence_.size(); ++k) {
    for (const auto& q : mentioned_qubits(sequence_[k])) {
      if (!contains(q)) {
        throw PatternError("command " + std::to_string(k) + " (" + to_string(sequence_[k]) +
                           ") mentions qubit " + q.label() + " outside the computation space");
      }
    }
  }
}

bool Pattern::contains(const QubitId& q) const {
  return std::binary_search(space_.begin(), space_.end(), q);
}

bool Pattern::is_output(const QubitId& q) const {
  return std::find(outputs_.begin(), outputs_.end(), q) != outputs_.end();
}

Pattern Pattern::with_sequence(std::vector<Command> sequence) const {
  Pattern p = *this;
  p.sequence_ = std::move(sequence);
  return p;
}

std::string ValidityReport::summary() const {
  std::ostringstream out;
  auto line = [&](const char* name, const ConditionResult& r) {
    out << name << ' ' << (r.passed ? "pass" : "FAIL");
    if (!r.passed) {
      if (r.index) {
        out << " at command " << *r.index;
      }
      out << " (" << r.detail << ")";
    }
  };
  line("D0", d0);
  out << "; ";
  line("D1", d1);
  out << "; ";
  line("D2", d2);
  out << "; EMC " << (emc ? "pass" : "FAIL");
  return out.str();
}

ValidityReport validate(const Pattern& p) {
  ValidityReport report;
  std::set<QubitId> measured;
  auto fail = [](ConditionResult& r, std::size_t k, std::string detail) {
    if (r.passed) {
      r.passed = false;
      r.index = k;
      r.detail = std::move(detail);
    }
  };
  std::vector<std::size_t> measured_at;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Command& c = p.sequence()[k];
    for (const auto& s : signals_of(c)) {
      for (const auto& q : s.support()) {
        if (!measured.contains(q)) {
          fail(report.d0, k, "reads outcome of " + q.label() + " before it is measured");
        }
      }
    }
    if (const auto* sh = std::get_if<Shift>(&c); sh && !measured.contains(sh->qubit)) {
      fail(report.d0, k, "shifts outcome of " + sh->qubit.label() + " before it is measured");
    }
    for (const auto& q : quantum_qubits(c)) {
      if (measured.contains(q)) {
        fail(report.d1, k, "acts on qubit " + q.label() + " after its measurement");
      }
    }
    if (const auto* m = std::get_if<Measure>(&c)) {
      measured.insert(m->qubit());
      if (p.is_output(m->qubit())) {
        fail(report.d2, k, "measures output qubit " + m->qubit().label());
      }
    }
  }
  if (report.d2.passed) {
    for (const auto& q : p.space()) {
      if (!p.is_output(q) && !measured.contains(q)) {
        report.d2.passed = false;
        report.d2.detail = "non-output qubit " + q.label() + " is never measured";
        break;
      }
    }
  }
  report.emc = is_emc(p);
  return report;
}

void require_valid(const Pattern& p) {
  ValidityReport report = validate(p);
  if (!report.runnable()) {
    throw InvalidPatternError(report);
  }
}

bool is_emc(const Pattern& p) {
  // 0: entanglement block, 1: measurement block, 2: correction block.
  int phase = 0;
  for (const auto& c : p.sequence()) {
    const int block = is_entangle(c) ? 0 : is_correct(c) ? 2 : 1;
    if (block < phase) {
      return false;
    }
    phase = block;
  }
  return true;
}

Pattern compose(const Pattern& second, const Pattern& first) {
  std::vector<QubitId> shared;
  std::set_intersection(first.space().begin(), first.space().end(), second.space().begin(),
                        second.space().end(), std::back_inserter(shared));
  const std::set<QubitId> shared_set(shared.begin(), shared.end());
  if (shared_set != as_set(first.outputs()) || shared_set != as_set(second.inputs())) {
    throw PatternError("cannot compose: shared qubits " + join(shared) + ", outputs of first " +
                       join(first.outputs()) + ", inputs of second " + join(second.inputs()));
  }
  std::vector<QubitId> space = first.space();
  space.insert(space.end(), second.space().begin(), second.space().end());
  std::vector<Command> seq = first.sequence();
  seq.insert(seq.end(), second.sequence().begin(), second.sequence().end());
  return Pattern(std::move(space), first.inputs(), second.outputs(), std::move(seq));
}

Pattern tensor(const Pattern& a, const Pattern& b) {
  std::vector<QubitId> shared;
  std::set_intersection(a.space().begin(), a.space().end(), b.space().begin(), b.space().end(),
                        std::back_inserter(shared));
  if (!shared.empty()) {
    throw PatternError("cannot tensor: spaces overlap on " + join(shared));
  }
  auto concat = [](std::vector<QubitId> x, const std::vector<QubitId>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  std::vector<Command> seq = a.sequence();
  seq.insert(seq.end(), b.sequence().begin(), b.sequence().end());
  return Pattern(concat(a.space(), b.space()), concat(a.inputs(), b.inputs()),
                 concat(a.outputs(), b.outputs()), std::move(seq));
}

Pattern rename(const Pattern& p, const QubitMap& f) {
  std::set<QubitId> image;
  for (const auto& q : p.space()) {
    auto it = f.find(q);
    if (it == f.end()) {
      throw PatternError("renaming is undefined on qubit " + q.label());
    }
    if (!image.insert(it->second).second) {
      throw PatternError("renaming is not injective: two qubits map to " + it->second.label());
    }
  }
  auto map_all = [&](const std::vector<QubitId>& v) {
    std::vector<QubitId> out;
    out.reserve(v.size());
    for (const auto& q : v) {
      out.push_back(f.at(q));
    }
    return out;
  };
  std::vector<Command> seq;
  seq.reserve(p.size());
  for (const auto& c : p.sequence()) {
    seq.push_back(renamed(c, f));
  }
  return Pattern(map_all(p.space()), map_all(p.inputs()), map_all(p.outputs()), std::move(seq));
}

Pattern rename(const Pattern& p, const std::vector<QubitId>& targets) {
  QubitMap f;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    f.emplace(QubitId(static_cast<std::int64_t>(k + 1)), targets[k]);
  }
  return rename(p, f);
}

Pattern rename(const Pattern& p, std::initializer_list<QubitId> targets) {
  return rename(p, std::vector<QubitId>(targets));
}

}  // namespace mbqc
