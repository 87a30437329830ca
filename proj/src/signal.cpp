#include "mbqc/signal.hpp"

#include <algorithm>
#include <iterator>

namespace mbqc {

Signal::Signal(int constant, std::vector<QubitId> support) : constant_(constant & 1) {
  // Repeated labels cancel in pairs.
  std::sort(support.begin(), support.end());
  for (std::size_t i = 0; i < support.size();) {
    std::size_t j = i;
    while (j < support.size() && support[j] == support[i]) {
      ++j;
    }
    if ((j - i) % 2 == 1) {
      support_.push_back(support[i]);
    }
    i = j;
  }
}

bool Signal::contains(const QubitId& q) const {
  return std::binary_search(support_.begin(), support_.end(), q);
}

int Signal::evaluate(const OutcomeMap& outcomes) const {
  int value = constant_;
  for (const auto& q : support_) {
    auto it = outcomes.find(q);
    if (it == outcomes.end()) {
      throw MissingOutcomeError(q);
    }
    value ^= it->second & 1;
  }
  return value;
}

Signal Signal::substitute(const QubitId& q, const Signal& t) const {
  return contains(q) ? *this + t : *this;
}

Signal Signal::renamed(const QubitMap& f) const {
  std::vector<QubitId> support;
  support.reserve(support_.size());
  for (const auto& q : support_) {
    support.push_back(f.at(q));
  }
  return Signal(constant_, std::move(support));
}

Signal& Signal::operator+=(const Signal& other) {
  constant_ ^= other.constant_;
  std::vector<QubitId> merged;
  merged.reserve(support_.size() + other.support_.size());
  std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(),
                                other.support_.end(), std::back_inserter(merged));
  support_ = std::move(merged);
  return *this;
}

std::string to_string(const Signal& s) {
  std::string out;
  if (s.constant() != 0 || s.support().empty()) {
    out = std::to_string(s.constant());
  }
  for (const auto& q : s.support()) {
    if (!out.empty()) {
      out += " + ";
    }
    out += "s[" + q.label() + "]";
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const Signal& s) { return out << to_string(s); }

}  // namespace mbqc
