#include "mbqc/qubit.hpp"

#include <cctype>
#include <stdexcept>

namespace mbqc {

QubitId::QubitId(std::int64_t index) : QubitId(std::string_view(std::to_string(index))) {
  if (index < 0) {
    throw std::invalid_argument("qubit index must be nonnegative");
  }
}

QubitId::QubitId(std::string_view label) : label_(label) {
  if (!is_valid_label(label)) {
    throw std::invalid_argument("invalid qubit label '" + std::string(label) + "'");
  }
  while (digits_ < label_.size() && std::isdigit(static_cast<unsigned char>(label_[digits_]))) {
    ++digits_;
  }
  numeric_ = digits_ > 0;
  if (numeric_) {
    // Labels longer than 18 digits fall back to lexicographic order of the digits.
    if (digits_ <= 18) {
      number_ = std::stoull(label_.substr(0, digits_));
    } else {
      number_ = UINT64_MAX;
    }
  }
}

bool QubitId::is_valid_label(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
    ++i;
  }
  if (i == 0) {
    return false;
  }
  while (i < text.size() && text[i] == '\'') {
    ++i;
  }
  return i == text.size();
}

std::strong_ordering operator<=>(const QubitId& a, const QubitId& b) {
  if (a.numeric_ != b.numeric_) {
    return a.numeric_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.numeric_) {
    if (auto c = a.number_ <=> b.number_; c != 0) {
      return c;
    }
    if (auto c = a.digits_ <=> b.digits_; c != 0) {
      return c;
    }
  }
  return a.label_ <=> b.label_;
}

std::ostream& operator<<(std::ostream& out, const QubitId& q) { return out << q.label(); }

}  // namespace mbqc
