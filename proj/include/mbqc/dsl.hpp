#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mbqc/pattern.hpp"

namespace mbqc::dsl {

/// Syntax or semantic error in a pattern document, with a 1-based location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line;
  std::size_t column;
};

struct PatternDocument {
  std::string name;
  Pattern pattern;
};

/// Reads one document:
///
///   pattern <name> {
///     space: <ids>; input: <ids>; output: <ids>;
///     seq: <commands>;          (execution order)
///   }
///
/// `paper_seq:` may replace `seq:` and lists the commands right to left.
/// `#` starts a comment.
PatternDocument parse(std::string_view text);

Angle parse_angle(std::string_view text);
Signal parse_signal(std::string_view text);

enum class Order { Execution, Paper };

/// Inverse of parse. Paper order puts the whole sequence on one
/// `paper_seq:` line.
std::string serialize(const Pattern& p, const std::string& name, Order order = Order::Execution);

/// Commands right to left separated by single spaces, as in `paper_seq:`.
std::string paper_sequence(const Pattern& p);

}  // namespace mbqc::dsl
