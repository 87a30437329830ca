#include "mbqc/rewrite.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

namespace mbqc {

namespace {

constexpr std::array<std::string_view, 12> kRuleNames = {
    "EX",     "EZ",     "MX",     "MZ",     "FREE_E",      "FREE_X",
    "FREE_Z", "SHIFT_SPLIT", "SHIFT_X", "SHIFT_Z", "SHIFT_M", "SHIFT_DROP",
};

using Sequence = std::vector<Command>;

/// The rule matching the two-command window starting at `p`, if any.
std::optional<Rule> pair_rule(const Command& a, const Command& b, RuleSet rules) {
  if (const auto* c = std::get_if<Correct>(&a)) {
    const bool x = c->axis == Axis::X;
    if (const auto* e = std::get_if<Entangle>(&b)) {
      if (e->touches(c->qubit)) {
        return x ? Rule::EX : Rule::EZ;
      }
      return Rule::FreeE;
    }
    if (const auto* m = std::get_if<Measure>(&b)) {
      if (m->qubit() == c->qubit) {
        return x ? Rule::MX : Rule::MZ;
      }
      return x ? Rule::FreeX : Rule::FreeZ;
    }
    if (const auto* s = std::get_if<Shift>(&b)) {
      if (rules == RuleSet::Core && !s->signal.contains(s->qubit)) {
        return x ? Rule::FreeX : Rule::FreeZ;
      }
    }
    return std::nullopt;
  }
  if (const auto* m = std::get_if<Measure>(&a)) {
    if (const auto* e = std::get_if<Entangle>(&b); e && !e->touches(m->qubit())) {
      return Rule::FreeE;
    }
    return std::nullopt;
  }
  if (const auto* s = std::get_if<Shift>(&a)) {
    if (const auto* e = std::get_if<Entangle>(&b)) {
      return e->touches(s->qubit) ? std::nullopt : std::optional(Rule::FreeE);
    }
    if (rules == RuleSet::Core || s->signal.contains(s->qubit)) {
      return std::nullopt;
    }
    if (const auto* c = std::get_if<Correct>(&b)) {
      return c->axis == Axis::X ? Rule::ShiftX : Rule::ShiftZ;
    }
    if (const auto* m = std::get_if<Measure>(&b); m && m->qubit() != s->qubit) {
      return Rule::ShiftM;
    }
  }
  return std::nullopt;
}

bool single_rule_matches(const Sequence& seq, std::size_t p, Rule rule) {
  if (rule == Rule::ShiftSplit) {
    const auto* m = std::get_if<Measure>(&seq[p]);
    return m && m->t().has_support();
  }
  return rule == Rule::ShiftDrop && p + 1 == seq.size() && is_shift(seq[p]);
}

bool is_single_window(Rule rule) { return rule == Rule::ShiftSplit || rule == Rule::ShiftDrop; }

bool matches(const Sequence& seq, std::size_t p, Rule rule) {
  if (p >= seq.size()) {
    return false;
  }
  if (is_single_window(rule)) {
    return single_rule_matches(seq, p, rule);
  }
  if (p + 1 >= seq.size()) {
    return false;
  }
  const bool core = rule != Rule::ShiftX && rule != Rule::ShiftZ && rule != Rule::ShiftM;
  auto r = pair_rule(seq[p], seq[p + 1], core ? RuleSet::Core : RuleSet::Extended);
  return r == rule;
}

/// Right-hand side for `rule` applied to the window at `p`, assumed to match.
Sequence rewritten_window(const Sequence& seq, std::size_t p, Rule rule) {
  const Command& a = seq[p];
  switch (rule) {
    case Rule::EX: {
      const auto& c = std::get<Correct>(a);
      const auto& e = std::get<Entangle>(seq[p + 1]);
      return {e, correct_z(e.partner(c.qubit), c.signal), c};
    }
    case Rule::EZ:
      return {seq[p + 1], a};
    case Rule::MX:
    case Rule::MZ: {
      const auto& c = std::get<Correct>(a);
      const auto& m = std::get<Measure>(seq[p + 1]);
      if (rule == Rule::MX) {
        return {Measure(m.qubit(), m.angle(), m.s() + c.signal, m.t())};
      }
      return {Measure(m.qubit(), m.angle(), m.s(), m.t() + c.signal)};
    }
    case Rule::FreeE:
      return {seq[p + 1], a};
    case Rule::FreeX:
    case Rule::FreeZ: {
      const auto& c = std::get<Correct>(a);
      if (const auto* s = std::get_if<Shift>(&seq[p + 1])) {
        return {*s, Correct{c.axis, c.qubit, c.signal.substitute(s->qubit, s->signal)}};
      }
      return {seq[p + 1], a};
    }
    case Rule::ShiftSplit: {
      const auto& m = std::get<Measure>(a);
      return {Measure(m.qubit(), m.angle(), m.s()), Shift{m.qubit(), m.t()}};
    }
    case Rule::ShiftX:
    case Rule::ShiftZ: {
      const auto& s = std::get<Shift>(a);
      const auto& c = std::get<Correct>(seq[p + 1]);
      return {Correct{c.axis, c.qubit, c.signal.substitute(s.qubit, s.signal)}, a};
    }
    case Rule::ShiftM: {
      const auto& s = std::get<Shift>(a);
      const auto& m = std::get<Measure>(seq[p + 1]);
      return {Measure(m.qubit(), m.angle(), m.s().substitute(s.qubit, s.signal),
                      m.t().substitute(s.qubit, s.signal)),
              a};
    }
    case Rule::ShiftDrop:
      return {};
  }
  return {};
}

/// Rewrites in place and returns the step record.
RewriteStep rewrite_at(Sequence& seq, std::size_t p, Rule rule) {
  if (!matches(seq, p, rule)) {
    throw NoMatchError(std::string(rule_name(rule)) + " does not match at position " +
                       std::to_string(p));
  }
  const std::size_t width = is_single_window(rule) ? 1 : 2;
  RewriteStep step{rule, p, Sequence(seq.begin() + p, seq.begin() + p + width), {}};
  step.after = rewritten_window(seq, p, rule);
  if (step.after.size() == width) {
    std::copy(step.after.begin(), step.after.end(), seq.begin() + p);
  } else {
    seq.erase(seq.begin() + p, seq.begin() + p + width);
    seq.insert(seq.begin() + p, step.after.begin(), step.after.end());
  }
  return step;
}

class StepBudget {
 public:
  explicit StepBudget(std::size_t n) : limit_(step_ceiling(n)) {}
  void spend() {
    if (++used_ > limit_) {
      throw std::logic_error("internal error: rewriting exceeded " + std::to_string(limit_) +
                             " steps");
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

void core_normalize(Sequence& seq, std::vector<RewriteStep>& trace, StepBudget& budget) {
  std::size_t p = 0;
  while (p + 1 < seq.size()) {
    auto rule = pair_rule(seq[p], seq[p + 1], RuleSet::Core);
    if (!rule) {
      ++p;
      continue;
    }
    trace.push_back(rewrite_at(seq, p, *rule));
    budget.spend();
    p = p > 0 ? p - 1 : 0;
  }
}

/// Moves the shift at `p` to the end of the sequence and drops it.
void flush_shift(Sequence& seq, std::size_t p, std::vector<RewriteStep>& trace,
                 StepBudget& budget) {
  while (p + 1 < seq.size()) {
    auto rule = pair_rule(seq[p], seq[p + 1], RuleSet::Extended);
    if (!rule || *rule == Rule::FreeE) {
      // A shift blocked by a command it cannot pass stays in place.
      return;
    }
    trace.push_back(rewrite_at(seq, p, *rule));
    budget.spend();
    ++p;
  }
  trace.push_back(rewrite_at(seq, p, Rule::ShiftDrop));
}

}  // namespace

std::string_view rule_name(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (kRuleNames[i] == name) {
      return static_cast<Rule>(i);
    }
  }
  return std::nullopt;
}

std::vector<Redex> applicable_redexes(const Pattern& p, RuleSet rules) {
  const Sequence& seq = p.sequence();
  std::vector<Redex> out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (rules == RuleSet::Extended) {
      for (Rule r : {Rule::ShiftSplit, Rule::ShiftDrop}) {
        if (single_rule_matches(seq, k, r)) {
          out.push_back({r, k});
        }
      }
    }
    if (k + 1 < seq.size()) {
      if (auto r = pair_rule(seq[k], seq[k + 1], rules)) {
        out.push_back({*r, k});
      }
    }
  }
  return out;
}

Pattern apply_rule(const Pattern& p, Rule rule, std::size_t position) {
  Sequence seq = p.sequence();
  rewrite_at(seq, position, rule);
  return p.with_sequence(std::move(seq));
}

Pattern replay(const Pattern& p, const std::vector<RewriteStep>& trace) {
  Sequence seq = p.sequence();
  for (const auto& step : trace) {
    rewrite_at(seq, step.position, step.rule);
  }
  return p.with_sequence(std::move(seq));
}

Standardization standardize(const Pattern& p) {
  require_valid(p);
  Sequence seq = p.sequence();
  std::vector<RewriteStep> trace;
  StepBudget budget(seq.size());
  core_normalize(seq, trace, budget);
  return {p.with_sequence(std::move(seq)), std::move(trace)};
}

Standardization standardize_extended(const Pattern& p) {
  require_valid(p);
  Sequence seq = p.sequence();
  std::vector<RewriteStep> trace;
  StepBudget budget(seq.size());
  core_normalize(seq, trace, budget);

  // Shifts already present go first, rightmost first, so a travelling shift
  // never meets another one.
  for (std::size_t k = seq.size(); k-- > 0;) {
    if (is_shift(seq[k])) {
      flush_shift(seq, k, trace, budget);
    }
  }

  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (single_rule_matches(seq, k, Rule::ShiftSplit)) {
      trace.push_back(rewrite_at(seq, k, Rule::ShiftSplit));
      budget.spend();
      flush_shift(seq, k + 1, trace, budget);
    }
  }
  return {p.with_sequence(std::move(seq)), std::move(trace)};
}

bool is_standard(const Pattern& p) { return applicable_redexes(p, RuleSet::Core).empty(); }

Pattern random_order_standardize(const Pattern& p, std::uint64_t seed) {
  require_valid(p);
  std::mt19937_64 rng(seed);
  Pattern current = p;
  StepBudget budget(p.size());
  while (true) {
    auto redexes = applicable_redexes(current, RuleSet::Core);
    if (redexes.empty()) {
      return current;
    }
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    const Redex r = redexes[pick(rng)];
    current = apply_rule(current, r.rule, r.position);
    budget.spend();
  }
}

TerminationMeasure termination_measure(const std::vector<Command>& sequence) {
  TerminationMeasure d;
  const std::uint64_t n = sequence.size();
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::uint64_t position = k + 1;
    if (is_entangle(sequence[k])) {
      d.entangle_sum += position;
    } else if (is_correct(sequence[k])) {
      d.correction_sum += n - position;
    }
  }
  return d;
}

TerminationMeasure termination_measure(const Pattern& p) {
  return termination_measure(p.sequence());
}

std::uint64_t step_ceiling(std::size_t n) {
  const std::uint64_t m = n;
  return 16 * m * m * m + 64;
}

std::string format_trace(const std::vector<RewriteStep>& trace) {
  std::ostringstream out;
  auto window = [&](const std::vector<Command>& w) {
    if (w.empty()) {
      out << "()";
    }
    for (std::size_t i = w.size(); i-- > 0;) {
      out << to_string(w[i]) << (i > 0 ? " " : "");
    }
  };
  for (const auto& step : trace) {
    out << rule_name(step.rule) << " @ " << step.position << ": ";
    window(step.before);
    out << " => ";
    window(step.after);
    out << '\n';
  }
  return out.str();
}

}  // namespace mbqc
