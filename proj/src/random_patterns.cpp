#include "mbqc/random_patterns.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mbqc/library.hpp"

namespace mbqc::random {

namespace {

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool coin(std::mt19937_64& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

Signal random_signal(std::mt19937_64& rng, const std::vector<QubitId>& measured) {
  Signal s(coin(rng, 0.2) ? 1 : 0);
  for (const auto& q : measured) {
    if (coin(rng, 0.3)) {
      s += Signal::outcome(q);
    }
  }
  return s;
}

Angle random_angle(std::mt19937_64& rng) {
  if (coin(rng, 0.2)) {
    return Angle::radians(std::uniform_real_distribution<double>(0.0, 6.0)(rng));
  }
  return Angle::pi_fraction(std::uniform_int_distribution<int>(0, 7)(rng), 4);
}

}  // namespace

Pattern wild_pattern(std::mt19937_64& rng, std::size_t length) {
  const std::size_t max_q = std::clamp<std::size_t>(length / 3, 2, 40);
  const std::size_t n_qubits = std::uniform_int_distribution<std::size_t>(2, max_q)(rng);
  std::vector<QubitId> space;
  for (std::size_t k = 1; k <= n_qubits; ++k) {
    space.emplace_back(static_cast<std::int64_t>(k));
  }
  std::vector<QubitId> shuffled = space;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const std::size_t n_out = std::uniform_int_distribution<std::size_t>(1, n_qubits - 1)(rng);
  std::vector<QubitId> outputs(shuffled.begin(), shuffled.begin() + n_out);
  std::set<QubitId> output_set(outputs.begin(), outputs.end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const std::size_t n_in = std::uniform_int_distribution<std::size_t>(0, n_qubits)(rng);
  std::vector<QubitId> inputs(shuffled.begin(), shuffled.begin() + n_in);

  std::vector<QubitId> live = space;
  std::vector<QubitId> measured;
  std::vector<QubitId> pending;  // non-outputs still to measure
  for (const auto& q : space) {
    if (!output_set.contains(q)) {
      pending.push_back(q);
    }
  }
  std::vector<Command> seq;
  while (seq.size() < length) {
    const std::size_t left = length - seq.size();
    const bool must_measure = !pending.empty() && left <= pending.size();
    const int kind = must_measure ? 1 : std::uniform_int_distribution<int>(0, 3)(rng);
    if (kind == 1 && !pending.empty()) {
      const QubitId q = pick(rng, pending);
      seq.push_back(Measure(q, random_angle(rng), random_signal(rng, measured),
                            random_signal(rng, measured)));
      std::erase(pending, q);
      std::erase(live, q);
      measured.push_back(q);
    } else if (kind == 0 && live.size() >= 2) {
      const QubitId a = pick(rng, live);
      QubitId b = pick(rng, live);
      while (b == a) {
        b = pick(rng, live);
      }
      seq.push_back(Entangle(a, b));
    } else {
      const QubitId q = pick(rng, live);
      const Signal s = random_signal(rng, measured);
      seq.push_back(coin(rng) ? correct_x(q, s) : correct_z(q, s));
    }
  }
  if (!pending.empty()) {
    // Promote unmeasured qubits to outputs so D2 holds.
    outputs.insert(outputs.end(), pending.begin(), pending.end());
  }
  return Pattern(space, inputs, outputs, std::move(seq));
}

GeneratorCircuit build_circuit(std::size_t lines, std::vector<Gate> gates) {
  if (lines == 0) {
    throw std::invalid_argument("a circuit needs at least one line");
  }
  std::vector<QubitId> current;
  for (std::size_t k = 1; k <= lines; ++k) {
    current.emplace_back(static_cast<std::int64_t>(k));
  }
  std::int64_t next = static_cast<std::int64_t>(lines) + 1;
  Pattern p = library::identity(current[0]);
  for (std::size_t k = 1; k < lines; ++k) {
    p = tensor(p, library::identity(current[k]));
  }
  auto spectators = [&](std::initializer_list<std::size_t> busy) {
    std::vector<QubitId> out;
    for (std::size_t k = 0; k < lines; ++k) {
      if (std::find(busy.begin(), busy.end(), k) == busy.end()) {
        out.push_back(current[k]);
      }
    }
    return out;
  };
  for (const Gate& g : gates) {
    Pattern step;
    if (g.kind == Gate::J) {
      const QubitId fresh(next++);
      step = rename(library::j(g.angle), {current[g.line], fresh});
      for (const auto& q : spectators({g.line})) {
        step = tensor(step, library::identity(q));
      }
      current[g.line] = fresh;
    } else {
      if (g.line == g.other) {
        throw std::invalid_argument("cz needs two distinct lines");
      }
      step = rename(library::cz(), {current[g.line], current[g.other]});
      for (const auto& q : spectators({g.line, g.other})) {
        step = tensor(step, library::identity(q));
      }
    }
    p = compose(step, p);
  }
  std::vector<QubitId> inputs;
  for (std::size_t k = 1; k <= lines; ++k) {
    inputs.emplace_back(static_cast<std::int64_t>(k));
  }
  return GeneratorCircuit{lines, std::move(gates),
                          Pattern(p.space(), std::move(inputs), current, p.sequence())};
}

GeneratorCircuit generator_circuit(std::mt19937_64& rng, std::size_t max_qubits,
                                   bool pauli_angles) {
  const std::size_t lines =
      std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, max_qubits))(rng);
  const std::size_t budget = max_qubits - lines;
  const std::size_t n_gates = std::uniform_int_distribution<std::size_t>(1, budget + 2)(rng);
  std::vector<Gate> gates;
  std::size_t used = 0;
  for (std::size_t k = 0; k < n_gates; ++k) {
    const bool cz = lines >= 2 && (used == budget || coin(rng, 0.3));
    if (cz) {
      const std::size_t a = std::uniform_int_distribution<std::size_t>(0, lines - 1)(rng);
      std::size_t b = std::uniform_int_distribution<std::size_t>(0, lines - 2)(rng);
      if (b >= a) {
        ++b;
      }
      gates.push_back({Gate::CZ, a, b, {}});
    } else if (used < budget) {
      Angle angle = pauli_angles
                        ? Angle::pi_fraction(std::uniform_int_distribution<int>(0, 3)(rng), 2)
                    : coin(rng, 0.25)
                        ? Angle::radians(std::uniform_real_distribution<double>(0.0, 6.2)(rng))
                        : Angle::pi_fraction(std::uniform_int_distribution<int>(0, 15)(rng), 8);
      gates.push_back(
          {Gate::J, std::uniform_int_distribution<std::size_t>(0, lines - 1)(rng), 0, angle});
      ++used;
    }
  }
  return build_circuit(lines, std::move(gates));
}

}  // namespace mbqc::random
