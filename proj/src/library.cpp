#include "mbqc/library.hpp"

#include <numbers>
#include <optional>
#include <stdexcept>

namespace mbqc::library {

namespace {

// `p` alongside identities on `spectators`.
Pattern with_identities(Pattern p, const std::vector<QubitId>& spectators) {
  for (const auto& q : spectators) {
    p = tensor(p, identity(q));
  }
  return p;
}

Angle half(const Angle& a) { return a.scaled(1, 2); }

Angle half_pi() { return Angle::pi_fraction(1, 2); }

Matrix cz_matrix() {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = -1.0;
  return m;
}

}  // namespace

Pattern identity(const QubitId& q) { return Pattern({q}, {q}, {q}); }

Pattern plus(const QubitId& q) { return Pattern({q}, {}, {q}); }

Pattern j(const Angle& alpha) {
  return Pattern({1, 2}, {1}, {2},
                 {Entangle(1, 2), Measure(1, -alpha), correct_x(2, Signal::outcome(1))});
}

Pattern cz() { return Pattern({1, 2}, {1, 2}, {1, 2}, {Entangle(1, 2)}); }

Pattern h() { return j(Angle()); }

Pattern teleport(const Angle& alpha, const Angle& beta) {
  return compose(rename(j(beta), {2, 3}), rename(j(alpha), {1, 2}));
}

Pattern rx(const Angle& alpha) { return compose(rename(j(alpha), {2, 3}), rename(h(), {1, 2})); }

Pattern rz(const Angle& alpha) { return compose(rename(h(), {2, 3}), rename(j(alpha), {1, 2})); }

Pattern rz_euler(const Angle& alpha) {
  return compose(rename(h(), {4, 5}), compose(rename(rx(alpha), {2, 3, 4}), rename(h(), {1, 2})));
}

Pattern rotation(const Angle& alpha, const Angle& beta, const Angle& gamma) {
  Pattern p = rename(j(gamma), {1, 2});
  p = compose(rename(j(beta), {2, 3}), p);
  p = compose(rename(j(alpha), {3, 4}), p);
  return compose(rename(j(Angle()), {4, 5}), p);
}

Pattern cnot() {
  const Pattern first = tensor(identity(1), rename(h(), {2, 3}));
  const Pattern middle = rename(cz(), {1, 3});
  const Pattern last = tensor(identity(1), rename(h(), {3, 4}));
  return compose(last, compose(middle, first));
}

Pattern p_half() { return rz(half_pi()); }

QubitId ghz_qubit(int level, bool primed) {
  return QubitId(std::to_string(level) + (primed ? "'" : ""));
}

Pattern ghz(int n) {
  if (n < 2) {
    throw std::invalid_argument("ghz needs n >= 2, got " + std::to_string(n));
  }
  // Every level starts as a fresh |+>; level k > 1 is then entangled with the
  // previous output and pushed through H onto its primed twin.
  std::vector<QubitId> fresh;
  for (int k = 1; k <= n; ++k) {
    fresh.push_back(ghz_qubit(k, false));
  }
  Pattern p = plus(fresh[0]);
  for (int k = 1; k < n; ++k) {
    p = tensor(p, plus(fresh[k]));
  }
  std::vector<QubitId> done = {fresh[0]};
  for (int k = 2; k <= n; ++k) {
    const QubitId prev = done.back();
    const QubitId here = ghz_qubit(k, false);
    const QubitId twin = ghz_qubit(k, true);
    std::vector<QubitId> others(done.begin(), done.end() - 1);
    others.insert(others.end(), fresh.begin() + k, fresh.end());
    p = compose(with_identities(rename(cz(), {prev, here}), others), p);
    others.push_back(prev);
    p = compose(with_identities(rename(h(), {here, twin}), others), p);
    done.push_back(twin);
  }
  return Pattern(p.space(), {}, done, p.sequence());
}

ControlledUAngles controlled_u_angles(const Angle& alpha, const Angle& beta, const Angle& gamma,
                                      const Angle& delta) {
  ControlledUAngles a{Angle(), beta, half(beta), half(gamma), half(delta)};
  a.alpha_prime = alpha + a.half_beta + a.half_gamma + a.half_delta;
  return a;
}

namespace {

// One gate of the controlled-U decomposition, in application order.
struct Gate {
  enum Kind { J1, J2, CZ } kind;
  Angle angle;
};

std::vector<Gate> controlled_u_gates(const ControlledUAngles& a) {
  const Angle hp = half_pi();
  return {
      {Gate::J2, a.half_delta - a.half_beta - hp},
      {Gate::CZ, {}},
      {Gate::J2, Angle()},
      {Gate::J2, -hp - a.half_delta - a.half_beta},
      {Gate::J2, a.half_gamma},
      {Gate::J2, hp},
      {Gate::CZ, {}},
      {Gate::J2, Angle()},
      {Gate::J2, -hp},
      {Gate::J2, -a.half_gamma},
      {Gate::J2, a.beta.plus_pi()},
      {Gate::J2, Angle()},
      {Gate::J1, a.alpha_prime},
      {Gate::J1, Angle()},
  };
}

}  // namespace

Pattern controlled_u(const Angle& alpha, const Angle& beta, const Angle& gamma,
                     const Angle& delta) {
  const std::vector<QubitId> control = {"A", "B", "C"};
  const std::vector<QubitId> target = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"};
  std::size_t c = 0;
  std::size_t t = 0;
  std::optional<Pattern> p;
  for (const Gate& g : controlled_u_gates(controlled_u_angles(alpha, beta, gamma, delta))) {
    Pattern step;
    switch (g.kind) {
      case Gate::J1:
        step = tensor(rename(j(g.angle), {control[c], control[c + 1]}), identity(target[t]));
        ++c;
        break;
      case Gate::J2:
        step = tensor(identity(control[c]), rename(j(g.angle), {target[t], target[t + 1]}));
        ++t;
        break;
      case Gate::CZ:
        step = rename(cz(), {control[c], target[t]});
        break;
    }
    p = p ? compose(step, *p) : step;
  }
  return *p;
}

Matrix j_matrix(const Angle& alpha) {
  const Complex e = std::polar(1.0, alpha.value());
  Matrix m(2, 2);
  m << 1.0, e, 1.0, -e;
  return m * (1.0 / std::numbers::sqrt2);
}

Matrix controlled_u_matrix(const Angle& alpha, const Angle& beta, const Angle& gamma,
                           const Angle& delta) {
  const Matrix id = Matrix::Identity(2, 2);
  Matrix u = Matrix::Identity(4, 4);
  for (const Gate& g : controlled_u_gates(controlled_u_angles(alpha, beta, gamma, delta))) {
    switch (g.kind) {
      case Gate::J1:
        u = kron(id, j_matrix(g.angle)) * u;
        break;
      case Gate::J2:
        u = kron(j_matrix(g.angle), id) * u;
        break;
      case Gate::CZ:
        u = cz_matrix() * u;
        break;
    }
  }
  return u;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {"j",   "cz",       "h",    "teleport",
                                               "rx",  "rz",       "rz5",  "rotation",
                                               "cnot", "p_half",  "ghz",  "cu"};
  return all;
}

Pattern by_name(const std::string& name, const std::vector<Angle>& angles, int n) {
  auto arg = [&](std::size_t k) { return k < angles.size() ? angles[k] : Angle(); };
  if (name == "j") return j(arg(0));
  if (name == "cz") return cz();
  if (name == "h") return h();
  if (name == "teleport") return teleport(arg(0), arg(1));
  if (name == "rx") return rx(arg(0));
  if (name == "rz") return rz(arg(0));
  if (name == "rz5") return rz_euler(arg(0));
  if (name == "rotation") return rotation(arg(0), arg(1), arg(2));
  if (name == "cnot") return cnot();
  if (name == "p_half") return p_half();
  if (name == "ghz") return ghz(n);
  if (name == "cu") return controlled_u(arg(0), arg(1), arg(2), arg(3));
  throw std::invalid_argument("unknown library pattern '" + name + "'");
}

}  // namespace mbqc::library
