#include "spinsim/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinsim {

char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

Axis axis_from_char(char c) {
  switch (c) {
    case 'x': case 'X': return Axis::X;
    case 'y': case 'Y': return Axis::Y;
    case 'z': case 'Z': return Axis::Z;
  }
  throw std::invalid_argument(std::string("unknown Pauli axis '") + c + "'");
}

std::string PauliString::to_string() const {
  std::ostringstream out;
  out << coefficient << "*";
  if (factors.empty()) {
    out << "I";
  } else {
    for (const auto& [site, axis] : factors) out << axis_char(axis) << site;
  }
  return out.str();
}

PauliSum::PauliSum(int nqubits) : nqubits_(nqubits) {
  if (nqubits < 1) throw std::invalid_argument("PauliSum: register size must be positive");
}

void PauliSum::add(PauliString term) {
  for (const auto& [site, axis] : term.factors) {
    (void)axis;
    if (site < 0 || site >= nqubits_)
      throw std::out_of_range("PauliSum: site index " + std::to_string(site) +
                              " outside register of " + std::to_string(nqubits_) + " qubits");
  }
  terms_.push_back(std::move(term));
}

void PauliSum::add(const std::map<int, Axis>& factors, double coefficient) {
  add(PauliString{factors, coefficient});
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.nqubits_ != nqubits_)
    throw std::invalid_argument("PauliSum: register size mismatch in +=");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

PauliSum PauliSum::scaled(double factor) const {
  PauliSum out(nqubits_);
  for (const auto& t : terms_) out.add(t.factors, t.coefficient * factor);
  return out;
}

PauliSum PauliSum::merged(double drop_below) const {
  std::map<std::map<int, Axis>, double> acc;
  for (const auto& t : terms_) acc[t.factors] += t.coefficient;
  PauliSum out(nqubits_);
  for (const auto& [factors, coeff] : acc) {
    if (std::abs(coeff) > drop_below) out.add(factors, coeff);
  }
  return out;
}

std::string PauliSum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    out << t.to_string();
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

namespace {

// sigma_a sigma_b = delta_ab I + i eps_abc sigma_c, encoded as (phase, axis).
struct SiteProduct {
  std::complex<double> phase;
  bool identity;
  Axis axis;
};

SiteProduct site_product(Axis a, Axis b) {
  using cd = std::complex<double>;
  if (a == b) return {cd(1, 0), true, Axis::X};
  auto third = [](Axis p, Axis q) {
    int s = 3 - static_cast<int>(p) - static_cast<int>(q);
    return static_cast<Axis>(s);
  };
  // cyclic (X,Y)->+iZ, (Y,Z)->+iX, (Z,X)->+iY; anticyclic gets -i
  int ia = static_cast<int>(a), ib = static_cast<int>(b);
  bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? cd(0, 1) : cd(0, -1), false, third(a, b)};
}

}  // namespace

WeightedString multiply_strings(const PauliString& a, const PauliString& b) {
  WeightedString out;
  out.weight = std::complex<double>(a.coefficient * b.coefficient, 0.0);
  out.factors = a.factors;
  for (const auto& [site, axis_b] : b.factors) {
    auto it = out.factors.find(site);
    if (it == out.factors.end()) {
      out.factors[site] = axis_b;
      continue;
    }
    SiteProduct p = site_product(it->second, axis_b);
    out.weight *= p.phase;
    if (p.identity) {
      out.factors.erase(it);
    } else {
      it->second = p.axis;
    }
  }
  return out;
}

std::vector<WeightedString> commutator(const PauliSum& a, const PauliSum& b) {
  std::map<std::map<int, Axis>, std::complex<double>> acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      WeightedString ab = multiply_strings(ta, tb);
      WeightedString ba = multiply_strings(tb, ta);
      acc[ab.factors] += ab.weight;
      acc[ba.factors] -= ba.weight;
    }
  }
  std::vector<WeightedString> out;
  for (const auto& [factors, weight] : acc) {
    if (std::abs(weight) > 1e-14) out.push_back({weight, factors});
  }
  return out;
}

bool commutes(const PauliSum& a, const PauliSum& b, double tol) {
  for (const auto& term : commutator(a, b)) {
    if (std::abs(term.weight) > tol) return false;
  }
  return true;
}

namespace {

// exp(-i t sigma_a/2) sigma_b exp(+i t sigma_a/2) = cos(t) sigma_b + sin(t) eps_abc sigma_c
struct RotatedPauli {
  double cos_part;
  double sin_part;  // weight of the partner axis
  Axis partner;
};

RotatedPauli rotate_single(Axis rot_axis, Axis p, double theta) {
  if (rot_axis == p) return {1.0, 0.0, p};
  int ia = static_cast<int>(rot_axis), ib = static_cast<int>(p);
  int ic = 3 - ia - ib;
  bool cyclic = (ib - ia + 3) % 3 == 1;  // eps_{a,b,c} = +1 when (a,b,c) cyclic
  double sign = cyclic ? 1.0 : -1.0;
  return {std::cos(theta), sign * std::sin(theta), static_cast<Axis>(ic)};
}

void expand_term(const std::map<int, std::pair<Axis, double>>& rotations,
                 std::map<int, Axis>::const_iterator it,
                 const std::map<int, Axis>& factors_in, std::map<int, Axis> factors_out,
                 double weight, PauliSum& out) {
  if (it == factors_in.end()) {
    out.add(std::move(factors_out), weight);
    return;
  }
  auto [site, axis] = *it;
  auto next = std::next(it);
  auto rot = rotations.find(site);
  if (rot == rotations.end()) {
    factors_out[site] = axis;
    expand_term(rotations, next, factors_in, std::move(factors_out), weight, out);
    return;
  }
  RotatedPauli r = rotate_single(rot->second.first, axis, rot->second.second);
  if (std::abs(r.cos_part) > 1e-15) {
    auto f = factors_out;
    f[site] = axis;
    expand_term(rotations, next, factors_in, std::move(f), weight * r.cos_part, out);
  }
  if (std::abs(r.sin_part) > 1e-15) {
    factors_out[site] = r.partner;
    expand_term(rotations, next, factors_in, std::move(factors_out), weight * r.sin_part, out);
  }
}

}  // namespace

PauliSum conjugate_by_site_rotations(const PauliSum& h,
                                     const std::map<int, std::pair<Axis, double>>& rotations) {
  PauliSum out(h.nqubits());
  for (const auto& term : h.terms()) {
    expand_term(rotations, term.factors.begin(), term.factors, {}, term.coefficient, out);
  }
  return out.merged();
}

bool approx_equal(const PauliSum& a, const PauliSum& b, double tol) {
  if (a.nqubits() != b.nqubits()) return false;
  PauliSum diff = a;
  diff += b.scaled(-1.0);
  for (const auto& t : diff.merged(0.0).terms()) {
    if (std::abs(t.coefficient) > tol) return false;
  }
  return true;
}

}  // namespace spinsim
