#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spinsim {

inline constexpr int kMaxQubits = 12;

enum class Axis : std::uint8_t { X, Y, Z };

char axis_char(Axis a);
Axis axis_from_char(char c);

/// A weighted product of single-site Pauli operators. Sites not present in
/// `factors` carry the identity; an empty map is the identity string. The
/// coefficient is real so that a string materializes to a Hermitian matrix.
struct PauliString {
  std::map<int, Axis> factors;
  double coefficient = 1.0;

  PauliString() = default;
  PauliString(std::map<int, Axis> f, double c) : factors(std::move(f)), coefficient(c) {}

  bool is_identity() const { return factors.empty(); }
  std::string to_string() const;
};

/// Hermitian operator held as a sum of real-weighted Pauli strings.
class PauliSum {
 public:
  explicit PauliSum(int nqubits);

  int nqubits() const { return nqubits_; }
  const std::vector<PauliString>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Appends a term after validating its site indices against the register.
  void add(PauliString term);
  void add(const std::map<int, Axis>& factors, double coefficient);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum scaled(double factor) const;

  /// Combines like terms and drops terms with negligible weight.
  PauliSum merged(double drop_below = 1e-14) const;

  std::string to_string() const;

 private:
  int nqubits_;
  std::vector<PauliString> terms_;
};

/// Complex-weighted string, the carrier for symbolic products and
/// commutators (which leave the real-coefficient Hermitian form).
struct WeightedString {
  std::complex<double> weight;
  std::map<int, Axis> factors;
};

/// Site-wise symbolic product of two Pauli strings.
WeightedString multiply_strings(const PauliString& a, const PauliString& b);

/// Symbolic commutator [A, B]; returned terms are merged, near-zero terms
/// dropped. Anti-Hermitian, so weights come out imaginary.
std::vector<WeightedString> commutator(const PauliSum& a, const PauliSum& b);

/// True when every term of [A, B] cancels symbolically.
bool commutes(const PauliSum& a, const PauliSum& b, double tol = 1e-12);

/// Single-site rotation applied to a string set: R H R^dagger with
/// R = prod_s exp(-i theta_s (axis_s . sigma_s) / 2), evaluated in the Pauli
/// basis without materialization.
PauliSum conjugate_by_site_rotations(const PauliSum& h,
                                     const std::map<int, std::pair<Axis, double>>& rotations);

/// Equality of the merged term content within `tol` per coefficient.
bool approx_equal(const PauliSum& a, const PauliSum& b, double tol = 1e-12);

}  // namespace spinsim
