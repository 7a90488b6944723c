#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace spinsim {

/// Pure state of an n-qubit register. Basis index convention: site 0 is the
/// most significant bit of the computational-basis index, shared by every
/// module in the library.
class StateVector {
 public:
  /// |0...0>
  explicit StateVector(int nqubits);

  static StateVector basis_state(int nqubits, std::uint64_t index);
  /// Validates normalization within 1e-10 unless `renormalize` is set.
  static StateVector from_amplitudes(int nqubits, Eigen::VectorXcd amplitudes,
                                     bool renormalize = false);

  int nqubits() const { return nqubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd& mutable_amplitudes() { return amplitudes_; }

  double norm() const { return amplitudes_.norm(); }
  /// |<this|other>|^2 — the state-equality metric (global phase ignored).
  double fidelity(const StateVector& other) const;

 private:
  int nqubits_;
  Eigen::VectorXcd amplitudes_;
};

/// Mixed state. Construction validates Hermiticity (1e-10), unit trace
/// (1e-8) and spectrum >= -1e-8.
class DensityMatrix {
 public:
  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix from_matrix(int nqubits, Eigen::MatrixXcd entries,
                                   bool validate = true);

  int nqubits() const { return nqubits_; }
  Eigen::Index dim() const { return entries_.size() ? entries_.rows() : 0; }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  Eigen::MatrixXcd& mutable_entries() { return entries_; }

  double trace_real() const { return entries_.trace().real(); }
  double purity() const { return (entries_ * entries_).trace().real(); }
  void validate() const;

 private:
  DensityMatrix(int nqubits, Eigen::MatrixXcd entries)
      : nqubits_(nqubits), entries_(std::move(entries)) {}
  int nqubits_;
  Eigen::MatrixXcd entries_;
};

struct CollapseChannel {
  enum class Kind { relaxation, dephasing };
  Kind kind;
  int site;
  double rate;  // 1/s

  CollapseChannel(Kind k, int s, double r);
};

/// Relaxation + pure-dephasing channels for one qubit. The pure dephasing
/// rate is 1/T2* - 1/(2 T1), clamped at zero.
std::vector<CollapseChannel> channels_from_coherence(int site, double t1, double t2_star);

}  // namespace spinsim
