#pragma once

#include <Eigen/Dense>

#include <complex>
#include <utility>

namespace areawalk {

using ComplexMatrix = Eigen::MatrixXcd;

/// Casimir phase k of u^q = e^{iqk_x}, v^q = e^{iqk_y}; only the two sectors
/// with a reduced q-dimensional representation are supported.
enum class Casimir { zero, pi_over_q };

/// q-dimensional representation of vu = Q^2 uv, u sigma = sigma u^{-1},
/// v sigma = sigma v^{-1} on periodic basis states |j>, j = -(q/2) .. .
///
/// Matrix index m holds |j> with j = m - q/2 (integer division), so for odd
/// q = 2s+1 the pivot state |0> sits in the middle.
struct TorusRepresentation {
  int p = 1;
  int q = 3;
  Casimir casimir_x = Casimir::zero;
  Casimir casimir_y = Casimir::zero;
  int pivot = 0;
  /// Q with Q^2 = e^{2 pi i p / q}; for odd q the specific root e^{2 pi i p (s+1) / q}.
  std::complex<double> root_q;
  ComplexMatrix u, v, sigma;

  int s() const { return (q - 1) / 2; }
  int dim() const { return static_cast<int>(u.rows()); }
  /// Matrix index of basis state |j>, with j taken mod q.
  int index_of(long j) const;
};

/// Builds the q = 2s+1 representation. Throws std::invalid_argument unless
/// s >= 1, p >= 1 and gcd(p, q) == 1.
TorusRepresentation build_rep_q(int p, int s, Casimir kx = Casimir::zero, Casimir ky = Casimir::zero);

/// Same action for any q >= 2 coprime to p, including even q.
TorusRepresentation build_periodic_rep(int p, int q, Casimir kx = Casimir::zero, Casimir ky = Casimir::zero);

/// Smallest r >= 0 with r p = -1 (mod q), i.e. k q - r p = 1 for some k.
int primary_pivot(int p, int q);

/// Generic 2q-dimensional block representation built from the q-dimensional
/// clock and shift pair (u_o, v_o): u = diag(u_o, u_o^{-1}),
/// v = diag(v_o, v_o^{-1}), sigma = [[0, 1], [1, 0]].
struct BlockRepresentation {
  int p = 1;
  int q = 2;
  std::complex<double> q_squared;
  ComplexMatrix u, v, sigma;
};

BlockRepresentation build_rep_2q(int p, int q);

/// Largest entrywise deviations of the defining relations.
struct RelationResiduals {
  double commutation = 0;   // |vu - Q^2 uv|
  double u_reflection = 0;  // |u sigma - sigma u^{-1}|
  double v_reflection = 0;  // |v sigma - sigma v^{-1}|
  double sigma_square = 0;  // |sigma^2 - 1|
  double u_casimir = 0;     // |u^q - e^{iqk_x}|
  double v_casimir = 0;     // |v^q - e^{iqk_y}|
  /// |tr sigma - 1|, |tr u sigma - 1|, |tr v sigma - 1|, |tr vu sigma - Q|;
  /// only meaningful in the zero-Casimir odd-q sector.
  double trace_conditions = 0;

  double max_algebra() const;
};

RelationResiduals relation_residuals(const TorusRepresentation& rep);

/// Same algebra residuals for the block representation (trace_conditions
/// holds the largest |tr X sigma| over X in {1, u, v, vu}).
RelationResiduals relation_residuals(const BlockRepresentation& rep);

enum class HamiltonianForm {
  /// u + u^{-1} + v + v^{-1}
  standard,
  /// (1 + Qu) v + (1 + Qu^{-1}) v^{-1}, obtained from u -> Quv
  off_diagonal,
};

ComplexMatrix hamiltonian(const TorusRepresentation& rep, HamiltonianForm form = HamiltonianForm::standard);
ComplexMatrix hamiltonian(const BlockRepresentation& rep);

/// H^n by repeated multiplication.
ComplexMatrix matrix_power(const ComplexMatrix& h, int n);

/// tr(H^n sigma). Requires zero Casimirs.
std::complex<double> trace_gf(const TorusRepresentation& rep, int n_steps,
                              HamiltonianForm form = HamiltonianForm::standard);

/// (H_+, H_-) = (H (1 + sigma) / 2, H (1 - sigma) / 2) for the standard H.
std::pair<ComplexMatrix, ComplexMatrix> split_pm(const TorusRepresentation& rep);

/// tr(H_+^n) - tr(H_-^n).
std::complex<double> split_trace_difference(const TorusRepresentation& rep, int n_steps);

/// <a| H_od^n |b> for basis states taken mod q.
std::complex<double> matrix_element(const TorusRepresentation& rep, int n_steps, long bra, long ket);

/// <J - I| H_od^n |J + I>. Collects walks ending on k + l = 2I (mod q), each
/// endpoint weighted by Q^{2Jk}.
std::complex<double> matrix_element_paradiagonal(const TorusRepresentation& rep, int n_steps, int I, int J);

/// <s - I| H_od^n |-s + I>. Collects walks ending on k + l = 2I + 1 (mod q).
std::complex<double> matrix_element_odd_paradiagonal(const TorusRepresentation& rep, int n_steps, int I);

/// Traces of sigma, u sigma, v sigma, vu sigma for one representation.
struct SigmaTraces {
  std::complex<double> sigma, u_sigma, v_sigma, vu_sigma;
};

SigmaTraces sigma_traces(const TorusRepresentation& rep);

/// For even q: in every Casimir sector at least one of tr(sigma) and
/// tr(v sigma) vanishes (within 1e-12), so the unit trace conditions can
/// never hold. Returns false when some sector has both nonzero, as for odd q.
bool verify_even_q_vanishing(int p, int q);

}  // namespace areawalk
