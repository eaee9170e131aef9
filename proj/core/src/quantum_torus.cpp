#include "areawalk/quantum_torus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "areawalk/laurent.hpp"

namespace areawalk {

namespace {

using cd = std::complex<double>;

void check_parameters(int p, int q) {
  if (q < 2) throw std::invalid_argument("torus dimension q must be >= 2, got " + std::to_string(q));
  if (p < 1) throw std::invalid_argument("torus parameter p must be >= 1, got " + std::to_string(p));
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("torus parameters require gcd(p, q) == 1, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
  }
}

int casimir_numerator(Casimir k) { return k == Casimir::zero ? 0 : 1; }

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void require_zero_casimirs(const TorusRepresentation& rep, const char* what) {
  if (rep.casimir_x != Casimir::zero || rep.casimir_y != Casimir::zero) {
    throw std::invalid_argument(std::string(what) + " requires zero Casimirs");
  }
}

}  // namespace

int TorusRepresentation::index_of(long j) const {
  const long shifted = (j + q / 2) % q;
  return static_cast<int>(shifted < 0 ? shifted + q : shifted);
}

int primary_pivot(int p, int q) {
  check_parameters(p, q);
  for (int r = 0; r < q; ++r) {
    if ((static_cast<long>(r) * p + 1) % q == 0) return r;
  }
  throw std::logic_error("primary_pivot: no solution despite gcd(p, q) == 1");
}

TorusRepresentation build_periodic_rep(int p, int q, Casimir kx, Casimir ky) {
  check_parameters(p, q);
  TorusRepresentation rep;
  rep.p = p;
  rep.q = q;
  rep.casimir_x = kx;
  rep.casimir_y = ky;
  rep.pivot = kx == Casimir::zero ? 0 : primary_pivot(p, q);
  rep.root_q = q % 2 == 1 ? root_of_unity(static_cast<std::int64_t>(p) * ((q + 1) / 2), q) : root_of_unity(p, 2 * q);

  const std::int64_t a = casimir_numerator(kx);  // k_x = pi a / q
  const std::int64_t b = casimir_numerator(ky);  // k_y = pi b / q
  const std::int64_t two_q = 2 * q;

  rep.u = ComplexMatrix::Zero(q, q);
  rep.v = ComplexMatrix::Zero(q, q);
  rep.sigma = ComplexMatrix::Zero(q, q);
  for (int m = 0; m < q; ++m) {
    const long j = m - q / 2;
    // u|j> = e^{i(k_x + 2 pi p j / q)} |j>
    rep.u(m, m) = root_of_unity(a + 2 * static_cast<std::int64_t>(p) * j, two_q);
    // v|j> = e^{i k_y} |j - 1>
    rep.v(rep.index_of(j - 1), m) = root_of_unity(b, two_q);
    // sigma|j> = e^{i k_y (2j - r)} |r - j>
    rep.sigma(rep.index_of(rep.pivot - j), m) = root_of_unity(b * (2 * j - rep.pivot), two_q);
  }
  return rep;
}

TorusRepresentation build_rep_q(int p, int s, Casimir kx, Casimir ky) {
  if (s < 1) throw std::invalid_argument("torus parameter s must be >= 1, got " + std::to_string(s));
  return build_periodic_rep(p, 2 * s + 1, kx, ky);
}

BlockRepresentation build_rep_2q(int p, int q) {
  check_parameters(p, q);
  BlockRepresentation rep;
  rep.p = p;
  rep.q = q;
  rep.q_squared = root_of_unity(p, q);

  ComplexMatrix u0 = ComplexMatrix::Zero(q, q);
  ComplexMatrix v0 = ComplexMatrix::Zero(q, q);
  for (int j = 0; j < q; ++j) {
    u0(j, j) = root_of_unity(static_cast<std::int64_t>(p) * j, q);
    v0((j - 1 + q) % q, j) = 1.0;
  }
  const ComplexMatrix u0_inv = u0.inverse();
  const ComplexMatrix v0_inv = v0.inverse();

  rep.u = ComplexMatrix::Zero(2 * q, 2 * q);
  rep.v = ComplexMatrix::Zero(2 * q, 2 * q);
  rep.sigma = ComplexMatrix::Zero(2 * q, 2 * q);
  rep.u.topLeftCorner(q, q) = u0;
  rep.u.bottomRightCorner(q, q) = u0_inv;
  rep.v.topLeftCorner(q, q) = v0;
  rep.v.bottomRightCorner(q, q) = v0_inv;
  rep.sigma.topRightCorner(q, q) = ComplexMatrix::Identity(q, q);
  rep.sigma.bottomLeftCorner(q, q) = ComplexMatrix::Identity(q, q);
  return rep;
}

double RelationResiduals::max_algebra() const {
  return std::max({commutation, u_reflection, v_reflection, sigma_square, u_casimir, v_casimir});
}

namespace {

RelationResiduals algebra_residuals(const ComplexMatrix& u, const ComplexMatrix& v, const ComplexMatrix& sigma,
                                    cd q_squared, int q, cd u_casimir, cd v_casimir) {
  const auto n = u.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix u_inv = u.inverse();
  const ComplexMatrix v_inv = v.inverse();
  RelationResiduals r;
  r.commutation = max_abs(v * u - q_squared * u * v);
  r.u_reflection = max_abs(u * sigma - sigma * u_inv);
  r.v_reflection = max_abs(v * sigma - sigma * v_inv);
  r.sigma_square = max_abs(sigma * sigma - id);
  r.u_casimir = max_abs(matrix_power(u, q) - u_casimir * id);
  r.v_casimir = max_abs(matrix_power(v, q) - v_casimir * id);
  return r;
}

}  // namespace

RelationResiduals relation_residuals(const TorusRepresentation& rep) {
  const cd q_squared = root_of_unity(rep.p, rep.q);
  // e^{i q k} with k = pi a / q is (-1)^a.
  const cd u_cas = rep.casimir_x == Casimir::zero ? cd(1.0) : cd(-1.0);
  const cd v_cas = rep.casimir_y == Casimir::zero ? cd(1.0) : cd(-1.0);
  RelationResiduals r = algebra_residuals(rep.u, rep.v, rep.sigma, q_squared, rep.q, u_cas, v_cas);
  const SigmaTraces tr = sigma_traces(rep);
  r.trace_conditions = std::max({std::abs(tr.sigma - 1.0), std::abs(tr.u_sigma - 1.0), std::abs(tr.v_sigma - 1.0),
                                 std::abs(tr.vu_sigma - rep.root_q)});
  return r;
}

RelationResiduals relation_residuals(const BlockRepresentation& rep) {
  RelationResiduals r = algebra_residuals(rep.u, rep.v, rep.sigma, rep.q_squared, rep.q, 1.0, 1.0);
  r.trace_conditions = std::max({std::abs(rep.sigma.trace()), std::abs((rep.u * rep.sigma).trace()),
                                 std::abs((rep.v * rep.sigma).trace()), std::abs((rep.v * rep.u * rep.sigma).trace())});
  return r;
}

SigmaTraces sigma_traces(const TorusRepresentation& rep) {
  return SigmaTraces{rep.sigma.trace(), (rep.u * rep.sigma).trace(), (rep.v * rep.sigma).trace(),
                     (rep.v * rep.u * rep.sigma).trace()};
}

ComplexMatrix hamiltonian(const TorusRepresentation& rep, HamiltonianForm form) {
  const auto n = rep.u.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix u_inv = rep.u.inverse();
  const ComplexMatrix v_inv = rep.v.inverse();
  if (form == HamiltonianForm::standard) return rep.u + u_inv + rep.v + v_inv;
  return (id + rep.root_q * rep.u) * rep.v + (id + rep.root_q * u_inv) * v_inv;
}

ComplexMatrix hamiltonian(const BlockRepresentation& rep) {
  return rep.u + rep.u.inverse() + rep.v + rep.v.inverse();
}

ComplexMatrix matrix_power(const ComplexMatrix& h, int n) {
  if (n < 0) throw std::invalid_argument("matrix_power: negative exponent");
  ComplexMatrix out = ComplexMatrix::Identity(h.rows(), h.cols());
  for (int i = 0; i < n; ++i) out = out * h;
  return out;
}

std::complex<double> trace_gf(const TorusRepresentation& rep, int n_steps, HamiltonianForm form) {
  require_zero_casimirs(rep, "trace_gf");
  return (matrix_power(hamiltonian(rep, form), n_steps) * rep.sigma).trace();
}

std::pair<ComplexMatrix, ComplexMatrix> split_pm(const TorusRepresentation& rep) {
  require_zero_casimirs(rep, "split_pm");
  const ComplexMatrix h = hamiltonian(rep, HamiltonianForm::standard);
  const ComplexMatrix id = ComplexMatrix::Identity(h.rows(), h.cols());
  return {h * (id + rep.sigma) * 0.5, h * (id - rep.sigma) * 0.5};
}

std::complex<double> split_trace_difference(const TorusRepresentation& rep, int n_steps) {
  const auto [plus, minus] = split_pm(rep);
  if (n_steps == 0) {
    // H_pm^0 is the projector onto the sigma = +-1 subspace, not the identity.
    const ComplexMatrix id = ComplexMatrix::Identity(plus.rows(), plus.cols());
    return ((id + rep.sigma) * 0.5).trace() - ((id - rep.sigma) * 0.5).trace();
  }
  return matrix_power(plus, n_steps).trace() - matrix_power(minus, n_steps).trace();
}

std::complex<double> matrix_element(const TorusRepresentation& rep, int n_steps, long bra, long ket) {
  require_zero_casimirs(rep, "matrix_element");
  const ComplexMatrix power = matrix_power(hamiltonian(rep, HamiltonianForm::off_diagonal), n_steps);
  return power(rep.index_of(bra), rep.index_of(ket));
}

std::complex<double> matrix_element_paradiagonal(const TorusRepresentation& rep, int n_steps, int I, int J) {
  return matrix_element(rep, n_steps, static_cast<long>(J) - I, static_cast<long>(J) + I);
}

std::complex<double> matrix_element_odd_paradiagonal(const TorusRepresentation& rep, int n_steps, int I) {
  const long s = rep.s();
  return matrix_element(rep, n_steps, s - I, -s + I);
}

bool verify_even_q_vanishing(int p, int q) {
  constexpr double kTol = 1e-12;
  for (Casimir kx : {Casimir::zero, Casimir::pi_over_q}) {
    for (Casimir ky : {Casimir::zero, Casimir::pi_over_q}) {
      const TorusRepresentation rep = build_periodic_rep(p, q, kx, ky);
      const SigmaTraces tr = sigma_traces(rep);
      if (std::abs(tr.sigma) >= kTol && std::abs(tr.v_sigma) >= kTol) return false;
    }
  }
  return true;
}

}  // namespace areawalk
