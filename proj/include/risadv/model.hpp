#ifndef RISADV_MODEL_HPP
#define RISADV_MODEL_HPP

#include "risadv/common.hpp"

namespace risadv {

/// Node positions in meters. A is the multi-antenna transmitter, B the
/// legitimate receiver, E the illegitimate receiver that controls the RIS.
struct Geometry {
  Vector3d pos_a = Vector3d::Zero();
  Vector3d pos_b = Vector3d::Zero();
  Vector3d pos_e = Vector3d::Zero();
  Vector3d pos_ris = Vector3d::Zero();
};

/// Scenario parameters in linear units (powers in watts, gains dimensionless).
struct SystemParams {
  int m = 8;              // antennas at A
  int n = 60;             // RIS elements
  double p_t = 5.0;       // transmit power of A, W
  double p_d = 5.0;       // max jamming power of E, W
  double sigma2_b = 1e-12;
  double sigma2_e = 1e-12;
  double rho = 1e-12;     // self-interference suppression, linear
  double l0 = 1e-3;       // reference path gain at 1 m
  double beta_ab = 4.0;
  double beta_ae = 4.0;
  double beta_ai = 3.5;
  double beta_ib = 2.5;
  double beta_ie = 2.5;
  double beta_ei = 2.5;
};

/// One realization of all baseband channels for the scenario.
struct ChannelSet {
  MatrixXcd h_ai;     // N x M, A -> RIS
  RowVectorXcd h_ab;  // 1 x M, A -> B
  RowVectorXcd h_ae;  // 1 x M, A -> E
  RowVectorXcd h_ib;  // 1 x N, RIS -> B
  RowVectorXcd h_ie;  // 1 x N, RIS -> E
  VectorXcd h_ei;     // N x 1, E -> RIS
  Complex h_ee;       // self-interference at E (unit variance, scaled by sqrt(rho))
  double sigma2_b = 0.0;
  double sigma2_e = 0.0;
  double rho = 0.0;
};

struct Precoder {
  VectorXcd w_b;  // M x 1, ||w_b||^2 = P_T
};

/// Large-scale gain L0 * d^-beta.
inline double path_loss(double d, double beta, double l0) {
  if (!(d > 0.0)) throw std::domain_error("path_loss: distance must be positive");
  if (!(beta > 0.0)) throw std::domain_error("path_loss: exponent must be positive");
  if (!(l0 > 0.0)) throw std::domain_error("path_loss: reference gain must be positive");
  return l0 * std::pow(d, -beta);
}

inline void validate(const Geometry& g, const SystemParams& p) {
  if (p.m <= 0 || p.n <= 0) throw std::invalid_argument("model: M and N must be positive");
  if (!(p.p_t > 0.0)) throw std::invalid_argument("model: P_T must be positive");
  if (p.p_d < 0.0) throw std::invalid_argument("model: P_D must be nonnegative");
  if (!(p.sigma2_b > 0.0) || !(p.sigma2_e > 0.0))
    throw std::invalid_argument("model: noise powers must be positive");
  if (p.rho < 0.0 || p.rho > 1.0) throw std::invalid_argument("model: rho must be in [0, 1]");
  if (!(p.l0 > 0.0)) throw std::invalid_argument("model: L0 must be positive");
  for (double b : {p.beta_ab, p.beta_ae, p.beta_ai, p.beta_ib, p.beta_ie, p.beta_ei})
    if (!(b > 0.0)) throw std::invalid_argument("model: path-loss exponents must be positive");
  const double eps = 1e-12;
  if ((g.pos_a - g.pos_b).norm() < eps || (g.pos_a - g.pos_e).norm() < eps ||
      (g.pos_a - g.pos_ris).norm() < eps || (g.pos_b - g.pos_ris).norm() < eps ||
      (g.pos_e - g.pos_ris).norm() < eps)
    throw std::invalid_argument("model: node positions must be pairwise distinct");
}

/// Draws one channel realization: entries sqrt(L0 d^-beta) * g with g ~ CN(0,1).
/// Deterministic for a fixed seed; fill order is fixed (H_AI column-major,
/// then h_AB, h_AE, h_IB, h_IE, h_EI, h_EE).
inline ChannelSet generate_channels(const Geometry& g, const SystemParams& p,
                                    std::uint64_t seed) {
  validate(g, p);
  const double d_ai = (g.pos_a - g.pos_ris).norm();
  const double d_ab = (g.pos_a - g.pos_b).norm();
  const double d_ae = (g.pos_a - g.pos_e).norm();
  const double d_ib = (g.pos_ris - g.pos_b).norm();
  const double d_ie = (g.pos_ris - g.pos_e).norm();
  const double d_ei = (g.pos_e - g.pos_ris).norm();

  Rng rng(seed);
  ChannelSet cs;
  cs.sigma2_b = p.sigma2_b;
  cs.sigma2_e = p.sigma2_e;
  cs.rho = p.rho;

  const double s_ai = std::sqrt(path_loss(d_ai, p.beta_ai, p.l0));
  cs.h_ai.resize(p.n, p.m);
  for (int j = 0; j < p.m; ++j)
    for (int i = 0; i < p.n; ++i) cs.h_ai(i, j) = s_ai * rng.cgaussian();

  auto draw_row = [&](int len, double d, double beta) {
    RowVectorXcd r(len);
    const double s = std::sqrt(path_loss(d, beta, p.l0));
    for (int i = 0; i < len; ++i) r(i) = s * rng.cgaussian();
    return r;
  };
  cs.h_ab = draw_row(p.m, d_ab, p.beta_ab);
  cs.h_ae = draw_row(p.m, d_ae, p.beta_ae);
  cs.h_ib = draw_row(p.n, d_ib, p.beta_ib);
  cs.h_ie = draw_row(p.n, d_ie, p.beta_ie);

  cs.h_ei.resize(p.n);
  const double s_ei = std::sqrt(path_loss(d_ei, p.beta_ei, p.l0));
  for (int i = 0; i < p.n; ++i) cs.h_ei(i) = s_ei * rng.cgaussian();

  cs.h_ee = rng.cgaussian();  // unit variance; sqrt(rho) applied at use sites
  return cs;
}

/// Maximum-ratio transmission matched to the direct channel, full power.
inline Precoder mrt_precoder(const RowVectorXcd& h_ab, double p_t) {
  const double nrm = h_ab.norm();
  if (!(nrm > 0.0)) throw std::invalid_argument("mrt_precoder: zero channel vector");
  if (!(p_t > 0.0)) throw std::invalid_argument("mrt_precoder: P_T must be positive");
  Precoder pc;
  pc.w_b = std::sqrt(p_t) * h_ab.adjoint() / nrm;
  return pc;
}

}  // namespace risadv

#endif  // RISADV_MODEL_HPP
