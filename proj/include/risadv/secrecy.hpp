#ifndef RISADV_SECRECY_HPP
#define RISADV_SECRECY_HPP

#include "risadv/model.hpp"

namespace risadv {

/// RIS phase configuration theta_n in [0, 2pi); every reflect coefficient is
/// exp(j theta_n) with unit amplitude.
struct ReflectConfig {
  VectorXd theta;  // N

  VectorXcd coefficients() const {
    VectorXcd c(theta.size());
    for (Eigen::Index i = 0; i < theta.size(); ++i)
      c(i) = std::polar(1.0, theta(i));
    return c;
  }
};

/// Stacked effective-channel vectors. The row vector [v_1, ..., v_N, 1] acting
/// on these reproduces the combined direct-plus-reflected channels:
///   v^H f_B  = h_AB + h_IB Theta H_AI        v^H f_B1 = h_IB Theta h_EI
///   v^H f_E  = h_AE + h_IE Theta H_AI        v^H f_E1 = sqrt(rho) h_EE + h_IE Theta h_EI
struct LiftedVectors {
  MatrixXcd f_b;   // (N+1) x M
  MatrixXcd f_e;   // (N+1) x M
  VectorXcd f_b1;  // (N+1)
  VectorXcd f_e1;  // (N+1)
  MatrixXcd w_mat; // W_B = w_B w_B^H, M x M
};

/// The lifted phase variable: a column vector v whose adjoint is
/// [v_1, ..., v_N, 1] with v_n = exp(j theta_n). Stored entries are therefore
/// conj(exp(j theta_n)) and the last entry is exactly 1.
struct LiftedPhase {
  VectorXcd v;  // N+1

  ReflectConfig to_reflect() const {
    ReflectConfig rc;
    const Eigen::Index n = v.size() - 1;
    rc.theta.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      double t = -std::arg(v(i));
      if (t < 0.0) t += 2.0 * kPi;
      rc.theta(i) = t;
    }
    return rc;
  }

  static LiftedPhase from_reflect(const ReflectConfig& rc) {
    LiftedPhase lp;
    lp.v.resize(rc.theta.size() + 1);
    for (Eigen::Index i = 0; i < rc.theta.size(); ++i)
      lp.v(i) = std::conj(std::polar(1.0, rc.theta(i)));
    lp.v(rc.theta.size()) = 1.0;
    return lp;
  }

  MatrixXcd outer() const { return v * v.adjoint(); }
};

inline LiftedVectors lift_channels(const ChannelSet& cs, const Precoder& pc) {
  const Eigen::Index n = cs.h_ai.rows();
  const Eigen::Index m = cs.h_ai.cols();
  if (cs.h_ab.size() != m || cs.h_ae.size() != m || cs.h_ib.size() != n ||
      cs.h_ie.size() != n || cs.h_ei.size() != n || pc.w_b.size() != m)
    throw std::invalid_argument("lift_channels: dimension mismatch");

  LiftedVectors lv;
  lv.f_b.resize(n + 1, m);
  lv.f_b.topRows(n) = cs.h_ib.transpose().asDiagonal() * cs.h_ai;
  lv.f_b.row(n) = cs.h_ab;

  lv.f_e.resize(n + 1, m);
  lv.f_e.topRows(n) = cs.h_ie.transpose().asDiagonal() * cs.h_ai;
  lv.f_e.row(n) = cs.h_ae;

  lv.f_b1.resize(n + 1);
  lv.f_b1.head(n) = cs.h_ib.transpose().asDiagonal() * cs.h_ei;
  lv.f_b1(n) = 0.0;

  lv.f_e1.resize(n + 1);
  lv.f_e1.head(n) = cs.h_ie.transpose().asDiagonal() * cs.h_ei;
  lv.f_e1(n) = std::sqrt(cs.rho) * cs.h_ee;

  lv.w_mat = pc.w_b * pc.w_b.adjoint();
  return lv;
}

/// Combined A -> receiver channel h_direct + h_ris Theta H_AI.
inline RowVectorXcd combined_channel(const RowVectorXcd& h_direct,
                                     const RowVectorXcd& h_ris,
                                     const MatrixXcd& h_ai,
                                     const ReflectConfig& rc) {
  return h_direct + h_ris.cwiseProduct(rc.coefficients().transpose()) * h_ai;
}

/// Eavesdropping-only SINRs at B and E.
inline std::pair<double, double> sinr_case1(const ChannelSet& cs,
                                            const ReflectConfig& rc,
                                            const Precoder& pc) {
  const Complex sb = combined_channel(cs.h_ab, cs.h_ib, cs.h_ai, rc) * pc.w_b;
  const Complex se = combined_channel(cs.h_ae, cs.h_ie, cs.h_ai, rc) * pc.w_b;
  return {std::norm(sb) / cs.sigma2_b, std::norm(se) / cs.sigma2_e};
}

/// Eavesdropping-plus-jamming SINRs at B and E for jamming power p_j.
inline std::pair<double, double> sinr_case2(const ChannelSet& cs,
                                            const ReflectConfig& rc,
                                            const Precoder& pc, double p_j) {
  if (p_j < 0.0) throw std::invalid_argument("sinr_case2: negative jamming power");
  const VectorXcd coeff = rc.coefficients();
  const Complex sb = combined_channel(cs.h_ab, cs.h_ib, cs.h_ai, rc) * pc.w_b;
  const Complex se = combined_channel(cs.h_ae, cs.h_ie, cs.h_ai, rc) * pc.w_b;
  const Complex jb = cs.h_ib.cwiseProduct(coeff.transpose()) * cs.h_ei;
  const Complex je = std::sqrt(cs.rho) * cs.h_ee +
                     Complex(cs.h_ie.cwiseProduct(coeff.transpose()) * cs.h_ei);
  const double gb = std::norm(sb) / (p_j * std::norm(jb) + cs.sigma2_b);
  const double ge = std::norm(se) / (p_j * std::norm(je) + cs.sigma2_e);
  return {gb, ge};
}

/// [log2(1+gamma_B) - log2(1+gamma_E)]^+ in bits/s/Hz.
inline double secrecy_rate(double gamma_b, double gamma_e) {
  if (gamma_b < 0.0 || gamma_e < 0.0)
    throw std::invalid_argument("secrecy_rate: SINRs must be nonnegative");
  return std::max(0.0, log2_1p(gamma_b) - log2_1p(gamma_e));
}

/// Unclamped log2(1+gamma_B) - log2(1+gamma_E).
inline double rate_difference(double gamma_b, double gamma_e) {
  return log2_1p(gamma_b) - log2_1p(gamma_e);
}

inline double trace_quadratic(const MatrixXcd& f, const MatrixXcd& w_mat,
                              const MatrixXcd& big_v) {
  return ((f * w_mat * f.adjoint()) * big_v).trace().real();
}

/// (Tr(f_B W_B f_B^H V)/sigma_B^2 + 1) / (Tr(f_E W_B f_E^H V)/sigma_E^2 + 1).
inline double fractional_objective_case1(const MatrixXcd& big_v,
                                         const LiftedVectors& lv,
                                         double sigma2_b, double sigma2_e) {
  const double num = trace_quadratic(lv.f_b, lv.w_mat, big_v) / sigma2_b + 1.0;
  const double den = trace_quadratic(lv.f_e, lv.w_mat, big_v) / sigma2_e + 1.0;
  return num / den;
}

}  // namespace risadv

#endif  // RISADV_SECRECY_HPP
