// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_EWMA_HPP_
#define GEOPSE_EWMA_HPP_

#include <cmath>
#include <istream>
#include <ostream>

#include "geopse/common.hpp"

namespace geopse {

// Causal, bias-corrected exponentially weighted mean/variance tracker with
// one accumulator pair per feature row. Statistics at each step are pooled
// across all streams of the utterance (sorted-order means), so normalized
// outputs do not depend on stream ordering.
//
// Update at step t (1-based), with x-bar the cross-stream mean of the frame:
//   m_t = beta * m_{t-1} + (1 - beta) * x-bar
//   mhat = m_t / (1 - beta^t)
//   dev_s = x_s - mhat                      (per stream)
//   v_t = beta * v_{t-1} + (1 - beta) * mean_s(dev_s^2)
//   vhat = v_t / (1 - beta^t)
//   out_s = dev_s / sqrt(vhat + eps)
// At t=1 the bias correction is the identity, so mhat equals x-bar exactly
// and a constant input normalizes to exactly zero. Accumulators are kept in
// double regardless of the feature scalar type.
class EwmaState {
 public:
  EwmaState() = default;
  EwmaState(int rows, double beta, double eps)
      : m_(VecD::Zero(rows)), v_(VecD::Zero(rows)), beta_(beta), eps_(eps) {
    Require(beta > 0.0 && beta < 1.0, kBadConfig, "ewma beta out of (0,1)");
  }

  int rows() const { return static_cast<int>(m_.size()); }
  int64_t step_count() const { return t_; }
  double beta() const { return beta_; }
  double eps() const { return eps_; }

  // frame: rows x M (one column per stream). Returns normalized rows x M
  // and advances the state by one step.
  template <class S>
  Mat<S> Normalize(const Mat<S>& frame) {
    Require(frame.rows() == m_.size(), kBadConfig, "ewma row count mismatch");
    const int M = static_cast<int>(frame.cols());
    Require(M >= 1 && M <= 64, kBadConfig, "ewma stream count out of range");
    ++t_;
    const double corr = 1.0 - std::pow(beta_, static_cast<double>(t_));
    Mat<S> out(frame.rows(), M);
    double vals[64];
    for (Eigen::Index r = 0; r < frame.rows(); ++r) {
      for (int s = 0; s < M; ++s) vals[s] = static_cast<double>(frame(r, s));
      const double xbar = SortedMean(vals, M);
      m_[r] = beta_ * m_[r] + (1.0 - beta_) * xbar;
      const double mhat = (t_ == 1) ? xbar : m_[r] / corr;
      double dev[64];
      for (int s = 0; s < M; ++s) {
        dev[s] = static_cast<double>(frame(r, s)) - mhat;
        vals[s] = dev[s] * dev[s];
      }
      v_[r] = beta_ * v_[r] + (1.0 - beta_) * SortedMean(vals, M);
      const double vhat = v_[r] / corr;
      const double scale = 1.0 / std::sqrt(vhat + eps_);
      for (int s = 0; s < M; ++s) {
        out(r, s) = static_cast<S>(dev[s] * scale);
      }
    }
    return out;
  }

  void Save(std::ostream& os) const {
    const int64_t rows = m_.size();
    os.write(reinterpret_cast<const char*>(&rows), sizeof(rows));
    os.write(reinterpret_cast<const char*>(&t_), sizeof(t_));
    os.write(reinterpret_cast<const char*>(&beta_), sizeof(beta_));
    os.write(reinterpret_cast<const char*>(&eps_), sizeof(eps_));
    os.write(reinterpret_cast<const char*>(m_.data()), rows * sizeof(double));
    os.write(reinterpret_cast<const char*>(v_.data()), rows * sizeof(double));
  }

  static EwmaState Load(std::istream& is) {
    int64_t rows = 0;
    EwmaState st;
    is.read(reinterpret_cast<char*>(&rows), sizeof(rows));
    is.read(reinterpret_cast<char*>(&st.t_), sizeof(st.t_));
    is.read(reinterpret_cast<char*>(&st.beta_), sizeof(st.beta_));
    is.read(reinterpret_cast<char*>(&st.eps_), sizeof(st.eps_));
    st.m_.resize(rows);
    st.v_.resize(rows);
    is.read(reinterpret_cast<char*>(st.m_.data()), rows * sizeof(double));
    is.read(reinterpret_cast<char*>(st.v_.data()), rows * sizeof(double));
    Require(is.good(), kBadCheckpoint, "truncated ewma state");
    return st;
  }

 private:
  VecD m_, v_;
  int64_t t_ = 0;
  double beta_ = 0.99;
  double eps_ = 1e-5;
};

}  // namespace geopse

#endif  // GEOPSE_EWMA_HPP_
