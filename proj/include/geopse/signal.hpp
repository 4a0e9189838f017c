// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_SIGNAL_HPP_
#define GEOPSE_SIGNAL_HPP_

#include <cmath>

#include "geopse/common.hpp"

namespace geopse {

// Floor on magnitudes before exponentiation so |z|^c and its gradient stay
// finite at the origin.
constexpr double kMagFloor = 1e-12;

template <class S>
CMat<S> ApplyMask(const CMat<S>& spec, const CMat<S>& mask) {
  Require(spec.rows() == mask.rows() && spec.cols() == mask.cols(),
          kBadConfig, "ApplyMask: shape mismatch");
  return spec.cwiseProduct(mask);
}

// |z|^c * exp(j*angle(z)); exactly zero stays zero.
template <class S>
CMat<S> PowerLawCompress(const CMat<S>& spec, S c) {
  Require(c > S(0) && c <= S(1), kBadConfig, "compression exponent out of (0,1]");
  CMat<S> out(spec.rows(), spec.cols());
  const S floor_mag = static_cast<S>(kMagFloor);
  for (Eigen::Index i = 0; i < spec.size(); ++i) {
    const std::complex<S> z = spec(i);
    const S mag = std::abs(z);
    if (mag == S(0)) {
      out(i) = std::complex<S>(0, 0);
      continue;
    }
    const S m = std::max(mag, floor_mag);
    // |z|^(c-1) * z has the right magnitude and exactly the phase of z.
    out(i) = z * std::pow(m, c - S(1));
  }
  return out;
}

template <class S>
struct LossResult {
  S loss = S(0);
  // d(loss)/d(re est) + j * d(loss)/d(im est)
  CMat<S> grad;
};

// Power-law compressed phase-aware MSE:
//   L = (1-lambda) * mean((|e|^c - |r|^c)^2)
//     + lambda     * mean(|comp(e) - comp(r)|^2)
// with comp(z) = |z|^c * exp(j*angle(z)). The gradient treats re/im as
// independent real coordinates.
template <class S>
LossResult<S> LossPlcpa(const CMat<S>& est, const CMat<S>& ref, S c, S lambda) {
  Require(est.rows() == ref.rows() && est.cols() == ref.cols(), kBadConfig,
          "LossPlcpa: shape mismatch");
  Require(c > S(0) && c <= S(1), kBadConfig, "compression exponent out of (0,1]");
  Require(lambda >= S(0) && lambda <= S(1), kBadConfig, "lambda out of [0,1]");

  const S n = static_cast<S>(est.size());
  const S floor_mag = static_cast<S>(kMagFloor);
  LossResult<S> res;
  res.grad = CMat<S>::Zero(est.rows(), est.cols());

  S acc_mag = S(0);
  S acc_cplx = S(0);
  for (Eigen::Index i = 0; i < est.size(); ++i) {
    const std::complex<S> e = est(i);
    const std::complex<S> r = ref(i);
    const S ae = std::max(std::abs(e), floor_mag);
    const S ar = std::max(std::abs(r), floor_mag);
    const bool live = std::abs(e) > floor_mag;  // gradient of the clamp is 0

    const S pe = std::pow(ae, c);
    const S pr = std::pow(ar, c);
    const S we = std::pow(ae, c - S(1));  // pe / ae
    const S wr = std::pow(ar, c - S(1));

    // Magnitude term.
    const S dm = pe - pr;
    acc_mag += dm * dm;

    // Compressed complex term: comp(e) = we * e.
    const S dr = we * e.real() - wr * r.real();
    const S di = we * e.imag() - wr * r.imag();
    acc_cplx += dr * dr + di * di;

    // d(pe)/d(e_r) = c * ae^(c-2) * e_r when the clamp is inactive.
    S g_r = S(0), g_i = S(0);
    const S k_mag = S(2) * (S(1) - lambda) / n;
    const S k_cplx = S(2) * lambda / n;
    if (live) {
      const S q = std::pow(ae, c - S(2));
      g_r += k_mag * dm * c * q * e.real();
      g_i += k_mag * dm * c * q * e.imag();
      // comp_r = we*e_r with d(we)/d(e_r) = (c-1)*ae^(c-3)*e_r.
      const S p = (c - S(1)) * std::pow(ae, c - S(3));
      const S proj = dr * e.real() + di * e.imag();
      g_r += k_cplx * (we * dr + p * e.real() * proj);
      g_i += k_cplx * (we * di + p * e.imag() * proj);
    } else {
      // Inside the clamp the compression is linear in e.
      g_r += k_cplx * we * dr;
      g_i += k_cplx * we * di;
    }
    res.grad(i) = std::complex<S>(g_r, g_i);
  }
  res.loss = (S(1) - lambda) * acc_mag / n + lambda * acc_cplx / n;
  return res;
}

}  // namespace geopse

#endif  // GEOPSE_SIGNAL_HPP_
