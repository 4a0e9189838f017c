// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_COMMON_HPP_
#define GEOPSE_COMMON_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace geopse {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using CMat = Eigen::Matrix<std::complex<S>, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using CVec = Eigen::Matrix<std::complex<S>, Eigen::Dynamic, 1>;

using MatF = Mat<float>;
using VecF = Vec<float>;
using CMatF = CMat<float>;
using MatD = Mat<double>;
using VecD = Vec<double>;
using CMatD = CMat<double>;

// Samples x channels, one column per channel.
using Wave = MatF;

// Multichannel spectrogram: one F x T complex matrix per stream.
template <class S>
using SpecStack = std::vector<CMat<S>>;
using SpecStackF = SpecStack<float>;

// Process exit codes, one per distinct failure class.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        // selftest / acceptance property failure
  kUsage = 2,          // bad command line
  kIoError = 3,        // unreadable / unwritable path
  kBadWav = 4,         // malformed or unsupported WAV
  kChannelMismatch = 5,
  kBadCheckpoint = 6,  // wrong magic / version / truncated
  kBadConfig = 7,      // malformed config or unknown key
  kInternal = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

[[noreturn]] inline void Fail(ExitCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool ok, ExitCode code, const std::string& what) {
  if (!ok) Fail(code, what);
}

// Worker-pool cap from GEOPSE_THREADS; 0 or unset means one worker.
// All numeric kernels stay single-threaded regardless, so results do not
// depend on this value.
inline int ThreadCap() {
  const char* env = std::getenv("GEOPSE_THREADS");
  if (env == nullptr) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

// Sums a small set of values in ascending order. Used for every reduction
// across streams so the result is independent of stream ordering down to
// the last bit.
template <class S>
S SortedSum(S* values, int n) {
  for (int i = 1; i < n; ++i) {  // insertion sort, n is at most a few dozen
    S v = values[i];
    int j = i - 1;
    while (j >= 0 && values[j] > v) {
      values[j + 1] = values[j];
      --j;
    }
    values[j + 1] = v;
  }
  S acc = S(0);
  for (int i = 0; i < n; ++i) acc += values[i];
  return acc;
}

template <class S>
S SortedMean(S* values, int n) {
  return SortedSum(values, n) / S(n);
}

constexpr double kPi = 3.14159265358979323846;
constexpr int kSampleRate = 16000;
constexpr double kSpeedOfSound = 343.0;

}  // namespace geopse

#endif  // GEOPSE_COMMON_HPP_
