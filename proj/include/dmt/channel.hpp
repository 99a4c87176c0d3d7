// Copyright 2026 The dmt-relay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "dmt/antenna.hpp"
#include "dmt/philox.hpp"

namespace dmt {

template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// One quasi-static realization of both hops: h1 is M2 x M1, h2 is M3 x M2,
/// entries i.i.d. CN(0, 1).
template <typename Scalar = double>
struct ChannelSample {
  CMatrix<Scalar> h1;
  CMatrix<Scalar> h2;
};

/// Fills `out` with the realization keyed by (seed, index), reusing its
/// storage when the shapes already match. Entry e of the concatenated
/// column-major (h1, h2) consumes Philox block (index_lo, index_hi, e, 0).
template <typename Scalar>
void sample_channel_into(const AntennaConfig& config, std::uint64_t seed, std::uint64_t index,
                         ChannelSample<Scalar>& out) {
  out.h1.resize(config.m2(), config.m1());
  out.h2.resize(config.m3(), config.m2());
  const Philox4x32 gen(seed);
  const Scalar scale = static_cast<Scalar>(std::numbers::sqrt2 / 2.0);
  std::uint32_t entry = 0;
  auto fill = [&](CMatrix<Scalar>& h) {
    for (Eigen::Index k = 0; k < h.size(); ++k) {
      const auto block = gen({static_cast<std::uint32_t>(index),
                              static_cast<std::uint32_t>(index >> 32), entry++, 0u});
      const auto z = normal_pair(block);
      h.data()[k] = {scale * static_cast<Scalar>(z[0]), scale * static_cast<Scalar>(z[1])};
    }
  };
  fill(out.h1);
  fill(out.h2);
}

template <typename Scalar = double>
ChannelSample<Scalar> sample_channel(const AntennaConfig& config, std::uint64_t seed,
                                     std::uint64_t index) {
  ChannelSample<Scalar> out;
  sample_channel_into(config, seed, index, out);
  return out;
}

/// log2 det(I + gain * H H^H), via Cholesky of the smaller Gram matrix
/// (det(I + gain H H^H) = det(I + gain H^H H)).
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real log2det_gram(
    const Eigen::MatrixBase<Derived>& h, typename Eigen::NumTraits<typename Derived::Scalar>::Real gain) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Complex = typename Derived::Scalar;
  using Square = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  if (!h.allFinite()) throw std::domain_error("capacity: channel matrix has non-finite entries");
  if (h.size() == 0) return Real(0);
  if (h.rows() == 1 || h.cols() == 1) return std::log2(Real(1) + gain * h.squaredNorm());

  const bool wide = h.cols() >= h.rows();
  const Eigen::Index n = wide ? h.rows() : h.cols();
  Square gram = Square::Identity(n, n);
  if (wide) {
    gram.noalias() += gain * (h * h.adjoint());
  } else {
    gram.noalias() += gain * (h.adjoint() * h);
  }
  const Eigen::LLT<Square> llt(gram);
  if (llt.info() != Eigen::Success) throw std::runtime_error("capacity: factorization failed");
  return Real(2) * llt.matrixLLT().diagonal().real().array().log().sum() / std::numbers::ln2_v<Real>;
}

/// Hop mutual information with power split over m_tx transmit antennas:
/// log2 det(I + (snr / m_tx) H H^H) in bits per channel use.
template <typename Derived>
auto hop_capacity(const Eigen::MatrixBase<Derived>& h,
                  typename Eigen::NumTraits<typename Derived::Scalar>::Real snr, int m_tx) {
  if (!(snr > 0)) throw std::domain_error("hop_capacity: snr must be > 0");
  if (m_tx < 1) throw std::domain_error("hop_capacity: m_tx must be >= 1");
  return log2det_gram(h, snr / m_tx);
}

/// Cut-set hop term log2 det(I + snr H H^H).
template <typename Derived>
auto cutset_capacity(const Eigen::MatrixBase<Derived>& h,
                     typename Eigen::NumTraits<typename Derived::Scalar>::Real snr) {
  if (!(snr > 0)) throw std::domain_error("cutset_capacity: snr must be > 0");
  return log2det_gram(h, snr);
}

}  // namespace dmt
