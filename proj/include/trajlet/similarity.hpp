#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "trajlet/error.hpp"
#include "trajlet/geometry.hpp"
#include "trajlet/threads.hpp"

namespace trajlet {

enum class Metric { cosine_combined, fft_spectral };

inline const char* metric_name(Metric m) {
  return m == Metric::cosine_combined ? "cosine-combined" : "fft-spectral";
}

constexpr double kDefaultAlpha = 0.5;

/// L2-normalized DFT coefficient magnitudes, x-axis block then y-axis block,
/// each of length floor(T/2)+1. An all-zero input sets `zero_spectrum`
/// instead of dividing by zero.
struct SpectralFeature {
  Eigen::VectorXd magnitudes;
  bool zero_spectrum = false;
};

namespace detail {

// Direct O(T^2) DFT magnitudes of one real axis, coefficients 0..floor(T/2).
// Exact for non-power-of-two lengths; no padding, no windowing.
inline void dft_magnitudes(const std::vector<Point>& pts, bool y_axis,
                           Eigen::Ref<Eigen::VectorXd> out) {
  const std::size_t t_len = pts.size();
  const std::size_t n_coef = t_len / 2 + 1;
  const double two_pi = 2.0 * 3.14159265358979323846;
  for (std::size_t k = 0; k < n_coef; ++k) {
    double re = 0.0, im = 0.0;
    for (std::size_t t = 0; t < t_len; ++t) {
      const double angle = two_pi * static_cast<double>(k) *
                           static_cast<double>(t) / static_cast<double>(t_len);
      const double v = y_axis ? pts[t].y : pts[t].x;
      re += v * std::cos(angle);
      im -= v * std::sin(angle);
    }
    out[static_cast<Eigen::Index>(k)] = std::hypot(re, im);
  }
}

}  // namespace detail

inline SpectralFeature spectral_feature(const NormalizedTrajectory& nt) {
  const std::size_t t_len = nt.points.size();
  if (t_len < 2) raise(Errc::degenerate_trajectory, "spectral_feature: T < 2");
  const Eigen::Index n_coef = static_cast<Eigen::Index>(t_len / 2 + 1);

  SpectralFeature f;
  f.magnitudes.resize(2 * n_coef);
  detail::dft_magnitudes(nt.points, false, f.magnitudes.head(n_coef));
  detail::dft_magnitudes(nt.points, true, f.magnitudes.tail(n_coef));

  const double scale = f.magnitudes.norm();
  if (scale > 0.0) {
    f.magnitudes /= scale;
  } else {
    f.zero_spectrum = true;
  }
  return f;
}

/// Cosine similarity of two spectral features; in [0, 1] since magnitudes
/// are nonnegative.
inline double spectral_similarity(const SpectralFeature& fa,
                                  const SpectralFeature& fb) {
  if (fa.zero_spectrum || fb.zero_spectrum) {
    raise(Errc::zero_spectrum, "spectral_similarity: zero-spectrum operand");
  }
  if (fa.magnitudes.size() != fb.magnitudes.size()) {
    raise(Errc::length_mismatch, "spectral_similarity: feature lengths differ");
  }
  return fa.magnitudes.dot(fb.magnitudes);
}

/// Combined score s = cos(dp_a, dp_b) / (1 + alpha * ade(a, b)), weighting
/// directional affinity by inverse pointwise distance.
inline double cosine_combined(const NormalizedTrajectory& a,
                              const NormalizedTrajectory& b,
                              double alpha = kDefaultAlpha) {
  if (alpha < 0.0) raise(Errc::usage_error, "cosine_combined: alpha must be >= 0");
  const DisplacementVector da = displacement(a);
  const DisplacementVector db = displacement(b);
  const double na = std::hypot(da.dx, da.dy);
  const double nb = std::hypot(db.dx, db.dy);
  if (na < 1e-9 || nb < 1e-9) {
    raise(Errc::zero_displacement,
          "cosine_combined: zero displacement (cosine undefined)");
  }
  const double cosine = (da.dx * db.dx + da.dy * db.dy) / (na * nb);
  return cosine / (1.0 + alpha * ade(a, b));
}

/// Dense pairwise score matrix over a batch; symmetric by construction.
struct SimilarityMatrix {
  Eigen::MatrixXd values;
  Metric metric_tag = Metric::cosine_combined;
};

inline SimilarityMatrix similarity_matrix(
    const std::vector<NormalizedTrajectory>& batch, Metric metric,
    double alpha = kDefaultAlpha) {
  if (batch.empty()) raise(Errc::empty_sequence, "similarity_matrix: empty batch");
  const std::size_t t_len = batch.front().points.size();
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (batch[i].points.size() != t_len) {
      raise(Errc::length_mismatch,
            "similarity_matrix: trajectory " + std::to_string(i) + " ('" +
                batch[i].source_id + "') has length " +
                std::to_string(batch[i].points.size()) + ", expected " +
                std::to_string(t_len));
    }
  }
  const Eigen::Index n = static_cast<Eigen::Index>(batch.size());
  SimilarityMatrix out;
  out.metric_tag = metric;
  out.values.resize(n, n);

  if (metric == Metric::fft_spectral) {
    // All features once, then one matrix product.
    const Eigen::Index dim = static_cast<Eigen::Index>(2 * (t_len / 2 + 1));
    Eigen::MatrixXd feats(n, dim);
    std::vector<std::string> zero_ids;
    parallel_for(batch.size(), [&](std::size_t i) {
      const SpectralFeature f = spectral_feature(batch[i]);
      if (f.zero_spectrum) {
        feats.row(static_cast<Eigen::Index>(i)).setZero();
      } else {
        feats.row(static_cast<Eigen::Index>(i)) = f.magnitudes.transpose();
      }
    });
    for (Eigen::Index i = 0; i < n; ++i) {
      if (feats.row(i).isZero(0.0)) {
        raise(Errc::zero_spectrum, "similarity_matrix: zero spectrum at index " +
                                       std::to_string(i) + " ('" +
                                       batch[static_cast<std::size_t>(i)].source_id + "')");
      }
    }
    out.values = feats * feats.transpose();
  } else {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const DisplacementVector d = displacement(batch[i]);
      if (std::hypot(d.dx, d.dy) < 1e-9) {
        raise(Errc::zero_displacement,
              "similarity_matrix: zero displacement at index " + std::to_string(i) +
                  " ('" + batch[i].source_id + "')");
      }
    }
    // Upper triangle only; mirrored, so the result is exactly symmetric.
    parallel_for(batch.size(), [&](std::size_t i) {
      const Eigen::Index ei = static_cast<Eigen::Index>(i);
      for (std::size_t j = i; j < batch.size(); ++j) {
        out.values(ei, static_cast<Eigen::Index>(j)) =
            cosine_combined(batch[i], batch[j], alpha);
      }
    });
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < i; ++j) out.values(i, j) = out.values(j, i);
    }
  }
  return out;
}

}  // namespace trajlet
