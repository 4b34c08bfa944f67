#pragma once

#include "qdeblur/types.hpp"

namespace qdeblur {

/// Planned 2-D complex DFT for one fixed image size.
///
/// Plans are created with FFTW_ESTIMATE so transforms are bit-reproducible
/// from run to run. Instances are not thread-safe (internal scratch
/// buffers); create one per thread.
class Fft2 {
 public:
  Fft2(Index rows, Index cols);
  ~Fft2();

  Fft2(const Fft2&) = delete;
  Fft2& operator=(const Fft2&) = delete;

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  CPlane forward(const Plane& x) const;
  CPlane forward(const CPlane& x) const;
  // Inverse transforms include the 1/(rows*cols) normalization.
  CPlane inverse(const CPlane& x) const;
  Plane inverse_real(const CPlane& x) const;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  void* fwd_ = nullptr;  // fftw_plan
  void* inv_ = nullptr;
  mutable Eigen::ArrayXXcd in_, out_;

  void run(const void* plan) const;
  void check_dims(Index rows, Index cols) const;
};

}  // namespace qdeblur
