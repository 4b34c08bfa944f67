#include "qdeblur/fft.hpp"

#include <fftw3.h>

namespace qdeblur {

namespace {
fftw_complex* as_fftw(std::complex<double>* p) {
  return reinterpret_cast<fftw_complex*>(p);
}
}  // namespace

Fft2::Fft2(Index rows, Index cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw ValidationError("Fft2: empty plane");
  in_.resize(rows, cols);
  out_.resize(rows, cols);
  // Eigen planes are column-major, i.e. row-major [cols][rows] for FFTW.
  fwd_ = fftw_plan_dft_2d(static_cast<int>(cols), static_cast<int>(rows),
                          as_fftw(in_.data()), as_fftw(out_.data()),
                          FFTW_FORWARD, FFTW_ESTIMATE);
  inv_ = fftw_plan_dft_2d(static_cast<int>(cols), static_cast<int>(rows),
                          as_fftw(in_.data()), as_fftw(out_.data()),
                          FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft2::~Fft2() {
  if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  if (inv_) fftw_destroy_plan(static_cast<fftw_plan>(inv_));
}

void Fft2::run(const void* plan) const {
  fftw_execute(static_cast<fftw_plan>(const_cast<void*>(plan)));
}

void Fft2::check_dims(Index rows, Index cols) const {
  // The plans are bound to the scratch buffers; a resize would invalidate them.
  if (rows != rows_ || cols != cols_)
    throw ValidationError("Fft2: plane size does not match plan");
}

CPlane Fft2::forward(const Plane& x) const {
  check_dims(x.rows(), x.cols());
  in_ = x.cast<std::complex<double>>();
  run(fwd_);
  return out_;
}

CPlane Fft2::forward(const CPlane& x) const {
  check_dims(x.rows(), x.cols());
  in_ = x;
  run(fwd_);
  return out_;
}

CPlane Fft2::inverse(const CPlane& x) const {
  check_dims(x.rows(), x.cols());
  in_ = x;
  run(inv_);
  return out_ / static_cast<double>(rows_ * cols_);
}

Plane Fft2::inverse_real(const CPlane& x) const {
  check_dims(x.rows(), x.cols());
  in_ = x;
  run(inv_);
  return out_.real() / static_cast<double>(rows_ * cols_);
}

}  // namespace qdeblur
