#pragma once

#include "qdeblur/types.hpp"

#include <string>
#include <vector>

namespace qdeblur {

/// RGB image with values nominally in [0,1]. Solver iterates may leave the
/// range; clamping happens only when quantizing to a file.
struct ColorImage {
  Plane r, g, b;

  ColorImage() = default;
  ColorImage(Plane r_, Plane g_, Plane b_);

  static ColorImage zeros(Index rows, Index cols);
  static ColorImage constant(Index rows, Index cols, double red, double green,
                             double blue);

  Index rows() const { return r.rows(); }
  Index cols() const { return r.cols(); }

  Plane& channel(int c);
  const Plane& channel(int c) const;
};

/// Forward differences with periodic wraparound, one pair of 3-channel
/// planes: gx[i,j] = u[i,j+1 mod n] - u[i,j], gy analogous down rows.
struct GradientField {
  ColorImage gx, gy;
};

GradientField gradient(const ColorImage& u);
Plane gradient_x(const Plane& u);
Plane gradient_y(const Plane& u);

/// Exact adjoint of gradient(): <gradient(u), g> == <u, divergence_adjoint(g)>.
ColorImage divergence_adjoint(const GradientField& g);
Plane gradient_x_adjoint(const Plane& gx);
Plane gradient_y_adjoint(const Plane& gy);

struct PyramidLevel {
  ColorImage image;
  int kernel_size = 0;
};

/// levels[0] is the coarsest; levels.back() is the input image itself.
struct Pyramid {
  std::vector<PyramidLevel> levels;
  double scale = 0.0;
};

/// Nearest odd integer, as 2*floor(x/2)+1.
int round_to_odd(double x);

/// Coarse-to-fine pyramid: per-level kernel sizes follow
/// round_to_odd(kernel_size * scale^k) until they reach min_kernel, images
/// are downsampled by the matching factor (Gaussian prefilter + bilinear).
Pyramid build_pyramid(const ColorImage& f, int kernel_size, double scale,
                      int min_kernel);

Plane resize_bilinear(const Plane& src, Index rows, Index cols);
Plane gaussian_prefilter(const Plane& src, double sigma);

/// Replicate-pad by `pad` on every side, with a cosine cross-fade across the
/// padded band so the result is continuous under periodic wraparound. The
/// interior is copied untouched.
ColorImage pad_taper(const ColorImage& img, Index pad);
ColorImage crop_border(const ColorImage& img, Index pad);

/// PNG (8/16-bit RGB) and binary PPM (P6) I/O. Samples scale linearly to
/// [0,1]; grayscale files are rejected. Writing clamps to [0,1] and
/// quantizes; `bit_depth` is 8 or 16; format follows the file extension.
ColorImage load_image(const std::string& path);
void save_image(const ColorImage& img, const std::string& path,
                int bit_depth = 8);

}  // namespace qdeblur
