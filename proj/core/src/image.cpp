#include "qdeblur/image.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdeblur {

ColorImage::ColorImage(Plane r_, Plane g_, Plane b_)
    : r(std::move(r_)), g(std::move(g_)), b(std::move(b_)) {
  if (r.rows() != g.rows() || r.rows() != b.rows() || r.cols() != g.cols() ||
      r.cols() != b.cols())
    throw ValidationError("ColorImage: channel dimensions differ");
}

ColorImage ColorImage::zeros(Index rows, Index cols) {
  return {Plane::Zero(rows, cols), Plane::Zero(rows, cols),
          Plane::Zero(rows, cols)};
}

ColorImage ColorImage::constant(Index rows, Index cols, double red,
                                double green, double blue) {
  return {Plane::Constant(rows, cols, red), Plane::Constant(rows, cols, green),
          Plane::Constant(rows, cols, blue)};
}

Plane& ColorImage::channel(int c) {
  switch (c) {
    case 0: return r;
    case 1: return g;
    case 2: return b;
  }
  throw ValidationError("ColorImage: channel index out of range");
}

const Plane& ColorImage::channel(int c) const {
  return const_cast<ColorImage*>(this)->channel(c);
}

Plane gradient_x(const Plane& u) {
  const Index m = u.rows(), n = u.cols();
  if (m < 2 || n < 2) throw ValidationError("gradient: plane smaller than 2x2");
  Plane g(m, n);
  for (Index j = 0; j < n; ++j) {
    const Index jn = (j + 1) % n;
    for (Index i = 0; i < m; ++i) g(i, j) = u(i, jn) - u(i, j);
  }
  return g;
}

Plane gradient_y(const Plane& u) {
  const Index m = u.rows(), n = u.cols();
  if (m < 2 || n < 2) throw ValidationError("gradient: plane smaller than 2x2");
  Plane g(m, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i) g(i, j) = u((i + 1) % m, j) - u(i, j);
  return g;
}

GradientField gradient(const ColorImage& u) {
  GradientField f;
  f.gx = ColorImage(gradient_x(u.r), gradient_x(u.g), gradient_x(u.b));
  f.gy = ColorImage(gradient_y(u.r), gradient_y(u.g), gradient_y(u.b));
  return f;
}

Plane gradient_x_adjoint(const Plane& gx) {
  const Index m = gx.rows(), n = gx.cols();
  Plane out(m, n);
  for (Index j = 0; j < n; ++j) {
    const Index jp = (j + n - 1) % n;
    for (Index i = 0; i < m; ++i) out(i, j) = gx(i, jp) - gx(i, j);
  }
  return out;
}

Plane gradient_y_adjoint(const Plane& gy) {
  const Index m = gy.rows(), n = gy.cols();
  Plane out(m, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i) out(i, j) = gy((i + m - 1) % m, j) - gy(i, j);
  return out;
}

ColorImage divergence_adjoint(const GradientField& g) {
  if (g.gx.rows() != g.gy.rows() || g.gx.cols() != g.gy.cols())
    throw ValidationError("divergence_adjoint: gx/gy dimensions differ");
  ColorImage out;
  out.r = gradient_x_adjoint(g.gx.r) + gradient_y_adjoint(g.gy.r);
  out.g = gradient_x_adjoint(g.gx.g) + gradient_y_adjoint(g.gy.g);
  out.b = gradient_x_adjoint(g.gx.b) + gradient_y_adjoint(g.gy.b);
  return out;
}

int round_to_odd(double x) {
  return 2 * static_cast<int>(std::floor(x / 2.0)) + 1;
}

Plane gaussian_prefilter(const Plane& src, double sigma) {
  if (sigma <= 0.0) return src;
  const int half = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  Eigen::ArrayXd k(2 * half + 1);
  for (int t = -half; t <= half; ++t)
    k(t + half) = std::exp(-0.5 * (t * t) / (sigma * sigma));
  k /= k.sum();

  const Index m = src.rows(), n = src.cols();
  Plane tmp(m, n), out(m, n);
  // separable, replicate boundary
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int t = -half; t <= half; ++t)
        acc += k(t + half) * src(std::clamp<Index>(i + t, 0, m - 1), j);
      tmp(i, j) = acc;
    }
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int t = -half; t <= half; ++t)
        acc += k(t + half) * tmp(i, std::clamp<Index>(j + t, 0, n - 1));
      out(i, j) = acc;
    }
  return out;
}

Plane resize_bilinear(const Plane& src, Index rows, Index cols,
                      bool zero_outside) {
  const Index m = src.rows(), n = src.cols();
  if (rows < 1 || cols < 1) throw ValidationError("resize_bilinear: empty target");
  Plane out(rows, cols);
  const double ri = static_cast<double>(m) / static_cast<double>(rows);
  const double rj = static_cast<double>(n) / static_cast<double>(cols);
  auto sample = [&](Index i, Index j) -> double {
    if (zero_outside) {
      if (i < 0 || i >= m || j < 0 || j >= n) return 0.0;
      return src(i, j);
    }
    return src(std::clamp<Index>(i, 0, m - 1), std::clamp<Index>(j, 0, n - 1));
  };
  for (Index j = 0; j < cols; ++j) {
    const double y = (j + 0.5) * rj - 0.5;
    const Index j0 = static_cast<Index>(std::floor(y));
    const double wy = y - j0;
    for (Index i = 0; i < rows; ++i) {
      const double x = (i + 0.5) * ri - 0.5;
      const Index i0 = static_cast<Index>(std::floor(x));
      const double wx = x - i0;
      out(i, j) = (1 - wx) * (1 - wy) * sample(i0, j0) +
                  wx * (1 - wy) * sample(i0 + 1, j0) +
                  (1 - wx) * wy * sample(i0, j0 + 1) +
                  wx * wy * sample(i0 + 1, j0 + 1);
    }
  }
  return out;
}

Plane resize_bilinear(const Plane& src, Index rows, Index cols) {
  return resize_bilinear(src, rows, cols, false);
}

Pyramid build_pyramid(const ColorImage& f, int kernel_size, double scale,
                      int min_kernel) {
  if (!(scale > 0.0 && scale < 1.0))
    throw ValidationError("build_pyramid: scale must be in (0,1)");
  if (min_kernel < 3 || min_kernel % 2 == 0)
    throw ValidationError("build_pyramid: min_kernel must be odd and >= 3");
  if (kernel_size < min_kernel || kernel_size % 2 == 0)
    throw ValidationError("build_pyramid: kernel_size must be odd and >= min_kernel");

  // Kernel sizes finest-first until the recurrence reaches min_kernel.
  std::vector<int> sizes{kernel_size};
  while (sizes.back() > min_kernel) {
    const int k = static_cast<int>(sizes.size());
    int s = round_to_odd(kernel_size * std::pow(scale, k));
    if (s >= sizes.back()) s = sizes.back() - 2;  // force progress
    sizes.push_back(std::max(s, min_kernel));
  }
  const int levels = static_cast<int>(sizes.size());

  Pyramid pyr;
  pyr.scale = scale;
  pyr.levels.resize(levels);
  for (int l = 0; l < levels; ++l) {
    // level 0 is the coarsest
    const int size = sizes[levels - 1 - l];
    const double factor = std::pow(scale, levels - 1 - l);
    PyramidLevel& lvl = pyr.levels[l];
    lvl.kernel_size = size;
    if (l == levels - 1) {
      lvl.image = f;
    } else {
      const Index rows =
          std::max<Index>(1, static_cast<Index>(std::llround(f.rows() * factor)));
      const Index cols =
          std::max<Index>(1, static_cast<Index>(std::llround(f.cols() * factor)));
      const double sigma = 0.5 * std::sqrt(1.0 / (factor * factor) - 1.0);
      lvl.image = ColorImage(
          resize_bilinear(gaussian_prefilter(f.r, sigma), rows, cols),
          resize_bilinear(gaussian_prefilter(f.g, sigma), rows, cols),
          resize_bilinear(gaussian_prefilter(f.b, sigma), rows, cols));
    }
    if (lvl.image.rows() < size || lvl.image.cols() < size)
      throw ValidationError("build_pyramid: image smaller than kernel at level " +
                            std::to_string(l));
  }
  return pyr;
}

namespace {

// Fill the wrap band between the replicated edges with a raised-cosine blend
// so opposite borders meet smoothly under periodic boundary conditions.
void taper_rows(Plane& p, Index pad, Index orig_rows) {
  const Index total = p.rows();
  const Index band = 2 * pad;
  for (Index j = 0; j < p.cols(); ++j) {
    const double lo = p(pad + orig_rows - 1, j);  // last interior sample
    const double hi = p(pad, j);                  // first interior sample
    for (Index t = 1; t <= band; ++t) {
      const double w = 0.5 * (1.0 - std::cos(std::numbers::pi * t / (band + 1)));
      const Index idx = (pad + orig_rows - 1 + t) % total;
      p(idx, j) = lo + (hi - lo) * w;
    }
  }
}

Plane pad_taper_plane(const Plane& u, Index pad) {
  const Index m = u.rows(), n = u.cols();
  Plane wide(m, n + 2 * pad);
  for (Index j = 0; j < n + 2 * pad; ++j)
    wide.col(j) = u.col(std::clamp<Index>(j - pad, 0, n - 1));
  {
    Plane t = wide.transpose();
    taper_rows(t, pad, n);
    wide = t.transpose();
  }
  Plane full(m + 2 * pad, n + 2 * pad);
  for (Index i = 0; i < m + 2 * pad; ++i)
    full.row(i) = wide.row(std::clamp<Index>(i - pad, 0, m - 1));
  taper_rows(full, pad, m);
  return full;
}

}  // namespace

ColorImage pad_taper(const ColorImage& img, Index pad) {
  if (pad < 0) throw ValidationError("pad_taper: negative pad");
  if (pad == 0) return img;
  return {pad_taper_plane(img.r, pad), pad_taper_plane(img.g, pad),
          pad_taper_plane(img.b, pad)};
}

ColorImage crop_border(const ColorImage& img, Index pad) {
  if (pad == 0) return img;
  const Index m = img.rows() - 2 * pad, n = img.cols() - 2 * pad;
  if (m < 1 || n < 1) throw ValidationError("crop_border: pad exceeds image");
  ColorImage out;
  out.r = img.r.block(pad, pad, m, n);
  out.g = img.g.block(pad, pad, m, n);
  out.b = img.b.block(pad, pad, m, n);
  return out;
}

}  // namespace qdeblur
