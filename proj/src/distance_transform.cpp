#include "explore/distance_transform.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace explore {

namespace {

// 1D squared distance transform of a sampled function (Felzenszwalb &
// Huttenlocher). d[p] = min_q (p-q)^2 + f[q].
void transform_1d(const std::vector<double>& f, std::vector<double>& d,
                  std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = 0;
  v[0] = 0;
  z[0] = -kNoSource;
  z[1] = kNoSource;
  for (int q = 1; q < n; ++q) {
    double s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * (q - v[k]));
    while (s <= z[k]) {
      --k;
      s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * (q - v[k]));
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kNoSource;
  }
  k = 0;
  for (int p = 0; p < n; ++p) {
    while (z[k + 1] < p) ++k;
    const double dq = p - v[k];
    d[p] = dq * dq + f[v[k]];
  }
}

}  // namespace

Raster<double> squared_cell_distance(const Raster<unsigned char>& sources) {
  const int w = sources.width();
  const int h = sources.height();
  Raster<double> dist(w, h, kNoSource);

  // Columns first.
  {
    std::vector<double> f(h), d(h), z(h + 1);
    std::vector<int> v(h);
    for (int cx = 0; cx < w; ++cx) {
      for (int cy = 0; cy < h; ++cy) f[cy] = sources.at(cx, cy) ? 0.0 : kNoSource;
      transform_1d(f, d, v, z);
      for (int cy = 0; cy < h; ++cy) dist.at(cx, cy) = d[cy];
    }
  }
  // Then rows.
  {
    std::vector<double> f(w), d(w), z(w + 1);
    std::vector<int> v(w);
    for (int cy = 0; cy < h; ++cy) {
      for (int cx = 0; cx < w; ++cx) f[cx] = dist.at(cx, cy);
      transform_1d(f, d, v, z);
      for (int cx = 0; cx < w; ++cx) dist.at(cx, cy) = d[cx];
    }
  }
  return dist;
}

Raster<double> truncated_distance_m(const Raster<unsigned char>& sources,
                                    double resolution, double cap) {
  Raster<double> sq = squared_cell_distance(sources);
  Raster<double> out(sources.width(), sources.height(), cap);
  for (size_t i = 0; i < sq.size(); ++i)
    out[i] = std::min(cap, std::sqrt(sq[i]) * resolution);
  return out;
}

}  // namespace explore
