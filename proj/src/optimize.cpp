#include "divboot/optimize.hpp"

namespace divboot::opt {

namespace {
bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}
}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double step, double param_tol, double value_tol,
    int max_iter) {
  const int d = static_cast<int>(start.size());
  std::vector<std::vector<double>> simplex(d + 1, start);
  std::vector<double> fv(d + 1);
  for (int i = 0; i < d; ++i) simplex[i + 1][i] += step;
  for (int i = 0; i <= d; ++i) fv[i] = f(simplex[i]);

  NelderMeadResult result;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    // Order: best first, worst last; lexicographic tie-break keeps the search
    // deterministic.
    std::vector<int> order(d + 1);
    for (int i = 0; i <= d; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (fv[a] != fv[b]) return fv[a] < fv[b];
      return lex_less(simplex[a], simplex[b]);
    });
    std::vector<std::vector<double>> sx(d + 1);
    std::vector<double> sf(d + 1);
    for (int i = 0; i <= d; ++i) {
      sx[i] = simplex[order[i]];
      sf[i] = fv[order[i]];
    }
    simplex.swap(sx);
    fv.swap(sf);

    double diameter = 0.0;
    for (int i = 1; i <= d; ++i)
      for (int j = 0; j < d; ++j)
        diameter = std::max(diameter, std::abs(simplex[i][j] - simplex[0][j]));
    const double spread = std::isfinite(fv[d]) ? fv[d] - fv[0]
                                               : std::numeric_limits<double>::infinity();
    if (diameter < param_tol &&
        (spread < value_tol * (1.0 + std::abs(fv[0])) || !std::isfinite(spread))) {
      result.converged = true;
      break;
    }
    if (diameter < 1e-15) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(d, 0.0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) centroid[j] += simplex[i][j] / d;

    auto blend = [&](double coef) {
      std::vector<double> x(d);
      for (int j = 0; j < d; ++j)
        x[j] = centroid[j] + coef * (centroid[j] - simplex[d][j]);
      return x;
    };

    const auto xr = blend(1.0);
    const double fr = f(xr);
    if (fr < fv[0]) {
      const auto xe = blend(2.0);
      const double fe = f(xe);
      if (fe < fr) {
        simplex[d] = xe;
        fv[d] = fe;
      } else {
        simplex[d] = xr;
        fv[d] = fr;
      }
    } else if (fr < fv[d - 1]) {
      simplex[d] = xr;
      fv[d] = fr;
    } else {
      const bool outside = fr < fv[d];
      const auto xc = blend(outside ? 0.5 : -0.5);
      const double fc = f(xc);
      if (fc < (outside ? fr : fv[d])) {
        simplex[d] = xc;
        fv[d] = fc;
      } else {
        for (int i = 1; i <= d; ++i) {
          for (int j = 0; j < d; ++j)
            simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
          fv[i] = f(simplex[i]);
        }
      }
    }
  }
  result.x = simplex[0];
  result.value = fv[0];
  result.iterations = iter;
  return result;
}

void compass_polish(const std::function<double(const std::vector<double>&)>& f,
                    std::vector<double>& x, double& fx, double h0,
                    double hmin) {
  const int d = static_cast<int>(x.size());
  double h = h0;
  while (h >= hmin) {
    bool improved = false;
    for (int j = 0; j < d; ++j) {
      for (double s : {+1.0, -1.0}) {
        std::vector<double> y = x;
        y[j] += s * h;
        const double fy = f(y);
        if (fy < fx) {
          x = y;
          fx = fy;
          improved = true;
        }
      }
    }
    if (!improved) h *= 0.5;
  }
}

std::vector<double> halton_point(int index, int dim) {
  static constexpr int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  std::vector<double> point(dim);
  for (int j = 0; j < dim; ++j) {
    const int base = primes[j % 10];
    double f = 1.0, r = 0.0;
    int i = index + 1;
    while (i > 0) {
      f /= base;
      r += f * (i % base);
      i /= base;
    }
    point[j] = r;
  }
  return point;
}

}  // namespace divboot::opt
