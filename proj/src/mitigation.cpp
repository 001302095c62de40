#include "nucresp/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

namespace nucresp {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::richardson: return "richardson";
    case Strategy::polynomial: return "polynomial";
    case Strategy::exponential: return "exponential";
  }
  throw std::logic_error("strategy_name: unreachable");
}

const char* filter_name(FilterLevel f) {
  switch (f) {
    case FilterLevel::A0: return "A0";
    case FilterLevel::A1: return "A1";
    case FilterLevel::A2: return "A2";
    case FilterLevel::rejected: return "REJECTED";
  }
  throw std::logic_error("filter_name: unreachable");
}

namespace {

bool compatible(double a, double sa, double b, double sb) {
  return std::abs(a - b) <= std::sqrt(sa * sa + sb * sb);
}

// Lawson-Hanson nonnegative least squares: minimize |A x - b| with x >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  const Eigen::Index ncol = A.cols();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(ncol);
  std::vector<bool> passive(static_cast<std::size_t>(ncol), false);
  Eigen::VectorXd w = A.transpose() * (b - A * x);
  const double tol = 1e-12 * A.cwiseAbs().maxCoeff();
  for (int outer = 0; outer < 10 * ncol; ++outer) {
    Eigen::Index best = -1;
    double best_w = tol;
    for (Eigen::Index j = 0; j < ncol; ++j)
      if (!passive[static_cast<std::size_t>(j)] && w[j] > best_w) {
        best_w = w[j];
        best = j;
      }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;
    for (int inner = 0; inner < 10 * ncol; ++inner) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index j = 0; j < ncol; ++j)
        if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
      Eigen::MatrixXd Ap(A.rows(), static_cast<Eigen::Index>(idx.size()));
      for (std::size_t j = 0; j < idx.size(); ++j)
        Ap.col(static_cast<Eigen::Index>(j)) = A.col(idx[j]);
      const Eigen::VectorXd z = Ap.colPivHouseholderQr().solve(b);
      if (z.minCoeff() > 0.0) {
        x.setZero();
        for (std::size_t j = 0; j < idx.size(); ++j)
          x[idx[j]] = z[static_cast<Eigen::Index>(j)];
        break;
      }
      double alpha = 1.0;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const double zj = z[static_cast<Eigen::Index>(j)];
        const double xj = x[idx[j]];
        if (zj <= 0.0 && xj - zj > 0.0) alpha = std::min(alpha, xj / (xj - zj));
      }
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const Eigen::Index col = idx[j];
        x[col] += alpha * (z[static_cast<Eigen::Index>(j)] - x[col]);
        if (x[col] <= 1e-14) {
          x[col] = 0.0;
          passive[static_cast<std::size_t>(col)] = false;
        }
      }
    }
    w = A.transpose() * (b - A * x);
  }
  return x;
}

void sort_points(std::vector<NoisePoint>& pts) {
  std::sort(pts.begin(), pts.end(),
            [](const NoisePoint& a, const NoisePoint& b) { return a.k < b.k; });
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].k == pts[i - 1].k)
      throw std::invalid_argument("extrapolation: duplicate amplification level");
}

// Degree-m interpolant through the first m+1 points, evaluated at k = 0,
// with the variance propagated through the Lagrange weights.
std::pair<double, double> lagrange_at_zero(const std::vector<NoisePoint>& pts,
                                           int order) {
  double value = 0.0, var = 0.0;
  for (int i = 0; i <= order; ++i) {
    double w = 1.0;
    for (int j = 0; j <= order; ++j) {
      if (j == i) continue;
      w *= (0.0 - pts[static_cast<std::size_t>(j)].k) /
           static_cast<double>(pts[static_cast<std::size_t>(i)].k -
                               pts[static_cast<std::size_t>(j)].k);
    }
    value += w * pts[static_cast<std::size_t>(i)].value;
    var += w * w * pts[static_cast<std::size_t>(i)].sigma *
           pts[static_cast<std::size_t>(i)].sigma;
  }
  return {value, std::sqrt(var)};
}

std::optional<std::pair<int, std::pair<double, double>>> richardson_pass(
    const std::vector<NoisePoint>& pts) {
  const int top = static_cast<int>(pts.size()) - 1;
  std::vector<std::pair<double, double>> est(static_cast<std::size_t>(top) + 1);
  for (int m = 0; m <= top; ++m)
    est[static_cast<std::size_t>(m)] = lagrange_at_zero(pts, m);
  for (int m = 0; m <= top; ++m) {
    bool ok = true;
    for (int h = m + 1; h <= top; ++h)
      if (!compatible(est[static_cast<std::size_t>(m)].first,
                      est[static_cast<std::size_t>(m)].second,
                      est[static_cast<std::size_t>(h)].first,
                      est[static_cast<std::size_t>(h)].second)) {
        ok = false;
        break;
      }
    if (ok) return std::make_pair(m, est[static_cast<std::size_t>(m)]);
  }
  return std::nullopt;
}

struct PolyFit {
  double intercept;
  double sigma;
  double chi2;
  int dof;
};

PolyFit weighted_polyfit(const std::vector<NoisePoint>& pts, int order) {
  const Eigen::Index npts = static_cast<Eigen::Index>(pts.size());
  const Eigen::Index ncoef = order + 1;
  Eigen::MatrixXd X(npts, ncoef);
  Eigen::VectorXd y(npts), wgt(npts);
  for (Eigen::Index i = 0; i < npts; ++i) {
    const auto& p = pts[static_cast<std::size_t>(i)];
    double pw = 1.0;
    for (Eigen::Index c = 0; c < ncoef; ++c) {
      X(i, c) = pw;
      pw *= p.k;
    }
    y[i] = p.value;
    const double s = p.sigma > 0.0 ? p.sigma : 1e-12;
    wgt[i] = 1.0 / s;
  }
  const Eigen::MatrixXd Xw = wgt.asDiagonal() * X;
  const Eigen::VectorXd yw = wgt.asDiagonal() * y;
  const Eigen::MatrixXd gram = Xw.transpose() * Xw;
  const Eigen::MatrixXd cov = gram.inverse();
  const Eigen::VectorXd coef = cov * (Xw.transpose() * yw);
  const double chi2 = (yw - Xw * coef).squaredNorm();
  return {coef[0], std::sqrt(cov(0, 0)), chi2,
          static_cast<int>(npts - ncoef)};
}

std::optional<std::pair<int, PolyFit>> polynomial_pass(
    const std::vector<NoisePoint>& pts, int max_order) {
  std::vector<PolyFit> fits;
  for (int m = 0; m <= max_order; ++m) fits.push_back(weighted_polyfit(pts, m));
  for (int m = 0; m <= max_order; ++m) {
    const auto& f = fits[static_cast<std::size_t>(m)];
    if (f.dof > 0 && f.chi2 / f.dof > 1.0) continue;
    bool ok = true;
    for (int h = m + 1; h <= max_order; ++h) {
      const auto& g = fits[static_cast<std::size_t>(h)];
      if (!compatible(f.intercept, f.sigma, g.intercept, g.sigma)) {
        ok = false;
        break;
      }
    }
    if (ok) return std::make_pair(m, f);
  }
  return std::nullopt;
}

}  // namespace

ReadoutCorrection correct_readout(const MeasuredDistribution& dist,
                                  const std::vector<ConfusionMatrix>& calibration) {
  const std::size_t n = dist.n;
  if (calibration.size() != n && calibration.size() != 1)
    throw std::invalid_argument("correct_readout: calibration size mismatch");
  for (const auto& cm : calibration) cm.validate();
  const auto cal = [&](std::size_t q) {
    return calibration.size() == 1 ? calibration[0] : calibration[q];
  };
  const std::size_t dim = std::size_t{1} << n;

  Eigen::VectorXd p = dist.probabilities;
  Eigen::VectorXd var = dist.sigmas.cwiseAbs2();
  for (std::size_t q = 0; q < n; ++q) {
    const Eigen::Matrix2d inv = cal(q).inverse();
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const std::uint64_t j = i | bit;
      const double a0 = p[i], a1 = p[j];
      p[i] = inv(0, 0) * a0 + inv(0, 1) * a1;
      p[j] = inv(1, 0) * a0 + inv(1, 1) * a1;
      const double v0 = var[i], v1 = var[j];
      var[i] = inv(0, 0) * inv(0, 0) * v0 + inv(0, 1) * inv(0, 1) * v1;
      var[j] = inv(1, 0) * inv(1, 0) * v0 + inv(1, 1) * inv(1, 1) * v1;
    }
  }
  Eigen::VectorXd sigma = var.cwiseSqrt();

  ReadoutCorrection out;
  bool unphysical = false;
  for (std::uint64_t i = 0; i < dim; ++i)
    if (p[i] < -2.0 * sigma[i]) unphysical = true;
  if (unphysical) {
    // nonnegative least squares against the full tensor-product calibration;
    // keep the simple-inversion error estimates
    Eigen::MatrixXd model = Eigen::MatrixXd::Identity(1, 1);
    for (std::size_t q = 0; q < n; ++q) {
      const Eigen::Matrix2d m = cal(q).matrix();
      Eigen::MatrixXd next(model.rows() * 2, model.cols() * 2);
      next << m(0, 0) * model, m(0, 1) * model, m(1, 0) * model, m(1, 1) * model;
      model = std::move(next);
    }
    p = nnls(model, dist.probabilities);
    out.fallback = true;
    out.error_count = 1;
  }

  out.corrected.n = n;
  out.corrected.shots = dist.shots;
  out.corrected.probabilities = std::move(p);
  out.corrected.sigmas = std::move(sigma);
  return out;
}

ExtrapolationResult richardson(std::vector<NoisePoint> points) {
  sort_points(points);
  if (points.size() < 2)
    throw std::invalid_argument("richardson: needs at least two points");
  ExtrapolationResult res;
  res.strategy = Strategy::richardson;
  if (auto hit = richardson_pass(points)) {
    res.ok = true;
    res.order_used = hit->first;
    res.value = hit->second.first;
    res.sigma = hit->second.second;
    return res;
  }
  res.error_count = 1;
  res.used_all_points = false;
  points.pop_back();
  if (points.size() >= 2) {
    if (auto hit = richardson_pass(points)) {
      res.ok = true;
      res.order_used = hit->first;
      res.value = hit->second.first;
      res.sigma = hit->second.second;
      return res;
    }
  }
  res.ok = false;
  return res;
}

ExtrapolationResult polynomial(std::vector<NoisePoint> points) {
  sort_points(points);
  if (points.size() < 2)
    throw std::invalid_argument("polynomial: needs at least two points");
  ExtrapolationResult res;
  res.strategy = Strategy::polynomial;
  const int max_order = static_cast<int>(points.size()) - 1;
  if (auto hit = polynomial_pass(points, std::min(3, max_order))) {
    res.ok = true;
    res.order_used = hit->first;
    res.value = hit->second.intercept;
    res.sigma = hit->second.sigma;
    return res;
  }
  res.error_count = 1;
  res.used_all_points = false;
  points.pop_back();
  if (points.size() >= 2) {
    const int retry_order = static_cast<int>(points.size()) - 1;
    if (auto hit = polynomial_pass(points, std::min(2, retry_order))) {
      res.ok = true;
      res.order_used = hit->first;
      res.value = hit->second.intercept;
      res.sigma = hit->second.sigma;
      return res;
    }
  }
  res.error_count = 2;
  res.ok = false;
  return res;
}

ExtrapolationResult exponential(std::vector<NoisePoint> points,
                                double depolarized_value) {
  sort_points(points);
  if (points.size() < 2)
    throw std::invalid_argument("exponential: needs at least two points");
  ExtrapolationResult res;
  res.strategy = Strategy::exponential;
  const double m_inf = depolarized_value;

  // Solve M(k) = M_inf + (M_0 - M_inf) g^k on (k1, kj): g^(kj-k1) = ratio.
  const auto solve = [&](const NoisePoint& p1, const NoisePoint& pj)
      -> std::optional<std::pair<double, double>> {
    const double d1 = p1.value - m_inf;
    const double dj = pj.value - m_inf;
    if (std::abs(d1) < 1e-300) return std::nullopt;
    const double ratio = dj / d1;
    if (ratio <= 0.0 || ratio > 1.0 + 1e-12) return std::nullopt;
    const double g = std::pow(std::min(ratio, 1.0),
                              1.0 / static_cast<double>(pj.k - p1.k));
    if (g <= 0.0 || g > 1.0) return std::nullopt;
    // extrapolate from k1 down to 0: value - M_inf = d1^a dj^b with
    // a = kj/(kj-k1), b = -k1/(kj-k1)
    const double a = static_cast<double>(pj.k) / (pj.k - p1.k);
    const double b = -static_cast<double>(p1.k) / (pj.k - p1.k);
    const double excess = d1 / std::pow(g, p1.k);
    const double value = m_inf + excess;
    const double dv_d1 = a * excess / d1;
    const double dv_dj = std::abs(dj) < 1e-300 ? 0.0 : b * excess / dj;
    const double var = dv_d1 * dv_d1 * p1.sigma * p1.sigma +
                       dv_dj * dv_dj * pj.sigma * pj.sigma;
    return std::make_pair(value, std::sqrt(var));
  };

  const auto primary = solve(points[0], points[1]);
  if (!primary) {
    res.ok = false;
    res.error_count = 1;
    return res;
  }
  res.ok = true;
  res.order_used = 1;
  res.value = primary->first;
  res.sigma = primary->second;
  for (std::size_t j = 2; j < points.size(); ++j) {
    const auto alt = solve(points[0], points[j]);
    if (!alt || !compatible(primary->first, primary->second, alt->first,
                            alt->second))
      res.error_count += 1;
  }
  return res;
}

MitigationReport combine(const std::vector<ExtrapolationResult>& results,
                         int extra_errors) {
  if (results.empty())
    throw std::invalid_argument("combine: needs at least one strategy result");
  MitigationReport rep;
  rep.strategies = results;
  int total_errors = extra_errors;
  for (const auto& r : results) total_errors += r.error_count;
  rep.error_count = total_errors;

  const ExtrapolationResult* linear = nullptr;
  for (const auto& r : results)
    if (r.ok && r.strategy == Strategy::polynomial && r.order_used == 1 &&
        r.used_all_points)
      linear = &r;

  std::vector<const ExtrapolationResult*> alive;
  for (const auto& r : results)
    if (r.ok) alive.push_back(&r);

  if (linear != nullptr) {
    rep.ok = true;
    rep.value = linear->value;
    rep.sigma = linear->sigma;
    rep.source = strategy_name(linear->strategy);
  } else if (!alive.empty()) {
    int min_err = alive.front()->error_count;
    for (const auto* r : alive) min_err = std::min(min_err, r->error_count);
    double vsum = 0.0, ssum = 0.0;
    std::string names;
    int cnt = 0;
    for (const auto* r : alive)
      if (r->error_count == min_err) {
        vsum += r->value;
        ssum += r->sigma;
        if (cnt) names += "+";
        names += strategy_name(r->strategy);
        ++cnt;
      }
    rep.ok = true;
    rep.value = vsum / cnt;
    rep.sigma = ssum / cnt;
    rep.source = cnt > 1 ? "average(" + names + ")" : names;
  }

  if (!rep.ok)
    rep.filter = FilterLevel::rejected;
  else if (total_errors == 0)
    rep.filter = FilterLevel::A0;
  else if (total_errors == 1)
    rep.filter = FilterLevel::A1;
  else if (total_errors == 2)
    rep.filter = FilterLevel::A2;
  else
    rep.filter = FilterLevel::rejected;
  return rep;
}

double overlap_with_depolarized(const MeasuredDistribution& dist) {
  const double uniform = 1.0 / static_cast<double>(dist.probabilities.size());
  double dist_sum = 0.0;
  for (Eigen::Index i = 0; i < dist.probabilities.size(); ++i)
    dist_sum += std::abs(uniform - dist.probabilities[i]);
  return 1.0 - dist_sum / 2.0;
}

DecoherenceCheck decoherence_check(const std::vector<MeasuredDistribution>& dists) {
  if (dists.empty())
    throw std::invalid_argument("decoherence_check: needs distributions");
  DecoherenceCheck out;
  const double base = overlap_with_depolarized(dists[0]);
  int high = 0;
  for (std::size_t i = 1; i < dists.size(); ++i)
    if (overlap_with_depolarized(dists[i]) > 0.9) ++high;
  if (high >= 2) {
    out.decohered = true;
    out.error_count = 1;
  }
  if (base >= 0.9) out.decohered = true;
  return out;
}

}  // namespace nucresp
