#pragma once

// Pointwise numerical checks of explicit contact metric structures.
//
// Tensors are matrices in the chart basis e_0, ..., e_{m-1}:
//   eta      1-form, eta[j] = eta(e_j)
//   d_eta    Omega(i, j) = d eta(e_i, e_j), with (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X)
//   phi      (1,1)-tensor, column j is Phi(e_j)
//   metric   g = d eta o (Phi x 1) + eta x eta, i.e. G = Phi^T Omega + eta eta^T

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "contact_tori/error.hpp"

namespace contact_tori {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class StructureId { T3, OvertwistedS3, UnitSphereBundle };

inline std::string to_string(StructureId id) {
  switch (id) {
    case StructureId::T3: return "t3";
    case StructureId::OvertwistedS3: return "overtwisted_s3";
    case StructureId::UnitSphereBundle: return "unit_sphere_bundle";
  }
  return "?";
}

inline StructureId parse_structure_id(const std::string& s) {
  if (s == "t3") return StructureId::T3;
  if (s == "overtwisted_s3" || s == "overtwisted") return StructureId::OvertwistedS3;
  if (s == "unit_sphere_bundle" || s == "sphere_bundle") return StructureId::UnitSphereBundle;
  throw InvalidInput("unknown structure id '" + s + "' (expected t3, overtwisted_s3, unit_sphere_bundle)");
}

/// Deterministic uniform doubles in [0, 1) from a 64-bit Mersenne twister.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : rng_(seed) {}
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 rng_;
};

struct StructureCatalogEntry {
  StructureId id;
  long long param = 0;  // k for t3 / overtwisted_s3, n for the sphere bundle
  std::string name;
  std::string description;
  std::vector<std::string> coordinates;
  std::size_t dimension = 0;

  std::function<Vec(const Vec&)> eta;
  std::function<Mat(const Vec&)> d_eta;
  std::function<Vec(const Vec&)> reeb;
  std::function<Mat(const Vec&)> phi;
  std::function<bool(const Vec&)> in_chart;
  std::function<Vec(SampleStream&)> sample;
  std::vector<Vec> torus_generators;  // constant vector fields of the torus action
};

namespace detail {

// eta = cos(a u) dX + sin(a u) dY on coordinates (u, X, Y).
inline StructureCatalogEntry rotating_entry(StructureId id, long long param, double a,
                                            std::function<Vec(SampleStream&)> sampler) {
  StructureCatalogEntry e;
  e.id = id;
  e.param = param;
  e.dimension = 3;
  e.eta = [a](const Vec& x) {
    Vec v(3);
    v << 0.0, std::cos(a * x[0]), std::sin(a * x[0]);
    return v;
  };
  e.d_eta = [a](const Vec& x) {
    const double c = std::cos(a * x[0]), s = std::sin(a * x[0]);
    Mat m = Mat::Zero(3, 3);
    m(0, 1) = -a * s;
    m(1, 0) = a * s;
    m(0, 2) = a * c;
    m(2, 0) = -a * c;
    return m;
  };
  e.reeb = [a](const Vec& x) {
    Vec v(3);
    v << 0.0, std::cos(a * x[0]), std::sin(a * x[0]);
    return v;
  };
  e.phi = [a](const Vec& x) {
    const double c = std::cos(a * x[0]), s = std::sin(a * x[0]);
    Mat m = Mat::Zero(3, 3);
    m(0, 1) = -s / a;
    m(0, 2) = c / a;
    m(1, 0) = a * s;
    m(2, 0) = -a * c;
    return m;
  };
  e.in_chart = [](const Vec& x) { return x.size() == 3 && x.allFinite(); };
  e.sample = std::move(sampler);
  e.torus_generators = {Vec::Unit(3, 1), Vec::Unit(3, 2)};
  return e;
}

}  // namespace detail

/// eta_k = cos(k theta) dx1 + sin(k theta) dx2 on T^3, chart (theta, x1, x2).
inline StructureCatalogEntry t3(long long k) {
  if (k < 1) throw InvalidInput("t3 needs k >= 1");
  const double two_pi = 2 * std::numbers::pi;
  auto e = detail::rotating_entry(StructureId::T3, k, static_cast<double>(k), [two_pi](SampleStream& r) {
    Vec x(3);
    x << r.uniform(0, two_pi), r.uniform(0, two_pi), r.uniform(0, two_pi);
    return x;
  });
  e.name = "t3(k=" + std::to_string(k) + ")";
  e.description = "T^3 with eta_k = cos(k theta) dx1 + sin(k theta) dx2";
  e.coordinates = {"theta", "x1", "x2"};
  return e;
}

/// eta_k = cos((2k + 1/2) pi t) d theta1 + sin((2k + 1/2) pi t) d theta2 on
/// S^3 away from the core circles, chart (t, theta1, theta2) with t in (0, 1).
/// k = 0 is the standard tight structure; k >= 1 is overtwisted.
inline StructureCatalogEntry overtwisted_s3(long long k) {
  if (k < 0) throw InvalidInput("overtwisted_s3 needs k >= 0");
  const double a = (2.0 * static_cast<double>(k) + 0.5) * std::numbers::pi;
  const double two_pi = 2 * std::numbers::pi;
  auto e = detail::rotating_entry(StructureId::OvertwistedS3, k, a, [two_pi](SampleStream& r) {
    Vec x(3);
    x << r.uniform(0.01, 0.99), r.uniform(0, two_pi), r.uniform(0, two_pi);
    return x;
  });
  e.name = "overtwisted_s3(k=" + std::to_string(k) + ")";
  e.description = k == 0 ? "S^3, the standard tight contact structure"
                         : "S^3, overtwisted structure D_" + std::to_string(k);
  e.coordinates = {"t", "theta1", "theta2"};
  e.in_chart = [](const Vec& x) { return x.size() == 3 && x.allFinite() && x[0] > 0 && x[0] < 1; };
  return e;
}

/// Unit cosphere bundle of T^{n+1} on the chart p_0 > 0:
/// coordinates (x^0, x^1..x^n, p_1..p_n), rho = sqrt(1 - |p|^2),
/// eta = rho dx^0 + p . dx, xi = rho d/dx^0 + p . d/dx,
/// Phi = sum_i d/dp_i x S_i - R_i x dp_i with S_i = dx^i - p_i eta,
/// R_i = d/dx^i - (p_i / rho) d/dx^0.
inline StructureCatalogEntry unit_sphere_bundle(long long n) {
  if (n < 1) throw InvalidInput("unit_sphere_bundle needs n >= 1");
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t m = 2 * nn + 1;
  auto xi = [](std::size_t i) { return i; };            // x^i at index i, i = 0..n
  auto pi = [nn](std::size_t i) { return nn + i; };     // p_i at index n + i, i = 1..n
  auto rho_of = [nn, pi](const Vec& x) {
    double s = 0;
    for (std::size_t i = 1; i <= nn; ++i) s += x[pi(i)] * x[pi(i)];
    return std::sqrt(1.0 - s);
  };

  StructureCatalogEntry e;
  e.id = StructureId::UnitSphereBundle;
  e.param = n;
  e.dimension = m;
  e.name = "unit_sphere_bundle(n=" + std::to_string(n) + ")";
  e.description = "unit cosphere bundle S(T^* T^" + std::to_string(n + 1) + "), chart p_0 > 0";
  for (std::size_t i = 0; i <= nn; ++i) e.coordinates.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= nn; ++i) e.coordinates.push_back("p" + std::to_string(i));

  e.eta = [=](const Vec& x) {
    Vec v = Vec::Zero(m);
    v[xi(0)] = rho_of(x);
    for (std::size_t i = 1; i <= nn; ++i) v[xi(i)] = x[pi(i)];
    return v;
  };
  e.reeb = e.eta;  // same components, read as a vector field
  e.d_eta = [=](const Vec& x) {
    const double rho = rho_of(x);
    Mat w = Mat::Zero(m, m);
    for (std::size_t i = 1; i <= nn; ++i) {
      w(pi(i), xi(0)) = -x[pi(i)] / rho;
      w(xi(0), pi(i)) = x[pi(i)] / rho;
      w(pi(i), xi(i)) = 1;
      w(xi(i), pi(i)) = -1;
    }
    return w;
  };
  e.phi = [=](const Vec& x) {
    const double rho = rho_of(x);
    Vec eta = Vec::Zero(m);
    eta[xi(0)] = rho;
    for (std::size_t i = 1; i <= nn; ++i) eta[xi(i)] = x[pi(i)];
    Mat f = Mat::Zero(m, m);
    for (std::size_t i = 1; i <= nn; ++i) {
      const double p = x[pi(i)];
      // d/dp_i x S_i
      for (std::size_t j = 0; j < m; ++j) f(pi(i), j) += -p * eta[j];
      f(pi(i), xi(i)) += 1;
      // - R_i x dp_i
      f(xi(i), pi(i)) -= 1;
      f(xi(0), pi(i)) += p / rho;
    }
    return f;
  };
  e.in_chart = [=](const Vec& x) {
    if (x.size() != static_cast<Eigen::Index>(m) || !x.allFinite()) return false;
    double s = 0;
    for (std::size_t i = 1; i <= nn; ++i) s += x[pi(i)] * x[pi(i)];
    return s < 1;
  };
  e.sample = [=](SampleStream& r) {
    const double two_pi = 2 * std::numbers::pi;
    Vec x(m);
    for (std::size_t i = 0; i <= nn; ++i) x[xi(i)] = r.uniform(0, two_pi);
    for (;;) {
      double s = 0;
      for (std::size_t i = 1; i <= nn; ++i) {
        x[pi(i)] = r.uniform(-0.9, 0.9);
        s += x[pi(i)] * x[pi(i)];
      }
      if (s <= 0.81) break;
    }
    return x;
  };
  for (std::size_t i = 0; i <= nn; ++i) e.torus_generators.push_back(Vec::Unit(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(i)));
  return e;
}

inline StructureCatalogEntry make_entry(StructureId id, long long param) {
  switch (id) {
    case StructureId::T3: return t3(param);
    case StructureId::OvertwistedS3: return overtwisted_s3(param);
    case StructureId::UnitSphereBundle: return unit_sphere_bundle(param);
  }
  throw InvalidInput("unknown structure id");
}

inline void require_chart(const StructureCatalogEntry& e, const Vec& x) {
  if (!e.in_chart(x)) throw InvalidInput("point outside the chart of " + e.name);
}

/// Gram matrix g(e_i, e_j) of g = d eta o (Phi x 1) + eta x eta.
inline Mat metric_matrix(const StructureCatalogEntry& e, const Vec& x) {
  require_chart(e, x);
  const Vec eta = e.eta(x);
  return e.phi(x).transpose() * e.d_eta(x) + eta * eta.transpose();
}

/// Omega(i, j) = d_i eta_j - d_j eta_i by central differences of eta.
inline Mat finite_difference_d_eta(const StructureCatalogEntry& e, const Vec& x, double h = 1e-6) {
  const auto m = static_cast<Eigen::Index>(e.dimension);
  Mat jac(m, m);  // jac(i, j) = d_i eta_j
  for (Eigen::Index i = 0; i < m; ++i) {
    Vec xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    jac.row(i) = ((e.eta(xp) - e.eta(xm)) / (2 * h)).transpose();
  }
  return jac - jac.transpose();
}

/// Orthonormal basis of ker eta at x, as columns.
inline Mat contact_frame(const StructureCatalogEntry& e, const Vec& x) {
  const Vec eta = e.eta(x);
  Eigen::FullPivLU<Mat> lu(eta.transpose());
  Mat k = lu.kernel();
  return Eigen::HouseholderQR<Mat>(k).householderQ() * Mat::Identity(k.rows(), k.cols());
}

struct IdentityCheck {
  std::string name;
  double residual = 0;  // max over samples; for positivity checks, max(0, -min eigenvalue)
  bool pass = true;
};

struct IdentityReport {
  std::string entry;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tol = 0;
  double fd_tol = 1e-4;
  double min_eigenvalue_contact = 0;  // smallest eigenvalue of d eta(Phi X, Y) on ker eta
  double min_eigenvalue_metric = 0;   // smallest eigenvalue of g
  std::vector<IdentityCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
  }
};

inline IdentityReport verify_identities(const StructureCatalogEntry& e, std::size_t samples, std::uint64_t seed,
                                        double tol, double fd_tol = 1e-4) {
  if (!(tol > 0)) throw InvalidInput("tolerance must be positive");
  if (!(fd_tol > 0)) throw InvalidInput("finite-difference tolerance must be positive");
  if (samples == 0) throw InvalidInput("need at least one sample");

  IdentityReport rep;
  rep.entry = e.name;
  rep.samples = samples;
  rep.seed = seed;
  rep.tol = tol;
  rep.fd_tol = fd_tol;

  enum : std::size_t { A, B, C, D, DTrace, EInv, ESym, EPos, FSym, FPos, FCompat, FD, Count };
  std::vector<double> res(Count, 0.0);
  double min_contact = std::numeric_limits<double>::infinity();
  double min_metric = std::numeric_limits<double>::infinity();
  auto bump = [&](std::size_t k, double v) { res[k] = std::max(res[k], std::isfinite(v) ? v : 1e300); };

  const auto m = static_cast<Eigen::Index>(e.dimension);
  const Mat id = Mat::Identity(m, m);
  SampleStream rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Vec x = e.sample(rng);
    require_chart(e, x);
    const Vec eta = e.eta(x);
    const Vec xi = e.reeb(x);
    const Mat w = e.d_eta(x);
    const Mat f = e.phi(x);

    bump(A, std::abs(eta.dot(xi) - 1));
    bump(B, (xi.transpose() * w).cwiseAbs().maxCoeff());
    bump(C, (f * xi).cwiseAbs().maxCoeff());
    bump(D, (f * f - (-id + xi * eta.transpose())).cwiseAbs().maxCoeff());

    const Mat fr = contact_frame(e, x);
    const Mat jf = f * fr;
    // Phi preserves ker eta and squares to -Id there.
    const Mat j_on_d = fr.transpose() * jf;
    bump(DTrace, std::abs((j_on_d * j_on_d).trace() + static_cast<double>(fr.cols())));
    bump(DTrace, (eta.transpose() * jf).cwiseAbs().maxCoeff());

    const Mat omega_d = fr.transpose() * w * fr;
    bump(EInv, (jf.transpose() * w * jf - omega_d).cwiseAbs().maxCoeff());
    const Mat gd = jf.transpose() * w * fr;  // d eta(Phi X, Y)
    bump(ESym, (gd - gd.transpose()).cwiseAbs().maxCoeff());
    const double lc = Eigen::SelfAdjointEigenSolver<Mat>(0.5 * (gd + gd.transpose())).eigenvalues().minCoeff();
    min_contact = std::min(min_contact, lc);

    const Mat g = f.transpose() * w + eta * eta.transpose();
    bump(FSym, (g - g.transpose()).cwiseAbs().maxCoeff());
    const double lg = Eigen::SelfAdjointEigenSolver<Mat>(0.5 * (g + g.transpose())).eigenvalues().minCoeff();
    min_metric = std::min(min_metric, lg);
    bump(FCompat, (f.transpose() * g * f - (g - eta * eta.transpose())).cwiseAbs().maxCoeff());

    bump(FD, (finite_difference_d_eta(e, x) - w).cwiseAbs().maxCoeff());
  }
  rep.min_eigenvalue_contact = min_contact;
  rep.min_eigenvalue_metric = min_metric;
  res[EPos] = std::max(0.0, -min_contact);
  res[FPos] = std::max(0.0, -min_metric);

  auto add = [&](std::string name, std::size_t k, double t) { rep.checks.push_back({std::move(name), res[k], res[k] <= t}); };
  add("a_eta_of_reeb", A, tol);
  add("b_reeb_in_kernel_of_d_eta", B, tol);
  add("c_phi_kills_reeb", C, tol);
  add("d_phi_squared", D, tol);
  add("d_phi_on_contact_plane", DTrace, tol);
  add("e_d_eta_phi_invariant", EInv, tol);
  add("e_d_eta_phi_symmetric", ESym, tol);
  rep.checks.push_back({"e_d_eta_phi_positive", res[EPos], min_contact > 0});
  add("f_metric_symmetric", FSym, tol);
  rep.checks.push_back({"f_metric_positive", res[FPos], min_metric > 0});
  add("f_metric_compatible", FCompat, tol);
  add("d_eta_finite_difference", FD, fd_tol);
  return rep;
}

/// <mu(x), tau_j> = eta(tau_j)(x).
inline Vec moment_eval(const StructureCatalogEntry& e, const std::vector<Vec>& generators, const Vec& x) {
  require_chart(e, x);
  const Vec eta = e.eta(x);
  Vec mu(static_cast<Eigen::Index>(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != eta.size())
      throw InvalidInput("torus generator " + std::to_string(j) + " has wrong length for " + e.name);
    mu[static_cast<Eigen::Index>(j)] = eta.dot(generators[j]);
  }
  return mu;
}

struct MomentBatch {
  bool avoids_zero = true;
  double min_norm = 0;
};

/// Evaluates the moment map with the catalog's torus generators on seeded samples.
inline MomentBatch moment_avoids_zero(const StructureCatalogEntry& e, std::size_t samples, std::uint64_t seed,
                                      double tol = 1e-12) {
  MomentBatch out;
  out.min_norm = std::numeric_limits<double>::infinity();
  SampleStream rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const double n = moment_eval(e, e.torus_generators, e.sample(rng)).norm();
    out.min_norm = std::min(out.min_norm, n);
  }
  out.avoids_zero = out.min_norm > tol;
  return out;
}

}  // namespace contact_tori
