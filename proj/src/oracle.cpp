#include "pst/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace pst {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// Phase table exp(2*pi*i*k/e) for k in [0, e).
std::vector<std::complex<double>> root_table(long long e) {
  std::vector<std::complex<double>> w(static_cast<size_t>(e));
  for (long long k = 0; k < e; ++k)
    w[static_cast<size_t>(k)] = std::polar(1.0, kTau * static_cast<double>(k) / static_cast<double>(e));
  return w;
}

struct Evaluator {
  const CayleyGraph& g;
  std::vector<double> alpha;
  std::vector<long long> chi_k;  // char_exponent(a, x) per x
  std::vector<std::complex<double>> roots;

  Evaluator(const CayleyGraph& graph, long long from, long long to)
      : g(graph), alpha(transfer_spectrum(graph)), roots(root_table(graph.group().exponent())) {
    const Group& grp = g.group();
    long long a = grp.add(grp.negate(to), from);  // chi_{g-h}
    chi_k.resize(static_cast<size_t>(g.order()));
    for (long long x = 0; x < g.order(); ++x)
      chi_k[static_cast<size_t>(x)] = grp.char_exponent(a, x);
  }

  std::complex<double> at(double t) const {
    std::complex<double> sum = 0.0;
    for (size_t x = 0; x < alpha.size(); ++x)
      sum += std::polar(1.0, t * alpha[x]) * roots[static_cast<size_t>(chi_k[x])];
    return sum / static_cast<double>(alpha.size());
  }
};

}  // namespace

std::vector<double> transfer_spectrum(const CayleyGraph& g) {
  std::vector<double> out(static_cast<size_t>(g.order()));
  if (g.integral()) {
    for (long long x = 0; x < g.order(); ++x)
      out[static_cast<size_t>(x)] = static_cast<double>(eigenvalue_exact(g, x));
  } else {
    for (long long x = 0; x < g.order(); ++x)
      out[static_cast<size_t>(x)] = eigenvalue_float(g, x);
  }
  return out;
}

std::complex<double> transfer_entry(const CayleyGraph& g, long long from, long long to, double t) {
  return Evaluator(g, from, to).at(t);
}

VerifyResult verify_pst(const CayleyGraph& g, long long from, long long to, const Rational& t_pi,
                        double tol) {
  double mag = std::abs(transfer_entry(g, from, to, pi_value(t_pi)));
  VerifyResult r;
  r.residual = std::abs(mag - 1.0);
  r.ok = r.residual < tol;
  return r;
}

VerifyResult verify_period(const CayleyGraph& g, long long vertex, const Rational& t_pi,
                           double tol) {
  return verify_pst(g, vertex, vertex, t_pi, tol);
}

std::vector<FidelitySample> fidelity_scan(const CayleyGraph& g, long long from, long long to,
                                          double t_max, long long steps) {
  if (steps < 2) throw input_error("scan needs at least 2 steps");
  if (!(t_max > 0)) throw input_error("scan needs t_max > 0");
  Evaluator ev(g, from, to);
  std::vector<FidelitySample> out;
  out.reserve(static_cast<size_t>(steps));
  for (long long s = 0; s < steps; ++s) {
    double t = t_max * static_cast<double>(s) / static_cast<double>(steps - 1);
    out.push_back({t, std::abs(ev.at(t))});
  }
  return out;
}

void write_scan_csv(std::ostream& out, const std::vector<FidelitySample>& samples) {
  out << "t,magnitude\n";
  char buf[80];
  for (const FidelitySample& s : samples) {
    std::snprintf(buf, sizeof buf, "%.15g,%.15g\n", s.t, s.magnitude);
    out << buf;
  }
}

CrosscheckResult dense_crosscheck(const CayleyGraph& g, double t, double tol) {
  long long n = g.order();
  if (n > 512) throw input_error("dense crosscheck is limited to order <= 512");
  const Group& grp = g.group();
  auto roots = root_table(grp.exponent());
  std::vector<double> alpha = transfer_spectrum(g);

  // Unitary eigenvector matrix P_{x,y} = chi_x(y)/sqrt(n) and the evolved
  // product P diag(exp(i t alpha)) P*.
  Eigen::MatrixXcd p(n, n);
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y)
      p(x, y) = roots[static_cast<size_t>(grp.char_exponent(x, y))] * scale;
  Eigen::VectorXcd d(n);
  for (long long x = 0; x < n; ++x) d(x) = std::polar(1.0, t * alpha[static_cast<size_t>(x)]);
  Eigen::MatrixXcd h2 = p * d.asDiagonal() * p.adjoint();

  // Closed form, one value per difference from - to.
  std::vector<std::complex<double>> by_diff(static_cast<size_t>(n));
  for (long long a = 0; a < n; ++a) {
    std::complex<double> sum = 0.0;
    for (long long x = 0; x < n; ++x)
      sum += std::polar(1.0, t * alpha[static_cast<size_t>(x)]) *
             roots[static_cast<size_t>(grp.char_exponent(a, x))];
    by_diff[static_cast<size_t>(a)] = sum / static_cast<double>(n);
  }
  Eigen::MatrixXcd h1(n, n);
  for (long long u = 0; u < n; ++u)
    for (long long v = 0; v < n; ++v)
      h1(u, v) = by_diff[static_cast<size_t>(grp.add(u, grp.negate(v)))];

  CrosscheckResult r;
  r.max_entry_dev = (h1 - h2).cwiseAbs().maxCoeff();
  Eigen::MatrixXcd uu = h1 * h1.adjoint() - Eigen::MatrixXcd::Identity(n, n);
  r.max_unitarity_dev = uu.cwiseAbs().maxCoeff();
  r.ok = r.max_entry_dev < tol && r.max_unitarity_dev < tol;
  return r;
}

}  // namespace pst
