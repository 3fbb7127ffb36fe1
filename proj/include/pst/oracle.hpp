#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "pst/rational.hpp"
#include "pst/spectrum.hpp"

namespace pst {

// Real spectrum used by the transfer oracle: exact table when the graph is
// integral, cosine sums otherwise (simple graphs only).
std::vector<double> transfer_spectrum(const CayleyGraph& g);

// H_{from,to}(t) = (1/n) sum_x exp(i*t*alpha_x) chi_{from-to}(x).
std::complex<double> transfer_entry(const CayleyGraph& g, long long from, long long to, double t);

struct VerifyResult {
  bool ok = false;
  double residual = 0.0;  // | |H| - 1 |
};

// Check |H_{from,to}(pi*t_pi)| = 1 within tol.
VerifyResult verify_pst(const CayleyGraph& g, long long from, long long to, const Rational& t_pi,
                        double tol = 1e-9);
VerifyResult verify_period(const CayleyGraph& g, long long vertex, const Rational& t_pi,
                           double tol = 1e-9);

struct FidelitySample {
  double t = 0.0;
  double magnitude = 0.0;
};

// Uniform grid of steps samples over [0, t_max] (steps >= 2 includes both ends).
std::vector<FidelitySample> fidelity_scan(const CayleyGraph& g, long long from, long long to,
                                          double t_max, long long steps);

// CSV rows "t,magnitude" with 15 significant digits and a header line.
void write_scan_csv(std::ostream& out, const std::vector<FidelitySample>& samples);

struct CrosscheckResult {
  bool ok = false;
  double max_entry_dev = 0.0;      // closed form vs P diag(exp(it*alpha)) P*
  double max_unitarity_dev = 0.0;  // || H H* - I ||_max
};

// Entrywise comparison of the closed-form H(t) against the explicit
// eigendecomposition product, plus a unitarity check; n <= 512.
CrosscheckResult dense_crosscheck(const CayleyGraph& g, double t, double tol = 1e-8);

}  // namespace pst
