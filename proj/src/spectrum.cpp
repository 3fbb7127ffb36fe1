#include "pst/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace pst {

namespace {

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Moebius mu; 0 for non-squarefree.
int moebius(long long n) {
  int sign = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace

CayleyGraph::CayleyGraph(Group group, ElementSet s) : group_(std::move(group)), set_(std::move(s)) {
  if (set_.universe() != group_.order())
    throw input_error("connection set universe does not match group order");
  elements_ = set_.elements();

  simple_ = !set_.contains(0);
  if (simple_) {
    for (long long v : elements_) {
      if (!set_.contains(group_.negate(v))) {
        simple_ = false;
        break;
      }
    }
  }

  connected_ = subgroup_closure(group_, set_).size() == group_.order();

  // Integrality: walk each class inside S once; remember the representatives.
  integral_ = true;
  ElementSet seen(group_.order());
  for (long long v : elements_) {
    if (seen.contains(v)) continue;
    auto orbit = class_of(group_, v);
    for (long long m : orbit) {
      if (!set_.contains(m)) {
        integral_ = false;
        break;
      }
      seen.insert(m);
    }
    if (!integral_) break;
    s_classes_.push_back({orbit.front(), group_.element_order(v),
                          static_cast<long long>(orbit.size())});
  }
  if (!integral_) s_classes_.clear();
}

const std::vector<SClass>& CayleyGraph::s_classes() const {
  if (!integral_) throw internal_error("class decomposition requested for a non-integral graph");
  return s_classes_;
}

long long ramanujan_sum(long long lambda, long long t) {
  if (lambda < 1) throw input_error("ramanujan_sum needs lambda >= 1");
  long long tm = t % lambda;
  if (tm < 0) tm += lambda;
  long long g = std::gcd(tm, lambda);  // gcd(0, lambda) = lambda
  long long q = lambda / g;
  int mu = moebius(q);
  if (mu == 0) return 0;
  return mu * (euler_phi(lambda) / euler_phi(q));
}

long long class_character_sum(const Group& g, long long x, long long rep) {
  long long lambda = g.element_order(rep);
  long long k = g.char_exponent(x, rep);
  long long step = g.exponent() / lambda;
  if (k % step != 0)
    throw internal_error("character exponent not a multiple of e/lambda");
  return ramanujan_sum(lambda, k / step);
}

long long eigenvalue_exact(const CayleyGraph& g, long long x) {
  if (!g.integral())
    throw input_error("exact eigenvalues require an integral graph (connection set must be a "
                      "union of classes)");
  long long sum = 0;
  for (const SClass& c : g.s_classes()) sum += class_character_sum(g.group(), x, c.rep);
  return sum;
}

double eigenvalue_float(const CayleyGraph& g, long long x) {
  if (!g.simple())
    throw input_error("floating eigenvalues require a simple graph (0 not in S, S = -S)");
  const Group& grp = g.group();
  double e = static_cast<double>(grp.exponent());
  double sum = 0.0;
  for (long long v : g.connection_elements())
    sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(grp.char_exponent(x, v)) / e);
  return sum;
}

EigenvalueTable eigenvalue_table(const CayleyGraph& g) {
  EigenvalueTable t;
  t.degree = g.degree();
  t.alpha.resize(static_cast<size_t>(g.order()));
  for (long long x = 0; x < g.order(); ++x)
    t.alpha[static_cast<size_t>(x)] = eigenvalue_exact(g, x);
  return t;
}

}  // namespace pst
