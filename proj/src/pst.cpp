#include "pst/pst.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pst {

Val2 Val2::of(long long x) {
  if (x == 0) return infinity();
  Val2 v;
  v.finite = true;
  v.value = std::countr_zero(static_cast<unsigned long long>(x < 0 ? -x : x));
  return v;
}

Val2 Val2::of(const Rational& q) {
  if (q.numerator() == 0) return infinity();
  Val2 v;
  v.finite = true;
  v.value = Val2::of(q.numerator()).value - Val2::of(q.denominator()).value;
  return v;
}

std::string to_string(const Val2& v) { return v.finite ? std::to_string(v.value) : "inf"; }

bool TimeSet::contains(const Rational& t_pi) const {
  if (empty || t_pi < offset) return false;
  Rational q = (t_pi - offset) / period;
  return q.denominator() == 1;
}

Rational TimeSet::minimum() const {
  if (empty) throw input_error("empty time set has no minimum");
  return offset;
}

long long spectral_gap_gcd(const EigenvalueTable& t) {
  long long g = 0;
  for (long long a : t.alpha) g = std::gcd(g, t.degree - a);
  return g;
}

long long big_M(const CayleyGraph& g, const EigenvalueTable& t) {
  if (!g.integral()) throw input_error("periodicity constant requires an integral graph");
  if (!g.connected()) throw input_error("periodicity constant requires a connected graph");
  if (g.order() < 2) throw input_error("periodicity constant requires order >= 2");
  long long m = spectral_gap_gcd(t);
  if (m <= 0) throw internal_error("spectral gap gcd vanished on a connected graph");
  return m;
}

TimeSet period_set(const CayleyGraph& g, const EigenvalueTable& t, long long vertex) {
  if (vertex < 0 || vertex >= g.order()) throw input_error("vertex outside the group");
  long long m = big_M(g, t);
  TimeSet s;
  s.empty = false;
  s.offset = Rational(2, m);
  s.period = Rational(2, m);
  return s;
}

TimeSet period_set(const CayleyGraph& g, long long vertex) {
  if (!g.integral()) throw input_error("period set requires an integral graph");
  EigenvalueTable t = eigenvalue_table(g);
  return period_set(g, t, vertex);
}

InvolutionPartition involution_partition(const CayleyGraph& g, const EigenvalueTable& t,
                                         long long a) {
  const Group& grp = g.group();
  if (!g.integral()) throw input_error("involution partition requires an integral graph");
  if (g.order() < 4) throw input_error("involution partition requires order >= 4");
  if (grp.element_order(a) != 2)
    throw input_error("partition pivot " + grp.element_string(a) + " does not have order 2");

  InvolutionPartition p;
  p.a = a;
  p.g0 = ElementSet(g.order());
  p.g1 = ElementSet(g.order());
  long long half = grp.exponent() / 2;
  bool first = true;
  bool any_infinite = false;
  int lo = 0, hi = 0;
  for (long long x = 0; x < g.order(); ++x) {
    long long k = grp.char_exponent(a, x);
    long long gap = t.degree - t.alpha[static_cast<size_t>(x)];
    if (k == 0) {
      p.g0.insert(x);
      p.m0 = std::gcd(p.m0, gap);
    } else if (k == half) {
      p.g1.insert(x);
      p.m1 = std::gcd(p.m1, gap);
      Val2 v = Val2::of(gap);
      if (!v.finite) {
        any_infinite = true;
      } else if (first) {
        lo = hi = v.value;
        first = false;
      } else {
        lo = std::min(lo, v.value);
        hi = std::max(hi, v.value);
      }
    } else {
      throw internal_error("character of an involution took a non-real value");
    }
  }
  if (any_infinite && g.connected())
    throw internal_error("eigenvalue equal to the degree off the identity of a connected graph");
  p.rho_uniform = !any_infinite && !first && lo == hi;
  p.rho = p.rho_uniform ? lo : 0;
  return p;
}

std::string to_string(NoPstReason r) {
  switch (r) {
    case NoPstReason::not_integral: return "not-integral";
    case NoPstReason::order_not_two: return "order-not-two";
    case NoPstReason::valuation_nonuniform: return "valuation-nonuniform";
    case NoPstReason::valuation_gap: return "valuation-gap";
  }
  return "?";
}

namespace {

void check_pair_preconditions(const CayleyGraph& g, long long from, long long to) {
  if (!g.simple()) throw input_error("PST analysis requires a simple graph");
  if (!g.connected()) throw input_error("PST analysis requires a connected graph");
  if (g.order() < 3) throw input_error("PST analysis requires order >= 3");
  if (from < 0 || from >= g.order() || to < 0 || to >= g.order())
    throw input_error("vertex outside the group");
  if (from == to)
    throw input_error("identical endpoints: use the period set for the diagonal entry");
}

}  // namespace

PstReport pst_check(const CayleyGraph& g, const EigenvalueTable& t, long long from, long long to) {
  check_pair_preconditions(g, from, to);
  const Group& grp = g.group();

  PstReport r;
  r.from = from;
  r.to = to;
  r.a = grp.add(to, grp.negate(from));

  if (!g.integral()) {
    r.reason = NoPstReason::not_integral;
    return r;
  }
  if (grp.element_order(r.a) != 2) {
    r.reason = NoPstReason::order_not_two;
    return r;
  }

  InvolutionPartition p = involution_partition(g, t, r.a);
  r.m0 = p.m0;
  r.m1 = p.m1;
  long long m = big_M(g, t);
  r.m = m;
  if (!p.rho_uniform) {
    r.reason = NoPstReason::valuation_nonuniform;
    return r;
  }
  r.rho = p.rho;
  Val2 v0 = Val2::of(p.m0);
  if (v0.finite && v0.value < p.rho + 1) {
    r.reason = NoPstReason::valuation_gap;
    return r;
  }

  r.has_pst = true;
  r.times.empty = false;
  r.times.offset = Rational(1, m);
  r.times.period = Rational(2, m);
  return r;
}

PstReport pst_check(const CayleyGraph& g, long long from, long long to) {
  check_pair_preconditions(g, from, to);
  if (!g.integral()) {
    PstReport r;
    r.from = from;
    r.to = to;
    r.a = g.group().add(to, g.group().negate(from));
    r.reason = NoPstReason::not_integral;
    return r;
  }
  EigenvalueTable t = eigenvalue_table(g);
  return pst_check(g, t, from, to);
}

std::vector<PstReport> pst_all_pairs(const CayleyGraph& g) {
  if (!g.simple()) throw input_error("PST analysis requires a simple graph");
  if (!g.connected()) throw input_error("PST analysis requires a connected graph");
  std::vector<PstReport> out;
  if (g.order() < 3) return out;  // below the pair engine's scope

  std::optional<EigenvalueTable> t;
  if (g.integral()) t = eigenvalue_table(g);
  for (long long a : involutions(g.group())) {
    if (t)
      out.push_back(pst_check(g, *t, 0, a));
    else
      out.push_back(pst_check(g, 0, a));
  }
  return out;
}

bool mod4_obstruction(const CayleyGraph& g) {
  return g.order() % 4 == 2 && g.order() >= 6;
}

UniformValuation bipartite_valuation_check(const CayleyGraph& g, const EigenvalueTable& t,
                                           long long a) {
  const Group& grp = g.group();
  if (!g.integral()) throw input_error("valuation check requires an integral graph");
  if (g.order() < 4) throw input_error("valuation check requires order >= 4");
  if (grp.element_order(a) != 2)
    throw input_error("pivot " + grp.element_string(a) + " does not have order 2");

  std::vector<long long> a0, a1;
  long long half = grp.exponent() / 2;
  for (long long x = 0; x < g.order(); ++x) {
    long long k = grp.char_exponent(a, x);
    if (k == 0)
      a0.push_back(t.alpha[static_cast<size_t>(x)]);
    else if (k == half)
      a1.push_back(t.alpha[static_cast<size_t>(x)]);
    else
      throw internal_error("character of an involution took a non-real value");
  }
  UniformValuation r;
  bool first = true;
  for (long long x : a0) {
    for (long long y : a1) {
      Val2 v = Val2::of(x - y);
      if (!v.finite) return {};
      if (first) {
        r.rho = v.value;
        first = false;
      } else if (r.rho != v.value) {
        return {};
      }
    }
  }
  r.uniform = !first;
  return r;
}

UniformValuation circulant_chain_check(const CayleyGraph& g, const EigenvalueTable& t) {
  const Group& grp = g.group();
  if (!grp.cyclic()) throw input_error("chain check requires a cyclic group");
  long long n = grp.order();
  if (n % 2 != 0) throw input_error("chain check requires even order");
  if (!g.integral()) throw input_error("chain check requires an integral graph");

  // Relabel through the residue map Z_n -> Z_{n_1} (+) ... (+) Z_{n_r}, an
  // isomorphism exactly when the group is cyclic.
  const auto& f = grp.factors();
  auto alpha_at = [&](long long j) {
    std::vector<long long> res(f.size());
    for (size_t s = 0; s < f.size(); ++s) res[s] = j % f[s];
    return t.alpha[static_cast<size_t>(grp.index_of(res))];
  };

  UniformValuation r;
  bool first = true;
  for (long long j = 0; j + 1 < n; ++j) {
    Val2 v = Val2::of(alpha_at(j) - alpha_at(j + 1));
    if (!v.finite) return {};
    if (first) {
      r.rho = v.value;
      first = false;
    } else if (r.rho != v.value) {
      return {};
    }
  }
  r.uniform = true;
  return r;
}

}  // namespace pst
