#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pst/rational.hpp"
#include "pst/spectrum.hpp"

namespace pst {

// 2-adic valuation with v2(0) = infinity.
struct Val2 {
  bool finite = false;
  int value = 0;

  static Val2 infinity() { return {}; }
  static Val2 of(long long x);
  static Val2 of(const Rational& q);
  friend bool operator==(const Val2&, const Val2&) = default;
};

std::string to_string(const Val2& v);

// Arithmetic progression of times { pi*(offset + period*k) : k >= 0 }.
struct TimeSet {
  bool empty = true;
  Rational offset{0};  // pi units; the minimum member
  Rational period{0};  // pi units; > 0 when non-empty

  bool contains(const Rational& t_pi) const;
  Rational minimum() const;
  friend bool operator==(const TimeSet&, const TimeSet&) = default;
};

// gcd of (degree - alpha_x) over all x, zero gaps skipped (gcd(0, m) = m).
// Returns 0 only when every gap is zero.
long long spectral_gap_gcd(const EigenvalueTable& t);

// The periodicity constant M >= 1; requires connected, integral, n >= 2.
long long big_M(const CayleyGraph& g, const EigenvalueTable& t);

// Period set of any vertex: offset 2/M, period 2/M (vertex-independent).
TimeSet period_set(const CayleyGraph& g, const EigenvalueTable& t, long long vertex);
TimeSet period_set(const CayleyGraph& g, long long vertex);

// Split of G by the sign of chi_a (a of order 2), with the per-part gcds of
// the gaps d - alpha and the G1 valuation profile.
struct InvolutionPartition {
  long long a = 0;
  ElementSet g0, g1;         // chi_a = +1 / -1
  long long m0 = 0, m1 = 0;  // gcd of gaps on each part (zeros skipped)
  bool rho_uniform = false;
  int rho = 0;               // common v2 of the G1 gaps, valid iff rho_uniform
};

InvolutionPartition involution_partition(const CayleyGraph& g, const EigenvalueTable& t,
                                         long long a);

enum class NoPstReason { not_integral, order_not_two, valuation_nonuniform, valuation_gap };

std::string to_string(NoPstReason r);

struct PstReport {
  long long from = 0, to = 0;
  long long a = 0;  // to - from
  bool has_pst = false;
  std::optional<NoPstReason> reason;   // set iff !has_pst
  TimeSet times;                       // non-empty iff has_pst
  std::optional<long long> m, m0, m1;  // witnesses, when computable
  std::optional<int> rho;              // uniform G1 valuation, when it exists
};

// Decide PST between two distinct vertices (connected simple graph, n >= 3).
PstReport pst_check(const CayleyGraph& g, long long from, long long to);
PstReport pst_check(const CayleyGraph& g, const EigenvalueTable& t, long long from, long long to);

// One report per involution a, for the pair (0, a); empty when n < 3.
std::vector<PstReport> pst_all_pairs(const CayleyGraph& g);

// Orders 2 mod 4 (n >= 6) admit no PST at all.
bool mod4_obstruction(const CayleyGraph& g);

struct UniformValuation {
  bool uniform = false;
  int rho = 0;  // valid iff uniform
};

// v2(alpha_x - alpha_y) constant over x in G0, y in G1 (all-pairs route).
UniformValuation bipartite_valuation_check(const CayleyGraph& g, const EigenvalueTable& t,
                                           long long a);

// v2(alpha_j - alpha_{j+1}) constant along consecutive residues of a cyclic
// group of even order (chain route); group must be cyclic.
UniformValuation circulant_chain_check(const CayleyGraph& g, const EigenvalueTable& t);

}  // namespace pst
