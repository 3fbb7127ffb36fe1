#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pst/spectrum.hpp"

namespace pst {

// Boolean function on nvars variables; tt[i] = f(i) with variable 1 mapped to
// the most significant bit of the index.
struct BooleanFunction {
  int nvars = 0;
  std::vector<uint8_t> tt;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
};

// Truth table I/O as hex strings, least significant bit = f(0).
BooleanFunction bf_from_hex(int nvars, std::string_view hex);
std::string bf_to_hex(const BooleanFunction& f);

// Walsh spectrum W_f(y) = sum_x (-1)^{f(x) + x.y}, fast butterfly.
std::vector<int> walsh_transform(const BooleanFunction& f);

// |W_f(y)| = 2^{n/2} everywhere; false for odd nvars.
bool is_bent(const BooleanFunction& f);

// Maiorana-McFarland bent function f(x, y) = x.pi(y) + h(y) on 2m variables,
// x the high half, y the low half.  pi must be a permutation of [0, 2^m).
BooleanFunction mm_bent(int m, const std::vector<long long>& pi, const BooleanFunction& h);
BooleanFunction mm_bent(int m);  // identity pi, h = 0

Group elementary_group(int nvars);  // Z_2^nvars
ElementSet support_set(const BooleanFunction& f);

// Connection set (0,supp f) union (1,supp f) over Z_2^{2m+1}, flag bit most
// significant; f must be bent with m >= 2 (f is complemented if f(0) = 1).
// The graph has PST between g and g + (1,0,...,0) at time pi/2^m.
CayleyGraph bent_pst_graph(const BooleanFunction& f);

// Connection set supp f over Z_2^{2m}; f must be bent with f(0) = 0, m >= 2.
// Every vertex is periodic with M = 2^m.
CayleyGraph bent_periodic_graph(const BooleanFunction& f);

// GF(2^degree) arithmetic on bit-pattern element indices.
struct BinaryField {
  int degree = 0;
  uint32_t modulus = 0;  // primitive polynomial mask including the x^degree term

  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;  // a != 0
};

// Fixed table of lexicographically smallest primitive polynomials, 2..16.
BinaryField binary_field(int degree);

// { c*z : z in S } under the field multiplication; c != 0.
ElementSet scale_set(const BinaryField& f, const ElementSet& s, uint32_t c);

bool is_cubelike(const Group& g);  // every factor equals 2

// Spectrum of Cay(Z_2^nvars, s) via a Walsh transform of the indicator.
std::vector<long long> cubelike_spectrum(int nvars, const ElementSet& s);

// Some involution a with PST 0 -> a, or nullopt when no pair has PST.
//
// On Z_2^n the decision criterion linearizes: with l the minimum 2-adic
// valuation among the gaps d - alpha[y], PST 0 -> a holds iff a.y = 1 (mod 2)
// exactly on the minimum-valuation elements, an affine system over F_2.  One
// Gauss-Jordan pass decides every candidate a at once in O(n * 2^n), against
// O(4^n) for checking each involution separately.  `alpha` must be the
// spectrum of a connected graph, indexed as returned by cubelike_spectrum.
std::optional<long long> pst_witness(int nvars, const std::vector<long long>& alpha);

// l = log2 of the spectral gap gcd; requires a simple nonempty cubelike
// connection set.  Throws internal_error if the gcd is not a power of two.
int min_time_exponent(const CayleyGraph& g);

// 1 <= min_time_exponent <= nvars/2 for connected cubelike graphs with PST;
// nullopt when the graph has no PST pair.
std::optional<bool> min_time_bound_check(const CayleyGraph& g);

// XOR over S equals a (a != 0); such graphs have PST from g to g+a at pi/2.
bool sum_condition_check(const CayleyGraph& g, long long a);

}  // namespace pst
