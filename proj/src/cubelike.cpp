#include "pst/cubelike.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "pst/pst.hpp"

namespace pst {

namespace {

// Lexicographically smallest primitive polynomial per degree (index 2..16);
// certified primitive and minimal by the unit tests.
constexpr uint32_t kPrimitivePoly[17] = {
    0,      0,      0x7,    0xB,    0x13,   0x25,   0x43,    0x83,   0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x402B, 0x8003,  0x1002D};

int check_nvars(int nvars) {
  if (nvars < 1 || nvars > 16)
    throw input_error("variable count " + std::to_string(nvars) + " outside [1, 16]");
  return nvars;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw input_error(std::string("bad hex digit '") + c + "'");
}

}  // namespace

BooleanFunction bf_from_hex(int nvars, std::string_view hex) {
  check_nvars(nvars);
  size_t bits = size_t{1} << nvars;
  size_t want = std::max<size_t>(1, bits / 4);
  if (hex.size() != want)
    throw input_error("truth table hex for " + std::to_string(nvars) + " variables needs " +
                      std::to_string(want) + " digits, got " + std::to_string(hex.size()));
  BooleanFunction f;
  f.nvars = nvars;
  f.tt.assign(bits, 0);
  for (size_t pos = 0; pos < hex.size(); ++pos) {
    int v = hex_digit(hex[hex.size() - 1 - pos]);  // low digit first
    for (int b = 0; b < 4; ++b) {
      size_t idx = pos * 4 + b;
      if (idx < bits) f.tt[idx] = static_cast<uint8_t>((v >> b) & 1);
    }
  }
  return f;
}

std::string bf_to_hex(const BooleanFunction& f) {
  check_nvars(f.nvars);
  size_t bits = size_t{1} << f.nvars;
  if (f.tt.size() != bits) throw input_error("truth table size does not match variable count");
  size_t digits = std::max<size_t>(1, bits / 4);
  std::string out(digits, '0');
  for (size_t pos = 0; pos < digits; ++pos) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      size_t idx = pos * 4 + b;
      if (idx < bits && f.tt[idx]) v |= 1 << b;
    }
    out[digits - 1 - pos] = "0123456789abcdef"[v];
  }
  return out;
}

std::vector<int> walsh_transform(const BooleanFunction& f) {
  check_nvars(f.nvars);
  size_t n = size_t{1} << f.nvars;
  if (f.tt.size() != n) throw input_error("truth table size does not match variable count");
  std::vector<int> w(n);
  for (size_t i = 0; i < n; ++i) w[i] = f.tt[i] ? -1 : 1;
  for (size_t len = 1; len < n; len <<= 1) {
    for (size_t block = 0; block < n; block += len << 1) {
      for (size_t i = block; i < block + len; ++i) {
        int a = w[i], b = w[i + len];
        w[i] = a + b;
        w[i + len] = a - b;
      }
    }
  }
  return w;
}

bool is_bent(const BooleanFunction& f) {
  if (f.nvars % 2 != 0) return false;  // bent functions need an even variable count
  int target = 1 << (f.nvars / 2);
  for (int v : walsh_transform(f))
    if (v != target && v != -target) return false;
  return true;
}

BooleanFunction mm_bent(int m, const std::vector<long long>& pi, const BooleanFunction& h) {
  if (m < 1 || 2 * m > 16) throw input_error("half-dimension m outside [1, 8]");
  size_t half = size_t{1} << m;
  if (pi.size() != half) throw input_error("permutation must list all of [0, 2^m)");
  std::vector<bool> seen(half, false);
  for (long long v : pi) {
    if (v < 0 || v >= static_cast<long long>(half) || seen[static_cast<size_t>(v)])
      throw input_error("not a permutation of [0, 2^m)");
    seen[static_cast<size_t>(v)] = true;
  }
  if (h.nvars != m || h.tt.size() != half)
    throw input_error("offset function must be on m variables");

  BooleanFunction f;
  f.nvars = 2 * m;
  f.tt.assign(size_t{1} << (2 * m), 0);
  for (size_t x = 0; x < half; ++x) {
    for (size_t y = 0; y < half; ++y) {
      unsigned dot = std::popcount(x & static_cast<size_t>(pi[y])) & 1u;
      f.tt[(x << m) | y] = static_cast<uint8_t>(dot ^ (h.tt[y] & 1));
    }
  }
  return f;
}

BooleanFunction mm_bent(int m) {
  if (m < 1 || 2 * m > 16) throw input_error("half-dimension m outside [1, 8]");
  std::vector<long long> pi(size_t{1} << m);
  for (size_t i = 0; i < pi.size(); ++i) pi[i] = static_cast<long long>(i);
  BooleanFunction h;
  h.nvars = m;
  h.tt.assign(size_t{1} << m, 0);
  return mm_bent(m, pi, h);
}

Group elementary_group(int nvars) {
  check_nvars(nvars);
  return Group(std::vector<long long>(static_cast<size_t>(nvars), 2));
}

ElementSet support_set(const BooleanFunction& f) {
  check_nvars(f.nvars);
  ElementSet s(1LL << f.nvars);
  for (size_t i = 0; i < f.tt.size(); ++i)
    if (f.tt[i]) s.insert(static_cast<long long>(i));
  return s;
}

CayleyGraph bent_pst_graph(const BooleanFunction& f) {
  BooleanFunction g = f;
  if (!g.tt.empty() && g.tt[0]) {  // normalize to f(0) = 0; the complement stays bent
    for (auto& b : g.tt) b ^= 1;
  }
  if (!is_bent(g)) throw input_error("connection set construction requires a bent function");
  int m = g.nvars / 2;
  if (m < 2) throw input_error("construction requires m >= 2");
  int n = g.nvars + 1;
  check_nvars(n);
  ElementSet s(1LL << n);
  long long flag = 1LL << g.nvars;  // leading coordinate
  for (size_t z = 0; z < g.tt.size(); ++z) {
    if (!g.tt[z]) continue;
    s.insert(static_cast<long long>(z));
    s.insert(flag + static_cast<long long>(z));
  }
  return CayleyGraph(elementary_group(n), s);
}

CayleyGraph bent_periodic_graph(const BooleanFunction& f) {
  if (!is_bent(f)) throw input_error("connection set construction requires a bent function");
  if (!f.tt.empty() && f.tt[0]) throw input_error("construction requires f(0) = 0");
  int m = f.nvars / 2;
  if (m < 2) throw input_error("construction requires m >= 2");
  return CayleyGraph(elementary_group(f.nvars), support_set(f));
}

uint32_t BinaryField::mul(uint32_t a, uint32_t b) const {
  uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> degree & 1) a ^= modulus;
  }
  return r;
}

uint32_t BinaryField::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t BinaryField::inv(uint32_t a) const {
  if (a == 0) throw input_error("zero has no inverse");
  return pow(a, (uint64_t{1} << degree) - 2);
}

BinaryField binary_field(int degree) {
  if (degree < 2 || degree > 16)
    throw input_error("field degree " + std::to_string(degree) + " outside [2, 16]");
  return {degree, kPrimitivePoly[degree]};
}

ElementSet scale_set(const BinaryField& f, const ElementSet& s, uint32_t c) {
  if (s.universe() != (1LL << f.degree))
    throw input_error("set universe does not match the field size");
  if (c == 0 || c >> f.degree) throw input_error("scalar outside the multiplicative group");
  ElementSet out(s.universe());
  for (long long z : s.elements()) out.insert(f.mul(c, static_cast<uint32_t>(z)));
  return out;
}

bool is_cubelike(const Group& g) {
  return std::all_of(g.factors().begin(), g.factors().end(),
                     [](long long f) { return f == 2; });
}

std::vector<long long> cubelike_spectrum(int nvars, const ElementSet& s) {
  check_nvars(nvars);
  size_t n = size_t{1} << nvars;
  if (s.universe() != static_cast<long long>(n))
    throw input_error("set universe does not match 2^nvars");
  std::vector<long long> w(n, 0);
  for (long long v : s.elements()) w[static_cast<size_t>(v)] = 1;
  for (size_t len = 1; len < n; len <<= 1) {
    for (size_t block = 0; block < n; block += len << 1) {
      for (size_t i = block; i < block + len; ++i) {
        long long a = w[i], b = w[i + len];
        w[i] = a + b;
        w[i + len] = a - b;
      }
    }
  }
  return w;
}

std::optional<long long> pst_witness(int nvars, const std::vector<long long>& alpha) {
  check_nvars(nvars);
  const size_t n = size_t{1} << nvars;
  if (alpha.size() != n)
    throw input_error("spectrum has " + std::to_string(alpha.size()) + " entries, expected " +
                      std::to_string(n));
  const long long d = alpha[0];
  std::vector<int> val(n, 0);
  int ell = -1;
  for (size_t y = 1; y < n; ++y) {
    if (alpha[y] >= d)
      throw input_error("spectrum must come from a connected graph with alpha[0] maximal");
    val[y] = Val2::of(d - alpha[y]).value;
    ell = ell < 0 ? val[y] : std::min(ell, val[y]);
  }

  // Affine system over F_2: a.y = 1 on minimum-valuation y, a.y = 0 elsewhere.
  // Rows are kept in Jordan form (each pivot bit appears in its own row only),
  // so "free coordinates = 0" reads a witness straight off the pivot rows.
  std::array<uint32_t, 16> pivot_mask{};
  std::array<uint8_t, 16> pivot_rhs{};
  uint32_t have = 0;
  for (size_t y = 1; y < n; ++y) {
    uint32_t m = static_cast<uint32_t>(y);
    int r = val[y] == ell ? 1 : 0;
    for (int b = nvars - 1; b >= 0; --b)
      if ((m >> b & 1) && (have >> b & 1)) {
        m ^= pivot_mask[b];
        r ^= pivot_rhs[b];
      }
    if (m == 0) {
      if (r == 1) return std::nullopt;  // a.y is forced to both parities
      continue;
    }
    const int b = std::bit_width(m) - 1;
    for (int i = b + 1; i < nvars; ++i)
      if ((have >> i & 1) && (pivot_mask[i] >> b & 1)) {
        pivot_mask[i] ^= m;
        pivot_rhs[i] ^= static_cast<uint8_t>(r);
      }
    pivot_mask[b] = m;
    pivot_rhs[b] = static_cast<uint8_t>(r);
    have |= uint32_t{1} << b;
  }

  long long a = 0;
  for (int b = 0; b < nvars; ++b)
    if ((have >> b & 1) && pivot_rhs[b]) a |= 1LL << b;
  if (a == 0) throw internal_error("consistent PST system solved to the identity");
  return a;
}

int min_time_exponent(const CayleyGraph& g) {
  if (!is_cubelike(g.group())) throw input_error("minimum-time exponent requires Z_2^n");
  if (!g.simple()) throw input_error("minimum-time exponent requires a simple graph");
  if (g.degree() < 1) throw input_error("minimum-time exponent requires a nonempty set");
  auto alpha = cubelike_spectrum(g.group().rank(), g.connection_set());
  long long m = 0;
  for (long long a : alpha) m = std::gcd(m, g.degree() - a);
  if (m <= 0 || (m & (m - 1)) != 0)
    throw internal_error("spectral gap gcd " + std::to_string(m) +
                         " of a cubelike graph is not a power of two");
  return std::countr_zero(static_cast<unsigned long long>(m));
}

std::optional<bool> min_time_bound_check(const CayleyGraph& g) {
  bool any = false;
  for (const PstReport& r : pst_all_pairs(g)) any = any || r.has_pst;
  if (!any) return std::nullopt;
  int l = min_time_exponent(g);
  return l >= 1 && l <= g.group().rank() / 2;
}

bool sum_condition_check(const CayleyGraph& g, long long a) {
  if (!is_cubelike(g.group())) throw input_error("sum condition requires Z_2^n");
  if (!g.simple()) throw input_error("sum condition requires a simple graph");
  if (a <= 0 || a >= g.order()) return false;
  long long x = 0;
  for (long long v : g.connection_elements()) x ^= v;
  return x == a;
}

}  // namespace pst
