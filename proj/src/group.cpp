#include "pst/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pst {

namespace {

constexpr long long kMaxOrder = 1LL << 24;

long long checked_mod(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// ---- ElementSet -------------------------------------------------------------

ElementSet::ElementSet(long long universe) : universe_(universe) {
  if (universe < 0) throw input_error("element set universe must be non-negative");
  words_.assign(static_cast<size_t>((universe + 63) / 64), 0);
}

void ElementSet::check_index(long long i) const {
  if (i < 0 || i >= universe_)
    throw input_error("element index " + std::to_string(i) + " outside universe [0, " +
                      std::to_string(universe_) + ")");
}

bool ElementSet::contains(long long i) const {
  check_index(i);
  return (words_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1;
}

void ElementSet::insert(long long i) {
  check_index(i);
  words_[static_cast<size_t>(i >> 6)] |= uint64_t{1} << (i & 63);
}

void ElementSet::erase(long long i) {
  check_index(i);
  words_[static_cast<size_t>(i >> 6)] &= ~(uint64_t{1} << (i & 63));
}

long long ElementSet::size() const {
  long long n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::vector<long long> ElementSet::elements() const {
  std::vector<long long> out;
  out.reserve(static_cast<size_t>(size()));
  for (size_t wi = 0; wi < words_.size(); ++wi) {
    uint64_t w = words_[wi];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<long long>(wi) * 64 + b);
      w &= w - 1;
    }
  }
  return out;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (universe_ != other.universe_) throw input_error("element set universe mismatch");
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  if (universe_ != other.universe_) throw input_error("element set universe mismatch");
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool ElementSet::contains_all(const ElementSet& other) const {
  if (universe_ != other.universe_) throw input_error("element set universe mismatch");
  for (size_t i = 0; i < words_.size(); ++i)
    if (other.words_[i] & ~words_[i]) return false;
  return true;
}

// ---- Group ------------------------------------------------------------------

Group::Group(std::vector<long long> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw input_error("group needs at least one cyclic factor");
  for (long long f : factors_) {
    if (f < 2) throw input_error("cyclic factor " + std::to_string(f) + " is below 2");
    if (order_ > kMaxOrder / f) throw input_error("group order exceeds the supported limit");
    order_ *= f;
    exponent_ = std::lcm(exponent_, f);
  }
  weights_.assign(factors_.size(), 1);
  for (size_t s = factors_.size(); s-- > 1;) weights_[s - 1] = weights_[s] * factors_[s];
}

void Group::check_element(long long index) const {
  if (index < 0 || index >= order_)
    throw input_error("element index " + std::to_string(index) + " outside group of order " +
                      std::to_string(order_));
}

long long Group::index_of(const std::vector<long long>& residues) const {
  if (residues.size() != factors_.size())
    throw input_error("element has " + std::to_string(residues.size()) + " coordinates, group has " +
                      std::to_string(factors_.size()));
  long long idx = 0;
  for (size_t s = 0; s < factors_.size(); ++s) {
    long long r = residues[s];
    if (r < 0 || r >= factors_[s])
      throw input_error("residue " + std::to_string(r) + " outside Z_" +
                        std::to_string(factors_[s]));
    idx += r * weights_[s];
  }
  return idx;
}

std::vector<long long> Group::residues_of(long long index) const {
  check_element(index);
  std::vector<long long> out(factors_.size());
  for (size_t s = 0; s < factors_.size(); ++s) {
    out[s] = index / weights_[s];
    index %= weights_[s];
  }
  return out;
}

std::string Group::element_string(long long index) const {
  auto r = residues_of(index);
  std::string s = "(";
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + ")";
}

long long Group::add(long long a, long long b) const {
  check_element(a);
  check_element(b);
  long long idx = 0;
  for (size_t s = 0; s < factors_.size(); ++s) {
    long long ra = a / weights_[s] % factors_[s];
    long long rb = b / weights_[s] % factors_[s];
    idx += (ra + rb) % factors_[s] * weights_[s];
  }
  return idx;
}

long long Group::negate(long long a) const {
  check_element(a);
  long long idx = 0;
  for (size_t s = 0; s < factors_.size(); ++s) {
    long long ra = a / weights_[s] % factors_[s];
    idx += (factors_[s] - ra) % factors_[s] * weights_[s];
  }
  return idx;
}

long long Group::scale(long long k, long long a) const {
  check_element(a);
  long long idx = 0;
  for (size_t s = 0; s < factors_.size(); ++s) {
    long long ra = a / weights_[s] % factors_[s];
    idx += checked_mod(checked_mod(k, factors_[s]) * ra, factors_[s]) * weights_[s];
  }
  return idx;
}

long long Group::element_order(long long a) const {
  check_element(a);
  long long ord = 1;
  for (size_t s = 0; s < factors_.size(); ++s) {
    long long ra = a / weights_[s] % factors_[s];
    ord = std::lcm(ord, factors_[s] / std::gcd(ra, factors_[s]));
  }
  return ord;
}

long long Group::char_exponent(long long x, long long g) const {
  check_element(x);
  check_element(g);
  long long k = 0;
  for (size_t s = 0; s < factors_.size(); ++s) {
    long long rx = x / weights_[s] % factors_[s];
    long long rg = g / weights_[s] % factors_[s];
    k = (k + exponent_ / factors_[s] * (rx * rg % factors_[s])) % exponent_;
  }
  return k;
}

// ---- Class machinery ----------------------------------------------------------

std::vector<long long> class_of(const Group& g, long long x) {
  long long lambda = g.element_order(x);
  std::vector<long long> orbit;
  for (long long l = 1; l <= lambda; ++l) {
    if (std::gcd(l, lambda) != 1) continue;
    orbit.push_back(g.scale(l, x));
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

ClassPartition enumerate_classes(const Group& g) {
  ClassPartition p;
  p.class_index.assign(static_cast<size_t>(g.order()), -1);
  for (long long i = 0; i < g.order(); ++i) {
    if (p.class_index[static_cast<size_t>(i)] >= 0) continue;
    ElementClass c;
    c.members = class_of(g, i);
    c.rep = c.members.front();
    c.order = g.element_order(i);
    int pos = static_cast<int>(p.classes.size());
    for (long long m : c.members) p.class_index[static_cast<size_t>(m)] = pos;
    p.classes.push_back(std::move(c));
  }
  return p;
}

bool is_qset(const Group& g, const ElementSet& s) {
  if (s.universe() != g.order()) throw input_error("set universe does not match group order");
  for (long long x : s.elements()) {
    for (long long m : class_of(g, x))
      if (!s.contains(m)) return false;
  }
  return true;
}

ElementSet subgroup_closure(const Group& g, const ElementSet& s) {
  if (s.universe() != g.order()) throw input_error("set universe does not match group order");
  ElementSet closure(g.order());
  closure.insert(0);
  std::vector<long long> frontier{0};
  auto gens = s.elements();
  while (!frontier.empty()) {
    long long w = frontier.back();
    frontier.pop_back();
    for (long long v : gens) {
      long long t = g.add(w, v);
      if (!closure.contains(t)) {
        closure.insert(t);
        frontier.push_back(t);
      }
    }
  }
  return closure;
}

std::vector<long long> involutions(const Group& g) {
  std::vector<long long> out;
  for (long long i = 1; i < g.order(); ++i)
    if (g.element_order(i) == 2) out.push_back(i);
  return out;
}

ElementSet gcd_set(const Group& g, const std::vector<std::vector<long long>>& divisor_tuples) {
  if (divisor_tuples.empty()) throw input_error("gcd set needs at least one divisor tuple");
  ElementSet out(g.order());
  const auto& f = g.factors();
  for (const auto& d : divisor_tuples) {
    if (d.size() != f.size())
      throw input_error("divisor tuple has " + std::to_string(d.size()) +
                        " coordinates, group has " + std::to_string(f.size()));
    bool all_full = true;
    for (size_t s = 0; s < f.size(); ++s) {
      if (d[s] < 1 || f[s] % d[s] != 0)
        throw input_error("divisor " + std::to_string(d[s]) + " does not divide " +
                          std::to_string(f[s]));
      all_full = all_full && d[s] == f[s];
    }
    if (all_full)
      throw input_error("divisor tuple equal to the factor list selects only the identity");
    for (long long i = 0; i < g.order(); ++i) {
      auto r = g.residues_of(i);
      bool match = true;
      for (size_t s = 0; s < f.size() && match; ++s)
        match = std::gcd(r[s], f[s]) == d[s];
      if (match) out.insert(i);
    }
  }
  return out;
}

}  // namespace pst
