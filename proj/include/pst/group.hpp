#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pst {

// Bad user-supplied data (CLI maps this to exit code 3).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration request that would exceed the configured budget (exit 3).
struct budget_error : input_error {
  using input_error::input_error;
};

// A broken internal invariant or a theorem/oracle disagreement (exit 4).
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Set of element indices over a fixed universe [0, n), stored as a bit vector.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(long long universe);

  long long universe() const { return universe_; }
  bool contains(long long i) const;
  void insert(long long i);
  void erase(long long i);
  long long size() const;
  bool empty() const { return size() == 0; }

  // Ascending element indices.
  std::vector<long long> elements() const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  bool contains_all(const ElementSet& other) const;  // other subset of *this
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  void check_index(long long i) const;
  long long universe_ = 0;
  std::vector<uint64_t> words_;
};

// Finite abelian group Z_{n1} (+) ... (+) Z_{nr}.  Elements are addressed by
// mixed-radix index with the first factor most significant; factors need not
// be invariant factors (any list with every entry >= 2 is accepted, and the
// exponent is the lcm of the list).
class Group {
 public:
  explicit Group(std::vector<long long> factors);

  const std::vector<long long>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  long long order() const { return order_; }
  long long exponent() const { return exponent_; }
  bool cyclic() const { return exponent_ == order_; }

  long long index_of(const std::vector<long long>& residues) const;
  std::vector<long long> residues_of(long long index) const;
  std::string element_string(long long index) const;  // "(r1,r2,...)"

  long long add(long long a, long long b) const;
  long long negate(long long a) const;
  long long scale(long long k, long long a) const;  // k*a, any integer k
  long long element_order(long long a) const;

  // Exponent k of the character pairing: chi_x(g) = exp(2*pi*i*k/e).
  // Symmetric in x and g.
  long long char_exponent(long long x, long long g) const;

  friend bool operator==(const Group&, const Group&) = default;

 private:
  void check_element(long long index) const;
  std::vector<long long> factors_;
  std::vector<long long> weights_;  // mixed-radix place values
  long long order_ = 1;
  long long exponent_ = 1;
};

// One orbit of the unit action x -> l*x, gcd(l, e) = 1.
struct ElementClass {
  long long rep = 0;                // minimal element index in the class
  long long order = 1;              // common order of every member
  std::vector<long long> members;   // ascending; rep == members.front()
};

struct ClassPartition {
  std::vector<ElementClass> classes;  // ordered by representative index
  std::vector<int> class_index;       // element index -> position in classes
};

// Orbit of x under multiplication by units, ascending.
std::vector<long long> class_of(const Group& g, long long x);

// Partition of the whole group into unit-action classes.
ClassPartition enumerate_classes(const Group& g);

// True when s is a union of classes (the integrality certificate).
bool is_qset(const Group& g, const ElementSet& s);

// Smallest subgroup containing s (worklist closure; {0} for empty s).
ElementSet subgroup_closure(const Group& g, const ElementSet& s);

// Elements of order exactly 2, ascending.
std::vector<long long> involutions(const Group& g);

// Union over the given tuples d of { x : gcd(x_j, n_j) = d_j for all j }.
// Every d_j must divide n_j and no tuple may equal the factor list itself.
ElementSet gcd_set(const Group& g, const std::vector<std::vector<long long>>& divisor_tuples);

}  // namespace pst
