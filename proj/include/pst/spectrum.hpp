#pragma once

#include <vector>

#include "pst/group.hpp"

namespace pst {

// A class contained in the connection set (cached for exact eigenvalues).
struct SClass {
  long long rep = 0;
  long long order = 1;
  long long size = 0;
};

// Cayley graph Cay(G, S) with validated flags.
class CayleyGraph {
 public:
  CayleyGraph(Group group, ElementSet s);

  const Group& group() const { return group_; }
  const ElementSet& connection_set() const { return set_; }
  const std::vector<long long>& connection_elements() const { return elements_; }
  long long order() const { return group_.order(); }
  long long degree() const { return static_cast<long long>(elements_.size()); }

  bool simple() const { return simple_; }        // 0 not in S and S = -S
  bool connected() const { return connected_; }  // S generates G
  bool integral() const { return integral_; }    // S is a union of classes

  // Class decomposition of S; populated only when integral().
  const std::vector<SClass>& s_classes() const;

 private:
  Group group_;
  ElementSet set_;
  std::vector<long long> elements_;
  std::vector<SClass> s_classes_;
  bool simple_ = false;
  bool connected_ = false;
  bool integral_ = false;
};

// Ramanujan sum c_lambda(t): sum of exp(2*pi*i*l*t/lambda) over units l.
// Exact integer evaluation via the Moebius/totient closed form.
long long ramanujan_sum(long long lambda, long long t);

// Sum of chi_x over the class of rep (an integer for every x).
long long class_character_sum(const Group& g, long long x, long long rep);

// Exact eigenvalue alpha_x = sum of chi_x over S; requires integral().
long long eigenvalue_exact(const CayleyGraph& g, long long x);

// Floating eigenvalue by direct cosine summation; requires simple().
double eigenvalue_float(const CayleyGraph& g, long long x);

struct EigenvalueTable {
  long long degree = 0;
  std::vector<long long> alpha;  // indexed by element
};

// Full exact spectrum; requires integral().
EigenvalueTable eigenvalue_table(const CayleyGraph& g);

}  // namespace pst
