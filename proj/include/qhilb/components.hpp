#pragma once

#include <vector>

#include "qhilb/diagram.hpp"
#include "qhilb/hilbert_function.hpp"
#include "qhilb/qpoly.hpp"

namespace qhilb {

/// Indices derived from a Hilbert function for slope k.
///
/// eta is the largest i with d_i = floor(i/k) + 1 (-1 when there is none),
/// theta the largest i <= eta with i = k-1 (mod k). The families f_i, w_i
/// bound the rectangles of the hook code:
///   w_i = d(i-k+theta) - d(i+theta) + 1
///   f_i = d(i+theta) - d(i+1+theta) + [k | i]
struct DerivedIndices {
  HilbertFunction h;
  int k = 1;
  int eta = -1;
  int theta = -1;

  int d(int i) const { return h.extended(i, k); }
  int tau(int i) const;
  int f(int i) const;
  int w(int i) const;
};

DerivedIndices derive(const HilbertFunction& h, int k);

/// True iff some Young diagram has (1,k)-profile H.
bool is_realizable(const HilbertFunction& h, int k);

/// Product of Gaussian binomials G(d_i - d_{i+1} + tau(i), d_{i+1} - d_{i+1+k})
/// over i >= eta, in the main variable. No realizability check; throws
/// PreconditionError if an argument goes negative.
MPoly gaussian_product(const HilbertFunction& h, int k);

/// gaussian_product for a realizable H; throws PreconditionError otherwise.
MPoly class_closed_form(const HilbertFunction& h, int k);

/// Sum over diagrams with profile H of L^{#cells with l = k(a+1)}.
MPoly class_bruteforce(const HilbertFunction& h, int k);

/// Sum over diagrams with (a,b)-profile H of L^{#cells with a*l = b*(a+1)}.
MPoly class_bruteforce_ab(const HilbertFunction& h, int a, int b);

/// sum_{i >= eta} e_i ((k/2)(e_i - 1) + sum_{j=1}^{k-1} (k-j) e_{i+j}) with
/// e_i = d_i - d_{i+1} + tau(i). No realizability check.
int e_statistic(const HilbertFunction& h, int k);

/// Fiber dimension d+ = sum(H) + e_statistic(H). Requires a realizable H.
int dplus_formula(const HilbertFunction& h, int k);

/// |D| + #{s : k a(s) <= l(s) < k(a(s) + 1)}.
int dplus_statistic(const YoungDiagram& d, int k);

/// Distinct (1,k)-profiles of partitions of n, sorted.
std::vector<HilbertFunction> components_for(int n, int k);

}  // namespace qhilb
