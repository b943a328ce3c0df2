#pragma once

#include <vector>

#include "qhilb/diagram.hpp"
#include "qhilb/qpoly.hpp"

namespace qhilb {

/// Lattice path from (0,0) to (kn, n) that never passes below x = ky,
/// recorded by the x-coordinate u_i of its i-th up step (u_i <= k(i-1)).
struct KDyckPath {
  int n = 0;
  int k = 1;
  std::vector<int> up_positions;

  friend bool operator==(const KDyckPath&, const KDyckPath&) = default;
};

std::vector<KDyckPath> enumerate_kdyck(int n, int k);

/// Squares above the path, reflected so the top row of the box becomes row 0.
YoungDiagram path_diagram(const KDyckPath& path);

/// Full squares between the path and the line x = ky, counted cell by cell.
int area(const KDyckPath& path);

/// #{s in D_pi : k a(s) <= l(s) <= k(a(s) + 1)}.
int bk(const KDyckPath& path);

/// sum over paths of q^{b_k} t^{area}.
MPoly qt_catalan(int n, int k);

/// (1/(kn+1)) * binomial((k+1)n, n).
Integer fuss_catalan(int n, int k);

/// Class of the open stratum in Hilb^N: the sum over profiles H of total N
/// with d_l = 0 for l >= kn - k of [component H] * L^{d+(H)}.
MPoly open_stratum_class(int big_n, int k, int n);

struct Theorem2Report {
  int k = 1;
  int n = 0;
  bool equal = false;
  MPoly lhs;  ///< sum_N open_stratum_class(N, k, n) t^N
  MPoly rhs;  ///< (L t)^{kn(n-1)/2} C_n^{(k)}(L, (L t)^{-1})
};

Theorem2Report verify_theorem2(int k, int n);

}  // namespace qhilb
