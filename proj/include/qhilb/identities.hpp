#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhilb/hilbert_function.hpp"
#include "qhilb/hookcode.hpp"
#include "qhilb/qpoly.hpp"

namespace qhilb {

/// Outcome of one identity check. Sweeps set `instances` to the number of
/// cases checked and keep the two sides only for the first failing case.
struct VerificationReport {
  std::string identity;
  int order = 0;
  bool equal = false;
  std::optional<MPoly> lhs;
  std::optional<MPoly> rhs;
  std::optional<Exponent> first_diff;
  std::string main_var = "L";
  std::string t_var = "t";
  int instances = 1;
  std::string failing_instance;
};

/// For all i >= eta: d_i - d_{i+1} + tau(i) >= 0 and d_{i+1} <= d_{i+1-k},
/// with every diagonal up to eta full.
bool is_good(const HilbertFunction& h, int k);

/// Every good sequence of total n, by bounded search.
std::vector<HilbertFunction> good_sequences(int n, int k);

/// chi(H) for a good H.
int chi(const HilbertFunction& h, int k);

struct AuxIndices {
  int sigma = 0;  ///< minimal i >= 0 with d_j = 0 for j > theta + i
  int psi = 0;    ///< maximal i <= sigma with k | i
};

AuxIndices aux_indices(const HilbertFunction& h, int k);

/// Maximal j < i with r_0(P_j) < f_j.
std::optional<int> phi_below(const DiagramSequence& p, int i);

/// (1-q)/(1-q^{d_{eta-k+1}+1-d_{eta+1}}) prod_{i>eta} G(d_i - d_{i+1} + tau(i), d_{i-k} - d_i).
MPoly combinatorial_form(const HilbertFunction& h, int k);

/// Closed form, brute force and the equivalent combinatorial form agree on H.
VerificationReport verify_theorem1(const HilbertFunction& h, int k);
VerificationReport verify_theorem1_sweep(int k, int max_n, unsigned threads = 1);

/// Sum over good H of the Gaussian product * q^chi * t^|H| against
/// prod 1/(1 - q t^i), modulo t^{order+1}.
VerificationReport verify_theorem3(int k, int order, unsigned threads = 1);

VerificationReport verify_main_identity(const HilbertFunction& h, int k);
VerificationReport verify_main_identity_sweep(int k, int max_n, unsigned threads = 1);

/// Requires psi <= p < psi + k.
VerificationReport verify_extra_identity(const HilbertFunction& h, int k, int p);
/// Every admissible p for every realizable H of total <= max_n.
VerificationReport verify_extra_identity_sweep(int k, int max_n, unsigned threads = 1);

/// sum_H [component H] L^{d+(H)} t^|H| against prod 1/(1 - L^{i+1} t^i).
VerificationReport verify_hilbert_series(int k, int order, unsigned threads = 1);

/// Generating series of (a,b)-fixed-point classes against the conjectured
/// product. A mismatch is a finding, reported with the first differing term.
VerificationReport verify_conjecture(int a, int b, int order, unsigned threads = 1);

}  // namespace qhilb
