#pragma once
// Triangular truncations T_-, T_++, T_+, T_--, D, the Iwasawa projections
// p_u / p_b, and the norm-growth experiment for the unboundedness of
// triangular truncation on L_1 and L_inf.

#include <string>
#include <vector>

#include "poissonlab/core.hpp"

namespace plab {

// Kinds in the paper's (m, n) semantics; through pos(.) they coincide with
// the literal storage masks noted in parentheses.
enum class TruncationKind {
  Lower,        // T_-  : keep m <= n  (storage lower incl. diagonal)
  StrictUpper,  // T_++ : keep m >  n  (storage strict upper)
  Upper,        // T_+  : keep m >= n  (storage upper incl. diagonal)
  StrictLower,  // T_-- : keep m <  n  (storage strict lower)
  Diagonal,     // D    : keep m == n
};

Mat truncate(const Mat& A, TruncationKind k);

// Iwasawa split L = u (+) b^{sign}: p_{u,+}(A) = T_--(A) - T_--(A)* + (D(A)-D(A)*)/2,
// p_{u,-}(A) uses T_++ instead.  project_b is the exact complement.
Mat project_u(const Mat& A, int sign);
Mat project_b(const Mat& A, int sign);

struct IwasawaSplit {
  Mat u_part;  // skew-Hermitian
  Mat b_part;  // triangular per sign, real diagonal
  int sign;
};
IwasawaSplit iwasawa_split(const Mat& A, int sign);

double truncation_operator_ratio(const Mat& A, const Window& w, TruncationKind k,
                                 SchattenExp e);

// The concrete unboundedness witness: skew Cauchy matrix a_{jk} = 1/(j-k)
// over window labels, zero diagonal (n x n, n even, window half-size n/2).
Mat cauchy_witness(int n);

struct GrowthRow {
  int N;                  // witness matrix size
  double ratio;
  std::string norm_kind;  // "1", "2", "inf", or "tn_block"
  std::string trunc_kind;
  std::uint64_t seed;
};

// For e in {1, inf} the ratio is ||T_+(A_N)||_e / pi, normalized by the
// uniform operator-norm bound pi = sup_N ||A_N||_inf of the nested witness
// family (bounded witness, diverging truncated norm); for e = 2 it is the
// self-ratio ||T_+(A_N)||_2 / ||A_N||_2 (exact contraction).
std::vector<GrowthRow> growth_experiment(const std::vector<int>& N_list, SchattenExp e,
                                         TruncationKind k, std::uint64_t seed);

// |  ||T_+([x,y]|_{H+})||_1 - 2||T_+(K)||_1  | for the paper's interleaved
// even/odd block construction with Hermitian K = i * cauchy_witness(m).
double block_identity_residual(int m);

// ||T_+([x,y]|_{H+})||_1 itself (the diverging functional).
double block_truncated_trace_norm(int m);

}  // namespace plab
