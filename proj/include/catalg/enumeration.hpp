#pragma once

// Closed-form counts for the hom-sets of EO, EC and EF, and the lattice-path
// determinant machinery behind the EC Cartan entries.

#include <cstddef>
#include <utility>
#include <vector>

#include "catalg/exact_matrix.hpp"
#include "catalg/maps.hpp"

namespace catalg {

/// C(a, b): 0 when b < 0 or b > a, except C(-1, -1) = 1.
BigInt binomial(long a, long b);

/// Non-decreasing tuple (p_1..p_n) with 1 <= p_i <= n+1: a north-east
/// lattice path from (1,1) to (n+1,n+1) given by its horizontal-step heights.
class LatticePath {
 public:
  LatticePath() = default;
  /// Throws std::invalid_argument if the tuple is not a valid path.
  explicit LatticePath(std::vector<int> steps);

  std::size_t length() const { return steps_.size(); }
  const std::vector<int>& steps() const { return steps_; }
  int operator[](std::size_t i) const { return steps_[i]; }

  /// Componentwise <=.
  bool below(const LatticePath& other) const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<int> steps_;
};

struct BoundaryData {
  SubsetOfN set;
  LatticePath bar;
};

/// bar_1 = 1 and bar_i = bar_{i-1} + [i in B]; ascents sit exactly at the
/// positions i > 1 that belong to B.
BoundaryData bar_path(int n, const SubsetOfN& b);

/// Square matrix with entry (i, j) = C(x_i, j - i + 1).
ExactMatrix path_matrix(const LatticePath& x);

/// Number of lattice paths P <= X, as det of path_matrix(X).
BigInt paths_below_det(const LatticePath& x);

/// Same count by cumulative-sum dynamic programming.
BigInt paths_below_dp(const LatticePath& x);

/// C(m-1, l-1): onto order-preserving maps from an m-set to an l-set.
BigInt count_onto_op(long m, long l);

/// (n+1)x(n+1) Cartan matrix of the order-preserving family over [0..n];
/// 1-based entry (i, j) = C(j-2, i-2) for j >= i, zero below the diagonal.
ExactMatrix cartan_po_closed(int n);

/// dim Rad^k of the order-preserving family by the double binomial sum.
BigInt dim_rad_po(int n, int k);

/// |C([n], B)|: order-preserving order-decreasing total maps [n] -> B.
/// Zero when n >= 1 and 1 is not in B (1 has nowhere to go).
BigInt count_C(int n, const SubsetOfN& b);

/// Onto maps [n] -> B that are order-preserving and order-decreasing, by
/// inclusion-exclusion over subsets of B.
BigInt count_EC_full(int n, const SubsetOfN& b);

/// Domain reduction: A' with B ⊆ A', |A'| = |A| and the same number of
/// onto order-preserving order-decreasing maps into B. Throws Infeasible if
/// some element of B exceeds every remaining candidate.
SubsetOfN reduce_domain(const SubsetOfN& a, const SubsetOfN& b);

/// The intermediate sets A_0 = A, A_1, ..., A_k = A' of reduce_domain.
/// Throws Infeasible like reduce_domain.
std::vector<SubsetOfN> reduce_domain_steps(const SubsetOfN& a, const SubsetOfN& b);

/// Renames A' = {a_1 < ... < a_m} to [m]: returns (m, image of B).
std::pair<int, SubsetOfN> rename_to_initial(const SubsetOfN& a_prime, const SubsetOfN& b);

/// |Hom_EC(A, B)| via reduce_domain -> rename_to_initial -> count_EC_full.
BigInt cartan_entry_ec(const SubsetOfN& a, const SubsetOfN& b);

/// Order-decreasing total maps A -> B: product over i in A of |B_{<=i}|.
BigInt count_decreasing(const SubsetOfN& a, const SubsetOfN& b);

/// |Hom_EF(A, B)| by inclusion-exclusion over subsets of B.
BigInt cartan_entry_ef(const SubsetOfN& a, const SubsetOfN& b);

/// Full 2^n x 2^n Cartan matrices from the closed forms, objects in
/// canonical order, entry (i, j) = count for source j and target i.
/// Parallel over entries.
ExactMatrix cartan_ec_closed(int n);
ExactMatrix cartan_ef_closed(int n);

/// (n+1)!, the size of the order-decreasing partial-map monoid.
BigInt pf_monoid_size(int n);

namespace serial {

ExactMatrix cartan_ec_closed(int n);
ExactMatrix cartan_ef_closed(int n);

}  // namespace serial

}  // namespace catalg
