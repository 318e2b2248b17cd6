#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quon {

/// Permutation of {1..n} in one-line notation: image(i) is the value the
/// permutation assigns to position i (1-based).
class Permutation {
public:
  /// Identity on {1..n}; n = 0 gives the empty permutation.
  explicit Permutation(int n);
  /// From one-line notation; throws std::invalid_argument unless the
  /// images are a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n) { return Permutation(n); }

  int degree() const { return static_cast<int>(images_.size()); }
  /// image of i, 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Number of pairs i < j with image(i) > image(j).
  int inversions() const;

  /// Position of the permutation in the lexicographic enumeration of its
  /// degree, in 0..n!-1.
  std::uint64_t lex_rank() const;

  Permutation inverse() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  /// Lexicographic order on one-line notation; the canonical row and
  /// column order of every matrix indexed by permutations.
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  /// "[3,1,2]"
  std::string str() const;

private:
  std::vector<int> images_;
};

/// Function composition: compose(a, b)(i) = a(b(i)). This convention is
/// fixed project-wide. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// The cycle sending [1,2,...,n] to [k,1,...,k-1,k+1,...,n]; 2 <= k <= n.
Permutation t1k(int n, int k);

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// All products t1k(n,k_1)...t1k(n,k_p) over 1 < k_1 < ... < k_p <= n,
/// composed left to right, listed in lexicographic order of the index
/// sets. The products are pairwise distinct and there are C(n-1,p).
std::vector<Permutation> enumerate_snp(int n, int p);

/// All strictly increasing index vectors of length p drawn from 0..n-1,
/// in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int p);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

/// Sequence of pairwise distinct non-negative mode labels, order
/// significant. Ordered by length, then lexicographically.
class OrderedTuple {
public:
  OrderedTuple() = default;
  /// Throws std::invalid_argument on a repeated or negative entry.
  explicit OrderedTuple(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  /// entry at position i, 1-based.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool contains(int mode) const;

  OrderedTuple reversed() const;
  /// Copy with the 1-based position removed.
  OrderedTuple without_position(int i) const;
  /// Copy with the mode appended; throws if already present.
  OrderedTuple appended(int mode) const;
  /// Subsequence at the given strictly increasing 0-based indices.
  OrderedTuple subsequence(const std::vector<int>& indices) const;

  bool operator==(const OrderedTuple& o) const { return entries_ == o.entries_; }
  bool operator!=(const OrderedTuple& o) const { return !(*this == o); }
  bool operator<(const OrderedTuple& o) const {
    if (entries_.size() != o.entries_.size())
      return entries_.size() < o.entries_.size();
    return entries_ < o.entries_;
  }

  /// "[5,9]"
  std::string str() const;

private:
  std::vector<int> entries_;
};

/// Entrywise relabeling: result(i) = tuple(p(i)). Degree must match size.
OrderedTuple apply(const Permutation& p, const OrderedTuple& tuple);

/// Concatenation; the parts must be disjoint.
OrderedTuple concat(const OrderedTuple& a, const OrderedTuple& b);

/// Entries of whole not in part, in whole's order. part must be a subset.
OrderedTuple subtract(const OrderedTuple& whole, const OrderedTuple& part);

/// Inversion count of the unique permutation sending reference to
/// rearranged; throws std::invalid_argument if rearranged is not a
/// rearrangement of reference.
int relative_inversions(const OrderedTuple& reference,
                        const OrderedTuple& rearranged);

/// For J a subsequence of K (same relative order), returns the
/// concatenation (K-J) followed by J together with its inversion count
/// relative to K.
std::pair<OrderedTuple, int> split_concat(const OrderedTuple& K,
                                          const OrderedTuple& J);

}  // namespace quon
