#pragma once

// Permutation groups on root indices, and arrangement arrays: rows of
// roots listed in the orders produced by a group, cut into blocks by the
// cosets of a subgroup.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galois/error.hpp"

namespace galois {

class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `images` is a permutation of 0..n-1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  int operator()(std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

  /// Cycle notation with 1-based letters, e.g. "(1 2)(3 4)"; "()" for identity.
  std::string to_cycle_string() const;

 private:
  std::vector<int> images_;
};

/// Every permutation of n letters, in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t n);

class PermGroup {
 public:
  PermGroup() = default;
  /// Wraps an element set that the caller guarantees is a group.
  /// Throws DomainError if it is not (identity, closure, inverses).
  explicit PermGroup(std::vector<Permutation> elements);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return elements_.empty() ? 0 : elements_.front().size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& g) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) = default;
  /// Order first, then lexicographic on the sorted element lists.
  friend bool operator<(const PermGroup& a, const PermGroup& b);

  std::string to_string() const;

 private:
  std::vector<Permutation> elements_;  // sorted, unique
};

/// Smallest group containing the generators; {id} on n letters for none.
/// Throws DomainError on mixed degrees.
PermGroup closure(const std::vector<Permutation>& generators, std::size_t n);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);

/// Groups larger than this are rejected by the enumeration routines.
inline constexpr std::size_t kMaxGroupOrder = 24;

/// Every subgroup of g exactly once, sorted by order then lexicographically.
/// Throws DomainError if |g| exceeds kMaxGroupOrder.
std::vector<PermGroup> all_subgroups(const PermGroup& g);

/// A row of the array: position i holds root index order[i].
class Arrangement {
 public:
  Arrangement() = default;
  explicit Arrangement(std::vector<int> order);
  static Arrangement identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  int operator[](std::size_t i) const { return order_[i]; }
  const std::vector<int>& order() const { return order_; }

  /// (sigma . base)(i) = base(sigma^-1(i)).
  Arrangement acted_on_by(const Permutation& sigma) const;
  /// The substitution on letters taking this row to `target`.
  Permutation transition_to(const Arrangement& target) const;
  /// Applies a substitution on letters: position i holds s(order[i]).
  Arrangement substituted(const Permutation& s) const;

  /// Letters a, b, c, ... separated by spaces.
  std::string to_string() const;

  friend auto operator<=>(const Arrangement& a, const Arrangement& b) = default;
  friend bool operator==(const Arrangement& a, const Arrangement& b) = default;

 private:
  std::vector<int> order_;
};

struct ClosureWitness {
  Arrangement alpha, beta, gamma;
};

class ArrangementGroup {
 public:
  ArrangementGroup() = default;
  /// Rows are stored sorted; duplicates are removed.
  explicit ArrangementGroup(std::vector<Arrangement> rows);

  const std::vector<Arrangement>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool contains(const Arrangement& a) const;
  /// A triple whose transition applied to gamma leaves the set, if any.
  std::optional<ClosureWitness> closure_violation() const;

 private:
  std::vector<Arrangement> rows_;
};

/// One coset block of an arrangement array.
struct ArrangementBlock {
  Permutation representative;  // lexicographically smallest element of the coset
  std::vector<Arrangement> rows;  // (rep * tau) . base for tau in h, in h's element order
  std::vector<Permutation> row_elements;  // rep * tau for each row
  ArrangementGroup group() const { return ArrangementGroup(rows); }
};

/// The |g| rows sigma . base partitioned by left cosets of h.
/// Throws DomainError if h is not a subgroup of g.
std::vector<ArrangementBlock> arrangement_array(const PermGroup& g, const PermGroup& h, const Arrangement& base);

/// All transitions between rows. Throws DomainError naming a witnessing
/// triple when the rows are not closed.
PermGroup substitution_group(const ArrangementGroup& ag);

}  // namespace galois
