#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace factored_info {

// A word is a string over the alphabet {0,...,N-1}, one digit per entry.
using Word = std::vector<int>;

int hamming_distance(std::span<const int> a, std::span<const int> b);

// A set of distinct equal-length words over a common alphabet. The minimum
// pairwise Hamming distance is computed and cached on construction. Words
// are kept sorted lexicographically.
class Code {
 public:
  Code(int alphabet, std::vector<Word> words);

  int alphabet() const { return alphabet_; }
  int length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  int minimum_distance() const { return min_distance_; }

  // Maximal-distance code of cardinality N: length n, minimum distance n,
  // one word per alphabet symbol in the first coordinate.
  bool is_max_distance() const;

  bool operator==(const Code& other) const = default;
  bool operator<(const Code& other) const;

 private:
  int alphabet_;
  int length_;
  int min_distance_;
  std::vector<Word> words_;
};

// Partition of the full set of N^n words into codes.
struct CodePartition {
  std::vector<Code> parts;  // sorted by smallest word

  bool operator==(const CodePartition& other) const = default;
  bool operator<(const CodePartition& other) const;
};

// All N-ary codes of length n, minimum distance n, and cardinality N, in a
// deterministic order: words are (k, pi_2(k), ..., pi_n(k)) with the
// permutation tuple (pi_2,...,pi_n) enumerated lexicographically. There are
// N!^{n-1} of them; throws cap_exceeded beyond `cap`.
std::vector<Code> enumerate_max_distance_codes(int N, int n,
                                               std::uint64_t cap = 100000);

// The circular-shift partition of all N^n words into N^{n-1} max-distance
// codes: one code {(u, u+t_2, ..., u+t_n) mod N : u} per shift tuple.
CodePartition partition_into_codes(int N, int n);

// All (N-1)!^{n-1} partitions of the circular-shift form, one per tuple of
// coset representatives of the cyclic subgroup in each coordinate's
// symmetric group. Throws cap_exceeded beyond `cap` partitions.
std::vector<CodePartition> enumerate_all_partitions(int N, int n,
                                                    std::uint64_t cap = 10000);

// Edge sets {(u, (u+t) mod N) : u} for t = 1..N: N pairwise edge-disjoint
// perfect matchings covering the full bipartite graph on N x N.
std::vector<std::vector<std::pair<int, int>>> bipartite_matchings_partition(
    int N);

}  // namespace factored_info
