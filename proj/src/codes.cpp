#include "factored_info/codes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "factored_info/exact_polytope.hpp"
#include "factored_info/oplog.hpp"

namespace factored_info {

namespace {

using Permutation = std::vector<int>;  // table: value at index u is pi(u)

Permutation identity_permutation(int N) {
  Permutation p(static_cast<std::size_t>(N));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<Permutation> all_permutations(int N) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(N);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Multiplies factor^count with saturation at cap+1, for cap checks without
// overflow.
std::uint64_t saturating_power(std::uint64_t factor, int count,
                               std::uint64_t cap) {
  std::uint64_t value = 1;
  for (int i = 0; i < count; ++i) {
    if (factor != 0 && value > cap / factor) return cap + 1;
    value *= factor;
  }
  return value;
}

std::uint64_t factorial(int N) {
  std::uint64_t f = 1;
  for (int k = 2; k <= N; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

void check_code_parameters(int N, int n) {
  if (N < 2 || n < 1) {
    throw std::invalid_argument("code enumeration needs N >= 2 and n >= 1");
  }
}

}  // namespace

int hamming_distance(std::span<const int> a, std::span<const int> b) {
  oplog::note("codes.hamming_distance");
  if (a.size() != b.size()) {
    throw std::invalid_argument("Hamming distance needs equal lengths");
  }
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) ++d;
  }
  return d;
}

Code::Code(int alphabet, std::vector<Word> words)
    : alphabet_(alphabet), words_(std::move(words)) {
  if (alphabet_ < 1 || words_.empty()) {
    throw std::invalid_argument("code needs an alphabet and at least one word");
  }
  length_ = static_cast<int>(words_.front().size());
  if (length_ < 1) {
    throw std::invalid_argument("code words must be nonempty");
  }
  for (const Word& w : words_) {
    if (static_cast<int>(w.size()) != length_) {
      throw std::invalid_argument("code words must share one length");
    }
    for (int digit : w) {
      if (digit < 0 || digit >= alphabet_) {
        throw std::invalid_argument("code word digit outside the alphabet");
      }
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw std::invalid_argument("code words must be distinct");
  }
  min_distance_ = length_;  // vacuously full distance for a single word
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::size_t j = i + 1; j < words_.size(); ++j) {
      min_distance_ =
          std::min(min_distance_, hamming_distance(words_[i], words_[j]));
    }
  }
}

bool Code::is_max_distance() const {
  return static_cast<int>(words_.size()) == alphabet_ &&
         min_distance_ == length_;
}

bool Code::operator<(const Code& other) const { return words_ < other.words_; }

bool CodePartition::operator<(const CodePartition& other) const {
  return parts < other.parts;
}

std::vector<Code> enumerate_max_distance_codes(int N, int n,
                                               std::uint64_t cap) {
  oplog::note("codes.enumerate_max_distance_codes");
  check_code_parameters(N, n);
  const std::uint64_t count = saturating_power(factorial(N), n - 1, cap);
  if (count > cap) {
    throw cap_exceeded("max-distance code count N!^(n-1)", count, cap);
  }

  const std::vector<Permutation> perms = all_permutations(N);
  std::vector<Code> out;
  out.reserve(count);

  // Odometer over the permutation tuple (pi_2,...,pi_n); the first
  // coordinate is canonicalized to 0..N-1 in order.
  std::vector<std::size_t> choice(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
      Word w(static_cast<std::size_t>(n));
      w[0] = k;
      for (int j = 1; j < n; ++j) {
        w[static_cast<std::size_t>(j)] =
            perms[choice[static_cast<std::size_t>(j - 1)]]
                 [static_cast<std::size_t>(k)];
      }
      words.push_back(std::move(w));
    }
    out.emplace_back(N, std::move(words));

    int pos = n - 2;
    while (pos >= 0) {
      auto& c = choice[static_cast<std::size_t>(pos)];
      if (++c < perms.size()) break;
      c = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

CodePartition partition_into_codes(int N, int n) {
  oplog::note("codes.partition_into_codes");
  check_code_parameters(N, n);
  CodePartition partition;
  std::vector<int> shifts(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    std::vector<Word> words;
    for (int u = 0; u < N; ++u) {
      Word w(static_cast<std::size_t>(n));
      w[0] = u;
      for (int j = 1; j < n; ++j) {
        w[static_cast<std::size_t>(j)] =
            (u + shifts[static_cast<std::size_t>(j - 1)]) % N;
      }
      words.push_back(std::move(w));
    }
    partition.parts.emplace_back(N, std::move(words));

    int pos = n - 2;
    while (pos >= 0) {
      auto& s = shifts[static_cast<std::size_t>(pos)];
      if (++s < N) break;
      s = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(partition.parts.begin(), partition.parts.end());
  return partition;
}

std::vector<CodePartition> enumerate_all_partitions(int N, int n,
                                                    std::uint64_t cap) {
  oplog::note("codes.enumerate_all_partitions");
  check_code_parameters(N, n);
  const std::uint64_t count = saturating_power(factorial(N - 1), n - 1, cap);
  if (count > cap) {
    throw cap_exceeded("partition count (N-1)!^(n-1)", count, cap);
  }

  // Left-coset representatives of the cyclic-shift subgroup in S_N: the
  // lexicographically smallest member of each coset sigma * <shift>.
  std::vector<Permutation> reps;
  for (const Permutation& sigma : all_permutations(N)) {
    bool minimal = true;
    for (int t = 1; t < N && minimal; ++t) {
      Permutation shifted(static_cast<std::size_t>(N));
      for (int u = 0; u < N; ++u) {
        shifted[static_cast<std::size_t>(u)] =
            sigma[static_cast<std::size_t>((u + t) % N)];
      }
      if (shifted < sigma) minimal = false;
    }
    if (minimal) reps.push_back(sigma);
  }

  std::vector<CodePartition> out;
  out.reserve(count);
  std::vector<std::size_t> choice(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    CodePartition partition;
    std::vector<int> shifts(static_cast<std::size_t>(n - 1), 0);
    while (true) {
      std::vector<Word> words;
      for (int u = 0; u < N; ++u) {
        Word w(static_cast<std::size_t>(n));
        w[0] = u;
        for (int j = 1; j < n; ++j) {
          const auto& rep = reps[choice[static_cast<std::size_t>(j - 1)]];
          w[static_cast<std::size_t>(j)] =
              rep[static_cast<std::size_t>(
                  (u + shifts[static_cast<std::size_t>(j - 1)]) % N)];
        }
        words.push_back(std::move(w));
      }
      partition.parts.emplace_back(N, std::move(words));

      int pos = n - 2;
      while (pos >= 0) {
        auto& s = shifts[static_cast<std::size_t>(pos)];
        if (++s < N) break;
        s = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    std::sort(partition.parts.begin(), partition.parts.end());
    out.push_back(std::move(partition));

    int pos = n - 2;
    while (pos >= 0) {
      auto& c = choice[static_cast<std::size_t>(pos)];
      if (++c < reps.size()) break;
      c = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<std::vector<std::pair<int, int>>> bipartite_matchings_partition(
    int N) {
  oplog::note("codes.bipartite_matchings_partition");
  if (N < 1) {
    throw std::invalid_argument("bipartite matchings need N >= 1");
  }
  std::vector<std::vector<std::pair<int, int>>> matchings;
  for (int t = 1; t <= N; ++t) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < N; ++u) {
      edges.emplace_back(u, (u + t) % N);
    }
    matchings.push_back(std::move(edges));
  }
  return matchings;
}

}  // namespace factored_info
