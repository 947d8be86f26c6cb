#ifndef PGFOCK_PARTITIONS_HPP
#define PGFOCK_PARTITIONS_HPP

#include <cstdint>
#include <vector>

#include "pgfock/errors.hpp"

namespace pgfock {

/// Largest n for which set partitions are enumerated exhaustively
/// (Bell(10) = 115975).
inline constexpr int kMaxPartitionSize = 10;

/// A partition of {0, .., n-1} into disjoint nonempty blocks covering the
/// index set; blocks and their contents are sorted.
struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;
};

/// Block-size multiplicities (i_1, .., i_n) with sum k*i_k = n.
struct PartitionType {
    int n = 0;
    std::vector<int> multiplicity; // multiplicity[k-1] = #blocks of size k

    bool valid() const {
        if (static_cast<int>(multiplicity.size()) != n) return false;
        int total = 0;
        for (int k = 1; k <= n; ++k) {
            if (multiplicity[static_cast<size_t>(k - 1)] < 0) return false;
            total += k * multiplicity[static_cast<size_t>(k - 1)];
        }
        return total == n;
    }
};

/// All set partitions of {0..n-1}, each exactly once, in lexicographic
/// restricted-growth-string order (stable enumeration order for golden
/// files). Throws SizeError for n > 10.
std::vector<SetPartition> enumerate_set_partitions(int n);

/// All block-size multiplicity vectors for n (integer partitions of n).
std::vector<PartitionType> enumerate_partition_types(int n);

/// Type of a concrete set partition.
PartitionType type_of(const SetPartition& p);

/// Number of set partitions of {1..n} with the given multiplicities:
/// n! / prod_k ((k!)^{i_k} i_k!).
std::uint64_t count_of_type(const PartitionType& t);

/// Bell numbers by the Bell-triangle recurrence (independent oracle).
std::uint64_t bell_number(int n);

/// d^n/dt^n e^{f(t)} from the derivatives f^(1)..f^(n) at t and f(t):
/// sum over types of n!/(i_1!..i_k!) prod_k (f^(k)/k!)^{i_k} * e^{f}.
/// Works for double and Rational scalars; n <= 10.
template <typename S>
S faa_di_bruno_exp(const std::vector<S>& derivatives, const S& f_value);

/// Per-partition weight of the Gamma-space inner product: for a block of
/// size k the contraction carries (k-1)!; this is prod over blocks.
double partition_block_weight(const SetPartition& p);

} // namespace pgfock

#endif
