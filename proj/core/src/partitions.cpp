#include "pgfock/partitions.hpp"

#include <cmath>
#include <functional>

#include "pgfock/rational.hpp"

namespace pgfock {

std::vector<SetPartition> enumerate_set_partitions(int n) {
    if (n < 1) throw SizeError("enumerate_set_partitions: n must be >= 1");
    if (n > kMaxPartitionSize)
        throw SizeError("enumerate_set_partitions: n exceeds the enumeration cap of 10");
    std::vector<SetPartition> out;
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]);
    // lexicographic successor increments the rightmost incrementable digit
    std::vector<int> a(static_cast<size_t>(n), 0);
    std::vector<int> b(static_cast<size_t>(n), 0); // b[i] = max(a[0..i-1])
    for (;;) {
        SetPartition p;
        p.n = n;
        int nblocks = 0;
        for (int j = 0; j < n; ++j) nblocks = std::max(nblocks, a[static_cast<size_t>(j)] + 1);
        p.blocks.assign(static_cast<size_t>(nblocks), {});
        for (int j = 0; j < n; ++j)
            p.blocks[static_cast<size_t>(a[static_cast<size_t>(j)])].push_back(j);
        out.push_back(std::move(p));

        for (int j = 1; j < n; ++j)
            b[static_cast<size_t>(j)] =
                std::max(b[static_cast<size_t>(j - 1)], a[static_cast<size_t>(j - 1)]);
        int i = n - 1;
        while (i > 0 && a[static_cast<size_t>(i)] == b[static_cast<size_t>(i)] + 1) --i;
        if (i == 0) return out;
        a[static_cast<size_t>(i)] += 1;
        for (int j = i + 1; j < n; ++j) a[static_cast<size_t>(j)] = 0;
    }
}

std::vector<PartitionType> enumerate_partition_types(int n) {
    std::vector<PartitionType> out;
    PartitionType t;
    t.n = n;
    t.multiplicity.assign(static_cast<size_t>(n), 0);
    // recursively place parts of size k, largest first
    std::function<void(int, int)> place = [&](int remaining, int k) {
        if (remaining == 0) {
            out.push_back(t);
            return;
        }
        if (k < 1) return;
        const int most = remaining / k;
        for (int c = most; c >= 0; --c) {
            t.multiplicity[static_cast<size_t>(k - 1)] = c;
            place(remaining - c * k, k - 1);
        }
        t.multiplicity[static_cast<size_t>(k - 1)] = 0;
    };
    place(n, n);
    return out;
}

PartitionType type_of(const SetPartition& p) {
    PartitionType t;
    t.n = p.n;
    t.multiplicity.assign(static_cast<size_t>(p.n), 0);
    for (const auto& b : p.blocks) t.multiplicity[b.size() - 1] += 1;
    return t;
}

std::uint64_t count_of_type(const PartitionType& t) {
    if (!t.valid()) throw DomainError("count_of_type: inconsistent multiplicities");
    BigInt num = 1;
    for (int j = 2; j <= t.n; ++j) num *= j;
    BigInt den = 1;
    for (int k = 1; k <= t.n; ++k) {
        const int ik = t.multiplicity[static_cast<size_t>(k - 1)];
        BigInt kfact = 1;
        for (int j = 2; j <= k; ++j) kfact *= j;
        for (int c = 0; c < ik; ++c) den *= kfact;
        for (int j = 2; j <= ik; ++j) den *= j;
    }
    return static_cast<std::uint64_t>(num / den);
}

std::uint64_t bell_number(int n) {
    if (n < 0) throw SizeError("bell_number: n must be >= 0");
    if (n == 0) return 1;
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i < n; ++i) {
        std::vector<std::uint64_t> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (size_t j = 0; j < row.size(); ++j) next.push_back(next[j] + row[j]);
        row = std::move(next);
    }
    return row.back();
}

template <typename S>
S faa_di_bruno_exp(const std::vector<S>& derivatives, const S& f_value) {
    const int n = static_cast<int>(derivatives.size());
    if (n < 1 || n > kMaxPartitionSize)
        throw SizeError("faa_di_bruno_exp: order must lie in [1, 10]");
    S total(0);
    for (const PartitionType& t : enumerate_partition_types(n)) {
        // n!/(i_1!...i_k!) * prod_k (f^(k)/k!)^{i_k}
        S coeff(1);
        for (int j = 2; j <= n; ++j) coeff *= S(j);
        S term(1);
        for (int k = 1; k <= n; ++k) {
            const int ik = t.multiplicity[static_cast<size_t>(k - 1)];
            if (ik == 0) continue;
            for (int j = 2; j <= ik; ++j) coeff /= S(j);
            S kfact(1);
            for (int j = 2; j <= k; ++j) kfact *= S(j);
            const S base = derivatives[static_cast<size_t>(k - 1)] / kfact;
            for (int c = 0; c < ik; ++c) term *= base;
        }
        total += coeff * term;
    }
    if constexpr (std::is_same_v<S, Rational>) {
        if (f_value != Rational(0))
            throw DomainError("faa_di_bruno_exp: rational mode requires f(t) = 0");
        return total;
    } else {
        return total * std::exp(f_value);
    }
}

template double faa_di_bruno_exp<double>(const std::vector<double>&, const double&);
template Rational faa_di_bruno_exp<Rational>(const std::vector<Rational>&, const Rational&);

double partition_block_weight(const SetPartition& p) {
    double w = 1.0;
    for (const auto& b : p.blocks)
        for (size_t k = 2; k < b.size(); ++k) w *= static_cast<double>(k);
    return w;
}

} // namespace pgfock
