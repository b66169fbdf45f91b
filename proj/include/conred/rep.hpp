#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "conred/error.hpp"

namespace conred {

// One isotypical summand det^{l} (x) Sym^{k}(C^2).
struct Summand {
    std::int64_t l = 0; // determinant twist, any sign
    std::int64_t k = 0; // symmetric power degree, k >= 0
    friend bool operator==(const Summand&, const Summand&) = default;
};

// A direct sum of summands, indexed a = 1..r in the order given.
// Summand order is preserved; duplicate summands stay distinct indices.
class RepDescriptor {
public:
    static RepDescriptor validate(std::span<const std::pair<std::int64_t, std::int64_t>> raw);
    static RepDescriptor validate(std::initializer_list<std::pair<std::int64_t, std::int64_t>> raw);

    const std::vector<Summand>& summands() const { return summands_; }
    int r() const { return static_cast<int>(summands_.size()); }
    const Summand& summand(int a) const { return summands_[static_cast<std::size_t>(a - 1)]; } // a is 1-based

    // dim = sum_a (k_a + 1), the complex dimension of the representation space.
    std::int64_t dim() const { return dim_; }

    // Offset of block a (1-based) within the flattened coordinate vector.
    std::int64_t block_offset(int a) const { return offsets_[static_cast<std::size_t>(a - 1)]; }
    std::int64_t flat_index(IndexPair idx) const { return block_offset(idx.a) + idx.j; }

private:
    explicit RepDescriptor(std::vector<Summand> summands);
    std::vector<Summand> summands_;
    std::vector<std::int64_t> offsets_;
    std::int64_t dim_ = 0;
};

// Generic: every det^l (x) C^2 summand (k = 1) occurs with multiplicity >= 2.
bool is_generic(const RepDescriptor& rep);

// Uniform: generic and k_a + 2 l_a constant over a.
bool is_uniform(const RepDescriptor& rep);

// True iff all k_a + 2 l_a > 0 or all < 0; the condition for the moment map
// to omit the origin.
bool moment_never_zero(const RepDescriptor& rep);

// All (a, j) pairs in lexicographic order; length equals dim().
std::vector<IndexPair> index_set(const RepDescriptor& rep);

} // namespace conred
