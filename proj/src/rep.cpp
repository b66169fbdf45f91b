#include "conred/rep.hpp"

#include <map>
#include <string>

namespace conred {

RepDescriptor::RepDescriptor(std::vector<Summand> summands) : summands_(std::move(summands)) {
    offsets_.reserve(summands_.size());
    for (const Summand& s : summands_) {
        offsets_.push_back(dim_);
        dim_ += s.k + 1;
    }
}

RepDescriptor RepDescriptor::validate(std::span<const std::pair<std::int64_t, std::int64_t>> raw) {
    if (raw.empty())
        raise(errc::empty_descriptor, "representation descriptor must contain at least one summand");
    std::vector<Summand> summands;
    summands.reserve(raw.size());
    int a = 1;
    for (const auto& [l, k] : raw) {
        if (k < 0)
            raise(errc::negative_symmetric_degree,
                  "summand " + std::to_string(a) + " has negative symmetric degree k = " + std::to_string(k),
                  {IndexPair{a, 0}});
        // Bound under which all downstream integer predicates are exact.
        if (k > 10'000 || l > 10'000 || l < -10'000)
            raise(errc::out_of_range,
                  "summand " + std::to_string(a) + " exceeds the exact-arithmetic bound |l|, k <= 1e4");
        summands.push_back(Summand{l, k});
        ++a;
    }
    return RepDescriptor(std::move(summands));
}

RepDescriptor RepDescriptor::validate(std::initializer_list<std::pair<std::int64_t, std::int64_t>> raw) {
    return validate(std::span<const std::pair<std::int64_t, std::int64_t>>(raw.begin(), raw.size()));
}

bool is_generic(const RepDescriptor& rep) {
    std::map<std::int64_t, int> k1_multiplicity;
    for (const Summand& s : rep.summands())
        if (s.k == 1)
            ++k1_multiplicity[s.l];
    for (const auto& [l, count] : k1_multiplicity)
        if (count < 2)
            return false;
    return true;
}

bool is_uniform(const RepDescriptor& rep) {
    if (!is_generic(rep))
        return false;
    const std::int64_t trace0 = rep.summand(1).k + 2 * rep.summand(1).l;
    for (const Summand& s : rep.summands())
        if (s.k + 2 * s.l != trace0)
            return false;
    return true;
}

bool moment_never_zero(const RepDescriptor& rep) {
    bool all_pos = true, all_neg = true;
    for (const Summand& s : rep.summands()) {
        const std::int64_t t = s.k + 2 * s.l;
        all_pos = all_pos && t > 0;
        all_neg = all_neg && t < 0;
    }
    return all_pos || all_neg;
}

std::vector<IndexPair> index_set(const RepDescriptor& rep) {
    std::vector<IndexPair> out;
    out.reserve(static_cast<std::size_t>(rep.dim()));
    for (int a = 1; a <= rep.r(); ++a)
        for (int j = 0; j <= rep.summand(a).k; ++j)
            out.push_back(IndexPair{a, j});
    return out;
}

} // namespace conred
