#pragma once

#include <optional>
#include <vector>

#include "specpair/errors.hpp"

namespace specpair {

/// The pattern of s strips of r consecutive integers at stride N:
/// union over n < s of {m+1, ..., m+r} + n*N. N > r keeps the strips
/// disjoint, so the pattern has exactly r*s members.
struct Flag {
    long long m = 0;
    int r = 1;
    long long N = 2;
    int s = 1;

    bool operator==(const Flag&) const = default;
};

/// Validates the strip shape. Throws InvalidInput on r < 1, s < 1 or N <= r.
void validate_flag(const Flag& f);

/// The r*s members, sorted ascending.
std::vector<long long> flag_members(const Flag& f);

/// All flags of the given shape whose members all lie in S, in lexicographic
/// (m, N) order. Defaults: m in [min(S)-1-r, max(S)], N in (r, max(S)-min(S)];
/// both ranges can be overridden. The default ranges are complete: any flag
/// inside S falls within them.
std::vector<Flag> find_flags(const std::vector<long long>& S, int r, int s,
                             std::optional<std::pair<long long, long long>> m_range = {},
                             std::optional<long long> N_max = {});

}  // namespace specpair
