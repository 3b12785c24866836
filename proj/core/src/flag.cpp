#include "specpair/flag.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace specpair {

void validate_flag(const Flag& f) {
    if (f.r < 1) throw InvalidInput("flag needs strip length r >= 1");
    if (f.s < 1) throw InvalidInput("flag needs at least one strip");
    if (f.N <= f.r)
        throw InvalidInput("flag stride N = " + std::to_string(f.N) +
                           " must exceed the strip length r = " + std::to_string(f.r));
}

std::vector<long long> flag_members(const Flag& f) {
    validate_flag(f);
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(f.r) * static_cast<std::size_t>(f.s));
    for (int n = 0; n < f.s; ++n)
        for (int i = 1; i <= f.r; ++i) out.push_back(f.m + n * f.N + i);
    return out;  // already ascending: strips are disjoint and increasing
}

std::vector<Flag> find_flags(const std::vector<long long>& S, int r, int s,
                             std::optional<std::pair<long long, long long>> m_range,
                             std::optional<long long> N_max) {
    if (r < 1 || s < 1) throw InvalidInput("flag shape must have r >= 1 and s >= 1");
    std::vector<Flag> out;
    if (S.empty()) return out;

    const auto [min_it, max_it] = std::minmax_element(S.begin(), S.end());
    const long long lo = m_range ? m_range->first : *min_it - 1 - r;
    const long long hi = m_range ? m_range->second : *max_it;
    const long long n_hi = N_max ? *N_max : *max_it - *min_it;
    const std::set<long long> members(S.begin(), S.end());

    for (long long m = lo; m <= hi; ++m) {
        for (long long N = r + 1; N <= n_hi; ++N) {
            bool ok = true;
            for (int n = 0; ok && n < s; ++n)
                for (int i = 1; i <= r; ++i)
                    if (!members.count(m + n * N + i)) {
                        ok = false;
                        break;
                    }
            if (ok) out.push_back(Flag{m, r, N, s});
        }
    }
    return out;
}

}  // namespace specpair
