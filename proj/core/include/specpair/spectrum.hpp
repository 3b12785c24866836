#pragma once

#include <set>

#include "specpair/exp_sums.hpp"

namespace specpair {

/// Partition of the gamma indices by "difference is rational": two entries
/// share a class iff their generator parts agree. Each class carries the lcm
/// m_j of the denominators of its internal rational offsets, measured from
/// the smallest-index member; M is the lcm over all classes.
struct RationalClassPartition {
    std::vector<std::vector<int>> classes;  // ordered by smallest member index
    std::vector<long long> class_denominators;
    long long M = 1;
    int t = 0;
};

/// Requires an Exact or Symbolic gamma (Float entries have no decidable
/// rationality structure). Exact mode always yields a single class.
RationalClassPartition rational_classes(const Gamma& g);

/// Union of complete arithmetic progressions: k belongs iff k mod period is
/// a listed residue.
struct PeriodicZeroSet {
    long long period = 1;
    std::set<long long> residues;  // subset of [0, period)

    bool contains(long long k) const {
        return residues.count(((k % period) + period) % period) > 0;
    }
    bool operator==(const PeriodicZeroSet&) const = default;
};

/// Integer zero set of one class sum. After pulling out the common
/// unit-modulus factor, the class sum is a pure rational exponential sum
/// with period m_j; each residue is decided by exact cyclotomic reduction.
PeriodicZeroSet class_zero_set(const Gamma& g, int class_index);
PeriodicZeroSet class_zero_set(const Gamma& g, const RationalClassPartition& part,
                               int class_index);

/// Intersection of all class zero sets, lifted to period M.
PeriodicZeroSet common_zero_set(const Gamma& g);

enum class ZeroSetModel { ExactComplete, GenericModel, FloatHeuristic };

std::string to_string(ZeroSetModel m);

struct Window {
    long long lo = 0;
    long long hi = 0;
};

/// Integer zero set of the full sum over a window, split into the periodic
/// part X and the finite leftover F. Exact mode: X is the complete zero set
/// and F is empty. Symbolic mode: same under the generic-independence model.
/// Float mode: no periodic part is claimed; F lists numeric near-zeros at the
/// tolerance (default 1e-9 * d).
struct ZeroSetReport {
    PeriodicZeroSet X;
    std::vector<long long> F_window;
    Window window;
    ZeroSetModel model = ZeroSetModel::ExactComplete;
};

ZeroSetReport zero_report(const Gamma& g, Window w, double tol = -1.0);

}  // namespace specpair
