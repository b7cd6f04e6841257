#pragma once

// Self-characterising subsets of a finite relation: friendly, weakly/strongly
// packed, and the self-characterising combinations, with exhaustive and
// maximal-friendly enumeration.

#include <cstdint>
#include <string>
#include <vector>

namespace hornlab {

using Bitset = std::uint64_t; // element x present iff bit x set

struct FiniteRelation {
    int size = 0;
    std::vector<Bitset> likes; // bit y of likes[x] means "x likes y"
    std::vector<std::string> labels;

    static FiniteRelation from_table(const std::vector<std::vector<bool>>& table,
                                     std::vector<std::string> labels = {});

    bool likes_xy(int x, int y) const { return (likes[x] >> y) & 1U; }
    Bitset universe() const { return size == 64 ? ~Bitset(0) : ((Bitset(1) << size) - 1); }
};

struct SubsetVerdict {
    Bitset subset = 0;
    bool friendly = false;
    bool weakly_packed = false;
    bool strongly_packed = false;
    bool weak_sc = false;
    bool strong_sc = false;
};

/// All (ordered) pairs in A related, including self-loops.
bool is_friendly(const FiniteRelation& R, Bitset A);

/// No self-liking x outside A that both likes and is liked by all of A.
bool is_weakly_packed(const FiniteRelation& R, Bitset A);

/// Every x outside A dislikes some member of A.
bool is_strongly_packed(const FiniteRelation& R, Bitset A);

SubsetVerdict classify(const FiniteRelation& R, Bitset A);

enum class ScMode { weak, strong };

/// All weakly (resp. strongly) self-characterising subsets, ascending as
/// bitsets. Exhaustive for size <= 24; weak mode falls back to maximal-clique
/// search for sizes up to 64.
std::vector<Bitset> enumerate_sc(const FiniteRelation& R, ScMode mode);

/// Maximal friendly sets (equivalently, the weakly self-characterising sets).
std::vector<Bitset> maximal_friendly(const FiniteRelation& R);

/// Greedy extension of a friendly set to a weakly self-characterising superset;
/// repeatedly adds the lowest-index admissible element.
Bitset extend_to_weak_sc(const FiniteRelation& R, Bitset E);

struct UniqueScResult {
    enum Kind { unique, multiple, none_friendly } kind = none_friendly;
    Bitset set = 0;                // meaningful when unique
    bool condition_two_holds = false; // the mutual-liking equivalence, when unique
};

/// Exhaustively decides whether exactly one weakly self-characterising set
/// contains E; when unique, cross-checks the mutual-liking criterion.
UniqueScResult unique_weak_sc_containing(const FiniteRelation& R, Bitset E);

} // namespace hornlab
