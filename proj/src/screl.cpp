#include "hornlab/screl.hpp"

#include "hornlab/errors.hpp"

#include <algorithm>
#include <bit>

namespace hornlab {

namespace {

constexpr int kExhaustiveCap = 24;
constexpr int kGreedyCap = 64;

void check_subset(const FiniteRelation& R, Bitset A) {
    if ((A & ~R.universe()) != 0) {
        throw PreconditionError("subset contains elements outside the ground set");
    }
}

// Elements that like, are liked by, and include x itself: candidates that keep
// A u {x} friendly are those with mutual edges to all of A plus a self-loop.
bool mutual_with_all(const FiniteRelation& R, int x, Bitset A) {
    if ((R.likes[x] & A) != A) {
        return false;
    }
    for (int y = 0; y < R.size; ++y) {
        if (((A >> y) & 1U) && !R.likes_xy(y, x)) {
            return false;
        }
    }
    return true;
}

} // namespace

FiniteRelation FiniteRelation::from_table(const std::vector<std::vector<bool>>& table,
                                          std::vector<std::string> labels) {
    const int n = static_cast<int>(table.size());
    if (n > kGreedyCap) {
        throw SizeCapError("relation ground set exceeds 64 elements");
    }
    FiniteRelation R;
    R.size = n;
    R.likes.resize(n, 0);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(table[x].size()) != n) {
            throw PreconditionError("relation table must be square");
        }
        for (int y = 0; y < n; ++y) {
            if (table[x][y]) {
                R.likes[x] |= Bitset(1) << y;
            }
        }
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
        throw PreconditionError("label count must match relation size");
    }
    R.labels = std::move(labels);
    return R;
}

bool is_friendly(const FiniteRelation& R, Bitset A) {
    check_subset(R, A);
    for (int x = 0; x < R.size; ++x) {
        if (((A >> x) & 1U) && (R.likes[x] & A) != A) {
            return false;
        }
    }
    return true;
}

bool is_weakly_packed(const FiniteRelation& R, Bitset A) {
    check_subset(R, A);
    for (int x = 0; x < R.size; ++x) {
        if ((A >> x) & 1U) {
            continue;
        }
        if (R.likes_xy(x, x) && mutual_with_all(R, x, A)) {
            return false;
        }
    }
    return true;
}

bool is_strongly_packed(const FiniteRelation& R, Bitset A) {
    check_subset(R, A);
    for (int x = 0; x < R.size; ++x) {
        if ((A >> x) & 1U) {
            continue;
        }
        if ((R.likes[x] & A) == A) {
            return false; // x likes all of A but is not in A
        }
    }
    return true;
}

SubsetVerdict classify(const FiniteRelation& R, Bitset A) {
    SubsetVerdict v;
    v.subset = A;
    v.friendly = is_friendly(R, A);
    v.weakly_packed = is_weakly_packed(R, A);
    v.strongly_packed = is_strongly_packed(R, A);
    v.weak_sc = v.friendly && v.weakly_packed;
    v.strong_sc = v.friendly && v.strongly_packed;
    return v;
}

namespace {

// Bron-Kerbosch with pivoting over the mutual-liking graph on self-liking
// elements. Maximal cliques there are exactly the maximal friendly sets.
void bron_kerbosch(const std::vector<Bitset>& adj, Bitset clique, Bitset candidates,
                   Bitset excluded, std::vector<Bitset>& out) {
    if (candidates == 0 && excluded == 0) {
        out.push_back(clique);
        return;
    }
    const Bitset pool = candidates | excluded;
    int pivot = std::countr_zero(pool);
    int best = -1;
    for (Bitset rest = pool; rest != 0; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        const int score = std::popcount(candidates & adj[u]);
        if (score > best) {
            best = score;
            pivot = u;
        }
    }
    for (Bitset rest = candidates & ~adj[pivot]; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Bitset bit = Bitset(1) << v;
        bron_kerbosch(adj, clique | bit, candidates & adj[v], excluded & adj[v], out);
        candidates &= ~bit;
        excluded |= bit;
    }
}

} // namespace

std::vector<Bitset> maximal_friendly(const FiniteRelation& R) {
    Bitset vertices = 0;
    for (int x = 0; x < R.size; ++x) {
        if (R.likes_xy(x, x)) {
            vertices |= Bitset(1) << x;
        }
    }
    if (vertices == 0) {
        return {0}; // only the empty set is friendly, and it is maximal
    }
    std::vector<Bitset> adj(R.size, 0);
    for (int x = 0; x < R.size; ++x) {
        if (!((vertices >> x) & 1U)) {
            continue;
        }
        for (int y = 0; y < R.size; ++y) {
            if (y != x && ((vertices >> y) & 1U) && R.likes_xy(x, y) && R.likes_xy(y, x)) {
                adj[x] |= Bitset(1) << y;
            }
        }
    }
    std::vector<Bitset> out;
    bron_kerbosch(adj, 0, vertices, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bitset> enumerate_sc(const FiniteRelation& R, ScMode mode) {
    if (R.size <= kExhaustiveCap) {
        std::vector<Bitset> out;
        const Bitset end = Bitset(1) << R.size;
        for (Bitset A = 0; A < end; ++A) {
            if (!is_friendly(R, A)) {
                continue;
            }
            const bool packed =
                mode == ScMode::weak ? is_weakly_packed(R, A) : is_strongly_packed(R, A);
            if (packed) {
                out.push_back(A);
            }
        }
        return out;
    }
    if (mode == ScMode::weak && R.size <= kGreedyCap) {
        return maximal_friendly(R);
    }
    throw SizeCapError("enumerate_sc: ground set too large for the requested mode");
}

Bitset extend_to_weak_sc(const FiniteRelation& R, Bitset E) {
    if (!is_friendly(R, E)) {
        throw PreconditionError("extend_to_weak_sc: seed set is not friendly");
    }
    Bitset A = E;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < R.size; ++x) {
            if ((A >> x) & 1U) {
                continue;
            }
            if (R.likes_xy(x, x) && mutual_with_all(R, x, A)) {
                A |= Bitset(1) << x;
                grew = true;
                break; // restart from the lowest index
            }
        }
    }
    return A;
}

UniqueScResult unique_weak_sc_containing(const FiniteRelation& R, Bitset E) {
    UniqueScResult result;
    if (!is_friendly(R, E)) {
        result.kind = UniqueScResult::none_friendly;
        return result;
    }
    std::vector<Bitset> hits;
    for (Bitset A : enumerate_sc(R, ScMode::weak)) {
        if ((A & E) == E) {
            hits.push_back(A);
        }
    }
    if (hits.empty()) {
        throw InternalError("unique_weak_sc_containing: no extension of a friendly set");
    }
    if (hits.size() > 1) {
        result.kind = UniqueScResult::multiple;
        return result;
    }
    result.kind = UniqueScResult::unique;
    result.set = hits.front();
    // Cross-check: for self-liking x, mutual liking with E must match mutual
    // liking with the full set.
    result.condition_two_holds = true;
    for (int x = 0; x < R.size; ++x) {
        if (!R.likes_xy(x, x)) {
            continue;
        }
        if (mutual_with_all(R, x, E) != mutual_with_all(R, x, result.set)) {
            result.condition_two_holds = false;
        }
    }
    if (!result.condition_two_holds) {
        throw InternalError("unique_weak_sc_containing: uniqueness criterion mismatch");
    }
    return result;
}

} // namespace hornlab
