#pragma once

#include <vector>

#include "chowforge/chow_ring.hpp"
#include "chowforge/lattice.hpp"
#include "chowforge/matroid.hpp"

namespace chowforge {

// The augmented ring is ChowRing(m, ChowKind::augmented); the colon closed forms in
// chow_ring.hpp switch to rank threshold 2 for it. This header holds the checks that
// tie it to the free coextension.

/// In free_coextension(m), with e = n+1: F ∪ e is a flat iff F is a flat of m, and
/// F ⊆ E is a flat iff F is independent in m. Exhaustive over subsets of E.
CheckReport free_coextension_flats_check(const Matroid& m);

/// G_aug = {atoms} ∪ {F ∪ e : F ∈ L(m)} as element ids of the coextension's lattice.
std::vector<int> augmented_building_set(const Lattice& coext, int e);

/// Builds the coextension lattice, checks that G_aug is a building set, and compares
/// HF(D(L, G_aug)) with HF(aChow(m)).
CheckReport free_coextension_building_set_check(const Matroid& m);

}  // namespace chowforge
