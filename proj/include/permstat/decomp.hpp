#pragma once

#include <functional>
#include <utility>

#include "permstat/perm.hpp"

// Fixed and pixed decompositions of permutations, the statistics they
// induce (dez, maz, maf, pix, mag, mafz), zero-word encodings, the
// derangement / desarrangement families D_n and K_n, and shuffle classes
// Sh(0^{n-m} v).

namespace permstat {

/// sigma is determined by (FIX sigma, Der sigma): the fixed-point set and
/// the reduced subword on the non-fixed positions, which is a derangement.
struct FixedDecomposition {
    PositionSet fix_set;
    Permutation derangement_part;
};

/// sigma is determined by (PIX sigma, Desar sigma): the letter set of the
/// increasing prefix and the reduced longest desarrangement right factor.
struct PixedDecomposition {
    PositionSet pix_set;
    Permutation desarrangement_part;
};

/// Identifies Sh(0^{n-m} v): all shuffles of n-m zeros with the fixed
/// positive word v (letters pairwise distinct).
struct ShuffleClassId {
    int total_length = 0;
    Word positive_word;

    auto operator<=>(const ShuffleClassId&) const = default;
};

// -- predicates -------------------------------------------------------------

bool is_derangement(const Permutation& p);

/// A repetition-free word is a desarrangement when its leftmost trough
/// (the end of the maximal initial strictly decreasing run, with an
/// implicit +infinity sentinel after the last letter) sits at an even
/// position.  The empty word is not a desarrangement.
bool is_desarrangement(const Word& distinct_letters);
bool is_desarrangement(const Permutation& p);

// -- fixed decomposition ----------------------------------------------------

FixedDecomposition fixed_decomposition(const Permutation& p);
Permutation fixed_recompose(const FixedDecomposition& d);

/// Zeroes the fixed positions and reduces the remaining letters in place.
ZeroWord zder(const Permutation& p);
/// Two-sided inverse of zder; requires the positive part of w to be a
/// derangement of 1..m.
Permutation zder_inverse(const ZeroWord& w);

PositionSet dez_set(const Permutation& p);
int dez(const Permutation& p);
int maz(const Permutation& p);

/// maf sigma = sum(FIX sigma) - (1 + 2 + ... + fix sigma) + maj(Der sigma).
int maf(const Permutation& p);

// -- pixed decomposition ----------------------------------------------------

/// Splits sigma = sigma^p sigma^d where sigma^d is the longest right
/// factor that is a desarrangement (empty iff sigma is increasing) and
/// sigma^p is the increasing remainder.  Returned as raw subwords.
std::pair<Word, Word> pixed_factorization(const Permutation& p);

PositionSet pix_set(const Permutation& p);
int pix(const Permutation& p);

PixedDecomposition pixed_decomposition(const Permutation& p);
Permutation pixed_recompose(const PixedDecomposition& d);

/// mag sigma = sum(PIX sigma) - (1 + 2 + ... + pix sigma) + imaj(Desar sigma).
int mag(const Permutation& p);

/// The unique shuffle of 0^{n-m} with (Desar sigma)^{-1} whose zeros sit
/// exactly at the positions in PIX sigma.
ZeroWord zdesar(const Permutation& p);
/// Two-sided inverse of zdesar; requires inverse(Pos w) to be a
/// desarrangement of order m.
Permutation zdesar_inverse(const ZeroWord& w);

// -- word statistics --------------------------------------------------------

/// Zero w: positions of the zero letters.
PositionSet zero_set(const ZeroWord& w);
/// Pos w: the subword of positive letters.
Word pos_word(const ZeroWord& w);
int zero(const ZeroWord& w);

/// mafz w = sum(Zero w) - (1 + 2 + ... + zero w) + maj(Pos w).
int mafz(const ZeroWord& w);

// -- families and classes ---------------------------------------------------

/// All members of Sh(0^{n-m} v) with Pos = v, ordered lexicographically
/// by zero-position set.  This order is part of the oracle determinism
/// contract.
std::vector<ZeroWord> shuffle_class(const ShuffleClassId& id);

/// D_n / K_n in lexicographic order.  D_0 = K_0 = {empty}, D_1 = K_1 = {}.
void for_each_derangement(int n, const std::function<void(const Permutation&)>& visit);
void for_each_desarrangement(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> derangements(int n);
std::vector<Permutation> desarrangements(int n);

// -- statistic bundle -------------------------------------------------------

/// The major-index family with a single replaceable seam: every derived
/// statistic (imaj, maz, maf, mag, mafz) routes through `maj_fn`, so a
/// corrupted maj propagates consistently.  Used by the verification
/// suites for mutation-sensitivity checks; standard() is the real thing.
struct StatSet {
    std::function<int(std::span<const int>)> maj_fn;

    static const StatSet& standard();

    int maj(const ZeroWord& w) const { return maj_fn(std::span<const int>(w.letters())); }
    int maj(const Permutation& p) const { return maj_fn(std::span<const int>(p.word())); }
    int imaj(const Permutation& p) const { return maj(inverse(p)); }
    int maz(const Permutation& p) const { return maj(zder(p)); }
    int maf(const Permutation& p) const;
    int mag(const Permutation& p) const;
    int mafz(const ZeroWord& w) const;
};

} // namespace permstat
