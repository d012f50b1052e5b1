#pragma once

#include <compare>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Core carriers for permutation statistics: permutations in one-line
// notation, words over non-negative integers with distinct positive
// letters, and sorted position sets.  All indexing is 1-based.

namespace permstat {

using Word = std::vector<int>;

/// Thrown by the text parsers; `position` is the 1-based index of the
/// offending token (or letter) in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int position)
        : std::runtime_error(std::move(msg)), position(position) {}
    int position;
};

/// Thrown when a documented precondition of an operation fails.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A permutation sigma of {1,...,n} stored as the word
/// sigma(1) sigma(2) ... sigma(n).  The empty permutation (n = 0) is the
/// identity of S_0 and is legal everywhere.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(Word word);

    static Permutation identity(int n);

    int order() const noexcept { return static_cast<int>(word_.size()); }
    /// Value at 1-based position i.
    int operator()(int i) const { return word_.at(static_cast<size_t>(i) - 1); }
    const Word& word() const noexcept { return word_; }

    auto operator<=>(const Permutation&) const = default;

private:
    Word word_;
};

/// A word x_1 x_2 ... x_n of non-negative integers whose nonzero letters
/// are pairwise distinct; zero letters may repeat freely.
class ZeroWord {
public:
    ZeroWord() = default;
    explicit ZeroWord(Word letters);
    explicit ZeroWord(const Permutation& p) : letters_(p.word()) {}

    int length() const noexcept { return static_cast<int>(letters_.size()); }
    /// Letter at 1-based position i.
    int letter(int i) const { return letters_.at(static_cast<size_t>(i) - 1); }
    const Word& letters() const noexcept { return letters_; }

    auto operator<=>(const ZeroWord&) const = default;

private:
    Word letters_;
};

/// A strictly increasing set of positions inside {1,...,universe}.
/// Equality ignores the universe; it is recorded for rendering only.
struct PositionSet {
    std::vector<int> members;
    int universe = 0;

    int count() const noexcept { return static_cast<int>(members.size()); }
    long long sum() const noexcept;
    bool contains(int i) const;

    bool operator==(const PositionSet& o) const { return members == o.members; }
    bool operator<(const PositionSet& o) const { return members < o.members; }
};

// -- primitive statistics ---------------------------------------------------

/// The inverse permutation (an involution of S_n).
Permutation inverse(const Permutation& p);

/// DES w = {i : 1 <= i <= n-1, x_i > x_{i+1}}, defined for arbitrary words.
PositionSet des_set(std::span<const int> letters);
PositionSet des_set(const ZeroWord& w);
PositionSet des_set(const Permutation& p);

/// maj = sum of descent positions; des = number of descents.
int maj(std::span<const int> letters);
int maj(const ZeroWord& w);
int maj(const Permutation& p);
int des(const ZeroWord& w);
int des(const Permutation& p);

/// IDES sigma = DES of the inverse; equivalently the set of i such that
/// i+1 lies to the left of i in the one-line word.
PositionSet ides_set(const Permutation& p);
int imaj(const Permutation& p);

/// Number of inversions #{(i,j) : i < j, sigma(i) > sigma(j)}.
int inv(const Permutation& p);

/// FIX sigma = {i : sigma(i) = i} and its cardinality.
PositionSet fix_set(const Permutation& p);
int fix(const Permutation& p);

/// Replaces each letter of a repetition-free word by its rank in the
/// sorted letter set ("red").  Rejects repeated letters.
Permutation reduce(const Word& distinct_letters);

// -- enumeration ------------------------------------------------------------

/// Visits all of S_n in lexicographic order of the one-line word.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

// -- text -------------------------------------------------------------------

/// Space-separated rendering; parsers accept space- or comma-separated
/// decimals and report the position of the first violation.
std::string to_string(const Permutation& p);
std::string to_string(const ZeroWord& w);
/// Renders as {1,4,8}; the empty set renders as {}.
std::string to_string(const PositionSet& s);

Permutation parse_permutation(const std::string& text);
ZeroWord parse_zero_word(const std::string& text);

} // namespace permstat
