#include "permstat/decomp.hpp"

#include <algorithm>
#include <numeric>

namespace permstat {

bool is_derangement(const Permutation& p) { return fix_set(p).members.empty(); }

bool is_desarrangement(const Word& distinct_letters) {
    const int n = static_cast<int>(distinct_letters.size());
    {
        Word sorted = distinct_letters;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("is_desarrangement: letters must be pairwise distinct");
    }
    if (n == 0) return false;
    // Length of the maximal initial strictly decreasing run; the sentinel
    // +infinity after the last letter makes a run ending at the word's end
    // a trough as well.
    int run = 1;
    while (run < n && distinct_letters[static_cast<size_t>(run) - 1] >
                          distinct_letters[static_cast<size_t>(run)])
        ++run;
    return run % 2 == 0;
}

bool is_desarrangement(const Permutation& p) { return is_desarrangement(p.word()); }

namespace {

long long triangle(int k) { return static_cast<long long>(k) * (k + 1) / 2; }

// Increasing bijection from {1..n} \ excluded onto itself, as a sorted list;
// entry k-1 is the image of k under the inverse of "red".
Word complement_sorted(int n, const std::vector<int>& excluded_sorted) {
    Word out;
    out.reserve(static_cast<size_t>(n) - excluded_sorted.size());
    size_t e = 0;
    for (int v = 1; v <= n; ++v) {
        if (e < excluded_sorted.size() && excluded_sorted[e] == v) {
            ++e;
            continue;
        }
        out.push_back(v);
    }
    return out;
}

} // namespace

FixedDecomposition fixed_decomposition(const Permutation& p) {
    FixedDecomposition d;
    d.fix_set = fix_set(p);
    Word rest;
    rest.reserve(static_cast<size_t>(p.order() - d.fix_set.count()));
    for (int i = 1; i <= p.order(); ++i)
        if (p(i) != i) rest.push_back(p(i));
    d.derangement_part = reduce(rest);
    return d;
}

Permutation fixed_recompose(const FixedDecomposition& d) {
    const int m = d.derangement_part.order();
    const int n = d.fix_set.count() + m;
    if (!d.fix_set.members.empty() &&
        (d.fix_set.members.front() < 1 || d.fix_set.members.back() > n))
        throw PreconditionError("fixed_recompose: fixed positions out of range");
    if (!is_derangement(d.derangement_part))
        throw PreconditionError("fixed_recompose: part has a fixed point");
    const Word unred = complement_sorted(n, d.fix_set.members);
    Word w(static_cast<size_t>(n));
    for (int i : d.fix_set.members) w[static_cast<size_t>(i) - 1] = i;
    int k = 0;
    for (int i = 1; i <= n; ++i) {
        if (d.fix_set.contains(i)) continue;
        ++k;
        w[static_cast<size_t>(i) - 1] =
            unred[static_cast<size_t>(d.derangement_part(k)) - 1];
    }
    return Permutation(std::move(w));
}

ZeroWord zder(const Permutation& p) {
    const PositionSet f = fix_set(p);
    const Word unfixed = complement_sorted(p.order(), f.members);
    Word w(static_cast<size_t>(p.order()), 0);
    for (int i = 1; i <= p.order(); ++i) {
        if (p(i) == i) continue;
        const auto it = std::lower_bound(unfixed.begin(), unfixed.end(), p(i));
        w[static_cast<size_t>(i) - 1] = static_cast<int>(it - unfixed.begin()) + 1;
    }
    return ZeroWord(std::move(w));
}

Permutation zder_inverse(const ZeroWord& w) {
    const Word v = pos_word(w);
    const int m = static_cast<int>(v.size());
    {
        Word sorted = v;
        std::sort(sorted.begin(), sorted.end());
        for (int k = 1; k <= m; ++k)
            if (sorted[static_cast<size_t>(k) - 1] != k)
                throw PreconditionError(
                    "zder_inverse: positive letters must form a permutation of 1.." +
                    std::to_string(m));
    }
    Permutation pos(v);
    if (!is_derangement(pos))
        throw PreconditionError("zder_inverse: positive part has a fixed point");
    FixedDecomposition d;
    d.fix_set = zero_set(w);
    d.derangement_part = std::move(pos);
    return fixed_recompose(d);
}

PositionSet dez_set(const Permutation& p) { return des_set(zder(p)); }
int dez(const Permutation& p) { return dez_set(p).count(); }
int maz(const Permutation& p) { return maj(zder(p)); }

int maf(const Permutation& p) {
    const FixedDecomposition d = fixed_decomposition(p);
    return static_cast<int>(d.fix_set.sum() - triangle(d.fix_set.count())) +
           maj(d.derangement_part);
}

std::pair<Word, Word> pixed_factorization(const Permutation& p) {
    const Word& w = p.word();
    const int n = p.order();
    // run[i] = length of the strictly decreasing run starting at position
    // i+1; the suffix from i+1 is a desarrangement iff run[i] is even.
    std::vector<int> run(static_cast<size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i)
        if (w[static_cast<size_t>(i)] > w[static_cast<size_t>(i) + 1])
            run[static_cast<size_t>(i)] = run[static_cast<size_t>(i) + 1] + 1;
    int split = n;  // start index of sigma^d, 0-based; n means empty
    for (int i = 0; i < n; ++i) {
        if (run[static_cast<size_t>(i)] % 2 == 0) {
            split = i;
            break;
        }
    }
    return {Word(w.begin(), w.begin() + split), Word(w.begin() + split, w.end())};
}

PositionSet pix_set(const Permutation& p) {
    PositionSet s;
    s.universe = p.order();
    s.members = pixed_factorization(p).first;
    return s;
}

int pix(const Permutation& p) { return pix_set(p).count(); }

PixedDecomposition pixed_decomposition(const Permutation& p) {
    const auto [prefix, suffix] = pixed_factorization(p);
    PixedDecomposition d;
    d.pix_set.members = prefix;
    d.pix_set.universe = p.order();
    d.desarrangement_part = reduce(suffix);
    return d;
}

Permutation pixed_recompose(const PixedDecomposition& d) {
    const int m = d.desarrangement_part.order();
    const int n = d.pix_set.count() + m;
    if (!d.pix_set.members.empty() &&
        (d.pix_set.members.front() < 1 || d.pix_set.members.back() > n))
        throw PreconditionError("pixed_recompose: pix letters out of range");
    if (m > 0 && !is_desarrangement(d.desarrangement_part))
        throw PreconditionError("pixed_recompose: part is not a desarrangement");
    const Word unred = complement_sorted(n, d.pix_set.members);
    Word w = d.pix_set.members;  // increasing prefix
    for (int k = 1; k <= m; ++k)
        w.push_back(unred[static_cast<size_t>(d.desarrangement_part(k)) - 1]);
    return Permutation(std::move(w));
}

int mag(const Permutation& p) {
    const PixedDecomposition d = pixed_decomposition(p);
    return static_cast<int>(d.pix_set.sum() - triangle(d.pix_set.count())) +
           imaj(d.desarrangement_part);
}

ZeroWord zdesar(const Permutation& p) {
    const PixedDecomposition d = pixed_decomposition(p);
    const Word y = inverse(d.desarrangement_part).word();
    Word w(static_cast<size_t>(p.order()), 0);
    size_t k = 0;
    for (int i = 1; i <= p.order(); ++i)
        if (!d.pix_set.contains(i)) w[static_cast<size_t>(i) - 1] = y[k++];
    return ZeroWord(std::move(w));
}

Permutation zdesar_inverse(const ZeroWord& w) {
    const Word v = pos_word(w);
    const int m = static_cast<int>(v.size());
    {
        Word sorted = v;
        std::sort(sorted.begin(), sorted.end());
        for (int k = 1; k <= m; ++k)
            if (sorted[static_cast<size_t>(k) - 1] != k)
                throw PreconditionError(
                    "zdesar_inverse: positive letters must form a permutation of 1.." +
                    std::to_string(m));
    }
    Permutation desar = inverse(Permutation(v));
    if (m > 0 && !is_desarrangement(desar))
        throw PreconditionError(
            "zdesar_inverse: inverse of positive part is not a desarrangement");
    PixedDecomposition d;
    d.pix_set = zero_set(w);
    d.desarrangement_part = std::move(desar);
    return pixed_recompose(d);
}

PositionSet zero_set(const ZeroWord& w) {
    PositionSet s;
    s.universe = w.length();
    for (int i = 1; i <= w.length(); ++i)
        if (w.letter(i) == 0) s.members.push_back(i);
    return s;
}

Word pos_word(const ZeroWord& w) {
    Word v;
    for (int x : w.letters())
        if (x > 0) v.push_back(x);
    return v;
}

int zero(const ZeroWord& w) { return zero_set(w).count(); }

int mafz(const ZeroWord& w) {
    const PositionSet z = zero_set(w);
    return static_cast<int>(z.sum() - triangle(z.count())) +
           maj(std::span<const int>(pos_word(w)));
}

std::vector<ZeroWord> shuffle_class(const ShuffleClassId& id) {
    const int n = id.total_length;
    const int m = static_cast<int>(id.positive_word.size());
    if (m > n) throw PreconditionError("shuffle_class: positive word longer than class");
    for (int x : id.positive_word)
        if (x <= 0) throw PreconditionError("shuffle_class: letters must be positive");
    {
        Word sorted = id.positive_word;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("shuffle_class: letters must be pairwise distinct");
    }
    const int zeros = n - m;
    std::vector<ZeroWord> out;
    // Zero sets enumerated as combinations in lexicographic order.
    std::vector<int> c(static_cast<size_t>(zeros));
    std::iota(c.begin(), c.end(), 1);
    while (true) {
        Word w(static_cast<size_t>(n));
        size_t ci = 0, vi = 0;
        for (int i = 1; i <= n; ++i) {
            if (ci < c.size() && c[ci] == i) {
                w[static_cast<size_t>(i) - 1] = 0;
                ++ci;
            } else {
                w[static_cast<size_t>(i) - 1] = id.positive_word[vi++];
            }
        }
        out.emplace_back(std::move(w));
        // advance the combination
        int j = zeros - 1;
        while (j >= 0 && c[static_cast<size_t>(j)] == n - (zeros - 1 - j)) --j;
        if (j < 0) break;
        ++c[static_cast<size_t>(j)];
        for (int k = j + 1; k < zeros; ++k)
            c[static_cast<size_t>(k)] = c[static_cast<size_t>(k) - 1] + 1;
    }
    return out;
}

void for_each_derangement(int n, const std::function<void(const Permutation&)>& visit) {
    for_each_permutation(n, [&](const Permutation& p) {
        if (is_derangement(p)) visit(p);
    });
}

void for_each_desarrangement(int n, const std::function<void(const Permutation&)>& visit) {
    // K_n = {sigma : PIX sigma = empty}; for n >= 1 this is exactly the
    // desarrangement predicate on the word, and K_0 holds the empty
    // permutation alone.
    for_each_permutation(n, [&](const Permutation& p) {
        if (pix(p) == 0) visit(p);
    });
}

std::vector<Permutation> derangements(int n) {
    std::vector<Permutation> out;
    for_each_derangement(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

std::vector<Permutation> desarrangements(int n) {
    std::vector<Permutation> out;
    for_each_desarrangement(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

const StatSet& StatSet::standard() {
    static const StatSet s{[](std::span<const int> w) { return permstat::maj(w); }};
    return s;
}

int StatSet::maf(const Permutation& p) const {
    const FixedDecomposition d = fixed_decomposition(p);
    return static_cast<int>(d.fix_set.sum() - triangle(d.fix_set.count())) +
           maj(d.derangement_part);
}

int StatSet::mag(const Permutation& p) const {
    const PixedDecomposition d = pixed_decomposition(p);
    return static_cast<int>(d.pix_set.sum() - triangle(d.pix_set.count())) +
           imaj(d.desarrangement_part);
}

int StatSet::mafz(const ZeroWord& w) const {
    const PositionSet z = zero_set(w);
    return static_cast<int>(z.sum() - triangle(z.count())) +
           maj_fn(std::span<const int>(pos_word(w)));
}

} // namespace permstat
