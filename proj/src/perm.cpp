#include "permstat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permstat {

Permutation::Permutation(Word word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        const int v = word_[static_cast<size_t>(i)];
        if (v < 1 || v > n)
            throw ParseError("letter " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(n),
                             i + 1);
        if (seen[static_cast<size_t>(v)])
            throw ParseError("letter " + std::to_string(v) + " repeated", i + 1);
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    Word w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

ZeroWord::ZeroWord(Word letters) : letters_(std::move(letters)) {
    std::vector<int> positive;
    for (size_t i = 0; i < letters_.size(); ++i) {
        const int v = letters_[i];
        if (v < 0)
            throw ParseError("negative letter " + std::to_string(v),
                             static_cast<int>(i) + 1);
        if (v > 0) positive.push_back(v);
    }
    std::sort(positive.begin(), positive.end());
    if (std::adjacent_find(positive.begin(), positive.end()) != positive.end())
        throw ParseError("nonzero letters must be pairwise distinct", 0);
}

long long PositionSet::sum() const noexcept {
    long long s = 0;
    for (int i : members) s += i;
    return s;
}

bool PositionSet::contains(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

Permutation inverse(const Permutation& p) {
    const int n = p.order();
    Word w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(p(i)) - 1] = i;
    return Permutation(std::move(w));
}

PositionSet des_set(std::span<const int> letters) {
    const int n = static_cast<int>(letters.size());
    PositionSet s;
    s.universe = n > 0 ? n - 1 : 0;
    for (int i = 1; i < n; ++i)
        if (letters[static_cast<size_t>(i) - 1] > letters[static_cast<size_t>(i)])
            s.members.push_back(i);
    return s;
}

PositionSet des_set(const ZeroWord& w) { return des_set(std::span<const int>(w.letters())); }
PositionSet des_set(const Permutation& p) { return des_set(std::span<const int>(p.word())); }

int maj(std::span<const int> letters) {
    return static_cast<int>(des_set(letters).sum());
}
int maj(const ZeroWord& w) { return maj(std::span<const int>(w.letters())); }
int maj(const Permutation& p) { return maj(std::span<const int>(p.word())); }

int des(const ZeroWord& w) { return des_set(w).count(); }
int des(const Permutation& p) { return des_set(p).count(); }

PositionSet ides_set(const Permutation& p) { return des_set(inverse(p)); }

int imaj(const Permutation& p) { return static_cast<int>(ides_set(p).sum()); }

int inv(const Permutation& p) {
    const Word& w = p.word();
    int count = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

PositionSet fix_set(const Permutation& p) {
    PositionSet s;
    s.universe = p.order();
    for (int i = 1; i <= p.order(); ++i)
        if (p(i) == i) s.members.push_back(i);
    return s;
}

int fix(const Permutation& p) { return fix_set(p).count(); }

Permutation reduce(const Word& distinct_letters) {
    Word sorted = distinct_letters;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("reduce: letters must be pairwise distinct");
    Word out;
    out.reserve(distinct_letters.size());
    for (int v : distinct_letters) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(out));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
    Word w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        visit(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

std::string to_string(const Permutation& p) {
    std::string out;
    for (size_t i = 0; i < p.word().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p.word()[i]);
    }
    return out;
}

std::string to_string(const ZeroWord& w) {
    std::string out;
    for (size_t i = 0; i < w.letters().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.letters()[i]);
    }
    return out;
}

std::string to_string(const PositionSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.members.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.members[i]);
    }
    out += '}';
    return out;
}

namespace {

// Splits on whitespace and/or commas; token positions are 1-based.
Word parse_word(const std::string& text) {
    Word out;
    size_t i = 0;
    int position = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
        if (i >= text.size()) break;
        ++position;
        const size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',')
            ++i;
        const std::string token = text.substr(start, i - start);
        try {
            size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("invalid integer token '" + token + "'", position);
        }
    }
    return out;
}

} // namespace

Permutation parse_permutation(const std::string& text) {
    return Permutation(parse_word(text));
}

ZeroWord parse_zero_word(const std::string& text) {
    return ZeroWord(parse_word(text));
}

} // namespace permstat
