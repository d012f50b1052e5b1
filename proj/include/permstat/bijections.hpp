#pragma once

#include <iosfwd>
#include <map>
#include <set>

#include "permstat/decomp.hpp"

// Constructive bijections (the second fundamental transformation and its
// conjugates), a deterministic fiber-matching oracle standing in for
// externally constructed bijections, and the lifting chains that carry
// statistics across the fixed/pixed decompositions.

namespace permstat {

/// Raised when a statistic fiber has different cardinalities on the two
/// sides of a requested matching: the equidistribution claim backing the
/// oracle FAILS, and this exception is the refutation report.
class FiberMismatch : public std::runtime_error {
public:
    FiberMismatch(const std::string& domain_tag, std::string key, size_t domain_count,
                  size_t codomain_count)
        : std::runtime_error("fiber mismatch in " + domain_tag + " at key [" + key +
                             "]: " + std::to_string(domain_count) + " vs " +
                             std::to_string(codomain_count)),
          key(std::move(key)),
          domain_count(domain_count),
          codomain_count(codomain_count) {}

    std::string key;
    size_t domain_count;
    size_t codomain_count;
};

/// An explicit finite bijection; forward and backward are mutually
/// inverse total maps on the tagged domain/codomain.
template <typename T>
struct BijectionTable {
    std::string domain_tag;
    std::map<T, T> forward;
    std::map<T, T> backward;

    size_t size() const noexcept { return forward.size(); }

    const T& apply(const T& x) const {
        const auto it = forward.find(x);
        if (it == forward.end())
            throw PreconditionError("bijection table " + domain_tag +
                                    " has no entry for the given element");
        return it->second;
    }
    const T& apply_inverse(const T& x) const {
        const auto it = backward.find(x);
        if (it == backward.end())
            throw PreconditionError("bijection table " + domain_tag +
                                    " has no inverse entry for the given element");
        return it->second;
    }
};

/// What a matched oracle must transport: elements with source_stat = k on
/// the domain side pair up with elements with target_stat = k on the
/// codomain side, optionally only within equal grouping keys.
template <typename T>
struct StatTransportSpec {
    std::function<std::string(const T&)> source_stat;
    std::function<std::string(const T&)> target_stat;
    std::function<std::string(const T&)> grouping_key;  // may be empty
};

/// Pairs equal-cardinality fibers in lexicographic rank order, yielding a
/// deterministic bijection that transports source_stat to target_stat
/// exactly.  Throws FiberMismatch when the fibers fail to line up.
template <typename T>
BijectionTable<T> matched_oracle(const std::vector<T>& domain, const std::vector<T>& codomain,
                                 const StatTransportSpec<T>& spec, std::string domain_tag) {
    std::map<std::string, std::vector<T>> domain_fibers;
    std::map<std::string, std::vector<T>> codomain_fibers;
    for (const T& x : domain) {
        std::string key = spec.grouping_key ? spec.grouping_key(x) + "|" : std::string();
        key += spec.source_stat(x);
        domain_fibers[key].push_back(x);
    }
    for (const T& x : codomain) {
        std::string key = spec.grouping_key ? spec.grouping_key(x) + "|" : std::string();
        key += spec.target_stat(x);
        codomain_fibers[key].push_back(x);
    }
    BijectionTable<T> table;
    table.domain_tag = std::move(domain_tag);
    auto di = domain_fibers.begin();
    auto ci = codomain_fibers.begin();
    while (di != domain_fibers.end() || ci != codomain_fibers.end()) {
        if (ci == codomain_fibers.end() || (di != domain_fibers.end() && di->first < ci->first))
            throw FiberMismatch(table.domain_tag, di->first, di->second.size(), 0);
        if (di == domain_fibers.end() || ci->first < di->first)
            throw FiberMismatch(table.domain_tag, ci->first, 0, ci->second.size());
        if (di->second.size() != ci->second.size())
            throw FiberMismatch(table.domain_tag, di->first, di->second.size(),
                                ci->second.size());
        std::sort(di->second.begin(), di->second.end());
        std::sort(ci->second.begin(), ci->second.end());
        for (size_t r = 0; r < di->second.size(); ++r) {
            table.forward.emplace(di->second[r], ci->second[r]);
            table.backward.emplace(ci->second[r], di->second[r]);
        }
        ++di;
        ++ci;
    }
    return table;
}

// -- the second fundamental transformation -----------------------------------

/// Sends maj to inv while preserving the idescent set; bijective on S_n.
Permutation f2(const Permutation& p);

/// inverse . f2 . inverse: sends imaj to inv while preserving the descent set.
Permutation f2_prime(const Permutation& p);

/// Applies f2_prime to the desarrangement part of the pixed decomposition;
/// carries (PIX, mag) to (PIX, inv).
Permutation f2_loc(const Permutation& p);

// -- oracle providers ---------------------------------------------------------

/// Per-order tables D_m -> K_m transporting DES to IDES.  Orders without
/// a registered plug-in table are filled lazily by the matched oracle and
/// cached.  register_table supplies an externally constructed bijection;
/// it is validated for totality, bijectivity, and the transport property
/// before use.
class DwOracle {
public:
    const BijectionTable<Permutation>& table(int m);
    void register_table(int m, const std::vector<std::pair<Permutation, Permutation>>& pairs);
    bool has_plugin(int m) const { return plugins_.count(m) > 0; }

private:
    std::map<int, BijectionTable<Permutation>> tables_;
    std::set<int> plugins_;
};

/// Per-class tables on Sh(0^{n-m} v) transporting maj to mafz, lazily
/// matched and cached; plug-in tables are validated against the same
/// contract.  The statistic bundle is injectable so corrupted statistics
/// surface as fiber mismatches.
class WordOracle {
public:
    explicit WordOracle(const StatSet& stats = StatSet::standard()) : stats_(stats) {}

    const BijectionTable<ZeroWord>& table(const ShuffleClassId& id);
    void register_table(const ShuffleClassId& id,
                        const std::vector<std::pair<ZeroWord, ZeroWord>>& pairs);
    bool has_plugin(const ShuffleClassId& id) const { return plugins_.count(id) > 0; }

private:
    StatSet stats_;
    std::map<ShuffleClassId, BijectionTable<ZeroWord>> tables_;
    std::set<ShuffleClassId> plugins_;
};

/// Matched oracle on S_n transporting (fix, DEZ, Der) to (fix, DES, Der).
BijectionTable<Permutation> phi_oracle(int n, const StatSet& stats = StatSet::standard());

/// Matched oracle on S_n transporting maf to maj within each (fix, Der) class.
BijectionTable<Permutation> chz_oracle(int n, const StatSet& stats = StatSet::standard());

// -- lifted maps --------------------------------------------------------------

/// (PIX sigma, Desar sigma) := (FIX tau, base(Der tau)); carries FIX to
/// PIX, maf to mag, DEZ to IDES.
Permutation dw_loc(const Permutation& tau, DwOracle& base);

/// Word form: keeps Zero w, replaces Pos w by inverse(base(Pos w)).
ZeroWord dw_word(const ZeroWord& w, DwOracle& base);

/// zder_inverse . word_base . zder: carries (fix, maz, Der) to (fix, maf, Der).
Permutation f3(const Permutation& p, WordOracle& word_base);

/// zdesar_inverse . word_base . zdesar: carries (pix, imaj, Desar) to
/// (pix, mag, Desar).
Permutation f3_prime(const Permutation& p, WordOracle& word_base);

// -- table text io ------------------------------------------------------------

// Two-column text: source and image words separated by a tab, one pair
// per line; '#' starts a comment.  Import validates before use.

void export_table(std::ostream& os, const BijectionTable<Permutation>& t);
void export_table(std::ostream& os, const BijectionTable<ZeroWord>& t);
std::vector<std::pair<Permutation, Permutation>> read_permutation_pairs(std::istream& is);
std::vector<std::pair<ZeroWord, ZeroWord>> read_zero_word_pairs(std::istream& is);

/// Groups imported pairs by order / shuffle class and registers each
/// complete table with the oracle (validation included).
void register_dw_pairs(DwOracle& oracle,
                       const std::vector<std::pair<Permutation, Permutation>>& pairs);
void register_f3_pairs(WordOracle& oracle,
                       const std::vector<std::pair<ZeroWord, ZeroWord>>& pairs);

/// Validates an imported table as a bijection of S_n with the given
/// transport property; returns the table on success, throws otherwise.
BijectionTable<Permutation> validate_sn_table(
    int n, const std::vector<std::pair<Permutation, Permutation>>& pairs,
    const StatTransportSpec<Permutation>& spec, const std::string& tag);

/// Key builders shared by the oracles and the verifier.
std::string phi_source_key(const Permutation& p);
std::string phi_target_key(const Permutation& p);
std::string chz_group_key(const Permutation& p);

std::vector<Permutation> symmetric_group(int n);

} // namespace permstat
