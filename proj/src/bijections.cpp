#include "permstat/bijections.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace permstat {

Permutation f2(const Permutation& p) {
    const Word& w = p.word();
    if (p.order() <= 1) return p;
    Word v;
    v.reserve(w.size());
    v.push_back(w[0]);
    for (size_t k = 1; k < w.size(); ++k) {
        const int a = w[k];
        // Factor v into blocks, each ending at a letter <= a (when the last
        // letter of v is <= a) or > a (otherwise), with every earlier letter
        // of the block on the other side of a; rotate each block one step
        // right, then append a.
        const bool low = v.back() <= a;
        Word next;
        next.reserve(v.size() + 1);
        size_t start = 0;
        for (size_t i = 0; i < v.size(); ++i) {
            const bool terminator = low ? v[i] <= a : v[i] > a;
            if (!terminator) continue;
            next.push_back(v[i]);
            for (size_t j = start; j < i; ++j) next.push_back(v[j]);
            start = i + 1;
        }
        next.push_back(a);
        v = std::move(next);
    }
    return Permutation(std::move(v));
}

Permutation f2_prime(const Permutation& p) { return inverse(f2(inverse(p))); }

Permutation f2_loc(const Permutation& p) {
    PixedDecomposition d = pixed_decomposition(p);
    d.desarrangement_part = f2_prime(d.desarrangement_part);
    return pixed_recompose(d);
}

namespace {

std::string des_key(const Permutation& p) { return to_string(des_set(p)); }
std::string ides_key(const Permutation& p) { return to_string(ides_set(p)); }

size_t small_factorial(int n) {
    size_t out = 1;
    for (int i = 2; i <= n; ++i) out *= static_cast<size_t>(i);
    return out;
}

} // namespace

const BijectionTable<Permutation>& DwOracle::table(int m) {
    const auto it = tables_.find(m);
    if (it != tables_.end()) return it->second;
    StatTransportSpec<Permutation> spec;
    spec.source_stat = des_key;
    spec.target_stat = ides_key;
    auto built = matched_oracle(derangements(m), desarrangements(m), spec,
                                "DW[" + std::to_string(m) + "]");
    return tables_.emplace(m, std::move(built)).first->second;
}

void DwOracle::register_table(int m,
                              const std::vector<std::pair<Permutation, Permutation>>& pairs) {
    BijectionTable<Permutation> t;
    t.domain_tag = "DW[" + std::to_string(m) + "]";
    for (const auto& [src, img] : pairs) {
        if (src.order() != m || img.order() != m)
            throw PreconditionError(t.domain_tag + ": pair of wrong order");
        if (!is_derangement(src))
            throw PreconditionError(t.domain_tag + ": source " + to_string(src) +
                                    " is not a derangement");
        if (!(img.order() == 0 || is_desarrangement(img)))
            throw PreconditionError(t.domain_tag + ": image " + to_string(img) +
                                    " is not a desarrangement");
        if (des_set(src) != ides_set(img))
            throw PreconditionError(t.domain_tag + ": transport violated at " +
                                    to_string(src));
        if (!t.forward.emplace(src, img).second)
            throw PreconditionError(t.domain_tag + ": duplicate source " + to_string(src));
        if (!t.backward.emplace(img, src).second)
            throw PreconditionError(t.domain_tag + ": duplicate image " + to_string(img));
    }
    if (t.forward.size() != derangements(m).size())
        throw PreconditionError(t.domain_tag + ": table does not cover all of D_" +
                                std::to_string(m));
    plugins_.insert(m);
    tables_[m] = std::move(t);
}

const BijectionTable<ZeroWord>& WordOracle::table(const ShuffleClassId& id) {
    const auto it = tables_.find(id);
    if (it != tables_.end()) return it->second;
    const std::vector<ZeroWord> members = shuffle_class(id);
    StatTransportSpec<ZeroWord> spec;
    spec.source_stat = [this](const ZeroWord& w) { return std::to_string(stats_.maj(w)); };
    spec.target_stat = [this](const ZeroWord& w) { return std::to_string(stats_.mafz(w)); };
    std::ostringstream tag;
    tag << "F3w[n=" << id.total_length << " v=";
    for (size_t i = 0; i < id.positive_word.size(); ++i)
        tag << (i ? " " : "") << id.positive_word[i];
    tag << "]";
    auto built = matched_oracle(members, members, spec, tag.str());
    return tables_.emplace(id, std::move(built)).first->second;
}

void WordOracle::register_table(const ShuffleClassId& id,
                                const std::vector<std::pair<ZeroWord, ZeroWord>>& pairs) {
    const std::vector<ZeroWord> members = shuffle_class(id);
    const std::set<ZeroWord> universe(members.begin(), members.end());
    BijectionTable<ZeroWord> t;
    t.domain_tag = "F3w[n=" + std::to_string(id.total_length) + "]";
    for (const auto& [src, img] : pairs) {
        if (!universe.count(src) || !universe.count(img))
            throw PreconditionError(t.domain_tag + ": pair outside the shuffle class");
        if (stats_.maj(src) != stats_.mafz(img))
            throw PreconditionError(t.domain_tag + ": transport violated at " +
                                    to_string(src));
        if (!t.forward.emplace(src, img).second || !t.backward.emplace(img, src).second)
            throw PreconditionError(t.domain_tag + ": duplicate entry at " + to_string(src));
    }
    if (t.forward.size() != universe.size())
        throw PreconditionError(t.domain_tag + ": table does not cover the class");
    plugins_.insert(id);
    tables_[id] = std::move(t);
}

BijectionTable<Permutation> phi_oracle(int n, const StatSet& stats) {
    StatTransportSpec<Permutation> spec;
    spec.source_stat = phi_source_key;
    spec.target_stat = phi_target_key;
    (void)stats;  // DEZ/DES are set-valued; no maj seam involved
    const std::vector<Permutation> sn = symmetric_group(n);
    return matched_oracle(sn, sn, spec, "Phi[" + std::to_string(n) + "]");
}

BijectionTable<Permutation> chz_oracle(int n, const StatSet& stats) {
    StatTransportSpec<Permutation> spec;
    spec.grouping_key = chz_group_key;
    spec.source_stat = [&stats](const Permutation& p) { return std::to_string(stats.maf(p)); };
    spec.target_stat = [&stats](const Permutation& p) { return std::to_string(stats.maj(p)); };
    const std::vector<Permutation> sn = symmetric_group(n);
    return matched_oracle(sn, sn, spec, "CHZ[" + std::to_string(n) + "]");
}

Permutation dw_loc(const Permutation& tau, DwOracle& base) {
    const FixedDecomposition fd = fixed_decomposition(tau);
    PixedDecomposition pd;
    pd.pix_set = fd.fix_set;
    pd.desarrangement_part = base.table(fd.derangement_part.order()).apply(fd.derangement_part);
    return pixed_recompose(pd);
}

ZeroWord dw_word(const ZeroWord& w, DwOracle& base) {
    const Permutation pos{pos_word(w)};
    if (!is_derangement(pos))
        throw PreconditionError("dw_word: positive part must be a derangement");
    const Word image = inverse(base.table(pos.order()).apply(pos)).word();
    Word out(w.letters());
    size_t k = 0;
    for (auto& x : out)
        if (x > 0) x = image[k++];
    return ZeroWord(std::move(out));
}

Permutation f3(const Permutation& p, WordOracle& word_base) {
    const ZeroWord w = zder(p);
    const ShuffleClassId id{p.order(), pos_word(w)};
    return zder_inverse(word_base.table(id).apply(w));
}

Permutation f3_prime(const Permutation& p, WordOracle& word_base) {
    const ZeroWord w = zdesar(p);
    const ShuffleClassId id{p.order(), pos_word(w)};
    return zdesar_inverse(word_base.table(id).apply(w));
}

namespace {

template <typename T>
void export_table_impl(std::ostream& os, const BijectionTable<T>& t) {
    os << "# " << t.domain_tag << "\n";
    for (const auto& [src, img] : t.forward)
        os << to_string(src) << '\t' << to_string(img) << '\n';
}

template <typename T, typename Parse>
std::vector<std::pair<T, T>> read_pairs_impl(std::istream& is, Parse parse) {
    std::vector<std::pair<T, T>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) +
                                 ": expected two tab-separated columns",
                             lineno);
        out.emplace_back(parse(line.substr(0, tab)), parse(line.substr(tab + 1)));
    }
    return out;
}

} // namespace

void export_table(std::ostream& os, const BijectionTable<Permutation>& t) {
    export_table_impl(os, t);
}
void export_table(std::ostream& os, const BijectionTable<ZeroWord>& t) {
    export_table_impl(os, t);
}

std::vector<std::pair<Permutation, Permutation>> read_permutation_pairs(std::istream& is) {
    return read_pairs_impl<Permutation>(is, parse_permutation);
}

std::vector<std::pair<ZeroWord, ZeroWord>> read_zero_word_pairs(std::istream& is) {
    return read_pairs_impl<ZeroWord>(is, parse_zero_word);
}

void register_dw_pairs(DwOracle& oracle,
                       const std::vector<std::pair<Permutation, Permutation>>& pairs) {
    std::map<int, std::vector<std::pair<Permutation, Permutation>>> by_order;
    for (const auto& pr : pairs) by_order[pr.first.order()].push_back(pr);
    for (const auto& [m, group] : by_order) oracle.register_table(m, group);
}

void register_f3_pairs(WordOracle& oracle,
                       const std::vector<std::pair<ZeroWord, ZeroWord>>& pairs) {
    std::map<ShuffleClassId, std::vector<std::pair<ZeroWord, ZeroWord>>> by_class;
    for (const auto& pr : pairs)
        by_class[ShuffleClassId{pr.first.length(), pos_word(pr.first)}].push_back(pr);
    for (const auto& [id, group] : by_class) oracle.register_table(id, group);
}

BijectionTable<Permutation> validate_sn_table(
    int n, const std::vector<std::pair<Permutation, Permutation>>& pairs,
    const StatTransportSpec<Permutation>& spec, const std::string& tag) {
    BijectionTable<Permutation> t;
    t.domain_tag = tag;
    for (const auto& [src, img] : pairs) {
        if (src.order() != n || img.order() != n)
            throw PreconditionError(tag + ": pair of wrong order");
        const std::string skey =
            (spec.grouping_key ? spec.grouping_key(src) + "|" : std::string()) +
            spec.source_stat(src);
        const std::string tkey =
            (spec.grouping_key ? spec.grouping_key(img) + "|" : std::string()) +
            spec.target_stat(img);
        if (skey != tkey)
            throw PreconditionError(tag + ": transport violated at " + to_string(src));
        if (!t.forward.emplace(src, img).second || !t.backward.emplace(img, src).second)
            throw PreconditionError(tag + ": duplicate entry at " + to_string(src));
    }
    if (t.forward.size() != small_factorial(n))
        throw PreconditionError(tag + ": table does not cover all of S_" + std::to_string(n));
    return t;
}

std::string phi_source_key(const Permutation& p) {
    return std::to_string(fix(p)) + "|" + to_string(dez_set(p)) + "|" +
           to_string(fixed_decomposition(p).derangement_part);
}

std::string phi_target_key(const Permutation& p) {
    return std::to_string(fix(p)) + "|" + to_string(des_set(p)) + "|" +
           to_string(fixed_decomposition(p).derangement_part);
}

std::string chz_group_key(const Permutation& p) {
    return std::to_string(fix(p)) + "|" + to_string(fixed_decomposition(p).derangement_part);
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<Permutation> out;
    out.reserve(small_factorial(n));
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

} // namespace permstat
