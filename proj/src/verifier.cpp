#include "permstat/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permstat {

namespace {

unsigned long long ull_factorial(int n) {
    unsigned long long out = 1;
    for (int i = 2; i <= n; ++i) out *= static_cast<unsigned long long>(i);
    return out;
}

std::atomic<int> g_limit{0};

int initial_limit() {
    if (const char* env = std::getenv("PERMSTAT_MAX_N")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 8;
}

void check_budget(int n) {
    const int limit = enumeration_limit();
    if (n > limit) throw BudgetExceeded(n, ull_factorial(n), limit);
}

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// Walks S_0 .. S_{n_max} in lexicographic order and records the first
// failure, which is therefore the minimal counterexample.  The check
// returns a description of what went wrong, or nothing.
template <typename Fn>
VerificationReport pointwise_claim(std::string claim, int n_max, Fn&& check) {
    Timer timer;
    VerificationReport r;
    r.claim = std::move(claim);
    r.n_hi = n_max;
    try {
        for (int n = 0; n <= n_max && r.status == Status::pass; ++n) {
            for_each_permutation(n, [&](const Permutation& p) {
                if (r.status == Status::fail) return;
                if (std::optional<std::string> err = check(p)) {
                    r.status = Status::fail;
                    r.witness = "n=" + std::to_string(n) + " sigma=[" + to_string(p) +
                                "] " + *err;
                }
            });
        }
    } catch (const std::exception& e) {
        r.status = Status::fail;
        r.witness = e.what();
    }
    r.ms = timer.ms();
    return r;
}

// Same walk, but divergences are tallied instead of gating: used for the
// commutation checks whose truth is not asserted for matched oracles.
template <typename Fn>
VerificationReport informative_claim(std::string claim, int n_max, Fn&& check) {
    Timer timer;
    VerificationReport r;
    r.claim = std::move(claim);
    r.n_hi = n_max;
    r.binding = false;
    r.status = Status::informative;
    unsigned long long total = 0, mismatched = 0;
    std::string first;
    try {
        for (int n = 0; n <= n_max; ++n) {
            for_each_permutation(n, [&](const Permutation& p) {
                ++total;
                if (std::optional<std::string> err = check(p)) {
                    if (mismatched == 0)
                        first = "n=" + std::to_string(n) + " sigma=[" + to_string(p) +
                                "] " + *err;
                    ++mismatched;
                }
            });
        }
        if (mismatched == 0) {
            r.detail = "holds on all " + std::to_string(total) + " elements";
        } else {
            r.detail = "diverges on " + std::to_string(mismatched) + " of " +
                       std::to_string(total) + " elements; first: " + first;
        }
    } catch (const std::exception& e) {
        r.detail = std::string("aborted: ") + e.what();
    }
    r.ms = timer.ms();
    return r;
}

std::string set_str(const PositionSet& s) { return to_string(s); }

std::string word_str(const Permutation& p) { return "[" + to_string(p) + "]"; }

std::string der_str(const Permutation& p) {
    return word_str(fixed_decomposition(p).derangement_part);
}

std::string desar_str(const Permutation& p) {
    return word_str(pixed_decomposition(p).desarrangement_part);
}

// First key whose count differs between two exact distributions.
std::string first_difference(const Distribution& a, const Distribution& b) {
    auto ia = a.counts.begin();
    auto ib = b.counts.begin();
    while (ia != a.counts.end() || ib != b.counts.end()) {
        if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
            return "key=" + ia->first + " counts=" + std::to_string(ia->second) + " vs 0";
        }
        if (ia == a.counts.end() || ib->first < ia->first) {
            return "key=" + ib->first + " counts=0 vs " + std::to_string(ib->second);
        }
        if (ia->second != ib->second)
            return "key=" + ia->first + " counts=" + std::to_string(ia->second) + " vs " +
                   std::to_string(ib->second);
        ++ia;
        ++ib;
    }
    return "identical";
}

} // namespace

int enumeration_limit() {
    int v = g_limit.load();
    if (v == 0) {
        v = initial_limit();
        g_limit.store(v);
    }
    return v;
}

void set_enumeration_limit(int n) { g_limit.store(n); }

Distribution distribution_serial(int n, const StatProfile& profile) {
    check_budget(n);
    Distribution out;
    out.domain_size = ull_factorial(n);
    for_each_permutation(n, [&](const Permutation& p) { ++out.counts[profile.key(p)]; });
    return out;
}

Distribution distribution(int n, const StatProfile& profile) {
    check_budget(n);
    Distribution out;
    out.domain_size = ull_factorial(n);
    if (n == 0) {
        ++out.counts[profile.key(Permutation())];
        return out;
    }
    // Partition on the first letter; each worker owns one slot, and the
    // ordered merge below is a commutative fold, so counts are identical
    // for any thread count.
    std::vector<std::map<std::string, unsigned long long>> partial(static_cast<size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int f = 1; f <= n; ++f) {
        auto& local = partial[static_cast<size_t>(f) - 1];
        Word w;
        w.reserve(static_cast<size_t>(n));
        w.push_back(f);
        for (int v = 1; v <= n; ++v)
            if (v != f) w.push_back(v);
        do {
            ++local[profile.key(Permutation(w))];
        } while (std::next_permutation(w.begin() + 1, w.end()));
    }
    for (const auto& local : partial)
        for (const auto& [key, count] : local) out.counts[key] += count;
    return out;
}

std::vector<StatProfile> theorem_1_2_group(int group, const StatSet& stats) {
    const StatSet st = stats;
    auto num = [](int v) { return std::to_string(v); };
    switch (group) {
        case 1:
            return {
                {"(fix,maj)", [st, num](const Permutation& p) { return num(fix(p)) + "|" + num(st.maj(p)); }},
                {"(fix,maf)", [st, num](const Permutation& p) { return num(fix(p)) + "|" + num(st.maf(p)); }},
                {"(fix,maz)", [st, num](const Permutation& p) { return num(fix(p)) + "|" + num(st.maz(p)); }},
                {"(pix,mag)", [st, num](const Permutation& p) { return num(pix(p)) + "|" + num(st.mag(p)); }},
                {"(pix,inv)", [num](const Permutation& p) { return num(pix(p)) + "|" + num(inv(p)); }},
                {"(pix,imaj)", [st, num](const Permutation& p) { return num(pix(p)) + "|" + num(st.imaj(p)); }},
            };
        case 2:
            return {
                {"(FIX,maf)", [st, num](const Permutation& p) { return set_str(fix_set(p)) + "|" + num(st.maf(p)); }},
                {"(PIX,mag)", [st, num](const Permutation& p) { return set_str(pix_set(p)) + "|" + num(st.mag(p)); }},
                {"(PIX,inv)", [num](const Permutation& p) { return set_str(pix_set(p)) + "|" + num(inv(p)); }},
            };
        case 3:
            return {
                {"(fix,DEZ)", [num](const Permutation& p) { return num(fix(p)) + "|" + set_str(dez_set(p)); }},
                {"(fix,DES)", [num](const Permutation& p) { return num(fix(p)) + "|" + set_str(des_set(p)); }},
                {"(pix,IDES)", [num](const Permutation& p) { return num(pix(p)) + "|" + set_str(ides_set(p)); }},
            };
        case 4:
            return {
                {"(FIX,DEZ)", [](const Permutation& p) { return set_str(fix_set(p)) + "|" + set_str(dez_set(p)); }},
                {"(PIX,IDES)", [](const Permutation& p) { return set_str(pix_set(p)) + "|" + set_str(ides_set(p)); }},
            };
        default:
            throw PreconditionError("theorem_1_2_group: group must be 1..4");
    }
}

std::vector<VerificationReport> check_theorem_1_1(const SuiteOptions& opts) {
    std::vector<VerificationReport> out;
    std::vector<ExactPolynomial> a_t = gf_coefficients_t(opts.n_max);

    {
        Timer timer;
        VerificationReport r;
        r.claim = "Thm1.1(t)";
        r.n_hi = opts.n_max;
        for (int n = 0; n <= opts.n_max && r.status == Status::pass; ++n) {
            const ExactPolynomial sum = combinatorial_gf(n, GfMode::triple, opts.stats);
            if (!(sum == a_t[static_cast<size_t>(n)])) {
                r.status = Status::fail;
                r.witness = "n=" + std::to_string(n) + " series=[" +
                            a_t[static_cast<size_t>(n)].str() + "] sum=[" + sum.str() + "]";
            }
        }
        r.ms = timer.ms();
        out.push_back(std::move(r));
    }

    std::vector<ExactPolynomial> a_q;
    a_q.reserve(a_t.size());
    for (const auto& a : a_t) a_q.push_back(a.substitute_t_one());

    {
        Timer timer;
        VerificationReport r;
        r.claim = "Thm1.1(q)";
        r.n_hi = opts.n_max;
        for (int n = 0; n <= opts.n_max && r.status == Status::pass; ++n) {
            const ExactPolynomial sum = combinatorial_gf(n, GfMode::pair, opts.stats);
            if (!(sum == a_q[static_cast<size_t>(n)])) {
                r.status = Status::fail;
                r.witness = "n=" + std::to_string(n) + " series=[" +
                            a_q[static_cast<size_t>(n)].str() + "] sum=[" + sum.str() + "]";
            }
        }
        r.ms = timer.ms();
        out.push_back(std::move(r));
    }

    {
        Timer timer;
        VerificationReport r;
        r.claim = "Thm1.1(eval)";
        r.n_hi = opts.n_max;
        const EvalCertificate cert = certify_q_generating_function(opts.n_max, a_q);
        r.detail = "grid=" + std::to_string(cert.q_points) + "x" +
                   std::to_string(cert.y_points);
        if (!cert.ok) {
            r.status = Status::fail;
            r.witness = cert.witness;
        }
        r.ms = timer.ms();
        out.push_back(std::move(r));
    }

    return out;
}

std::vector<VerificationReport> check_theorem_1_2(const SuiteOptions& opts) {
    std::vector<VerificationReport> out;
    for (int g = 1; g <= 4; ++g) {
        Timer timer;
        VerificationReport r;
        r.claim = "Thm1.2(" + std::to_string(g) + ")";
        r.n_hi = opts.n_max;
        const std::vector<StatProfile> profiles = theorem_1_2_group(g, opts.stats);
        for (int n = 0; n <= opts.n_max && r.status == Status::pass; ++n) {
            const Distribution anchor = distribution(n, profiles.front());
            for (size_t i = 1; i < profiles.size(); ++i) {
                const Distribution d = distribution(n, profiles[i]);
                if (d.counts != anchor.counts) {
                    r.status = Status::fail;
                    r.witness = "n=" + std::to_string(n) + " " + profiles.front().name +
                                " vs " + profiles[i].name + " " +
                                first_difference(anchor, d);
                    break;
                }
            }
        }
        r.ms = timer.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> check_theorem_1_3(const SuiteOptions& opts) {
    std::vector<VerificationReport> out;
    const StatSet st = opts.stats;
    auto num = [](int v) { return std::to_string(v); };

    const std::vector<std::pair<std::string, std::vector<StatProfile>>> groups = {
        {"Thm1.3(1)",
         {{"(fix,maf,Der)", [st, num](const Permutation& p) { return num(fix(p)) + "|" + num(st.maf(p)) + "|" + der_str(p); }},
          {"(fix,maz,Der)", [st, num](const Permutation& p) { return num(fix(p)) + "|" + num(st.maz(p)) + "|" + der_str(p); }}}},
        {"Thm1.3(2)",
         {{"(pix,mag,Desar)", [st, num](const Permutation& p) { return num(pix(p)) + "|" + num(st.mag(p)) + "|" + desar_str(p); }},
          {"(pix,imaj,Desar)", [st, num](const Permutation& p) { return num(pix(p)) + "|" + num(st.imaj(p)) + "|" + desar_str(p); }}}},
    };
    for (const auto& [claim, profiles] : groups) {
        Timer timer;
        VerificationReport r;
        r.claim = claim;
        r.n_hi = opts.n_max;
        for (int n = 0; n <= opts.n_max && r.status == Status::pass; ++n) {
            const Distribution a = distribution(n, profiles[0]);
            const Distribution b = distribution(n, profiles[1]);
            if (a.counts != b.counts) {
                r.status = Status::fail;
                r.witness = "n=" + std::to_string(n) + " " + profiles[0].name + " vs " +
                            profiles[1].name + " " + first_difference(a, b);
            }
        }
        r.ms = timer.ms();
        out.push_back(std::move(r));
    }

    WordOracle local_words(st);
    WordOracle& words = opts.f3_words ? *opts.f3_words : local_words;

    out.push_back(pointwise_claim(
        "Thm1.3(f3)", opts.n_max, [&](const Permutation& p) -> std::optional<std::string> {
            const Permutation img = f3(p, words);
            if (fix(p) != fix(img) || st.maz(p) != st.maf(img) ||
                !(fixed_decomposition(p).derangement_part ==
                  fixed_decomposition(img).derangement_part))
                return "transport (fix,maz,Der)->(fix,maf,Der) broken: image=[" +
                       to_string(img) + "]";
            return std::nullopt;
        }));

    out.push_back(pointwise_claim(
        "Thm1.3(f3p)", opts.n_max, [&](const Permutation& p) -> std::optional<std::string> {
            const Permutation img = f3_prime(p, words);
            if (pix(p) != pix(img) || st.imaj(p) != st.mag(img) ||
                !(pixed_decomposition(p).desarrangement_part ==
                  pixed_decomposition(img).desarrangement_part))
                return "transport (pix,imaj,Desar)->(pix,mag,Desar) broken: image=[" +
                       to_string(img) + "]";
            return std::nullopt;
        }));

    return out;
}

VerificationReport check_dw_oracle(int n_max) {
    Timer timer;
    VerificationReport r;
    r.claim = "DW-oracle";
    r.n_hi = n_max;
    try {
        unsigned long long pairs = 0;
        for (int m = 0; m <= n_max; ++m) {
            DwOracle oracle;
            const auto& t = oracle.table(m);
            pairs += t.size();
            for (const auto& [src, img] : t.forward)
                if (des_set(src) != ides_set(img))
                    throw std::logic_error("transport broken at [" + to_string(src) + "]");
        }
        r.detail = std::to_string(pairs) + " pairs matched";
    } catch (const std::exception& e) {
        r.status = Status::fail;
        r.witness = e.what();
    }
    r.ms = timer.ms();
    return r;
}

VerificationReport check_word_oracle(int n_max, const StatSet& stats) {
    Timer timer;
    VerificationReport r;
    r.claim = "F3-word-oracle";
    r.n_hi = n_max;
    // Statistics of a shuffle depend on the positive word only through its
    // relative order, so reduced representatives v in S_m cover every
    // class with distinct positive letters.
    std::vector<std::vector<Permutation>> sm(static_cast<size_t>(n_max) + 1);
    for (int m = 0; m <= n_max; ++m) sm[static_cast<size_t>(m)] = symmetric_group(m);
    unsigned long long classes = 0;
    std::string first_failure;
    for (int n = 0; n <= n_max && first_failure.empty(); ++n) {
        for (int m = 0; m <= n && first_failure.empty(); ++m) {
            const auto& reps = sm[static_cast<size_t>(m)];
            const long count = static_cast<long>(reps.size());
            std::optional<std::pair<long, std::string>> best;
#ifdef _OPENMP
#pragma omp parallel
#endif
            {
                std::optional<std::pair<long, std::string>> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64) nowait
#endif
                for (long i = 0; i < count; ++i) {
                    try {
                        WordOracle oracle(stats);
                        (void)oracle.table(
                            ShuffleClassId{n, reps[static_cast<size_t>(i)].word()});
                    } catch (const std::exception& e) {
                        if (!local || i < local->first)
                            local = std::pair<long, std::string>(i, e.what());
                    }
                }
#ifdef _OPENMP
#pragma omp critical
#endif
                if (local && (!best || local->first < best->first)) best = local;
            }
            classes += static_cast<unsigned long long>(count);
            if (best) first_failure = best->second;
        }
    }
    if (!first_failure.empty()) {
        r.status = Status::fail;
        r.witness = first_failure;
    } else {
        r.detail = std::to_string(classes) + " classes matched";
    }
    r.ms = timer.ms();
    return r;
}

VerificationReport check_phi_oracle(int n_max, const StatSet& stats) {
    Timer timer;
    VerificationReport r;
    r.claim = "Phi-oracle";
    r.n_hi = n_max;
    try {
        for (int n = 0; n <= n_max; ++n) {
            const auto t = phi_oracle(n, stats);
            for (const auto& [src, img] : t.forward)
                if (phi_source_key(src) != phi_target_key(img))
                    throw std::logic_error("transport broken at [" + to_string(src) + "]");
        }
    } catch (const std::exception& e) {
        r.status = Status::fail;
        r.witness = e.what();
    }
    r.ms = timer.ms();
    return r;
}

VerificationReport check_chz_oracle(int n_max, const StatSet& stats) {
    Timer timer;
    VerificationReport r;
    r.claim = "CHZ-oracle";
    r.n_hi = n_max;
    try {
        for (int n = 0; n <= n_max; ++n) {
            const auto t = chz_oracle(n, stats);
            for (const auto& [src, img] : t.forward) {
                const bool ok = chz_group_key(src) == chz_group_key(img) &&
                                stats.maf(src) == stats.maj(img);
                if (!ok)
                    throw std::logic_error("transport broken at [" + to_string(src) + "]");
            }
        }
    } catch (const std::exception& e) {
        r.status = Status::fail;
        r.witness = e.what();
    }
    r.ms = timer.ms();
    return r;
}

VerificationReport check_derangement_counts() {
    Timer timer;
    VerificationReport r;
    r.claim = "Dn-Kn-counts";
    r.n_hi = 9;
    static const unsigned long long expected[] = {1,    0,    1,     2,     9,
                                                  44,   265,  1854,  14833, 133496};
    for (int n = 0; n <= 9 && r.status == Status::pass; ++n) {
        unsigned long long d_count = 0, k_count = 0;
        for_each_derangement(n, [&](const Permutation&) { ++d_count; });
        for_each_desarrangement(n, [&](const Permutation&) { ++k_count; });
        if (d_count != expected[n] || k_count != expected[n]) {
            r.status = Status::fail;
            r.witness = "n=" + std::to_string(n) + " #D=" + std::to_string(d_count) +
                        " #K=" + std::to_string(k_count) +
                        " expected=" + std::to_string(expected[n]);
        }
    }
    r.ms = timer.ms();
    return r;
}

namespace {

VerificationReport example_diagram_claim(DwOracle& dw, WordOracle& words) {
    Timer timer;
    VerificationReport r;
    r.claim = "example-diagram";
    r.n_lo = r.n_hi = 7;
    const Permutation bottom_left = parse_permutation("1 7 3 5 2 6 4");
    const Permutation bottom_right = parse_permutation("1 3 6 5 4 7 2");
    const Permutation top_left = parse_permutation("7 4 3 1 5 6 2");
    const Permutation top_right = parse_permutation("3 5 6 4 2 7 1");
    const ShuffleClassId left_class{7, parse_permutation("4 3 1 2").word()};
    const ShuffleClassId right_class{7, parse_permutation("4 2 1 3").word()};

    const bool binding = dw.has_plugin(4) && words.has_plugin(left_class) &&
                         words.has_plugin(right_class);
    r.binding = binding;
    try {
        std::vector<std::string> notes;
        const Permutation f3_img = f3(bottom_left, words);
        const Permutation dw_bottom = dw_loc(bottom_left, dw);
        const Permutation dw_top = dw_loc(f3_img, dw);
        const Permutation f3p_img = f3_prime(dw_bottom, words);
        if (!(f3_img == top_left)) notes.push_back("left edge gives [" + to_string(f3_img) + "]");
        if (!(dw_bottom == bottom_right))
            notes.push_back("bottom edge gives [" + to_string(dw_bottom) + "]");
        if (!(dw_top == top_right)) notes.push_back("top edge gives [" + to_string(dw_top) + "]");
        if (!(f3p_img == top_right))
            notes.push_back("right edge gives [" + to_string(f3p_img) + "]");
        if (!(dw_top == f3p_img)) notes.push_back("square does not commute");
        if (notes.empty()) {
            r.status = binding ? Status::pass : Status::informative;
            r.detail = "all four vectors and the square reproduce";
        } else {
            r.status = binding ? Status::fail : Status::informative;
            std::string joined;
            for (const auto& s : notes) joined += (joined.empty() ? "" : "; ") + s;
            (binding ? r.witness : r.detail) = joined;
        }
    } catch (const std::exception& e) {
        r.status = binding ? Status::fail : Status::informative;
        (binding ? r.witness : r.detail) = e.what();
    }
    r.ms = timer.ms();
    return r;
}

} // namespace

std::vector<VerificationReport> check_propositions(const SuiteOptions& opts) {
    std::vector<VerificationReport> out;
    const StatSet st = opts.stats;
    DwOracle local_dw;
    DwOracle& dw = opts.dw ? *opts.dw : local_dw;
    WordOracle local_words(st);
    WordOracle& words = opts.f3_words ? *opts.f3_words : local_words;

    {
        // F2: maj -> inv with IDES preserved, plus bijectivity per order.
        Timer timer;
        VerificationReport r;
        r.claim = "Thm2.5";
        r.n_hi = opts.n_max;
        for (int n = 0; n <= opts.n_max && r.status == Status::pass; ++n) {
            std::set<Permutation> images;
            for_each_permutation(n, [&](const Permutation& p) {
                if (r.status == Status::fail) return;
                const Permutation img = f2(p);
                images.insert(img);
                if (inv(img) != st.maj(p) || !(ides_set(img) == ides_set(p))) {
                    r.status = Status::fail;
                    r.witness = "n=" + std::to_string(n) + " sigma=[" + to_string(p) +
                                "] image=[" + to_string(img) + "]";
                }
            });
            if (r.status == Status::pass && images.size() != ull_factorial(n)) {
                r.status = Status::fail;
                r.witness = "n=" + std::to_string(n) + " image has " +
                            std::to_string(images.size()) + " elements";
            }
        }
        r.ms = timer.ms();
        out.push_back(std::move(r));
    }

    out.push_back(pointwise_claim(
        "F2prime", opts.n_max, [&](const Permutation& p) -> std::optional<std::string> {
            const Permutation img = f2_prime(p);
            if (inv(img) != st.imaj(p) || !(des_set(img) == des_set(p)))
                return "imaj->inv with DES preserved broken: image=[" + to_string(img) + "]";
            return std::nullopt;
        }));

    out.push_back(pointwise_claim(
        "Prop2.6", opts.n_max, [&](const Permutation& p) -> std::optional<std::string> {
            const Permutation rho = f2_loc(p);
            if (!(pix_set(p) == pix_set(rho)) || st.mag(p) != inv(rho))
                return "(PIX,mag)->(PIX,inv) broken: image=[" + to_string(rho) + "]";
            return std::nullopt;
        }));

    out.push_back(pointwise_claim(
        "Prop2.8", opts.n_max, [&](const Permutation& rho) -> std::optional<std::string> {
            const Permutation xi = f2_prime(rho);
            if (pix(xi) != pix(rho) || inv(xi) != st.imaj(rho))
                return "(pix,inv) of image != (pix,imaj): image=[" + to_string(xi) + "]";
            return std::nullopt;
        }));

    out.push_back(pointwise_claim(
        "Prop2.1", opts.n_max, [&](const Permutation& tau) -> std::optional<std::string> {
            const Permutation sigma = dw_loc(tau, dw);
            const FixedDecomposition fd = fixed_decomposition(tau);
            const PixedDecomposition pd = pixed_decomposition(sigma);
            if (!(fd.fix_set == pd.pix_set) ||
                !(des_set(fd.derangement_part) == ides_set(pd.desarrangement_part)) ||
                st.maf(tau) != st.mag(sigma))
                return "FIX/DES-of-part/maf transport broken: image=[" + to_string(sigma) + "]";
            return std::nullopt;
        }));

    out.push_back(pointwise_claim(
        "Prop2.3", opts.n_max, [&](const Permutation& tau) -> std::optional<std::string> {
            const Permutation sigma = dw_loc(tau, dw);
            if (!(fix_set(tau) == pix_set(sigma)) || !(dez_set(tau) == ides_set(sigma)))
                return "(FIX,DEZ)->(PIX,IDES) broken: image=[" + to_string(sigma) + "]";
            if (fix(tau) != pix(sigma) || st.maz(tau) != st.imaj(sigma))
                return "(fix,maz)->(pix,imaj) broken: image=[" + to_string(sigma) + "]";
            return std::nullopt;
        }));

    out.push_back(check_phi_oracle(opts.n_max, st));
    out.push_back(check_chz_oracle(opts.n_max, st));
    out.push_back(check_dw_oracle(opts.n_max));
    out.push_back(check_word_oracle(opts.n_max, st));

    out.push_back(pointwise_claim(
        "ZDer-transport", opts.n_max, [&](const Permutation& p) -> std::optional<std::string> {
            const ZeroWord w = zder(p);
            if (!(fix_set(p) == zero_set(w)) ||
                !(fixed_decomposition(p).derangement_part.word() == pos_word(w)) ||
                st.maf(p) != st.mafz(w) || !(dez_set(p) == des_set(w)))
                return "(FIX,Der,maf,DEZ) != (Zero,Pos,mafz,DES) of encoding [" +
                       to_string(w) + "]";
            if (!(zder_inverse(w) == p)) return "round trip broken";
            return std::nullopt;
        }));

    out.push_back(pointwise_claim(
        "ZDesar-transport", opts.n_max, [&](const Permutation& p) -> std::optional<std::string> {
            const ZeroWord w = zdesar(p);
            if (!(pix_set(p) == zero_set(w)) ||
                !(inverse(pixed_decomposition(p).desarrangement_part).word() == pos_word(w)) ||
                st.mag(p) != st.mafz(w) || !(ides_set(p) == des_set(w)))
                return "(PIX,Desar,mag,IDES) != (Zero,Pos,mafz,DES) of encoding [" +
                       to_string(w) + "]";
            if (!(zdesar_inverse(w) == p)) return "round trip broken";
            return std::nullopt;
        }));

    out.push_back(pointwise_claim(
        "dw-routes", opts.n_max, [&](const Permutation& p) -> std::optional<std::string> {
            const ZeroWord w = zder(p);  // ranges over all words with derangement Pos
            const ZeroWord direct = dw_word(w, dw);
            const ZeroWord lifted = zdesar(dw_loc(zder_inverse(w), dw));
            if (!(direct == lifted))
                return "wordwise [" + to_string(direct) + "] vs lifted [" +
                       to_string(lifted) + "]";
            return std::nullopt;
        }));

    out.push_back(informative_claim(
        "dw-word-commute", opts.n_max, [&](const Permutation& p) -> std::optional<std::string> {
            const ZeroWord w = zder(p);
            const ShuffleClassId src_class{w.length(), pos_word(w)};
            const ZeroWord a = dw_word(words.table(src_class).apply(w), dw);
            const ZeroWord moved = dw_word(w, dw);
            const ShuffleClassId dst_class{moved.length(), pos_word(moved)};
            const ZeroWord b = words.table(dst_class).apply(moved);
            if (!(a == b))
                return "dw then map [" + to_string(b) + "] vs map then dw [" + to_string(a) + "]";
            return std::nullopt;
        }));

    out.push_back(informative_claim(
        "DWloc-F3-square", opts.n_max, [&](const Permutation& p) -> std::optional<std::string> {
            const Permutation a = dw_loc(f3(p, words), dw);
            const Permutation b = f3_prime(dw_loc(p, dw), words);
            if (!(a == b))
                return "[" + to_string(a) + "] vs [" + to_string(b) + "]";
            return std::nullopt;
        }));

    out.push_back(check_derangement_counts());
    out.push_back(example_diagram_claim(dw, words));
    return out;
}

bool all_binding_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.binding && r.status != Status::pass) return false;
    return true;
}

namespace {

std::string status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::informative: return "informative";
    }
    return "?";
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? '\'' : c;
    out += '"';
    return out;
}

} // namespace

std::string machine_record(const VerificationReport& r) {
    return "claim=" + r.claim + " range=" + std::to_string(r.n_lo) + ".." +
           std::to_string(r.n_hi) + " status=" + status_str(r.status) +
           " binding=" + (r.binding ? "yes" : "no") +
           " witness=" + quoted(r.witness.empty() ? "-" : r.witness) +
           " detail=" + quoted(r.detail.empty() ? "-" : r.detail);
}

std::string human_line(const VerificationReport& r) {
    std::ostringstream os;
    const char* badge = r.status == Status::pass          ? "[PASS]"
                        : r.status == Status::fail        ? "[FAIL]"
                                                          : "[INFO]";
    os << badge << ' ' << r.claim;
    for (size_t i = r.claim.size(); i < 20; ++i) os << ' ';
    os << " n=" << r.n_lo << ".." << r.n_hi;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "  (" << r.ms << " ms)";
    if (!r.witness.empty()) os << "  " << r.witness;
    if (!r.detail.empty()) os << "  " << r.detail;
    return os.str();
}

} // namespace permstat
